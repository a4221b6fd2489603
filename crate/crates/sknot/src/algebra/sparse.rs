//! Incremental row echelon forms over ℚ (integer rows kept primitive) and over 𝐅₂.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntRow = BTreeMap<usize, BigInt>;

#[derive(Clone, Debug, Default)]
pub struct IntEchelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the stored pivots; returns the remainder (possibly empty).
    pub fn reduce(&self, mut row: IntRow) -> IntRow {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, a)) = row.iter().next() else { return row };
            let a = a.clone();
            let Some(piv) = self.pivots.get(&lead) else { return row };
            let p = &piv[&lead];
            let g = a.gcd(p);
            let (mp, ma) = (p / &g, &a / &g);
            let mut out = IntRow::new();
            for (c, x) in &row {
                out.insert(*c, x * &mp);
            }
            for (c, y) in piv {
                let e = out.entry(*c).or_insert_with(BigInt::zero);
                *e -= y * &ma;
            }
            out.retain(|_, v| !v.is_zero());
            row = primitive(out);
        }
    }

    /// Insert a row; returns true if the rank grew.
    pub fn insert(&mut self, row: IntRow) -> bool {
        let r = self.reduce(row);
        match r.keys().next().copied() {
            Some(lead) => {
                self.pivots.insert(lead, r);
                true
            }
            None => false,
        }
    }
}

fn primitive(mut row: IntRow) -> IntRow {
    let g = row.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
    if let Some((_, x)) = row.iter().next() {
        if x.is_negative() {
            for v in row.values_mut() {
                *v = -&*v;
            }
        }
    }
    row
}

#[derive(Clone, Debug, Default)]
pub struct F2Echelon {
    width: usize,
    pivots: BTreeMap<usize, Vec<u64>>,
}

impl F2Echelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn insert_cols(&mut self, cols: &[usize]) -> bool {
        let mut row = vec![0u64; self.width.div_ceil(64).max(1)];
        for &c in cols {
            row[c / 64] ^= 1 << (c % 64);
        }
        self.insert(row)
    }

    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        loop {
            let Some(lead) = lowest_bit(&row) else { return false };
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over ℚ of integer rows.
pub fn rank_int(rows: impl IntoIterator<Item = IntRow>) -> usize {
    let mut e = IntEchelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
