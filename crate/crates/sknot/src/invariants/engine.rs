//! Incremental column reduction over ℚ, ℚ(T) or 𝐅₂(T).
//!
//! Columns are inserted one at a time; each is reduced against the stored
//! pivots (leading index = lowest row index below the fence). Rows at or past
//! the fence are carried along but never pivoted on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::LaurentPoly;

pub trait Coef: Clone {
    fn vanishes(&self) -> bool;
    fn times(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn normalize(v: &mut BTreeMap<usize, Self>);
}

impl Coef for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn normalize(v: &mut BTreeMap<usize, Self>) {
        let g = v.values().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !Zero::is_zero(&g) && !g.is_one() {
            for x in v.values_mut() {
                *x = &*x / &g;
            }
        }
    }
}

/// Laurent polynomial coefficients, integer or mod 2.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<const CHAR2: bool>(pub LaurentPoly);

impl<const CHAR2: bool> Coef for Poly<CHAR2> {
    fn vanishes(&self) -> bool {
        self.0.is_zero()
    }
    fn times(&self, o: &Self) -> Self {
        let p = &self.0 * &o.0;
        Poly(if CHAR2 { p.reduce_char2() } else { p })
    }
    fn minus(&self, o: &Self) -> Self {
        let p = &self.0 - &o.0;
        Poly(if CHAR2 { p.reduce_char2() } else { p })
    }
    fn negated(&self) -> Self {
        Poly(if CHAR2 { self.0.clone() } else { -&self.0 })
    }
    fn normalize(v: &mut BTreeMap<usize, Self>) {
        let low = v.values().filter_map(|p| p.0.min_exp().cloned()).min();
        let g = if CHAR2 {
            BigInt::one()
        } else {
            v.values().fold(BigInt::zero(), |g, p| g.gcd(&p.0.content()))
        };
        let Some(low) = low else { return };
        for p in v.values_mut() {
            let s = p.0.shift(&-&low);
            p.0 = if g.is_one() || Zero::is_zero(&g) {
                s
            } else {
                LaurentPoly::from_terms(s.terms().map(|(e, c)| (e.clone(), c / &g)))
            };
        }
    }
}

pub type Column<C> = BTreeMap<usize, C>;

pub struct Reducer<C: Coef> {
    fence: usize,
    pivots: BTreeMap<usize, Column<C>>,
}

pub enum Inserted {
    Pivot,
    /// The column became zero below the fence; `beyond` says whether anything
    /// remained at or past the fence.
    Kernel {
        beyond: bool,
    },
}

impl<C: Coef> Reducer<C> {
    pub fn new(fence: usize) -> Self {
        Self {
            fence,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, mut v: Column<C>) -> Column<C> {
        v.retain(|_, x| !x.vanishes());
        loop {
            let Some((&lead, a)) = v.iter().next() else { return v };
            if lead >= self.fence {
                return v;
            }
            let Some(p) = self.pivots.get(&lead) else { return v };
            let a = a.clone();
            let pl = p[&lead].clone();
            let mut out: Column<C> = BTreeMap::new();
            for (&i, x) in &v {
                out.insert(i, x.times(&pl));
            }
            for (&i, y) in p {
                let cur = out.remove(&i);
                let t = y.times(&a);
                let val = match cur {
                    Some(c) => c.minus(&t),
                    None => t.negated(),
                };
                if !val.vanishes() {
                    out.insert(i, val);
                }
            }
            out.retain(|_, x| !x.vanishes());
            C::normalize(&mut out);
            v = out;
        }
    }

    pub fn insert(&mut self, v: Column<C>) -> Inserted {
        let r = self.reduce(v);
        match r.keys().next().copied() {
            Some(lead) if lead < self.fence => {
                self.pivots.insert(lead, r);
                Inserted::Pivot
            }
            Some(_) => Inserted::Kernel { beyond: true },
            None => Inserted::Kernel { beyond: false },
        }
    }

    /// Whether `v` lies in the span of the inserted columns (below the fence).
    pub fn in_span(&self, v: Column<C>) -> bool {
        self.reduce(v).keys().next().map_or(true, |&l| l >= self.fence)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[(usize, i64)]) -> Column<BigInt> {
        v.iter().map(|&(i, x)| (i, BigInt::from(x))).collect()
    }

    #[test]
    fn kernel_detection() {
        // fence 2: rows 0,1 are constraints, row 2 is the witness functional
        let mut r = Reducer::new(2);
        assert!(matches!(r.insert(col(&[(0, 1), (2, 1)])), Inserted::Pivot));
        assert!(matches!(r.insert(col(&[(0, 2), (2, 2)])), Inserted::Kernel { beyond: false }));
        assert!(matches!(r.insert(col(&[(0, 1), (2, 3)])), Inserted::Kernel { beyond: true }));
        assert!(r.in_span(col(&[(0, 5)])));
        assert!(!r.in_span(col(&[(1, 5)])));
    }

    #[test]
    fn polynomial_columns() {
        let e = LaurentPoly::eps();
        let mut r: Reducer<Poly<false>> = Reducer::new(1);
        let mut a = Column::new();
        a.insert(0, Poly(e.clone()));
        r.insert(a);
        let mut b = Column::new();
        b.insert(0, Poly(&e * &e));
        b.insert(1, Poly(LaurentPoly::t()));
        assert!(matches!(r.insert(b), Inserted::Kernel { beyond: true }));
    }
}
