use std::collections::BTreeMap;

use super::{parity_sign, Generator, SComplex};
use crate::algebra::{ExactMatrix, LaurentPoly};
use crate::error::{Error, Result};

/// Basis element of C̃ = C ⊕ C[−1] ⊕ R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Cell {
    C(usize),
    X(usize),
    One,
}

type Vector = BTreeMap<(Cell, Cell), LaurentPoly>;

fn cell_grade(a: &SComplex, c: Cell) -> i64 {
    match c {
        Cell::C(i) => a.generators[i].grading.zgrade,
        Cell::X(i) => a.generators[i].grading.zgrade + 1,
        Cell::One => 0,
    }
}

/// d̃ applied to a basis cell.
fn dtilde(a: &SComplex, c: Cell) -> Vec<(Cell, LaurentPoly)> {
    let mut out = Vec::new();
    match c {
        Cell::C(i) => {
            for (r, x) in column(&a.d, i) {
                out.push((Cell::C(r), x));
            }
            for (r, x) in column(&a.v, i) {
                out.push((Cell::X(r), x));
            }
            let e = a.delta1.get_or_zero(0, i);
            if !e.is_zero() {
                out.push((Cell::One, e));
            }
        }
        Cell::X(i) => {
            for (r, x) in column(&a.d, i) {
                out.push((Cell::X(r), -&x));
            }
        }
        Cell::One => {
            for (r, _, x) in a.delta2.iter() {
                out.push((Cell::X(r), x.clone()));
            }
        }
    }
    out
}

fn column(m: &ExactMatrix<LaurentPoly>, c: usize) -> Vec<(usize, LaurentPoly)> {
    m.iter().filter(|&(_, cc, _)| cc == c).map(|(r, _, x)| (r, x.clone())).collect()
}

fn add_term(v: &mut Vector, key: (Cell, Cell), x: LaurentPoly) {
    let e = v.entry(key).or_insert_with(LaurentPoly::zero);
    *e += &x;
    if e.is_zero() {
        v.remove(&key);
    }
}

/// Tensor product, presented again as an S-complex. The C-summand has basis
/// {c⊗c', χc⊗c', 1⊗c', c⊗1}, of rank 2ab + a + b.
pub fn tensor(a: &SComplex, b: &SComplex) -> Result<SComplex> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch(a.ring.to_string(), b.ring.to_string()));
    }
    let ring = a.ring;
    let (na, nb) = (a.rank(), b.rank());
    let da: Vec<Vec<(Cell, LaurentPoly)>> = (0..na)
        .map(|i| dtilde(a, Cell::C(i)))
        .chain((0..na).map(|i| dtilde(a, Cell::X(i))))
        .chain([dtilde(a, Cell::One)])
        .collect();
    let db: Vec<Vec<(Cell, LaurentPoly)>> = (0..nb)
        .map(|i| dtilde(b, Cell::C(i)))
        .chain((0..nb).map(|i| dtilde(b, Cell::X(i))))
        .chain([dtilde(b, Cell::One)])
        .collect();
    let idx = |n: usize, c: Cell| match c {
        Cell::C(i) => i,
        Cell::X(i) => n + i,
        Cell::One => 2 * n,
    };

    // new basis
    let mut basis: Vec<(Cell, Cell)> = Vec::with_capacity(2 * na * nb + na + nb);
    for i in 0..na {
        for j in 0..nb {
            basis.push((Cell::C(i), Cell::C(j)));
        }
    }
    for i in 0..na {
        for j in 0..nb {
            basis.push((Cell::X(i), Cell::C(j)));
        }
    }
    for j in 0..nb {
        basis.push((Cell::One, Cell::C(j)));
    }
    for i in 0..na {
        basis.push((Cell::C(i), Cell::One));
    }
    let pos: BTreeMap<(Cell, Cell), usize> = basis.iter().enumerate().map(|(k, &c)| (c, k)).collect();

    let dfull = |x: Cell, y: Cell| -> Vector {
        let mut out = Vector::new();
        for (cx, e) in &da[idx(na, x)] {
            add_term(&mut out, (*cx, y), e.clone());
        }
        let s = parity_sign(cell_grade(a, x));
        for (cy, e) in &db[idx(nb, y)] {
            add_term(&mut out, (x, *cy), e.scale(&s));
        }
        out
    };

    // split a vector of the full tensor into (C-part, χ-part, R-part)
    let split = |v: &Vector| -> (BTreeMap<usize, LaurentPoly>, BTreeMap<usize, LaurentPoly>, LaurentPoly) {
        let mut cp: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        let mut xp: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        let mut r = LaurentPoly::zero();
        let put = |m: &mut BTreeMap<usize, LaurentPoly>, k: usize, x: LaurentPoly| {
            *m.entry(k).or_insert_with(LaurentPoly::zero) += &x;
        };
        for (&(x, y), e) in v {
            match (x, y) {
                (Cell::One, Cell::One) => r += e,
                (Cell::X(i), Cell::X(j)) => {
                    let s = -parity_sign(a.generators[i].grading.zgrade);
                    put(&mut xp, pos[&(Cell::C(i), Cell::C(j))] + na * nb, e.scale(&s));
                }
                (Cell::C(i), Cell::X(j)) => {
                    let s = parity_sign(a.generators[i].grading.zgrade);
                    put(&mut xp, pos[&(Cell::C(i), Cell::C(j))], e.scale(&s));
                    put(&mut cp, pos[&(Cell::X(i), Cell::C(j))], e.scale(&-s));
                }
                (Cell::One, Cell::X(j)) => put(&mut xp, pos[&(Cell::One, Cell::C(j))], e.clone()),
                (Cell::X(i), Cell::One) => put(&mut xp, pos[&(Cell::C(i), Cell::One)], e.clone()),
                _ => put(&mut cp, pos[&(x, y)], e.clone()),
            }
        }
        (cp, xp, r)
    };

    let generators: Vec<Generator> = basis
        .iter()
        .map(|&(x, y)| {
            let (gx, nx) = match x {
                Cell::C(i) => (a.generators[i].grading.clone(), a.generators[i].name.clone()),
                Cell::X(i) => {
                    let g = &a.generators[i].grading;
                    (super::Bigrading::new(g.zgrade + 1, g.idegree.clone()), format!("x{}", a.generators[i].name))
                }
                Cell::One => (super::Bigrading::from_ints(0, 0, 1), "1".to_string()),
            };
            let (gy, ny) = match y {
                Cell::C(j) => (b.generators[j].grading.clone(), b.generators[j].name.clone()),
                _ => (super::Bigrading::from_ints(0, 0, 1), "1".to_string()),
            };
            Generator {
                name: format!("{nx}|{ny}"),
                grading: gx.add(&gy),
            }
        })
        .collect();

    let mut out = SComplex::empty(ring, generators);
    for (k, &(x, y)) in basis.iter().enumerate() {
        let (cp, xp, r) = split(&dfull(x, y));
        for (t, e) in cp {
            out.d.set(t, k, ring.reduce(&e));
        }
        for (t, e) in xp {
            out.v.set(t, k, ring.reduce(&e));
        }
        out.delta1.set(0, k, ring.reduce(&r));
    }
    let (cp, xp, r) = split(&dfull(Cell::One, Cell::One));
    debug_assert!(cp.values().all(|e| e.is_zero()) && r.is_zero());
    for (t, e) in xp {
        out.delta2.set(t, 0, ring.reduce(&e));
    }
    Ok(out)
}
