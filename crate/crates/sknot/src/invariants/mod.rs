//! Frøyshov invariant h and the Γ-function of an S-complex.

pub mod engine;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{ExactMatrix, LaurentPoly, RingSpec};
use crate::error::{Error, Result};
use crate::scomplex::SComplex;
use crate::twobridge::{signature, KnotSpec};
use engine::{Coef, Column, Inserted, Poly, Reducer};

/// A nonnegative rational or +∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GammaValue {
    Finite(BigRational),
    Infinite,
}

impl GammaValue {
    pub fn zero() -> Self {
        GammaValue::Finite(BigRational::zero())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        GammaValue::Finite(BigRational::new(n.into(), d.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GammaValue::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            GammaValue::Finite(x) => Some(x),
            GammaValue::Infinite => None,
        }
    }
}

impl PartialOrd for GammaValue {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for GammaValue {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (GammaValue::Finite(a), GammaValue::Finite(b)) => a.cmp(b),
            (GammaValue::Finite(_), GammaValue::Infinite) => Ordering::Less,
            (GammaValue::Infinite, GammaValue::Finite(_)) => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaValue::Finite(x) => write!(f, "{x}"),
            GammaValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Values of Γ on a range of integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaFunction {
    pub values: BTreeMap<i64, GammaValue>,
}

impl GammaFunction {
    pub fn get(&self, k: i64) -> Option<&GammaValue> {
        self.values.get(&k)
    }

    pub fn is_monotone(&self) -> bool {
        self.values.values().zip(self.values.values().skip(1)).all(|(a, b)| a <= b)
    }
}

enum Problem<R> {
    /// find α with the constraint rows zero and the functional at `fence` nonzero
    Witness,
    /// find α with dα equal to the target modulo the auxiliary columns
    Target(Column<R>),
}

struct Level<R> {
    fence: usize,
    /// columns always available (no grading cost)
    free: Vec<Column<R>>,
    /// generator columns with shifted idegree
    cols: Vec<(BigRational, Column<R>)>,
    problem: Problem<R>,
}

/// The structure maps in the cheapest faithful representation.
enum Prepared {
    /// every entry is nε; ε is invertible in the fraction field, so it is divided out
    Int([ExactMatrix<BigInt>; 4]),
    /// as `Int`, with coefficients mod 2
    Gf2([ExactMatrix<BigInt>; 4]),
    Laurent,
}

fn prepare(a: &SComplex) -> Prepared {
    if a.ring == RingSpec::T4 || !a.is_eps_uniform() {
        return Prepared::Laurent;
    }
    let q = a.eps_quotients().expect("ε-uniform");
    if a.ring == RingSpec::Char2 {
        Prepared::Gf2(q.map(|m| {
            let mut out = ExactMatrix::zeros(m.rows(), m.cols());
            for (r, c, x) in m.iter() {
                if x.is_odd() {
                    out.set(r, c, BigInt::one());
                }
            }
            out
        }))
    } else {
        Prepared::Int(q)
    }
}

/// Shifted idegree of generator r at grade 2k−1, when the U-shift is integral.
fn shifted_degree(a: &SComplex, r: usize, k: i64) -> Option<BigRational> {
    let g = a.grading(r);
    let diff = 2 * k - 1 - g.zgrade;
    (diff.rem_euclid(4) == 0).then(|| &g.idegree + BigRational::from_integer(BigInt::from(diff / 4)))
}

fn level<R: crate::algebra::RingElem>(a: &SComplex, maps: [&ExactMatrix<R>; 4], k: i64, red: &dyn Fn(&R) -> R) -> Level<R> {
    let [d, v, delta1, delta2] = maps;
    let n = a.rank();
    let candidates: Vec<(usize, BigRational)> = (0..n).filter_map(|r| shifted_degree(a, r, k).map(|t| (r, t))).collect();
    let mut d_cols: Vec<Column<R>> = vec![Column::new(); n];
    for (s, c, x) in d.iter() {
        d_cols[c].insert(s, x.clone());
    }
    if k >= 1 {
        let ku = k as usize;
        // rows δ₁vⁱ, i < k
        let mut powers = Vec::with_capacity(ku);
        let mut cur = delta1.clone();
        for i in 0..ku {
            if i > 0 {
                cur = cur.mul(v).map(red);
            }
            powers.push(cur.clone());
        }
        let cols = candidates
            .into_iter()
            .map(|(r, t)| {
                let mut c = std::mem::take(&mut d_cols[r]);
                for (i, p) in powers.iter().enumerate() {
                    if let Some(x) = p.get(0, r) {
                        c.insert(n + i, x.clone());
                    }
                }
                (t, c)
            })
            .collect();
        Level {
            fence: n + ku - 1,
            free: Vec::new(),
            cols,
            problem: Problem::Witness,
        }
    } else {
        let top = (-k) as usize;
        let as_col = |m: &ExactMatrix<R>| -> Column<R> { m.iter().map(|(s, _, p)| (s, p.clone())).collect() };
        let mut free = Vec::new();
        let mut cur = delta2.clone();
        for i in 0..top {
            if (k + i as i64).rem_euclid(2) == 0 {
                free.push(as_col(&cur));
            }
            cur = v.mul(&cur).map(red);
        }
        let cols = candidates.into_iter().map(|(r, t)| (t, std::mem::take(&mut d_cols[r]))).collect();
        Level {
            fence: n,
            free,
            cols,
            problem: Problem::Target(as_col(&cur)),
        }
    }
}

/// Coefficients mod 2.
#[derive(Clone, Debug, PartialEq)]
struct Gf2(bool);

impl Coef for Gf2 {
    fn vanishes(&self) -> bool {
        !self.0
    }
    fn times(&self, o: &Self) -> Self {
        Gf2(self.0 && o.0)
    }
    fn minus(&self, o: &Self) -> Self {
        Gf2(self.0 ^ o.0)
    }
    fn negated(&self) -> Self {
        self.clone()
    }
    fn normalize(_: &mut BTreeMap<usize, Self>) {}
}

/// Laurent columns as reducer input: integers after dividing out ε-weights
/// when possible, Laurent polynomials otherwise.
enum Scalars {
    Int(Vec<Column<BigInt>>),
    Poly(Vec<Column<Poly<false>>>),
    Poly2(Vec<Column<Poly<true>>>),
}

fn convert(columns: &[&Column<LaurentPoly>], rows: usize, ring: RingSpec) -> Scalars {
    match ring {
        RingSpec::T4 => Scalars::Int(
            columns
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|(&i, p)| (i, p.terms().fold(BigInt::zero(), |s, (_, x)| s + x)))
                        .filter(|(_, x)| !Zero::is_zero(x))
                        .collect()
                })
                .collect(),
        ),
        RingSpec::Generic => {
            let mut m = ExactMatrix::zeros(rows, columns.len());
            for (j, c) in columns.iter().enumerate() {
                for (&i, p) in c.iter() {
                    m.set(i, j, p.clone());
                }
            }
            match crate::algebra::linalg::homogeneous_coefficients(&m) {
                Some(int_rows) => {
                    let mut cols: Vec<Column<BigInt>> = vec![Column::new(); columns.len()];
                    for (i, row) in int_rows.into_iter().enumerate() {
                        for (j, x) in row {
                            cols[j].insert(i, x);
                        }
                    }
                    Scalars::Int(cols)
                }
                None => Scalars::Poly(columns.iter().map(|c| c.iter().map(|(&i, p)| (i, Poly(p.clone()))).collect()).collect()),
            }
        }
        RingSpec::Char2 => Scalars::Poly2(
            columns
                .iter()
                .map(|c| c.iter().map(|(&i, p)| (i, Poly(p.reduce_char2()))).filter(|(_, p)| !p.0.is_zero()).collect())
                .collect(),
        ),
    }
}

/// Columns in insertion order: free columns, generator columns by degree, target.
fn ordered<R>(lv: Level<R>) -> (Vec<Column<R>>, usize, Vec<BigRational>, usize, bool) {
    let Level {
        fence,
        free,
        mut cols,
        problem,
    } = lv;
    cols.sort_by(|x, y| x.0.cmp(&y.0));
    let nfree = free.len();
    let (degrees, gens): (Vec<BigRational>, Vec<Column<R>>) = cols.into_iter().unzip();
    let mut all = free;
    all.extend(gens);
    let witness = match problem {
        Problem::Witness => true,
        Problem::Target(w) => {
            all.push(w);
            false
        }
    };
    (all, nfree, degrees, fence, witness)
}

/// Least threshold at which the level-k system becomes solvable, or `None`.
fn solve_level(a: &SComplex, prep: &Prepared, k: i64) -> Option<BigRational> {
    match prep {
        Prepared::Int([d, v, d1, d2]) => {
            let (all, nfree, degrees, fence, witness) = ordered(level(a, [d, v, d1, d2], k, &|x: &BigInt| x.clone()));
            run(all, nfree, &degrees, fence, witness)
        }
        Prepared::Gf2([d, v, d1, d2]) => {
            let parity = |x: &BigInt| if x.is_odd() { BigInt::one() } else { BigInt::zero() };
            let (all, nfree, degrees, fence, witness) = ordered(level(a, [d, v, d1, d2], k, &parity));
            let all = all
                .into_iter()
                .map(|c| c.into_iter().filter(|(_, x)| x.is_odd()).map(|(i, _)| (i, Gf2(true))).collect())
                .collect();
            run(all, nfree, &degrees, fence, witness)
        }
        Prepared::Laurent => {
            let ring = a.ring;
            let (all, nfree, degrees, fence, witness) = ordered(level(a, [&a.d, &a.v, &a.delta1, &a.delta2], k, &|p: &LaurentPoly| ring.reduce(p)));
            let rows = fence + 1 + all.iter().flat_map(|c| c.keys()).max().copied().unwrap_or(0);
            let refs: Vec<&Column<LaurentPoly>> = all.iter().collect();
            match convert(&refs, rows, ring) {
                Scalars::Int(c) => run(c, nfree, &degrees, fence, witness),
                Scalars::Poly(c) => run(c, nfree, &degrees, fence, witness),
                Scalars::Poly2(c) => run(c, nfree, &degrees, fence, witness),
            }
        }
    }
}

fn run<C: Coef>(mut cols: Vec<Column<C>>, nfree: usize, degrees: &[BigRational], fence: usize, witness: bool) -> Option<BigRational> {
    let mut red = Reducer::new(fence);
    if witness {
        for (c, t) in cols.into_iter().zip(degrees) {
            if let Inserted::Kernel { beyond: true } = red.insert(c) {
                return Some(t.clone());
            }
        }
        None
    } else {
        let target = cols.pop().expect("target column");
        let mut it = cols.into_iter();
        for c in it.by_ref().take(nfree) {
            red.insert(c);
        }
        if red.in_span(target.clone()) {
            return Some(BigRational::zero());
        }
        for (c, t) in it.zip(degrees) {
            if let Inserted::Pivot = red.insert(c) {
                if red.in_span(target.clone()) {
                    return Some(t.clone().max(BigRational::zero()));
                }
            }
        }
        None
    }
}

fn ensure_valid(a: &SComplex) -> Result<()> {
    let r = a.validate();
    if r.passed() {
        Ok(())
    } else {
        Err(Error::InvalidComplex(r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")))
    }
}

/// Γ(k) over the fraction field of the complex's ring.
pub fn gamma(a: &SComplex, k: i64) -> Result<GammaValue> {
    ensure_valid(a)?;
    Ok(gamma_unchecked(a, k))
}

pub(crate) fn gamma_unchecked(a: &SComplex, k: i64) -> GammaValue {
    gamma_prepared(a, &prepare(a), k)
}

fn gamma_prepared(a: &SComplex, prep: &Prepared, k: i64) -> GammaValue {
    match solve_level(a, prep, k) {
        Some(t) => GammaValue::Finite(t),
        None => GammaValue::Infinite,
    }
}

/// Γ on [lo, hi].
pub fn gamma_function(a: &SComplex, lo: i64, hi: i64) -> Result<GammaFunction> {
    ensure_valid(a)?;
    let prep = prepare(a);
    Ok(GammaFunction {
        values: (lo..=hi).map(|k| (k, gamma_prepared(a, &prep, k))).collect(),
    })
}

/// Largest k whose level-k system is solvable over the fraction field of `ring`.
pub fn h_field(a: &SComplex, ring: RingSpec) -> Result<i64> {
    ensure_valid(a)?;
    let c = if ring == a.ring { a.clone() } else { a.with_ring(ring) };
    let prep = prepare(&c);
    let feasible = |k: i64| solve_level(&c, &prep, k).is_some();
    if feasible(1) {
        let mut k = 1;
        while feasible(k + 1) {
            k += 1;
        }
        return Ok(k);
    }
    let floor = -2 * (c.rank() as i64) - 2;
    let mut k = 0;
    while k >= floor {
        if feasible(k) {
            return Ok(k);
        }
        k -= 1;
    }
    Err(Error::InvalidComplex("no feasible level found".into()))
}

/// Γ of a tensor product of atoms with parameters `ts`.
pub fn gamma_closed_form_atoms(ts: &[BigRational], k: i64) -> GammaValue {
    if k <= 0 {
        return GammaValue::zero();
    }
    let k = k as usize;
    if k > ts.len() {
        return GammaValue::Infinite;
    }
    let mut s = ts.to_vec();
    s.sort();
    GammaValue::Finite(s.into_iter().take(k).sum())
}

/// h over a ring with T⁴ = 1, for knots assembled from torus and 2-bridge pieces.
pub fn h_t4(knot: &KnotSpec) -> Result<i64> {
    match knot {
        KnotSpec::Unknot | KnotSpec::TwoBridge(..) | KnotSpec::DoubleTwist(..) => Ok(0),
        KnotSpec::Torus(p, q) => {
            let sigma = signature(knot)?;
            Ok(torus_phi(*p, *q) - sigma / 2)
        }
        KnotSpec::Mirror(k) => Ok(-h_t4(k)?),
        KnotSpec::Sum(a, b) => Ok(h_t4(a)? + h_t4(b)?),
    }
}

/// h + σ/2 for the torus knot T(p, q), by Euclidean descent on the larger parameter.
pub fn torus_phi(p: i64, q: i64) -> i64 {
    let (mut a, mut b) = (p.min(q), p.max(q));
    let mut acc = 0;
    while a > 1 {
        acc -= a * a / 4;
        b -= a;
        if b < a {
            std::mem::swap(&mut a, &mut b);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scomplex::{atom, atom_in, atom_product, tensor};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trefoil_atom() {
        let a = atom(&q(1, 3)).unwrap();
        assert_eq!(gamma(&a, 1).unwrap(), GammaValue::ratio(1, 3));
        assert_eq!(gamma(&a, 0).unwrap(), GammaValue::zero());
        assert_eq!(gamma(&a, 2).unwrap(), GammaValue::Infinite);
        assert_eq!(h_field(&a, RingSpec::Generic).unwrap(), 1);
        assert_eq!(h_field(&a, RingSpec::T4).unwrap(), 0);
        assert_eq!(h_field(&a.dual(), RingSpec::Generic).unwrap(), -1);
        assert_eq!(h_field(&atom_in(&q(1, 3), RingSpec::Char2).unwrap(), RingSpec::Char2).unwrap(), 1);
    }

    #[test]
    fn atom_cube() {
        let t = atom_product(&[q(1, 3), q(1, 3), q(1, 3)], RingSpec::Generic).unwrap();
        for i in 1..=3 {
            assert_eq!(gamma(&t, i).unwrap(), GammaValue::ratio(i, 3));
        }
        assert_eq!(gamma(&t, 4).unwrap(), GammaValue::Infinite);
        assert_eq!(h_field(&t, RingSpec::Generic).unwrap(), 3);
    }

    #[test]
    fn mixed_atoms_match_closed_form() {
        let ts = [q(1, 3), q(9, 15)];
        let t = atom_product(&ts, RingSpec::Generic).unwrap();
        for k in -2..=3 {
            assert_eq!(gamma(&t, k).unwrap(), gamma_closed_form_atoms(&ts, k), "k = {k}");
        }
        assert_eq!(gamma_closed_form_atoms(&ts, 2), GammaValue::ratio(14, 15));
        assert_eq!(gamma_closed_form_atoms(&[], 1), GammaValue::Infinite);
    }

    #[test]
    fn dual_pairs_cancel() {
        let a = atom(&q(1, 3)).unwrap();
        let t = tensor(&a, &a.dual()).unwrap();
        assert_eq!(h_field(&t, RingSpec::Generic).unwrap(), 0);
        let a2 = atom_product(&[q(1, 3), q(3, 5)], RingSpec::Generic).unwrap();
        assert_eq!(h_field(&a2.dual(), RingSpec::Generic).unwrap(), -2);
    }

    #[test]
    fn torus_descent() {
        assert_eq!(torus_phi(2, 3), -1);
        assert_eq!(torus_phi(3, 4), -2);
        assert_eq!(torus_phi(2, 1), 0);
    }
}
