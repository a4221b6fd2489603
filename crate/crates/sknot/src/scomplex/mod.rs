//! S-complexes presented as (C, d, v, δ₁, δ₂) with a ℤ×ℚ bigrading.
//!
//! The full complex is C̃ = C ⊕ C[−1] ⊕ R with
//!
//! ```text
//!     d̃ = [ d   0   0  ]
//!         [ v  −d   δ₂ ]
//!         [ δ₁  0   0  ]
//! ```
//!
//! and χ the identity C → C[−1]. Matrix entries are stored with row = target,
//! column = source. Powers of U are implicit: an entry whose endpoints differ
//! in z-grade by 4m more than the map's degree carries U^m, and arithmetic is
//! done at U = 1.

mod json;
mod morphism;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{ExactMatrix, LaurentPoly, RingSpec};
use crate::error::{Error, Result};

pub use morphism::Morphism;
pub use tensor::tensor;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bigrading {
    pub zgrade: i64,
    pub idegree: BigRational,
}

impl Bigrading {
    pub fn new(zgrade: i64, idegree: BigRational) -> Self {
        Self { zgrade, idegree }
    }

    pub fn from_ints(zgrade: i64, num: i64, den: i64) -> Self {
        Self {
            zgrade,
            idegree: BigRational::new(num.into(), den.into()),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            zgrade: self.zgrade + o.zgrade,
            idegree: &self.idegree + &o.idegree,
        }
    }

    /// Grading after multiplying by U^m.
    pub fn shifted(&self, m: i64) -> Self {
        Self {
            zgrade: self.zgrade + 4 * m,
            idegree: &self.idegree + BigRational::from_integer(m.into()),
        }
    }
}

impl fmt::Display for Bigrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.zgrade, self.idegree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub grading: Bigrading,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SComplex {
    pub ring: RingSpec,
    pub generators: Vec<Generator>,
    /// n × n
    pub d: ExactMatrix<LaurentPoly>,
    /// n × n
    pub v: ExactMatrix<LaurentPoly>,
    /// 1 × n
    pub delta1: ExactMatrix<LaurentPoly>,
    /// n × 1
    pub delta2: ExactMatrix<LaurentPoly>,
}

/// One failed structure check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.identity, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn identities(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.identity.as_str()).collect()
    }
}

/// Which structure map an entry belongs to, for grading checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    D,
    V,
    Delta1,
    Delta2,
}

impl SComplex {
    /// The complex with C = 0.
    pub fn trivial(ring: RingSpec) -> Self {
        Self::empty(ring, Vec::new())
    }

    /// Generators with all maps zero.
    pub fn empty(ring: RingSpec, generators: Vec<Generator>) -> Self {
        let n = generators.len();
        Self {
            ring,
            generators,
            d: ExactMatrix::zeros(n, n),
            v: ExactMatrix::zeros(n, n),
            delta1: ExactMatrix::zeros(1, n),
            delta2: ExactMatrix::zeros(n, 1),
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn grading(&self, i: usize) -> &Bigrading {
        &self.generators[i].grading
    }

    /// Same complex with every entry reduced in `ring`.
    pub fn with_ring(&self, ring: RingSpec) -> Self {
        let red = |m: &ExactMatrix<LaurentPoly>| m.map(|p| ring.reduce(p));
        Self {
            ring,
            generators: self.generators.clone(),
            d: red(&self.d),
            v: red(&self.v),
            delta1: red(&self.delta1),
            delta2: red(&self.delta2),
        }
    }

    fn reduce(&self, m: &ExactMatrix<LaurentPoly>) -> ExactMatrix<LaurentPoly> {
        m.map(|p| self.ring.reduce(p))
    }

    /// U-power carried by an entry of `kind` from `src` to `dst`, if the
    /// z-grades are compatible. `None` stands for the reducible generator.
    pub fn u_power(&self, kind: MapKind, src: Option<usize>, dst: Option<usize>) -> Option<i64> {
        let z = |i: Option<usize>| i.map_or(0, |i| self.generators[i].grading.zgrade);
        // target z-grade (as a C-generator) before U-shift
        let drop = match kind {
            MapKind::D => 1,
            MapKind::V => 2,
            MapKind::Delta1 => 1,
            // δ₂ lands in C[−1]: χs has grade z_s + 1 and must sit at −1
            MapKind::Delta2 => 2,
        };
        let diff = z(src) - drop - z(dst);
        diff.is_multiple_of(&4).then_some(diff / 4)
    }

    fn check_entry(&self, kind: MapKind, src: Option<usize>, dst: Option<usize>) -> std::result::Result<(), String> {
        let m = self.u_power(kind, src, dst).ok_or_else(|| "z-grade mismatch".to_string())?;
        let deg = |i: Option<usize>| i.map_or_else(BigRational::zero, |i| self.generators[i].grading.idegree.clone());
        let target = deg(dst) + BigRational::from_integer(m.into());
        if target < deg(src) {
            Ok(())
        } else {
            Err(format!("idegree does not drop ({} -> {})", deg(src), target))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        let n = self.rank();
        let shapes = [
            ("shape:d", self.d.rows() == n && self.d.cols() == n),
            ("shape:v", self.v.rows() == n && self.v.cols() == n),
            ("shape:delta1", self.delta1.rows() == 1 && self.delta1.cols() == n),
            ("shape:delta2", self.delta2.rows() == n && self.delta2.cols() == 1),
        ];
        for (name, ok) in shapes {
            if !ok {
                out.push(Violation {
                    identity: name.into(),
                    detail: "wrong dimensions".into(),
                });
            }
        }
        if !out.is_empty() {
            return ValidationReport { violations: out };
        }
        let dd = self.reduce(&self.d.mul(&self.d));
        let d1d = self.reduce(&self.delta1.mul(&self.d));
        let dd2 = self.reduce(&self.d.mul(&self.delta2));
        let rel = self.reduce(&self.d.mul(&self.v).sub(&self.v.mul(&self.d)).sub(&self.delta2.mul(&self.delta1)));
        for (name, m) in [("d*d", dd), ("delta1*d", d1d), ("d*delta2", dd2), ("d*v-v*d-delta2*delta1", rel)] {
            if let Some((r, c, x)) = m.iter().next() {
                out.push(Violation {
                    identity: name.into(),
                    detail: format!("entry ({r},{c}) = {x}, {} nonzero", m.nnz()),
                });
            }
        }
        let name = |i: Option<usize>| i.map_or("1".to_string(), |i| self.generators[i].name.clone());
        let mut grade = |kind: MapKind, label: &str, src: Option<usize>, dst: Option<usize>| {
            if let Err(e) = self.check_entry(kind, src, dst) {
                out.push(Violation {
                    identity: label.into(),
                    detail: format!("{} -> {}: {e}", name(src), name(dst)),
                });
            }
        };
        for (r, c, _) in self.d.iter() {
            grade(MapKind::D, "grading:d", Some(c), Some(r));
        }
        for (r, c, _) in self.v.iter() {
            grade(MapKind::V, "grading:v", Some(c), Some(r));
        }
        for (_, c, _) in self.delta1.iter() {
            grade(MapKind::Delta1, "grading:delta1", Some(c), None);
        }
        for (r, _, _) in self.delta2.iter() {
            grade(MapKind::Delta2, "grading:delta2", None, Some(r));
        }
        ValidationReport { violations: out }
    }

    /// Σ (−1)^z over the generators of C.
    pub fn euler_characteristic(&self) -> i64 {
        self.generators.iter().map(|g| if g.grading.zgrade.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }

    /// The dual complex; generator (χc)* sits at (−z−1, −deg).
    pub fn dual(&self) -> SComplex {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                name: dual_name(&g.name),
                grading: Bigrading::new(-g.grading.zgrade - 1, -g.grading.idegree.clone()),
            })
            .collect();
        SComplex {
            ring: self.ring,
            generators,
            d: self.d.transpose().neg(),
            v: self.v.transpose(),
            delta1: self.delta2.transpose(),
            delta2: self.delta1.transpose(),
        }
    }

    /// δ₁ as a dense row.
    pub fn delta1_row(&self) -> Vec<LaurentPoly> {
        (0..self.rank()).map(|i| self.delta1.get_or_zero(0, i)).collect()
    }

    /// δ₂ as a dense column.
    pub fn delta2_col(&self) -> Vec<LaurentPoly> {
        (0..self.rank()).map(|i| self.delta2.get_or_zero(i, 0)).collect()
    }

    /// Multiset of bigradings, sorted.
    pub fn grading_multiset(&self) -> Vec<Bigrading> {
        let mut g: Vec<Bigrading> = self.generators.iter().map(|g| g.grading.clone()).collect();
        g.sort();
        g
    }

    /// Every nonzero entry of d, v, δ₁, δ₂ is an integer multiple of ε.
    pub fn is_eps_uniform(&self) -> bool {
        let eps = LaurentPoly::eps();
        [&self.d, &self.v, &self.delta1, &self.delta2].iter().all(|m| {
            m.iter().all(|(_, _, p)| {
                p.exact_div(&eps, false)
                    .is_some_and(|q| q.num_terms() == 1 && q.min_exp().is_some_and(|e| e.is_zero()))
            })
        })
    }

    /// Integer matrices (d̄, v̄, δ̄₁, δ̄₂) with every map divided by ε.
    pub fn eps_quotients(&self) -> Result<[ExactMatrix<BigInt>; 4]> {
        if !self.is_eps_uniform() {
            return Err(Error::InvalidComplex("entries are not integer multiples of T^2 - T^-2".into()));
        }
        let eps = LaurentPoly::eps();
        let q = |m: &ExactMatrix<LaurentPoly>| {
            let mut out = ExactMatrix::zeros(m.rows(), m.cols());
            for (r, c, p) in m.iter() {
                out.set(r, c, p.exact_div(&eps, false).unwrap().coeff(&BigInt::zero()));
            }
            out
        };
        Ok([q(&self.d), q(&self.v), q(&self.delta1), q(&self.delta2)])
    }

    /// Relabel generators in a canonical order (by bigrading, then name).
    pub fn canonical(&self) -> SComplex {
        let mut order: Vec<usize> = (0..self.rank()).collect();
        order.sort_by(|&a, &b| (&self.generators[a].grading, &self.generators[a].name).cmp(&(&self.generators[b].grading, &self.generators[b].name)));
        self.permuted(&order)
    }

    /// Complex whose i-th generator is the `order[i]`-th generator of self.
    pub fn permuted(&self, order: &[usize]) -> SComplex {
        let n = self.rank();
        assert_eq!(order.len(), n);
        let mut inv = vec![0; n];
        for (i, &o) in order.iter().enumerate() {
            inv[o] = i;
        }
        let sq = |m: &ExactMatrix<LaurentPoly>| {
            let mut out = ExactMatrix::zeros(n, n);
            for (r, c, x) in m.iter() {
                out.set(inv[r], inv[c], x.clone());
            }
            out
        };
        let mut d1 = ExactMatrix::zeros(1, n);
        for (_, c, x) in self.delta1.iter() {
            d1.set(0, inv[c], x.clone());
        }
        let mut d2 = ExactMatrix::zeros(n, 1);
        for (r, _, x) in self.delta2.iter() {
            d2.set(inv[r], 0, x.clone());
        }
        SComplex {
            ring: self.ring,
            generators: order.iter().map(|&o| self.generators[o].clone()).collect(),
            d: sq(&self.d),
            v: sq(&self.v),
            delta1: d1,
            delta2: d2,
        }
    }

    /// Generator counts per (zgrade, idegree).
    pub fn grading_histogram(&self) -> BTreeMap<Bigrading, usize> {
        let mut h = BTreeMap::new();
        for g in &self.generators {
            *h.entry(g.grading.clone()).or_insert(0) += 1;
        }
        h
    }

    pub fn to_json(&self) -> serde_json::Value {
        json::to_json(self)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        json::from_json(v)
    }
}

fn dual_name(s: &str) -> String {
    match s.strip_suffix('*') {
        Some(t) => t.to_string(),
        None => format!("{s}*"),
    }
}

/// The complex with one generator at (1, t) and δ₁ = ε.
pub fn atom(t: &BigRational) -> Result<SComplex> {
    atom_in(t, RingSpec::Generic)
}

pub fn atom_in(t: &BigRational, ring: RingSpec) -> Result<SComplex> {
    if *t <= BigRational::zero() {
        return Err(Error::InvalidArgument(format!("atom parameter must be positive, got {t}")));
    }
    let mut c = SComplex::empty(
        ring,
        vec![Generator {
            name: "z".into(),
            grading: Bigrading::new(1, t.clone()),
        }],
    );
    c.delta1.set(0, 0, ring.eps());
    Ok(c)
}

/// Iterated tensor product of atoms.
pub fn atom_product(ts: &[BigRational], ring: RingSpec) -> Result<SComplex> {
    let mut acc = SComplex::trivial(ring);
    for t in ts {
        acc = tensor(&acc, &atom_in(t, ring)?)?;
    }
    Ok(acc)
}

pub(crate) fn parity_sign(z: i64) -> BigInt {
    if z.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn third() -> BigRational {
        BigRational::new(1.into(), 3.into())
    }

    #[test]
    fn atom_is_valid() {
        let a = atom(&third()).unwrap();
        assert!(a.validate().passed());
        assert_eq!(a.euler_characteristic(), -1);
        assert!(atom(&BigRational::zero()).is_err());
    }

    #[test]
    fn corruption_is_named() {
        let mut c = SComplex::empty(
            RingSpec::Generic,
            vec![
                Generator {
                    name: "a".into(),
                    grading: Bigrading::from_ints(3, 3, 1),
                },
                Generator {
                    name: "b".into(),
                    grading: Bigrading::from_ints(2, 2, 1),
                },
                Generator {
                    name: "c".into(),
                    grading: Bigrading::from_ints(1, 1, 1),
                },
            ],
        );
        c.d.set(1, 0, LaurentPoly::one());
        c.d.set(2, 1, LaurentPoly::one());
        let r = c.validate();
        assert_eq!(r.identities(), vec!["d*d"]);
    }

    #[test]
    fn grading_violation() {
        let mut c = SComplex::empty(
            RingSpec::Generic,
            vec![
                Generator {
                    name: "a".into(),
                    grading: Bigrading::from_ints(2, 0, 1),
                },
                Generator {
                    name: "b".into(),
                    grading: Bigrading::from_ints(1, 1, 1),
                },
            ],
        );
        c.d.set(1, 0, LaurentPoly::one());
        assert_eq!(c.validate().identities(), vec!["grading:d"]);
    }

    #[test]
    fn dual_atom() {
        let a = atom(&third()).unwrap();
        let d = a.dual();
        assert!(d.validate().passed());
        assert_eq!(d.generators[0].grading, Bigrading::from_ints(-2, -1, 3));
        assert_eq!(d.delta2.get_or_zero(0, 0), LaurentPoly::eps());
        assert!(d.delta1.is_zero());
        assert_eq!(d.dual(), a);
    }
}
