use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lattice::{counts_capped, inverse_mod};
use super::signature::two_bridge_signature;
use crate::algebra::intlin::{integer_kernel, integer_solve, IntMat};
use crate::algebra::{LaurentPoly, RingSpec};
use crate::equivariant::{cycle_lattice, j_defect};
use crate::error::{Error, Result};
use crate::invariants::h_field;
use crate::scomplex::{Bigrading, Generator, MapKind, SComplex};

/// A solution (k₁, k₂) of the congruences for the ordered pair ζ^from → ζ^to
/// whose lattice counts are (1, 0) or (1, 2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub from: usize,
    pub to: usize,
    pub k1: i64,
    pub k2: i64,
    pub counts: (u64, u64),
}

impl Relation {
    pub fn odd(&self) -> bool {
        self.k1 % 2 == 1 && self.k2 % 2 == 1
    }

    pub fn energy(&self) -> i64 {
        self.k1 * self.k2
    }

    fn is_d(&self) -> bool {
        self.counts == (1, 0)
    }
}

/// Ordered pairs (i, j) of irreducible generators where ⟨vζⁱ, ζʲ⟩ may be
/// nonzero, with the parity of k₁k₂.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VSupport {
    pub pairs: BTreeSet<(usize, usize, bool)>,
}

impl VSupport {
    pub fn odd_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().filter(|t| t.2).map(|&(i, j, _)| (i, j))
    }
}

#[derive(Clone, Debug)]
pub struct TwoBridgeComplex {
    pub p: i64,
    pub q: i64,
    /// Generator k is ζ^{k+1}.
    pub complex: SComplex,
    pub vsupport: VSupport,
    pub relations: Vec<Relation>,
}

impl TwoBridgeComplex {
    /// Complex index of ζⁱ (i ≥ 1).
    pub fn index(&self, i: usize) -> usize {
        i - 1
    }
}

pub(crate) fn check_params(p: i64, q: i64) -> Result<i64> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidArgument(format!("p must be odd and at least 3, got {p}")));
    }
    let q = q.rem_euclid(p);
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({p}, {q}) is not 1")));
    }
    Ok(q)
}

/// All (1,0) and (1,2) solutions over ordered pairs of 0..=(p−1)/2.
pub fn relations(p: i64, q: i64) -> Result<Vec<Relation>> {
    let q = check_params(p, q)?;
    let h = ((p - 1) / 2) as usize;
    let qi = inverse_mod(q, p).expect("q is a unit");
    let mut out = BTreeSet::new();
    for i in 0..=h {
        for j in 0..=h {
            if i == j {
                continue;
            }
            for e1 in [1i64, -1] {
                for e2 in [1i64, -1] {
                    let (ii, jj) = (i as i64, j as i64);
                    let k1 = match (e1 * ii + e2 * jj).rem_euclid(p) {
                        0 => p,
                        r => r,
                    };
                    let k2 = match ((-e1 * ii + e2 * jj) * qi).rem_euclid(p) {
                        0 => p,
                        r => r,
                    };
                    let counts = counts_capped(k1, k2, p, q, 3);
                    if counts != (1, 0) && counts != (1, 2) {
                        continue;
                    }
                    let r = Relation {
                        from: i,
                        to: j,
                        k1,
                        k2,
                        counts,
                    };
                    // flip-symmetric pairs with even (k₁, k₂) cancel against the reducible
                    if !r.odd() && (i == 0 || j == 0) {
                        continue;
                    }
                    out.insert(r);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// (gr(from) − gr(to), deg(from) − deg(to)) prescribed by a relation. A
/// trajectory leaving the reducible lands in the shifted copy, one grade lower.
fn rel_shift(r: &Relation, p: i64) -> (i64, BigRational) {
    let (n1, n2) = r.counts;
    let dz = n1 as i64 + n2 as i64 / 2 + i64::from(r.from == 0);
    (dz, BigRational::new(r.energy().into(), p.into()))
}

/// Bigradings of ζ⁰…ζ^h by breadth-first propagation from ζ⁰ = (0, 0).
/// Odd relations are used first (the least-energy one per pair, pairs in
/// lexicographic order); even relations only reach what is left. Every
/// relation is checked against the result up to the U-action (4, 1).
pub fn gradings(p: i64, rels: &[Relation]) -> Result<Vec<Bigrading>> {
    let h = ((p - 1) / 2) as usize;
    let mut best: BTreeMap<(bool, usize, usize), &Relation> = BTreeMap::new();
    for r in rels {
        let e = best.entry((!r.odd(), r.from, r.to)).or_insert(r);
        if r.energy() < e.energy() {
            *e = r;
        }
    }
    let mut adj: [Vec<Vec<(usize, i64, BigRational)>>; 2] = [vec![Vec::new(); h + 1], vec![Vec::new(); h + 1]];
    for (&(even, _, _), r) in &best {
        let (dz, dd) = rel_shift(r, p);
        for phase in usize::from(even)..2 {
            adj[phase][r.to].push((r.from, dz, dd.clone()));
            adj[phase][r.from].push((r.to, -dz, -dd.clone()));
        }
    }
    let mut g: Vec<Option<Bigrading>> = vec![None; h + 1];
    g[0] = Some(Bigrading::from_ints(0, 0, 1));
    for edges in &adj {
        let mut queue: VecDeque<usize> = (0..=h).filter(|&i| g[i].is_some()).collect();
        while let Some(x) = queue.pop_front() {
            let gx = g[x].clone().expect("visited");
            for (y, dz, dd) in &edges[x] {
                if g[*y].is_none() {
                    g[*y] = Some(Bigrading::new(gx.zgrade + dz, &gx.idegree + dd));
                    queue.push_back(*y);
                }
            }
        }
    }
    let g: Vec<Bigrading> = g
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::Construction(format!("generator {i} of ({p}, _) is not reached by any relation"))))
        .collect::<Result<_>>()?;
    for r in rels {
        if !consistent(&g, r, p) {
            return Err(Error::Construction(format!("inconsistent bigrading along {r:?}")));
        }
    }
    Ok(g)
}

fn consistent(g: &[Bigrading], r: &Relation, p: i64) -> bool {
    let (dz, dd) = rel_shift(r, p);
    let z = g[r.from].zgrade - g[r.to].zgrade - dz;
    let d = &g[r.from].idegree - &g[r.to].idegree - dd;
    z.rem_euclid(4) == 0 && d == BigRational::from_integer((z / 4).into())
}

/// Signs (as 𝐅₂ exponents) on the d/δ arrows making every two-step
/// composite cancel.
fn solve_signs(edges: &[(usize, usize)]) -> Result<Vec<bool>> {
    let mut paths: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (a, &(s1, t1)) in edges.iter().enumerate() {
        if t1 == 0 {
            continue;
        }
        for (b, &(s2, t2)) in edges.iter().enumerate() {
            if s2 == t1 && !(s1 == 0 && t2 == 0) {
                paths.entry((s1, t2)).or_default().push((a, b));
            }
        }
    }
    let n = edges.len();
    let mut rows: Vec<(Vec<bool>, bool)> = Vec::new();
    for ((s, t), ps) in paths {
        match ps.len() {
            2 => {
                let mut row = vec![false; n];
                for &(a, b) in &ps {
                    row[a] ^= true;
                    row[b] ^= true;
                }
                rows.push((row, true));
            }
            k => return Err(Error::Construction(format!("{k} two-step paths from {s} to {t}; no sign rule"))),
        }
    }
    // Gaussian elimination over 𝐅₂
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(k) = (r..rows.len()).find(|&k| rows[k].0[c]) else { continue };
        rows.swap(r, k);
        let (pr, pb) = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row.0[c] {
                for j in 0..n {
                    row.0[j] ^= pr[j];
                }
                row.1 ^= pb;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|row| row.1) {
        return Err(Error::Construction("no consistent choice of signs".into()));
    }
    let mut x = vec![false; n];
    for (r, c) in pivots {
        x[c] = rows[r].1;
    }
    Ok(x)
}

fn eps_times(n: &BigInt, ring: RingSpec) -> LaurentPoly {
    ring.eps().scale(n)
}

/// S-complex of the 2-bridge knot with branched double cover L(p, q).
///
/// d, δ₁, δ₂ are ±ε along odd (1,0) relations. The v-map is only constrained
/// to the odd (1,2) pairs; a model is chosen among integer solutions of
/// dv − vd = δ₂δ₁ on that support whose Frøyshov invariant is −σ/2 and whose
/// J ideals are (εⁱ) up to h.
pub fn build_two_bridge_complex(p: i64, q: i64) -> Result<TwoBridgeComplex> {
    let q = check_params(p, q)?;
    let rels = relations(p, q)?;
    let g = gradings(p, &rels)?;
    let h = ((p - 1) / 2) as usize;
    let ring = RingSpec::Generic;
    let generators = (1..=h)
        .map(|i| Generator {
            name: format!("z{i}"),
            grading: g[i].clone(),
        })
        .collect();
    let mut c = SComplex::empty(ring, generators);

    let edges: Vec<(usize, usize)> = rels
        .iter()
        .filter(|r| r.odd() && r.is_d())
        .map(|r| (r.from, r.to))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let signs = solve_signs(&edges)?;
    for (&(s, t), &neg) in edges.iter().zip(&signs) {
        let x = eps_times(&if neg { -BigInt::one() } else { BigInt::one() }, ring);
        match (s, t) {
            (0, t) => c.delta2.set(t - 1, 0, x),
            (s, 0) => c.delta1.set(0, s - 1, x),
            (s, t) => c.d.set(t - 1, s - 1, x),
        }
    }

    let mut vsupport = VSupport::default();
    for r in rels.iter().filter(|r| r.counts == (1, 2) && r.from != 0 && r.to != 0) {
        vsupport.pairs.insert((r.from, r.to, r.odd()));
    }

    let target = -two_bridge_signature(p, q) / 2;
    let c = complete_v(c, &vsupport, target, p * 1000 + q)?;
    Ok(TwoBridgeComplex {
        p,
        q,
        complex: c,
        vsupport,
        relations: rels,
    })
}

/// Integer coefficients (in units of ε) of d, δ₁, δ₂ as dense tables.
fn units(m: &crate::algebra::ExactMatrix<LaurentPoly>) -> BTreeMap<(usize, usize), BigInt> {
    m.iter().map(|(r, c, x)| ((r, c), x.as_eps_monomial().expect("ε multiple").0)).collect()
}

fn complete_v(c: SComplex, vs: &VSupport, target_h: i64, seed: i64) -> Result<SComplex> {
    let n = c.rank();
    // admissible unknowns: odd support pairs compatible with the gradings
    let unknowns: Vec<(usize, usize)> = vs
        .odd_pairs()
        .map(|(i, j)| (i - 1, j - 1))
        .filter(|&(s, t)| {
            c.u_power(MapKind::V, Some(s), Some(t))
                .is_some_and(|m| &c.grading(t).idegree + BigRational::from_integer(m.into()) < c.grading(s).idegree)
        })
        .collect();
    let d = units(&c.d);
    let d1 = units(&c.delta1);
    let d2 = units(&c.delta2);
    // equation (a → t): Σ_b d[t,b] v[b,a] − Σ_b v[t,b] d[b,a] = δ₂[t] δ₁[a]
    let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, BigInt>> = BTreeMap::new();
    for (u, &(s, t)) in unknowns.iter().enumerate() {
        for (&(r, cc), x) in &d {
            if cc == t {
                *eqs.entry((s, r)).or_default().entry(u).or_insert_with(BigInt::zero) += x;
            }
            if r == s {
                *eqs.entry((cc, t)).or_default().entry(u).or_insert_with(BigInt::zero) -= x;
            }
        }
    }
    let mut rhs: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for (&(_, a), x) in &d1 {
        for (&(t, _), y) in &d2 {
            rhs.insert((a, t), x * y);
            eqs.entry((a, t)).or_default();
        }
    }
    let keys: Vec<(usize, usize)> = eqs.keys().copied().collect();
    let nu = unknowns.len();
    let a: IntMat = keys
        .iter()
        .map(|k| (0..nu).map(|u| eqs[k].get(&u).cloned().unwrap_or_default()).collect())
        .collect();
    let b: Vec<BigInt> = keys.iter().map(|k| rhs.get(k).cloned().unwrap_or_default()).collect();
    let x0 = integer_solve(&a, nu, &b).ok_or_else(|| Error::Construction("no integer v on the admissible support".into()))?;
    let kernel = integer_kernel(&a, nu);

    let cycles = cycle_lattice(&c)?;
    let build = |coeffs: &[i64]| {
        let mut x = x0.clone();
        for (k, &cf) in kernel.iter().zip(coeffs) {
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += ki * cf;
            }
        }
        let mut trial = c.clone();
        trial.v = crate::algebra::ExactMatrix::zeros(n, n);
        for (&(s, t), xi) in unknowns.iter().zip(&x) {
            if !xi.is_zero() {
                trial.v.set(t, s, eps_times(xi, trial.ring));
            }
        }
        trial
    };
    // lexicographic: h error, J levels off the standard pattern, excess content
    let score = |trial: &SComplex| -> Result<(u64, usize, BigInt)> {
        let h = h_field(trial, RingSpec::Generic)?;
        if h != target_h {
            return Ok(((h - target_h).unsigned_abs(), usize::MAX, BigInt::zero()));
        }
        let (bad, excess) = j_defect(trial, target_h, &cycles);
        Ok((0, bad, excess))
    };
    let done = |s: &(u64, usize, BigInt)| s.0 == 0 && s.1 == 0;

    let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
    let draws = if kernel.is_empty() { 1 } else { 12 };
    let mut best: Option<(Vec<i64>, (u64, usize, BigInt))> = None;
    for attempt in 0..draws {
        let coeffs: Vec<i64> = match attempt {
            0 => vec![1; kernel.len()],
            _ => (0..kernel.len()).map(|_| rng.gen_range(-1..=1)).collect(),
        };
        let trial = build(&coeffs);
        let s = score(&trial)?;
        if done(&s) {
            return Ok(trial);
        }
        if best.as_ref().is_none_or(|b| s < b.1) {
            best = Some((coeffs, s));
        }
    }
    // coordinate descent from the best draw
    let (mut coeffs, mut current) = best.expect("at least one draw");
    let mut budget = 600;
    'outer: while budget > 0 {
        for j in 0..coeffs.len() {
            for step in [1, -1] {
                budget -= 1;
                coeffs[j] += step;
                let trial = build(&coeffs);
                let s = score(&trial)?;
                if done(&s) {
                    return Ok(trial);
                }
                if s < current {
                    current = s;
                    continue 'outer;
                }
                coeffs[j] -= step;
            }
        }
        break;
    }
    Err(Error::Construction(format!(
        "no v on the admissible support reproduces h = {target_h} with the standard J pattern"
    )))
}

/// Closed form for T(2, 2k+1): ζⁱ at (2i−1, i²/(2k+1)), v(ζⁱ) = εζ^{i−1}, δ₁(ζ¹) = ε.
pub fn torus_two_complex(k: i64, ring: RingSpec) -> SComplex {
    let p = 2 * k + 1;
    let generators = (1..=k)
        .map(|i| Generator {
            name: format!("z{i}"),
            grading: Bigrading::from_ints(2 * i - 1, i * i, p),
        })
        .collect();
    let mut c = SComplex::empty(ring, generators);
    if k >= 1 {
        c.delta1.set(0, 0, ring.eps());
    }
    for i in 1..k as usize {
        c.v.set(i - 1, i, ring.eps());
    }
    c
}
