//! Reducibles on blow-ups of product cobordisms and the inequalities they feed.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::{LaurentPoly, RingSpec};
use crate::error::{Error, Result};
use crate::invariants::{gamma, gamma_closed_form_atoms, h_t4, GammaValue};
use crate::scomplex::SComplex;
use crate::twobridge::{catalog_complex, double_twist_parameter, gamma_lower_bound_two_bridge, signature, KnotSpec};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A surface in a blow-up of a product, with lattice ⟨−1⟩ⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismData {
    pub surface: Vec<i64>,
    pub c: Vec<i64>,
    pub genus: i64,
    pub s_plus: i64,
    pub s_minus: i64,
    pub sigma_in: i64,
    pub sigma_out: i64,
    pub chi_w: i64,
    pub sigma_w: i64,
    pub chi_s: i64,
}

impl CobordismData {
    /// An embedded genus-g cobordism between knots in I×S³ # n CP̄², n = |surface|.
    pub fn new(surface: Vec<i64>, c: Vec<i64>, genus: i64, sigma_in: i64, sigma_out: i64) -> Result<Self> {
        if surface.len() != c.len() {
            return Err(Error::InvalidArgument(format!(
                "surface class has rank {} but c has rank {}",
                surface.len(),
                c.len()
            )));
        }
        if genus < 0 {
            return Err(Error::InvalidArgument(format!("negative genus {genus}")));
        }
        let n = surface.len() as i64;
        Ok(Self {
            surface,
            c,
            genus,
            s_plus: 0,
            s_minus: 0,
            sigma_in,
            sigma_out,
            chi_w: n,
            sigma_w: -n,
            chi_s: -2 * genus,
        })
    }

    pub fn with_double_points(mut self, s_plus: i64, s_minus: i64) -> Result<Self> {
        if s_plus < 0 || s_minus < 0 {
            return Err(Error::InvalidArgument("double point counts must be nonnegative".into()));
        }
        self.s_plus = s_plus;
        self.s_minus = s_minus;
        Ok(self)
    }

    /// Override χ(W), σ(W) (for shapes other than a blow-up of I×S³).
    pub fn with_topology(mut self, chi_w: i64, sigma_w: i64, chi_s: i64) -> Self {
        self.chi_w = chi_w;
        self.sigma_w = sigma_w;
        self.chi_s = chi_s;
        self
    }

    pub fn rank(&self) -> usize {
        self.surface.len()
    }

    /// S·S = −Σsᵢ².
    pub fn self_intersection(&self) -> i64 {
        -self.surface.iter().map(|s| s * s).sum::<i64>()
    }

    /// Boundary sum with m copies of the degree-2 sphere pair in CP̄² ∖ B⁴;
    /// the outgoing knot gains m right-handed trefoil summands.
    pub fn stabilized_with_trefoils(&self, m: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..m {
            out.surface.push(2);
            out.c.push(0);
            out.chi_w += 1;
            out.sigma_w -= 1;
            out.sigma_out -= 2;
        }
        out
    }

    /// Full right-handed twist on strands with linking number d; over a ring
    /// with T⁴ = 1 and d ≡ 2 (mod 4) c is moved to the generator so η ≠ 0.
    pub fn twist(d: i64, sigma_in: i64, sigma_out: i64, ring: RingSpec) -> Result<Self> {
        let c = if ring.t4_is_one() && d.rem_euclid(4) == 2 { 1 } else { 0 };
        Self::new(vec![d], vec![c], 0, sigma_in, sigma_out)
    }
}

/// Minimal reducibles of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibleSummary {
    pub kappa_min: BigRational,
    /// Minimizing classes z on the unblown lattice.
    pub minimizers: Vec<Vec<i64>>,
    pub eta: LaurentPoly,
    /// (2z − c)·S plus the exceptional contributions.
    pub nu_values: BTreeSet<i64>,
    /// The same, shifted by ½S·S (centred at the reducible of the unknot).
    pub nu_centered: BTreeSet<i64>,
    pub index_min: i64,
    /// (index + 1)/2 when the index is odd.
    pub level: Option<i64>,
}

/// For each coordinate, the z minimizing |4z + s − 2c|.
fn coordinate_minimizers(s: i64, c: i64) -> (i64, Vec<i64>) {
    let m = s - 2 * c;
    let lo = (-m).div_euclid(4);
    let cands = [lo, lo + 1];
    let best = cands.iter().map(|z| (4 * z + m).abs()).min().expect("two candidates");
    (best, cands.into_iter().filter(|z| (4 * z + m).abs() == best).collect())
}

fn cartesian(choices: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for ch in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| ch.iter().map(move |&z| [prefix.clone(), vec![z]].concat()))
            .collect();
    }
    out
}

pub fn reducible_summary(data: &CobordismData, ring: RingSpec) -> Result<ReducibleSummary> {
    let mut kappa4 = 0i64; // 16κ
    let mut choices = Vec::new();
    for (&s, &c) in data.surface.iter().zip(&data.c) {
        let (b, zs) = coordinate_minimizers(s, c);
        kappa4 += b * b;
        choices.push(zs);
    }
    let minimizers = cartesian(&choices);
    let base_kappa = rat(kappa4, 16);
    let ss = data.self_intersection();

    let mut base_nu = BTreeSet::new();
    let mut eta = LaurentPoly::zero();
    for z in &minimizers {
        let nu: i64 = -z.iter().zip(&data.surface).zip(&data.c).map(|((z, s), c)| (2 * z - c) * s).sum::<i64>();
        let sq: i64 = z.iter().map(|z| z * z).sum();
        base_nu.insert(nu);
        eta.add_term(nu.into(), if sq % 2 == 0 { BigInt::one() } else { -BigInt::one() });
    }

    // blow-up at the positive double points
    let (kappa, eta, nu_values, ss_bar) = if ring.t4_is_one() {
        // c̄ = c − Σeᵢ: exceptional coordinates contribute nothing
        (base_kappa.clone(), eta, base_nu, ss - 4 * data.s_plus)
    } else {
        let factor = (&LaurentPoly::one() - &LaurentPoly::monomial(1, 4)).pow(data.s_plus as u32);
        let mut nus = BTreeSet::new();
        for nu in &base_nu {
            for k in 0..=data.s_plus {
                nus.insert(nu + 4 * k);
            }
        }
        (&base_kappa + rat(data.s_plus, 4), &eta * &factor, nus, ss - 4 * data.s_plus)
    };
    let eta = ring.reduce(&eta);

    // 8κ − 3/2(χ+σ) + χ(S) + ½S·S + σ_in − σ_out − 1 on the blown-up pair
    let chi_bar = data.chi_w + data.s_plus + data.s_minus;
    let sigma_bar = data.sigma_w - data.s_plus - data.s_minus;
    let index = int(8) * &kappa - rat(3 * (chi_bar + sigma_bar), 2) + int(data.chi_s) + rat(ss_bar, 2) + int(data.sigma_in - data.sigma_out - 1);
    if !index.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "index {index} is not an integer; the data do not describe a pair"
        )));
    }
    let index_min = index.to_integer().to_i64().expect("small index");
    let level = (index_min.rem_euclid(2) == 1).then(|| (index_min + 1) / 2);
    let nu_centered = nu_values.iter().map(|nu| nu + ss / 2).collect();
    Ok(ReducibleSummary {
        kappa_min: kappa,
        minimizers,
        eta,
        nu_values,
        nu_centered,
        index_min,
        level,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    ClaspPlus,
    Unknotting,
    Crosscap,
    GammaShift,
    HShift,
    SliceObstruction,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundKind::ClaspPlus => "clasp_plus",
            BoundKind::Unknotting => "unknotting",
            BoundKind::Crosscap => "crosscap",
            BoundKind::GammaShift => "gamma_shift",
            BoundKind::HShift => "h_shift",
            BoundKind::SliceObstruction => "slice_obstruction",
        };
        f.write_str(s)
    }
}

/// One value a bound was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInput {
    pub invariant: String,
    pub knot: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRecord {
    pub kind: BoundKind,
    pub statement: String,
    pub value: BigRational,
    pub inputs: Vec<BoundInput>,
}

impl BoundRecord {
    fn new(kind: BoundKind, statement: String, value: BigRational) -> Self {
        Self {
            kind,
            statement,
            value,
            inputs: Vec::new(),
        }
    }

    fn input(mut self, invariant: &str, knot: &str, value: impl fmt::Display) -> Self {
        self.inputs.push(BoundInput {
            invariant: invariant.into(),
            knot: knot.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.to_string(),
            "statement": self.statement,
            "value": self.value.to_string(),
            "inputs": self.inputs.iter().map(|i| json!({"invariant": i.invariant, "knot": i.knot, "value": i.value})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for BoundRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.statement)
    }
}

/// ε_𝒮: 0 when T⁴ ≠ 1, s₊ when T⁴ = 1.
fn eps_s(data: &CobordismData, ring: RingSpec) -> i64 {
    if ring.t4_is_one() {
        data.s_plus
    } else {
        0
    }
}

/// h(out) − h(in) ≥ 4κ_min − g + ¼S·S − ε − ½(σ_out − σ_in).
pub fn h_shift_bound(data: &CobordismData, ring: RingSpec) -> Result<BoundRecord> {
    let r = reducible_summary(data, ring)?;
    if r.eta.is_zero() {
        return Err(Error::NoBound(format!("eta vanishes over {ring}")));
    }
    let base_kappa = if ring.t4_is_one() {
        r.kappa_min.clone()
    } else {
        &r.kappa_min - rat(data.s_plus, 4)
    };
    let rhs = int(4) * base_kappa - int(data.genus) + rat(data.self_intersection(), 4) - int(eps_s(data, ring)) - rat(data.sigma_out - data.sigma_in, 2);
    let statement = format!("h(out) - h(in) >= {rhs}");
    Ok(BoundRecord::new(BoundKind::HShift, statement, rhs)
        .input("kappa_min", "", &r.kappa_min)
        .input("sigma", "in", data.sigma_in)
        .input("sigma", "out", data.sigma_out))
}

/// The shift i for Γ along a cobordism, and the additive constant
/// 2κ_min + ½(s₊ − ε_R).
pub fn gamma_shift_terms(data: &CobordismData, ring: RingSpec) -> Result<(BigRational, BigRational)> {
    let r = reducible_summary(data, ring)?;
    if r.eta.is_zero() {
        return Err(Error::NoBound(format!("eta vanishes over {ring}")));
    }
    let base_kappa = if ring.t4_is_one() {
        r.kappa_min.clone()
    } else {
        &r.kappa_min - rat(data.s_plus, 4)
    };
    let e = eps_s(data, ring);
    let i = int(4) * &base_kappa - int(data.genus) + rat(data.self_intersection(), 4) - int(e) + rat(data.sigma_in - data.sigma_out, 2);
    let add = int(2) * base_kappa + rat(data.s_plus - e, 2);
    Ok((i, add))
}

fn checked_shift(i: BigRational) -> Result<i64> {
    if !i.is_integer() {
        return Err(Error::InvalidArgument(format!("shift {i} is not an integer")));
    }
    let i = i.to_integer().to_i64().expect("small shift");
    if i < 0 {
        return Err(Error::HypothesisViolated(format!("shift i = {i} is negative")));
    }
    Ok(i)
}

/// Γ_out(k + i) ≤ 2κ_min + ½(s₊ − ε_R) + Γ_in(k), for i ≥ 0.
pub fn gamma_shift_bound(data: &CobordismData, k: i64, ring: RingSpec, gamma_in: &GammaValue) -> Result<BoundRecord> {
    let (i, add) = gamma_shift_terms(data, ring)?;
    let i = checked_shift(i)?;
    let GammaValue::Finite(g) = gamma_in else {
        return Err(Error::NoBound("incoming gamma is infinite".into()));
    };
    let value = add + g;
    Ok(BoundRecord::new(BoundKind::GammaShift, format!("Gamma_out({}) <= {value}", k + i), value).input("Gamma", "in", gamma_in))
}

/// ε_R(d) for an embedded cobordism of degree d in I×S³ # CP̄².
pub fn epsilon_r(ring: RingSpec, d: i64, s_plus: i64) -> BigRational {
    match (ring.t4_is_one(), d) {
        (false, 0) => int(s_plus),
        (false, d) if d % 2 == 0 => int(1 + s_plus),
        (false, _) => rat(1, 4) + int(s_plus),
        (true, d) if d % 2 == 0 => BigRational::zero(),
        (true, _) => rat(1, 4),
    }
}

/// Shift and bound for a degree-d cobordism K → K' in I×S³ # CP̄²:
/// i = ε_R(d) − d²/4 − s₊ + ½σ(K) − ½σ(K') − g and Γ_{K'}(k+i) ≤ ε_R(d)/2 + Γ_K(k).
pub fn gamma_shift_blowup(d: i64, s_plus: i64, genus: i64, sigma_in: i64, sigma_out: i64, ring: RingSpec) -> Result<(i64, BigRational)> {
    let e = epsilon_r(ring, d, s_plus);
    let i = &e - rat(d * d, 4) - int(s_plus) + rat(sigma_in - sigma_out, 2) - int(genus);
    Ok((checked_shift(i)?, e / int(2)))
}

/// Whether `knot` bounds an annulus of degree d from the unknot in I×S³ # CP̄²
/// is ruled out by Γ.
pub fn cp2_annulus_obstruction(knot: &KnotSpec, d: i64, ring: RingSpec) -> Result<BoundRecord> {
    let sigma = signature(knot)?;
    let (i, add) = gamma_shift_blowup(d, 0, 0, 0, sigma, ring)?;
    let actual = certified_gamma(knot, i, ring)?.ok_or_else(|| Error::NoBound(format!("Gamma unavailable for {knot}")))?;
    let obstructed = match &actual {
        GammaValue::Finite(x) => *x > add,
        GammaValue::Infinite => true,
    };
    let statement = if obstructed {
        format!("no degree-{d} annulus: Gamma({i}) = {actual} > {add}")
    } else {
        format!("Gamma({i}) = {actual} <= {add}; no obstruction")
    };
    Ok(BoundRecord::new(BoundKind::SliceObstruction, statement, add).input("Gamma", &knot.to_string(), actual))
}

/// Leaves whose complexes are known exactly (not only up to the v-model).
fn exact_complex(knot: &KnotSpec, ring: RingSpec) -> Option<SComplex> {
    let exact = knot.summands().iter().all(|(k, _)| match k {
        KnotSpec::Unknot | KnotSpec::DoubleTwist(..) => true,
        KnotSpec::Torus(p, q) => p.min(q) <= &2,
        _ => false,
    });
    if !exact {
        return None;
    }
    catalog_complex(knot, true, ring).ok()
}

/// Γ(ℓ), or a certified lower bound for it, when one is available.
pub fn certified_gamma(knot: &KnotSpec, l: i64, ring: RingSpec) -> Result<Option<GammaValue>> {
    let atoms: Option<Vec<BigRational>> = knot
        .summands()
        .iter()
        .filter(|(k, _)| *k != KnotSpec::Unknot)
        .map(|(k, mirrored)| match k {
            KnotSpec::DoubleTwist(m, n) if !mirrored => Some(double_twist_parameter(*m, *n)),
            _ => None,
        })
        .collect();
    if let Some(ts) = atoms {
        return Ok(Some(gamma_closed_form_atoms(&ts, l)));
    }
    if let Some(c) = exact_complex(knot, ring) {
        return Ok(Some(gamma(&c, l)?));
    }
    if let (KnotSpec::TwoBridge(p, q), true) = (knot, l >= 1) {
        return Ok(Some(gamma_lower_bound_two_bridge(*p, *q, l)?));
    }
    Ok(None)
}

fn ceil2(x: &BigRational) -> i64 {
    (x * int(2)).ceil().to_integer().to_i64().expect("small bound")
}

/// Bounds on the clasp number, unknotting number and crosscap number.
pub fn concordance_bounds(knot: &KnotSpec, upper_hint: Option<i64>) -> Result<Vec<BoundRecord>> {
    let name = knot.to_string();
    let sigma = signature(knot)?;
    let mut out = Vec::new();
    let l = -sigma / 2;
    if l >= 0 {
        if let Some(g) = certified_gamma(knot, l, RingSpec::Generic)? {
            match &g {
                GammaValue::Finite(x) => {
                    let c = ceil2(x);
                    out.push(
                        BoundRecord::new(BoundKind::ClaspPlus, format!("c_s+({name}) >= {c}"), int(c))
                            .input("Gamma", &name, format!("({l}) >= {g}"))
                            .input("sigma", &name, sigma),
                    );
                    out.push(BoundRecord::new(BoundKind::Unknotting, format!("u({name}) >= {c}"), int(c)).input("c_s+", &name, c));
                    if upper_hint == Some(c) {
                        out.push(
                            BoundRecord::new(BoundKind::Unknotting, format!("u({name}) = c_s+({name}) = {c}"), int(c))
                                .input("c_s+", &name, c)
                                .input("upper", &name, c),
                        );
                    }
                }
                GammaValue::Infinite => {}
            }
        }
    }
    let h = h_t4(knot)?;
    out.push(BoundRecord::new(BoundKind::Crosscap, format!("gamma_4({name}) >= {}", h.abs()), int(h.abs())).input("h_t4", &name, h));
    Ok(out)
}

/// Bounds on the smooth 4-genus: ½|σ| from below, Σ genus(leaf) from above,
/// where double twist and 2-strand torus leaves have genus 1 and (n−1)/2.
pub fn slice_genus_bounds(knot: &KnotSpec) -> Result<(i64, Option<i64>)> {
    let lower = signature(knot)?.abs() / 2;
    let mut upper = Some(0);
    for (k, _) in knot.summands() {
        let g = match k {
            KnotSpec::Unknot => Some(0),
            KnotSpec::DoubleTwist(..) => Some(1),
            KnotSpec::Torus(p, q) => Some((p - 1) * (q - 1) / 2),
            _ => None,
        };
        upper = upper.zip(g).map(|(a, b)| a + b);
    }
    Ok((lower, upper))
}

/// Clasp-number data for n·D_{m,n'}: (Γ(n), c_s⁺ lower bound, g_s, c_s⁺ − g_s lower bound).
pub fn clasp_row(knot: &KnotSpec) -> Result<(GammaValue, i64, i64, i64)> {
    let sigma = signature(knot)?;
    let l = -sigma / 2;
    let g = certified_gamma(knot, l, RingSpec::Generic)?.ok_or_else(|| Error::NoBound(format!("Gamma unavailable for {knot}")))?;
    let GammaValue::Finite(x) = &g else {
        return Err(Error::NoBound("Gamma is infinite".into()));
    };
    let c = ceil2(x);
    let (lo, hi) = slice_genus_bounds(knot)?;
    if hi != Some(lo) {
        return Err(Error::NoBound(format!("slice genus of {knot} not pinned")));
    }
    Ok((g.clone(), c, lo, c - lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_sphere() {
        let d = CobordismData::new(vec![2], vec![0], 0, 0, -2).unwrap();
        let r = reducible_summary(&d, RingSpec::Generic).unwrap();
        assert_eq!(r.kappa_min, rat(1, 4));
        assert_eq!(r.minimizers, vec![vec![-1], vec![0]]);
        assert_eq!(r.nu_values, [0, 4].into_iter().collect());
        assert_eq!(r.nu_centered, [-2, 2].into_iter().collect());
        assert_eq!(r.eta, LaurentPoly::parse("1 - T^4").unwrap());
        assert_eq!(r.level, Some(1));
        let h = h_shift_bound(&d, RingSpec::Generic).unwrap();
        assert_eq!(h.value, int(1));
    }

    #[test]
    fn odd_degree_spheres() {
        for m in (1..=9).step_by(2) {
            let sigma = -(m - 1) * (m + 3) / 2;
            let d = CobordismData::new(vec![m], vec![0], 0, 0, sigma).unwrap();
            let r = reducible_summary(&d, RingSpec::Generic).unwrap();
            assert_eq!(r.kappa_min, rat(1, 16));
            assert_eq!(r.minimizers.len(), 1);
            assert_eq!(h_shift_bound(&d, RingSpec::Generic).unwrap().value, int((m - 1) / 2));
        }
    }

    #[test]
    fn blow_up_bookkeeping() {
        let base = CobordismData::new(vec![2], vec![0], 0, 0, -2).unwrap();
        let eta0 = reducible_summary(&base, RingSpec::Generic).unwrap().eta;
        let one_minus = &LaurentPoly::one() - &LaurentPoly::monomial(1, 4);
        for s in 0..=4 {
            let d = base.clone().with_double_points(s, 0).unwrap();
            let g = reducible_summary(&d, RingSpec::Generic).unwrap();
            assert_eq!(g.eta, &one_minus.pow(s as u32) * &eta0);
            assert_eq!(g.kappa_min, rat(1, 4) + rat(s, 4));
            let t = reducible_summary(&d, RingSpec::T4).unwrap();
            assert_eq!(t.kappa_min, rat(1, 4));
        }
    }

    #[test]
    fn epsilon_table() {
        assert_eq!(epsilon_r(RingSpec::Generic, 2, 0), int(1));
        assert_eq!(epsilon_r(RingSpec::Generic, 0, 3), int(3));
        assert_eq!(epsilon_r(RingSpec::Generic, 3, 1), rat(5, 4));
        assert_eq!(epsilon_r(RingSpec::T4, 4, 2), int(0));
        assert_eq!(epsilon_r(RingSpec::T4, 1, 2), rat(1, 4));
    }

    #[test]
    fn twist_in_t4() {
        for d in 1..8 {
            let data = CobordismData::twist(d, 0, 0, RingSpec::T4).unwrap();
            let b = h_shift_bound(&data, RingSpec::T4).unwrap();
            assert_eq!(b.value, int(-(d * d / 4)), "d = {d}");
        }
    }

    #[test]
    fn negative_shift_is_refused() {
        let d = CobordismData::new(vec![], vec![], 1, 0, 0).unwrap();
        assert!(matches!(
            gamma_shift_bound(&d, 0, RingSpec::Generic, &GammaValue::zero()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn seven_four_not_slice_in_cp2() {
        let r = cp2_annulus_obstruction(&KnotSpec::DoubleTwist(2, 2), 2, RingSpec::Generic).unwrap();
        assert_eq!(r.value, rat(1, 2));
        assert!(r.statement.starts_with("no degree-2 annulus"), "{}", r.statement);
    }

    #[test]
    fn eleven_crossing_certificates() {
        for (p, q, hint) in [(97, 26, 3), (61, 42, 3), (57, 10, 3), (51, 16, 4)] {
            let k = KnotSpec::two_bridge(p, q).unwrap();
            let b = concordance_bounds(&k, Some(hint)).unwrap();
            assert!(
                b.iter().any(|r| r.kind == BoundKind::Unknotting && r.statement.contains(" = c_s+")),
                "{p}/{q}: {b:?}"
            );
        }
    }

    #[test]
    fn clasp_rows() {
        for n in 1..=10i64 {
            let k = KnotSpec::multiple(KnotSpec::DoubleTwist(2, 2), n as usize);
            let (g, c, gs, diff) = clasp_row(&k).unwrap();
            assert_eq!(g, GammaValue::ratio(3 * n, 5));
            assert_eq!((c, gs, diff), ((6 * n + 4) / 5, n, (n + 4) / 5));
        }
    }
}
