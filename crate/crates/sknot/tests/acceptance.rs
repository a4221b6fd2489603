//! Acceptance checks: one PASS/FAIL line per criterion, exact arithmetic throughout.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sknot::algebra::{LaurentPoly, RingSpec};
use sknot::cobordism::{clasp_row, concordance_bounds, reducible_summary, BoundKind, CobordismData};
use sknot::equivariant::{basechange_bn, bn_p, hat_complex_rank, ideal_ik, ideal_ik_gradings, j_ideals_uniform, MPoly, PolyIdeal};
use sknot::invariants::{gamma, gamma_closed_form_atoms, gamma_function, h_field, h_t4, GammaValue};
use sknot::scomplex::{atom, tensor, Bigrading, SComplex};
use sknot::twobridge::{
    build_two_bridge_complex, double_twist_parameter, gamma_lower_bound_two_bridge, lattice_counts, torus_two_complex, two_bridge_signature, KnotSpec,
};

type Check = Result<(), String>;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog(max_p: i64) -> impl Iterator<Item = (i64, i64)> {
    (3..=max_p).step_by(2).flat_map(|p| (1..p).filter(move |q| p.gcd(q) == 1).map(move |q| (p, q)))
}

// Catalog complexes for p ≤ 99, built once; the first criterion to ask pays for the build.
fn built(max_p: i64) -> Result<impl Iterator<Item = &'static (i64, i64, SComplex)>, String> {
    static CATALOG: OnceLock<Result<Vec<(i64, i64, SComplex)>, String>> = OnceLock::new();
    let all = CATALOG.get_or_init(|| {
        catalog(99)
            .map(|(p, q)| build_two_bridge_complex(p, q).map(|b| (p, q, b.complex)).map_err(|e| format!("({p},{q}): {e}")))
            .collect()
    });
    Ok(all.as_ref().map_err(Clone::clone)?.iter().filter(move |e| e.0 <= max_p))
}

// Oracle: signature from the even continued fraction of p/q' (q' ≡ q, q' even),
// read off a tridiagonal form by LDLᵀ pivots.
fn signature_oracle(p: i64, q: i64) -> i64 {
    let qe = if q % 2 == 0 { q } else { q - p };
    let mut x = r(p, qe);
    let mut cf = Vec::new();
    loop {
        let half = &x / r(2, 1);
        let mut a: BigInt = half.round().to_integer() * 2;
        if a.is_zero() {
            a = if x > BigRational::zero() { 2.into() } else { (-2).into() };
        }
        let ar = BigRational::from_integer(a.clone());
        cf.push(ar.clone());
        if x == ar {
            break;
        }
        x = BigRational::one() / (ar - x);
    }
    let mut piv: Option<BigRational> = None;
    let mut s = 0;
    for a in cf {
        let next = match piv {
            None => a,
            Some(pv) => a - BigRational::one() / pv,
        };
        s += if next > BigRational::zero() { 1 } else { -1 };
        piv = Some(next);
    }
    -s
}

// 1
fn torus_gamma() -> Check {
    for k in 1..=6i64 {
        let p = 2 * k + 1;
        let c = build_two_bridge_complex(p, 2 * k).map_err(|e| e.to_string())?.complex;
        for i in -3..=k + 2 {
            let expect = if i <= 0 {
                GammaValue::zero()
            } else if i > k {
                GammaValue::Infinite
            } else {
                GammaValue::ratio(i * i, p)
            };
            let got = gamma(&c, i).map_err(|e| e.to_string())?;
            ensure(got == expect, || format!("T(2,{p}) Gamma({i}) = {got}, expected {expect}"))?;
        }
    }
    Ok(())
}

// 2
fn dtwist_gamma() -> Check {
    for m in 1..=4 {
        for n in 1..=4 {
            let t = double_twist_parameter(m, n);
            ensure(t == r((2 * m - 1) * (2 * n - 1), 4 * m * n - 1), || format!("D({m},{n}) parameter {t}"))?;
            let a = atom(&t).map_err(|e| e.to_string())?;
            let mut c = SComplex::trivial(RingSpec::Generic);
            for k in 1..=6i64 {
                c = tensor(&c, &a).map_err(|e| e.to_string())?;
                let ts = vec![t.clone(); k as usize];
                for i in 1..=k {
                    let expect = GammaValue::Finite(BigRational::from_integer(i.into()) * &t);
                    let closed = gamma_closed_form_atoms(&ts, i);
                    let tens = gamma(&c, i).map_err(|e| e.to_string())?;
                    ensure(closed == expect && tens == expect, || {
                        format!("{k} D({m},{n}) Gamma({i}): closed {closed}, tensor {tens}, expected {expect}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

// 3
fn clasp() -> Check {
    for n in 1..=10i64 {
        let k = KnotSpec::multiple(KnotSpec::DoubleTwist(2, 2), n as usize);
        let (g, c, gs, diff) = clasp_row(&k).map_err(|e| e.to_string())?;
        let ceil6 = (6 * n + 4) / 5;
        let ceil1 = (n + 4) / 5;
        ensure(g == GammaValue::ratio(3 * n, 5), || format!("n={n}: Gamma = {g}"))?;
        ensure(c >= ceil6 && gs == n && diff >= ceil1 && diff == c - gs, || {
            format!("n={n}: c_s+ >= {c}, g_s = {gs}, excess {diff}")
        })?;
    }
    Ok(())
}

// 4
fn golden() -> Check {
    let b = build_two_bridge_complex(15, 4).map_err(|e| e.to_string())?;
    let c = &b.complex;
    ensure(c.rank() == 7, || format!("(15,4) has {} generators", c.rank()))?;
    let fig2 = [(1, 2, 11), (2, 3, 14), (3, 1, 9), (4, 2, 11), (5, 4, 20), (6, 5, 21), (7, 3, 14)];
    for (i, z, num) in fig2 {
        let g = c.grading(b.index(i));
        ensure(*g == Bigrading::new(z, r(num, 15)), || format!("(15,4) zeta^{i} at {g}"))?;
    }
    ensure(c.delta2.is_zero(), || "(15,4) delta2 nonzero".into())?;
    let d1: Vec<usize> = c.delta1.iter().map(|(_, s, _)| s).collect();
    ensure(d1 == vec![b.index(3)], || format!("(15,4) delta1 support {d1:?}"))?;
    ensure(c.validate().passed(), || "(15,4) fails validation".into())?;

    let b = build_two_bridge_complex(51, 16).map_err(|e| e.to_string())?;
    for (i, z, num) in [(3, 1, 9), (6, 3, 36), (9, 5, 81)] {
        let g = b.complex.grading(b.index(i));
        ensure(*g == Bigrading::new(z, r(num, 51)), || format!("(51,16) zeta^{i} at {g}"))?;
    }
    let chain: Vec<GammaValue> = (1..=3)
        .map(|l| gamma_lower_bound_two_bridge(51, 16, l))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(
        chain == vec![GammaValue::ratio(3, 17), GammaValue::ratio(12, 17), GammaValue::ratio(27, 17)],
        || format!("(51,16) chain {chain:?}"),
    )
}

// 5
fn certificates() -> Check {
    let cases = [
        (97, 26, 2, (104, 97), 3),
        (61, 42, 2, (62, 61), 3),
        (57, 10, 2, (62, 57), 3),
        (51, 16, 3, (27, 17), 4),
    ];
    for (p, q, l, (num, den), u) in cases {
        ensure(-signature_oracle(p, q) / 2 == l, || format!("({p},{q}) -sigma/2 != {l}"))?;
        let lb = gamma_lower_bound_two_bridge(p, q, l).map_err(|e| e.to_string())?;
        ensure(lb >= GammaValue::ratio(num, den), || format!("({p},{q}) Gamma({l}) >= {lb}"))?;
        let k = KnotSpec::two_bridge(p, q).map_err(|e| e.to_string())?;
        let b = concordance_bounds(&k, Some(u)).map_err(|e| e.to_string())?;
        let clasp = b.iter().find(|x| x.kind == BoundKind::ClaspPlus).ok_or(format!("({p},{q}) no clasp bound"))?;
        ensure(clasp.value == BigRational::from_integer(u.into()), || {
            format!("({p},{q}) clasp bound {}", clasp.value)
        })?;
        ensure(
            b.iter()
                .any(|x| x.kind == BoundKind::Unknotting && x.inputs.iter().any(|i| i.invariant == "upper")),
            || format!("({p},{q}) no certificate"),
        )?;
    }
    Ok(())
}

// 6
fn signature_rule() -> Check {
    for (p, q, c) in built(99)? {
        let (p, q) = (*p, *q);
        let sigma = signature_oracle(p, q);
        ensure(two_bridge_signature(p, q) == sigma, || {
            format!("({p},{q}) signature {} vs oracle {sigma}", two_bridge_signature(p, q))
        })?;
        let h = h_field(c, RingSpec::Generic).map_err(|e| e.to_string())?;
        ensure(h == -sigma / 2, || format!("({p},{q}) h = {h}, sigma = {sigma}"))?;
    }
    for k in 1..=6 {
        let h = h_field(&torus_two_complex(k, RingSpec::Generic), RingSpec::Generic).map_err(|e| e.to_string())?;
        ensure(h == k, || format!("T(2,{}) h = {h}", 2 * k + 1))?;
    }
    Ok(())
}

// 7
fn t4_values() -> Check {
    for (p, q, c) in built(99)? {
        let k = KnotSpec::TwoBridge(*p, *q);
        ensure(h_t4(&k) == Ok(0), || format!("({p},{q}) h_t4 rule"))?;
        let h = h_field(c, RingSpec::T4).map_err(|e| e.to_string())?;
        ensure(h == 0, || format!("({p},{q}) h over T^4 = 1 is {h}"))?;
    }
    ensure(h_t4(&KnotSpec::Torus(3, 4)) == Ok(1), || "h_t4(T(3,4))".into())?;
    ensure(h_t4(&KnotSpec::Torus(2, 3)) == Ok(0), || "h_t4(T(2,3))".into())?;
    let t23 = h_field(&torus_two_complex(1, RingSpec::Generic), RingSpec::T4).map_err(|e| e.to_string())?;
    ensure(t23 == 0, || format!("T(2,3) complex over T^4 = 1 gives {t23}"))?;
    for k in 1..=5usize {
        let knot = KnotSpec::multiple(KnotSpec::Torus(3, 4), k);
        let h = h_t4(&knot).map_err(|e| e.to_string())?;
        ensure(h.unsigned_abs() as usize == k, || format!("{k} T(3,4): h_t4 = {h}"))?;
        let b = concordance_bounds(&knot, None).map_err(|e| e.to_string())?;
        let cc = b.iter().find(|x| x.kind == BoundKind::Crosscap).ok_or("no crosscap bound")?;
        ensure(cc.value == BigRational::from_integer(k.into()), || {
            format!("{k} T(3,4): crosscap bound {}", cc.value)
        })?;
    }
    Ok(())
}

// Oracle: minimize the reducible energy over a box of classes, summing signed T-weights,
// with the exceptional classes of s₊ blow-ups enumerated explicitly.
fn reducible_oracle(s: &[i64], c: &[i64], s_plus: usize) -> (BigRational, LaurentPoly, BTreeSet<i64>) {
    let n = s.len();
    let mut best: Option<BigRational> = None;
    let mut terms: Vec<(i64, bool)> = Vec::new();
    let total = 11usize.pow(n as u32) << s_plus;
    for idx in 0..total {
        let mut t = idx;
        let ks: Vec<i64> = (0..s_plus)
            .map(|_| {
                let b = (t & 1) as i64;
                t >>= 1;
                b
            })
            .collect();
        let z: Vec<i64> = (0..n)
            .map(|_| {
                let v = (t % 11) as i64 - 5;
                t /= 11;
                v
            })
            .collect();
        let mut kappa = BigRational::zero();
        for i in 0..n {
            let x = BigRational::from_integer(z[i].into()) + r(s[i], 4) - r(c[i], 2);
            kappa += &x * &x;
        }
        for k in &ks {
            let x = BigRational::from_integer((*k).into()) - r(1, 2);
            kappa += &x * &x;
        }
        let nu = -(0..n).map(|i| (2 * z[i] - c[i]) * s[i]).sum::<i64>() + 4 * ks.iter().sum::<i64>();
        let odd = (z.iter().map(|v| v * v).sum::<i64>() + ks.iter().sum::<i64>()) % 2 == 1;
        match &best {
            Some(b) if kappa > *b => continue,
            Some(b) if kappa == *b => {}
            _ => {
                best = Some(kappa.clone());
                terms.clear();
            }
        }
        terms.push((nu, odd));
    }
    let mut eta = LaurentPoly::zero();
    for (nu, odd) in &terms {
        eta.add_term(BigInt::from(*nu), if *odd { -BigInt::one() } else { BigInt::one() });
    }
    (best.unwrap(), eta, terms.iter().map(|t| t.0).collect())
}

// 8
fn reducibles() -> Check {
    let s2 = CobordismData::new(vec![2], vec![0], 0, 0, -2).map_err(|e| e.to_string())?;
    let sum = reducible_summary(&s2, RingSpec::Generic).map_err(|e| e.to_string())?;
    ensure(sum.kappa_min == r(1, 4), || format!("S_2 kappa {}", sum.kappa_min))?;
    ensure(sum.eta == LaurentPoly::parse("1 - T^4").unwrap(), || format!("S_2 eta {}", sum.eta))?;
    ensure(sum.nu_centered == BTreeSet::from([-2, 2]), || format!("S_2 centred nu {:?}", sum.nu_centered))?;
    ensure(sum.nu_values == BTreeSet::from([0, 4]), || format!("S_2 nu {:?}", sum.nu_values))?;
    for m in (1..=9).step_by(2) {
        let d = CobordismData::new(vec![m], vec![0], 0, 0, 0).map_err(|e| e.to_string())?;
        let got = reducible_summary(&d, RingSpec::Generic).map_err(|e| e.to_string())?.kappa_min;
        let (oracle, _, _) = reducible_oracle(&[m], &[0], 0);
        ensure(got == r(1, 16) && oracle == got, || format!("S_{m} kappa {got} (oracle {oracle})"))?;
    }
    let one_minus = &LaurentPoly::one() - &LaurentPoly::monomial(1, 4);
    for (s, c) in [(vec![2], vec![0]), (vec![3], vec![0]), (vec![2, 1], vec![0, 1]), (vec![4], vec![1])] {
        let base = reducible_summary(
            &CobordismData::new(s.clone(), c.clone(), 0, 0, 0).map_err(|e| e.to_string())?,
            RingSpec::Generic,
        )
        .map_err(|e| e.to_string())?;
        for sp in 0..=4usize {
            let d = CobordismData::new(s.clone(), c.clone(), 0, 0, 0)
                .and_then(|d| d.with_double_points(sp as i64, 0))
                .map_err(|e| e.to_string())?;
            let got = reducible_summary(&d, RingSpec::Generic).map_err(|e| e.to_string())?;
            let (kappa, eta, nus) = reducible_oracle(&s, &c, sp);
            ensure(got.eta == &one_minus.pow(sp as u32) * &base.eta, || {
                format!("S={s:?} s+={sp}: eta {} is not (1-T^4)^s+ eta", got.eta)
            })?;
            ensure(got.eta == eta && got.kappa_min == kappa && got.nu_values == nus, || {
                format!("S={s:?} s+={sp}: disagrees with enumeration")
            })?;
        }
    }
    Ok(())
}

fn eps_pow_oracle(i: u32) -> MPoly {
    // (T² − T⁻²)ⁱ = Σ C(i,j)(−1)ʲ T^{2i−4j}
    let mut p = MPoly::zero();
    let mut binom = BigInt::one();
    for j in 0..=i as i64 {
        let sign = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
        p.add_term(vec![0, 2 * i as i64 - 4 * j], sign);
        binom = binom * (i as i64 - j) / (j + 1);
    }
    p
}

// 9
fn ideals() -> Check {
    for k in 0..=5u32 {
        let gens: Vec<MPoly> = (0..=k).map(|i| MPoly::monomial(1, vec![(k - i) as i64, 0]).mul(&eps_pow_oracle(i))).collect();
        let expect = PolyIdeal::new(&["x", "T"], &[false, true], false, gens);
        ensure(ideal_ik(k) == expect, || format!("I^{k} = {}", ideal_ik(k)))?;
        let gr = ideal_ik_gradings(k);
        let c = torus_two_complex(k as i64, RingSpec::Generic);
        for (i, g) in gr.iter().enumerate() {
            let gm = gamma(&c, i as i64).map_err(|e| e.to_string())?;
            ensure(g.zgrade == 2 * i as i64 && gm == GammaValue::Finite(g.idegree.clone()), || {
                format!("I^{k} grading {i}: {g}")
            })?;
        }
    }
    let t = ["T"];
    let eps_i = |i: u32| {
        let mut p = MPoly::zero();
        for (e, c) in eps_pow_oracle(i).terms() {
            p.add_term(vec![e[1]], c.clone());
        }
        PolyIdeal::new(&t, &[true], false, vec![p])
    };
    for (p, q, c) in built(51)? {
        let h = -signature_oracle(*p, *q) / 2;
        let js = j_ideals_uniform(c, h.min(0) - 2, h.max(0) + 2).map_err(|e| format!("({p},{q}): {e}"))?;
        for (i, j) in &js {
            let ok = if *i > h {
                j.is_zero()
            } else if *i <= 0 {
                j.is_unit()
            } else {
                *j == eps_i(*i as u32)
            };
            ensure(ok, || format!("({p},{q}) J_{i} = {j} with h = {h}"))?;
        }
    }
    let xe = ideal_ik(1).to_char2();
    let b = basechange_bn(&xe).map_err(|e| e.to_string())?;
    let t1 = MPoly::monomial(1, vec![2, 0, 0]).add(&MPoly::monomial(1, vec![-2, 0, 0]));
    let expect = PolyIdeal::new(&["T1", "T2", "T3"], &[true; 3], true, vec![bn_p(), t1]);
    ensure(b == expect, || format!("base change gives {b}"))
}

// 10
fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pool = Vec::new();
    for (p, q, c) in built(99)? {
        let (p, q) = (*p, *q);
        let rep = c.validate();
        ensure(rep.passed(), || format!("({p},{q}) fails {:?}", rep.identities()))?;
        let sigma = signature_oracle(p, q);
        ensure(c.euler_characteristic() == sigma / 2, || {
            format!("({p},{q}) euler {}", c.euler_characteristic())
        })?;
        let h = h_field(&c, RingSpec::Generic).map_err(|e| e.to_string())?;
        let hd = h_field(&c.dual(), RingSpec::Generic).map_err(|e| e.to_string())?;
        ensure(hd == -h, || format!("({p},{q}) h(dual) = {hd}, h = {h}"))?;
        if p <= 51 {
            let g = gamma_function(&c, -1, h.max(0) + 1).map_err(|e| e.to_string())?;
            ensure(g.is_monotone(), || format!("({p},{q}) Gamma not monotone"))?;
        }
        let hr = hat_complex_rank(&c).map_err(|e| e.to_string())?;
        ensure(hr.free_rank == 1, || format!("({p},{q}) hat free rank {}", hr.free_rank))?;
        if p <= 13 {
            pool.push(c.clone());
        }
    }
    for t in [r(1, 3), r(3, 5), r(9, 15)] {
        pool.push(atom(&t).map_err(|e| e.to_string())?);
    }
    for _ in 0..200 {
        let pick = |rng: &mut ChaCha8Rng| {
            let c = pool[rng.gen_range(0..pool.len())].clone();
            if rng.gen_bool(0.5) {
                c.dual()
            } else {
                c
            }
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let t = tensor(&a, &b).map_err(|e| e.to_string())?;
        let c = if t.rank() < 60 && rng.gen_bool(0.3) {
            tensor(&t, &pick(&mut rng)).map_err(|e| e.to_string())?
        } else {
            t
        };
        let rep = c.validate();
        ensure(rep.passed(), || format!("composition fails {:?}", rep.identities()))?;
        let h = h_field(&c, RingSpec::Generic).map_err(|e| e.to_string())?;
        let hd = h_field(&c.dual(), RingSpec::Generic).map_err(|e| e.to_string())?;
        ensure(hd == -h, || format!("composition h {h}, dual {hd}"))?;
    }
    for _ in 0..10_000 {
        let p = rng.gen_range(2..500);
        let q = rng.gen_range(-500..500);
        let (k1, k2) = (rng.gen_range(1..60), rng.gen_range(1..60));
        let (n1, n2) = lattice_counts(k1, k2, p, q);
        ensure(n1 % 2 == 1 && n2 % 2 == 0, || format!("lattice_counts({k1},{k2},{p},{q}) = ({n1},{n2})"))?;
    }
    for m in 1..=5i64 {
        for n in 1..=5i64 {
            let p = 4 * m * n - 1;
            for k1 in (1..=p + 1).step_by(2) {
                for k2 in (1..=p + 1).step_by(2) {
                    let counts = lattice_counts(k1, k2, p, 2 * n);
                    let trivial = k1 <= 2 * n - 1 && k2 <= 2 * m - 1;
                    ensure((counts == (1, 0)) == trivial, || format!("A({k1},{k2};{p},{}) = {counts:?}", 2 * n))?;
                    let three = (k1 == 1 && 2 * m + 1 <= k2 && k2 <= p - 2 * m) || (2 * n + 1 <= k1 && k1 <= p - 2 * n && k2 == 1);
                    ensure((counts == (1, 2)) == three, || format!("A({k1},{k2};{p},{}) = {counts:?}", 2 * n))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Check); 10] = [
        ("Gamma of T(2,2k+1)", 1, torus_gamma),
        ("Gamma of double twist sums", 5, dtwist_gamma),
        ("clasp number of n 7_4", 1, clasp),
        ("golden gradings of (15,4) and (51,16)", 1, golden),
        ("unknotting certificates", 2, certificates),
        ("h = -sigma/2", 10, signature_rule),
        ("T^4 = 1 values", 1, t4_values),
        ("reducible arithmetic", 1, reducibles),
        ("ideals", 2, ideals),
        ("property suites", 60, properties),
    ];
    let mut failed = 0;
    for (n, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let el = start.elapsed();
        let res = res.and_then(|_| ensure(el <= Duration::from_secs(*limit), || format!("took {el:.2?}, limit {limit} s")));
        match res {
            Ok(()) => println!("PASS {:>2} {name} ({:.3} s)", n + 1, el.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.3} s): {e}", n + 1, el.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
