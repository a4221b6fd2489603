use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::build::build_two_bridge_complex;
use crate::algebra::intlin::{integer_kernel, IntMat};
use crate::error::{Error, Result};
use crate::invariants::GammaValue;

/// Lower bound for Γ(ℓ), ℓ ≥ 1, using only d, δ₁ and the admissible v-support.
///
/// A witness α of grade 2ℓ−1 must be a d-cycle with a nonzero coefficient on
/// some generator joined to the support of δ₁ by ℓ−1 admissible v-arrows. The
/// bound is the least threshold t for which such a cycle exists among the
/// generators of shifted idegree at most t.
pub fn gamma_lower_bound_two_bridge(p: i64, q: i64, l: i64) -> Result<GammaValue> {
    if l < 1 {
        return Err(Error::InvalidArgument(format!("level must be positive, got {l}")));
    }
    let b = build_two_bridge_complex(p, q)?;
    let c = &b.complex;
    let n = c.rank();

    // generators reaching δ₁ in exactly ℓ−1 arrows
    let mut reach: BTreeSet<usize> = c.delta1.iter().map(|(_, s, _)| s).collect();
    for _ in 1..l {
        reach = b.vsupport.odd_pairs().filter(|&(_, j)| reach.contains(&(j - 1))).map(|(i, _)| i - 1).collect();
    }

    let class: Vec<(usize, BigRational)> = (0..n)
        .filter_map(|r| {
            let g = c.grading(r);
            let diff = 2 * l - 1 - g.zgrade;
            (diff.rem_euclid(4) == 0).then(|| (r, &g.idegree + BigRational::from_integer((diff / 4).into())))
        })
        .collect();
    let mut thresholds: Vec<BigRational> = class.iter().filter(|(r, _)| reach.contains(r)).map(|(_, t)| t.clone()).collect();
    thresholds.sort();
    thresholds.dedup();
    let Some(first) = thresholds.first().cloned() else {
        return Ok(GammaValue::Infinite);
    };
    let mut levels: Vec<BigRational> = class.iter().map(|(_, t)| t.clone()).filter(|t| *t >= first).collect();
    levels.sort();
    levels.dedup();

    for t in levels {
        let cols: Vec<usize> = class.iter().filter(|(_, s)| *s <= t).map(|(r, _)| *r).collect();
        let a: IntMat = (0..n)
            .map(|row| {
                cols.iter()
                    .map(|&col| {
                        c.d.get(row, col)
                            .map(|x| x.as_eps_monomial().expect("ε multiple").0)
                            .unwrap_or_else(BigInt::zero)
                    })
                    .collect()
            })
            .collect();
        let kernel = integer_kernel(&a, cols.len());
        let hit = kernel.iter().any(|v| cols.iter().zip(v).any(|(r, x)| !x.is_zero() && reach.contains(r)));
        if hit {
            return Ok(GammaValue::Finite(t));
        }
    }
    Ok(GammaValue::Infinite)
}
