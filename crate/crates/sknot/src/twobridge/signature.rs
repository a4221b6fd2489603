use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::KnotSpec;
use crate::error::{Error, Result};

/// σ(K), with the right-handed trefoil at −2.
pub fn signature(knot: &KnotSpec) -> Result<i64> {
    match knot {
        KnotSpec::Unknot => Ok(0),
        KnotSpec::TwoBridge(p, q) => Ok(two_bridge_signature(*p, *q)),
        KnotSpec::DoubleTwist(..) => {
            let (p, q) = knot.as_two_bridge().expect("double twist is 2-bridge");
            Ok(two_bridge_signature(p, q))
        }
        KnotSpec::Torus(p, q) => Ok(torus_signature(*p, *q)),
        KnotSpec::Mirror(k) => Ok(-signature(k)?),
        KnotSpec::Sum(a, b) => Ok(signature(a)? + signature(b)?),
    }
}

/// Signature of the 2-bridge knot with branched double cover L(p, q), p odd:
/// a sum of ±1 over the multiples of the odd representative of q.
pub fn two_bridge_signature(p: i64, q: i64) -> i64 {
    let q = q.rem_euclid(p);
    let q_odd = if q % 2 == 1 { q } else { q - p };
    (1..p).map(|i| if (i * q_odd).div_euclid(p) % 2 == 0 { 1 } else { -1 }).sum::<i64>()
}

/// Seifert form of T(p, q) as the tensor product of two chain matrices.
pub fn torus_seifert_matrix(p: i64, q: i64) -> Vec<Vec<i64>> {
    let chain = |n: i64| -> Vec<Vec<i64>> {
        let n = (n - 1).max(0) as usize;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            -1
                        } else if j == i + 1 {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let (a, b) = (chain(p), chain(q));
    let (na, nb) = (a.len(), b.len());
    let mut v = vec![vec![0; na * nb]; na * nb];
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    v[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    v
}

pub fn torus_signature(p: i64, q: i64) -> i64 {
    let v = torus_seifert_matrix(p, q);
    let n = v.len();
    let sym: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| v[i][j] + v[j][i]).collect()).collect();
    -symmetric_signature(&sym)
}

/// Signature of a symmetric integer matrix by congruence diagonalization.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut sig = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // replace e_k by e_k + e_j: diagonal becomes 2a_kj
                for c in 0..n {
                    let x = a[j][c].clone();
                    a[k][c] += x;
                }
                for r in 0..n {
                    let x = a[r][j].clone();
                    a[r][k] += x;
                }
            } else {
                continue;
            }
        }
        let piv = a[k][k].clone();
        sig += if piv.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for c in k..n {
                let x = &f * &a[k][c];
                a[i][c] -= x;
            }
            for r in k..n {
                let x = &f * &a[r][k];
                a[r][i] -= x;
            }
        }
    }
    sig
}

pub(crate) fn unsupported(knot: &KnotSpec) -> Error {
    Error::Unsupported(format!("no complex available for {knot}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Count of lattice points i/p + j/q in the middle band, minus the rest.
    fn brieskorn(p: i64, q: i64) -> i64 {
        let mut s = 0;
        for i in 1..p {
            for j in 1..q {
                let x = i * q + j * p;
                let band = 2 * x > p * q && 2 * x < 3 * p * q;
                s += if band { -1 } else { 1 };
            }
        }
        s
    }

    #[test]
    fn anchors() {
        assert_eq!(two_bridge_signature(3, 2), -2);
        assert_eq!(two_bridge_signature(5, 4), -4);
        assert_eq!(two_bridge_signature(15, 4), -2);
        assert_eq!(two_bridge_signature(3, 1), 2);
        assert_eq!(torus_signature(2, 3), -2);
        assert_eq!(torus_signature(3, 4), -6);
        assert_eq!(signature(&KnotSpec::DoubleTwist(2, 2)).unwrap(), -2);
    }

    #[test]
    fn torus_routes_agree() {
        for p in 2..7 {
            for q in p + 1..9 {
                if num_integer::gcd(p, q) == 1 {
                    assert_eq!(torus_signature(p, q), brieskorn(p, q), "T({p},{q})");
                }
            }
        }
        for k in 1..7 {
            assert_eq!(torus_signature(2, 2 * k + 1), two_bridge_signature(2 * k + 1, 2 * k));
        }
    }

    #[test]
    fn mirror_negates() {
        for p in (3..40).step_by(2) {
            for q in 1..p {
                if num_integer::gcd(p, q) == 1 {
                    assert_eq!(two_bridge_signature(p, p - q), -two_bridge_signature(p, q));
                }
            }
        }
    }
}
