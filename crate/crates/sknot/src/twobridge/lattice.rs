use num_integer::Integer;

/// Inverse of q modulo p, if it exists.
pub(crate) fn inverse_mod(q: i64, p: i64) -> Option<i64> {
    let e = q.rem_euclid(p).extended_gcd(&p);
    (e.gcd == 1).then(|| e.x.rem_euclid(p))
}

/// (N₁, N₂): solutions of a + qb ≡ 0 (mod p) strictly inside the box
/// |a| < k₁, |b| < k₂, and on its edges excluding corners.
pub fn lattice_counts(k1: i64, k2: i64, p: i64, q: i64) -> (u64, u64) {
    counts_capped(k1, k2, p, q, u64::MAX)
}

/// Like `lattice_counts`, but stops once N₁ + N₂ exceeds `cap`.
pub(crate) fn counts_capped(k1: i64, k2: i64, p: i64, q: i64, cap: u64) -> (u64, u64) {
    let (mut n1, mut n2) = (0u64, 0u64);
    let mut tally = |a: i64, b: i64| {
        let (ia, ib) = (a.abs() < k1, b.abs() < k2);
        if ia && ib {
            n1 += 1;
        } else if (a.abs() == k1 && ib) || (ia && b.abs() == k2) {
            n2 += 1;
        }
        n1 + n2 > cap
    };
    let q = q.rem_euclid(p);
    // walk the shorter side; the other coordinate is pinned to one residue class
    if k1 <= k2 {
        match inverse_mod(q, p) {
            Some(qi) => {
                for a in -k1..=k1 {
                    let r = (-a * qi).rem_euclid(p);
                    let mut b = r - p * ((r + k2).div_euclid(p));
                    while b <= k2 {
                        if tally(a, b) {
                            return (n1, n2);
                        }
                        b += p;
                    }
                }
            }
            None => {
                for a in -k1..=k1 {
                    for b in -k2..=k2 {
                        if (a + q * b).rem_euclid(p) == 0 && tally(a, b) {
                            return (n1, n2);
                        }
                    }
                }
            }
        }
    } else {
        for b in -k2..=k2 {
            let r = (-q * b).rem_euclid(p);
            let mut a = r - p * ((r + k1).div_euclid(p));
            while a <= k1 {
                if tally(a, b) {
                    return (n1, n2);
                }
                a += p;
            }
        }
    }
    (n1, n2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(k1: i64, k2: i64, p: i64, q: i64) -> (u64, u64) {
        let mut out = (0, 0);
        for a in -k1..=k1 {
            for b in -k2..=k2 {
                if (a + q * b).rem_euclid(p) != 0 {
                    continue;
                }
                let (ia, ib) = (a.abs() < k1, b.abs() < k2);
                if ia && ib {
                    out.0 += 1;
                } else if ia || ib {
                    out.1 += 1;
                }
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(lattice_counts(1, 1, 15, 4), (1, 0));
        assert_eq!(lattice_counts(3, 3, 15, 4), (1, 0));
        assert_eq!(lattice_counts(1, 3, 5, 4), (1, 2));
        assert_eq!(lattice_counts(1, 3, 3, 2), (1, 6));
    }

    #[test]
    fn matches_enumeration() {
        for p in [3, 5, 9, 15, 21, 51] {
            for q in 1..p {
                for k1 in 1..8 {
                    for k2 in 1..8 {
                        assert_eq!(lattice_counts(k1, k2, p, q), naive(k1, k2, p, q), "{k1} {k2} {p} {q}");
                    }
                }
            }
        }
    }
}
