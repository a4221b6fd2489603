//! Rank and kernels over the fraction field of the coefficient ring.
//!
//! Matrices whose entries are all of the form n·εᵏ and whose exponents split as
//! row weight + column weight are diagonally equivalent to their integer
//! coefficient matrix, so their rank is computed over ℚ (or 𝐅₂) directly.
//! Everything else goes through fraction-free elimination over ℤ[T^±1].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::matrix::ExactMatrix;
use super::ratfunc::RationalFunction;
use super::ring::RingSpec;
use super::sparse::{F2Echelon, IntEchelon, IntRow};

/// Rank over ℚ(T) (generic), 𝐅₂(T) (char2), or over ℚ with T ↦ 1 (t4).
pub fn rank_over_fraction_field(m: &ExactMatrix<LaurentPoly>, ring: RingSpec) -> usize {
    match ring {
        RingSpec::T4 => {
            let rows = int_rows(m, |p| p.terms().fold(BigInt::zero(), |a, (_, c)| a + c));
            rows.into_iter()
                .fold(IntEchelon::new(), |mut e, r| {
                    e.insert(r);
                    e
                })
                .rank()
        }
        RingSpec::Generic => match homogeneous_coefficients(m) {
            Some(c) => c
                .into_iter()
                .fold(IntEchelon::new(), |mut e, r| {
                    e.insert(r);
                    e
                })
                .rank(),
            None => fraction_free_rank(m, false),
        },
        RingSpec::Char2 => {
            let r = m.map(|p| p.reduce_char2());
            match homogeneous_char2(&r) {
                Some(rows) => {
                    let mut e = F2Echelon::new(m.cols());
                    for cols in rows {
                        e.insert_cols(&cols);
                    }
                    e.rank()
                }
                None => fraction_free_rank(&r, true),
            }
        }
    }
}

fn int_rows(m: &ExactMatrix<LaurentPoly>, f: impl Fn(&LaurentPoly) -> BigInt) -> Vec<IntRow> {
    let mut rows = vec![IntRow::new(); m.rows()];
    for (r, c, p) in m.iter() {
        let v = f(p);
        if !v.is_zero() {
            rows[r].insert(c, v);
        }
    }
    rows
}

/// Find row weights a and column weights b with exponent(i,j) = a_i + b_j.
fn split_weights(n_rows: usize, n_cols: usize, entries: &[(usize, usize, i64)]) -> bool {
    // nodes 0..n_rows are rows, n_rows.. are columns; potential p with e = p_r + p_c
    let n = n_rows + n_cols;
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(r, c, e) in entries {
        adj[r].push((n_rows + c, e));
        adj[n_rows + c].push((r, e));
    }
    let mut pot: Vec<Option<i64>> = vec![None; n];
    for s in 0..n {
        if pot[s].is_some() {
            continue;
        }
        pot[s] = Some(0);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let pu = pot[u].unwrap();
            for &(w, e) in &adj[u] {
                let want = e - pu;
                match pot[w] {
                    None => {
                        pot[w] = Some(want);
                        stack.push(w);
                    }
                    Some(pw) if pw != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Integer coefficient rows if every entry is n·εᵏ with split exponents.
pub fn homogeneous_coefficients(m: &ExactMatrix<LaurentPoly>) -> Option<Vec<IntRow>> {
    let mut entries = Vec::with_capacity(m.nnz());
    let mut rows = vec![IntRow::new(); m.rows()];
    for (r, c, p) in m.iter() {
        let (n, k) = p.as_eps_monomial()?;
        entries.push((r, c, k as i64));
        rows[r].insert(c, n);
    }
    split_weights(m.rows(), m.cols(), &entries).then_some(rows)
}

fn homogeneous_char2(m: &ExactMatrix<LaurentPoly>) -> Option<Vec<Vec<usize>>> {
    let mut entries = Vec::with_capacity(m.nnz());
    let mut rows = vec![Vec::new(); m.rows()];
    for (r, c, p) in m.iter() {
        let k = p.as_eps_monomial_char2()?;
        entries.push((r, c, k as i64));
        rows[r].push(c);
    }
    split_weights(m.rows(), m.cols(), &entries).then_some(rows)
}

fn normalize(p: LaurentPoly, char2: bool) -> LaurentPoly {
    if char2 {
        p.reduce_char2()
    } else {
        p
    }
}

/// Fraction-free row echelon form in place. Pivots are chosen with the
/// smallest exponent span in their column. Returns (row, column) of each pivot.
pub fn fraction_free_echelon(a: &mut [Vec<LaurentPoly>], char2: bool) -> Vec<(usize, usize)> {
    let n_rows = a.len();
    let n_cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut prev = LaurentPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let best = (r..n_rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| (a[i][c].span(), a[i][c].num_terms()));
        let Some(p) = best else { continue };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in (r + 1)..n_rows {
            let f = a[i][c].clone();
            for j in c..n_cols {
                let num = normalize(&(&piv * &a[i][j]) - &(&f * &a[r][j]), char2);
                a[i][j] = num.exact_div(&prev, char2).expect("fraction-free step must divide exactly");
            }
        }
        prev = piv;
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

fn fraction_free_rank(m: &ExactMatrix<LaurentPoly>, char2: bool) -> usize {
    let mut a = m.to_dense();
    fraction_free_echelon(&mut a, char2).len()
}

/// Basis of the right kernel of M over ℚ(T). Vectors are scaled to have
/// Laurent polynomial entries with unit content, no common power of T, and a
/// first nonzero entry with positive leading coefficient.
pub fn kernel_over_fraction_field(m: &ExactMatrix<RationalFunction>) -> Vec<Vec<RationalFunction>> {
    let n = m.cols();
    let mut a: Vec<Vec<LaurentPoly>> = (0..m.rows())
        .map(|i| {
            let row: Vec<RationalFunction> = (0..n).map(|j| m.get_or_zero(i, j)).collect();
            let l = row.iter().fold(LaurentPoly::one(), |acc, x| if x.is_zero() { acc } else { &acc * &x.den });
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        LaurentPoly::zero()
                    } else {
                        (&x.num * &l).exact_div(&x.den, false).unwrap()
                    }
                })
                .collect()
        })
        .collect();
    let pivots = fraction_free_echelon(&mut a, false);
    let pivot_cols: BTreeMap<usize, usize> = pivots.iter().map(|&(r, c)| (c, r)).collect();
    let mut basis = Vec::new();
    for f in (0..n).filter(|c| !pivot_cols.contains_key(c)) {
        let mut x = vec![RationalFunction::zero(); n];
        x[f] = RationalFunction::one();
        for &(r, c) in pivots.iter().rev() {
            let mut s = RationalFunction::zero();
            for j in (c + 1)..n {
                if !a[r][j].is_zero() && !x[j].is_zero() {
                    s = s.add(&RationalFunction::from_poly(a[r][j].clone()).mul(&x[j]));
                }
            }
            x[c] = s.neg().div(&RationalFunction::from_poly(a[r][c].clone())).unwrap();
        }
        basis.push(clear_denominators(&x));
    }
    basis
}

fn clear_denominators(x: &[RationalFunction]) -> Vec<RationalFunction> {
    let l = x.iter().fold(LaurentPoly::one(), |acc, v| if v.is_zero() { acc } else { &acc * &v.den });
    let polys: Vec<LaurentPoly> = x
        .iter()
        .map(|v| {
            if v.is_zero() {
                LaurentPoly::zero()
            } else {
                (&v.num * &l).exact_div(&v.den, false).unwrap()
            }
        })
        .collect();
    let g = polys.iter().fold(LaurentPoly::zero(), |g, p| g.gcd(p));
    let lead = polys.iter().find(|p| !p.is_zero()).map(|p| p.exact_div(&g, false).unwrap());
    let sign = match lead.as_ref().and_then(|p| p.leading().map(|(_, c)| c.is_negative())) {
        Some(true) => -BigInt::one(),
        _ => BigInt::one(),
    };
    let reduced: Vec<LaurentPoly> = polys.into_iter().map(|p| p.exact_div(&g, false).unwrap().scale(&sign)).collect();
    let low = reduced.iter().filter_map(|p| p.min_exp().cloned()).min().unwrap_or_default();
    reduced.into_iter().map(|p| RationalFunction::from_poly(p.shift(&-&low))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: LaurentPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    fn apply(m: &ExactMatrix<RationalFunction>, v: &[RationalFunction]) -> Vec<RationalFunction> {
        (0..m.rows())
            .map(|i| (0..m.cols()).fold(RationalFunction::zero(), |s, j| s.add(&m.get_or_zero(i, j).mul(&v[j]))))
            .collect()
    }

    #[test]
    fn kernel_examples() {
        let e = LaurentPoly::eps();
        let m1 = ExactMatrix::from_dense(vec![vec![rf(e.clone())]]);
        assert!(kernel_over_fraction_field(&m1).is_empty());

        let m2 = ExactMatrix::from_dense(vec![vec![rf(e.clone()), rf(-&e)]]);
        let k2 = kernel_over_fraction_field(&m2);
        assert_eq!(k2, vec![vec![RationalFunction::one(), RationalFunction::one()]]);

        let t = LaurentPoly::t();
        let m3 = ExactMatrix::from_dense(vec![vec![rf(t.clone()), rf(LaurentPoly::one())], vec![rf(&t * &t), rf(t.clone())]]);
        let k3 = kernel_over_fraction_field(&m3);
        assert_eq!(k3, vec![vec![RationalFunction::one(), rf(-&t)]]);
        for v in &k3 {
            assert!(apply(&m3, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_paths_agree() {
        let e = LaurentPoly::eps();
        let mut m = ExactMatrix::zeros(3, 3);
        m.set(0, 0, e.clone());
        m.set(0, 1, e.scale(&BigInt::from(2)));
        m.set(1, 0, &e * &e);
        m.set(1, 1, (&e * &e).scale(&BigInt::from(2)));
        m.set(2, 2, e.clone());
        assert!(homogeneous_coefficients(&m).is_some());
        assert_eq!(rank_over_fraction_field(&m, RingSpec::Generic), 2);
        assert_eq!(fraction_free_rank(&m, false), 2);
        assert_eq!(rank_over_fraction_field(&m, RingSpec::Char2), 2);
        assert_eq!(rank_over_fraction_field(&m, RingSpec::T4), 0);

        // not homogeneous: a 2x2 with determinant ε² − ε·ε³ ≠ 0
        let mut h = ExactMatrix::zeros(2, 2);
        h.set(0, 0, e.clone());
        h.set(0, 1, e.clone());
        h.set(1, 0, e.clone());
        h.set(1, 1, e.pow(3));
        assert!(homogeneous_coefficients(&h).is_none());
        assert_eq!(rank_over_fraction_field(&h, RingSpec::Generic), 2);
    }
}
