//! Integer linear algebra: Smith invariants, saturated kernel lattices and
//! integral solutions of linear systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;

pub type IntMat = Vec<Vec<BigInt>>;

fn dense(m: &ExactMatrix<BigInt>) -> IntMat {
    m.to_dense()
}

/// Diagonal invariants d₁ | d₂ | … of length min(rows, cols), all ≥ 0.
pub fn smith_normal_form(m: &ExactMatrix<BigInt>) -> Vec<BigInt> {
    let mut a = dense(m);
    let (r, c) = (m.rows(), m.cols());
    let n = r.min(c);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let Some((pi, pj)) = smallest_entry(&a, t) else {
            diag.resize(n, BigInt::zero());
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in (t + 1)..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..c {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in (t + 1)..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility of the remaining block
            let bad = ((t + 1)..r)
                .flat_map(|i| ((t + 1)..c).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    for j in t..c {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn smallest_entry(a: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Row echelon form E = U·M with U unimodular. Returns (E, U, pivot columns).
pub fn echelon_with_transform(m: &IntMat, cols: usize) -> (IntMat, IntMat, Vec<usize>) {
    let rows = m.len();
    let mut e = m.clone();
    let mut u: IntMat = (0..rows).map(|i| (0..rows).map(|j| BigInt::from((i == j) as u8)).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on the column: smallest entry to the pivot, reduce the rest
        loop {
            let Some(k) = (r..rows).filter(|&i| !e[i][c].is_zero()).min_by(|&i, &j| e[i][c].abs().cmp(&e[j][c].abs())) else {
                break;
            };
            e.swap(r, k);
            u.swap(r, k);
            let mut done = true;
            for i in (r + 1)..rows {
                if e[i][c].is_zero() {
                    continue;
                }
                let q = e[i][c].div_floor(&e[r][c]);
                sub_row(&mut e, i, r, &q);
                sub_row(&mut u, i, r, &q);
                done &= e[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if e[r][c].is_zero() {
            continue;
        }
        if e[r][c].is_negative() {
            for v in e[r].iter_mut().chain(u[r].iter_mut()) {
                *v = -&*v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (e, u, pivots)
}

fn sub_row(m: &mut IntMat, i: usize, r: usize, q: &BigInt) {
    let (lo, hi) = m.split_at_mut(i);
    for (x, y) in hi[0].iter_mut().zip(&lo[r]) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Basis of the lattice {x ∈ ℤⁿ : A·x = 0}; A has `n` columns.
pub fn integer_kernel(a: &IntMat, n: usize) -> Vec<Vec<BigInt>> {
    let at = transpose(a, n);
    let (e, u, _) = echelon_with_transform(&at, a.len());
    e.iter().zip(u).filter(|(row, _)| row.iter().all(|x| x.is_zero())).map(|(_, v)| v).collect()
}

/// Some x ∈ ℤⁿ with A·x = b, if one exists.
pub fn integer_solve(a: &IntMat, n: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let at = transpose(a, n);
    let (e, u, pivots) = echelon_with_transform(&at, m);
    let mut rest = b.to_vec();
    let mut x = vec![BigInt::zero(); n];
    for (k, &c) in pivots.iter().enumerate() {
        let (q, rem) = rest[c].div_rem(&e[k][c]);
        if !rem.is_zero() {
            return None;
        }
        if q.is_zero() {
            continue;
        }
        for j in 0..m {
            let s = &q * &e[k][j];
            rest[j] -= s;
        }
        for j in 0..n {
            let s = &q * &u[k][j];
            x[j] += s;
        }
    }
    rest.iter().all(|v| v.is_zero()).then_some(x)
}

pub fn transpose(a: &IntMat, n: usize) -> IntMat {
    (0..n).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_vec(a: &IntMat, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .filter(|(p, q)| !p.is_zero() && !q.is_zero())
                .fold(BigInt::zero(), |s, (p, q)| s + p * q)
        })
        .collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat, inner: usize, cols: usize) -> IntMat {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |s, k| s + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(v: &[&[i64]]) -> IntMat {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn snf(v: &[&[i64]]) -> Vec<i64> {
        let m = ExactMatrix::from_dense(im(v));
        smith_normal_form(&m).iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    // product of invariants against the gcd of maximal minors, brute force for 2x3
    fn minors_gcd_2x3(v: &[&[i64]]) -> i64 {
        let mut g = 0i64;
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            g = g.gcd(&(v[0][a] * v[1][b] - v[0][b] * v[1][a]));
        }
        g
    }

    #[test]
    fn smith_examples() {
        assert_eq!(snf(&[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(snf(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(snf(&[&[0]]), vec![0]);
        assert_eq!(snf(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
        let m: &[&[i64]] = &[&[4, 6, 10], &[2, 8, 14]];
        let d = snf(m);
        assert_eq!(d[0] * d[1], minors_gcd_2x3(m).abs());
        assert_eq!(d[1] % d[0], 0);
    }

    #[test]
    fn kernel_and_solve() {
        let a = im(&[&[2, 4, 6], &[1, 1, 1]]);
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
        assert!(is_unit(&gcd_all(&k[0])));

        let b: Vec<BigInt> = [2, 1].iter().map(|&x| BigInt::from(x)).collect();
        let x = integer_solve(&a, 3, &b).unwrap();
        assert_eq!(mat_vec(&a, &x), b);
        let odd: Vec<BigInt> = [1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(integer_solve(&a, 3, &odd).is_none());
    }
}
