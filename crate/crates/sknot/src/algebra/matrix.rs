use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;

pub trait RingElem: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunction::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunction::mul(self, o)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
}

/// Sparse matrix; entry (r, c) is row r, column c. Zeros are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<R> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), R>,
}

impl<R: RingElem> ExactMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn identity(n: usize, one: R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&R> {
        self.entries.get(&(r, c))
    }

    pub fn get_or_zero(&self, r: usize, c: usize) -> R {
        self.get(r, c).cloned().unwrap_or_else(R::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, x: R) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: &R) {
        let v = self.get_or_zero(r, c).add(x);
        self.set(r, c, v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.entries.iter().map(|(&(r, c), x)| (r, c, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map<F: Fn(&R) -> R>(&self, f: F) -> Self {
        let mut m = Self::zeros(self.rows, self.cols);
        for (r, c, x) in self.iter() {
            m.set(r, c, f(x));
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for (r, c, x) in self.iter() {
            m.set(c, r, x.clone());
        }
        m
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        let mut m = self.clone();
        for (r, c, x) in o.iter() {
            m.add_to(r, c, x);
        }
        m
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut by_row: BTreeMap<usize, Vec<(usize, &R)>> = BTreeMap::new();
        for (r, c, x) in o.iter() {
            by_row.entry(r).or_default().push((c, x));
        }
        let mut m = Self::zeros(self.rows, o.cols);
        for (i, k, a) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    m.add_to(i, j, &a.mul(b));
                }
            }
        }
        m
    }

    pub fn row(&self, r: usize) -> Vec<(usize, R)> {
        self.entries.range((r, 0)..(r + 1, 0)).map(|(&(_, c), x)| (c, x.clone())).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        let mut d = vec![vec![R::zero(); self.cols]; self.rows];
        for (r, c, x) in self.iter() {
            d[r][c] = x.clone();
        }
        d
    }

    /// Rows selected by `rs` and columns by `cs`, in the given orders.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Self {
        let rmap: BTreeMap<usize, usize> = rs.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let cmap: BTreeMap<usize, usize> = cs.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut m = Self::zeros(rs.len(), cs.len());
        for (r, c, x) in self.iter() {
            if let (Some(&i), Some(&j)) = (rmap.get(&r), cmap.get(&c)) {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut m = Self::zeros(self.rows + o.rows, self.cols);
        for (r, c, x) in self.iter() {
            m.set(r, c, x.clone());
        }
        for (r, c, x) in o.iter() {
            m.set(self.rows + r, c, x.clone());
        }
        m
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        for (r, c, x) in self.iter() {
            m.set(r, c, x.clone());
        }
        for (r, c, x) in o.iter() {
            m.set(r, self.cols + c, x.clone());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = ExactMatrix::from_dense(vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(0), BigInt::from(3)]]);
        let b = a.mul(&a);
        assert_eq!(b.get_or_zero(0, 1), BigInt::from(8));
        assert_eq!(a.transpose().get_or_zero(1, 0), BigInt::from(2));
        assert_eq!(a.sub(&a).nnz(), 0);
    }
}
