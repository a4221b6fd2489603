//! Dense univariate polynomials over ℚ and their Smith invariants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly(vec![c]).trim()
    }

    pub fn x() -> Self {
        QPoly(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        QPoly(c).trim()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        QPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    pub fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly(out).trim()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QPoly(self.0.iter().map(|x| x * c).collect()).trim()
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lead().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![BigRational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let f = r.lead().unwrap() / &lc;
            q[rd - dd] = f.clone();
            for (i, c) in d.0.iter().enumerate() {
                r.0[rd - dd + i] -= &f * c;
            }
            r = r.trim();
        }
        (QPoly(q).trim(), r)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Smith invariants over ℚ[x] (monic, dividing chain); zeros for rank deficiency.
pub fn smith_invariants(mut a: Vec<Vec<QPoly>>) -> Vec<QPoly> {
    let r = a.len();
    let c = a.first().map_or(0, |x| x.len());
    let n = r.min(c);
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let best = (t..r)
            .flat_map(|i| (t..c).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].degree());
        let Some((pi, pj)) = best else {
            out.resize(n, QPoly::zero());
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut moved = false;
            for i in (t + 1)..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, _) = a[i][t].div_rem(&a[t][t]);
                for j in t..c {
                    let s = q.mul(&a[t][j]);
                    a[i][j] = a[i][j].sub(&s);
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    moved = true;
                }
            }
            for j in (t + 1)..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, _) = a[t][j].div_rem(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let s = q.mul(&row[t]);
                    row[j] = row[j].sub(&s);
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            let bad = ((t + 1)..r)
                .flat_map(|i| ((t + 1)..c).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].div_rem(&a[t][t]).1.is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..c {
                        let x = a[i][j].clone();
                        a[t][j] = a[t][j].add(&x);
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].monic());
    }
    out
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[-1, 0, 1]); // x² − 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn smith_over_qx() {
        let x = QPoly::x();
        let m = vec![vec![x.clone(), QPoly::zero()], vec![QPoly::zero(), x.mul(&x).add(&QPoly::one())]];
        let s = smith_invariants(m);
        assert_eq!(s[0], QPoly::one());
        assert_eq!(s[1], p(&[0, 1, 0, 1]));
    }
}
