use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element of ℤ[T, T⁻¹] stored as exponent → coefficient with no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<BigInt, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<I: Into<BigInt>>(c: I) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial<I: Into<BigInt>, E: Into<BigInt>>(c: I, e: E) -> Self {
        let mut p = Self::zero();
        p.add_term(e.into(), c.into());
        p
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// T² − T⁻².
    pub fn eps() -> Self {
        Self::from_terms([(-2, -1), (2, 1)])
    }

    pub fn from_terms<I, E, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<BigInt>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e.into(), c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: BigInt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&BigInt::zero()).is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &BigInt) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    pub fn max_exp(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    /// Width of the exponent support; used as the pivot "degree".
    pub fn span(&self) -> BigInt {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => BigInt::zero(),
        }
    }

    pub fn leading(&self) -> Option<(&BigInt, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiply by T^k.
    pub fn shift(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, a)| (e + k, a.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    /// Substitute T ↦ T⁻¹.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, a)| (-e, a.clone())).collect(),
        }
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Reduce exponents modulo 4, i.e. pass to the quotient by T⁴ − 1.
    pub fn reduce_t4(&self) -> Self {
        let four = BigInt::from(4);
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term(e.mod_floor(&four), c.clone());
        }
        p
    }

    /// Reduce coefficients modulo 2.
    pub fn reduce_char2(&self) -> Self {
        let two = BigInt::from(2);
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.mod_floor(&two).is_zero())
                .map(|(e, _)| (e.clone(), BigInt::one()))
                .collect(),
        }
    }

    /// Evaluate at an integer (or rational, via the caller) point T = t.
    pub fn eval_rational(&self, t: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for (e, c) in &self.terms {
            let k = e.to_i64().expect("exponent too large to evaluate");
            let tk = if k >= 0 { pow_rat(t, k as u64) } else { pow_rat(&t.recip(), (-k) as u64) };
            acc += tk * num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact quotient self / d in ℤ[T^±1]; `None` if d does not divide self.
    /// With `char2` the coefficients are taken in 𝐅₂.
    pub fn exact_div(&self, d: &Self, char2: bool) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let dmin = d.min_exp().cloned()?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        loop {
            if rem.is_zero() {
                return Some(q);
            }
            let (re, rc) = rem.leading().map(|(e, c)| (e.clone(), c.clone()))?;
            // the remainder's support must stay above the divisor's span
            if &re - &de < rem.min_exp()? - &dmin {
                return None;
            }
            let c = if char2 {
                BigInt::one()
            } else {
                let (qc, r) = rc.div_rem(&dc);
                if !r.is_zero() {
                    return None;
                }
                qc
            };
            let shift = &re - &de;
            let t = Self::monomial(c, shift);
            rem = &rem - &(&t * d);
            if char2 {
                rem = rem.reduce_char2();
            }
            q = &q + &t;
            if char2 {
                q = q.reduce_char2();
            }
        }
    }

    /// Greatest common divisor over ℤ[T^±1], normalized to lowest exponent 0
    /// and positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalized_unit();
        }
        if o.is_zero() {
            return self.normalized_unit();
        }
        let c = self.content().gcd(&o.content());
        let mut a = dense_primitive(self);
        let mut b = dense_primitive(o);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !(b.len() == 1 && b[0].is_zero()) {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.iter().all(|x| x.is_zero()) {
                vec![BigInt::zero()]
            } else {
                primitive_dense(r)
            };
        }
        let g = Self::from_terms(a.into_iter().enumerate().map(|(i, x)| (BigInt::from(i), x)));
        Self::from_terms(g.normalized_unit().terms().map(|(e, x)| (e.clone(), x * &c)))
    }

    /// Divide out the power of T and sign so the lowest exponent is 0 and the
    /// leading coefficient is positive.
    pub fn normalized_unit(&self) -> Self {
        let Some(low) = self.min_exp().cloned() else { return Self::zero() };
        let s = self.shift(&-low);
        match s.leading() {
            Some((_, c)) if c.is_negative() => -&s,
            _ => s,
        }
    }

    /// If self = n·ε^k for an integer n ≠ 0, return (n, k).
    pub fn as_eps_monomial(&self) -> Option<(BigInt, u32)> {
        if self.is_zero() {
            return None;
        }
        let eps = Self::eps();
        let mut p = self.clone();
        let mut k = 0u32;
        loop {
            if p.num_terms() == 1 && p.min_exp().map(|e| e.is_zero()).unwrap_or(false) {
                return Some((p.coeff(&BigInt::zero()), k));
            }
            match p.exact_div(&eps, false) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => return None,
            }
        }
    }

    /// Same as `as_eps_monomial` with coefficients in 𝐅₂ (ε = T² + T⁻²).
    pub fn as_eps_monomial_char2(&self) -> Option<u32> {
        let p0 = self.reduce_char2();
        if p0.is_zero() {
            return None;
        }
        let eps = Self::eps().reduce_char2();
        let mut p = p0;
        let mut k = 0u32;
        loop {
            if p.is_one() {
                return Some(k);
            }
            match p.exact_div(&eps, true) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => return None,
            }
        }
    }

    /// Parse the canonical rendering, e.g. "-T^-2 + T^2", "3", "1 - T^4".
    pub fn parse(s: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut p = Self::zero();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: BigInt = if i > start {
                bytes[start..i].iter().collect::<String>().parse().map_err(|_| "bad coefficient")?
            } else {
                BigInt::one()
            };
            let mut exp = BigInt::zero();
            if i < bytes.len() && bytes[i] == 'T' {
                i += 1;
                exp = BigInt::one();
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == '-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = bytes[es..i].iter().collect::<String>().parse().map_err(|_| "bad exponent")?;
                }
            } else if i == start {
                return Err(format!("unexpected character at {}", i));
            }
            p.add_term(exp, sign * coef);
            if i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
                return Err(format!("unexpected character at {}", i));
            }
        }
        Ok(p)
    }

    /// Exponent → coefficient map with string keys, as used by the JSON schema.
    pub fn to_json_map(&self) -> serde_json::Map<String, serde_json::Value> {
        self.terms.iter().map(|(e, c)| (e.to_string(), json_int(c))).collect()
    }

    pub fn from_json_map(m: &serde_json::Map<String, serde_json::Value>) -> Result<Self, String> {
        let mut p = Self::zero();
        for (k, v) in m {
            let e: BigInt = k.parse().map_err(|_| format!("bad exponent {k}"))?;
            let c: BigInt = match v {
                serde_json::Value::Number(n) => n.to_string().parse().map_err(|_| "bad coefficient")?,
                serde_json::Value::String(s) => s.parse().map_err(|_| "bad coefficient")?,
                _ => return Err("coefficient must be an integer".into()),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn json_int(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

fn pow_rat(t: &num_rational::BigRational, k: u64) -> num_rational::BigRational {
    let mut r = num_rational::BigRational::one();
    for _ in 0..k {
        r *= t;
    }
    r
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            if e.is_one() {
                write!(f, "T")?;
            } else {
                write!(f, "T^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn dense_primitive(p: &LaurentPoly) -> Vec<BigInt> {
    let low = p.min_exp().cloned().unwrap_or_default();
    let high = p.max_exp().cloned().unwrap_or_default();
    let n = (&high - &low).to_usize().expect("degree span too large") + 1;
    let mut v = vec![BigInt::zero(); n];
    for (e, c) in p.terms() {
        v[(e - &low).to_usize().unwrap()] = c.clone();
    }
    primitive_dense(v)
}

fn primitive_dense(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

// remainder of lc(b)^k · a by b, dense coefficients in increasing degree
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * c;
        }
        r.pop();
        while r.len() > 1 && r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            r.push(BigInt::zero());
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_squared() {
        let e = LaurentPoly::eps();
        let e2 = &e * &e;
        assert_eq!(e2, LaurentPoly::from_terms([(-4, 1), (0, -2), (4, 1)]));
        assert_eq!(e2.to_string(), "T^-4 - 2 + T^4");
    }

    #[test]
    fn rendering() {
        assert_eq!(LaurentPoly::eps().to_string(), "-T^-2 + T^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(0, 1), (4, -1)]).to_string(), "1 - T^4");
        assert_eq!(LaurentPoly::from_terms([(1, 3)]).to_string(), "3T");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["-T^-2 + T^2", "1 - T^4", "3T", "0", "-5", "T^-4 - 2 + T^4"] {
            assert_eq!(LaurentPoly::parse(s).unwrap().to_string(), s);
        }
        assert!(LaurentPoly::parse("T^").is_err());
        assert!(LaurentPoly::parse("2x").is_err());
    }

    #[test]
    fn exact_division() {
        let e = LaurentPoly::eps();
        let p = &(&e * &e) * &LaurentPoly::from_terms([(3, 2), (-1, 7)]);
        assert_eq!(p.exact_div(&e, false).unwrap(), &e * &LaurentPoly::from_terms([(3, 2), (-1, 7)]));
        assert!(LaurentPoly::one().exact_div(&e, false).is_none());
        assert!(LaurentPoly::constant(3).exact_div(&LaurentPoly::constant(2), false).is_none());
        assert_eq!(p.as_eps_monomial(), None);
        assert_eq!(e.scale(&BigInt::from(-3)).pow(1).as_eps_monomial(), Some((BigInt::from(-3), 1)));
        assert_eq!((&e * &e).as_eps_monomial(), Some((BigInt::from(1), 2)));
    }

    #[test]
    fn quotients() {
        assert!(LaurentPoly::eps().reduce_t4().is_zero());
        let p = LaurentPoly::from_terms([(0, 1), (4, -1)]).reduce_char2();
        assert_eq!(p, LaurentPoly::from_terms([(0, 1), (4, 1)]));
        assert_eq!(LaurentPoly::eps().as_eps_monomial_char2(), Some(1));
    }
}
