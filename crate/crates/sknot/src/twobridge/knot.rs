use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A knot assembled from catalog pieces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotSpec {
    Unknot,
    TwoBridge(i64, i64),
    Torus(i64, i64),
    DoubleTwist(i64, i64),
    Mirror(Box<KnotSpec>),
    Sum(Box<KnotSpec>, Box<KnotSpec>),
}

impl KnotSpec {
    pub fn two_bridge(p: i64, q: i64) -> Result<Self> {
        if p < 3 || p % 2 == 0 {
            return Err(Error::InvalidArgument(format!("2-bridge parameter p must be odd and at least 3, got {p}")));
        }
        let q = q.rem_euclid(p);
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidArgument(format!("gcd({p}, {q}) is not 1")));
        }
        Ok(KnotSpec::TwoBridge(p, q))
    }

    pub fn torus(p: i64, q: i64) -> Result<Self> {
        if p < 1 || q < 1 || p.gcd(&q) != 1 {
            return Err(Error::InvalidArgument(format!("torus parameters must be coprime and positive, got {p}, {q}")));
        }
        Ok(KnotSpec::Torus(p, q))
    }

    pub fn double_twist(m: i64, n: i64) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidArgument(format!("double twist parameters must be positive, got {m}, {n}")));
        }
        Ok(KnotSpec::DoubleTwist(m, n))
    }

    pub fn mirror(k: KnotSpec) -> Self {
        KnotSpec::Mirror(Box::new(k))
    }

    pub fn sum(a: KnotSpec, b: KnotSpec) -> Self {
        KnotSpec::Sum(Box::new(a), Box::new(b))
    }

    /// n-fold connected sum (n ≥ 1).
    pub fn multiple(k: KnotSpec, n: usize) -> Self {
        let mut acc = k.clone();
        for _ in 1..n {
            acc = KnotSpec::sum(acc, k.clone());
        }
        acc
    }

    /// Leaves of the sum tree, with mirror parity pushed down.
    pub fn summands(&self) -> Vec<(KnotSpec, bool)> {
        fn walk(k: &KnotSpec, mirrored: bool, out: &mut Vec<(KnotSpec, bool)>) {
            match k {
                KnotSpec::Sum(a, b) => {
                    walk(a, mirrored, out);
                    walk(b, mirrored, out);
                }
                KnotSpec::Mirror(a) => walk(a, !mirrored, out),
                leaf => out.push((leaf.clone(), mirrored)),
            }
        }
        let mut out = Vec::new();
        walk(self, false, &mut out);
        out
    }

    /// 2-bridge parameters of a leaf, when it has them.
    pub fn as_two_bridge(&self) -> Option<(i64, i64)> {
        match *self {
            KnotSpec::TwoBridge(p, q) => Some((p, q)),
            KnotSpec::DoubleTwist(m, n) => Some((4 * m * n - 1, 2 * n)),
            KnotSpec::Torus(p, q) if p.min(q) == 2 => {
                let r = p.max(q);
                Some((r, r - 1))
            }
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let k = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(k)
    }
}

impl FromStr for KnotSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        KnotSpec::parse(s)
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Unknot => write!(f, "unknot"),
            KnotSpec::TwoBridge(p, q) => write!(f, "twobridge:{p},{q}"),
            KnotSpec::Torus(p, q) => write!(f, "torus:{p},{q}"),
            KnotSpec::DoubleTwist(m, n) => write!(f, "dtwist:{m},{n}"),
            KnotSpec::Mirror(k) => write!(f, "mirror:{k}"),
            KnotSpec::Sum(a, b) => write!(f, "sum:{a}+{b}"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            col: self.pos + 1,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        text.parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("")
    }

    fn pair(&mut self) -> Result<(i64, i64)> {
        self.eat(b':')?;
        let a = self.number()?;
        self.eat(b',')?;
        let b = self.number()?;
        Ok((a, b))
    }

    fn checked(&self, start: usize, r: Result<KnotSpec>) -> Result<KnotSpec> {
        r.map_err(|e| match e {
            Error::InvalidArgument(msg) => Error::Parse { col: start + 1, msg },
            e => e,
        })
    }

    fn expr(&mut self) -> Result<KnotSpec> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            let n = self.number()?;
            if n < 1 {
                self.pos = start;
                return Err(self.err("multiplicity must be positive"));
            }
            if self.s.get(self.pos) != Some(&b'x') {
                return Err(self.err("expected 'x' after multiplicity"));
            }
            self.pos += 1;
            self.eat(b'(')?;
            let k = self.expr()?;
            self.eat(b')')?;
            return Ok(KnotSpec::multiple(k, n as usize));
        }
        let w = self.word().to_string();
        match w.as_str() {
            "unknot" => Ok(KnotSpec::Unknot),
            "twobridge" => {
                let (p, q) = self.pair()?;
                self.checked(start, KnotSpec::two_bridge(p, q))
            }
            "torus" => {
                let (p, q) = self.pair()?;
                self.checked(start, KnotSpec::torus(p, q))
            }
            "dtwist" => {
                let (m, n) = self.pair()?;
                self.checked(start, KnotSpec::double_twist(m, n))
            }
            "mirror" => {
                self.eat(b':')?;
                Ok(KnotSpec::mirror(self.expr()?))
            }
            "sum" => {
                self.eat(b':')?;
                let a = self.expr()?;
                self.eat(b'+')?;
                let b = self.expr()?;
                Ok(KnotSpec::sum(a, b))
            }
            "" => Err(self.err("expected a knot expression")),
            _ => {
                self.pos = start;
                Err(self.err(&format!("unknown knot species '{w}'")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(KnotSpec::parse("mirror:twobridge:15,4").unwrap(), KnotSpec::mirror(KnotSpec::TwoBridge(15, 4)));
        assert_eq!(KnotSpec::parse("twobridge:15,-1").unwrap(), KnotSpec::TwoBridge(15, 14));
        let s = KnotSpec::parse("sum:torus:2,3+mirror:dtwist:2,2").unwrap();
        assert_eq!(s, KnotSpec::sum(KnotSpec::Torus(2, 3), KnotSpec::mirror(KnotSpec::DoubleTwist(2, 2))));
        assert_eq!(KnotSpec::parse(&s.to_string()).unwrap(), s);
        let m = KnotSpec::parse("3x(dtwist:2,2)").unwrap();
        assert_eq!(m.summands().len(), 3);
    }

    #[test]
    fn errors_carry_columns() {
        match KnotSpec::parse("sum:unknot+foo:1,2") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 12),
            other => panic!("{other:?}"),
        }
        match KnotSpec::parse("twobridge:15,5") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 1),
            other => panic!("{other:?}"),
        }
        assert!(KnotSpec::parse("twobridge:15").is_err());
        assert!(KnotSpec::parse("unknot x").is_err());
    }
}
