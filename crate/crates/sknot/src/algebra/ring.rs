use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;

/// Coefficient ring for matrix entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RingSpec {
    /// ℤ[T^±1]
    #[default]
    Generic,
    /// ℤ[T^±1]/(T⁴ − 1)
    T4,
    /// 𝐅₂[T^±1]
    Char2,
}

impl RingSpec {
    pub fn reduce(&self, p: &LaurentPoly) -> LaurentPoly {
        match self {
            RingSpec::Generic => p.clone(),
            RingSpec::T4 => p.reduce_t4(),
            RingSpec::Char2 => p.reduce_char2(),
        }
    }

    pub fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        self.reduce(&(a + b))
    }

    pub fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        self.reduce(&(a * b))
    }

    pub fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        self.reduce(&-a)
    }

    pub fn eps(&self) -> LaurentPoly {
        self.reduce(&LaurentPoly::eps())
    }

    /// T⁴ = 1 holds in the ring.
    pub fn t4_is_one(&self) -> bool {
        matches!(self, RingSpec::T4)
    }

    pub fn name(&self) -> &'static str {
        match self {
            RingSpec::Generic => "generic",
            RingSpec::T4 => "t4",
            RingSpec::Char2 => "char2",
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "generic" => Ok(RingSpec::Generic),
            "t4" => Ok(RingSpec::T4),
            "char2" => Ok(RingSpec::Char2),
            _ => Err(format!("unknown ring '{s}' (expected generic, t4 or char2)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaurentOp {
    Add,
    Mul,
    Neg,
}

/// Ring operation followed by reduction; `b` is ignored for negation.
pub fn laurent_arith(a: &LaurentPoly, b: &LaurentPoly, op: LaurentOp, ring: RingSpec) -> LaurentPoly {
    match op {
        LaurentOp::Add => ring.add(a, b),
        LaurentOp::Mul => ring.mul(a, b),
        LaurentOp::Neg => ring.neg(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_per_ring() {
        assert!(!RingSpec::Generic.eps().is_zero());
        assert!(RingSpec::T4.eps().is_zero());
        assert!(!RingSpec::Char2.eps().is_zero());
    }

    #[test]
    fn one_minus_t4_char2() {
        let p = LaurentPoly::from_terms([(0, 1), (4, -1)]);
        let r = laurent_arith(&p, &LaurentPoly::zero(), LaurentOp::Add, RingSpec::Char2);
        assert_eq!(r.to_string(), "1 + T^4");
        assert!(RingSpec::T4.reduce(&p).is_zero());
    }
}
