use super::{SComplex, ValidationReport, Violation};
use crate::algebra::{ExactMatrix, LaurentPoly};

/// Chain map C̃ → C̃' of S-complexes, in block form
///
/// ```text
///     [ λ   0   0  ]
///     [ μ   λ   Δ₂ ]
///     [ Δ₁  0   η  ]
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub lambda: ExactMatrix<LaurentPoly>,
    pub mu: ExactMatrix<LaurentPoly>,
    pub delta1: ExactMatrix<LaurentPoly>,
    pub delta2: ExactMatrix<LaurentPoly>,
    pub eta: LaurentPoly,
}

impl Morphism {
    pub fn identity(c: &SComplex) -> Self {
        let n = c.rank();
        Self {
            lambda: ExactMatrix::identity(n, LaurentPoly::one()),
            mu: ExactMatrix::zeros(n, n),
            delta1: ExactMatrix::zeros(1, n),
            delta2: ExactMatrix::zeros(n, 1),
            eta: LaurentPoly::one(),
        }
    }

    /// Check the chain-map identities for a map `src` → `dst`.
    pub fn check(&self, src: &SComplex, dst: &SComplex) -> ValidationReport {
        let ring = dst.ring;
        let red = |m: ExactMatrix<LaurentPoly>| m.map(|p| ring.reduce(p));
        let eta = |m: &ExactMatrix<LaurentPoly>| m.map(|p| p * &self.eta);
        let l = &self.lambda;
        let checks = [
            ("lambda*d = d'*lambda", red(l.mul(&src.d).sub(&dst.d.mul(l)))),
            (
                "Delta1*d + eta*delta1 - delta1'*lambda",
                red(self.delta1.mul(&src.d).add(&eta(&src.delta1)).sub(&dst.delta1.mul(l))),
            ),
            (
                "d'*Delta2 - eta*delta2' + lambda*delta2",
                red(dst.d.mul(&self.delta2).sub(&eta(&dst.delta2)).add(&l.mul(&src.delta2))),
            ),
            (
                "mu*d + lambda*v + Delta2*delta1 - v'*lambda + d'*mu - delta2'*Delta1",
                red(self
                    .mu
                    .mul(&src.d)
                    .add(&l.mul(&src.v))
                    .add(&self.delta2.mul(&src.delta1))
                    .sub(&dst.v.mul(l))
                    .add(&dst.d.mul(&self.mu))
                    .sub(&dst.delta2.mul(&self.delta1))),
            ),
        ];
        let mut out = Vec::new();
        if self.eta.is_zero() {
            out.push(Violation {
                identity: "eta".into(),
                detail: "eta must be nonzero".into(),
            });
        }
        for (name, m) in checks {
            if let Some((r, c, x)) = m.iter().next() {
                out.push(Violation {
                    identity: name.into(),
                    detail: format!("entry ({r},{c}) = {x}"),
                });
            }
        }
        ValidationReport { violations: out }
    }
}
