//! 2-bridge knots: lattice combinatorics, complexes, signatures and the
//! knot expression language.

mod build;
mod knot;
mod lattice;
mod lower;
mod signature;

pub use build::{build_two_bridge_complex, gradings, relations, torus_two_complex, Relation, TwoBridgeComplex, VSupport};
pub use knot::KnotSpec;
pub use lattice::lattice_counts;
pub use lower::gamma_lower_bound_two_bridge;
pub use signature::{signature, symmetric_signature, torus_seifert_matrix, torus_signature, two_bridge_signature};

use num_rational::BigRational;

use crate::algebra::RingSpec;
use crate::error::Result;
use crate::scomplex::{atom_in, tensor, SComplex};

/// Local parameter (2m−1)(2n−1)/(4mn−1) of the double twist knot D_{m,n}.
pub fn double_twist_parameter(m: i64, n: i64) -> BigRational {
    BigRational::new(((2 * m - 1) * (2 * n - 1)).into(), (4 * m * n - 1).into())
}

/// Complex of a catalog knot over `ring`. With `local`, double twist knots
/// are replaced by their one-generator local representatives.
pub fn catalog_complex(knot: &KnotSpec, local: bool, ring: RingSpec) -> Result<SComplex> {
    let c = match knot {
        KnotSpec::Unknot => SComplex::trivial(ring),
        KnotSpec::DoubleTwist(m, n) if local => atom_in(&double_twist_parameter(*m, *n), ring)?,
        KnotSpec::Torus(p, q) if p.min(q) == &1 => SComplex::trivial(ring),
        KnotSpec::Torus(p, q) if p.min(q) == &2 => torus_two_complex((p.max(q) - 1) / 2, ring),
        KnotSpec::Torus(..) => return Err(signature::unsupported(knot)),
        KnotSpec::TwoBridge(..) | KnotSpec::DoubleTwist(..) => {
            let (p, q) = knot.as_two_bridge().expect("2-bridge leaf");
            build_two_bridge_complex(p, q)?.complex.with_ring(ring)
        }
        KnotSpec::Mirror(k) => catalog_complex(k, local, ring)?.dual(),
        KnotSpec::Sum(a, b) => tensor(&catalog_complex(a, local, ring)?, &catalog_complex(b, local, ring)?)?,
    };
    Ok(c)
}
