pub mod intlin;
pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod qpoly;
pub mod ratfunc;
pub mod ring;
pub mod sparse;

pub use laurent::LaurentPoly;
pub use linalg::{kernel_over_fraction_field, rank_over_fraction_field};
pub use matrix::{ExactMatrix, RingElem};
pub use ratfunc::RationalFunction;
pub use ring::{laurent_arith, LaurentOp, RingSpec};
