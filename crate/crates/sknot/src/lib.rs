pub mod algebra;
pub mod cobordism;
pub mod equivariant;
pub mod error;
pub mod invariants;
pub mod scomplex;
pub mod twobridge;
