//! Exact matrix representations of Clifford algebras by Pauli words.
//!
//! All scalars are Gaussian integers and all arithmetic is exact, so every
//! check here is an equality test, never a tolerance.

mod gauss;
mod label;
mod matrix;
mod rep;

pub use gauss::GaussInt;
pub use label::{label_blade_as_pauli, PauliLabel};
pub use matrix::{kron, rank, GaussMatrix};
pub use rep::{
    jw_generator, pauli, rep_blade, span_rank, two_irreps_distinct, verify_clifford_relations,
    verify_representation_hom, HomomorphismReport, IrrepReport, Representation,
    DEFAULT_HOM_SAMPLES, DEFAULT_RANK_GUARD, DEFAULT_REP_GUARD, HOM_EXHAUSTIVE_MAX,
};
