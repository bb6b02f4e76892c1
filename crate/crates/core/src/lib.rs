//! Finite projective geometries from the unit group of a Clifford algebra.
//!
//! The signed basis blades `±e_S` of the complex Clifford algebra `Cl_m` form
//! a group `C_m`; dividing out `±I` leaves an `m`-dimensional vector space over
//! the two-element field, whose projective space is `PG(m-1, 2)`. For `m = 3`
//! this is the Fano plane, and tensor products of Pauli matrices realise the
//! same structure on qubits.
//!
//! The crate builds these objects with exact arithmetic and checks their
//! properties mechanically:
//!
//! * [`clifford`]: blade products, the sign rule, commutators, grading and the
//!   graded tensor embedding `Cl_n ⊗ Cl_m → Cl_{n+m}`.
//! * [`gf2`]: the quotient space `V_m`, spans and subspace enumeration.
//! * [`projgeom`]: incidence geometries, projective axioms, Desargues, Lie
//!   closure of subspaces and the blade-geometry isomorphism.
//! * [`pauli`]: Pauli matrices over the Gaussian integers and the
//!   Jordan–Wigner representation.
//! * [`io`]: the JSON incidence format, DOT/TikZ export and reports.
//! * [`cli`]: the `clifgeom` command line.
//!
//! ```
//! use clifgeom::clifford::{blade_mul, BladeIndex, SignedBlade};
//! use clifgeom::projgeom::{build_pg, DEFAULT_LINE_GUARD};
//!
//! let e12 = SignedBlade::plus(BladeIndex::from_generators(&[1, 2], 3)?);
//! assert_eq!(blade_mul(e12, e12)?, -SignedBlade::one(3)?);
//!
//! let fano = build_pg(3, DEFAULT_LINE_GUARD)?;
//! assert_eq!((fano.num_points(), fano.num_lines()), (7, 7));
//! # Ok::<(), clifgeom::Error>(())
//! ```
//!
//! A longer guide with worked examples lives in `book/`; its code blocks are
//! compiled and run as doc-tests of this crate.

pub mod cli;
pub mod clifford;
pub mod error;
pub mod gf2;
pub mod io;
pub mod pauli;
pub mod projgeom;

pub use error::{Error, Result};

// Run the guide's code blocks with `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/clifford.md")]
    mod clifford {}
    #[doc = include_str!("../../../book/src/quotient.md")]
    mod quotient {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/desargues.md")]
    mod desargues {}
    #[doc = include_str!("../../../book/src/lie.md")]
    mod lie {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
