//! Exact enumeration of unimodal permutations by cycle type.
//!
//! The crate is layered bottom-up:
//!
//! * [`combinat`]: partitions, compositions, permutations, Möbius function.
//! * [`ring`]: exact rationals and polynomials used as coefficients.
//! * [`symfunc`]: truncated symmetric functions on the power-sum basis,
//!   plethysm, ribbon Schur functions and specializations.
//! * [`theorems`]: the generating functions and counting formulas.
//! * [`oracle`]: brute-force enumeration used as ground truth.
//! * [`verify`]: suites comparing every formula with the oracle.

pub mod combinat;
pub mod error;
pub mod ring;
pub mod symfunc;

pub use error::{Error, Result};
pub mod oracle;
pub mod theorems;
pub mod verify;
