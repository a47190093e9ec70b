//! Exact-arithmetic laboratory for octonionic constructions: octonion and
//! bioctonion products, X-product torsion, matrix Lie-algebra closure and
//! triality, calibration forms, D4 roots with dimension bookkeeping, and
//! nilpotent Heisenberg matrices, plus a verification registry that checks
//! each structural claim.

// structure-constant tables read most clearly with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod calibrations;
pub mod dims;
pub mod error;
pub mod heisenberg;
pub mod liegen;
pub mod linalg;
pub mod rational;
pub mod roots;
pub mod verify;
pub mod xproduct;

pub use error::{Error, Result};
pub use rational::Rational;
