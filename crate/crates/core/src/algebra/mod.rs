//! Exact octonion and complexified-octonion arithmetic.

pub mod bioctonion;
pub mod labels;
pub mod literal;
pub mod octonion;

pub use bioctonion::{zero_divisor_witness, BiOctonion, ComplexRational};
pub use labels::{fermion_label, split_amplitude, AmplitudeSplit, Direction, FermionLabel, Helicity, Particle};
pub use literal::{format_octonion, parse_octonion};
pub use octonion::{e, Octonion, BASIS_PRODUCT, TRIPLES};
