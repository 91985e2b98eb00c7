//! Symmetry class identification for 3-D elasticity tensors.
//!
//! The tensor is split into its harmonic parts `(lambda, mu, a, b, D)`. The
//! class of the fourth-order harmonic part `D` is read off polynomial
//! invariants `J2..J10` (relations and inequalities cutting out each closed
//! stratum), and the second-order parts are handled as a triple of quadratic
//! forms. See [`classifier::classify`] for the end-to-end pipeline.

pub mod classifier;
pub mod error;
pub mod grouptab;
pub mod h4strata;
pub mod invariants;
pub mod quadstrata;
pub mod tencore;

pub use error::{Error, Result};
pub use h4strata::SymmetryClass;
pub use tencore::{
    Deviator, ElasticityTensor, Harmonic4, HarmonicDecomposition, KelvinMatrix, Rotation,
};
