//! Computer algebra for rational proper holomorphic maps between unit balls.
//!
//! The crate is `no_std` (it needs `alloc`). Maps are stored as a vector of
//! sparse complex polynomials over a scalar denominator with `q(0) = 1`.
//! Properness is certified exactly, up to floating rounding, by reducing the
//! Hermitian form `‖p‖² − |q|²` modulo the sphere relation. On top of that
//! sit the invariants (degree, embedding dimension, norm equivalence), the
//! constructions (automorphisms, tensor operations, juxtaposition, Blaschke
//! products, Whitney sequences), homotopy families with a verifier, and the
//! X-variety matrix `C(w̄)`.
#![no_std]

extern crate alloc;

pub mod automorphism;
pub mod ballmap;
pub mod blaschke;
pub mod bounds;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod hermitian;
pub mod homotopy;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod properness;
pub mod sample;
pub mod whitney;
pub mod xvariety;

pub use num_complex::Complex64;

pub use automorphism::BallAutomorphism;
pub use ballmap::RationalBallMap;
pub use blaschke::BlaschkeProduct;
pub use error::{Error, Result};
pub use hermitian::HermitianForm;
pub use homotopy::HomotopyFamily;
pub use poly::{MultiIndex, Polynomial};
pub use properness::{certify_proper, PropernessCertificate, Verdict};
pub use whitney::WhitneyTerm;
pub use xvariety::XMatrix;

/// Coefficient threshold: polynomial and form coefficients with modulus at
/// most `TAU` are treated as zero.
pub const TAU: f64 = 1e-9;

/// Coefficients at most this large are discarded as rounding noise after
/// arithmetic.
pub const ROUNDING: f64 = 1e-13;

/// Default seed for every sampling step.
pub const DEFAULT_SEED: u64 = 0x5eed_ba11;

/// Tolerance and random seed shared by the verification routines.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    pub tol: f64,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { tol: TAU, seed: DEFAULT_SEED }
    }
}
