//! Finite-alphabet probability toolkit: pmfs, joint distributions, stochastic
//! kernels, Shannon information measures, empirical types and strong typicality.
//!
//! All alphabets are index sets `0..K-1`. Entropies and divergences are
//! computed internally in natural log; every public function reports bits.

mod dist;
mod info;
mod typing;

pub use dist::{compose_joint, Joint2, Joint3, Kernel, Pmf};
pub use info::{
    binary_divergence_bits, binary_entropy_bits, cond_entropy_bits, cond_mutual_info_bits,
    entropy_bits, joint_entropy_bits, kl_divergence_bits, mutual_info_bits, Axis2, Axis3,
};
pub use typing::{empirical_joint_type, is_strongly_typical, JointType};

use thiserror::Error;

/// Absolute tolerance on total probability mass.
pub const MASS_TOL: f64 = 1e-12;

pub(crate) const LN_2: f64 = std::f64::consts::LN_2;

#[derive(Debug, Error, PartialEq)]
pub enum ProbError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("symbol {symbol} out of range for alphabet size {size}")]
    SymbolOutOfRange { symbol: usize, size: usize },
    #[error("argument outside domain: {0}")]
    DomainViolation(String),
}
