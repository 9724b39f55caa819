//! Achievable error exponents for distributed binary hypothesis testing under
//! communication constraints, plus a finite-blocklength simulator of the
//! underlying quantize-and-bin coding scheme.
//!
//! The crate is organized around four layers:
//!
//! - [`probkit`]: finite-alphabet pmfs, joints, kernels, information measures,
//!   empirical types and strong typicality;
//! - [`projector`]: information projections with fixed pairwise marginals and
//!   an optional mutual-information cap, plus an independent grid oracle;
//! - [`exponents`]: the Han, naive-binning, SHA and improved random-binning
//!   exponents, rate-regime classification, critical rates and rate sweeps;
//! - [`binsim`]: seeded Monte Carlo simulation of the coding scheme at finite
//!   blocklength with four receiver decision rules.

pub mod binsim;
pub mod exponents;
pub mod probkit;
pub mod projector;
pub mod randgen;
