//! Quantum-probe metrology for dephasing environments.
//!
//! A qubit (or qudit) probe interacts with a bosonic bath whose spectral
//! density follows an Ohmic-like power law with exponent `s`. The interaction
//! imprints a dephasing exponent on the probe, and measurements on the probe
//! carry information about `s`. This crate provides:
//!
//! * dephasing rates for the Ohmic-like bath in all temperature regimes,
//!   behind a common [`rates::RateModel`] trait with a name-keyed registry,
//! * the pure-dephasing channel on a d-level probe and coherence measures,
//! * Fisher / quantum Fisher information, quantum signal-to-noise ratio, and
//!   projective-measurement statistics,
//! * maximisation of the information over the interaction time,
//! * seeded Monte Carlo estimation experiments that check the Cramér-Rao
//!   bound empirically.
//!
//! All times and temperatures are dimensionless (time in units of the inverse
//! bath cutoff frequency, temperature in units of the cutoff frequency).
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dephasing;
pub mod error;
pub mod mathkern;
pub mod metrology;
pub mod montecarlo;
pub mod optimal;
pub mod rates;

pub use error::{Error, Result};
