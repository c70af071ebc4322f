//! SINR multi-coverage in Poisson cellular networks: how many base stations
//! a typical user can connect to at a given SINR threshold.
//!
//! [`coverage`] evaluates the k-coverage probability, the distribution of
//! the number of covering stations and the coverage probability under
//! Rayleigh fading. [`simulator`] estimates the same quantities by Monte
//! Carlo, and [`validation`] compares the two.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod cli;
pub mod coverage;
pub mod error;
pub mod numerics;
pub mod simulator;
pub mod validation;

pub use error::{Error, Result};
