//! Special functions and integration engines.
//!
//! Everything here is a pure function of its arguments. Integration routines
//! take a [`QuadratureConfig`] that carries every tolerance and budget, so
//! two calls with equal inputs return bit-identical results.

mod config;
mod hyp2f1;
mod hypercube;
mod quadrature;
mod special;

pub use config::QuadratureConfig;
pub use hyp2f1::{hyp2f1_a1, hyp2f1_a1_series};
pub use hypercube::{integrate_unit_hypercube, CubatureEstimate};
pub use quadrature::{integrate_interval, integrate_semi_infinite, semi_infinite_cutoff};
pub use special::{beta_fn, c_prime, gamma_fn, ln_gamma_fn};
