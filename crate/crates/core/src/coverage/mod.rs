//! Analytic multi-coverage statistics for a typical user.
//!
//! Every quantity is built from the symmetric sums
//! `S_n(T) = T_n^{-2n/β} I_{n,β}(W a^{-β/2}) J_{n,β}(T_n)`, which vanish for
//! `T ≥ 1/(n-1)`. The coverage distribution then follows by finite
//! inclusion-exclusion over at most `⌈1/T⌉` terms.

mod curve;
mod fading;
mod integrals;
mod model;
mod sums;

pub use curve::{db_grid, db_to_linear, evaluate_point, evaluate_points, linear_to_db, CoverageCurve, CurveKind};
pub use fading::{fading_coverage_closed_form, fading_coverage_integral, fading_coverage_probability};
pub use integrals::{
    calc_integral_i, calc_integral_j, integral_i_at_zero, integral_j2_closed_form, j_integrand,
    max_coverage_order, threshold_transform,
};
pub use model::{propagation_constant, NetworkModel, PropagationConstant};
pub use sums::{
    coverage_pgf, coverage_pmf, expected_coverage, k_coverage_probability, symmetric_sum, SymmetricSums,
};
