//! Hölder functionals `‖a‖_p = (Σ a_k^p)^{1/p}` of positive tuples over the
//! extended exponent line, and verification of
//!
//! ```text
//! ‖a‖_p / ‖b‖_p  <  Σ a_k / b_k      (n ≥ 2, every p including 0 and ±inf)
//! ```
//!
//! together with its rearrangement bounds, AM–GM chain at `p = 0`, the
//! streamed power-sum form, and the constructed families showing the bound
//! is sharp and can also be arbitrarily loose.

pub mod campaign;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod exponent;
pub mod functionals;
pub mod inequality;
pub mod rearrangement;
pub mod streaming;
pub mod sum;
pub mod tuple;

pub use error::{Error, Result};
pub use exponent::Exponent;
pub use functionals::{geometric_mean_ratio, holder_functional, lhs_quotient, log_power_sum, rhs_ratio_sum};
pub use inequality::{
    am_gm_chain, check_main_inequality, check_main_inequality_with, gap_curve, merge_identity_residual,
    AmGmChain, GapCurve, InequalityReport, Verdict, DEFAULT_TOLERANCE,
};
pub use rearrangement::{brute_force_extrema, extremal_ratio_sums, PermutationBounds};
pub use streaming::{Direction, RatioStreamAccumulator, StreamCheck};
pub use tuple::{PairedTuples, PositiveTuple};
