//! Numerical laboratory for variances of prime sums in short intervals and
//! pair-correlation statistics of L-function zeros.
//!
//! The crate builds coefficient tables (von Mangoldt weights) for a small
//! family of L-functions — the Riemann zeta function, the Ramanujan Delta
//! L-function and elliptic-curve L-functions — computes the short-interval
//! variance integrals of their prime sums exactly, evaluates the conjectured
//! closed-form main terms for those variances, and cross-checks both against
//! pair-correlation statistics formed from ingested lists of zero ordinates.
//!
//! Modules map onto the pipeline stages:
//!
//! * [`registry`] — descriptors (degree, conductor, gamma data) per L-function
//! * [`coeffs`] — prime coefficients, von Mangoldt tables, prefix sums
//! * [`variance`] — exact piecewise integration of the variance integrals
//! * [`predictions`] — closed-form main terms with regime selection
//! * [`hardy_littlewood`] — singular series and autocorrelation sums
//! * [`euler`] — truncated Euler products: tensor squares, residues, the
//!   arithmetic factors of the ratios-conjecture integrand
//! * [`zeros`] — zero-list ingestion, form factors, explicit-formula residuals
//! * [`tauberian`] — numeric verification of the kernel lemmas
//! * [`quad`], [`kahan`], [`primes`], [`zeta`] — shared numerics

pub mod cache;
pub mod coeffs;
pub mod error;
pub mod euler;
pub mod hardy_littlewood;
pub mod kahan;
pub mod predictions;
pub mod primes;
pub mod quad;
pub mod registry;
pub mod report;
pub mod selftest;
pub mod tauberian;
pub mod variance;
pub mod zeros;
pub mod zeta;

pub use coeffs::{CoefficientTable, LocalFactor, PrimeCoefficient, PrimeCoefficientTable};
pub use error::{Error, Result};
pub use euler::{EulerProductValue, TruncationPolicy};
pub use kahan::KahanSum;
pub use predictions::{Formula, PredictionLine, Regime, StatisticKind};
pub use registry::{CoefficientSource, GammaFactor, LFunctionDescriptor};
pub use variance::{VarianceCurve, VarianceResult};
pub use zeros::ZeroList;

/// Euler–Mascheroni constant, 20 digits.
pub const EULER_GAMMA: f64 = 0.57721566490153286061;

/// log(2π), used throughout the closed-form main terms.
pub const LOG_2PI: f64 = 1.8378770664093454836;
