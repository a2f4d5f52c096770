//! Error type shared by all modules.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A polynomial with Bergman norm below the canonicalization threshold
    /// was passed where a nonzero polynomial is required.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// A scalar argument is outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The denominator of a quotient pair is the zero polynomial.
    #[error("zero denominator")]
    ZeroDenominator,

    /// A denominator zero in the annulus is not matched by a numerator zero
    /// of at least the same order.
    #[error("uncancelled pole at {location} (order deficit {deficit})")]
    UncancelledPole { location: Complex64, deficit: usize },

    /// A denominator root lies within the boundary tolerance of the circle
    /// being scanned.
    #[error("denominator root {location} on the circle |z| = {radius}")]
    PoleOnCircle { radius: f64, location: Complex64 },

    /// The Moebius image-circle formulas degenerate (pole on or outside the
    /// circle, or vanishing denominator).
    #[error("degenerate image circle")]
    DegenerateCircle,

    /// Invalid search configuration.
    #[error("config error: {0}")]
    Config(String),

    /// A Blaschke zero is too close to the unit circle for the geometric
    /// tail estimate to be honest.
    #[error("Blaschke zero with |a| = {modulus} exceeds the series cutoff 0.95")]
    ZeroTooCloseToBoundary { modulus: f64 },

    /// A kappa bracket for degree n+1 lies strictly above the bracket for
    /// degree n, which indicates a search failure.
    #[error("non-monotone kappa bracket at degree {n}")]
    NonMonotoneBracket { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
