//! Numerical laboratory for extremal problems in the Bergman space A^2 of the
//! unit disk: coefficient-formula norms, suprema of analytic quotients over
//! annuli, the exact degree-1 theory, coefficient-space searches for the
//! extremal values F_n(c) and F_B(c) with bisection brackets for the
//! constants kappa_n, and executable versions of the known bounds and
//! example families.

pub mod bergman;
pub mod blaschke;
pub mod bounds;
pub mod error;
pub mod exec;
pub mod mobius;
pub mod nelder_mead;
pub mod quotient;
pub mod roots;
pub mod search;

pub use bergman::{NormInterval, Poly, TruncatedSeries};
pub use error::Error;
pub use quotient::{AnnulusSup, CircleMaxResult, PoleReport, QuotientPair};
pub use search::{KappaEstimate, SearchConfig, SearchResult};
