//! Explicit bounds, example families, and the dual-problem demonstration.
//!
//! Everything here has a closed form: the F_B(c) <= c^2 and
//! F(c) > sqrt(1 - c^2) bounds, the monomial example families with their
//! admissibility thresholds, the constant-against-z counterexample that
//! breaks the maximum principle past 1/sqrt(2), and the family
//! psi(z) = (z^n - r^n)/(1 - r^n z^n) whose normalized maxima vanish as n
//! grows, showing the inner-disk variant of the problem is trivial.

use num_complex::Complex64;

use crate::bergman::{Poly, TruncatedSeries};
use crate::blaschke::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::quotient::{objective_fb_violation, QuotientPair};

fn check_open_unit(c: f64, what: &str) -> Result<()> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::Domain(format!("{what} = {c} not in (0, 1)")));
    }
    Ok(())
}

/// Upper bound c^2 for the norm-gap supremum F_B(c).
pub fn bound_fb(c: f64) -> Result<f64> {
    check_open_unit(c, "c")?;
    Ok(c * c)
}

/// Lower bound sqrt(1 - c^2) for F(c).
pub fn bound_f_lower(c: f64) -> Result<f64> {
    check_open_unit(c, "c")?;
    Ok((1.0 - c * c).sqrt())
}

/// The pair (1, sqrt(n) z^(n-1)) with its admissibility threshold
/// (1/n)^(1/(2(n-1))): above the threshold |f| <= |g| holds on the annulus.
pub fn example_pair_monomial(n: usize) -> Result<((Poly, Poly), f64)> {
    if n < 2 {
        return Err(Error::Domain(format!("monomial family needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let pair = (Poly::constant(1.0), Poly::monomial(nf.sqrt(), n - 1));
    let threshold = (1.0 / nf).powf(1.0 / (2.0 * (nf - 1.0)));
    Ok((pair, threshold))
}

/// The pair (sqrt(n-1) z^(n-2), sqrt(n) z^(n-1)) with threshold
/// sqrt((n-1)/n).
pub fn example_pair_shifted_monomial(n: usize) -> Result<((Poly, Poly), f64)> {
    if n < 2 {
        return Err(Error::Domain(format!("shifted family needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let pair = (
        Poly::monomial((nf - 1.0).sqrt(), n - 2),
        Poly::monomial(nf.sqrt(), n - 1),
    );
    Ok((pair, ((nf - 1.0) / nf).sqrt()))
}

/// The constant-against-z configuration that defeats the maximum principle
/// for c > 1/sqrt(2).
#[derive(Clone, Copy, Debug)]
pub struct HaymanReport {
    pub a: f64,
    pub c: f64,
    /// Worst violation of |f| <= |g| on the annulus; zero for valid inputs.
    pub violation: f64,
    /// ||f||^2 - ||g||^2 = a^2 - 1/2, positive despite admissibility.
    pub norm_gap: f64,
    pub admissible: bool,
}

/// Checks f = a, g = z with 1/sqrt(2) < a <= c: admissible on the annulus
/// yet with a positive norm gap.
pub fn hayman_counterexample(a: f64, c: f64) -> Result<HaymanReport> {
    check_open_unit(c, "c")?;
    if !(a > 1.0 / std::f64::consts::SQRT_2 && a <= c) {
        return Err(Error::Domain(format!(
            "need 1/sqrt(2) < a <= c, got a = {a}, c = {c}"
        )));
    }
    let f = Poly::constant(a);
    let g = Poly::monomial(1.0, 1);
    let violation = objective_fb_violation(&f, &g, c, 256);
    Ok(HaymanReport {
        a,
        c,
        violation,
        norm_gap: a * a - 0.5,
        admissible: violation == 0.0,
    })
}

/// One row of the inner-disk demonstration for fixed (n, r).
#[derive(Clone, Copy, Debug)]
pub struct DualDemoRow {
    pub n: usize,
    pub r: f64,
    /// ||psi||^2 by the coefficient series.
    pub psi_norm_sq: f64,
    /// max over |z| = r of |psi|^2 = 4 r^(2n) / (1 + r^(2n))^2.
    pub psi_max_sq_on_circle: f64,
    /// max of |f_n|^2 on |z| <= r for f_n = psi/||psi||.
    pub fn_max_sq: f64,
}

impl DualDemoRow {
    pub const CSV_HEADER: &'static str = "n,r,psi_norm_sq,psi_max_sq,fn_max_sq";

    pub fn csv_row(&self, fmt: impl Fn(f64) -> String) -> String {
        format!(
            "{},{},{},{},{}",
            self.n,
            fmt(self.r),
            fmt(self.psi_norm_sq),
            fmt(self.psi_max_sq_on_circle),
            fmt(self.fn_max_sq)
        )
    }
}

/// `r^(2n) + (1 - r^(2n))^2 sum_{k>=1} r^(2n(k-1)) / (k n + 1)`, summed
/// directly until the term drops below 1e-16 relative.
pub fn psi_norm_sq(n: usize, r: f64) -> Result<f64> {
    check_open_unit(r, "r")?;
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let r2n = r.powi(2 * n as i32);
    let mut sum = 0.0;
    let mut pw = 1.0; // r^(2n(k-1))
    let mut k = 1usize;
    loop {
        let term = pw / (k as f64 * n as f64 + 1.0);
        sum += term;
        if term < 1e-16 * sum || k > 100_000 {
            break;
        }
        pw *= r2n;
        k += 1;
    }
    Ok(r2n + (1.0 - r2n).powi(2) * sum)
}

/// Closed form `4 r^(2n) / (1 + r^(2n))^2` for the circle maximum of
/// |psi|^2, attained at odd multiples of pi/n.
pub fn psi_max_sq_closed_form(n: usize, r: f64) -> Result<f64> {
    check_open_unit(r, "r")?;
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let r2n = r.powi(2 * n as i32);
    Ok(4.0 * r2n / (1.0 + r2n).powi(2))
}

/// psi as the quotient pair (z^n - r^n, 1 - r^n z^n).
pub fn psi_pair(n: usize, r: f64) -> Result<QuotientPair> {
    check_open_unit(r, "r")?;
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let rn = r.powi(n as i32);
    let mut num = vec![Complex64::new(0.0, 0.0); n + 1];
    num[0] = Complex64::new(-rn, 0.0);
    num[n] = Complex64::new(1.0, 0.0);
    let mut den = vec![Complex64::new(0.0, 0.0); n + 1];
    den[0] = Complex64::new(1.0, 0.0);
    den[n] = Complex64::new(-rn, 0.0);
    QuotientPair::new(Poly::new(num), Poly::new(den))
}

/// psi as a truncated series with an honest tail bound: the single-zero
/// Blaschke expansion at a = r^n composed with z -> z^n.
pub fn psi_truncated_series(n: usize, r: f64, order: usize) -> Result<TruncatedSeries> {
    check_open_unit(r, "r")?;
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let rn = r.powi(n as i32);
    let b = BlaschkeProduct::new(vec![Complex64::new(rn, 0.0)], 0.0)?;
    b.to_series(order)?.compose_zn(n)
}

/// The full row: series norm, closed-form circle maximum, and the normalized
/// maximum; by the maximum principle the maximum of |f_n| over |z| <= r sits
/// on the circle |z| = r.
pub fn dual_demo(n: usize, r: f64) -> Result<DualDemoRow> {
    let norm_sq = psi_norm_sq(n, r)?;
    let max_sq = psi_max_sq_closed_form(n, r)?;
    Ok(DualDemoRow {
        n,
        r,
        psi_norm_sq: norm_sq,
        psi_max_sq_on_circle: max_sq,
        fn_max_sq: max_sq / norm_sq,
    })
}
