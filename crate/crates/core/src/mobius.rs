//! Closed-form machinery for degree-1 pairs.
//!
//! A quotient of degree-1 polynomials is a Moebius map; when its pole lies in
//! the hole |z| < c it sends the circle |z| = c to a circle, and the maximum
//! modulus over |z| = c is the distance from the origin to the farthest point
//! of that image circle. Minimizing over the parameterization yields the
//! exact degree-1 value: 1 for c <= 1/sqrt(2), otherwise 1/(sqrt(2) c).

use num_complex::Complex64;

use crate::bergman::Poly;
use crate::error::{Error, Result};
use crate::quotient::QuotientPair;

const DEGENERACY_TOL: f64 = 1e-12;

/// Parameters (alpha, beta, gamma, delta, t) of the quotient
/// `(alpha + beta e^{it} z) / (gamma + delta z)` with nonnegative moduli.
///
/// Unit-norm degree-1 polynomials satisfy `alpha^2 + beta^2/2 = 1` and
/// `gamma^2 + delta^2/2 = 1`; the reduced coordinates are a = alpha/beta and
/// b = gamma/delta.
#[derive(Clone, Copy, Debug)]
pub struct Deg1Params {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub t: f64,
}

impl Deg1Params {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64, t: f64) -> Result<Self> {
        if alpha < 0.0 || beta < 0.0 || gamma < 0.0 || delta < 0.0 {
            return Err(Error::Domain("Deg1Params moduli must be nonnegative".into()));
        }
        if beta == 0.0 && alpha == 0.0 {
            return Err(Error::Domain("numerator parameters cannot both vanish".into()));
        }
        if delta == 0.0 && gamma == 0.0 {
            return Err(Error::Domain("denominator parameters cannot both vanish".into()));
        }
        Ok(Deg1Params { alpha, beta, gamma, delta, t })
    }

    /// Unit-norm parameterization: beta = sqrt(2 (1 - alpha^2)) and
    /// delta = sqrt(2 (1 - gamma^2)).
    pub fn unit_norm(alpha: f64, gamma: f64, t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) || !(0.0..=1.0).contains(&gamma) {
            return Err(Error::Domain("unit-norm parameters need alpha, gamma in [0, 1]".into()));
        }
        Deg1Params::new(
            alpha,
            (2.0 * (1.0 - alpha * alpha)).sqrt(),
            gamma,
            (2.0 * (1.0 - gamma * gamma)).sqrt(),
            t,
        )
    }

    /// a = alpha / beta, defined when beta > 0.
    pub fn reduced_a(&self) -> Option<f64> {
        (self.beta > 0.0).then(|| self.alpha / self.beta)
    }

    /// b = gamma / delta, defined when delta > 0.
    pub fn reduced_b(&self) -> Option<f64> {
        (self.delta > 0.0).then(|| self.gamma / self.delta)
    }

    /// Whether the pole -gamma/delta lies in the hole |z| < c.
    pub fn pole_in_hole(&self, c: f64) -> bool {
        self.delta > 0.0 && self.gamma < self.delta * c
    }

    /// The explicit quotient pair (alpha + beta e^{it} z, gamma + delta z).
    pub fn quotient(&self) -> QuotientPair {
        let num = Poly::new(vec![
            Complex64::new(self.alpha, 0.0),
            Complex64::from_polar(self.beta, self.t),
        ]);
        let den = Poly::from_real(&[self.gamma, self.delta]);
        QuotientPair::new(num, den).expect("delta or gamma nonzero")
    }

    fn numerator_center(&self, c: f64) -> Complex64 {
        Complex64::new(self.alpha * self.gamma, 0.0)
            - Complex64::from_polar(self.beta * self.delta * c * c, self.t)
    }

    fn numerator_radius(&self) -> Complex64 {
        Complex64::new(self.alpha * self.delta, 0.0)
            - Complex64::from_polar(self.beta * self.gamma, self.t)
    }
}

/// Center `(alpha gamma - beta delta c^2 e^{it}) / (gamma^2 - delta^2 c^2)`
/// of the image of |z| = c.
pub fn image_center(p: &Deg1Params, c: f64) -> Result<Complex64> {
    let denom = p.gamma * p.gamma - p.delta * p.delta * c * c;
    if denom.abs() < DEGENERACY_TOL {
        return Err(Error::DegenerateCircle);
    }
    Ok(p.numerator_center(c) / denom)
}

/// Radius `c |alpha delta - beta gamma e^{it}| / (delta^2 c^2 - gamma^2)` of
/// the image of |z| = c; requires the pole inside the circle (delta c > gamma).
pub fn image_radius(p: &Deg1Params, c: f64) -> Result<f64> {
    let denom = p.delta * p.delta * c * c - p.gamma * p.gamma;
    if denom < DEGENERACY_TOL || !p.pole_in_hole(c) {
        return Err(Error::DegenerateCircle);
    }
    Ok(c * p.numerator_radius().norm() / denom)
}

/// Modulus of the farthest point of the image circle:
/// `(|alpha gamma - beta delta c^2 e^{it}| + c |alpha delta - beta gamma e^{it}|)
///  / (delta^2 c^2 - gamma^2)`,
/// which equals |image_center| + image_radius and the maximum of the quotient
/// modulus over |z| = c.
pub fn farthest_modulus(p: &Deg1Params, c: f64) -> Result<f64> {
    let denom = p.delta * p.delta * c * c - p.gamma * p.gamma;
    if denom < DEGENERACY_TOL || !p.pole_in_hole(c) {
        return Err(Error::DegenerateCircle);
    }
    Ok((p.numerator_center(c).norm() + c * p.numerator_radius().norm()) / denom)
}

/// Exact degree-1 value: 1 for c <= 1/sqrt(2), else 1/(sqrt(2) c).
pub fn f1_closed_form(c: f64) -> Result<f64> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::Domain(format!("annulus radius {c} not in (0, 1]")));
    }
    let threshold = 1.0 / std::f64::consts::SQRT_2;
    Ok(if c <= threshold { 1.0 } else { 1.0 / (std::f64::consts::SQRT_2 * c) })
}

/// The nontrivial stationary values of the degree-1 case analysis together
/// with the trivial candidate 1; their minimum is `f1_closed_form(c)`.
///
/// Labels: `numerator_zero_at_c` is the critical value with the numerator
/// zero at the circle edge, `pole_at_origin` is the limit with the
/// denominator zero pushed to the origin.
pub fn case_candidates(c: f64) -> Result<Vec<(&'static str, f64)>> {
    let threshold = 1.0 / std::f64::consts::SQRT_2;
    if !(c > threshold && c <= 1.0) {
        return Err(Error::Domain(format!(
            "case candidates defined for 1/sqrt(2) < c <= 1, got {c}"
        )));
    }
    let s2 = std::f64::consts::SQRT_2;
    Ok(vec![
        ("numerator_zero_at_c", 2.0 * s2 * c / (1.0 + 2.0 * c * c)),
        ("pole_at_origin", 1.0 / (s2 * c)),
        ("trivial", 1.0),
    ])
}

/// The extremal pair (1, sqrt(2) z); unit norms, independent of c.
pub fn extremal_pair_deg1() -> (Poly, Poly) {
    (
        Poly::constant(1.0),
        Poly::monomial(std::f64::consts::SQRT_2, 1),
    )
}
