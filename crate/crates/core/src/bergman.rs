//! Exact Bergman-space arithmetic on polynomials and truncated power series.
//!
//! For f(z) = sum a_k z^k analytic on the unit disk, the A^2 norm is
//! `(sum |a_k|^2 / (k+1))^(1/2)`, so every norm here is computed directly
//! from coefficients. Quadrature over the disk exists only as a test oracle.

use num_complex::Complex64;
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Relative threshold below which trailing coefficients are dropped so that
/// the degree is well defined.
pub const TAU_ZERO: f64 = 1e-14;

/// Polynomial with complex coefficients, index = power of z.
///
/// Canonical form: non-empty coefficient vector with no trailing entries
/// below `TAU_ZERO` relative to the largest coefficient. The zero polynomial
/// is a single zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cutoff = TAU_ZERO * max_abs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
            coeffs.pop();
        }
        if coeffs.is_empty() || max_abs == 0.0 {
            coeffs = vec![Complex64::new(0.0, 0.0)];
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly {
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    pub fn constant(c: impl Into<Complex64>) -> Self {
        Poly::new(vec![c.into()])
    }

    /// `coeff * z^k`.
    pub fn monomial(coeff: impl Into<Complex64>, k: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); k + 1];
        v[k] = coeff.into();
        Poly::new(v)
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of z^k, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }

    /// Evaluates p and p' in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| a * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, lambda: Complex64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| a * lambda).collect())
    }

    /// Squared Bergman norm `sum |a_k|^2 / (k+1)`.
    pub fn bergman_norm_sq(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.norm_sqr() / (k as f64 + 1.0))
            .sum()
    }

    pub fn bergman_norm(&self) -> f64 {
        self.bergman_norm_sq().sqrt()
    }

    /// Projects onto the unit sphere of A^2.
    pub fn normalize(&self) -> Result<Poly> {
        let nrm = self.bergman_norm();
        if nrm < TAU_ZERO {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.scale(Complex64::new(1.0 / nrm, 0.0)))
    }

    /// `p_rho(z) = p(rho z)`, i.e. coefficient k becomes `a_k rho^k`.
    pub fn dilate(&self, rho: f64) -> Result<Poly> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::Domain(format!("dilation radius {rho} not in (0, 1]")));
        }
        let mut pw = 1.0;
        Ok(Poly::new(
            self.coeffs
                .iter()
                .map(|&a| {
                    let c = a * pw;
                    pw *= rho;
                    c
                })
                .collect(),
        ))
    }

    /// d/drho of the squared dilation norm:
    /// `sum_{k>=1} 2 k rho^(2k-1) |a_k|^2 / (k+1)`.
    ///
    /// Nonnegative, and zero exactly when p is constant.
    pub fn dilation_norm_derivative(&self, rho: f64) -> Result<f64> {
        if !(rho > 0.0 && rho < 1.0) {
            return Err(Error::Domain(format!("dilation radius {rho} not in (0, 1)")));
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| {
                let k = k as f64;
                2.0 * k * rho.powi(2 * k as i32 - 1) * a.norm_sqr() / (k + 1.0)
            })
            .sum())
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

// Wire format: JSON array of [re, im] pairs, index = coefficient order.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.re, c.im])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PairSeq;
        impl<'de> Visitor<'de> for PairSeq {
            type Value = Poly;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an array of [re, im] pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Poly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some([re, im]) = seq.next_element::<[f64; 2]>()? {
                    coeffs.push(Complex64::new(re, im));
                }
                if coeffs.is_empty() {
                    coeffs.push(Complex64::new(0.0, 0.0));
                }
                Ok(Poly::new(coeffs))
            }
        }
        deserializer.deserialize_seq(PairSeq)
    }
}

/// Closed interval bracketing a norm computed from a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NormInterval {
    pub lower: f64,
    pub upper: f64,
}

impl NormInterval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// Initial segment of a power series together with an analytic bound on the
/// Bergman norm of the discarded tail.
///
/// The tail bound is supplied by the caller; each series family in this crate
/// has its own estimate.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    tail_bound: f64,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>, tail_bound: f64) -> Result<Self> {
        if !(tail_bound >= 0.0 && tail_bound.is_finite()) {
            return Err(Error::Domain(format!("tail bound {tail_bound} must be finite and >= 0")));
        }
        if coeffs.is_empty() {
            return Err(Error::Domain("truncation needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs, tail_bound })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// The truncation as a polynomial.
    pub fn truncation(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// `[norm of truncation, norm of truncation + tail bound]`.
    pub fn norm(&self) -> NormInterval {
        let lower = self.truncation().bergman_norm();
        NormInterval {
            lower,
            upper: lower + self.tail_bound,
        }
    }

    /// Substitutes z -> z^n, spreading coefficient k to index k n.
    ///
    /// The tail bound stays valid because 1/(k n + 1) <= 1/(k + 1).
    pub fn compose_zn(&self, n: usize) -> Result<TruncatedSeries> {
        if n == 0 {
            return Err(Error::Domain("substitution power must be >= 1".into()));
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (self.coeffs.len() - 1) * n + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k * n] = c;
        }
        TruncatedSeries::new(coeffs, self.tail_bound)
    }
}
