//! Finite Blaschke products and their truncated power-series expansions.
//!
//! Each factor expands as `(z - a)/(1 - conj(a) z) =
//! -a + (1 - |a|^2) sum_{k>=1} conj(a)^(k-1) z^k`; the product series is the
//! convolution of factor series. The discarded tail carries an honest bound
//! built from the coefficient majorant of the factored form, which is why
//! zeros with |a| > 0.95 are refused rather than silently expanded.

use num_complex::Complex64;

use crate::bergman::{Poly, TruncatedSeries};
use crate::error::{Error, Result};

/// Largest zero modulus for which series expansion is allowed.
pub const MAX_ZERO_MODULUS: f64 = 0.95;

const MIN_TRUNCATION: usize = 16;

/// `e^{i phase} prod (z - a_j)/(1 - conj(a_j) z)` with all |a_j| < 1.
#[derive(Clone, Debug)]
pub struct BlaschkeProduct {
    zeros: Vec<Complex64>,
    phase: f64,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<Complex64>, phase: f64) -> Result<Self> {
        for a in &zeros {
            if a.norm() >= 1.0 - 1e-9 {
                return Err(Error::Domain(format!(
                    "Blaschke zero with |a| = {} not inside the open disk",
                    a.norm()
                )));
            }
        }
        Ok(BlaschkeProduct { zeros, phase })
    }

    pub fn order(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::from_polar(1.0, self.phase);
        for &a in &self.zeros {
            acc *= (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
        }
        acc
    }

    /// `e^{i phase} prod (z - a_j)`.
    pub fn numerator_poly(&self) -> Poly {
        let mut p = Poly::constant(Complex64::from_polar(1.0, self.phase));
        for &a in &self.zeros {
            p = &p * &Poly::new(vec![-a, Complex64::new(1.0, 0.0)]);
        }
        p
    }

    /// `prod (1 - conj(a_j) z)`.
    pub fn denominator_poly(&self) -> Poly {
        let mut p = Poly::constant(1.0);
        for &a in &self.zeros {
            p = &p * &Poly::new(vec![Complex64::new(1.0, 0.0), -a.conj()]);
        }
        p
    }

    /// Truncated Taylor expansion to order `n_trunc` with a tail bound.
    pub fn to_series(&self, n_trunc: usize) -> Result<TruncatedSeries> {
        if n_trunc < MIN_TRUNCATION {
            return Err(Error::Config(format!(
                "truncation order {n_trunc} below minimum {MIN_TRUNCATION}"
            )));
        }
        for a in &self.zeros {
            if a.norm() > MAX_ZERO_MODULUS {
                return Err(Error::ZeroTooCloseToBoundary { modulus: a.norm() });
            }
        }
        let mut coeffs = vec![Complex64::from_polar(1.0, self.phase)];
        for &a in &self.zeros {
            coeffs = convolve_truncated(&coeffs, &factor_series(a, n_trunc), n_trunc);
        }
        TruncatedSeries::new(coeffs, self.tail_bound(n_trunc))
    }

    /// Expansion with the truncation order doubled until the tail bound (the
    /// width of the norm interval) drops below `target_width`.
    pub fn to_series_auto(&self, target_width: f64) -> Result<TruncatedSeries> {
        let mut n = 64usize;
        loop {
            let s = self.to_series(n)?;
            if s.tail_bound() < target_width || n >= 1 << 16 {
                return Ok(s);
            }
            n *= 2;
        }
    }

    /// Bergman-norm bound on the series tail beyond `n_trunc`.
    ///
    /// |c_k| is bounded by the convolution of the factor majorants
    /// w(0) = |a|, w(k) = (1 - |a|^2)|a|^(k-1); past the computed window the
    /// majorant itself is bounded by C(k+m-1, m-1) q^(k-m) with q = max |a_j|.
    fn tail_bound(&self, n_trunc: usize) -> f64 {
        let m = self.zeros.len();
        if m == 0 {
            return 0.0;
        }
        let q = self.zeros.iter().map(|a| a.norm()).fold(0.0, f64::max);
        let window = n_trunc + 512;
        let mut majorant = vec![1.0f64];
        for a in &self.zeros {
            let r = a.norm();
            let mut w = vec![r];
            let mut pw = 1.0;
            for _ in 1..=window {
                w.push((1.0 - r * r) * pw);
                pw *= r;
            }
            let mut next = vec![0.0; window + 1];
            for (i, &x) in majorant.iter().enumerate() {
                if x == 0.0 {
                    continue;
                }
                for (j, &y) in w.iter().enumerate() {
                    if i + j > window {
                        break;
                    }
                    next[i + j] += x * y;
                }
            }
            majorant = next;
        }
        let mut tail_sq: f64 = majorant
            .iter()
            .enumerate()
            .skip(n_trunc + 1)
            .map(|(k, &w)| w * w / (k as f64 + 1.0))
            .sum();
        if q > 0.0 {
            // geometric remainder beyond the window
            let mut k = window + 1;
            let mut bin = (1..m).map(|i| (k + i) as f64 / i as f64).product::<f64>();
            let mut pw = q.powi((k - m) as i32);
            loop {
                let term = (bin * pw).powi(2) / (k as f64 + 1.0);
                tail_sq += term;
                if term < 1e-18 * (tail_sq + 1e-300) || term == 0.0 || k > window + 200_000 {
                    break;
                }
                bin *= (k + m) as f64 / (k + 1) as f64;
                pw *= q;
                k += 1;
            }
        }
        tail_sq.sqrt()
    }
}

fn factor_series(a: Complex64, n_trunc: usize) -> Vec<Complex64> {
    let mut out = vec![-a];
    let scale = 1.0 - a.norm_sqr();
    let mut pw = Complex64::new(1.0, 0.0);
    for _ in 1..=n_trunc {
        out.push(scale * pw);
        pw *= a.conj();
    }
    out
}

fn convolve_truncated(a: &[Complex64], b: &[Complex64], n_trunc: usize) -> Vec<Complex64> {
    let len = (a.len() + b.len() - 1).min(n_trunc + 1);
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for (i, &x) in a.iter().enumerate() {
        if i >= len {
            break;
        }
        for (j, &y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}
