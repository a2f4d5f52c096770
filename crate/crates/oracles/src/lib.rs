//! Independent oracles used by the test suites.
//!
//! These deliberately avoid the coefficient-formula code paths they check:
//! norms come from 2-D quadrature over the disk, suprema from dense scans,
//! and image-circle geometry from three-point circumcenters.

use korenblum::bergman::Poly;
use korenblum::quotient::QuotientPair;
use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // P_n(x) and P_n'(x) via the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let mut p0 = 1.0;
        let mut p1 = x;
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// `((1/pi) \int_D |p(z)|^2 dA)^{1/2}` by 64-point Gauss-Legendre in the
/// radius times a 256-point uniform angular rule. Exact (to rounding) for
/// polynomials of degree <= 8.
pub fn disk_norm_quadrature(p: &Poly) -> f64 {
    disk_norm_quadrature_with(p, 64, 256)
}

pub fn disk_norm_quadrature_with(p: &Poly, n_radial: usize, n_angular: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n_radial);
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut integral = 0.0;
    for (x, wr) in nodes.iter().zip(&weights) {
        let r = 0.5 * (x + 1.0); // map [-1, 1] -> [0, 1]
        let mut ring = 0.0;
        for j in 0..n_angular {
            let theta = two_pi * j as f64 / n_angular as f64;
            ring += p.eval(Complex64::from_polar(r, theta)).norm_sqr();
        }
        ring *= two_pi / n_angular as f64;
        integral += wr * 0.5 * r * ring;
    }
    (integral / std::f64::consts::PI).sqrt()
}

/// Brute-force supremum of |num/den| over the closed annulus c <= |z| <= 1
/// on an n_r x n_theta polar grid including both boundary circles.
pub fn annulus_scan_sup(pair: &QuotientPair, c: f64, n_r: usize, n_theta: usize) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut best = 0.0f64;
    for i in 0..n_r {
        let r = c + (1.0 - c) * i as f64 / (n_r - 1) as f64;
        for j in 0..n_theta {
            let theta = two_pi * j as f64 / n_theta as f64;
            best = best.max(pair.abs_ratio(Complex64::from_polar(r, theta)));
        }
    }
    best
}

/// Dense scan of |num/den| over the circle |z| = r; returns (max, argmax).
pub fn circle_scan_max(pair: &QuotientPair, r: f64, n_theta: usize) -> (f64, f64) {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut best = (0.0f64, 0.0f64);
    for j in 0..n_theta {
        let theta = two_pi * j as f64 / n_theta as f64;
        let v = pair.abs_ratio(Complex64::from_polar(r, theta));
        if v > best.0 {
            best = (v, theta);
        }
    }
    best
}

/// Center of the circle through three points (perpendicular-bisector
/// intersection in complex form).
pub fn circumcenter(a: Complex64, b: Complex64, c: Complex64) -> Complex64 {
    let d = 2.0 * (a.re * (b.im - c.im) + b.re * (c.im - a.im) + c.re * (a.im - b.im));
    let ux = (a.norm_sqr() * (b.im - c.im)
        + b.norm_sqr() * (c.im - a.im)
        + c.norm_sqr() * (a.im - b.im))
        / d;
    let uy = (a.norm_sqr() * (c.re - b.re)
        + b.norm_sqr() * (a.re - c.re)
        + c.norm_sqr() * (b.re - a.re))
        / d;
    Complex64::new(ux, uy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // int_{-1}^{1} x^4 dx = 2/5
        let (nodes, weights) = gauss_legendre(16);
        let got: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(x, w)| w * x.powi(4))
            .sum();
        assert!((got - 0.4).abs() < 1e-14);
        let total: f64 = weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-13);
    }

    #[test]
    fn quadrature_matches_monomial_norms() {
        for k in 0..=8usize {
            let p = Poly::monomial(1.0, k);
            let got = disk_norm_quadrature(&p);
            let expected = 1.0 / ((k as f64 + 1.0).sqrt());
            assert!(
                (got - expected).abs() <= 1e-12 * expected,
                "k = {k}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn circumcenter_of_unit_circle_points() {
        let p = |t: f64| Complex64::from_polar(1.0, t) + Complex64::new(0.3, -0.2);
        let center = circumcenter(p(0.1), p(2.0), p(4.5));
        assert!((center - Complex64::new(0.3, -0.2)).norm() < 1e-12);
    }
}
