//! Evaluation of |f/g| objectives on circles and annuli.
//!
//! For a quotient analytic on the closed annulus c <= |z| <= 1, the supremum
//! over c <= |z| < 1 equals the larger of the two circle maxima, so the
//! annulus supremum is evaluated on the circles |z| = c and |z| = 1 after
//! pole classification and cancellation of common zeros.

use num_complex::Complex64;

use crate::bergman::Poly;
use crate::error::{Error, Result};
use crate::roots::{roots, TAU_CLUSTER};

/// Tolerance for deciding whether a root lies on/in the annulus; roots within
/// it of |z| = c (or |z| = 1) count as inside, which forces cancellation
/// analysis.
pub const TAU_BOUNDARY: f64 = 1e-9;

/// Default angular grid for circle scans.
pub const DEFAULT_CIRCLE_GRID: usize = 1024;

/// Default golden-section iterations after the grid scan; brings the angular
/// resolution below 1e-12.
pub const DEFAULT_REFINE_ITERS: usize = 60;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Ordered (numerator, denominator) pair; the denominator is nonzero.
#[derive(Clone, Debug)]
pub struct QuotientPair {
    pub num: Poly,
    pub den: Poly,
}

impl QuotientPair {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(QuotientPair { num, den })
    }

    /// |num(z)| / |den(z)|; infinite when the denominator vanishes under a
    /// nonzero numerator.
    pub fn abs_ratio(&self, z: Complex64) -> f64 {
        let n = self.num.eval(z).norm();
        let d = self.den.eval(z).norm();
        if d == 0.0 {
            if n == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            n / d
        }
    }
}

/// Pole/zero classification of a quotient over the annulus band
/// `[c - TAU_BOUNDARY, 1 + TAU_BOUNDARY]`.
#[derive(Clone, Debug)]
pub struct PoleReport {
    pub annulus_radius: f64,
    /// Denominator zeros in the band not fully matched by numerator zeros,
    /// with their order deficit.
    pub uncancelled_poles: Vec<(Complex64, usize)>,
    /// Denominator zeros in the band matched by the numerator, with the
    /// common order.
    pub cancelled_zeros: Vec<(Complex64, usize)>,
    pub analytic_in_annulus: bool,
}

impl PoleReport {
    pub fn total_deficit(&self) -> usize {
        self.uncancelled_poles.iter().map(|(_, d)| d).sum()
    }
}

/// Maximum of |num/den| over a circle.
#[derive(Clone, Copy, Debug)]
pub struct CircleMaxResult {
    pub radius: f64,
    pub value: f64,
    /// Angle of the refined maximum, in [0, 2 pi).
    pub arg_max_angle: f64,
    pub samples_used: usize,
}

/// Result of the annulus supremum: finite with a witness point, or infinite
/// because of uncancelled poles.
#[derive(Clone, Debug)]
pub enum AnnulusSup {
    Finite(CircleMaxResult),
    Infinite(PoleReport),
}

impl AnnulusSup {
    pub fn value(&self) -> Option<f64> {
        match self {
            AnnulusSup::Finite(r) => Some(r.value),
            AnnulusSup::Infinite(_) => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, AnnulusSup::Infinite(_))
    }
}

fn in_band(modulus: f64, c: f64) -> bool {
    modulus >= c - TAU_BOUNDARY && modulus <= 1.0 + TAU_BOUNDARY
}

/// Compares numerator and denominator zeros over the annulus band.
///
/// A denominator zero of order m is cancelled when the numerator has a zero
/// of order >= m at the same point (within the clustering tolerance).
pub fn classify_poles(pair: &QuotientPair, c: f64) -> Result<PoleReport> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::Domain(format!("annulus radius {c} not in (0, 1)")));
    }
    if pair.den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let mut uncancelled = Vec::new();
    let mut cancelled = Vec::new();
    if pair.num.is_zero() {
        // quotient is identically zero
        return Ok(PoleReport {
            annulus_radius: c,
            uncancelled_poles: uncancelled,
            cancelled_zeros: cancelled,
            analytic_in_annulus: true,
        });
    }
    let num_roots = roots(&pair.num);
    for (zeta, mult_den) in roots(&pair.den) {
        if !in_band(zeta.norm(), c) {
            continue;
        }
        let mult_num: usize = num_roots
            .iter()
            .filter(|(w, _)| (w - zeta).norm() <= TAU_CLUSTER)
            .map(|(_, m)| m)
            .sum();
        if mult_num >= mult_den {
            cancelled.push((zeta, mult_den));
        } else {
            uncancelled.push((zeta, mult_den - mult_num));
        }
    }
    let analytic = uncancelled.is_empty();
    Ok(PoleReport {
        annulus_radius: c,
        uncancelled_poles: uncancelled,
        cancelled_zeros: cancelled,
        analytic_in_annulus: analytic,
    })
}

/// Synthetic division of p by (z - zeta); the remainder is discarded.
fn deflate_root(p: &Poly, zeta: Complex64) -> Poly {
    let d = p.degree();
    if d == 0 {
        return p.clone();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); d];
    let mut carry = p.coeff(d);
    for k in (0..d).rev() {
        out[k] = carry;
        carry = p.coeff(k) + zeta * carry;
    }
    Poly::new(out)
}

/// Removes each common annulus-band zero from both numerator and denominator.
///
/// The quotient is unchanged away from the removed zeros; the resulting
/// denominator has no roots in the band.
pub fn deflate_common_zeros(pair: &QuotientPair, c: f64) -> Result<QuotientPair> {
    let report = classify_poles(pair, c)?;
    if let Some(&(location, deficit)) = report.uncancelled_poles.first() {
        return Err(Error::UncancelledPole { location, deficit });
    }
    let mut num = pair.num.clone();
    let mut den = pair.den.clone();
    for (zeta, m) in report.cancelled_zeros {
        for _ in 0..m {
            num = deflate_root(&num, zeta);
            den = deflate_root(&den, zeta);
        }
    }
    QuotientPair::new(num, den)
}

/// Golden-section maximization on [a, b]; returns (x, f(x)) and the number of
/// function evaluations.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64, usize) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    for _ in 0..iters {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        evals += 1;
    }
    if f1 > f2 {
        (x1, f1, evals)
    } else {
        (x2, f2, evals)
    }
}

/// Golden-section minimization on [a, b].
fn golden_min(f: impl Fn(f64) -> f64, a: f64, b: f64, iters: usize) -> (f64, f64, usize) {
    let (x, v, e) = golden_max(|x| -f(x), a, b, iters);
    (x, -v, e)
}

/// Maximum of |num/den| over the circle |z| = r: uniform grid scan followed
/// by golden-section refinement around the best grid point. Deterministic;
/// ties go to the smallest angle.
pub fn circle_max(
    pair: &QuotientPair,
    r: f64,
    n_grid: usize,
    refine_iters: usize,
) -> Result<CircleMaxResult> {
    if n_grid < 64 {
        return Err(Error::Config(format!("circle grid {n_grid} below minimum 64")));
    }
    if r.is_nan() || r <= 0.0 {
        return Err(Error::Domain(format!("circle radius {r} must be positive")));
    }
    for (zeta, _) in roots(&pair.den) {
        if (zeta.norm() - r).abs() <= TAU_BOUNDARY {
            return Err(Error::PoleOnCircle { radius: r, location: zeta });
        }
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let h = |theta: f64| pair.abs_ratio(Complex64::from_polar(r, theta));

    let mut best_idx = 0usize;
    let mut best_val = f64::NEG_INFINITY;
    for j in 0..n_grid {
        let v = h(two_pi * j as f64 / n_grid as f64);
        if v > best_val {
            best_val = v;
            best_idx = j;
        }
    }
    let theta0 = two_pi * best_idx as f64 / n_grid as f64;
    let step = two_pi / n_grid as f64;
    let (theta_ref, val_ref, refine_evals) = golden_max(h, theta0 - step, theta0 + step, refine_iters);
    let (mut theta, value) = if val_ref > best_val {
        (theta_ref, val_ref)
    } else {
        (theta0, best_val)
    };
    theta = theta.rem_euclid(two_pi);
    Ok(CircleMaxResult {
        radius: r,
        value,
        arg_max_angle: theta,
        samples_used: n_grid + refine_evals,
    })
}

/// Supremum of |num/den| over the annulus c <= |z| < 1 with defaults.
pub fn annulus_sup(pair: &QuotientPair, c: f64) -> Result<AnnulusSup> {
    annulus_sup_with(pair, c, DEFAULT_CIRCLE_GRID, DEFAULT_REFINE_ITERS)
}

/// Supremum of |num/den| over the annulus: infinite if uncancelled poles
/// exist, otherwise the larger of the two circle maxima of the deflated
/// quotient (maximum principle on the closed annulus). Ties prefer the
/// smaller angle, then the smaller radius.
pub fn annulus_sup_with(
    pair: &QuotientPair,
    c: f64,
    n_grid: usize,
    refine_iters: usize,
) -> Result<AnnulusSup> {
    let report = classify_poles(pair, c)?;
    if !report.analytic_in_annulus {
        return Ok(AnnulusSup::Infinite(report));
    }
    let deflated = deflate_common_zeros(pair, c)?;
    let inner = circle_max(&deflated, c, n_grid, refine_iters)?;
    let outer = circle_max(&deflated, 1.0, n_grid, refine_iters)?;
    let best = if outer.value > inner.value
        || (outer.value == inner.value
            && (outer.arg_max_angle, outer.radius) < (inner.arg_max_angle, inner.radius))
    {
        CircleMaxResult {
            samples_used: inner.samples_used + outer.samples_used,
            ..outer
        }
    } else {
        CircleMaxResult {
            samples_used: inner.samples_used + outer.samples_used,
            ..inner
        }
    };
    Ok(AnnulusSup::Finite(best))
}

/// Worst violation of |f(z)| <= |g(z)| over the annulus, sampled on the
/// radii {c, (c+1)/2, 1} and refined around the worst point. Zero means
/// admissible within sampling resolution.
pub fn objective_fb_violation(f: &Poly, g: &Poly, c: f64, n_grid: usize) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let excess = |r: f64, theta: f64| {
        let z = Complex64::from_polar(r, theta);
        f.eval(z).norm() - g.eval(z).norm()
    };
    let radii = [c, 0.5 * (c + 1.0), 1.0];
    let n = n_grid.max(64);
    let mut worst = (f64::NEG_INFINITY, radii[0], 0.0f64);
    for &r in &radii {
        for j in 0..n {
            let theta = two_pi * j as f64 / n as f64;
            let v = excess(r, theta);
            if v > worst.0 {
                worst = (v, r, theta);
            }
        }
    }
    let step = two_pi / n as f64;
    let (theta_ref, v_theta, _) = golden_max(
        |t| excess(worst.1, t),
        worst.2 - step,
        worst.2 + step,
        DEFAULT_REFINE_ITERS,
    );
    let mut best = worst.0.max(v_theta);
    let theta_star = if v_theta > worst.0 { theta_ref } else { worst.2 };
    let (_, v_radial, _) = golden_max(|r| excess(r, theta_star), c, 1.0, DEFAULT_REFINE_ITERS);
    best = best.max(v_radial);
    best.max(0.0)
}

/// Minimum of |g(z)|^2 - |f(z)|^2 over an n_r x n_theta polar grid of the
/// annulus, with local refinement around the grid minimum.
///
/// A grid approximation without an attainment guarantee: |g|^2 - |f|^2 is not
/// governed by a boundary maximum principle, so the full annulus is sampled.
pub fn objective_g(f: &Poly, g: &Poly, c: f64, n_r: usize, n_theta: usize) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let gap = |r: f64, theta: f64| {
        let z = Complex64::from_polar(r, theta);
        g.eval(z).norm_sqr() - f.eval(z).norm_sqr()
    };
    let n_r = n_r.max(2);
    let n_theta = n_theta.max(16);
    let mut best = (f64::INFINITY, c, 0.0f64);
    for i in 0..n_r {
        let r = c + (1.0 - c) * i as f64 / (n_r - 1) as f64;
        for j in 0..n_theta {
            let theta = two_pi * j as f64 / n_theta as f64;
            let v = gap(r, theta);
            if v < best.0 {
                best = (v, r, theta);
            }
        }
    }
    let (mut min_val, r0, theta0) = best;
    let dtheta = two_pi / n_theta as f64;
    let (theta_ref, v_theta, _) =
        golden_min(|t| gap(r0, t), theta0 - dtheta, theta0 + dtheta, DEFAULT_REFINE_ITERS);
    let theta_star = if v_theta < min_val { theta_ref } else { theta0 };
    min_val = min_val.min(v_theta);
    let dr = (1.0 - c) / (n_r - 1) as f64;
    let (_, v_radial, _) = golden_min(
        |r| gap(r, theta_star),
        (r0 - dr).max(c),
        (r0 + dr).min(1.0),
        DEFAULT_REFINE_ITERS,
    );
    min_val.min(v_radial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bergman::Poly;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const SQRT2: f64 = std::f64::consts::SQRT_2;
    const PI: f64 = std::f64::consts::PI;

    fn sqrt2_z() -> Poly {
        Poly::monomial(SQRT2, 1)
    }

    #[test]
    fn classify_pole_inside_hole_is_analytic() {
        let pair = QuotientPair::new(Poly::constant(1.0), sqrt2_z()).unwrap();
        let rep = classify_poles(&pair, 0.8).unwrap();
        assert!(rep.analytic_in_annulus);
        assert!(rep.uncancelled_poles.is_empty());
        assert!(rep.cancelled_zeros.is_empty());
    }

    #[test]
    fn classify_identical_pair() {
        let z = Poly::monomial(1.0, 1);
        let pair = QuotientPair::new(z.clone(), z).unwrap();
        let rep = classify_poles(&pair, 0.5).unwrap();
        assert!(rep.analytic_in_annulus);
        assert!(rep.cancelled_zeros.is_empty()); // root 0 lies inside the hole
    }

    #[test]
    fn classify_uncancelled_pole() {
        let pair =
            QuotientPair::new(Poly::constant(1.0), Poly::from_real(&[-0.9, 1.0])).unwrap();
        let rep = classify_poles(&pair, 0.8).unwrap();
        assert!(!rep.analytic_in_annulus);
        assert_eq!(rep.uncancelled_poles.len(), 1);
        let (z, deficit) = rep.uncancelled_poles[0];
        assert_abs_diff_eq!(z.re, 0.9, epsilon = 1e-10);
        assert_eq!(deficit, 1);
    }

    #[test]
    fn deflation_removes_common_factor() {
        // ((z-0.9) * 1, (z-0.9) * sqrt2 z) -> (1, sqrt2 z)
        let common = Poly::from_real(&[-0.9, 1.0]);
        let pair = QuotientPair::new(
            &common * &Poly::constant(1.0),
            &common * &sqrt2_z(),
        )
        .unwrap();
        let deflated = deflate_common_zeros(&pair, 0.8).unwrap();
        // quotient unchanged at 100 random annulus points
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let r = rng.gen_range(0.8..1.0);
            let theta = rng.gen_range(0.0..2.0 * PI);
            let z = Complex64::from_polar(r, theta);
            if (z.re - 0.9).abs() < 1e-3 && z.im.abs() < 1e-3 {
                continue;
            }
            assert_abs_diff_eq!(
                pair.abs_ratio(z),
                deflated.abs_ratio(z),
                epsilon = 1e-9
            );
        }
        assert!(roots(&deflated.den).iter().all(|(z, _)| z.norm() < 0.8 - TAU_BOUNDARY));
    }

    #[test]
    fn deflation_noop_cases() {
        let pair = QuotientPair::new(Poly::constant(1.0), sqrt2_z()).unwrap();
        let deflated = deflate_common_zeros(&pair, 0.8).unwrap();
        assert_eq!(deflated.num, pair.num);
        assert_eq!(deflated.den, pair.den);

        let pair = QuotientPair::new(Poly::monomial(1.0, 2), Poly::monomial(1.0, 1)).unwrap();
        let deflated = deflate_common_zeros(&pair, 0.5).unwrap();
        assert_eq!(deflated.den, pair.den);

        let bad = QuotientPair::new(Poly::constant(1.0), Poly::from_real(&[-0.9, 1.0])).unwrap();
        assert!(matches!(
            deflate_common_zeros(&bad, 0.8),
            Err(Error::UncancelledPole { .. })
        ));
    }

    #[test]
    fn circle_max_constant_modulus() {
        let pair = QuotientPair::new(Poly::constant(1.0), sqrt2_z()).unwrap();
        let res = circle_max(&pair, 0.8, 1024, 60).unwrap();
        assert_abs_diff_eq!(res.value, 1.0 / (SQRT2 * 0.8), epsilon = 1e-12);
    }

    #[test]
    fn circle_max_blaschke_factor() {
        // (z - 0.5)/(1 - 0.5 z) on |z| = 0.5: max 0.8 at theta = pi
        let pair = QuotientPair::new(
            Poly::from_real(&[-0.5, 1.0]),
            Poly::from_real(&[1.0, -0.5]),
        )
        .unwrap();
        let res = circle_max(&pair, 0.5, 1024, 60).unwrap();
        assert_abs_diff_eq!(res.value, 0.8, epsilon = 1e-9);
        assert_abs_diff_eq!(res.arg_max_angle, PI, epsilon = 1e-6);
        // dense-scan oracle
        let mut dense = 0.0f64;
        for j in 0..100_000 {
            let theta = 2.0 * PI * j as f64 / 1e5;
            dense = dense.max(pair.abs_ratio(Complex64::from_polar(0.5, theta)));
        }
        assert_abs_diff_eq!(res.value, dense, epsilon = 1e-8);
    }

    #[test]
    fn circle_max_identical_polys() {
        let p = Poly::from_real(&[0.3, -0.8, 0.1]);
        let pair = QuotientPair::new(p.clone(), p).unwrap();
        let res = circle_max(&pair, 0.7, 256, 40).unwrap();
        assert_abs_diff_eq!(res.value, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn circle_max_rejects_pole_on_circle() {
        let pair = QuotientPair::new(Poly::constant(1.0), Poly::from_real(&[-0.8, 1.0])).unwrap();
        assert!(matches!(
            circle_max(&pair, 0.8, 256, 30),
            Err(Error::PoleOnCircle { .. })
        ));
        assert!(matches!(
            circle_max(&pair, 0.5, 32, 30),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn annulus_sup_extremal_pair() {
        let pair = QuotientPair::new(Poly::constant(1.0), sqrt2_z()).unwrap();
        match annulus_sup(&pair, 0.8).unwrap() {
            AnnulusSup::Finite(res) => {
                assert_abs_diff_eq!(res.value, 1.0 / (SQRT2 * 0.8), epsilon = 1e-9);
                assert_abs_diff_eq!(res.radius, 0.8, epsilon = 0.0);
            }
            AnnulusSup::Infinite(_) => panic!("expected finite"),
        }
    }

    #[test]
    fn annulus_sup_uncancelled_is_infinite() {
        let pair = QuotientPair::new(Poly::constant(1.0), Poly::from_real(&[-0.9, 1.0])).unwrap();
        assert!(annulus_sup(&pair, 0.8).unwrap().is_infinite());
    }

    #[test]
    fn annulus_sup_shifted_monomial_family() {
        // (sqrt(n-1) z^(n-2), sqrt(n) z^(n-1)) with n = 4, c = 0.9:
        // |f/g| = sqrt(3/4)/|z|, maximal at |z| = c.
        let pair = QuotientPair::new(Poly::monomial(3.0f64.sqrt(), 2), Poly::monomial(2.0, 3))
            .unwrap();
        let sup = annulus_sup(&pair, 0.9).unwrap().value().unwrap();
        assert_abs_diff_eq!(sup, (0.75f64).sqrt() / 0.9, epsilon = 1e-9);
        // dense two-circle oracle
        let mut dense = 0.0f64;
        for &r in &[0.9, 1.0] {
            for j in 0..50_000 {
                let theta = 2.0 * PI * j as f64 / 5e4;
                dense = dense.max(pair.abs_ratio(Complex64::from_polar(r, theta)));
            }
        }
        assert_abs_diff_eq!(sup, dense, epsilon = 1e-8);
    }

    #[test]
    fn fb_violation_hayman_configuration() {
        let z = Poly::monomial(1.0, 1);
        assert_eq!(objective_fb_violation(&Poly::constant(0.8), &z, 0.9, 256), 0.0);
        let v = objective_fb_violation(&Poly::constant(0.95), &z, 0.9, 256);
        assert_abs_diff_eq!(v, 0.05, epsilon = 1e-9);
        let f = Poly::from_real(&[0.2, 0.4, -0.1]);
        assert_eq!(objective_fb_violation(&f, &f, 0.7, 256), 0.0);
    }

    #[test]
    fn objective_g_examples() {
        let f = Poly::from_real(&[0.2, 0.4, -0.1]);
        assert_abs_diff_eq!(objective_g(&f, &f, 0.5, 24, 64), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            objective_g(&Poly::zero(), &Poly::constant(1.0), 0.5, 24, 64),
            1.0,
            epsilon = 1e-12
        );
        // min over annulus of 2|z|^2 - 0.64 = 0.98 at |z| = 0.9
        let v = objective_g(&Poly::constant(0.8), &Poly::monomial(SQRT2, 1), 0.9, 48, 128);
        assert_abs_diff_eq!(v, 0.98, epsilon = 1e-9);
    }

    #[test]
    fn rotation_and_scale_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let f = Poly::new(
                (0..3)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect(),
            );
            let den_root = Complex64::from_polar(rng.gen_range(0.05..0.5), rng.gen_range(0.0..2.0 * PI));
            let g = Poly::new(vec![-den_root, Complex64::new(1.0, 0.0)]);
            let c = 0.8;
            let base = annulus_sup(&QuotientPair::new(f.clone(), g.clone()).unwrap(), c)
                .unwrap()
                .value()
                .unwrap();

            // rotation z -> e^{i phi} z
            let phi = rng.gen_range(0.0..2.0 * PI);
            let rot = |p: &Poly| {
                Poly::new(
                    p.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, &a)| a * Complex64::from_polar(1.0, phi * k as f64))
                        .collect(),
                )
            };
            let rotated = annulus_sup(&QuotientPair::new(rot(&f), rot(&g)).unwrap(), c)
                .unwrap()
                .value()
                .unwrap();
            assert_abs_diff_eq!(base, rotated, epsilon = 1e-9);

            // scale covariance
            let lambda = Complex64::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.0..1.0));
            let mu = Complex64::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.0..1.0));
            let scaled = annulus_sup(
                &QuotientPair::new(f.scale(lambda), g.scale(mu)).unwrap(),
                c,
            )
            .unwrap()
            .value()
            .unwrap();
            let expected = (lambda.norm() / mu.norm()) * base;
            assert!((scaled - expected).abs() <= 1e-9 * expected.max(1.0));
        }
    }
}
