//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities (run with `--nocapture` to see them).

use std::process::Command;

use korenblum::bergman::Poly;
use korenblum::bounds::{bound_f_lower, bound_fb, dual_demo, psi_norm_sq, psi_pair, psi_truncated_series};
use korenblum::mobius::{self, extremal_pair_deg1, f1_closed_form, Deg1Params};
use korenblum::quotient::{
    annulus_sup, circle_max, deflate_common_zeros, objective_fb_violation, QuotientPair,
};
use korenblum::search::{
    estimate_kappa_n, estimate_kappa_sequence, maximize_fb, minimize_f, SearchConfig,
};
use korenblum_oracles::{annulus_scan_sup, circle_scan_max, disk_norm_quadrature};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PI: f64 = std::f64::consts::PI;
const SQRT2: f64 = std::f64::consts::SQRT_2;

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> Poly {
    Poly::new(
        (0..=deg)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

#[test]
fn criterion_1_coefficient_norm_exactness() {
    for k in 0..=10usize {
        let err = (Poly::monomial(1.0, k).bergman_norm() - 1.0 / ((k as f64 + 1.0).sqrt())).abs();
        assert!(err <= 1e-12, "monomial z^{k}: error {err}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let deg = rng.gen_range(0..=8);
        let p = random_poly(&mut rng, deg);
        let coeff = p.bergman_norm();
        let quad = disk_norm_quadrature(&p);
        let rel = (coeff - quad).abs() / coeff.max(1e-12);
        worst = worst.max(rel);
        assert!(rel <= 1e-8, "relative error {rel}");
    }
    println!("criterion 1 (coefficient-norm exactness): PASS (worst quadrature rel err {worst:.2e})");
}

#[test]
fn criterion_2_degree1_closed_form() {
    let (p, q) = extremal_pair_deg1();
    let pair = QuotientPair::new(p, q).unwrap();
    for &c in &[0.72, 0.8, 0.9, 1.0 - 1e-6] {
        let sup = annulus_sup(&pair, c).unwrap().value().unwrap();
        let err = (sup - 1.0 / (SQRT2 * c)).abs();
        assert!(err <= 1e-9, "c = {c}: annulus_sup error {err}");
    }
    let mut worst: f64 = 0.0;
    for &c in &[0.75, 0.8, 0.9] {
        let mut cfg = SearchConfig::new(1, c);
        cfg.restarts = 64;
        cfg.seed = 7;
        let res = minimize_f(&cfg).unwrap();
        let err = (res.objective - f1_closed_form(c).unwrap()).abs();
        worst = worst.max(err);
        assert!(err <= 1e-3, "c = {c}: search error {err}");
    }
    println!("criterion 2 (degree-1 closed form): PASS (worst search error {worst:.2e})");
}

#[test]
fn criterion_3_kappa1_recovery() {
    let mut base = SearchConfig::new(1, 0.5);
    base.restarts = 32;
    base.seed = 7;
    let est = estimate_kappa_n(1, 1e-3, &base).unwrap();
    let width = est.upper - est.lower;
    assert!(width <= 5e-3, "bracket width {width}");
    assert!(
        est.lower <= 1.0 / SQRT2 && 1.0 / SQRT2 <= est.upper,
        "bracket [{}, {}] misses 1/sqrt(2)",
        est.lower,
        est.upper
    );
    println!(
        "criterion 3 (kappa_1 recovery): PASS (bracket [{:.6}, {:.6}], {} evaluations)",
        est.lower, est.upper, est.evaluations
    );
}

#[test]
fn criterion_4_bound_sandwiches() {
    for n in [1usize, 2] {
        for &c in &[0.75, 0.8, 0.9] {
            let mut cfg = SearchConfig::new(n, c);
            cfg.restarts = 32;
            cfg.seed = 11;
            let f_est = minimize_f(&cfg).unwrap().objective;
            assert!(
                f_est > bound_f_lower(c).unwrap(),
                "n = {n}, c = {c}: F estimate {f_est} not above sqrt(1-c^2)"
            );
            let mut fb_cfg = cfg.clone();
            fb_cfg.restarts = 24;
            let fb_est = maximize_fb(&fb_cfg).unwrap().objective;
            let lo = (c * c - 0.5).max(0.0) - 1e-3;
            let hi = bound_fb(c).unwrap() + 1e-6;
            assert!(
                fb_est >= lo && fb_est <= hi,
                "n = {n}, c = {c}: F_B estimate {fb_est} outside [{lo}, {hi}]"
            );
        }
    }
    println!("criterion 4 (F and F_B bound sandwiches): PASS (n in {{1,2}}, c in {{0.75,0.8,0.9}})");
}

#[test]
fn criterion_5_dual_demo_closed_forms() {
    // series norm vs coefficient norm of the truncation
    let direct = psi_norm_sq(1, 0.5).unwrap();
    let series = psi_truncated_series(1, 0.5, 512).unwrap();
    let lower = series.norm().lower;
    assert!((lower * lower - direct).abs() <= 1e-9, "norm routes differ");
    assert!((direct - 0.589139).abs() <= 1e-6, "psi_norm_sq(1, 0.5) = {direct}");

    for n in [1usize, 2, 3] {
        for &r in &[0.3, 0.5, 0.7] {
            let closed = korenblum::bounds::psi_max_sq_closed_form(n, r).unwrap();
            let (scan, _) = circle_scan_max(&psi_pair(n, r).unwrap(), r, 400_000);
            assert!(
                (closed - scan * scan).abs() <= 1e-8,
                "n = {n}, r = {r}: closed {closed} vs scan^2 {}",
                scan * scan
            );
        }
    }

    let mut prev = f64::INFINITY;
    for n in 1..=16 {
        let row = dual_demo(n, 0.5).unwrap();
        assert!(row.fn_max_sq < prev, "fn_max_sq not strictly decreasing at n = {n}");
        prev = row.fn_max_sq;
    }
    println!("criterion 5 (dual-demo closed forms): PASS (fn_max_sq(16, 0.5) = {prev:.3e})");
}

#[test]
fn criterion_6_moebius_geometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    for _ in 0..200 {
        let c = rng.gen_range(0.3..0.95);
        let (p, far) = loop {
            let delta: f64 = rng.gen_range(0.5..1.5);
            let gamma: f64 = rng.gen_range(0.0..0.85 * c) * delta;
            let alpha: f64 = rng.gen_range(0.0..1.5);
            let beta: f64 = rng.gen_range(0.1..1.5);
            let t: f64 = rng.gen_range(0.0..2.0 * PI);
            if (gamma * gamma - delta * delta * c * c).abs() <= 1e-6 {
                continue;
            }
            let p = Deg1Params::new(alpha, beta, gamma, delta, t).unwrap();
            break (p, mobius::farthest_modulus(&p, c).unwrap());
        };
        let center = mobius::image_center(&p, c).unwrap();
        let radius = mobius::image_radius(&p, c).unwrap();
        assert!(
            (far - (center.norm() + radius)).abs() <= 1e-10,
            "center/radius decomposition"
        );
        let scan = circle_max(&p.quotient(), c, 1024, 60).unwrap();
        assert!(
            (far - scan.value).abs() <= 1e-8 * far.max(1.0),
            "far {far} vs circle scan {}",
            scan.value
        );
    }
    let p = Deg1Params::new(1.0, 1.0, 0.5, 1.0, 0.0).unwrap();
    let far = mobius::farthest_modulus(&p, 0.8).unwrap();
    assert!((far - 0.54 / 0.39).abs() <= 1e-12);
    assert!((far - 1.384615).abs() <= 1e-6);
    println!("criterion 6 (Moebius image-circle geometry): PASS (worked example {far:.9})");
}

#[test]
fn criterion_7_kappa_consistency() {
    let mut base = SearchConfig::new(1, 0.5);
    base.restarts = 24;
    base.max_iters = 1500;
    base.n_grid = 256;
    base.seed = 7;
    // the sequence helper errors on a non-monotone bracket
    let brackets = estimate_kappa_sequence(3, 1e-3, &base).unwrap();
    for est in &brackets {
        assert!(est.lower > 0.27, "n = {}: lower {} too small", est.n, est.lower);
    }
    for pair in brackets.windows(2) {
        assert!(
            pair[1].lower <= pair[0].upper,
            "bracket for n = {} strictly above n = {}",
            pair[1].n,
            pair[0].n
        );
    }
    let summary: Vec<String> = brackets
        .iter()
        .map(|e| format!("kappa_{} in [{:.4}, {:.4}]", e.n, e.lower, e.upper))
        .collect();
    println!("criterion 7 (known-kappa consistency): PASS ({})", summary.join(", "));
}

fn run_search_payload(threads: &str) -> (String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_korenblum"))
        .args([
            "search", "--n", "1", "--c", "0.8", "--restarts", "8", "--seed", "7",
            "--max-iters", "800", "--n-grid", "256",
        ])
        .env("KORENBLUM_THREADS", threads)
        .output()
        .expect("run binary");
    (String::from_utf8(out.stdout).unwrap(), out.status.code())
}

#[test]
fn criterion_8_cli_determinism() {
    let (first, code) = run_search_payload("1");
    assert_eq!(code, Some(0));
    assert!(first.contains("\"objective\""));
    for threads in ["1", "8", "8"] {
        let (payload, code) = run_search_payload(threads);
        assert_eq!(code, Some(0));
        assert_eq!(payload, first, "payload differs under {threads} threads");
    }
    println!("criterion 8 (CLI determinism across thread counts): PASS");
}

#[test]
fn criterion_9_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let c = 0.75;

    // rotation invariance and scale covariance at 1e-9
    for _ in 0..10 {
        let f = random_poly(&mut rng, 2);
        let root = Complex64::from_polar(rng.gen_range(0.05..0.5 * c), rng.gen_range(0.0..2.0 * PI));
        let g = Poly::new(vec![-root, Complex64::new(1.0, 0.0)]);
        let base = annulus_sup(&QuotientPair::new(f.clone(), g.clone()).unwrap(), c)
            .unwrap()
            .value()
            .unwrap();

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
        assert!((base - rotated).abs() <= 1e-9, "rotation invariance");

        let lambda = Complex64::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.0..1.0));
        let mu = Complex64::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.0..1.0));
        let scaled = annulus_sup(&QuotientPair::new(f.scale(lambda), g.scale(mu)).unwrap(), c)
            .unwrap()
            .value()
            .unwrap();
        assert!(
            (scaled - (lambda.norm() / mu.norm()) * base).abs() <= 1e-9 * scaled.max(1.0),
            "scale covariance"
        );

        // maximum principle: interior scan never exceeds the two-circle value
        let pair = QuotientPair::new(f, g).unwrap();
        let brute = annulus_scan_sup(&pair, c, 100, 512);
        assert!(brute <= base * (1.0 + 1e-9) + 1e-12, "maximum principle");
    }

    // deflation soundness at 1e-9
    for _ in 0..5 {
        let f = random_poly(&mut rng, 2);
        let root = Complex64::from_polar(rng.gen_range(0.05..0.5 * c), rng.gen_range(0.0..2.0 * PI));
        let g = Poly::new(vec![-root, Complex64::new(1.0, 0.0)]);
        let zeta = Complex64::from_polar(rng.gen_range(c..0.98), rng.gen_range(0.0..2.0 * PI));
        let factor = Poly::new(vec![-zeta, Complex64::new(1.0, 0.0)]);
        let planted = QuotientPair::new(&f * &factor, &g * &factor).unwrap();
        let deflated = deflate_common_zeros(&planted, c).unwrap();
        for _ in 0..100 {
            let z = Complex64::from_polar(rng.gen_range(c..1.0), rng.gen_range(0.0..2.0 * PI));
            if (z - zeta).norm() < 1e-3 {
                continue;
            }
            let (a, b) = (planted.abs_ratio(z), deflated.abs_ratio(z));
            assert!((a - b).abs() <= 1e-9 * a.max(1.0), "deflation soundness");
        }
    }

    // dilation monotonicity (strict on a 100-point grid)
    for _ in 0..5 {
        let deg = rng.gen_range(1..6);
        let p = random_poly(&mut rng, deg);
        if p.degree() == 0 {
            continue;
        }
        let mut prev = 0.0;
        for i in 1..=100 {
            let nrm = p.dilate(i as f64 / 101.0).unwrap().bergman_norm();
            assert!(nrm > prev, "dilation monotonicity");
            prev = nrm;
        }
    }

    // derivative vs central finite difference at 1e-6
    let h = 1e-6;
    for _ in 0..20 {
        let deg = rng.gen_range(1..8);
        let p = random_poly(&mut rng, deg);
        let rho = rng.gen_range(0.05..0.95);
        let fd = (p.dilate(rho + h).unwrap().bergman_norm_sq()
            - p.dilate(rho - h).unwrap().bergman_norm_sq())
            / (2.0 * h);
        assert!(
            (p.dilation_norm_derivative(rho).unwrap() - fd).abs() <= 1e-6,
            "derivative vs finite difference"
        );
    }

    // the example-family transition doubles as a violation-suite check
    for n in 2..=4 {
        let ((f, g), threshold) = korenblum::bounds::example_pair_monomial(n).unwrap();
        assert_eq!(objective_fb_violation(&f, &g, threshold + 1e-3, 256), 0.0);
        assert!(objective_fb_violation(&f, &g, threshold - 1e-2, 256) > 0.0);
    }

    println!("criterion 9 (module property suites): PASS");
}
