//! Grid-level behavior of the searches: monotone trends in c, degree
//! nesting, the bound sandwich, and thread-count independence.

use korenblum::bounds::{bound_f_lower, bound_fb};
use korenblum::exec::with_thread_cap;
use korenblum::search::{maximize_fb, minimize_f, SearchConfig};

fn trend_config(n: usize, c: f64) -> SearchConfig {
    let mut cfg = SearchConfig::new(n, c);
    cfg.restarts = 12;
    cfg.max_iters = 1200;
    cfg.n_grid = 256;
    cfg.seed = 7;
    cfg
}

#[test]
fn f_estimates_non_increasing_in_c() {
    let mut prev = f64::INFINITY;
    for i in 0..20 {
        let c = 0.5 + 0.45 * i as f64 / 19.0;
        let res = minimize_f(&trend_config(1, c)).unwrap();
        assert!(
            res.objective <= prev + 2e-3,
            "c = {c}: {} after {prev}",
            res.objective
        );
        // bound sandwich holds along the way
        assert!(res.objective > bound_f_lower(c).unwrap());
        assert!(res.objective <= 1.0 + 1e-9);
        prev = res.objective;
    }
}

#[test]
fn fb_estimates_non_decreasing_in_c() {
    let mut prev = f64::NEG_INFINITY;
    for i in 0..20 {
        let c = 0.4 + 0.5 * i as f64 / 19.0;
        let mut cfg = trend_config(1, c);
        cfg.restarts = 10;
        let res = maximize_fb(&cfg).unwrap();
        assert!(
            res.objective >= prev - 2e-3,
            "c = {c}: {} after {prev}",
            res.objective
        );
        assert!(res.objective <= bound_fb(c).unwrap() + 1e-6);
        prev = res.objective;
    }
}

#[test]
fn degree_nesting() {
    for &c in &[0.75, 0.85] {
        let deg1 = minimize_f(&trend_config(1, c)).unwrap().objective;
        let deg2 = minimize_f(&trend_config(2, c)).unwrap().objective;
        assert!(deg2 <= deg1 + 2e-3, "c = {c}: F_2 est {deg2} vs F_1 est {deg1}");
    }
}

#[test]
fn degree1_oracle_at_stated_radii() {
    for &c in &[0.72, 0.75, 0.8, 0.85, 0.9, 0.95] {
        let mut cfg = SearchConfig::new(1, c);
        cfg.restarts = 64;
        cfg.seed = 7;
        let res = minimize_f(&cfg).unwrap();
        let exact = korenblum::mobius::f1_closed_form(c).unwrap();
        assert!(
            (res.objective - exact).abs() <= 1e-3,
            "c = {c}: {} vs {exact}",
            res.objective
        );
    }
}

#[test]
fn kappa_brackets_non_increasing_to_degree_4() {
    let mut base = trend_config(1, 0.5);
    base.restarts = 10;
    base.max_iters = 800;
    let brackets = korenblum::search::estimate_kappa_sequence(4, 1e-3, &base).unwrap();
    assert_eq!(brackets.len(), 4);
    for pair in brackets.windows(2) {
        assert!(pair[1].lower <= pair[0].upper);
    }
    for est in &brackets {
        assert!(est.lower > 0.28185 - 5e-3);
    }
}

#[test]
fn results_identical_across_thread_counts() {
    let cfg = trend_config(1, 0.8);
    let single = with_thread_cap(Some(1), || minimize_f(&cfg).unwrap());
    let several = with_thread_cap(Some(8), || minimize_f(&cfg).unwrap());
    assert_eq!(
        serde_json::to_string(&single).unwrap(),
        serde_json::to_string(&several).unwrap()
    );
    let fb_single = with_thread_cap(Some(1), || maximize_fb(&cfg).unwrap());
    let fb_several = with_thread_cap(Some(8), || maximize_fb(&cfg).unwrap());
    assert_eq!(
        serde_json::to_string(&fb_single).unwrap(),
        serde_json::to_string(&fb_several).unwrap()
    );
}
