//! Coefficient-space search for the extremal quantities.
//!
//! All searches are multistart Nelder-Mead over real/imaginary coefficient
//! coordinates. Restart 0 always starts from a canonical configuration (the
//! diagonal pair for infimum searches, the constant-against-z pair for the
//! norm-gap search), which pins the definitional bound; the remaining
//! restarts are seeded uniformly. Restarts are independent and reduced
//! deterministically, so results are bit-identical for a fixed seed
//! regardless of thread count.
//!
//! Reported values are one-sided: upper bounds for the infima F_n(c) and
//! F_n^B(c), a lower bound for the supremum F_B(c).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bergman::Poly;
use crate::blaschke::{BlaschkeProduct, MAX_ZERO_MODULUS};
use crate::error::{Error, Result};
use crate::exec::par_map_indexed;
use crate::nelder_mead::NelderMead;
use crate::quotient::{annulus_sup_with, objective_fb_violation, AnnulusSup, QuotientPair};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Polynomial degree bound (or Blaschke order).
    pub n: usize,
    /// Inner annulus radius.
    pub c: f64,
    pub restarts: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub simplex_tol: f64,
    pub penalty_weight: f64,
    /// Angular grid for circle scans inside the objective.
    pub n_grid: usize,
}

impl SearchConfig {
    pub fn new(n: usize, c: f64) -> Self {
        SearchConfig {
            n,
            c,
            restarts: 64,
            seed: 0,
            max_iters: 2000,
            simplex_tol: 1e-10,
            penalty_weight: 1e3,
            n_grid: 512,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("degree must be >= 1".into()));
        }
        if !(self.c > 0.0 && self.c < 1.0) {
            return Err(Error::Config(format!("c = {} not in (0, 1)", self.c)));
        }
        if self.restarts == 0 {
            return Err(Error::Config("restarts must be >= 1".into()));
        }
        if self.simplex_tol.is_nan() || self.simplex_tol <= 0.0 {
            return Err(Error::Config("simplex tolerance must be positive".into()));
        }
        if self.max_iters == 0 {
            return Err(Error::Config("max_iters must be >= 1".into()));
        }
        if self.penalty_weight.is_nan() || self.penalty_weight <= 0.0 {
            return Err(Error::Config("penalty weight must be positive".into()));
        }
        if self.n_grid < 64 {
            return Err(Error::Config("n_grid must be >= 64".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub objective: f64,
    pub witness_f: Poly,
    pub witness_g: Poly,
    pub attained_radius: f64,
    pub attained_angle: f64,
    /// Final objective of every restart, in restart order.
    pub restarts_summary: Vec<f64>,
    pub converged: bool,
}

/// Bracketing interval for kappa_n from bisection on c.
#[derive(Clone, Debug, Serialize)]
pub struct KappaEstimate {
    pub n: usize,
    pub lower: f64,
    pub upper: f64,
    /// The value counts as "below 1" when the estimate drops under
    /// 1 - threshold.
    pub threshold: f64,
    /// Number of search evaluations spent.
    pub evaluations: usize,
}

const KAPPA_BRACKET_LO: f64 = 0.28;
const KAPPA_BRACKET_HI: f64 = 0.95;
const KAPPA_BRACKET_WIDTH: f64 = 5e-3;

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed ^ (restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x1234_5678),
    )
}

fn pack_dim(n: usize) -> usize {
    4 * (n + 1)
}

fn unpack_pair(x: &[f64], n: usize) -> (Poly, Poly) {
    let m = n + 1;
    let f = Poly::new(
        (0..m)
            .map(|k| Complex64::new(x[k], x[m + k]))
            .collect(),
    );
    let g = Poly::new(
        (0..m)
            .map(|k| Complex64::new(x[2 * m + k], x[3 * m + k]))
            .collect(),
    );
    (f, g)
}

fn pack_pair(f: &Poly, g: &Poly, n: usize) -> Vec<f64> {
    let m = n + 1;
    let mut x = vec![0.0; 4 * m];
    for k in 0..m {
        x[k] = f.coeff(k).re;
        x[m + k] = f.coeff(k).im;
        x[2 * m + k] = g.coeff(k).re;
        x[3 * m + k] = g.coeff(k).im;
    }
    x
}

/// Objective for the infimum problems: normalizes both polynomials to unit
/// norm and evaluates the annulus supremum of their quotient; uncancelled
/// poles are replaced by a finite penalty so simplices can retreat.
pub fn objective_f(f: &Poly, g: &Poly, c: f64, penalty_weight: f64) -> Result<f64> {
    objective_f_with(f, g, c, penalty_weight, 512)
}

pub fn objective_f_with(
    f: &Poly,
    g: &Poly,
    c: f64,
    penalty_weight: f64,
    n_grid: usize,
) -> Result<f64> {
    let fn_ = f.normalize()?;
    let gn = g.normalize()?;
    let pair = QuotientPair::new(fn_, gn)?;
    Ok(match annulus_sup_with(&pair, c, n_grid, 60)? {
        AnnulusSup::Finite(r) => r.value,
        AnnulusSup::Infinite(rep) => penalty_weight * (1.0 + rep.total_deficit() as f64),
    })
}

struct RestartOutcome {
    objective: f64,
    x: Vec<f64>,
    converged: bool,
}

fn run_restarts(
    config: &SearchConfig,
    dim: usize,
    canonical: impl Fn(usize) -> Option<Vec<f64>> + Sync,
    objective: impl Fn(&[f64]) -> f64 + Sync,
) -> Vec<RestartOutcome> {
    let nm = NelderMead {
        max_iters: config.max_iters,
        tol: config.simplex_tol,
    };
    par_map_indexed(config.restarts, |r| {
        let x0 = canonical(r).unwrap_or_else(|| {
            let mut rng = restart_rng(config.seed, r);
            (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect()
        });
        let out = nm.minimize(&objective, &x0, 0.25);
        RestartOutcome {
            objective: out.value,
            x: out.x,
            converged: out.converged,
        }
    })
}

fn best_restart(outcomes: &[RestartOutcome]) -> usize {
    let mut best = 0;
    for i in 1..outcomes.len() {
        if outcomes[i].objective < outcomes[best].objective {
            best = i;
        }
    }
    best
}

/// Upper-bound estimate of F_n(c) by multistart search over unit-norm
/// polynomial pairs of degree at most n.
pub fn minimize_f(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let n = config.n;
    let dim = pack_dim(n);
    let (c, w, grid) = (config.c, config.penalty_weight, config.n_grid);

    let objective = move |x: &[f64]| -> f64 {
        let (f, g) = unpack_pair(x, n);
        if f.bergman_norm() < 1e-9 || g.bergman_norm() < 1e-9 {
            return 10.0 * w;
        }
        objective_f_with(&f, &g, c, w, grid).unwrap_or(10.0 * w)
    };
    // restart 0: the diagonal pair (objective exactly 1);
    // restart 1: the degree-1 extremal pair embedded at higher degree.
    let canonical = move |r: usize| -> Option<Vec<f64>> {
        match r {
            0 => Some(pack_pair(&Poly::constant(1.0), &Poly::constant(1.0), n)),
            1 => Some(pack_pair(
                &Poly::constant(1.0),
                &Poly::monomial(std::f64::consts::SQRT_2, 1),
                n,
            )),
            _ => None,
        }
    };

    let outcomes = run_restarts(config, dim, canonical, objective);
    let best = best_restart(&outcomes);
    let (f, g) = unpack_pair(&outcomes[best].x, n);
    let witness_f = f.normalize()?;
    let witness_g = g.normalize()?;
    let pair = QuotientPair::new(witness_f.clone(), witness_g.clone())?;
    let (objective_value, radius, angle) = match annulus_sup_with(&pair, c, grid, 60)? {
        AnnulusSup::Finite(r) => (r.value, r.radius, r.arg_max_angle),
        AnnulusSup::Infinite(rep) => (
            w * (1.0 + rep.total_deficit() as f64),
            f64::NAN,
            f64::NAN,
        ),
    };
    Ok(SearchResult {
        objective: objective_value,
        witness_f,
        witness_g,
        attained_radius: radius,
        attained_angle: angle,
        restarts_summary: outcomes.iter().map(|o| o.objective).collect(),
        converged: outcomes[best].converged,
    })
}

/// Scales (f, g) into the admissible set: norms at most 1 and |f| <= |g| on
/// the annulus. Returns the repaired pair and its norm gap.
fn repair_fb(f: &Poly, g: &Poly, c: f64, n_grid: usize) -> Result<(Poly, Poly, f64)> {
    if g.bergman_norm() < 1e-12 {
        return Ok((Poly::zero(), Poly::zero(), 0.0));
    }
    let g_norm = g.bergman_norm();
    let g_hat = if g_norm > 1.0 {
        g.scale(Complex64::new(1.0 / g_norm, 0.0))
    } else {
        g.clone()
    };
    let f_norm = f.bergman_norm();
    let mut f_hat = if f_norm > 1.0 {
        f.scale(Complex64::new(1.0 / f_norm, 0.0))
    } else {
        f.clone()
    };
    if f_hat.bergman_norm() < 1e-12 {
        f_hat = Poly::zero();
    } else {
        let pair = QuotientPair::new(f_hat.clone(), g_hat.clone())?;
        match annulus_sup_with(&pair, c, n_grid, 60)? {
            AnnulusSup::Finite(r) => {
                if r.value > 1.0 {
                    // small margin against scan resolution
                    f_hat = f_hat.scale(Complex64::new(1.0 / (r.value * (1.0 + 1e-9)), 0.0));
                }
            }
            AnnulusSup::Infinite(_) => f_hat = Poly::zero(),
        }
    }
    let gap = f_hat.bergman_norm_sq() - g_hat.bergman_norm_sq();
    Ok((f_hat, g_hat, gap))
}

/// Lower-bound estimate of F_B(c): maximizes the norm gap over pairs with
/// norms at most 1 and |f| <= |g| on the annulus, enforced by penalty during
/// the search and by feasibility repair before reporting.
pub fn maximize_fb(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let n = config.n;
    let dim = pack_dim(n);
    let (c, w, grid) = (config.c, config.penalty_weight, config.n_grid);

    let objective = move |x: &[f64]| -> f64 {
        let (f, g) = unpack_pair(x, n);
        let gap = f.bergman_norm_sq() - g.bergman_norm_sq();
        let violation = objective_fb_violation(&f, &g, c, grid.min(256));
        let norm_excess =
            (f.bergman_norm() - 1.0).max(0.0) + (g.bergman_norm() - 1.0).max(0.0);
        -gap + w * violation + w * norm_excess
    };
    // restart 0: the constant-against-z configuration
    let canonical = move |r: usize| -> Option<Vec<f64>> {
        (r == 0).then(|| pack_pair(&Poly::constant(1.0), &Poly::monomial(1.0, 1), n))
    };

    let outcomes = run_restarts(config, dim, canonical, objective);
    // re-rank restarts by their repaired (honest) gap
    let repaired: Vec<(Poly, Poly, f64)> = outcomes
        .iter()
        .map(|o| {
            let (f, g) = unpack_pair(&o.x, n);
            repair_fb(&f, &g, c, grid)
        })
        .collect::<Result<_>>()?;
    let mut best = 0;
    for i in 1..repaired.len() {
        if repaired[i].2 > repaired[best].2 {
            best = i;
        }
    }
    let (witness_f, witness_g, gap) = repaired[best].clone();
    let (radius, angle) = if witness_f.is_zero() {
        (c, 0.0)
    } else {
        let pair = QuotientPair::new(witness_f.clone(), witness_g.clone())?;
        match annulus_sup_with(&pair, c, grid, 60)? {
            AnnulusSup::Finite(r) => (r.radius, r.arg_max_angle),
            AnnulusSup::Infinite(_) => (c, 0.0),
        }
    };
    Ok(SearchResult {
        objective: gap,
        witness_f,
        witness_g,
        attained_radius: radius,
        attained_angle: angle,
        restarts_summary: repaired.iter().map(|r| r.2).collect(),
        converged: outcomes[best].converged,
    })
}

/// Brackets kappa_n by bisection on c over [0.28, 0.95]: c is above kappa_n
/// when the F_n(c) estimate drops below 1 - eps. Stops once the bracket is
/// narrower than 5e-3.
pub fn estimate_kappa_n(n: usize, eps: f64, base: &SearchConfig) -> Result<KappaEstimate> {
    if !(eps > 1e-4 && eps < 0.1) {
        return Err(Error::Config(format!("eps = {eps} outside (1e-4, 0.1)")));
    }
    let mut config = base.clone();
    config.n = n;
    let mut lo = KAPPA_BRACKET_LO;
    let mut hi = KAPPA_BRACKET_HI;
    let mut evaluations = 0;
    while hi - lo >= KAPPA_BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        config.c = mid;
        let est = minimize_f(&config)?.objective;
        evaluations += 1;
        if est < 1.0 - eps {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(KappaEstimate {
        n,
        lower: lo,
        upper: hi,
        threshold: eps,
        evaluations,
    })
}

/// Brackets kappa_1 .. kappa_n. The brackets must be non-increasing in n
/// (kappa_{n+1} <= kappa_n); a bracket strictly above its predecessor is a
/// search failure and is reported as an error rather than silently returned.
pub fn estimate_kappa_sequence(
    n_max: usize,
    eps: f64,
    base: &SearchConfig,
) -> Result<Vec<KappaEstimate>> {
    let mut out: Vec<KappaEstimate> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let est = estimate_kappa_n(n, eps, base)?;
        if let Some(prev) = out.last() {
            if est.lower > prev.upper {
                return Err(Error::NonMonotoneBracket { n });
            }
        }
        out.push(est);
    }
    Ok(out)
}

/// Maps an unconstrained plane point into the disk of radius
/// `MAX_ZERO_MODULUS` by a radial tanh squash.
fn squash_to_disk(re: f64, im: f64) -> Complex64 {
    let r = (re * re + im * im).sqrt();
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let scale = MAX_ZERO_MODULUS * r.tanh() / r;
    Complex64::new(re * scale, im * scale)
}

/// The quotient of two normalized Blaschke products evaluated exactly in
/// rational form: |B_f / B_g| = |P_f Q_g| / |Q_f P_g| times the norm ratio,
/// so the annulus machinery sees polynomials of degree at most 2n instead of
/// long truncations.
pub fn blaschke_pair_objective(
    bf: &BlaschkeProduct,
    bg: &BlaschkeProduct,
    c: f64,
    penalty_weight: f64,
    n_grid: usize,
) -> Result<f64> {
    let norm_f = bf.to_series_auto(1e-8)?.norm().lower;
    let norm_g = bg.to_series_auto(1e-8)?.norm().lower;
    let num = &bf.numerator_poly() * &bg.denominator_poly();
    let den = &bf.denominator_poly() * &bg.numerator_poly();
    let pair = QuotientPair::new(num, den)?;
    Ok(match annulus_sup_with(&pair, c, n_grid, 60)? {
        AnnulusSup::Finite(r) => r.value * norm_g / norm_f,
        AnnulusSup::Infinite(rep) => penalty_weight * (1.0 + rep.total_deficit() as f64),
    })
}

fn unpack_blaschke(x: &[f64], m: usize) -> (BlaschkeProduct, BlaschkeProduct) {
    let build = |slice: &[f64]| {
        let zeros = (0..m)
            .map(|j| squash_to_disk(slice[2 * j], slice[2 * j + 1]))
            .collect();
        BlaschkeProduct::new(zeros, slice[2 * m]).expect("squashed zeros are inside the disk")
    };
    let half = 2 * m + 1;
    (build(&x[..half]), build(&x[half..]))
}

/// Upper-bound estimate of F_n^B(c) over normalized Blaschke products of
/// order n: the same multistart scheme over squashed zero positions plus a
/// phase per product.
pub fn minimize_f_blaschke(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let m = config.n;
    let dim = 2 * (2 * m + 1);
    let (c, w, grid) = (config.c, config.penalty_weight, config.n_grid);

    let objective = move |x: &[f64]| -> f64 {
        let (bf, bg) = unpack_blaschke(x, m);
        blaschke_pair_objective(&bf, &bg, c, w, grid).unwrap_or(10.0 * w)
    };
    // restart 0: both products z^m (zeros at the origin), objective 1
    let canonical = move |r: usize| -> Option<Vec<f64>> { (r == 0).then(|| vec![0.0; dim]) };

    let outcomes = run_restarts(config, dim, canonical, objective);
    let best = best_restart(&outcomes);
    let (bf, bg) = unpack_blaschke(&outcomes[best].x, m);
    let objective_value = blaschke_pair_objective(&bf, &bg, c, w, grid)?;

    // witnesses: normalized truncations (unit Bergman norm by construction)
    let to_witness = |b: &BlaschkeProduct| -> Result<Poly> {
        let series = b.to_series_auto(1e-8)?;
        let trunc = series.truncation();
        trunc.normalize()
    };
    let witness_f = to_witness(&bf)?;
    let witness_g = to_witness(&bg)?;
    let rational = QuotientPair::new(
        &bf.numerator_poly() * &bg.denominator_poly(),
        &bf.denominator_poly() * &bg.numerator_poly(),
    )?;
    let (radius, angle) = match annulus_sup_with(&rational, c, grid, 60)? {
        AnnulusSup::Finite(r) => (r.radius, r.arg_max_angle),
        AnnulusSup::Infinite(_) => (f64::NAN, f64::NAN),
    };
    Ok(SearchResult {
        objective: objective_value,
        witness_f,
        witness_g,
        attained_radius: radius,
        attained_angle: angle,
        restarts_summary: outcomes.iter().map(|o| o.objective).collect(),
        converged: outcomes[best].converged,
    })
}
