//! Polynomial root finding.
//!
//! Aberth-Ehrlich simultaneous iteration from deterministic circular initial
//! guesses, Newton polishing, then clustering within `TAU_CLUSTER` to detect
//! multiplicities. Merged clusters are refined with the multiplicity-aware
//! Newton step z -= m p(z)/p'(z) and kept only when the derivative profile
//! confirms the multiplicity.

use num_complex::Complex64;

use crate::bergman::{Poly, TAU_ZERO};

/// Roots closer than this are treated as one root of higher multiplicity.
pub const TAU_CLUSTER: f64 = 1e-7;

const MAX_ABERTH_ITERS: usize = 400;
const ABERTH_TOL: f64 = 1e-14;

/// All roots of `p` with multiplicities, sorted by (re, im).
///
/// Degree-zero (and zero) polynomials have no roots and return an empty list.
pub fn roots(p: &Poly) -> Vec<(Complex64, usize)> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let coeffs = p.coeffs();
    let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let cutoff = TAU_ZERO * max_abs;

    // a_0 = ... = a_{k-1} = 0 means a root of multiplicity k at the origin.
    let origin_mult = coeffs.iter().take_while(|c| c.norm() <= cutoff).count();
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    if origin_mult > 0 {
        out.push((Complex64::new(0.0, 0.0), origin_mult));
    }
    let work = Poly::new(coeffs[origin_mult..].to_vec());
    if work.degree() >= 1 {
        let mut zs = aberth(&work);
        for z in &mut zs {
            *z = newton_polish(&work, *z, 4);
        }
        out.extend(cluster(&work, &zs));
    }
    out.sort_by(|a, b| {
        a.0.re
            .total_cmp(&b.0.re)
            .then(a.0.im.total_cmp(&b.0.im))
    });
    out
}

/// Rebuilds `lead * prod (z - zeta_i)^(m_i)`; test oracle for reconstruction.
pub fn from_roots(lead: Complex64, roots: &[(Complex64, usize)]) -> Poly {
    let mut p = Poly::constant(lead);
    for &(zeta, m) in roots {
        let factor = Poly::new(vec![-zeta, Complex64::new(1.0, 0.0)]);
        for _ in 0..m {
            p = &p * &factor;
        }
    }
    p
}

fn aberth(p: &Poly) -> Vec<Complex64> {
    let d = p.degree();
    let lead = p.coeff(d);
    let monic: Vec<Complex64> = p.coeffs().iter().map(|&c| c / lead).collect();
    let mp = Poly::new(monic.clone());

    // Cauchy bound on root moduli; guesses on a circle with an angular
    // offset so real-axis symmetric configurations do not stall.
    let bound = 1.0 + monic[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let radius = (monic[0].norm().powf(1.0 / d as f64)).clamp(0.05 * bound, bound).max(1e-3);
    let mut zs: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.43;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..MAX_ABERTH_ITERS {
        let mut max_step = 0.0f64;
        for i in 0..d {
            let zi = zs[i];
            let (pv, dv) = mp.eval_with_derivative(zi);
            if pv.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() > 0.0 {
                pv / dv
            } else {
                Complex64::new(1e-8, 1e-8)
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for (j, &zj) in zs.iter().enumerate() {
                if j != i {
                    let diff = zi - zj;
                    if diff.norm() > 0.0 {
                        sum += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * sum;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            zs[i] = zi - step;
            max_step = max_step.max(step.norm() / (1.0 + zs[i].norm()));
        }
        if max_step < ABERTH_TOL {
            break;
        }
    }
    zs
}

fn newton_polish(p: &Poly, mut z: Complex64, iters: usize) -> Complex64 {
    for _ in 0..iters {
        let (pv, dv) = p.eval_with_derivative(z);
        if dv.norm() <= 1e-300 {
            break;
        }
        let step = pv / dv;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

fn modified_newton(p: &Poly, mut z: Complex64, m: f64, iters: usize) -> Complex64 {
    for _ in 0..iters {
        let (pv, dv) = p.eval_with_derivative(z);
        if dv.norm() <= 1e-300 {
            break;
        }
        let step = pv / dv * m;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

/// Union-find style clustering within `TAU_CLUSTER`, with derivative-based
/// confirmation of each merged multiplicity.
fn cluster(p: &Poly, zs: &[Complex64]) -> Vec<(Complex64, usize)> {
    let n = zs.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = i;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (zs[i] - zs[j]).norm() <= TAU_CLUSTER {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match seen[r] {
            Some(g) => groups[g].push(i),
            None => {
                seen[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }

    let mut out = Vec::new();
    for g in groups {
        let m = g.len();
        if m == 1 {
            out.push((zs[g[0]], 1));
            continue;
        }
        let centroid = g.iter().map(|&i| zs[i]).sum::<Complex64>() / m as f64;
        let refined = modified_newton(p, centroid, m as f64, 6);
        if multiplicity_confirmed(p, refined, m) {
            out.push((refined, m));
        } else {
            for &i in &g {
                out.push((zs[i], 1));
            }
        }
    }
    out
}

/// A point carries multiplicity m when |p^(m-1)| is negligible against the
/// scale set by |p^(m)| at cluster resolution.
fn multiplicity_confirmed(p: &Poly, z: Complex64, m: usize) -> bool {
    let mut d = p.clone();
    for _ in 0..(m - 1) {
        d = d.derivative();
    }
    let low = d.eval(z).norm();
    let high = d.derivative().eval(z).norm();
    low <= 1e-4 * high.max(1e-300) || low == 0.0
}
