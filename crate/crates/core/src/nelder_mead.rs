//! Deterministic Nelder-Mead simplex minimizer.
//!
//! Classic coefficients (reflection 1, expansion 2, contraction 1/2,
//! shrink 1/2). No randomness: given the same starting point and objective,
//! the iterate sequence is bit-identical, which the search layer relies on
//! for reproducibility across thread counts.

#[derive(Clone, Copy, Debug)]
pub struct NelderMead {
    pub max_iters: usize,
    /// Convergence threshold on the simplex function-value spread.
    pub tol: f64,
}

#[derive(Clone, Debug)]
pub struct NmOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub iters: usize,
    pub converged: bool,
}

impl NelderMead {
    pub fn minimize(&self, f: impl Fn(&[f64]) -> f64, x0: &[f64], step: f64) -> NmOutcome {
        let dim = x0.len();
        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
        simplex.push(x0.to_vec());
        for i in 0..dim {
            let mut v = x0.to_vec();
            v[i] += if v[i] == 0.0 { step } else { step * (1.0 + v[i].abs()) };
            simplex.push(v);
        }
        let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();

        let mut iters = 0;
        let mut converged = false;
        while iters < self.max_iters {
            iters += 1;
            // order: stable sort keeps ties deterministic
            let mut order: Vec<usize> = (0..=dim).collect();
            order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
            let best = order[0];
            let worst = order[dim];
            let second_worst = order[dim - 1];

            let spread = values[worst] - values[best];
            if spread.abs() <= self.tol * (1.0 + values[best].abs()) {
                converged = true;
                break;
            }

            // centroid of all but the worst
            let mut centroid = vec![0.0; dim];
            for &i in order.iter().take(dim) {
                for (c, &xi) in centroid.iter_mut().zip(&simplex[i]) {
                    *c += xi;
                }
            }
            for c in &mut centroid {
                *c /= dim as f64;
            }

            let lerp = |t: f64| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(&simplex[worst])
                    .map(|(&c, &w)| c + t * (c - w))
                    .collect()
            };

            let reflected = lerp(1.0);
            let fr = f(&reflected);
            if fr < values[best] {
                let expanded = lerp(2.0);
                let fe = f(&expanded);
                if fe < fr {
                    simplex[worst] = expanded;
                    values[worst] = fe;
                } else {
                    simplex[worst] = reflected;
                    values[worst] = fr;
                }
            } else if fr < values[second_worst] {
                simplex[worst] = reflected;
                values[worst] = fr;
            } else {
                let contracted = if fr < values[worst] { lerp(0.5) } else { lerp(-0.5) };
                let fc = f(&contracted);
                if fc < values[worst].min(fr) {
                    simplex[worst] = contracted;
                    values[worst] = fc;
                } else {
                    // shrink toward the best vertex
                    let best_point = simplex[best].clone();
                    for i in 0..=dim {
                        if i == best {
                            continue;
                        }
                        for (x, &b) in simplex[i].iter_mut().zip(&best_point) {
                            *x = b + 0.5 * (*x - b);
                        }
                        values[i] = f(&simplex[i]);
                    }
                }
            }
        }

        let best = (0..=dim)
            .min_by(|&a, &b| values[a].total_cmp(&values[b]))
            .unwrap();
        NmOutcome {
            x: simplex[best].clone(),
            value: values[best],
            iters,
            converged,
        }
    }
}
