//! Small L-BFGS minimizer with Armijo backtracking, used by both E
//! minimizers. Objectives may return +∞ to mark infeasible points; the
//! line search backs away from them.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, Ordering};

pub(crate) struct MinimizeOptions {
    pub max_iters: usize,
    pub grad_tol: f64,
    /// Stop once the best value improves by less than this ...
    pub value_tol: f64,
    /// ... over this many consecutive iterations.
    pub stall_iters: usize,
    pub initial_step: f64,
    pub memory: usize,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            max_iters: 2000,
            grad_tol: 1e-8,
            value_tol: 1e-10,
            stall_iters: 50,
            initial_step: 0.5,
            memory: 10,
        }
    }
}

pub(crate) struct MinimizeOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Minimize `f`, which writes the gradient into its second argument and
/// returns the value (possibly +∞ off the feasible region; the gradient
/// is ignored there). `x0` must be feasible. Optionally honors a stop
/// flag checked once per iteration.
pub(crate) fn minimize<F>(
    mut f: F,
    x0: Vec<f64>,
    opts: &MinimizeOptions,
    stop: Option<&AtomicBool>,
) -> MinimizeOutcome
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let n = x0.len();
    let mut x = x0;
    let mut grad = vec![0.0; n];
    let mut value = f(&x, &mut grad);
    if !value.is_finite() {
        return MinimizeOutcome { x, value: f64::INFINITY, iterations: 0, converged: false };
    }

    // (s, y, 1/(y·s)) pairs, newest at the back.
    let mut pairs: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::new();
    let mut best_on_window = value;
    let mut stall = 0usize;
    let mut iterations = 0usize;
    let mut converged = false;
    let mut step_hint = opts.initial_step;

    for iter in 0..opts.max_iters {
        iterations = iter + 1;
        if let Some(flag) = stop {
            if flag.load(Ordering::Relaxed) {
                break;
            }
        }
        let gnorm = norm(&grad);
        if gnorm <= opts.grad_tol {
            converged = true;
            break;
        }

        // Two-loop recursion for the quasi-Newton direction.
        let mut dir: Vec<f64> = grad.iter().map(|g| -g).collect();
        if !pairs.is_empty() {
            let mut alphas = Vec::with_capacity(pairs.len());
            for (s, y, rho) in pairs.iter().rev() {
                let alpha = rho * dot(s, &dir);
                for (d, yi) in dir.iter_mut().zip(y) {
                    *d -= alpha * yi;
                }
                alphas.push(alpha);
            }
            let (s_last, y_last, _) = pairs.back().unwrap();
            let gamma = dot(s_last, y_last) / dot(y_last, y_last).max(1e-300);
            for d in dir.iter_mut() {
                *d *= gamma.max(1e-12);
            }
            for ((s, y, rho), alpha) in pairs.iter().zip(alphas.iter().rev()) {
                let beta = rho * dot(y, &dir);
                for (d, si) in dir.iter_mut().zip(s) {
                    *d += (alpha - beta) * si;
                }
            }
        }
        let mut descent = dot(&dir, &grad);
        if descent >= 0.0 {
            // Stale curvature; fall back to steepest descent.
            pairs.clear();
            dir = grad.iter().map(|g| -g).collect();
            descent = -gnorm * gnorm;
        }

        // Armijo backtracking.
        let mut alpha = if pairs.is_empty() { step_hint / gnorm.max(1.0) } else { 1.0 };
        let mut new_grad = vec![0.0; n];
        let mut accepted = false;
        for _ in 0..60 {
            let trial: Vec<f64> = x.iter().zip(&dir).map(|(xi, di)| xi + alpha * di).collect();
            let trial_value = f(&trial, &mut new_grad);
            if trial_value.is_finite() && trial_value <= value + 1e-4 * alpha * descent {
                let s: Vec<f64> = trial.iter().zip(&x).map(|(a, b)| a - b).collect();
                let y: Vec<f64> = new_grad.iter().zip(&grad).map(|(a, b)| a - b).collect();
                let ys = dot(&y, &s);
                if ys > 1e-12 * norm(&y) * norm(&s) {
                    if pairs.len() == opts.memory {
                        pairs.pop_front();
                    }
                    pairs.push_back((s, y, 1.0 / ys));
                }
                x = trial;
                value = trial_value;
                std::mem::swap(&mut grad, &mut new_grad);
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            // No progress possible along this direction at any step size.
            converged = true;
            break;
        }
        step_hint = (alpha * 2.0).clamp(1e-6, 4.0);

        stall += 1;
        if stall >= opts.stall_iters {
            if best_on_window - value < opts.value_tol {
                converged = true;
                break;
            }
            best_on_window = value;
            stall = 0;
        }
    }

    MinimizeOutcome { x, value, iterations, converged }
}
