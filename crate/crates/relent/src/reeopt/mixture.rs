//! Product-mixture E minimizer.
//!
//! Separable states are parametrized as Σₖ pₖ |aₖ⟩⟨aₖ| ⊗ |bₖ⟩⟨bₖ| with the
//! weights going through a softmax and each local pure state through
//! hyperspherical angles, so the whole search is unconstrained. Multi-start
//! L-BFGS descends S(ρ‖σ(θ)); the best visited σ is a certified upper
//! bound on E because every mixture is separable by construction.

use std::sync::atomic::AtomicBool;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::lbfgs;
use super::{Method, OptimizationResult, OptimizerConfig};
use crate::entropy::{xlog2, SUPPORT_LEAK_TOL};
use crate::qlinalg::{herm_eigensystem, tensor_vec, CMatrix, DensityMatrix, C64, SUPPORT_CUTOFF};
use crate::{Error, Result};

const LN2: f64 = std::f64::consts::LN_2;

/// Pure state of one local factor in hyperspherical coordinates:
/// `d−1` polar angles and `d−1` azimuthal phases for dimension `d`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalPure {
    pub thetas: Vec<f64>,
    pub phis: Vec<f64>,
}

impl LocalPure {
    pub fn dim(&self) -> usize {
        self.thetas.len() + 1
    }

    pub fn random<R: Rng>(dim: usize, rng: &mut R) -> Self {
        let thetas = (0..dim - 1).map(|_| rng.gen_range(0.0..std::f64::consts::FRAC_PI_2)).collect();
        let phis = (0..dim - 1).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        LocalPure { thetas, phis }
    }

    /// Amplitudes (cos θ₁, sin θ₁ cos θ₂ e^{iφ₁}, ...); unit norm for any
    /// angle values.
    pub fn amplitudes(&self) -> Vec<C64> {
        let d = self.dim();
        let mut amps = vec![C64::new(0.0, 0.0); d];
        let mut sin_prod = 1.0;
        for i in 0..d {
            let mag = if i < d - 1 { sin_prod * self.thetas[i].cos() } else { sin_prod };
            let phase = if i == 0 {
                C64::new(1.0, 0.0)
            } else {
                C64::from_polar(1.0, self.phis[i - 1])
            };
            amps[i] = phase * mag;
            if i < d - 1 {
                sin_prod *= self.thetas[i].sin();
            }
        }
        amps
    }

    /// Invert a complex unit vector into angles (up to global phase).
    pub fn from_amplitudes(amps: &[C64]) -> Self {
        let d = amps.len();
        let mags: Vec<f64> = amps.iter().map(|a| a.norm()).collect();
        let mut thetas = Vec::with_capacity(d - 1);
        for k in 0..d - 1 {
            let tail: f64 = mags[k + 1..].iter().map(|m| m * m).sum::<f64>().sqrt();
            thetas.push(tail.atan2(mags[k]));
        }
        let global = if mags[0] > 1e-14 { amps[0].arg() } else { 0.0 };
        let phis = amps[1..]
            .iter()
            .map(|a| if a.norm() > 1e-14 { a.arg() - global } else { 0.0 })
            .collect();
        LocalPure { thetas, phis }
    }

    /// d(amplitudes)/dθ_k.
    fn damps_dtheta(&self, k: usize) -> Vec<C64> {
        let d = self.dim();
        let mut out = vec![C64::new(0.0, 0.0); d];
        for i in 0..d {
            if i < k {
                continue; // θ_k does not enter amp_i
            }
            // amp_i magnitude factors: sin θ_0 .. sin θ_{i-1}, then cos θ_i
            // (absent for the last component). Differentiate the θ_k factor.
            let mut mag = 1.0;
            for j in 0..i {
                mag *= if j == k { self.thetas[j].cos() } else { self.thetas[j].sin() };
            }
            if i < d - 1 {
                mag *= if i == k { -self.thetas[i].sin() } else { self.thetas[i].cos() };
            } else if i == k {
                // last component has no cos factor and no θ_i of its own
                continue;
            }
            let phase = if i == 0 {
                C64::new(1.0, 0.0)
            } else {
                C64::from_polar(1.0, self.phis[i - 1])
            };
            out[i] = phase * mag;
        }
        out
    }

    /// d(amplitudes)/dφ_k: only component k+1 carries that phase.
    fn damps_dphi(&self, k: usize, amps: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); amps.len()];
        out[k + 1] = C64::new(0.0, 1.0) * amps[k + 1];
        out
    }
}

/// Convex mixture of product pure states: the separable ansatz.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixtureAnsatz {
    pub weights: Vec<f64>,
    pub factors: Vec<(LocalPure, LocalPure)>,
}

impl MixtureAnsatz {
    pub fn random<R: Rng>(dims: (usize, usize), components: usize, rng: &mut R) -> Self {
        let factors = (0..components)
            .map(|_| (LocalPure::random(dims.0, rng), LocalPure::random(dims.1, rng)))
            .collect();
        let raw: Vec<f64> = (0..components).map(|_| rng.gen_range(0.5..1.5)).collect();
        let total: f64 = raw.iter().sum();
        MixtureAnsatz { weights: raw.into_iter().map(|w| w / total).collect(), factors }
    }

    pub fn components(&self) -> usize {
        self.weights.len()
    }

    /// Assemble Σ pₖ |aₖ bₖ⟩⟨aₖ bₖ| as a density matrix.
    pub fn state(&self, dims: (usize, usize)) -> Result<DensityMatrix> {
        let n = dims.0 * dims.1;
        let mut acc = CMatrix::zeros(n);
        for (w, (a, b)) in self.weights.iter().zip(&self.factors) {
            let v = tensor_vec(&a.amplitudes(), &b.amplitudes());
            for i in 0..n {
                for j in 0..n {
                    acc.add_assign_at(i, j, v[i] * v[j].conj() * *w);
                }
            }
        }
        DensityMatrix::new(vec![dims.0, dims.1], acc)
    }

    /// Two-copy ansatz: components are all pairwise products, with the
    /// local factors regrouped as (A₁A₂)(B₁B₂).
    pub fn tensor(&self, other: &MixtureAnsatz) -> MixtureAnsatz {
        let mut weights = Vec::with_capacity(self.components() * other.components());
        let mut factors = Vec::with_capacity(self.components() * other.components());
        for (wk, (ak, bk)) in self.weights.iter().zip(&self.factors) {
            for (wl, (al, bl)) in other.weights.iter().zip(&other.factors) {
                weights.push(wk * wl);
                let a = tensor_vec(&ak.amplitudes(), &al.amplitudes());
                let b = tensor_vec(&bk.amplitudes(), &bl.amplitudes());
                factors.push((LocalPure::from_amplitudes(&a), LocalPure::from_amplitudes(&b)));
            }
        }
        MixtureAnsatz { weights, factors }
    }

    fn to_params(&self) -> Vec<f64> {
        let mut params: Vec<f64> = self.weights.iter().map(|w| w.max(1e-300).ln()).collect();
        for (a, b) in &self.factors {
            params.extend(&a.thetas);
            params.extend(&a.phis);
            params.extend(&b.thetas);
            params.extend(&b.phis);
        }
        params
    }

    fn from_params(dims: (usize, usize), components: usize, params: &[f64]) -> Self {
        let (da, db) = dims;
        let logits = &params[..components];
        let m = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let exps: Vec<f64> = logits.iter().map(|&l| (l - m).exp()).collect();
        let total: f64 = exps.iter().sum();
        let weights: Vec<f64> = exps.into_iter().map(|e| e / total).collect();
        let stride = 2 * (da - 1) + 2 * (db - 1);
        let factors = (0..components)
            .map(|k| {
                let base = components + k * stride;
                let ta = params[base..base + da - 1].to_vec();
                let pa = params[base + da - 1..base + 2 * (da - 1)].to_vec();
                let off = base + 2 * (da - 1);
                let tb = params[off..off + db - 1].to_vec();
                let pb = params[off + db - 1..off + 2 * (db - 1)].to_vec();
                (LocalPure { thetas: ta, phis: pa }, LocalPure { thetas: tb, phis: pb })
            })
            .collect();
        MixtureAnsatz { weights, factors }
    }
}

/// Everything the objective/gradient evaluation needs about the target.
struct Target {
    rho: CMatrix,
    c_rho: f64, // tr(ρ log₂ ρ)
    dims: (usize, usize),
}

impl Target {
    fn new(rho: &DensityMatrix) -> Result<Self> {
        if rho.dims().len() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "mixture search needs a bipartite state, got dims {:?}",
                rho.dims()
            )));
        }
        let eig = herm_eigensystem(rho.matrix())?;
        let c_rho = eig.values.iter().map(|&l| xlog2(l.max(0.0))).sum();
        Ok(Target {
            rho: rho.matrix().clone(),
            c_rho,
            dims: (rho.dims()[0], rho.dims()[1]),
        })
    }
}

/// Value and gradient of S(ρ‖σ(params)) in one pass.
///
/// Gradients flow through the eigendecomposition of σ by the
/// divided-difference kernel: with σ = VΛV†, R = V†ρV and
/// Φᵢⱼ = (log₂λᵢ − log₂λⱼ)/(λᵢ−λⱼ), the matrix Ξ = V(Φ∘R)V† satisfies
/// d tr(ρ log₂ σ) = tr(Ξ dσ).
fn eval(target: &Target, components: usize, params: &[f64], grad: Option<&mut [f64]>) -> f64 {
    let (da, db) = target.dims;
    let n = da * db;
    let ansatz = MixtureAnsatz::from_params(target.dims, components, params);

    let mut vecs: Vec<Vec<C64>> = Vec::with_capacity(components);
    let mut sigma = CMatrix::zeros(n);
    for (w, (a, b)) in ansatz.weights.iter().zip(&ansatz.factors) {
        let v = tensor_vec(&a.amplitudes(), &b.amplitudes());
        for i in 0..n {
            for j in 0..n {
                sigma.add_assign_at(i, j, v[i] * v[j].conj() * *w);
            }
        }
        vecs.push(v);
    }

    let eig = match herm_eigensystem(&sigma) {
        Ok(e) => e,
        Err(_) => return f64::INFINITY,
    };
    // ⟨v_i|ρ|v_i⟩ per eigenvector. Eigenvalues at the support cutoff are
    // clamped rather than dropped so that shrinking them buys nothing, and
    // leaks are rejected at half the public tolerance: accepted states
    // then recompute as finite under the entropy-module contract.
    let mut value = target.c_rho;
    let mut leak = 0.0;
    for (i, &lam) in eig.values.iter().enumerate() {
        let v = eig.vector(i);
        let mut acc = C64::new(0.0, 0.0);
        for r in 0..n {
            let mut row = C64::new(0.0, 0.0);
            for c in 0..n {
                row += target.rho.get(r, c) * v[c];
            }
            acc += v[r].conj() * row;
        }
        let q = acc.re.max(0.0);
        if lam > SUPPORT_CUTOFF {
            value -= q * lam.log2();
        } else {
            leak += q;
            value -= q * SUPPORT_CUTOFF.log2();
        }
    }
    if leak > 0.5 * SUPPORT_LEAK_TOL {
        return f64::INFINITY;
    }

    let grad = match grad {
        Some(g) => g,
        None => return value.max(0.0),
    };

    // Ξ = V(Φ∘R)V†.
    let vmat = &eig.vectors;
    let r_in_basis = vmat.dagger().matmul(&target.rho).matmul(vmat);
    let mut phi_r = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let (li, lj) = (eig.values[i], eig.values[j]);
            if li <= SUPPORT_CUTOFF || lj <= SUPPORT_CUTOFF {
                continue;
            }
            let phi = if (li - lj).abs() <= 1e-10 * li.max(lj) {
                1.0 / (0.5 * (li + lj) * LN2)
            } else {
                (li.log2() - lj.log2()) / (li - lj)
            };
            phi_r.set(i, j, r_in_basis.get(i, j) * phi);
        }
    }
    let xi = vmat.matmul(&phi_r).matmul(&vmat.dagger());

    // Weight-logit gradients: dσ/dw_k = p_k(P_k − σ).
    let mut q_k = vec![0.0; components];
    let mut xi_v: Vec<Vec<C64>> = Vec::with_capacity(components);
    for (k, v) in vecs.iter().enumerate() {
        let mut u = vec![C64::new(0.0, 0.0); n];
        for r in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for c in 0..n {
                acc += xi.get(r, c) * v[c];
            }
            u[r] = acc;
        }
        q_k[k] = v.iter().zip(&u).map(|(vi, ui)| (vi.conj() * ui).re).sum();
        xi_v.push(u);
    }
    let s_mean: f64 = ansatz.weights.iter().zip(&q_k).map(|(p, q)| p * q).sum();
    for k in 0..components {
        grad[k] = -(ansatz.weights[k] * (q_k[k] - s_mean));
    }

    // Angle gradients: dσ/dθ = p_k(|da⊗b⟩⟨a⊗b| + h.c.), so the chain rule
    // needs 2·p_k·Re⟨Ξv_k, da⊗b⟩.
    let stride = 2 * (da - 1) + 2 * (db - 1);
    for (k, (a, b)) in ansatz.factors.iter().enumerate() {
        let base = components + k * stride;
        let amps_a = a.amplitudes();
        let amps_b = b.amplitudes();
        let u = &xi_v[k];
        let p = ansatz.weights[k];
        let mut slot = base;
        for t in 0..da - 1 {
            let dv = tensor_vec(&a.damps_dtheta(t), &amps_b);
            grad[slot] = -2.0 * p * inner_re(u, &dv);
            slot += 1;
        }
        for t in 0..da - 1 {
            let dv = tensor_vec(&a.damps_dphi(t, &amps_a), &amps_b);
            grad[slot] = -2.0 * p * inner_re(u, &dv);
            slot += 1;
        }
        for t in 0..db - 1 {
            let dv = tensor_vec(&amps_a, &b.damps_dtheta(t));
            grad[slot] = -2.0 * p * inner_re(u, &dv);
            slot += 1;
        }
        for t in 0..db - 1 {
            let dv = tensor_vec(&amps_a, &b.damps_dphi(t, &amps_b));
            grad[slot] = -2.0 * p * inner_re(u, &dv);
            slot += 1;
        }
    }

    value.max(0.0)
}

/// Re⟨u, w⟩ = Re Σ conj(u_i)·w_i.
fn inner_re(u: &[C64], w: &[C64]) -> f64 {
    u.iter().zip(w).map(|(a, b)| (a.conj() * b).re).sum()
}

/// General-purpose E upper bound by gradient search over product
/// mixtures, with deterministic multi-start. Equal seeds give identical
/// results; the best restart (lowest value, ties to the lowest index)
/// wins.
pub fn ree_mixture(rho: &DensityMatrix, config: &OptimizerConfig) -> Result<OptimizationResult> {
    ree_mixture_seeded(rho, config, None, None)
}

/// [`ree_mixture`] with an optional warm-start ansatz occupying restart 0
/// (the remaining restarts stay random) and an optional cooperative stop
/// flag checked between iterations.
pub fn ree_mixture_seeded(
    rho: &DensityMatrix,
    config: &OptimizerConfig,
    warm_start: Option<&MixtureAnsatz>,
    stop: Option<&AtomicBool>,
) -> Result<OptimizationResult> {
    let components = config.validate(rho.dims())?;
    let target = Target::new(rho)?;
    let dims = target.dims;

    let opts = lbfgs::MinimizeOptions {
        max_iters: config.max_iters,
        grad_tol: config.grad_tol,
        value_tol: config.value_tol,
        stall_iters: config.stall_iters,
        initial_step: config.initial_step,
        memory: 10,
    };

    struct Best {
        value: f64,
        params: Vec<f64>,
        components: usize,
        converged: bool,
    }
    let mut best: Option<Best> = None;
    let mut total_iters = 0usize;

    for restart in 0..config.restarts {
        let m;
        let start: Vec<f64> = match (restart, warm_start) {
            (0, Some(ansatz)) => {
                m = ansatz.components();
                ansatz.to_params()
            }
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(
                    config.seed.wrapping_add((restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
                );
                m = components;
                MixtureAnsatz::random(dims, m, &mut rng).to_params()
            }
        };
        let mut f = |x: &[f64], g: &mut [f64]| eval(&target, m, x, Some(g));
        let out = lbfgs::minimize(&mut f, start, &opts, stop);
        total_iters += out.iterations;
        let better = match &best {
            None => true,
            Some(b) => out.value < b.value,
        };
        if better {
            best = Some(Best {
                value: out.value,
                params: out.x,
                components: m,
                converged: out.converged,
            });
        }
        if let Some(flag) = stop {
            if flag.load(std::sync::atomic::Ordering::Relaxed) {
                break;
            }
        }
    }

    let best = best.ok_or_else(|| Error::InvalidArgument("no restarts executed".into()))?;
    if !best.value.is_finite() {
        return Err(Error::InvalidArgument(
            "mixture search found no feasible separable state".into(),
        ));
    }
    let ansatz = MixtureAnsatz::from_params(dims, best.components, &best.params);
    let closest = ansatz.state(dims)?;
    OptimizationResult::finish(
        rho,
        closest,
        Method::Mixture,
        total_iters,
        best.converged,
        config.restarts,
        config.seed,
        None,
        Some(ansatz),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::es_bc_closed_form;
    use crate::states::{epr, w_reduced, Pair, WParams};
    use approx::assert_abs_diff_eq;

    fn quick_config(seed: u64) -> OptimizerConfig {
        OptimizerConfig { restarts: 6, max_iters: 1200, seed, ..Default::default() }
    }

    #[test]
    fn local_pure_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in [2usize, 3, 4] {
            for _ in 0..20 {
                let p = LocalPure::random(dim, &mut rng);
                let amps = p.amplitudes();
                let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
                assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
                let q = LocalPure::from_amplitudes(&amps);
                let back = q.amplitudes();
                for (x, y) in amps.iter().zip(&back) {
                    assert!((x - y).norm() < 1e-10, "roundtrip failed at dim {dim}");
                }
            }
        }
    }

    #[test]
    fn amplitude_gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let p = LocalPure::random(4, &mut rng);
        let h = 1e-7;
        for k in 0..3 {
            let analytic = p.damps_dtheta(k);
            let mut plus = p.clone();
            let mut minus = p.clone();
            plus.thetas[k] += h;
            minus.thetas[k] -= h;
            for ((a, hi), lo) in analytic.iter().zip(plus.amplitudes()).zip(minus.amplitudes()) {
                let fd = (hi - lo) / (2.0 * h);
                assert!((a - fd).norm() < 1e-6, "theta {k}: {a} vs {fd}");
            }
            let analytic = p.damps_dphi(k, &p.amplitudes());
            let mut plus = p.clone();
            let mut minus = p.clone();
            plus.phis[k] += h;
            minus.phis[k] -= h;
            for ((a, hi), lo) in analytic.iter().zip(plus.amplitudes()).zip(minus.amplitudes()) {
                let fd = (hi - lo) / (2.0 * h);
                assert!((a - fd).norm() < 1e-6, "phi {k}: {a} vs {fd}");
            }
        }
    }

    #[test]
    fn objective_gradient_matches_finite_differences() {
        let rho = w_reduced(&WParams::from_f2(1.0 / 6.0).unwrap(), Pair::AB);
        let target = Target::new(&rho).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = 6;
        let params = MixtureAnsatz::random((2, 2), m, &mut rng).to_params();
        let mut grad = vec![0.0; params.len()];
        let value = eval(&target, m, &params, Some(&mut grad));
        assert!(value.is_finite());
        let h = 1e-6;
        for i in (0..params.len()).step_by(3) {
            let mut plus = params.clone();
            let mut minus = params.clone();
            plus[i] += h;
            minus[i] -= h;
            let fp = eval(&target, m, &plus, None);
            let fm = eval(&target, m, &minus, None);
            let fd = (fp - fm) / (2.0 * h);
            let scale = grad[i].abs().max(fd.abs()).max(1e-4);
            assert!(
                (grad[i] - fd).abs() / scale < 1e-4,
                "param {i}: analytic {} vs fd {}",
                grad[i],
                fd
            );
        }
    }

    #[test]
    fn bell_state_value_is_one() {
        let rho = epr().density();
        let result = ree_mixture(&rho, &quick_config(7)).unwrap();
        assert_abs_diff_eq!(result.value, 1.0, epsilon = 1e-4);
        // Closest separable state sits on the PPT boundary.
        assert!(result.boundary_certificate.abs() < 1e-4);
    }

    #[test]
    fn w_bc_reduction_matches_closed_form() {
        let f2 = 1.0 / 6.0;
        let rho = w_reduced(&WParams::from_f2(f2).unwrap(), Pair::BC);
        let result = ree_mixture(&rho, &quick_config(8)).unwrap();
        assert_abs_diff_eq!(result.value, es_bc_closed_form(f2).unwrap(), epsilon = 1e-4);
    }

    #[test]
    fn separable_state_gives_zero() {
        let rho = DensityMatrix::maximally_mixed(vec![2, 2]);
        let result = ree_mixture(&rho, &quick_config(9)).unwrap();
        assert!(result.value < 1e-6, "value {}", result.value);
    }

    #[test]
    fn certificate_is_false_for_halted_search_on_entangled_target() {
        let rho = epr().density();
        let cfg = OptimizerConfig { restarts: 1, max_iters: 1, ..Default::default() };
        let result = ree_mixture(&rho, &cfg).unwrap();
        assert!(!result.converged);
        assert!(!crate::reeopt::lemma2_certificate(&result, 1e-6));
    }

    #[test]
    fn identical_seeds_reproduce() {
        let rho = w_reduced(&WParams::from_f2(0.2).unwrap(), Pair::AB);
        let cfg = OptimizerConfig { restarts: 2, max_iters: 300, seed: 42, ..Default::default() };
        let a = ree_mixture(&rho, &cfg).unwrap();
        let b = ree_mixture(&rho, &cfg).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    fn tensor_ansatz_doubles_the_value() {
        let rho = w_reduced(&WParams::from_f2(1.0 / 6.0).unwrap(), Pair::AB);
        let single = ree_mixture(&rho, &quick_config(10)).unwrap();
        let ansatz = single.ansatz.as_ref().unwrap();
        let doubled = ansatz.tensor(ansatz);
        let sigma2 = doubled.state((4, 4)).unwrap();

        let joint = crate::qlinalg::tensor_product(rho.matrix(), rho.matrix());
        let four = DensityMatrix::new(vec![2, 2, 2, 2], joint).unwrap();
        let regrouped = crate::qlinalg::permute_subsystems(&four, &[0, 2, 1, 3])
            .unwrap()
            .with_dims(vec![4, 4])
            .unwrap();
        let two_copy = crate::entropy::relative_entropy(&regrouped, &sigma2)
            .unwrap()
            .expect_finite("tensored ansatz");
        assert_abs_diff_eq!(two_copy, 2.0 * single.value, epsilon = 1e-9);
    }

    #[test]
    fn config_validation() {
        let rho = DensityMatrix::maximally_mixed(vec![2, 2]);
        let cfg = OptimizerConfig { mixture_size: Some(2), ..Default::default() };
        assert!(ree_mixture(&rho, &cfg).is_err());
        let tri = DensityMatrix::maximally_mixed(vec![2, 2, 2]);
        assert!(ree_mixture(&tri, &OptimizerConfig::default()).is_err());
    }

    #[test]
    fn config_accepted_as_json() {
        let text = r#"{"mixture_size": 12, "restarts": 3, "seed": 99}"#;
        let cfg: OptimizerConfig = serde_json::from_str(text).unwrap();
        assert_eq!(cfg.mixture_size, Some(12));
        assert_eq!(cfg.restarts, 3);
        assert_eq!(cfg.seed, 99);
        // Unspecified fields take the documented defaults.
        assert_eq!(cfg.max_iters, OptimizerConfig::default().max_iters);
        let back = serde_json::to_string(&cfg).unwrap();
        let again: OptimizerConfig = serde_json::from_str(&back).unwrap();
        assert_eq!(again.restarts, 3);
    }

    #[test]
    fn mixture_agrees_with_constrained_on_invariant_target() {
        let rho = w_reduced(&WParams::from_f2(1.0 / 6.0).unwrap(), Pair::AB);
        let mixture = ree_mixture(&rho, &quick_config(12)).unwrap();
        let constrained = crate::reeopt::ree_constrained(&rho).unwrap();
        assert_abs_diff_eq!(mixture.value, constrained.value, epsilon = 1e-4);
    }
}
