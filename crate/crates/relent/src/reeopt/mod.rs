//! The two E minimizers and the inverse stationarity construction.
//!
//! [`ree_constrained`] works on states invariant under the W-reduction
//! symmetry group, minimizing over the three-parameter separable family of
//! [`crate::symmetry::constrained_sigma`] with closed-form gradients.
//! [`ree_mixture`] is the general-purpose product-mixture gradient search;
//! it produces an upper bound on E for any small bipartite state (any
//! feasible separable state bounds the minimum).
//!
//! [`stationarity_inverse`] runs the constrained problem backwards: fix a
//! boundary state σ(x,y,z) and solve the stationarity equations, which are
//! linear in the entries of ρ, for the state σ is optimal for.

mod lbfgs;
mod mixture;

pub use mixture::{ree_mixture, ree_mixture_seeded, LocalPure, MixtureAnsatz};

use serde::{Deserialize, Serialize};

use crate::entropy::{relative_entropy, xlog2};
use crate::qlinalg::{
    herm_eigensystem, partial_transpose, CMatrix, DensityMatrix, SUPPORT_CUTOFF,
};
use crate::symmetry::{constrained_sigma, w_ab_symmetry_group, ConstrainedSigmaParams};
use crate::{Error, Result};

const LN2: f64 = std::f64::consts::LN_2;

/// Which minimizer produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Constrained,
    Mixture,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Constrained => write!(f, "constrained"),
            Method::Mixture => write!(f, "mixture"),
        }
    }
}

/// Outcome of an E minimization.
///
/// `value` is recomputed from `closest_state` on construction;
/// `boundary_certificate` is the smallest eigenvalue of the closest
/// state's partial transpose (zero at the separable/PPT boundary).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub value: f64,
    pub closest_state: DensityMatrix,
    pub method: Method,
    pub iterations: usize,
    pub converged: bool,
    pub boundary_certificate: f64,
    pub restarts_used: usize,
    pub seed: u64,
    /// Optimal (x, y, z) for the constrained method.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<[f64; 3]>,
    /// Winning product-mixture decomposition for the mixture method.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ansatz: Option<MixtureAnsatz>,
}

impl OptimizationResult {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn finish(
        rho: &DensityMatrix,
        closest_state: DensityMatrix,
        method: Method,
        iterations: usize,
        converged: bool,
        restarts_used: usize,
        seed: u64,
        params: Option<[f64; 3]>,
        ansatz: Option<MixtureAnsatz>,
    ) -> Result<Self> {
        let value = relative_entropy(rho, &closest_state)?
            .value()
            .ok_or_else(|| Error::InvalidArgument("closest state does not cover the target support".into()))?;
        let pt = partial_transpose(&closest_state, 1)?;
        let boundary_certificate = herm_eigensystem(&pt)?.min_value();
        Ok(OptimizationResult {
            value,
            closest_state,
            method,
            iterations,
            converged,
            boundary_certificate,
            restarts_used,
            seed,
            params,
            ansatz,
        })
    }
}

/// Knobs of the product-mixture search. `mixture_size = None` defaults to
/// 4·d_A·d_B components.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct OptimizerConfig {
    pub mixture_size: Option<usize>,
    pub restarts: usize,
    pub max_iters: usize,
    pub value_tol: f64,
    pub stall_iters: usize,
    pub grad_tol: f64,
    pub initial_step: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            mixture_size: None,
            restarts: 16,
            max_iters: 2000,
            value_tol: 1e-10,
            stall_iters: 50,
            grad_tol: 1e-8,
            initial_step: 0.5,
            seed: 11,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self, dims: &[usize]) -> Result<usize> {
        let full: usize = dims.iter().product();
        let m = self.mixture_size.unwrap_or(4 * full);
        if m < full {
            return Err(Error::InvalidArgument(format!(
                "mixture size {m} below the product dimension {full}"
            )));
        }
        if self.value_tol <= 0.0 || self.grad_tol <= 0.0 {
            return Err(Error::InvalidArgument("tolerances must be positive".into()));
        }
        if self.restarts == 0 || self.max_iters == 0 {
            return Err(Error::InvalidArgument("restarts and max_iters must be positive".into()));
        }
        Ok(m)
    }
}

// --- Constrained three-parameter minimizer --------------------------------

/// Entries of an invariant 4x4 state: corner block [[p,q],[q,s]] on
/// {|00⟩,|11⟩} plus the diagonal (a, b) on {|01⟩,|10⟩}.
#[derive(Debug, Clone, Copy)]
struct InvariantEntries {
    p: f64,
    q: f64,
    s: f64,
    a: f64,
    b: f64,
}

fn invariant_entries(rho: &DensityMatrix) -> InvariantEntries {
    let m = rho.matrix();
    InvariantEntries {
        p: m.get(0, 0).re,
        q: m.get(0, 3).re,
        s: m.get(3, 3).re,
        a: m.get(1, 1).re,
        b: m.get(2, 2).re,
    }
}

/// Eigensystem of the symmetric 2x2 corner [[x,v],[v,u]].
fn corner_eigen(x: f64, u: f64, v: f64) -> ([f64; 2], [[f64; 2]; 2]) {
    let mean = 0.5 * (x + u);
    let delta = 0.5 * (x - u);
    let r = (delta * delta + v * v).sqrt();
    let lam = [mean - r, mean + r];
    // Eigenvector for lam[1] is (cos t, sin t) with cos 2t = delta/r.
    if r < 1e-300 {
        return (lam, [[1.0, 0.0], [0.0, 1.0]]);
    }
    let c2 = delta / r;
    let s2 = v / r;
    let t = 0.5 * s2.atan2(c2);
    let (sn, cs) = t.sin_cos();
    // columns: v_minus = (-sin t, cos t), v_plus = (cos t, sin t)
    (lam, [[-sn, cs], [cs, sn]])
}

/// Fréchet derivative of log₂ on the 2x2 corner block, applied to dC.
fn dlog2_corner(lam: &[f64; 2], vecs: &[[f64; 2]; 2], dc: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    // R = Vᵀ dC V, out = V (Φ ∘ R) Vᵀ with the divided-difference kernel.
    let col = |k: usize| [vecs[k][0], vecs[k][1]];
    let mut r = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let vi = col(i);
            let vj = col(j);
            let mut acc = 0.0;
            for a in 0..2 {
                for b in 0..2 {
                    acc += vi[a] * dc[a][b] * vj[b];
                }
            }
            r[i][j] = acc;
        }
    }
    let phi = |i: usize, j: usize| -> f64 {
        let (li, lj) = (lam[i].max(1e-300), lam[j].max(1e-300));
        if (li - lj).abs() <= 1e-12 * li.max(lj) {
            1.0 / (li * LN2)
        } else {
            (li.log2() - lj.log2()) / (li - lj)
        }
    };
    let mut out = [[0.0; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            let mut acc = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    acc += vecs[i][a] * phi(i, j) * r[i][j] * vecs[j][b];
                }
            }
            out[a][b] = acc;
        }
    }
    out
}

/// ∂(log₂ σ)/∂k at (x,y,z) for k = x, y, z, each as the tuple
/// (corner 2x2 block, d/dk at |01⟩, d/dk at |10⟩).
fn dlog2_sigma(params: &ConstrainedSigmaParams) -> [([[f64; 2]; 2], f64, f64); 3] {
    let (x, y, z, u, v) = (params.x(), params.y(), params.z(), params.u(), params.v());
    let (lam, vecs) = corner_eigen(x, u, v);
    let dv_dy = 0.5 * (z / y).sqrt();
    let dv_dz = 0.5 * (y / z).sqrt();
    let dc_dx = [[1.0, 0.0], [0.0, -1.0]];
    let dc_dy = [[0.0, dv_dy], [dv_dy, -1.0]];
    let dc_dz = [[0.0, dv_dz], [dv_dz, -1.0]];
    [
        (dlog2_corner(&lam, &vecs, &dc_dx), 0.0, 0.0),
        (dlog2_corner(&lam, &vecs, &dc_dy), 1.0 / (y * LN2), 0.0),
        (dlog2_corner(&lam, &vecs, &dc_dz), 0.0, 1.0 / (z * LN2)),
    ]
}

/// −tr(ρ log₂ σ(x,y,z)) for an invariant ρ, in closed form.
fn cross_term(rho: &InvariantEntries, params: &ConstrainedSigmaParams) -> f64 {
    let (x, u, v) = (params.x(), params.u(), params.v());
    let (lam, vecs) = corner_eigen(x, u, v);
    let mut corner = 0.0;
    for k in 0..2 {
        let w = vecs[k];
        // ⟨w| ρ_corner |w⟩ with ρ_corner = [[p,q],[q,s]]
        let quad = rho.p * w[0] * w[0] + 2.0 * rho.q * w[0] * w[1] + rho.s * w[1] * w[1];
        let l = lam[k].max(0.0);
        if l > SUPPORT_CUTOFF {
            corner += quad * l.log2();
        } else if quad > 1e-10 {
            return f64::INFINITY;
        }
    }
    let mut diag = 0.0;
    for (weight, lambda) in [(rho.a, params.y()), (rho.b, params.z())] {
        if lambda > SUPPORT_CUTOFF {
            diag += weight * lambda.log2();
        } else if weight > 1e-10 {
            return f64::INFINITY;
        }
    }
    -(corner + diag)
}

/// Objective S(ρ‖σ(x,y,z)) for an invariant ρ (tr ρ log₂ ρ plus the cross
/// term). Infinite outside the support of σ.
pub fn constrained_objective(rho: &DensityMatrix, params: &ConstrainedSigmaParams) -> f64 {
    let eig = herm_eigensystem(rho.matrix()).expect("density matrix is Hermitian");
    let c_rho: f64 = eig.values.iter().map(|&l| xlog2(l.max(0.0))).sum();
    c_rho + cross_term(&invariant_entries(rho), params)
}

/// Analytic gradient of the objective with respect to (x, y, z).
pub fn constrained_gradient(rho: &DensityMatrix, params: &ConstrainedSigmaParams) -> [f64; 3] {
    let entries = invariant_entries(rho);
    gradient_from_entries(&entries, params)
}

fn gradient_from_entries(rho: &InvariantEntries, params: &ConstrainedSigmaParams) -> [f64; 3] {
    let ds = dlog2_sigma(params);
    let mut g = [0.0; 3];
    for (k, (corner, dy, dz)) in ds.iter().enumerate() {
        // tr(ρ · D_k) over the corner block and the two diagonal slots.
        let tr_corner = rho.p * corner[0][0] + 2.0 * rho.q * corner[0][1] + rho.s * corner[1][1];
        g[k] = -(tr_corner + rho.a * dy + rho.b * dz);
    }
    g
}

const SIMPLEX_EPS: f64 = 1e-12;

/// Map unconstrained coordinates onto the open simplex
/// {x,y,z ≥ ε, x+y+z ≤ 1−ε} via a squeezed softmax. The image may still
/// violate the corner positivity condition x·u ≥ y·z; those points are
/// infeasible and the caller treats them as +∞.
fn simplex_map(t: &[f64]) -> Option<ConstrainedSigmaParams> {
    let logits = [t[0], t[1], t[2], 0.0];
    let m = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|&l| (l - m).exp()).collect();
    let total: f64 = exps.iter().sum();
    let p: Vec<f64> = exps.iter().map(|e| SIMPLEX_EPS + (1.0 - 4.0 * SIMPLEX_EPS) * e / total).collect();
    ConstrainedSigmaParams::new(p[0], p[1], p[2]).ok()
}

fn simplex_chain(t: &[f64], grad_xyz: &[f64; 3]) -> Vec<f64> {
    let logits = [t[0], t[1], t[2], 0.0];
    let m = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|&l| (l - m).exp()).collect();
    let total: f64 = exps.iter().sum();
    let soft: Vec<f64> = exps.iter().map(|e| e / total).collect();
    let scale = 1.0 - 4.0 * SIMPLEX_EPS;
    (0..3)
        .map(|j| {
            let mut acc = 0.0;
            for i in 0..3 {
                let jac = soft[i] * (if i == j { 1.0 } else { 0.0 } - soft[j]);
                acc += grad_xyz[i] * jac * scale;
            }
            acc
        })
        .collect()
}

/// Make sure the surrounding corner stays PSD when stepping in (x,y,z).
fn feasible(x: f64, y: f64, z: f64) -> bool {
    let u = 1.0 - x - y - z;
    x > 0.0 && y > 0.0 && z > 0.0 && u > 0.0 && x * u >= y * z
}

/// Symmetry-reduced E minimizer for invariant 4x4 states.
///
/// Minimizes S(ρ‖σ(x,y,z)) over the boundary family with analytic
/// gradients, polishing with damped Newton steps until the stationarity
/// conditions hold to ~1e-10. Refuses states that are not invariant under
/// [`w_ab_symmetry_group`], since the three-parameter reduction is only
/// faithful for those.
pub fn ree_constrained(rho: &DensityMatrix) -> Result<OptimizationResult> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got dims {:?}",
            rho.dims()
        )));
    }
    let group = w_ab_symmetry_group();
    let deviation = crate::symmetry::invariance_deviation(rho, &group);
    if deviation > 1e-8 {
        return Err(Error::NotInvariant { deviation });
    }

    let entries = invariant_entries(rho);
    let eig = herm_eigensystem(rho.matrix())?;
    let c_rho: f64 = eig.values.iter().map(|&l| xlog2(l.max(0.0))).sum();

    // Spread over the simplex, all strictly inside the xu > yz region
    // where the corner block is regular.
    let starts: [[f64; 3]; 8] = [
        [1.0, -1.0, -1.0],
        [0.5, -0.5, -0.5],
        [1.0, 0.0, 0.0],
        [2.0, 0.0, 1.0],
        [0.0, -2.0, 1.0],
        [-1.0, -1.0, -1.0],
        [2.0, -1.0, 0.0],
        [1.5, 0.0, 1.0],
    ];

    let mut objective = |t: &[f64], g: &mut [f64]| -> f64 {
        let params = match simplex_map(t) {
            Some(p) => p,
            None => return f64::INFINITY,
        };
        let value = c_rho + cross_term(&entries, &params);
        if !value.is_finite() {
            return f64::INFINITY;
        }
        let gx = gradient_from_entries(&entries, &params);
        for (slot, gi) in g.iter_mut().zip(simplex_chain(t, &gx)) {
            *slot = gi;
        }
        value
    };

    let opts = lbfgs::MinimizeOptions {
        max_iters: 4000,
        grad_tol: 1e-11,
        value_tol: 1e-14,
        stall_iters: 50,
        initial_step: 0.5,
        memory: 10,
    };
    let mut best: Option<lbfgs::MinimizeOutcome> = None;
    let mut total_iters = 0usize;
    for start in starts {
        let out = lbfgs::minimize(&mut objective, start.to_vec(), &opts, None);
        total_iters += out.iterations;
        if best.as_ref().is_none_or(|b| out.value < b.value) {
            best = Some(out);
        }
    }
    let best = best.expect("at least one start");
    if !best.value.is_finite() {
        return Err(Error::InvalidArgument(
            "no feasible starting point for the constrained search".into(),
        ));
    }
    let mut params = simplex_map(&best.x)
        .ok_or_else(|| Error::InvalidArgument("search ended outside the feasible region".into()))?;

    // Damped Newton polish directly in (x,y,z).
    let mut grad = gradient_from_entries(&entries, &params);
    for _ in 0..40 {
        let gnorm = (grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]).sqrt();
        if gnorm <= 1e-11 {
            break;
        }
        let step = match newton_step(&entries, &params, &grad)? {
            Some(s) => s,
            None => break,
        };
        let current = c_rho + cross_term(&entries, &params);
        let mut damping = 1.0;
        let mut moved = false;
        for _ in 0..20 {
            let cand = [
                params.x() - damping * step[0],
                params.y() - damping * step[1],
                params.z() - damping * step[2],
            ];
            if feasible(cand[0], cand[1], cand[2]) {
                let cand_params = ConstrainedSigmaParams::new(cand[0], cand[1], cand[2])?;
                let cand_value = c_rho + cross_term(&entries, &cand_params);
                if cand_value <= current + 1e-15 {
                    params = cand_params;
                    moved = true;
                    break;
                }
            }
            damping *= 0.5;
        }
        if !moved {
            break;
        }
        grad = gradient_from_entries(&entries, &params);
    }

    let gnorm = {
        let g = gradient_from_entries(&entries, &params);
        (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt()
    };
    let sigma = constrained_sigma(&params);
    OptimizationResult::finish(
        rho,
        sigma,
        Method::Constrained,
        total_iters,
        gnorm <= 1e-8,
        starts.len(),
        0,
        Some(params.as_array()),
        None,
    )
}

/// One Newton direction H⁻¹·grad, with H from central differences of the
/// analytic gradient. `None` when the point is too close to the boundary
/// or the Hessian is singular.
fn newton_step(
    entries: &InvariantEntries,
    params: &ConstrainedSigmaParams,
    grad: &[f64; 3],
) -> Result<Option<[f64; 3]>> {
    let h = 1e-6;
    let mut hess = [[0.0f64; 3]; 3];
    for i in 0..3 {
        let mut plus = params.as_array();
        let mut minus = params.as_array();
        plus[i] += h;
        minus[i] -= h;
        if !feasible(plus[0], plus[1], plus[2]) || !feasible(minus[0], minus[1], minus[2]) {
            return Ok(None);
        }
        let gp = gradient_from_entries(
            entries,
            &ConstrainedSigmaParams::new(plus[0], plus[1], plus[2])?,
        );
        let gm = gradient_from_entries(
            entries,
            &ConstrainedSigmaParams::new(minus[0], minus[1], minus[2])?,
        );
        for j in 0..3 {
            hess[i][j] = (gp[j] - gm[j]) / (2.0 * h);
        }
    }
    let mut a = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = 0.5 * (hess[i][j] + hess[j][i]);
        }
    }
    Ok(solve3(&a, grad))
}

fn solve3(a: &[[f64; 3]; 3], b: &[f64; 3]) -> Option<[f64; 3]> {
    let mut m = [[0.0f64; 4]; 3];
    for i in 0..3 {
        m[i][..3].copy_from_slice(&a[i]);
        m[i][3] = b[i];
    }
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())?;
        if m[pivot][col].abs() < 1e-14 {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..3 {
            if row != col {
                let factor = m[row][col] / m[col][col];
                for k in col..4 {
                    m[row][k] -= factor * m[col][k];
                }
            }
        }
    }
    Some([m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]])
}

// --- Inverse stationarity ---------------------------------------------------

/// Output of [`stationarity_inverse`]: the solved matrix plus the
/// diagnostics needed to decide whether to accept it as a state.
#[derive(Debug, Clone)]
pub struct InverseStationarity {
    /// Solved matrix in the invariant pattern [[p,0,0,q],[0,0,0,0],[0,0,r,0],[q,0,0,s]].
    pub matrix: CMatrix,
    /// True when the minimum eigenvalue clears −1e-10.
    pub psd: bool,
    pub min_eigenvalue: f64,
    /// Eigenvalues above the support cutoff.
    pub rank: usize,
    /// Largest residual of the stationarity equations at the solution.
    pub stationarity_residual: f64,
}

impl InverseStationarity {
    /// The solved matrix as a validated density matrix.
    pub fn density(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(vec![2, 2], self.matrix.clone())
    }
}

/// Solve the stationarity equations of the constrained problem, linear in
/// the invariant entries (p, q, r, s) of ρ, for a fixed interior σ(x,y,z).
/// The solution is the state the given boundary point is stationary for;
/// it is typically entangled.
pub fn stationarity_inverse(params: &ConstrainedSigmaParams) -> Result<InverseStationarity> {
    if params.x() <= 0.0 || params.y() <= 0.0 || params.z() <= 0.0 || params.u() <= 0.0 {
        return Err(Error::InvalidArgument(
            "inverse construction needs strictly interior (x, y, z)".into(),
        ));
    }
    if params.x() * params.u() - params.y() * params.z() <= 1e-12 {
        return Err(Error::InvalidArgument(
            "corner block is singular (x·u = y·z); log σ is unbounded there".into(),
        ));
    }
    let ds = dlog2_sigma(params);
    // Unknowns (p, q, r, s): three stationarity equations tr(ρ·D_k) = 0
    // plus the trace row p + r + s = 1.
    let mut a = [[0.0f64; 4]; 4];
    let b = [0.0, 0.0, 0.0, 1.0];
    for (k, (corner, _dy, dz)) in ds.iter().enumerate() {
        a[k][0] = corner[0][0]; // p
        a[k][1] = 2.0 * corner[0][1]; // q
        a[k][2] = *dz; // r sits at |10⟩
        a[k][3] = corner[1][1]; // s
    }
    a[3] = [1.0, 0.0, 1.0, 1.0];

    let sol = solve4(&a, &b).ok_or(Error::SingularSystem)?;
    let (p, q, r, s) = (sol[0], sol[1], sol[2], sol[3]);
    let matrix = CMatrix::from_real_rows(&[
        vec![p, 0.0, 0.0, q],
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, r, 0.0],
        vec![q, 0.0, 0.0, s],
    ])
    .expect("square by construction");

    let residual = ds
        .iter()
        .map(|(corner, _dy, dz)| {
            (p * corner[0][0] + 2.0 * q * corner[0][1] + s * corner[1][1] + r * dz).abs()
        })
        .fold(0.0, f64::max);
    let eig = herm_eigensystem(&matrix)?;
    let min_eigenvalue = eig.min_value();
    let rank = eig.values.iter().filter(|&&l| l > SUPPORT_CUTOFF).count();
    Ok(InverseStationarity {
        matrix,
        psd: min_eigenvalue >= -1e-10,
        min_eigenvalue,
        rank,
        stationarity_residual: residual,
    })
}

fn solve4(a: &[[f64; 4]; 4], b: &[f64; 4]) -> Option<[f64; 4]> {
    let mut m = [[0.0f64; 5]; 4];
    for i in 0..4 {
        m[i][..4].copy_from_slice(&a[i]);
        m[i][4] = b[i];
    }
    for col in 0..4 {
        let pivot = (col..4).max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())?;
        if m[pivot][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..4 {
            if row != col {
                let factor = m[row][col] / m[col][col];
                for k in col..5 {
                    m[row][k] -= factor * m[col][k];
                }
            }
        }
    }
    Some([m[0][4] / m[0][0], m[1][4] / m[1][1], m[2][4] / m[2][2], m[3][4] / m[3][3]])
}

/// Boundary-contact certificate: a converged minimizer on an entangled
/// target must end on the separable/PPT boundary, i.e. the partial
/// transpose of the closest state has a zero eigenvalue.
pub fn lemma2_certificate(result: &OptimizationResult, tol: f64) -> bool {
    result.boundary_certificate.abs() <= tol
}
