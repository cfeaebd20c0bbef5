//! # relent
//!
//! Relative entropy of entanglement for small bipartite quantum states.
//!
//! The relative entropy of entanglement of a state ρ is
//!
//! ```text
//! E(ρ) = min over separable σ of S(ρ‖σ),   S(ρ‖σ) = tr(ρ log₂ ρ) − tr(ρ log₂ σ)
//! ```
//!
//! This crate computes E for two-qubit (and two-ququart) states with two
//! independent minimizers, and uses the results to audit whether the GHZ +
//! EPR resource set can account for the entanglement of tripartite pure
//! states:
//!
//! - [`qlinalg`] — dense complex Hermitian linear algebra at desk scale:
//!   tensor products, partial trace/transpose, a cyclic Jacobi eigensolver,
//!   matrix logarithms on support, trace norm, the PPT test.
//! - [`states`] — the state families under study (W-like three-qubit
//!   states, a Λ family, GHZ, EPR) and their closed-form reductions.
//! - [`entropy`] — von Neumann entropy, quantum relative entropy with
//!   explicit support handling, and closed-form entropy expressions for the
//!   W family.
//! - [`symmetry`] — finite symmetry groups (including transposition),
//!   twirling, invariance checks, and the symmetry-constrained separable
//!   family on the PPT boundary.
//! - [`reeopt`] — the two minimizers: a three-parameter symmetry-reduced
//!   search with analytic gradients, and a product-mixture gradient search
//!   usable on any small bipartite state. Also the inverse construction
//!   that recovers the state a given separable boundary point is optimal
//!   for.
//! - [`analysis`] — GHZ/EPR yield balance reports, a continuity bound on E,
//!   and a two-copy additivity probe.
//! - [`cli`] — the `relent` command-line front end.
//!
//! All entropies are base-2 (bits/ebits). See the crate examples for
//! runnable walkthroughs of each capability; `relent --help` covers the CLI.

use thiserror::Error;

pub mod analysis;
pub mod cli;
pub mod entropy;
pub mod qlinalg;
pub mod reeopt;
pub mod states;
pub mod symmetry;

pub use entropy::{relative_entropy, von_neumann, RelEntropy};
pub use qlinalg::{CMatrix, DensityMatrix, EigenSystem, C64};
pub use reeopt::{ree_constrained, ree_mixture, OptimizationResult, OptimizerConfig};
pub use states::{epr, ghz, lambda_state, w_state, LambdaParams, Pair, PureState, WParams};
pub use symmetry::{constrained_sigma, twirl, ConstrainedSigmaParams, SymmetryGroup};

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not Hermitian (max |a_ij - conj(a_ji)| = {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace is {trace:.12}, expected 1")]
    InvalidTrace { trace: f64 },

    #[error("state vector norm² is {norm_sqr:.12}, expected 1")]
    NotNormalized { norm_sqr: f64 },

    #[error("matrix is not unitary (‖U†U − I‖_max = {defect:.3e})")]
    NotUnitary { defect: f64 },

    #[error("symmetry group is not closed under composition: {0}")]
    GroupNotClosed(String),

    #[error("state is not invariant under the required symmetry group (deviation {deviation:.3e})")]
    NotInvariant { deviation: f64 },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigensolver failed to converge")]
    EigenNonConvergence,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
