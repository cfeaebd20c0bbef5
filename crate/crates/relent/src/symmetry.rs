//! Finite symmetry groups of density matrices, twirling, invariance
//! checks, and the symmetry-constrained separable family used by the
//! three-parameter minimizer.
//!
//! Group elements act on operators as σ ↦ U σ U† or, for elements
//! carrying a transposition, σ ↦ U σᵀ U† (transposition taken in the
//! computational product basis). Transposition is not unitary conjugation,
//! so it is tracked as a flag rather than a matrix; every element then has
//! the canonical form (U, flag), which makes composition and closure
//! checking exact:
//!
//! ```text
//! (U, t₁) ∘ (V, t₂) = (U·V̄ if t₁ else U·V, t₁ ⊕ t₂)
//! ```

use crate::qlinalg::{tensor_product, CMatrix, DensityMatrix, C64};
use crate::{Error, Result};

/// How an element was built; composition products are tagged `Composite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    LocalUnitaryPair,
    GlobalUnitary,
    GlobalTransposition,
    Composite,
}

/// One symmetry operation: a unitary on the joint space, optionally
/// preceded by transposition in the computational basis.
#[derive(Debug, Clone)]
pub struct SymmetryElement {
    kind: ElementKind,
    unitary: CMatrix,
    transpose: bool,
}

fn unitarity_defect(u: &CMatrix) -> f64 {
    u.dagger().matmul(u).max_abs_diff(&CMatrix::identity(u.dim()))
}

fn check_unitary(u: &CMatrix) -> Result<()> {
    let defect = unitarity_defect(u);
    if defect > 1e-12 {
        return Err(Error::NotUnitary { defect });
    }
    Ok(())
}

impl SymmetryElement {
    /// U ⊗ V acting on a bipartite space.
    pub fn local_pair(u: CMatrix, v: CMatrix) -> Result<Self> {
        check_unitary(&u)?;
        check_unitary(&v)?;
        Ok(SymmetryElement {
            kind: ElementKind::LocalUnitaryPair,
            unitary: tensor_product(&u, &v),
            transpose: false,
        })
    }

    pub fn global_unitary(u: CMatrix) -> Result<Self> {
        check_unitary(&u)?;
        Ok(SymmetryElement { kind: ElementKind::GlobalUnitary, unitary: u, transpose: false })
    }

    /// Transposition in the computational product basis.
    pub fn transposition(dim: usize) -> Self {
        SymmetryElement {
            kind: ElementKind::GlobalTransposition,
            unitary: CMatrix::identity(dim),
            transpose: true,
        }
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.unitary.dim()
    }

    pub fn has_transpose(&self) -> bool {
        self.transpose
    }

    /// Apply the element to an operator.
    pub fn apply(&self, m: &CMatrix) -> CMatrix {
        let base = if self.transpose { m.transpose() } else { m.clone() };
        self.unitary.matmul(&base).matmul(&self.unitary.dagger())
    }

    /// self ∘ other as maps on operators (other applied first).
    fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        let v = if self.transpose { other.unitary.conj() } else { other.unitary.clone() };
        SymmetryElement {
            kind: ElementKind::Composite,
            unitary: self.unitary.matmul(&v),
            transpose: self.transpose ^ other.transpose,
        }
    }

    /// Equality as maps on operators: same transpose flag and unitaries
    /// equal up to a global phase.
    fn same_map(&self, other: &SymmetryElement, tol: f64) -> bool {
        if self.transpose != other.transpose || self.dim() != other.dim() {
            return false;
        }
        let rel = other.unitary.dagger().matmul(&self.unitary);
        // rel must be a phase times the identity
        let phase = rel.get(0, 0);
        if (phase.norm() - 1.0).abs() > tol {
            return false;
        }
        rel.max_abs_diff(&phase_matrix(rel.dim(), phase)) <= tol
    }

    fn is_identity_map(&self, tol: f64) -> bool {
        !self.transpose
            && self.unitary.max_abs_diff(&CMatrix::identity(self.dim())) <= tol
    }
}

fn phase_matrix(n: usize, phase: C64) -> CMatrix {
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, phase);
    }
    m
}

/// Finite set of symmetry elements, closed under composition and
/// containing the identity. Non-closed input is rejected rather than
/// completed, so |G| is exactly what the caller supplied.
#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    elements: Vec<SymmetryElement>,
    dim: usize,
}

impl SymmetryGroup {
    pub fn new(elements: Vec<SymmetryElement>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("symmetry group must be non-empty".into()));
        }
        let dim = elements[0].dim();
        if elements.iter().any(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch(
                "all group elements must act on the same space".into(),
            ));
        }
        if !elements.iter().any(|e| e.is_identity_map(1e-10)) {
            return Err(Error::GroupNotClosed("identity element missing".into()));
        }
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = a.compose(b);
                if !elements.iter().any(|e| e.same_map(&c, 1e-10)) {
                    return Err(Error::GroupNotClosed(format!(
                        "composition of elements {i} and {j} is not in the set"
                    )));
                }
            }
        }
        Ok(SymmetryGroup { elements, dim })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[SymmetryElement] {
        &self.elements
    }
}

/// Group average (1/|G|) Σ_g g(σ).
///
/// The result is invariant under every element, keeps the trace, and
/// stays positive semidefinite, so it is returned as a density matrix.
pub fn twirl(sigma: &DensityMatrix, group: &SymmetryGroup) -> Result<DensityMatrix> {
    if sigma.dim() != group.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs group dimension {}",
            sigma.dim(),
            group.dim()
        )));
    }
    let mut acc = CMatrix::zeros(sigma.dim());
    for e in group.elements() {
        acc = acc.add(&e.apply(sigma.matrix()));
    }
    DensityMatrix::new(sigma.dims().to_vec(), acc.scale(1.0 / group.order() as f64))
}

/// True iff every group element moves ρ by at most `tol` entrywise.
pub fn is_invariant(rho: &DensityMatrix, group: &SymmetryGroup, tol: f64) -> Result<bool> {
    if rho.dim() != group.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs group dimension {}",
            rho.dim(),
            group.dim()
        )));
    }
    Ok(invariance_deviation(rho, group) <= tol)
}

/// Largest entrywise deviation of g(ρ) from ρ over the group.
pub fn invariance_deviation(rho: &DensityMatrix, group: &SymmetryGroup) -> f64 {
    group
        .elements()
        .iter()
        .map(|e| e.apply(rho.matrix()).max_abs_diff(rho.matrix()))
        .fold(0.0, f64::max)
}

/// The symmetry group of the W-family two-party reductions: the local
/// sign flip σ_z⊗σ_z, the diagonal non-local sign diag(1,1,−1,1), global
/// transposition, and all their compositions (order 8).
pub fn w_ab_symmetry_group() -> SymmetryGroup {
    let sz = CMatrix::from_diag(&[1.0, -1.0]);
    let g1 = SymmetryElement::local_pair(sz.clone(), sz).expect("sign matrices are unitary");
    let w = SymmetryElement::global_unitary(CMatrix::from_diag(&[1.0, 1.0, -1.0, 1.0]))
        .expect("diagonal signs are unitary");
    let g1w = SymmetryElement::global_unitary(CMatrix::from_diag(&[1.0, -1.0, 1.0, 1.0]))
        .expect("diagonal signs are unitary");
    let id = SymmetryElement::global_unitary(CMatrix::identity(4)).expect("identity is unitary");
    let t = SymmetryElement::transposition(4);

    let mut elements = vec![id.clone(), g1.clone(), w.clone(), g1w.clone(), t];
    for u in [id, g1, w, g1w] {
        elements.push(SymmetryElement {
            kind: ElementKind::Composite,
            unitary: u.unitary.clone(),
            transpose: true,
        });
    }
    // Deduplicate: identity∘T appears twice in the build above.
    let mut unique: Vec<SymmetryElement> = Vec::new();
    for e in elements {
        if !unique.iter().any(|u| u.same_map(&e, 1e-12)) {
            unique.push(e);
        }
    }
    SymmetryGroup::new(unique).expect("construction is closed")
}

/// Parameters (x, y, z) of the invariant separable family
///
/// ```text
/// σ = [[x,0,0,v],[0,y,0,0],[0,0,z,0],[v,0,0,u]],  u = 1−x−y−z,  v = √(yz)
/// ```
///
/// The choice v = √(yz) puts σ^Γ exactly on the PPT boundary: its middle
/// block [[y,v],[v,z]] has determinant zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstrainedSigmaParams {
    x: f64,
    y: f64,
    z: f64,
}

impl ConstrainedSigmaParams {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x < 0.0 || y < 0.0 || z < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "parameters must be non-negative, got ({x}, {y}, {z})"
            )));
        }
        if x + y + z > 1.0 + 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "x + y + z = {} exceeds 1",
                x + y + z
            )));
        }
        let p = ConstrainedSigmaParams { x, y, z };
        // The corner block [[x,v],[v,u]] must itself be PSD.
        if p.x * p.u() + 1e-12 < p.y * p.z {
            return Err(Error::NotPositive { min_eigenvalue: p.x * p.u() - p.y * p.z });
        }
        Ok(p)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn u(&self) -> f64 {
        1.0 - self.x - self.y - self.z
    }

    pub fn v(&self) -> f64 {
        (self.y * self.z).sqrt()
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// Assemble the invariant separable state for the given parameters.
pub fn constrained_sigma(params: &ConstrainedSigmaParams) -> DensityMatrix {
    let (x, y, z, u, v) = (params.x(), params.y(), params.z(), params.u(), params.v());
    let mat = CMatrix::from_real_rows(&[
        vec![x, 0.0, 0.0, v],
        vec![0.0, y, 0.0, 0.0],
        vec![0.0, 0.0, z, 0.0],
        vec![v, 0.0, 0.0, u],
    ])
    .expect("square by construction");
    DensityMatrix::new(vec![2, 2], mat).expect("parameters validated on construction")
}
