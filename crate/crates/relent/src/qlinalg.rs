//! Dense complex Hermitian linear algebra on small matrices.
//!
//! Everything here targets the desk scale of the rest of the crate:
//! composite dimensions up to 64, dense storage, and a cyclic Jacobi
//! eigensolver for Hermitian matrices. Operations are pure functions and
//! safe to call from any number of threads.
//!
//! Matrices interchange as JSON `{"dims":[..],"re":[[..]],"im":[[..]]}`,
//! row-major; [`DensityMatrix`] validates its invariants on load.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type C64 = Complex64;

/// Hermiticity tolerance for density matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Trace tolerance for density matrices.
pub const TRACE_TOL: f64 = 1e-10;
/// Positivity tolerance: eigenvalues above this are accepted.
pub const PSD_TOL: f64 = -1e-10;
/// Eigenvalues at or below this are treated as zero when taking logs.
pub const SUPPORT_CUTOFF: f64 = 1e-12;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    /// Build from rows of complex entries. All rows must have length equal
    /// to the row count.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            if r.len() != n {
                return Err(Error::NotSquare { rows: n, cols: r.len() });
            }
        }
        let data = rows.iter().flatten().copied().collect();
        Ok(CMatrix { n, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, C64::new(d, 0.0));
        }
        m
    }

    /// Outer product v·w† of two complex vectors of equal length.
    pub fn outer(v: &[C64], w: &[C64]) -> Self {
        let n = v.len();
        assert_eq!(n, w.len());
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, v[i] * w[j].conj());
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] = v;
    }

    #[inline]
    pub fn add_assign_at(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] += v;
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        CMatrix { n: self.n, data }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        CMatrix { n: self.n, data }
    }

    pub fn scale(&self, s: f64) -> CMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        CMatrix { n: self.n, data }
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn transpose(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i));
            }
        }
        out
    }

    pub fn conj(&self) -> CMatrix {
        let data = self.data.iter().map(|a| a.conj()).collect();
        CMatrix { n: self.n, data }
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// max |a_ij − conj(a_ji)| over all entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i..self.n {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Averages the matrix with its adjoint.
    pub fn hermitize(&self) -> CMatrix {
        self.add(&self.dagger()).scale(0.5)
    }

    /// tr(A·B) without forming the product.
    pub fn trace_product(&self, other: &CMatrix) -> C64 {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..n {
            for k in 0..n {
                acc += self.get(i, k) * other.get(k, i);
            }
        }
        acc
    }
}

/// Kronecker product with row-major block convention:
/// `out[(i·db+k),(j·db+l)] = a[i][j]·b[k][l]`.
pub fn tensor_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut out = CMatrix::zeros(n);
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            if aij.norm_sqr() == 0.0 {
                continue;
            }
            for k in 0..nb {
                for l in 0..nb {
                    out.set(i * nb + k, j * nb + l, aij * b.get(k, l));
                }
            }
        }
    }
    out
}

/// Kronecker product of vectors.
pub fn tensor_vec(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y);
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix: ascending real values and the
/// matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenSystem {
    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> Vec<C64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors.get(i, k)).collect()
    }

    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    pub fn max_value(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// V·diag(f(λ))·V† for a scalar function of the eigenvalues.
    pub fn apply_scalar<F: Fn(f64) -> f64>(&self, f: F) -> CMatrix {
        let n = self.vectors.dim();
        let mut out = CMatrix::zeros(n);
        for k in 0..n {
            let w = f(self.values[k]);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors.get(i, k);
                for j in 0..n {
                    out.add_assign_at(i, j, vik * self.vectors.get(j, k).conj() * w);
                }
            }
        }
        out
    }
}

const JACOBI_MAX_SWEEPS: usize = 60;

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Rejects inputs whose hermiticity defect exceeds 1e-10; the symmetric
/// part is decomposed. Ascending eigenvalue order; degenerate subspaces
/// come out in whatever orthonormal basis the rotations leave behind.
pub fn herm_eigensystem(h: &CMatrix) -> Result<EigenSystem> {
    let defect = h.hermiticity_defect();
    if defect > 1e-10 {
        return Err(Error::NotHermitian { defect });
    }
    let n = h.dim();
    let mut a = h.hermitize();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius();
    if n > 1 && scale > 0.0 {
        let stop = 1e-15 * scale;
        let mut converged = false;
        for _ in 0..JACOBI_MAX_SWEEPS {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off = off.max(a.get(p, q).norm());
                }
            }
            if off <= stop {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }
        if !converged {
            // One last check: quadratic convergence usually lands well
            // below the threshold on the final sweep.
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off = off.max(a.get(p, q).norm());
                }
            }
            if off > 1e-12 * scale {
                return Err(Error::EigenNonConvergence);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    Ok(EigenSystem { values, vectors })
}

/// Single Jacobi rotation zeroing a[p][q], accumulating into v.
fn jacobi_rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let g = a.get(p, q);
    let gabs = g.norm();
    if gabs == 0.0 {
        return;
    }
    // Phase that makes the 2x2 block real, then a real rotation on it.
    let w = g / gabs; // e^{i·arg g}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * gabs);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J is identity except J[p][p]=c, J[p][q]=s, J[q][p]=-s·conj(w),
    // J[q][q]=c·conj(w). Apply A <- J† A J and V <- V·J.
    let n = a.dim();
    let wc = w.conj();
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * c - akq * s * wc);
        a.set(k, q, akp * s + akq * c * wc);
    }
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk * c - aqk * s * w);
        a.set(q, k, apk * s + aqk * c * w);
    }
    // Clean the rotated pair: the target entry is zero by construction.
    a.set(p, q, C64::new(0.0, 0.0));
    a.set(q, p, C64::new(0.0, 0.0));
    let app_new = a.get(p, p);
    let aqq_new = a.get(q, q);
    a.set(p, p, C64::new(app_new.re, 0.0));
    a.set(q, q, C64::new(aqq_new.re, 0.0));
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c - vkq * s * wc);
        v.set(k, q, vkp * s + vkq * c * wc);
    }
}

/// Sum of singular values. For Hermitian input this is the sum of absolute
/// eigenvalues; otherwise the singular values come from A†A.
pub fn trace_norm(a: &CMatrix) -> Result<f64> {
    if a.is_hermitian(1e-10) {
        let eig = herm_eigensystem(a)?;
        Ok(eig.values.iter().map(|l| l.abs()).sum())
    } else {
        let ata = a.dagger().matmul(a);
        let eig = herm_eigensystem(&ata)?;
        Ok(eig.values.iter().map(|l| l.max(0.0).sqrt()).sum())
    }
}

/// Base-2 matrix logarithm restricted to the support of a PSD matrix.
///
/// Returns the log matrix (zero off support) together with the support
/// projector. Eigenvalues at or below [`SUPPORT_CUTOFF`] count as zero;
/// eigenvalues below −1e-10 are rejected.
pub fn log2_on_support(h: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    let eig = herm_eigensystem(h)?;
    if eig.min_value() < -1e-10 {
        return Err(Error::NotPositive { min_eigenvalue: eig.min_value() });
    }
    let log = eig.apply_scalar(|l| if l > SUPPORT_CUTOFF { l.log2() } else { 0.0 });
    let proj = eig.apply_scalar(|l| if l > SUPPORT_CUTOFF { 1.0 } else { 0.0 });
    Ok((log, proj))
}

/// Dense Hermitian unit-trace PSD operator with subsystem structure.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    mat: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity (1e-12), unit trace (1e-10) and positivity
    /// (min eigenvalue ≥ −1e-10) before accepting the matrix.
    pub fn new(dims: Vec<usize>, mat: CMatrix) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidArgument("subsystem dimensions must be positive".into()));
        }
        if total != mat.dim() {
            return Err(Error::DimensionMismatch(format!(
                "dims product {} vs matrix side {}",
                total,
                mat.dim()
            )));
        }
        let defect = mat.hermiticity_defect();
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
        let trace = mat.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::InvalidTrace { trace: trace.re });
        }
        let eig = herm_eigensystem(&mat)?;
        if eig.min_value() < PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: eig.min_value() });
        }
        Ok(DensityMatrix { dims, mat })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    /// Same matrix with the subsystem list replaced (product must match).
    pub fn with_dims(&self, dims: Vec<usize>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if total != self.mat.dim() {
            return Err(Error::DimensionMismatch(format!(
                "dims product {} vs matrix side {}",
                total,
                self.mat.dim()
            )));
        }
        Ok(DensityMatrix { dims, mat: self.mat.clone() })
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let n: usize = dims.iter().product();
        let mat = CMatrix::identity(n).scale(1.0 / n as f64);
        DensityMatrix { dims, mat }
    }
}

/// Multi-index helpers for a subsystem dimension list.
fn strides(dims: &[usize]) -> Vec<usize> {
    let m = dims.len();
    let mut s = vec![1usize; m];
    for i in (0..m.saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

fn digits(index: usize, dims: &[usize], strides: &[usize]) -> Vec<usize> {
    dims.iter()
        .zip(strides)
        .map(|(&d, &s)| (index / s) % d)
        .collect()
}

/// Reduced state on the kept subsystems (ascending original order).
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let m = rho.dims().len();
    if keep.is_empty() {
        return Err(Error::InvalidArgument("keep set must be non-empty".into()));
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.len() != keep.len() || keep_sorted.iter().any(|&k| k >= m) {
        return Err(Error::InvalidArgument(format!(
            "keep set {:?} invalid for {} subsystems",
            keep, m
        )));
    }
    let traced: Vec<usize> = (0..m).filter(|i| !keep_sorted.contains(i)).collect();

    let dims = rho.dims();
    let st = strides(dims);
    let keep_dims: Vec<usize> = keep_sorted.iter().map(|&i| dims[i]).collect();
    let keep_strides_out = strides(&keep_dims);
    let d_keep: usize = keep_dims.iter().product();
    let d_traced: usize = traced.iter().map(|&i| dims[i]).product();

    // Composite index a subsystem assignment maps to.
    let assemble = |kept_digits: &[usize], traced_digits: &[usize]| -> usize {
        let mut idx = 0;
        for (pos, &sys) in keep_sorted.iter().enumerate() {
            idx += kept_digits[pos] * st[sys];
        }
        for (pos, &sys) in traced.iter().enumerate() {
            idx += traced_digits[pos] * st[sys];
        }
        idx
    };

    let traced_dims: Vec<usize> = traced.iter().map(|&i| dims[i]).collect();
    let traced_strides = strides(&traced_dims);

    let mut out = CMatrix::zeros(d_keep);
    for kr in 0..d_keep {
        let kr_digits = digits(kr, &keep_dims, &keep_strides_out);
        for kc in 0..d_keep {
            let kc_digits = digits(kc, &keep_dims, &keep_strides_out);
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..d_traced {
                let t_digits = digits(t, &traced_dims, &traced_strides);
                let row = assemble(&kr_digits, &t_digits);
                let col = assemble(&kc_digits, &t_digits);
                acc += rho.matrix().get(row, col);
            }
            out.set(kr, kc, acc);
        }
    }
    DensityMatrix::new(keep_dims, out)
}

/// Transpose one tensor factor. The result stays Hermitian and unit-trace
/// but may fail positivity, so it comes back as a bare matrix.
pub fn partial_transpose(rho: &DensityMatrix, sys: usize) -> Result<CMatrix> {
    partial_transpose_matrix(rho.matrix(), rho.dims(), sys)
}

/// [`partial_transpose`] on a bare matrix with an explicit dimension list.
pub fn partial_transpose_matrix(mat: &CMatrix, dims: &[usize], sys: usize) -> Result<CMatrix> {
    if sys >= dims.len() {
        return Err(Error::InvalidArgument(format!(
            "subsystem {} out of range for {} subsystems",
            sys,
            dims.len()
        )));
    }
    let total: usize = dims.iter().product();
    if total != mat.dim() {
        return Err(Error::DimensionMismatch(format!(
            "dims product {} vs matrix side {}",
            total,
            mat.dim()
        )));
    }
    let st = strides(dims);
    let n = mat.dim();
    let mut out = CMatrix::zeros(n);
    for row in 0..n {
        let rd = digits(row, dims, &st);
        for col in 0..n {
            let mut cd = digits(col, dims, &st);
            let mut rd2 = rd.clone();
            std::mem::swap(&mut rd2[sys], &mut cd[sys]);
            let new_row: usize = rd2.iter().zip(&st).map(|(d, s)| d * s).sum();
            let new_col: usize = cd.iter().zip(&st).map(|(d, s)| d * s).sum();
            out.set(new_row, new_col, mat.get(row, col));
        }
    }
    Ok(out)
}

/// Reorder subsystems: new subsystem `i` is old subsystem `perm[i]`.
pub fn permute_subsystems(rho: &DensityMatrix, perm: &[usize]) -> Result<DensityMatrix> {
    let m = rho.dims().len();
    let mut seen = vec![false; m];
    if perm.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::InvalidArgument(format!("invalid permutation {:?}", perm)));
    }
    let old_dims = rho.dims();
    let new_dims: Vec<usize> = perm.iter().map(|&p| old_dims[p]).collect();
    let old_st = strides(old_dims);
    let new_st = strides(&new_dims);
    let n = rho.dim();
    let remap = |old_index: usize| -> usize {
        let d = digits(old_index, old_dims, &old_st);
        perm.iter().enumerate().map(|(new_pos, &old_pos)| d[old_pos] * new_st[new_pos]).sum()
    };
    let mut out = CMatrix::zeros(n);
    for row in 0..n {
        let nr = remap(row);
        for col in 0..n {
            out.set(nr, remap(col), rho.matrix().get(row, col));
        }
    }
    DensityMatrix::new(new_dims, out)
}

/// Positive-partial-transpose test. Returns the flag together with the
/// smallest eigenvalue of ρ^Γ exactly as computed.
pub fn is_ppt(rho: &DensityMatrix, sys: usize, tol: f64) -> Result<(bool, f64)> {
    let pt = partial_transpose(rho, sys)?;
    let eig = herm_eigensystem(&pt)?;
    let min = eig.min_value();
    Ok((min >= -tol, min))
}

// --- JSON interchange -----------------------------------------------------

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dims: Vec<usize>,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl From<&DensityMatrix> for MatrixJson {
    fn from(rho: &DensityMatrix) -> Self {
        let n = rho.dim();
        let mut re = vec![vec![0.0; n]; n];
        let mut im = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let z = rho.matrix().get(i, j);
                re[i][j] = z.re;
                im[i][j] = z.im;
            }
        }
        MatrixJson { dims: rho.dims().to_vec(), re, im }
    }
}

impl Serialize for DensityMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DensityMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let n: usize = raw.dims.iter().product();
        if raw.re.len() != n
            || raw.im.len() != n
            || raw.re.iter().any(|r| r.len() != n)
            || raw.im.iter().any(|r| r.len() != n)
        {
            return Err(D::Error::custom("re/im must be square with side = product of dims"));
        }
        let mut mat = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                mat.set(i, j, C64::new(raw.re[i][j], raw.im[i][j]));
            }
        }
        DensityMatrix::new(raw.dims, mat).map_err(D::Error::custom)
    }
}
