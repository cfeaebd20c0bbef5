//! Von Neumann entropy, quantum relative entropy with support handling,
//! and closed-form entropy expressions for the W family.
//!
//! All entropies are base 2, with the continuous extension 0·log 0 = 0.

use crate::qlinalg::{herm_eigensystem, log2_on_support, DensityMatrix, SUPPORT_CUTOFF};
use crate::{Error, Result};

/// Support-containment tolerance: tr(P_σ^⊥ ρ) above this makes S(ρ‖σ)
/// infinite.
pub const SUPPORT_LEAK_TOL: f64 = 1e-10;

/// x·log₂x with 0·log 0 = 0.
#[inline]
pub fn xlog2(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// Binary entropy h(p) = −p log₂ p − (1−p) log₂(1−p).
pub fn binary_entropy(p: f64) -> f64 {
    -xlog2(p) - xlog2(1.0 - p)
}

/// Von Neumann entropy S(ρ) = −Σ λ log₂ λ, in bits.
pub fn von_neumann(rho: &DensityMatrix) -> f64 {
    let eig = herm_eigensystem(rho.matrix()).expect("density matrix is Hermitian");
    let s: f64 = eig.values.iter().map(|&l| -xlog2(l.max(0.0))).sum();
    s.max(0.0)
}

/// Quantum relative entropy with the infinite branch kept out of band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RelEntropy {
    Finite(f64),
    Infinite,
}

impl RelEntropy {
    pub fn is_finite(&self) -> bool {
        matches!(self, RelEntropy::Finite(_))
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            RelEntropy::Finite(v) => Some(*v),
            RelEntropy::Infinite => None,
        }
    }

    /// Finite value, panicking on the infinite branch.
    pub fn expect_finite(&self, context: &str) -> f64 {
        match self {
            RelEntropy::Finite(v) => *v,
            RelEntropy::Infinite => panic!("relative entropy unexpectedly infinite: {context}"),
        }
    }
}

/// S(ρ‖σ) = tr(ρ log₂ ρ) − tr(ρ log₂ σ), finite exactly when the support
/// of ρ is contained in the support of σ.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<RelEntropy> {
    if rho.dims() != sigma.dims() {
        return Err(Error::DimensionMismatch(format!(
            "rho dims {:?} vs sigma dims {:?}",
            rho.dims(),
            sigma.dims()
        )));
    }
    let (log_sigma, proj) = log2_on_support(sigma.matrix())?;
    // tr(P_σ^⊥ ρ) = 1 − tr(P_σ ρ)
    let on_support = proj.trace_product(rho.matrix()).re;
    if 1.0 - on_support > SUPPORT_LEAK_TOL {
        return Ok(RelEntropy::Infinite);
    }
    let eig = herm_eigensystem(rho.matrix())?;
    let tr_rho_log_rho: f64 = eig.values.iter().map(|&l| xlog2(l.max(0.0))).sum();
    let tr_rho_log_sigma = rho.matrix().trace_product(&log_sigma).re;
    Ok(RelEntropy::Finite((tr_rho_log_rho - tr_rho_log_sigma).max(0.0)))
}

fn check_f2(f2: f64, lower_open: bool) -> Result<()> {
    let ok = if lower_open { f2 > 0.0 } else { f2 >= 0.0 };
    if !ok || f2 > 0.5 {
        return Err(Error::InvalidArgument(format!(
            "f² must lie in {}0, 1/2], got {f2}",
            if lower_open { "(" } else { "[" }
        )));
    }
    Ok(())
}

/// Closed form for E(ρ_BC) on the W family:
/// 2(f²−1)log₂(1−f²) + (1−2f²)log₂(1−2f²).
pub fn es_bc_closed_form(f2: f64) -> Result<f64> {
    check_f2(f2, false)?;
    let a = if f2 < 1.0 { 2.0 * (f2 - 1.0) * (1.0 - f2).log2() } else { 0.0 };
    let b = xlog2(1.0 - 2.0 * f2);
    Ok(a + b)
}

/// S(ρ_BC) = −(1−2f²)log₂(1−2f²) − 2f²log₂(2f²) on the W family.
pub fn s_bc_closed_form(f2: f64) -> Result<f64> {
    check_f2(f2, false)?;
    Ok(-xlog2(1.0 - 2.0 * f2) - xlog2(2.0 * f2))
}

/// S(ρ_AB) = h(f²) on the W family.
pub fn s_ab_closed_form(f2: f64) -> Result<f64> {
    check_f2(f2, false)?;
    Ok(binary_entropy(f2))
}

/// The E(ρ_AB) value forced by the balance conditions on the W family:
/// (f²−1)log₂(1−f²) − 2f²log₂(2f²) + f²log₂(f²).
///
/// Algebraically equal to `es_bc + s_bc − s_ab`.
pub fn necnew_rhs(f2: f64) -> Result<f64> {
    check_f2(f2, true)?;
    Ok((f2 - 1.0) * (1.0 - f2).log2() - xlog2(2.0 * f2) + xlog2(f2))
}

/// Support cutoff re-exported for callers that reason about ranks.
pub fn support_rank(rho: &DensityMatrix) -> usize {
    let eig = herm_eigensystem(rho.matrix()).expect("density matrix is Hermitian");
    eig.values.iter().filter(|&&l| l > SUPPORT_CUTOFF).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{CMatrix, DensityMatrix};
    use crate::states::{epr, w_reduced, Pair, WParams};
    use approx::assert_abs_diff_eq;

    fn w_ab(f2: f64) -> DensityMatrix {
        w_reduced(&WParams::from_f2(f2).unwrap(), Pair::AB)
    }

    #[test]
    fn von_neumann_basics() {
        let pure = epr().density();
        assert_abs_diff_eq!(von_neumann(&pure), 0.0, epsilon = 1e-10);

        let mixed = DensityMatrix::maximally_mixed(vec![2]);
        assert_abs_diff_eq!(von_neumann(&mixed), 1.0, epsilon = 1e-12);

        // S(ρ_AB) at f² = 1/6 is the binary entropy h(1/6).
        assert_abs_diff_eq!(von_neumann(&w_ab(1.0 / 6.0)), 0.6500224216483541, epsilon = 1e-10);
    }

    #[test]
    fn relative_entropy_self_is_zero() {
        let rho = w_ab(1.0 / 6.0);
        let v = relative_entropy(&rho, &rho).unwrap().expect_finite("self");
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_disjoint_support_is_infinite() {
        let zero = DensityMatrix::new(vec![2], CMatrix::from_diag(&[1.0, 0.0])).unwrap();
        let one = DensityMatrix::new(vec![2], CMatrix::from_diag(&[0.0, 1.0])).unwrap();
        assert_eq!(relative_entropy(&zero, &one).unwrap(), RelEntropy::Infinite);
    }

    #[test]
    fn relative_entropy_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(vec![2]);
        let b = DensityMatrix::maximally_mixed(vec![4]);
        assert!(relative_entropy(&a, &b).is_err());
    }

    #[test]
    fn relative_entropy_at_reference_sigma() {
        use crate::symmetry::{constrained_sigma, ConstrainedSigmaParams};
        let rho = w_ab(1.0 / 6.0);
        let sigma = constrained_sigma(
            &ConstrainedSigmaParams::new(0.4875473233, 0.1286406856, 0.2953073521).unwrap(),
        );
        let v = relative_entropy(&rho, &sigma).unwrap().expect_finite("constrained sigma");
        // The twelve-digit figure 0.354761489848 is attained at the nearby
        // stationary state; at ρ_AB(2/3,1/6) itself agreement holds to 1e-5.
        assert_abs_diff_eq!(v, 0.354761489848, epsilon = 1e-5);
        assert_abs_diff_eq!(v, 0.3547614891201, epsilon = 1e-9);
    }

    #[test]
    fn closed_forms_at_one_sixth() {
        assert_abs_diff_eq!(es_bc_closed_form(1.0 / 6.0).unwrap(), 0.0484156759, epsilon = 1e-9);
        assert_abs_diff_eq!(s_bc_closed_form(1.0 / 6.0).unwrap(), 0.9182958340544896, epsilon = 1e-12);
        assert_abs_diff_eq!(s_ab_closed_form(1.0 / 6.0).unwrap(), 0.6500224216483541, epsilon = 1e-12);
        assert_abs_diff_eq!(necnew_rhs(1.0 / 6.0).unwrap(), 0.3166890883, epsilon = 1e-9);
    }

    #[test]
    fn closed_forms_edge_points() {
        assert_abs_diff_eq!(es_bc_closed_form(0.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(es_bc_closed_form(0.5).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s_bc_closed_form(0.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s_ab_closed_form(0.0).unwrap(), 0.0, epsilon = 1e-15);
        let h13 = binary_entropy(1.0 / 3.0);
        assert_abs_diff_eq!(s_bc_closed_form(1.0 / 3.0).unwrap(), h13, epsilon = 1e-12);
        assert_abs_diff_eq!(s_ab_closed_form(1.0 / 3.0).unwrap(), h13, epsilon = 1e-12);
        assert!(es_bc_closed_form(0.6).is_err());
        assert!(necnew_rhs(0.0).is_err());
    }

    #[test]
    fn necnew_recombination_identity() {
        for &f2 in &[0.05, 0.1, 1.0 / 6.0, 0.25, 1.0 / 3.0, 0.45, 0.5] {
            let lhs = necnew_rhs(f2).unwrap();
            let rhs = es_bc_closed_form(f2).unwrap() + s_bc_closed_form(f2).unwrap()
                - s_ab_closed_form(f2).unwrap();
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
        }
    }

    #[test]
    fn closed_forms_match_general_entropy() {
        for i in 1..=10 {
            let f2 = 0.05 * i as f64;
            let p = WParams::from_f2(f2).unwrap();
            assert_abs_diff_eq!(
                von_neumann(&w_reduced(&p, Pair::BC)),
                s_bc_closed_form(f2).unwrap(),
                epsilon = 1e-10
            );
            assert_abs_diff_eq!(
                von_neumann(&w_reduced(&p, Pair::AB)),
                s_ab_closed_form(f2).unwrap(),
                epsilon = 1e-10
            );
        }
    }
}
