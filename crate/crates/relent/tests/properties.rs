//! Cross-module invariants: structural properties of the linear algebra,
//! the state families, the entropy functionals, and the optimizers.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use relent::analysis::{
    continuity_bound, mregs_balance, ContinuityInput, PairValues, TaggedE,
};
use relent::entropy::{relative_entropy, von_neumann, RelEntropy};
use relent::qlinalg::{
    herm_eigensystem, partial_trace, tensor_product, trace_norm, CMatrix, DensityMatrix, C64,
};
use relent::reeopt::{ree_mixture, MixtureAnsatz, OptimizerConfig};
use relent::states::{
    lambda_reduced, lambda_state, w_reduced, w_state, LambdaParams, Pair, PureState, WParams,
};
use relent::symmetry::{
    constrained_sigma, is_invariant, twirl, w_ab_symmetry_group, ConstrainedSigmaParams,
};

fn random_state(rng: &mut StdRng, dims: Vec<usize>) -> DensityMatrix {
    let n: usize = dims.iter().product();
    let mut g = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    let h = g.matmul(&g.dagger());
    let tr = h.trace().re;
    DensityMatrix::new(dims, h.scale(1.0 / tr)).unwrap()
}

/// Unitary from the eigenvectors of a random Hermitian matrix.
fn random_unitary(rng: &mut StdRng, n: usize) -> CMatrix {
    let mut g = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    let h = g.add(&g.dagger()).scale(0.5);
    herm_eigensystem(&h).unwrap().vectors
}

#[test]
fn closed_form_reductions_match_partial_trace_on_random_draws() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let f2 = rng.gen_range(0.0..=0.5);
        let wp = WParams::from_f2(f2).unwrap();
        let psi = w_state(&wp);
        for pair in [Pair::AB, Pair::AC, Pair::BC] {
            let closed = w_reduced(&wp, pair);
            let general = psi.reduced(&pair.keep()).unwrap();
            assert!(closed.matrix().max_abs_diff(general.matrix()) < 1e-12);
        }
        let a2 = rng.gen_range(0.0..=1.0);
        let lp = LambdaParams::from_a2(a2).unwrap();
        let psi = lambda_state(&lp);
        for pair in [Pair::AB, Pair::AC, Pair::BC] {
            let closed = lambda_reduced(&lp, pair);
            let general = psi.reduced(&pair.keep()).unwrap();
            assert!(closed.matrix().max_abs_diff(general.matrix()) < 1e-12);
        }
    }
}

#[test]
fn pure_states_have_zero_global_entropy_and_matching_cut_entropies() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..50 {
        let f2 = rng.gen_range(0.0..=0.5);
        let psi = w_state(&WParams::from_f2(f2).unwrap());
        assert!(von_neumann(&psi.density()) < 1e-10);
        for (party, pair) in [(0, Pair::BC), (1, Pair::AC), (2, Pair::AB)] {
            let single = von_neumann(&psi.reduced(&[party]).unwrap());
            let double = von_neumann(&psi.reduced(&pair.keep()).unwrap());
            assert!((single - double).abs() < 1e-10, "complementary cuts disagree");
        }
    }
}

#[test]
fn relative_entropy_is_unitarily_invariant() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..100 {
        let rho = random_state(&mut rng, vec![2, 2]);
        let sigma = random_state(&mut rng, vec![2, 2]);
        let u = random_unitary(&mut rng, 4);
        let conjugate = |m: &CMatrix| u.matmul(m).matmul(&u.dagger());
        let rho_u = DensityMatrix::new(vec![2, 2], conjugate(rho.matrix())).unwrap();
        let sigma_u = DensityMatrix::new(vec![2, 2], conjugate(sigma.matrix())).unwrap();
        let a = relative_entropy(&rho, &sigma).unwrap().expect_finite("full rank");
        let b = relative_entropy(&rho_u, &sigma_u).unwrap().expect_finite("full rank");
        assert!((a - b).abs() <= 1e-10, "unitary invariance broken: {a} vs {b}");
    }
}

#[test]
fn trace_norm_separates_states_and_satisfies_triangle_inequality() {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..200 {
        let a = random_state(&mut rng, vec![2, 2]);
        let b = random_state(&mut rng, vec![2, 2]);
        let c = random_state(&mut rng, vec![2, 2]);
        let ab = trace_norm(&a.matrix().sub(b.matrix())).unwrap();
        let bc = trace_norm(&b.matrix().sub(c.matrix())).unwrap();
        let ac = trace_norm(&a.matrix().sub(c.matrix())).unwrap();
        assert!(ac <= ab + bc + 1e-10, "triangle inequality failed");
        if ab <= 1e-14 {
            assert!(a.matrix().max_abs_diff(b.matrix()) <= 1e-12);
        }
        assert!(trace_norm(&a.matrix().sub(a.matrix())).unwrap() <= 1e-14);
    }
}

#[test]
fn constrained_sigma_sits_on_the_ppt_boundary_for_random_params() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut done = 0;
    while done < 100 {
        let x = rng.gen_range(0.0..1.0);
        let y = rng.gen_range(0.0..1.0);
        let z = rng.gen_range(0.0..1.0);
        if x + y + z > 1.0 {
            continue;
        }
        let params = match ConstrainedSigmaParams::new(x, y, z) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let sigma = constrained_sigma(&params);
        let pt = relent::qlinalg::partial_transpose(&sigma, 1).unwrap();
        let min = herm_eigensystem(&pt).unwrap().min_value();
        assert!(min.abs() <= 1e-12, "σ^Γ min eigenvalue {min} off the boundary");
        assert!(is_invariant(&sigma, &w_ab_symmetry_group(), 1e-12).unwrap());
        done += 1;
    }
}

#[test]
fn mixture_returns_zero_on_random_separable_states() {
    let mut rng = StdRng::seed_from_u64(12);
    let config = OptimizerConfig { restarts: 4, max_iters: 800, ..Default::default() };
    for _ in 0..50 {
        let ansatz = MixtureAnsatz::random((2, 2), 6, &mut rng);
        let rho = ansatz.state((2, 2)).unwrap();
        let result = ree_mixture(&rho, &config).unwrap();
        assert!(result.value <= 1e-5, "separable state got E = {}", result.value);
    }
}

#[test]
fn mixture_closest_state_is_stable_under_twirl_for_invariant_targets() {
    let rho = w_reduced(&WParams::from_f2(1.0 / 6.0).unwrap(), Pair::AB);
    let config = OptimizerConfig { restarts: 8, ..Default::default() };
    let result = ree_mixture(&rho, &config).unwrap();
    let twirled = twirl(&result.closest_state, &w_ab_symmetry_group()).unwrap();
    let after = relative_entropy(&rho, &twirled).unwrap().expect_finite("twirled");
    assert!(
        after <= result.value + 1e-8,
        "twirl increased the optimal value: {after} > {}",
        result.value
    );
}

#[test]
fn continuity_bound_is_monotone() {
    let mut prev = 0.0;
    for k in 1..=10 {
        let delta = 0.01 * k as f64;
        let bound = continuity_bound(&ContinuityInput::new(delta, 4).unwrap());
        assert!(bound > prev, "bound not increasing in delta");
        prev = bound;
    }
    let small = continuity_bound(&ContinuityInput::new(0.05, 4).unwrap());
    let large = continuity_bound(&ContinuityInput::new(0.05, 16).unwrap());
    assert!(large > small, "bound not increasing in dimension");
}

#[test]
fn mregs_residuals_are_permutation_equivariant() {
    // Swap parties B and C together with their E values; residuals must
    // swap the same way.
    let psi = w_state(&WParams::from_f2(0.2).unwrap());
    let values = PairValues {
        ab: TaggedE::new(0.31, "probe"),
        ac: TaggedE::new(0.27, "probe"),
        bc: TaggedE::new(0.05, "probe"),
    };
    let report = mregs_balance(&psi, &values, 1e-3).unwrap();

    let dims = psi.dims().to_vec();
    let amps = psi.amplitudes();
    let mut swapped = vec![C64::new(0.0, 0.0); amps.len()];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                swapped[a * 4 + c * 2 + b] = amps[a * 4 + b * 2 + c];
            }
        }
    }
    let psi_swapped = PureState::new(dims, swapped).unwrap();
    let values_swapped = PairValues {
        ab: values.ac.clone(),
        ac: values.ab.clone(),
        bc: values.bc.clone(),
    };
    let report_swapped = mregs_balance(&psi_swapped, &values_swapped, 1e-3).unwrap();

    assert!((report.g - report_swapped.g).abs() < 1e-10);
    assert!((report.residuals[0] - report_swapped.residuals[0]).abs() < 1e-10);
    assert!((report.residuals[1] - report_swapped.residuals[2]).abs() < 1e-10);
    assert!((report.residuals[2] - report_swapped.residuals[1]).abs() < 1e-10);
}

// Structural invariants on randomized inputs.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_trace_of_product_recovers_factor(seed in 0u64..1_000_000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_state(&mut rng, vec![2, 2]);
        let tau = random_state(&mut rng, vec![2]);
        let joint = DensityMatrix::new(
            vec![2, 2, 2],
            tensor_product(rho.matrix(), tau.matrix()),
        ).unwrap();
        let back = partial_trace(&joint, &[0, 1]).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
        let other = partial_trace(&joint, &[2]).unwrap();
        prop_assert!(other.matrix().max_abs_diff(tau.matrix()) < 1e-12);
    }

    #[test]
    fn density_matrix_json_roundtrip(seed in 0u64..1_000_000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_state(&mut rng, vec![2, 2]);
        let text = serde_json::to_string(&rho).unwrap();
        let back: DensityMatrix = serde_json::from_str(&text).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-15);
        prop_assert_eq!(back.dims(), rho.dims());
    }

    #[test]
    fn relative_entropy_nonnegative_on_random_pairs(seed in 0u64..1_000_000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_state(&mut rng, vec![2, 2]);
        let sigma = random_state(&mut rng, vec![2, 2]);
        match relative_entropy(&rho, &sigma).unwrap() {
            RelEntropy::Finite(v) => prop_assert!(v >= 0.0),
            RelEntropy::Infinite => {}
        }
    }
}
