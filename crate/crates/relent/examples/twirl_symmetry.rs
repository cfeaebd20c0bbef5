//! Twirling and symmetry reduction.
//!
//! Averaging a state over a finite symmetry group projects it onto the
//! invariant pattern; for a target that is already invariant, twirling any
//! candidate σ never increases S(ρ‖σ). That is what lets the minimization
//! for the W reductions collapse to three parameters.
//!
//! Run: cargo run -p relent --example twirl_symmetry

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use relent::entropy::relative_entropy;
use relent::qlinalg::{CMatrix, DensityMatrix, C64};
use relent::states::{w_reduced, Pair, WParams};
use relent::symmetry::{is_invariant, twirl, w_ab_symmetry_group};

fn random_state(rng: &mut StdRng) -> DensityMatrix {
    let mut g = CMatrix::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            g.set(i, j, C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    let h = g.matmul(&g.dagger());
    let tr = h.trace().re;
    DensityMatrix::new(vec![2, 2], h.scale(1.0 / tr)).unwrap()
}

fn main() {
    let group = w_ab_symmetry_group();
    println!("symmetry group of the W reductions: {} elements", group.order());

    let rho = w_reduced(&WParams::from_f2(1.0 / 6.0).unwrap(), Pair::AB);
    println!("ρ_AB invariant: {}", is_invariant(&rho, &group, 1e-12).unwrap());

    let mut rng = StdRng::seed_from_u64(1);
    let sigma = random_state(&mut rng);
    let twirled = twirl(&sigma, &group).unwrap();
    println!("\nrandom σ twirled onto the invariant pattern:");
    for i in 0..4 {
        let row: Vec<String> =
            (0..4).map(|j| format!("{:>9.5}", twirled.matrix().get(i, j).re)).collect();
        println!("  {}", row.join(" "));
    }
    println!("idempotent: twirl(twirl(σ)) = twirl(σ) to {:.1e}",
        twirl(&twirled, &group).unwrap().matrix().max_abs_diff(twirled.matrix()));

    println!("\ntwirling never increases S(ρ‖σ) for the invariant target:");
    for k in 0..5 {
        let sigma = random_state(&mut rng);
        let before = relative_entropy(&rho, &sigma).unwrap().expect_finite("random σ");
        let after = relative_entropy(&rho, &twirl(&sigma, &group).unwrap())
            .unwrap()
            .expect_finite("twirled σ");
        println!("  draw {k}: {before:.6} -> {after:.6}  (Δ = {:+.2e})", after - before);
    }
}
