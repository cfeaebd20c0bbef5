//! The two E minimizers head to head on the W-family AB reduction.
//!
//! The symmetry-reduced search exploits the invariance of ρ_AB to
//! optimize three parameters with analytic gradients; the mixture search
//! knows nothing about symmetry and optimizes a full product-mixture
//! ansatz. They must agree.
//!
//! Run: cargo run --release -p relent --example constrained_vs_mixture

use relent::reeopt::{ree_constrained, ree_mixture, OptimizerConfig};
use relent::states::{w_reduced, Pair, WParams};

fn main() {
    let config = OptimizerConfig { restarts: 8, ..Default::default() };
    println!("f2,constrained_bits,mixture_bits,difference");
    for i in 1..=9 {
        let f2 = 0.05 * i as f64;
        let rho = w_reduced(&WParams::from_f2(f2).unwrap(), Pair::AB);
        let a = ree_constrained(&rho).unwrap();
        let b = ree_mixture(&rho, &config).unwrap();
        println!("{f2:.2},{:.10},{:.10},{:+.2e}", a.value, b.value, b.value - a.value);
    }
}
