//! Cross-validate the mixture optimizer against the closed-form E of the
//! W-family BC reduction over a grid of f², emitting CSV.
//!
//! Run: cargo run --release -p relent --example closed_form_sweep

use relent::entropy::{es_bc_closed_form, s_ab_closed_form, s_bc_closed_form};
use relent::reeopt::{ree_mixture, OptimizerConfig};
use relent::states::{w_reduced, Pair, WParams};

fn main() {
    let config = OptimizerConfig { restarts: 8, ..Default::default() };
    println!("f2,e_bc_closed,e_bc_optimizer,abs_err,s_bc,s_ab");
    for i in 1..=9 {
        let f2 = 0.05 * i as f64;
        let params = WParams::from_f2(f2).unwrap();
        let rho = w_reduced(&params, Pair::BC);
        let closed = es_bc_closed_form(f2).unwrap();
        let optimized = ree_mixture(&rho, &config).unwrap();
        println!(
            "{f2:.2},{closed:.9},{:.9},{:.2e},{:.9},{:.9}",
            optimized.value,
            (optimized.value - closed).abs(),
            s_bc_closed_form(f2).unwrap(),
            s_ab_closed_form(f2).unwrap(),
        );
    }
}
