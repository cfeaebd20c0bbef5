//! Two-copy additivity probe for the W-family AB reduction.
//!
//! Computes the mixture-search upper bound on E for ρ and for ρ⊗ρ
//! (regrouped as a 4⊗4 bipartite state) and reports the gap against
//! 2·E(ρ). Both numbers are upper bounds, so a gap near zero is
//! consistency with additivity, not proof; a clearly negative gap would
//! be evidence of subadditivity.
//!
//! Run: cargo run --release -p relent --example two_copy_additivity

use std::time::Instant;

use relent::analysis::additivity_gap;
use relent::reeopt::OptimizerConfig;
use relent::states::{w_reduced, Pair, WParams};

fn main() {
    let f2 = 1.0 / 6.0;
    let rho = w_reduced(&WParams::from_f2(f2).unwrap(), Pair::AB);
    let config = OptimizerConfig::default();

    println!("two-copy additivity probe, W family at f² = {f2:.10}");
    println!("config: restarts={} max_iters={} seed={}", config.restarts, config.max_iters, config.seed);

    let t0 = Instant::now();
    let report = additivity_gap(&rho, 2, &config, None).expect("probe failed");
    let elapsed = t0.elapsed();

    println!("single-copy E upper bound : {:.9} bits", report.single_copy);
    println!("two-copy   E upper bound : {:.9} bits", report.two_copy);
    println!("gap (two − 2·single)     : {:+.3e} bits", report.gap);
    println!("single converged: {}, double converged: {}", report.single.converged, report.double.converged);
    println!("elapsed: {elapsed:.2?}");
}
