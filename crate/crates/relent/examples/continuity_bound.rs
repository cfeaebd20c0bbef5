//! Trace-distance continuity of E: |E(ρ₁) − E(ρ₂)| is controlled by
//! 2·log₂(dim)·Δ − 2Δ·log₂Δ + 4Δ with Δ = tr|ρ₁ − ρ₂|.
//!
//! Run: cargo run -p relent --example continuity_bound

use relent::analysis::{continuity_bound, ContinuityInput};
use relent::qlinalg::{trace_norm, CMatrix};

fn main() {
    // The O(1e-10) difference between the stationary state of the
    // reference boundary parameters and the exact W reduction.
    let perturbation = CMatrix::from_real_rows(&[
        vec![0.672, 0.0, 0.0, 1.32],
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, -1.67, 0.0],
        vec![1.32, 0.0, 0.0, 0.995],
    ])
    .unwrap()
    .scale(1e-10);

    let delta = trace_norm(&perturbation).unwrap();
    println!("Δ = {delta:.6e}");
    println!();
    println!("dim   bound on |ΔE| (bits)");
    for dim in [2usize, 4, 16] {
        let bound = continuity_bound(&ContinuityInput::new(delta, dim).unwrap());
        let marker = if dim == 4 { "  <- joint-dimension reading used here" } else { "" };
        println!("{dim:<5} {bound:.6e}{marker}");
    }
    println!();
    println!("The bound is monotone in Δ:");
    for scale in [1.0, 2.0, 10.0] {
        let input = ContinuityInput::new(scale * delta, 4).unwrap();
        println!("  {:>4}·Δ -> {:.6e}", scale, continuity_bound(&input));
    }
}
