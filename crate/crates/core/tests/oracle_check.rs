//! Spot checks of the K₁ evaluator against the quadrature oracle at the
//! frozen reference arguments (full sweep lives in the acceptance suite).

mod common;

use threshold_decay::bessel;

#[test]
fn oracle_matches_k1_at_reference_points() {
    for &z in &[0.05, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0] {
        let ours = bessel::k1(z).unwrap();
        let oracle = common::k1_oracle(z);
        let rel = ((ours - oracle) / oracle).abs();
        assert!(
            rel <= 1e-10,
            "z = {z}: k1 = {ours:.15e}, oracle = {oracle:.15e}, rel = {rel:.2e}"
        );
    }
}

#[test]
fn print_oracle_values_for_frozen_constants() {
    // keep the frozen unit-test constants honest
    println!("K1(1)  = {:.15e}", common::k1_oracle(1.0));
    println!("K1(5)  = {:.15e}", common::k1_oracle(5.0));
}
