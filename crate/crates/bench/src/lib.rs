//! Inputs shared by the benchmarks.

use std::sync::Arc;

use hyperring_core::{make_zn_multiplier_ring, HyperRing};

/// `ℤ_n{A}`, panicking on invalid input.
pub fn zn(n: usize, multipliers: &[usize]) -> Arc<HyperRing> {
    Arc::new(make_zn_multiplier_ring(n, multipliers).expect("valid ℤ_A ring"))
}

/// The rings benchmarked at each size: a plain ring, a two-multiplier
/// hyperring and one with a non-strongly-distributive table.
pub fn sample_rings() -> Vec<Arc<HyperRing>> {
    vec![
        zn(12, &[1]),
        zn(12, &[2, 3]),
        zn(30, &[1, 7]),
        zn(64, &[1, 3, 5]),
    ]
}
