//! The `ℤ_A` family over residues mod `n`: `a∘b = {a·r·b mod n : r ∈ A}`.

use crate::error::{Error, Result};
use crate::ring::{from_fns, HyperRing, RingFlag};
use crate::set::ElementSet;

/// Builds and validates `ℤ_n` with multiplier set `A` (reduced mod `n`).
///
/// A single multiplier yields an ordinary ring; such rings carry
/// [`RingFlag::DegenerateMultiplier`].
pub fn make_zn_multiplier_ring(n: usize, multipliers: &[usize]) -> Result<HyperRing> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    if multipliers.is_empty() {
        return Err(Error::EmptyMultiplierSet);
    }
    let a: ElementSet = multipliers.iter().map(|&r| r % n).collect();
    let name = format!("Z{n}{a}");
    let ring = from_fns(
        name,
        n,
        0,
        |x, y| (x + y) % n,
        |x| (n - x) % n,
        |x, y| a.iter().map(|r| x * r % n * y % n).collect(),
    )?;
    Ok(if a.len() == 1 {
        ring.with_flag(RingFlag::DegenerateMultiplier)
    } else {
        ring
    })
}
