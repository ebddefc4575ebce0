//! Exhaustive minimizers for desk-scale ground truth.

use super::{update_fields, SolveResult};
use crate::bits::BinaryVector;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Hard cap for the unconstrained sweep: 2^30 states.
const MAX_FULL_DIM: usize = 30;
/// Hard cap on enumerated subsets for the cardinality-restricted sweep.
const MAX_SUBSETS: u128 = 100_000_000;

/// Exact global minimizer of `xᵀAx` over all `2^n` binary vectors.
///
/// Walks the reflected Gray code so consecutive states differ by one bit;
/// each step costs one field lookup plus an O(n) field refresh. Ties are
/// broken toward the vector with the lowest value when read as a
/// little-endian integer, so results are platform-independent. The returned
/// cost is recomputed from scratch for the winning vector.
pub fn brute_force(a: &SymmetricMatrix) -> Result<SolveResult> {
    let n = a.n();
    if n > MAX_FULL_DIM {
        return Err(Error::Capacity(format!(
            "brute force sweeps 2^n states and is capped at n <= {MAX_FULL_DIM}, got {n}"
        )));
    }

    // Start at x = 0: energy 0, fields equal to the diagonal.
    let mut bits = vec![0u8; n];
    let mut fields: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    let mut energy = 0.0;
    let mut mask = 0u64;
    let mut best_energy = energy;
    let mut best_mask = mask;

    for t in 1u64..(1u64 << n) {
        // Gray code g(t) = t ^ (t >> 1): the bit that flips between
        // consecutive codes is the lowest set bit of t.
        let i = t.trailing_zeros() as usize;
        let s = 1.0 - 2.0 * f64::from(bits[i]);
        energy += s * fields[i];
        bits[i] ^= 1;
        mask ^= 1 << i;
        update_fields(a, &mut fields, i, s);

        if energy < best_energy || (energy == best_energy && mask < best_mask) {
            best_energy = energy;
            best_mask = mask;
        }
    }

    let solution = BinaryVector::from_lsb_mask(best_mask, n);
    let cost = a.evaluate_bits(solution.bits());
    Ok(SolveResult {
        cost,
        solution,
        seed: None,
    })
}

/// Exact minimizer of `xᵀAx` over vectors with exactly `m` ones.
///
/// Enumerates the `binomial(n, m)` subsets in ascending mask order
/// (Gosper's hack), which makes the tie-break identical to
/// [`brute_force`]: first minimum found is the lowest little-endian mask.
pub fn brute_force_cardinality(a: &SymmetricMatrix, m: usize) -> Result<SolveResult> {
    let n = a.n();
    if m > n {
        return Err(Error::InvalidParameter(format!(
            "cardinality {m} exceeds dimension {n}"
        )));
    }
    if n > 63 {
        return Err(Error::Capacity(format!(
            "subset enumeration uses 64-bit masks and is capped at n <= 63, got {n}"
        )));
    }
    let subsets = binomial(n as u64, m as u64);
    if subsets > MAX_SUBSETS {
        return Err(Error::Capacity(format!(
            "binomial({n}, {m}) = {subsets} subsets exceeds the cap of {MAX_SUBSETS}"
        )));
    }

    let limit = 1u64 << n;
    let mut indices = Vec::with_capacity(m);
    let mut mask = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let mut best_mask = mask;
    let mut best_cost = subset_cost(a, mask, &mut indices);

    if m > 0 && m < n {
        loop {
            let next = next_same_popcount(mask);
            if next >= limit {
                break;
            }
            mask = next;
            let cost = subset_cost(a, mask, &mut indices);
            if cost < best_cost {
                best_cost = cost;
                best_mask = mask;
            }
        }
    }

    let solution = BinaryVector::from_lsb_mask(best_mask, n);
    let cost = a.evaluate_bits(solution.bits());
    Ok(SolveResult {
        cost,
        solution,
        seed: None,
    })
}

/// Next integer with the same popcount (Gosper's hack).
fn next_same_popcount(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// `Σ_{i∈S} a[i][i] + 2·Σ_{i<j∈S} a[i][j]` for the subset encoded by `mask`.
fn subset_cost(a: &SymmetricMatrix, mask: u64, indices: &mut Vec<usize>) -> f64 {
    indices.clear();
    let mut rest = mask;
    while rest != 0 {
        indices.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    let mut cost = 0.0;
    for (p, &i) in indices.iter().enumerate() {
        let row = a.row(i);
        cost += row[i];
        for &j in &indices[p + 1..] {
            cost += 2.0 * row[j];
        }
    }
    cost
}

/// Binomial coefficient, saturating just past [`MAX_SUBSETS`].
fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * u128::from(n - k + i) / u128::from(i);
        if acc > MAX_SUBSETS {
            return acc;
        }
    }
    acc
}
