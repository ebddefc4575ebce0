//! Solvers: Metropolis simulated annealing and exhaustive ground-truth
//! oracles.

mod anneal;
mod exhaustive;

pub use anneal::{simulated_anneal, single_flip_delta, AnnealSchedule};
pub use exhaustive::{brute_force, brute_force_cardinality};

use crate::bits::BinaryVector;
use crate::matrix::SymmetricMatrix;

/// Outcome of a solver run: the returned vector, its exact energy, and the
/// RNG seed that produced it (`None` for the deterministic oracles).
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    /// `xᵀAx` at `solution`, recomputed from scratch on return.
    pub cost: f64,
    pub solution: BinaryVector,
    pub seed: Option<u64>,
}

/// Local flip fields `f[i] = a[i][i] + 2·Σ_{j≠i} a[i][j]·x[j]`.
///
/// Flipping bit `i` changes the energy by `s·f[i]` with `s = 1 - 2x[i]`,
/// so a Metropolis step or a Gray-code walk costs O(1) per delta lookup and
/// O(n) per accepted flip to refresh the fields.
pub(crate) fn local_fields(a: &SymmetricMatrix, bits: &[u8]) -> Vec<f64> {
    let n = a.n();
    (0..n)
        .map(|i| {
            let row = a.row(i);
            let mut acc = 0.0;
            for j in 0..n {
                if j != i && bits[j] == 1 {
                    acc += row[j];
                }
            }
            row[i] + 2.0 * acc
        })
        .collect()
}

/// Refresh the fields after bit `i` flipped in direction `s = ±1`.
pub(crate) fn update_fields(a: &SymmetricMatrix, fields: &mut [f64], i: usize, s: f64) {
    let row = a.row(i);
    let step = 2.0 * s;
    for (j, f) in fields.iter_mut().enumerate() {
        if j != i {
            *f += step * row[j];
        }
    }
}
