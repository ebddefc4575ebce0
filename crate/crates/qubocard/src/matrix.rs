//! Dense symmetric matrices and the elementary QUBO transforms.
//!
//! A QUBO instance is a real symmetric matrix `A`; the objective of a
//! candidate `x ∈ {0,1}^n` is the quadratic form `xᵀAx`. A separate linear
//! term `B·x` never needs its own representation: because binary variables
//! satisfy `xᵢ = xᵢ²`, it folds into the diagonal (see
//! [`SymmetricMatrix::fold_linear`]).

use crate::bits::BinaryVector;
use crate::error::{Error, Result};

/// Dense real symmetric matrix, stored row-major.
///
/// Symmetry is exact (bitwise) and enforced at construction: inputs that are
/// not symmetric are rejected rather than silently averaged. Use
/// [`SymmetricMatrix::symmetrize`] when the repair is intended.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

/// Soft guard on the dimension; everything here is dense and desk-scale.
pub const MAX_DIM: usize = 10_000;

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    if n > MAX_DIM {
        return Err(Error::Capacity(format!(
            "dimension {n} exceeds the dense-storage guard of {MAX_DIM}"
        )));
    }
    Ok(())
}

impl SymmetricMatrix {
    /// Build from a flat row-major buffer of length `n * n`.
    ///
    /// Fails unless the data is exactly symmetric, finite, and `1 <= n <=`
    /// [`MAX_DIM`].
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        check_dim(n)?;
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: n * n,
            });
        }
        for i in 0..n {
            for j in 0..n {
                let v = entries[i * n + j];
                if !v.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        let mut max_abs_diff = 0.0_f64;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = (entries[i * n + j] - entries[j * n + i]).abs();
                max_abs_diff = max_abs_diff.max(d);
            }
        }
        if max_abs_diff > 0.0 {
            return Err(Error::NotSymmetric { max_abs_diff });
        }
        Ok(Self { n, entries })
    }

    /// Build from nested rows. Same checks as [`SymmetricMatrix::new`].
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonSquare {
                    row: i,
                    found: row.len(),
                    expected: n,
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    /// Symmetrize an arbitrary square matrix: `(R + Rᵀ) / 2`.
    ///
    /// The quadratic form is unchanged: `xᵀRx == xᵀ·symmetrize(R)·x` for every
    /// binary `x`, because `xᵀRx = xᵀRᵀx` as scalars.
    pub fn symmetrize(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonSquare {
                    row: i,
                    found: row.len(),
                    expected: n,
                });
            }
            for (j, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (rows[i][j] + rows[j][i]) / 2.0;
            }
        }
        Ok(Self { n, entries })
    }

    /// The zero matrix.
    pub fn zeros(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            entries: vec![0.0; n * n],
        })
    }

    /// The identity matrix `I_n`.
    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.entries[i * n + i] = 1.0;
        }
        Ok(m)
    }

    /// The all-ones matrix `J_n`.
    pub fn all_ones(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            entries: vec![1.0; n * n],
        })
    }

    /// Internal constructor for data that is symmetric by construction.
    pub(crate) fn from_symmetric_parts(n: usize, entries: Vec<f64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        debug_assert!((0..n).all(|i| (0..n).all(|j| entries[i * n + j] == entries[j * n + i])));
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry accessor; panics on out-of-range indices.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "index out of range");
        self.entries[i * self.n + j]
    }

    /// Flat row-major view of the entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub(crate) fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Entrywise sum of two matrices of equal dimension.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { n: self.n, entries })
    }

    /// Entrywise scaling.
    pub fn scale(&self, factor: f64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| v * factor).collect(),
        }
    }

    /// Fold a linear term into the diagonal: `Ã = A + diag(b)`.
    ///
    /// For binary `x` the objectives agree: `xᵀÃx == xᵀAx + b·x`, since
    /// `xᵢ = xᵢ²`.
    pub fn fold_linear(&self, b: &LinearTerm) -> Result<Self> {
        if b.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: b.len(),
            });
        }
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] += b.coefficients()[i];
        }
        Ok(out)
    }

    /// The quadratic form `xᵀAx = Σᵢⱼ aᵢⱼ xᵢ xⱼ`.
    pub fn evaluate(&self, x: &BinaryVector) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.len(),
            });
        }
        Ok(self.evaluate_bits(x.bits()))
    }

    /// Unchecked form evaluation over a raw bit slice (hot path).
    pub(crate) fn evaluate_bits(&self, bits: &[u8]) -> f64 {
        let n = self.n;
        let mut total = 0.0;
        for i in 0..n {
            if bits[i] == 0 {
                continue;
            }
            let row = self.row(i);
            let mut acc = 0.0;
            for j in 0..n {
                if bits[j] != 0 {
                    acc += row[j];
                }
            }
            total += acc;
        }
        total
    }

    /// Sum of all entries, `Σᵢⱼ aᵢⱼ`.
    pub fn total_sum(&self) -> f64 {
        self.entries.iter().sum()
    }

    /// Sum of absolute values of all entries, `Σᵢⱼ |aᵢⱼ|`.
    pub fn abs_sum(&self) -> f64 {
        self.entries.iter().map(|v| v.abs()).sum()
    }

    /// Row sums `(A·1)ᵢ`.
    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }
}

/// Linear coefficients `B` of a QUBO objective `xᵀAx + B·x`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearTerm(Vec<f64>);

impl LinearTerm {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        for (index, v) in coefficients.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { index });
            }
        }
        Ok(Self(coefficients))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.0
    }

    /// Dot product with a binary vector.
    pub fn dot(&self, x: &BinaryVector) -> Result<f64> {
        if x.len() != self.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: x.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(x.bits())
            .map(|(c, &b)| c * f64::from(b))
            .sum())
    }
}
