//! The cardinality penalty matrix.
//!
//! An unconstrained binary quadratic objective rarely settles on a solution
//! of a prescribed size. Adding the matrix
//!
//! ```text
//! C = α·J_n + β·I_n        (J_n all ones, I_n identity)
//! ```
//!
//! charges a vector of cardinality `k` exactly `αk² + βk`, because
//! `xᵀJx = k²` and `xᵀIx = k`. Choosing `β = -2αM` makes `k = M` the unique
//! integer minimizer of the charge (for `α > 0`), so the penalized problem
//! `min xᵀ(A + C)x` pulls solutions toward exactly `M` selected entries.
//! Equivalently `C(α) = α(J_n - 2M·I_n)`.
//!
//! The pull strengthens with `α`; [`safe_alpha`] gives a weight beyond which
//! every global minimizer provably has cardinality `M`.

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Validated parameters of a cardinality penalty: dimension `n`, target
/// cardinality `M`, weight `α > 0`, and the derived `β = -2αM`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PenaltySpec {
    n: usize,
    m_target: usize,
    alpha: f64,
    beta: f64,
}

impl PenaltySpec {
    /// Build a spec from the target cardinality.
    ///
    /// Requires `1 <= m_target <= n` and `alpha > 0`: a negative weight
    /// turns the minimum at `M` into a maximum, and `alpha = 0` is no
    /// constraint at all (the experiment harness runs that baseline on the
    /// raw matrix instead).
    pub fn new(n: usize, m_target: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("dimension must be >= 1".into()));
        }
        if m_target == 0 || m_target > n {
            return Err(Error::InvalidParameter(format!(
                "target cardinality must satisfy 1 <= M <= {n}, got {m_target}"
            )));
        }
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "penalty weight must be a positive finite number, got {alpha}"
            )));
        }
        Ok(Self {
            n,
            m_target,
            alpha,
            beta: -2.0 * alpha * m_target as f64,
        })
    }

    /// Build a spec from raw `(α, β)`; `-β/(2α)` must be an exact integer in
    /// `1..=n`.
    pub fn from_alpha_beta(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        let m = target_from_params(alpha, beta)?;
        if m.fract() != 0.0 || m < 1.0 || m > n as f64 {
            return Err(Error::InvalidParameter(format!(
                "-beta/(2 alpha) = {m} is not an integer target in 1..={n}"
            )));
        }
        Self::new(n, m as usize, alpha)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m_target(&self) -> usize {
        self.m_target
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Materialize `C(α) = α(J_n - 2M·I_n)`: off-diagonal entries `α`,
    /// diagonal entries `α(1 - 2M)`.
    pub fn penalty_matrix(&self) -> SymmetricMatrix {
        let n = self.n;
        let off = self.alpha;
        let diag = self.alpha * (1.0 - 2.0 * self.m_target as f64);
        let mut entries = vec![off; n * n];
        for i in 0..n {
            entries[i * n + i] = diag;
        }
        SymmetricMatrix::from_symmetric_parts(n, entries)
    }

    /// Closed-form charge for a vector of cardinality `k`:
    /// `αk² + βk = α((k - M)² - M²)`.
    pub fn penalty_value(&self, k: usize) -> Result<f64> {
        if k > self.n {
            return Err(Error::InvalidParameter(format!(
                "cardinality {k} out of range 0..={}",
                self.n
            )));
        }
        let k = k as f64;
        Ok(self.alpha * k * k + self.beta * k)
    }
}

impl SymmetricMatrix {
    /// Entrywise sum `A + C(α)` of a data matrix and a penalty.
    pub fn apply_constraint(&self, spec: &PenaltySpec) -> Result<SymmetricMatrix> {
        if self.n() != spec.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: spec.n(),
            });
        }
        self.add(&spec.penalty_matrix())
    }
}

/// `(α, β)` pair for a target cardinality: `β = -2αm`.
pub fn params_from_target(m: usize, alpha: f64) -> Result<(f64, f64)> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "target cardinality must be >= 1".into(),
        ));
    }
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "penalty weight must be a positive finite number, got {alpha}"
        )));
    }
    Ok((alpha, -2.0 * alpha * m as f64))
}

/// The cardinality favored by raw parameters: `M = -β/(2α)`.
///
/// The result need not be an integer; callers that require one must check
/// (see [`PenaltySpec::from_alpha_beta`]).
pub fn target_from_params(alpha: f64, beta: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "penalty weight must be a positive finite number, got {alpha}"
        )));
    }
    if !beta.is_finite() {
        return Err(Error::InvalidParameter("beta must be finite".into()));
    }
    Ok(-beta / (2.0 * alpha))
}

/// A provably sufficient penalty weight for a data matrix:
/// `α* = 2·Σᵢⱼ|aᵢⱼ| + 1`.
///
/// Deviating from the target cardinality costs at least `α·(k - M)² >= α*`,
/// while the data term `xᵀAx` ranges over an interval no wider than
/// `2·Σ|aᵢⱼ|`. So for any `α >= α*` every global minimizer of `A + C(α)`
/// has cardinality exactly `M`, and it minimizes `xᵀAx` among
/// cardinality-`M` vectors. The bound is deliberately loose; far smaller
/// weights usually work in practice.
pub fn safe_alpha(a: &SymmetricMatrix) -> f64 {
    2.0 * a.abs_sum() + 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BinaryVector;
    use crate::generate::{gaussian_symmetric, psd};
    use crate::rng::{self, RngCore};
    use crate::solve::{brute_force, brute_force_cardinality};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * 1.0_f64.max(a.abs().max(b.abs()))
    }

    #[test]
    fn two_by_two_penalty_matrix() {
        let spec = PenaltySpec::new(2, 1, 1.0).unwrap();
        let c = spec.penalty_matrix();
        assert_eq!(c.entries(), &[-1.0, 1.0, 1.0, -1.0]);
    }

    #[test]
    fn target_beyond_dimension_is_rejected() {
        assert!(PenaltySpec::new(4, 8, 1.0).is_err());
        assert!(PenaltySpec::new(4, 0, 1.0).is_err());
        assert!(PenaltySpec::new(4, 2, 0.0).is_err());
        assert!(PenaltySpec::new(4, 2, -1.0).is_err());
    }

    #[test]
    fn experiment_scale_penalty_entries() {
        // n=30, M=8, alpha=0.5: diagonal 0.5*(1-16) = -7.5, off-diagonal 0.5.
        let spec = PenaltySpec::new(30, 8, 0.5).unwrap();
        let c = spec.penalty_matrix();
        assert_eq!(c.get(0, 0), -7.5);
        assert_eq!(c.get(0, 1), 0.5);
        assert_eq!(spec.beta(), -8.0);
    }

    #[test]
    fn penalty_value_closed_form() {
        let spec = PenaltySpec::new(30, 8, 0.5).unwrap();
        assert_eq!(spec.penalty_value(0).unwrap(), 0.0);
        assert_eq!(spec.penalty_value(8).unwrap(), -32.0);
        assert_eq!(spec.penalty_value(7).unwrap(), -31.5);
        assert_eq!(spec.penalty_value(9).unwrap(), -31.5);
        assert!(spec.penalty_value(7).unwrap() > spec.penalty_value(8).unwrap());
        assert!(spec.penalty_value(31).is_err());

        // Cross-check against an explicit cardinality-8 vector.
        let x = BinaryVector::from_lsb_mask(0xFF, 30);
        assert_eq!(x.cardinality(), 8);
        let direct = spec.penalty_matrix().evaluate(&x).unwrap();
        assert!(close(direct, -32.0));
    }

    #[test]
    fn parameter_round_trips() {
        assert_eq!(params_from_target(8, 0.5).unwrap(), (0.5, -8.0));
        assert_eq!(params_from_target(1, 1.0).unwrap(), (1.0, -2.0));
        assert_eq!(target_from_params(0.5, -8.0).unwrap(), 8.0);
        assert_eq!(target_from_params(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(target_from_params(2.0, -5.0).unwrap(), 1.25);
        assert!(target_from_params(0.0, 1.0).is_err());
        assert!(params_from_target(3, 0.0).is_err());

        // Exact round-trip whenever 2*alpha*m is representable.
        for &alpha in &[0.25, 0.5, 1.0, 2.0] {
            for m in 1..=12usize {
                let (alpha, beta) = params_from_target(m, alpha).unwrap();
                assert_eq!(target_from_params(alpha, beta).unwrap(), m as f64);
            }
        }
        // Otherwise the algebraic inverse holds to rounding error.
        for m in 1..=12usize {
            let (alpha, beta) = params_from_target(m, 0.7).unwrap();
            let back = target_from_params(alpha, beta).unwrap();
            assert!((back - m as f64).abs() <= 1e-9);
        }
    }

    #[test]
    fn from_alpha_beta_requires_integer_target() {
        let spec = PenaltySpec::from_alpha_beta(10, 0.5, -8.0).unwrap();
        assert_eq!(spec.m_target(), 8);
        assert!(PenaltySpec::from_alpha_beta(10, 2.0, -5.0).is_err());
        assert!(PenaltySpec::from_alpha_beta(4, 0.5, -8.0).is_err());
    }

    #[test]
    fn both_parameterizations_build_the_same_matrix() {
        for &(n, m, alpha) in &[(5usize, 2usize, 0.1f64), (12, 7, 2.0), (30, 8, 0.5)] {
            let spec = PenaltySpec::new(n, m, alpha).unwrap();
            let via_spec = spec.penalty_matrix();
            // alpha*J + beta*I, assembled independently.
            let j = SymmetricMatrix::all_ones(n).unwrap().scale(alpha);
            let i = SymmetricMatrix::identity(n).unwrap().scale(spec.beta());
            let via_sum = j.add(&i).unwrap();
            assert_eq!(via_spec.entries(), via_sum.entries());
        }
    }

    #[test]
    fn closed_form_agrees_with_matrix_evaluation() {
        let mut rng = rng::test_rng(0xC0DE);
        for &alpha in &[0.1, 0.5, 1.0, 2.0, 10.0] {
            for _ in 0..40 {
                let n = 1 + (rng.next_u64() % 30) as usize;
                let m = 1 + (rng.next_u64() as usize % n);
                let spec = PenaltySpec::new(n, m, alpha).unwrap();
                let c = spec.penalty_matrix();
                let x = BinaryVector::random(n, rng.next_u64());
                let direct = c.evaluate(&x).unwrap();
                let closed = spec.penalty_value(x.cardinality()).unwrap();
                assert!(close(direct, closed), "{direct} vs {closed}");
            }
        }
    }

    #[test]
    fn unique_minimum_and_symmetry_about_target() {
        for n in 1..=30usize {
            for m in 1..=n {
                let spec = PenaltySpec::new(n, m, 0.5).unwrap();
                let at_m = spec.penalty_value(m).unwrap();
                for k in 0..=n {
                    let v = spec.penalty_value(k).unwrap();
                    if k != m {
                        assert!(v > at_m, "n={n} m={m} k={k}");
                    }
                }
                let max_d = m.min(n - m);
                for d in 1..=max_d {
                    let lo = spec.penalty_value(m - d).unwrap();
                    let hi = spec.penalty_value(m + d).unwrap();
                    assert!(close(lo, hi));
                }
            }
        }
    }

    #[test]
    fn apply_constraint_on_zero_matrix_is_the_penalty() {
        let spec = PenaltySpec::new(6, 3, 0.7).unwrap();
        let zero = SymmetricMatrix::zeros(6).unwrap();
        let applied = zero.apply_constraint(&spec).unwrap();
        assert_eq!(applied.entries(), spec.penalty_matrix().entries());

        let other = SymmetricMatrix::zeros(5).unwrap();
        assert!(other.apply_constraint(&spec).is_err());
    }

    #[test]
    fn constrained_objective_is_additive() {
        let mut rng = rng::test_rng(0xADD);
        for _ in 0..50 {
            let a = gaussian_symmetric(9, rng.next_u64()).unwrap();
            let spec = PenaltySpec::new(9, 4, 1.5).unwrap();
            let combined = a.apply_constraint(&spec).unwrap();
            let x = BinaryVector::random(9, rng.next_u64());
            let lhs = combined.evaluate(&x).unwrap();
            let rhs =
                a.evaluate(&x).unwrap() + spec.penalty_value(x.cardinality()).unwrap();
            assert!(close(lhs, rhs));
        }
    }

    #[test]
    fn safe_alpha_of_zero_matrix_is_one() {
        let zero = SymmetricMatrix::zeros(5).unwrap();
        assert_eq!(safe_alpha(&zero), 1.0);
        // Any cardinality-M vector then ties for the minimum.
        let spec = PenaltySpec::new(5, 2, 1.0).unwrap();
        let best = brute_force(&zero.apply_constraint(&spec).unwrap()).unwrap();
        assert_eq!(best.solution.cardinality(), 2);
    }

    #[test]
    fn safe_alpha_pins_every_target_on_small_instances() {
        for (label, a) in [
            ("gaussian", gaussian_symmetric(12, 0xBEE).unwrap()),
            ("psd", psd(12, 0xBEE).unwrap()),
        ] {
            let alpha = safe_alpha(&a);
            for m in 1..12usize {
                let spec = PenaltySpec::new(12, m, alpha).unwrap();
                let constrained = brute_force(&a.apply_constraint(&spec).unwrap()).unwrap();
                assert_eq!(constrained.solution.cardinality(), m, "{label} m={m}");
                let oracle = brute_force_cardinality(&a, m).unwrap();
                let recovered = constrained.cost - spec.penalty_value(m).unwrap();
                assert!(
                    close(recovered, oracle.cost),
                    "{label} m={m}: {recovered} vs {}",
                    oracle.cost
                );
            }
        }
    }
}
