//! Random test-instance families.
//!
//! Two ensembles cover the interesting regimes: a symmetrized Gaussian
//! matrix whose unconstrained optimum selects about half the variables, and
//! a positive semi-definite Gram matrix whose unconstrained optimum is the
//! empty selection. Both are deterministic per seed; normal variates come
//! from the polar method in [`crate::rng`].

use crate::error::Result;
use crate::matrix::SymmetricMatrix;
use crate::rng::NormalSource;

/// Symmetrized Gaussian ensemble: draw an n×n matrix of i.i.d. standard
/// normals row by row, then form `(R + Rᵀ)/2`.
///
/// Off-diagonal entries end up with variance 1/2 (the average of two
/// independent draws), diagonal entries keep variance 1.
pub fn gaussian_symmetric(n: usize, seed: u64) -> Result<SymmetricMatrix> {
    let mut src = NormalSource::new(seed);
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| src.next_normal()).collect())
        .collect();
    SymmetricMatrix::symmetrize(&rows)
}

/// Positive semi-definite ensemble: `A = GᵀG / (4n)` with `G` an n×n matrix
/// of i.i.d. standard normals (a scaled full-rank Wishart draw, almost
/// surely positive definite).
///
/// The `1/(4n)` scaling concentrates the diagonal near 1/4 so the data term
/// competes with penalty weights of order one instead of drowning them;
/// the quadratic form `xᵀAx = ‖Gx‖²/(4n)` stays nonnegative regardless.
pub fn psd(n: usize, seed: u64) -> Result<SymmetricMatrix> {
    let mut src = NormalSource::new(seed);
    // G filled row-major: g[k][i] is draw k*n + i.
    let g: Vec<f64> = (0..n * n).map(|_| src.next_normal()).collect();
    let scale = 1.0 / (4.0 * n as f64);
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += g[k * n + i] * g[k * n + j];
            }
            let v = acc * scale;
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    // Symmetric by construction; the public constructor re-checks anyway.
    SymmetricMatrix::new(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BinaryVector;
    use crate::solve::{brute_force, brute_force_cardinality};

    #[test]
    fn single_entry_instance_is_a_normal_draw() {
        let a = gaussian_symmetric(1, 3).unwrap();
        assert!(a.get(0, 0).is_finite());
        assert_eq!(a.n(), 1);
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let a = gaussian_symmetric(10, 42).unwrap();
        let b = gaussian_symmetric(10, 42).unwrap();
        let c = gaussian_symmetric(10, 43).unwrap();
        assert_eq!(a.entries(), b.entries());
        assert_ne!(a.entries(), c.entries());

        let p = psd(10, 42).unwrap();
        let q = psd(10, 42).unwrap();
        assert_eq!(p.entries(), q.entries());
    }

    #[test]
    fn gaussian_sample_moments_match_the_ensemble() {
        // Pooled over 10 seeds at n=30: off-diagonal variance 1/2,
        // diagonal variance 1, both within 20%.
        let n = 30;
        let mut off = Vec::new();
        let mut diag = Vec::new();
        for seed in 0..10u64 {
            let a = gaussian_symmetric(n, seed).unwrap();
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        diag.push(a.get(i, j));
                    } else {
                        off.push(a.get(i, j));
                    }
                }
            }
        }
        let var = |xs: &[f64]| {
            let mean = xs.iter().sum::<f64>() / xs.len() as f64;
            xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / xs.len() as f64
        };
        let off_var = var(&off);
        let diag_var = var(&diag);
        assert!((off_var - 0.5).abs() <= 0.1, "off-diagonal variance {off_var}");
        assert!((diag_var - 1.0).abs() <= 0.2, "diagonal variance {diag_var}");
    }

    #[test]
    fn gaussian_optima_concentrate_near_half() {
        let ks: Vec<i64> = (100..110u64)
            .map(|seed| {
                let a = gaussian_symmetric(16, seed).unwrap();
                brute_force(&a).unwrap().solution.cardinality() as i64
            })
            .collect();
        let mean = ks.iter().sum::<i64>() as f64 / ks.len() as f64;
        assert!((mean - 8.0).abs() <= 4.0, "mean cardinality {mean}");
    }

    #[test]
    fn psd_form_is_nonnegative_everywhere() {
        for seed in 0..3u64 {
            let a = psd(12, seed).unwrap();
            for i in 0..100u64 {
                let x = BinaryVector::random(12, seed * 1000 + i);
                assert!(a.evaluate(&x).unwrap() >= -1e-9);
            }
        }
    }

    #[test]
    fn psd_unconstrained_optimum_is_the_empty_selection() {
        let a = psd(12, 7).unwrap();
        let r = brute_force(&a).unwrap();
        assert_eq!(r.cost, 0.0);
        assert_eq!(r.solution.cardinality(), 0);
    }

    #[test]
    fn psd_restricted_optimum_is_strictly_positive() {
        let a = psd(12, 7).unwrap();
        let r = brute_force_cardinality(&a, 4).unwrap();
        assert!(r.cost > 0.0);
    }
}
