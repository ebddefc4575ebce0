//! Single-flip Metropolis annealing with geometric cooling.

use std::str::FromStr;

use super::{local_fields, update_fields, SolveResult};
use crate::bits::BinaryVector;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::rng::{self, RngCore};

/// Geometric cooling loop parameters.
///
/// The temperature starts at `t_initial`, is multiplied by `cooling` after
/// every `sweeps_per_temperature` full passes over the variables, and the
/// run stops once it drops below `t_final`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnealSchedule {
    t_initial: f64,
    t_final: f64,
    cooling: f64,
    sweeps_per_temperature: usize,
}

impl AnnealSchedule {
    pub fn new(
        t_initial: f64,
        t_final: f64,
        cooling: f64,
        sweeps_per_temperature: usize,
    ) -> Result<Self> {
        if !t_initial.is_finite() || !t_final.is_finite() || t_initial <= 0.0 || t_final <= 0.0 {
            return Err(Error::InvalidParameter(
                "temperatures must be positive finite numbers".into(),
            ));
        }
        if t_final >= t_initial {
            return Err(Error::InvalidParameter(format!(
                "final temperature {t_final} must be below initial {t_initial}"
            )));
        }
        if !(cooling > 0.0 && cooling < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "cooling factor must lie in (0, 1), got {cooling}"
            )));
        }
        if sweeps_per_temperature == 0 {
            return Err(Error::InvalidParameter(
                "sweeps per temperature must be >= 1".into(),
            ));
        }
        Ok(Self {
            t_initial,
            t_final,
            cooling,
            sweeps_per_temperature,
        })
    }

    /// Deliberately under-converged profile: cools from 10 to 0.05 by a
    /// factor 0.8 with two sweeps per step. Noisy on purpose; this is the
    /// profile the histogram experiments use.
    pub fn fast() -> Self {
        Self {
            t_initial: 10.0,
            t_final: 0.05,
            cooling: 0.8,
            sweeps_per_temperature: 2,
        }
    }

    /// Converged profile for verification work: cooling factor 0.98 with
    /// ten sweeps per step over the same temperature range.
    pub fn quality() -> Self {
        Self {
            t_initial: 10.0,
            t_final: 0.05,
            cooling: 0.98,
            sweeps_per_temperature: 10,
        }
    }

    pub fn t_initial(&self) -> f64 {
        self.t_initial
    }

    pub fn t_final(&self) -> f64 {
        self.t_final
    }

    pub fn cooling(&self) -> f64 {
        self.cooling
    }

    pub fn sweeps_per_temperature(&self) -> usize {
        self.sweeps_per_temperature
    }
}

impl FromStr for AnnealSchedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Self::fast()),
            "quality" => Ok(Self::quality()),
            other => Err(Error::InvalidParameter(format!(
                "unknown schedule '{other}', expected 'fast' or 'quality'"
            ))),
        }
    }
}

/// Energy change from flipping bit `i`:
/// `s·(a[i][i] + 2·Σ_{j≠i} a[i][j]·x[j])` with `s = 1 - 2x[i]`.
pub fn single_flip_delta(a: &SymmetricMatrix, x: &BinaryVector, i: usize) -> Result<f64> {
    let n = a.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: x.len(),
        });
    }
    if i >= n {
        return Err(Error::InvalidParameter(format!(
            "flip index {i} out of range for dimension {n}"
        )));
    }
    let row = a.row(i);
    let mut acc = 0.0;
    for (j, &v) in row.iter().enumerate() {
        if j != i && x.get(j) == 1 {
            acc += v;
        }
    }
    let s = 1.0 - 2.0 * f64::from(x.get(i));
    Ok(s * (row[i] + 2.0 * acc))
}

/// Minimize `xᵀAx` by single-flip Metropolis annealing.
///
/// Starts from a uniformly random vector, sweeps the variables in index
/// order, accepts a flip with probability `min(1, exp(-Δ/T))`, and returns
/// the best state visited anywhere in the run (not the final state). The
/// returned cost is recomputed exactly for the returned vector.
///
/// Deterministic: a fixed `(matrix, schedule, seed)` triple reproduces the
/// result bit for bit.
pub fn simulated_anneal(a: &SymmetricMatrix, schedule: &AnnealSchedule, seed: u64) -> SolveResult {
    let n = a.n();
    let mut rng = rng::new_rng(seed);

    let mut bits: Vec<u8> = (0..n).map(|_| (rng.next_u64() & 1) as u8).collect();
    let mut fields = local_fields(a, &bits);
    let mut energy = a.evaluate_bits(&bits);
    let mut best_bits = bits.clone();
    let mut best_energy = energy;

    let mut t = schedule.t_initial;
    while t >= schedule.t_final {
        for _ in 0..schedule.sweeps_per_temperature {
            for i in 0..n {
                let s = 1.0 - 2.0 * f64::from(bits[i]);
                let delta = s * fields[i];
                let accept =
                    delta <= 0.0 || rng::uniform_f64(&mut rng) < (-delta / t).exp();
                if accept {
                    bits[i] ^= 1;
                    energy += delta;
                    update_fields(a, &mut fields, i, s);
                    if energy < best_energy {
                        best_energy = energy;
                        best_bits.copy_from_slice(&bits);
                    }
                }
            }
        }
        t *= schedule.cooling;
    }

    let solution = BinaryVector::from_bits_unchecked(best_bits);
    let cost = a.evaluate_bits(solution.bits());
    SolveResult {
        cost,
        solution,
        seed: Some(seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gaussian_symmetric;
    use crate::solve::brute_force;

    #[test]
    fn schedule_validation() {
        assert!(AnnealSchedule::new(10.0, 0.05, 0.8, 2).is_ok());
        assert!(AnnealSchedule::new(0.05, 10.0, 0.8, 2).is_err());
        assert!(AnnealSchedule::new(10.0, 0.05, 1.0, 2).is_err());
        assert!(AnnealSchedule::new(10.0, 0.05, 0.8, 0).is_err());
        assert!(AnnealSchedule::new(-1.0, 0.05, 0.8, 2).is_err());
        assert_eq!("fast".parse::<AnnealSchedule>().unwrap(), AnnealSchedule::fast());
        assert_eq!(
            "quality".parse::<AnnealSchedule>().unwrap(),
            AnnealSchedule::quality()
        );
        assert!("slow".parse::<AnnealSchedule>().is_err());
    }

    #[test]
    fn delta_on_empty_vector_is_the_diagonal() {
        let a = gaussian_symmetric(9, 5).unwrap();
        let x = BinaryVector::zeros(9);
        for i in 0..9 {
            assert_eq!(single_flip_delta(&a, &x, i).unwrap(), a.get(i, i));
        }
    }

    #[test]
    fn delta_on_all_ones_form() {
        // k^2 goes 1 -> 4 when the second bit joins.
        let a = SymmetricMatrix::all_ones(3).unwrap();
        let x = BinaryVector::new(vec![1, 0, 0]).unwrap();
        assert_eq!(single_flip_delta(&a, &x, 1).unwrap(), 3.0);
    }

    #[test]
    fn delta_bounds_checks() {
        let a = SymmetricMatrix::identity(3).unwrap();
        let x = BinaryVector::zeros(3);
        assert!(single_flip_delta(&a, &x, 3).is_err());
        let short = BinaryVector::zeros(2);
        assert!(single_flip_delta(&a, &short, 0).is_err());
    }

    #[test]
    fn delta_matches_full_reevaluation_on_many_triples() {
        let mut rng = crate::rng::test_rng(0xDE17A);
        for _ in 0..10_000 {
            let n = 15;
            let a = gaussian_symmetric(n, rng.next_u64()).unwrap();
            let x = BinaryVector::random(n, rng.next_u64());
            let i = (rng.next_u64() % n as u64) as usize;
            let mut flipped = x.bits().to_vec();
            flipped[i] ^= 1;
            let flipped = BinaryVector::new(flipped).unwrap();
            let direct = a.evaluate(&flipped).unwrap() - a.evaluate(&x).unwrap();
            let fast = single_flip_delta(&a, &x, i).unwrap();
            assert!((direct - fast).abs() <= 1e-9, "{direct} vs {fast}");
        }
    }

    #[test]
    fn negated_identity_fills_every_bit() {
        let a = SymmetricMatrix::identity(20).unwrap().scale(-1.0);
        for seed in 0..5 {
            let r = simulated_anneal(&a, &AnnealSchedule::fast(), seed);
            assert_eq!(r.cost, -20.0);
            assert_eq!(r.solution.cardinality(), 20);
        }
    }

    #[test]
    fn identity_form_lands_at_or_next_to_empty() {
        let a = SymmetricMatrix::identity(20).unwrap();
        for seed in 0..5 {
            let r = simulated_anneal(&a, &AnnealSchedule::fast(), seed);
            assert!(r.cost == 0.0 || r.cost == 1.0, "cost {}", r.cost);
        }
    }

    #[test]
    fn returned_cost_matches_returned_vector() {
        let a = gaussian_symmetric(14, 3).unwrap();
        for seed in 0..10 {
            let r = simulated_anneal(&a, &AnnealSchedule::fast(), seed);
            assert_eq!(r.cost, a.evaluate(&r.solution).unwrap());
            assert_eq!(r.seed, Some(seed));
        }
    }

    #[test]
    fn runs_are_deterministic_per_seed() {
        let a = gaussian_symmetric(12, 9).unwrap();
        let s = AnnealSchedule::fast();
        let first = simulated_anneal(&a, &s, 1234);
        let second = simulated_anneal(&a, &s, 1234);
        assert_eq!(first.cost.to_bits(), second.cost.to_bits());
        assert_eq!(first.solution, second.solution);
    }

    #[test]
    fn oracle_lower_bounds_every_annealed_cost() {
        let a = gaussian_symmetric(12, 21).unwrap();
        let opt = brute_force(&a).unwrap();
        for seed in 0..20 {
            let r = simulated_anneal(&a, &AnnealSchedule::fast(), seed);
            assert!(opt.cost <= r.cost + 1e-9);
        }
    }

    #[test]
    fn quality_schedule_finds_the_optimum_most_of_the_time() {
        let a = gaussian_symmetric(12, 0x5EED).unwrap();
        let opt = brute_force(&a).unwrap();
        let schedule = AnnealSchedule::quality();
        let hits = (0..100)
            .filter(|&seed| {
                (simulated_anneal(&a, &schedule, seed).cost - opt.cost).abs() <= 1e-9
            })
            .count();
        assert!(hits >= 80, "only {hits}/100 runs reached the optimum");
    }
}
