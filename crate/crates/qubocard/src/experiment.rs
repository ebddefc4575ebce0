//! Multi-weight, multi-trial annealing experiments tallied into
//! cardinality histograms.
//!
//! One instance is generated from the experiment seed; for every penalty
//! weight in the configured list, `trials` independent annealing runs are
//! executed and the cardinalities of their solutions are counted. Weight 0
//! runs the raw matrix (the unconstrained baseline); positive weights run
//! `A + C(α)` with the target cardinality from the config.
//!
//! Trial `t` under the weight at list index `i` uses the RNG seed
//! `mix_seed(config.seed, i, t)`, so results are reproducible bit for bit
//! and appending a weight never perturbs the other histograms. Trials run
//! in parallel; tallies are merged in `(weight, trial)` order, so
//! concurrency never changes the output bytes.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::constraint::PenaltySpec;
use crate::error::{Error, Result};
use crate::generate;
use crate::io::load_matrix;
use crate::matrix::SymmetricMatrix;
use crate::rng::mix_seed;
use crate::solve::{simulated_anneal, AnnealSchedule};

/// Where the experiment matrix comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSpec {
    /// Symmetrized Gaussian ensemble ([`generate::gaussian_symmetric`]).
    Gaussian,
    /// Scaled Wishart positive semi-definite ensemble ([`generate::psd`]).
    Psd,
    /// Load from a matrix text file.
    File { path: PathBuf, symmetrize: bool },
}

impl InstanceSpec {
    /// Produce the matrix for an experiment of dimension `n`.
    pub fn realize(&self, n: usize, seed: u64) -> Result<SymmetricMatrix> {
        match self {
            InstanceSpec::Gaussian => generate::gaussian_symmetric(n, seed),
            InstanceSpec::Psd => generate::psd(n, seed),
            InstanceSpec::File { path, symmetrize } => {
                let a = load_matrix(path, *symmetrize)?;
                if a.n() != n {
                    return Err(Error::DimensionMismatch {
                        left: n,
                        right: a.n(),
                    });
                }
                Ok(a)
            }
        }
    }
}

/// Declarative description of one experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub m_target: usize,
    /// Penalty weights; 0 means the unconstrained baseline. Duplicates are
    /// rejected. Seed streams follow list order, histogram output is sorted
    /// by weight.
    pub alphas: Vec<f64>,
    pub trials: usize,
    pub instance: InstanceSpec,
    pub seed: u64,
    pub schedule: AnnealSchedule,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("dimension must be >= 1".into()));
        }
        if self.m_target == 0 || self.m_target > self.n {
            return Err(Error::InvalidParameter(format!(
                "target cardinality must satisfy 1 <= M <= {}, got {}",
                self.n, self.m_target
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        if self.alphas.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one penalty weight is required".into(),
            ));
        }
        for (i, &alpha) in self.alphas.iter().enumerate() {
            if !alpha.is_finite() || alpha < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "penalty weight at position {i} must be finite and >= 0, got {alpha}"
                )));
            }
            if self.alphas[..i].contains(&alpha) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate penalty weight {alpha}"
                )));
            }
        }
        Ok(())
    }
}

/// Tally for one penalty weight.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaHistogram {
    pub alpha: f64,
    /// `counts[k]` = number of trials whose solution had cardinality `k`,
    /// for `k` in `0..=n`.
    pub counts: Vec<u64>,
    /// Lowest solver cost over the trials (of the matrix as annealed,
    /// penalty included for positive weights).
    pub best_cost: f64,
    /// Mean solver cost over the trials.
    pub mean_cost: f64,
}

impl AlphaHistogram {
    /// Most frequent cardinality; ties break to the smaller value.
    pub fn mode_cardinality(&self) -> usize {
        let mut best_k = 0;
        let mut best = 0u64;
        for (k, &c) in self.counts.iter().enumerate() {
            if c > best {
                best = c;
                best_k = k;
            }
        }
        best_k
    }

    pub fn trials(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Fraction of trials that landed on cardinality `k`.
    pub fn fraction_at(&self, k: usize) -> f64 {
        self.counts.get(k).copied().unwrap_or(0) as f64 / self.trials() as f64
    }

    /// Mean cardinality over the trials.
    pub fn mean_cardinality(&self) -> f64 {
        let total: u64 = self
            .counts
            .iter()
            .enumerate()
            .map(|(k, &c)| k as u64 * c)
            .sum();
        total as f64 / self.trials() as f64
    }
}

/// All histograms of one experiment, in configured weight order.
#[derive(Debug, Clone, PartialEq)]
pub struct HistogramSet {
    pub n: usize,
    pub trials: usize,
    pub groups: Vec<AlphaHistogram>,
}

impl HistogramSet {
    /// The histogram for a given weight, if present.
    pub fn group(&self, alpha: f64) -> Option<&AlphaHistogram> {
        self.groups.iter().find(|g| g.alpha == alpha)
    }
}

/// Run the full experiment described by `config`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<HistogramSet> {
    config.validate()?;
    let base = config.instance.realize(config.n, config.seed)?;

    let mut groups = Vec::with_capacity(config.alphas.len());
    for (alpha_index, &alpha) in config.alphas.iter().enumerate() {
        let matrix = if alpha == 0.0 {
            base.clone()
        } else {
            let spec = PenaltySpec::new(config.n, config.m_target, alpha)?;
            base.apply_constraint(&spec)?
        };

        let results: Vec<(usize, f64)> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let seed = mix_seed(config.seed, alpha_index as u64, trial as u64);
                let r = simulated_anneal(&matrix, &config.schedule, seed);
                (r.solution.cardinality(), r.cost)
            })
            .collect();

        let mut counts = vec![0u64; config.n + 1];
        let mut best_cost = f64::INFINITY;
        let mut sum_cost = 0.0;
        for &(k, cost) in &results {
            counts[k] += 1;
            sum_cost += cost;
            if cost < best_cost {
                best_cost = cost;
            }
        }
        groups.push(AlphaHistogram {
            alpha,
            counts,
            best_cost,
            mean_cost: sum_cost / config.trials as f64,
        });
    }

    Ok(HistogramSet {
        n: config.n,
        trials: config.trials,
        groups,
    })
}

/// Render the histograms as long-format CSV.
///
/// Header `alpha,cardinality,count,best_cost,mean_cost`; one row per
/// `(weight, cardinality)` pair including zero counts, sorted by weight and
/// then cardinality. Output bytes are a pure function of the histogram set.
pub fn render_histograms(h: &HistogramSet) -> String {
    let mut order: Vec<usize> = (0..h.groups.len()).collect();
    order.sort_by(|&a, &b| {
        h.groups[a]
            .alpha
            .partial_cmp(&h.groups[b].alpha)
            .expect("weights are finite")
    });

    let mut out = String::from("alpha,cardinality,count,best_cost,mean_cost\n");
    for idx in order {
        let g = &h.groups[idx];
        for (k, &count) in g.counts.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                g.alpha, k, count, g.best_cost, g.mean_cost
            ));
        }
    }
    out
}

/// Write [`render_histograms`] output to a file.
pub fn write_histograms(h: &HistogramSet, path: &Path) -> Result<()> {
    fs::write(path, render_histograms(h))?;
    Ok(())
}
