//! Binary quadratic optimization with a fixed selection size.
//!
//! `qubocard` builds QUBO problems (`min xᵀAx` over `x ∈ {0,1}ⁿ`), augments
//! them with a penalty matrix whose minimizers contain exactly `M` ones,
//! and solves them with a seeded Metropolis annealer or exhaustive oracles.
//! An experiment harness sweeps penalty weights and tallies solution
//! cardinalities into histograms (CSV output); the `qubocard` binary
//! exposes everything on the command line.
//!
//! The guide in `book/` walks through the math chapter by chapter; its code
//! snippets compile and run as doctests of this crate.
//!
//! ```
//! use qubocard::{brute_force, safe_alpha, PenaltySpec};
//!
//! // A random symmetric instance, and a penalty strong enough to make
//! // every optimal selection use exactly 4 of the 12 variables.
//! let a = qubocard::gaussian_symmetric(12, 7)?;
//! let spec = PenaltySpec::new(12, 4, safe_alpha(&a))?;
//! let best = brute_force(&a.apply_constraint(&spec)?)?;
//! assert_eq!(best.solution.cardinality(), 4);
//! # Ok::<(), qubocard::Error>(())
//! ```

mod bits;
mod constraint;
mod error;
mod experiment;
mod generate;
mod io;
mod ising;
mod matrix;
pub mod rng;
mod solve;

pub use bits::BinaryVector;
pub use constraint::{
    params_from_target, safe_alpha, target_from_params, PenaltySpec,
};
pub use error::{Error, Result};
pub use experiment::{
    render_histograms, run_experiment, write_histograms, AlphaHistogram, ExperimentConfig,
    HistogramSet, InstanceSpec,
};
pub use generate::{gaussian_symmetric, psd};
pub use io::{load_matrix, save_matrix};
pub use ising::IsingModel;
pub use matrix::{LinearTerm, SymmetricMatrix, MAX_DIM};
pub use solve::{
    brute_force, brute_force_cardinality, simulated_anneal, single_flip_delta, AnnealSchedule,
    SolveResult,
};

// Run every code block in the guide as a doctest so the book can never
// drift from the crate.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(QuboBasics, "../../../book/src/qubo.md");
    chapter!(IsingForm, "../../../book/src/ising.md");
    chapter!(Cardinality, "../../../book/src/cardinality.md");
    chapter!(Annealing, "../../../book/src/annealing.md");
    chapter!(Oracles, "../../../book/src/oracles.md");
    chapter!(Experiments, "../../../book/src/experiments.md");
    chapter!(Reproducibility, "../../../book/src/reproducibility.md");
}
