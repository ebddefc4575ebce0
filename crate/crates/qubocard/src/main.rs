//! Command-line harness: generate instances, solve them, query the exact
//! oracles, and run histogram experiments.
//!
//! Exit codes: 0 on success, 2 for validation/input errors, 3 when a
//! capacity guard trips.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use qubocard::{
    brute_force, brute_force_cardinality, run_experiment, save_matrix, simulated_anneal,
    write_histograms, AnnealSchedule, Error, ExperimentConfig, InstanceSpec, PenaltySpec,
    SolveResult, SymmetricMatrix,
};

#[derive(Parser)]
#[command(name = "qubocard", version, about = "Cardinality-constrained QUBO toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance source: `gaussian`, `psd`, or `file:PATH`.
    #[arg(long)]
    instance: String,

    /// Dimension for generated instances; inferred (and checked) for files.
    #[arg(long)]
    n: Option<usize>,

    /// Seed for instance generation.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Symmetrize a loaded file instead of rejecting asymmetric input.
    #[arg(long)]
    symmetrize: bool,
}

impl InstanceArgs {
    fn spec(&self) -> Result<InstanceSpec, Error> {
        parse_instance(&self.instance, self.symmetrize)
    }

    /// Materialize the matrix, resolving `n` from the flag or the file.
    fn realize(&self) -> Result<SymmetricMatrix, Error> {
        let spec = self.spec()?;
        match (&spec, self.n) {
            (InstanceSpec::File { path, symmetrize }, n) => {
                let a = qubocard::load_matrix(path, *symmetrize)?;
                if let Some(n) = n {
                    if a.n() != n {
                        return Err(Error::DimensionMismatch {
                            left: n,
                            right: a.n(),
                        });
                    }
                }
                Ok(a)
            }
            (_, Some(n)) => spec.realize(n, self.seed),
            (_, None) => Err(Error::InvalidParameter(
                "--n is required for generated instances".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sweep penalty weights and tally solution cardinalities into a CSV.
    Experiment {
        #[arg(long, default_value_t = 30)]
        n: usize,

        /// Target cardinality.
        #[arg(long, default_value_t = 8)]
        m: usize,

        /// Comma-separated penalty weights; 0 is the unconstrained baseline.
        #[arg(long, default_value = "0,0.1,0.2,0.5,1,2,10")]
        alphas: String,

        #[arg(long, default_value_t = 500)]
        trials: usize,

        /// Instance source: `gaussian`, `psd`, or `file:PATH`.
        #[arg(long, default_value = "gaussian")]
        instance: String,

        #[arg(long, default_value_t = 42)]
        seed: u64,

        /// Annealing profile: `fast` or `quality`.
        #[arg(long, default_value = "fast")]
        schedule: String,

        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,

        /// Symmetrize a loaded file instead of rejecting asymmetric input.
        #[arg(long)]
        symmetrize: bool,
    },

    /// Anneal one matrix once and print the result.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Target cardinality (requires --alpha).
        #[arg(long, requires = "alpha")]
        m: Option<usize>,

        /// Penalty weight; omit to solve the raw matrix.
        #[arg(long, requires = "m")]
        alpha: Option<f64>,

        /// Annealing profile: `fast` or `quality`.
        #[arg(long, default_value = "fast")]
        schedule: String,

        /// Seed for the annealing run itself.
        #[arg(long, default_value_t = 1)]
        anneal_seed: u64,
    },

    /// Exact minimizer by exhaustive search.
    Oracle {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Restrict the search to vectors with exactly this many ones.
        #[arg(long)]
        m: Option<usize>,
    },

    /// Generate an instance and write it as a matrix text file.
    Gen {
        /// Instance source: `gaussian` or `psd`.
        #[arg(long)]
        instance: String,

        #[arg(long, default_value_t = 30)]
        n: usize,

        #[arg(long, default_value_t = 42)]
        seed: u64,

        /// Output path.
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_instance(s: &str, symmetrize: bool) -> Result<InstanceSpec, Error> {
    match s {
        "gaussian" => Ok(InstanceSpec::Gaussian),
        "psd" => Ok(InstanceSpec::Psd),
        other => {
            if let Some(path) = other.strip_prefix("file:") {
                Ok(InstanceSpec::File {
                    path: PathBuf::from(path),
                    symmetrize,
                })
            } else {
                Err(Error::InvalidParameter(format!(
                    "unknown instance '{other}', expected gaussian, psd, or file:PATH"
                )))
            }
        }
    }
}

fn parse_alphas(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<f64>().map_err(|_| {
                Error::InvalidParameter(format!("invalid penalty weight '{tok}'"))
            })
        })
        .collect()
}

fn print_result(r: &SolveResult) {
    println!("cost {}", r.cost);
    println!("solution {}", r.solution.to_bitstring());
    println!("cardinality {}", r.solution.cardinality());
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Experiment {
            n,
            m,
            alphas,
            trials,
            instance,
            seed,
            schedule,
            out,
            symmetrize,
        } => {
            let config = ExperimentConfig {
                n,
                m_target: m,
                alphas: parse_alphas(&alphas)?,
                trials,
                instance: parse_instance(&instance, symmetrize)?,
                seed,
                schedule: AnnealSchedule::from_str(&schedule)?,
            };
            let histograms = run_experiment(&config)?;
            write_histograms(&histograms, &out)?;
            eprintln!(
                "wrote {} histogram groups x {} bins to {}",
                histograms.groups.len(),
                n + 1,
                out.display()
            );
            Ok(())
        }

        Command::Solve {
            instance,
            m,
            alpha,
            schedule,
            anneal_seed,
        } => {
            let a = instance.realize()?;
            let matrix = match (m, alpha) {
                (Some(m), Some(alpha)) => {
                    let spec = PenaltySpec::new(a.n(), m, alpha)?;
                    a.apply_constraint(&spec)?
                }
                _ => a,
            };
            let r = simulated_anneal(&matrix, &AnnealSchedule::from_str(&schedule)?, anneal_seed);
            print_result(&r);
            Ok(())
        }

        Command::Oracle { instance, m } => {
            let a = instance.realize()?;
            let r = match m {
                Some(m) => brute_force_cardinality(&a, m)?,
                None => brute_force(&a)?,
            };
            print_result(&r);
            Ok(())
        }

        Command::Gen {
            instance,
            n,
            seed,
            out,
        } => {
            let a = match parse_instance(&instance, false)? {
                InstanceSpec::Gaussian => qubocard::gaussian_symmetric(n, seed)?,
                InstanceSpec::Psd => qubocard::psd(n, seed)?,
                InstanceSpec::File { .. } => {
                    return Err(Error::InvalidParameter(
                        "gen expects 'gaussian' or 'psd'".into(),
                    ))
                }
            };
            save_matrix(&a, &out)?;
            eprintln!("wrote {n}x{n} matrix to {}", out.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
