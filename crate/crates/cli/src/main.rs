//! Command-line entry point. Machine-readable results go to stdout as JSON
//! (or the documented text formats); diagnostics go to stderr. Exit statuses:
//! 0 success / trivial, 10 nontrivial class or quotient found, 2 usage or
//! input error, 3 infeasible or budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ynp::complex::sample_complex;
use ynp::experiments::{quotient_experiment, threshold_sweep, union_bound_value, ExperimentConfig, ExperimentResult};
use ynp::group::{catalog_entries, resolve_group};
use ynp::search::{count_hom_orbits, enumerate_cocycles, has_nontrivial_class_budgeted, has_small_quotient_budgeted};
use ynp::{Complex2, Error};

const EXIT_NONTRIVIAL: u8 = 10;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(name = "ynp", version, about = "Random 2-complexes, non-abelian H^1, and quotients of their fundamental groups")]
struct Cli {
    /// Worker threads for trial-parallel commands (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum ExpansionMode {
    Exhaustive,
    Sampled,
}

#[derive(Subcommand)]
enum Command {
    /// Sample Y(n,p) and emit the complex text format.
    Sample {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether H^1(X;G) is nontrivial, or whether pi_1(X) has a small
    /// quotient; exits 10 when one is found.
    Check {
        /// Read the complex from a file in the text format.
        #[arg(long, conflicts_with = "sample")]
        complex: Option<PathBuf>,
        /// Sample the complex: `n,p,seed`.
        #[arg(long, value_name = "N,P,SEED")]
        sample: Option<String>,
        /// Single coefficient group spec (e.g. C2, A5, PSL27).
        #[arg(long, conflicts_with = "max_index")]
        group: Option<String>,
        /// Walk every simple group of order up to N.
        #[arg(long)]
        max_index: Option<u32>,
        /// Write the witness cochain (if any) in the cochain text format.
        #[arg(long)]
        emit_witness: Option<PathBuf>,
        /// Search node budget before giving up (exit 3).
        #[arg(long, default_value_t = ExperimentConfig::DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Verify the expansion inequality 3*|d1(phi)| >= n*|[phi]| over the full
    /// simplex, exhaustively or on random cochains.
    VerifyExpansion {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ExpansionMode,
        /// Trials for sampled mode.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a threshold sweep from a key = value config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Override the config's output stem.
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the small-quotient experiment from a key = value config file.
    QuotientExp {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<String>,
    },
    /// Dump the simple-group catalog up to an order bound as JSON.
    Catalog {
        #[arg(long)]
        max_order: u32,
    },
    /// Count star-fixed cocycles and H^1 classes of a complex.
    CohomologyCount {
        #[arg(long, conflicts_with = "sample")]
        complex: Option<PathBuf>,
        #[arg(long, value_name = "N,P,SEED")]
        sample: Option<String>,
        #[arg(long)]
        group: String,
        /// Refuse to count beyond this many cocycles (exit 3).
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
    /// Evaluate the union-bound diagnostics at p = (6+7c) log n / n.
    UnionBound {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 50)]
        k_max: u32,
        /// Coefficient group order; defaults to n^c.
        #[arg(long)]
        group_order: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("ynp: failed to size thread pool: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("ynp: {err}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::BudgetExhausted(_))
                | Some(Error::EnumerationTruncated(_))
                | Some(Error::Infeasible(_)) => EXIT_INFEASIBLE,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn load_complex(path: Option<&PathBuf>, sample: Option<&str>) -> anyhow::Result<Complex2> {
    match (path, sample) {
        (Some(path), None) => Ok(Complex2::from_text(&std::fs::read_to_string(path)?)?),
        (None, Some(spec)) => {
            let parts: Vec<&str> = spec.split(',').collect();
            let [n, p, seed] = parts.as_slice() else {
                anyhow::bail!("--sample expects `n,p,seed`, got `{spec}`");
            };
            Ok(sample_complex(n.trim().parse()?, p.trim().parse()?, seed.trim().parse()?)?)
        }
        _ => anyhow::bail!("give exactly one of --complex or --sample"),
    }
}

fn write_result_files(result: &ExperimentResult, out: Option<String>) -> anyhow::Result<()> {
    let stem = out.or_else(|| result.config.out.clone());
    println!("{}", result.to_json());
    if let Some(stem) = stem {
        std::fs::write(format!("{stem}.json"), result.to_json())?;
        std::fs::write(format!("{stem}.csv"), result.to_csv())?;
        eprintln!("ynp: wrote {stem}.json and {stem}.csv");
    }
    Ok(())
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Sample { n, p, seed, out } => {
            if !(0.0..=1.0).contains(&p) {
                anyhow::bail!("p must lie in [0,1], got {p}");
            }
            let complex = sample_complex(n, p, seed)?;
            let text = complex.to_text();
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { complex, sample, group, max_index, emit_witness, node_budget } => {
            let x = load_complex(complex.as_ref(), sample.as_deref())?;
            match (group, max_index) {
                (Some(spec), None) => {
                    let g = Arc::new(resolve_group(&spec)?);
                    let report = has_nontrivial_class_budgeted(&x, &g, node_budget)?;
                    println!(
                        "{}",
                        json!({
                            "mode": "group",
                            "group": report.group,
                            "n": x.n(),
                            "f2": x.face_counts().2,
                            "trivial": report.trivial,
                            "nodes": report.stats.nodes,
                            "propagations": report.stats.propagations,
                        })
                    );
                    if let (Some(path), Some(witness)) = (emit_witness.as_ref(), report.witness.as_ref()) {
                        std::fs::write(path, witness.to_text())?;
                    }
                    Ok(if report.trivial {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_NONTRIVIAL)
                    })
                }
                (None, Some(bound)) => {
                    let found = has_small_quotient_budgeted(&x, bound, node_budget)?;
                    println!(
                        "{}",
                        json!({
                            "mode": "max-index",
                            "max_index": bound,
                            "n": x.n(),
                            "f2": x.face_counts().2,
                            "found": found.is_some(),
                            "group": found.as_ref().map(|(name, _)| name.clone()),
                        })
                    );
                    match found {
                        Some((_, witness)) => {
                            if let Some(path) = emit_witness {
                                std::fs::write(path, witness.to_text())?;
                            }
                            Ok(ExitCode::from(EXIT_NONTRIVIAL))
                        }
                        None => Ok(ExitCode::SUCCESS),
                    }
                }
                _ => anyhow::bail!("give exactly one of --group or --max-index"),
            }
        }
        Command::VerifyExpansion { n, group, mode, trials, seed } => {
            let g = Arc::new(resolve_group(&group)?);
            let report = match mode {
                ExpansionMode::Exhaustive => ynp::verify_expansion_exhaustive(n, &g)?,
                ExpansionMode::Sampled => ynp::verify_expansion_sampled(n, &g, trials, seed)?,
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { config, out } => {
            let config = ExperimentConfig::from_text(&std::fs::read_to_string(config)?)?;
            let spec = config
                .group
                .clone()
                .ok_or_else(|| anyhow::anyhow!("sweep config needs a `group` key"))?;
            let g = Arc::new(resolve_group(&spec)?);
            let result = threshold_sweep(&config, &g)?;
            write_result_files(&result, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::QuotientExp { config, out } => {
            let config = ExperimentConfig::from_text(&std::fs::read_to_string(config)?)?;
            let result = quotient_experiment(&config)?;
            write_result_files(&result, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { max_order } => {
            let entries = catalog_entries(max_order)?;
            println!("{}", serde_json::to_string_pretty(&entries)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::CohomologyCount { complex, sample, group, limit } => {
            let x = load_complex(complex.as_ref(), sample.as_deref())?;
            let g = Arc::new(resolve_group(&group)?);
            let enumeration = enumerate_cocycles(&x, &g, limit);
            if enumeration.truncated {
                return Err(Error::EnumerationTruncated(limit).into());
            }
            let classes = count_hom_orbits(&x, &g, limit)?;
            println!(
                "{}",
                json!({
                    "group": g.name(),
                    "n": x.n(),
                    "star_fixed_cocycles": enumeration.cocycles.len(),
                    "h1_classes": classes,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::UnionBound { n, c, k_max, group_order } => {
            let report = union_bound_value(n, c, k_max, group_order)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
