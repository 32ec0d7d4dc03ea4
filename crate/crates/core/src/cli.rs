//! The `tverberg-lab` command line.
//!
//! Exit codes: `solve` returns 0 (witness found), 1 (exhausted) or 2 (cap
//! reached); `verify` returns 0 or 1; `unavoidable` returns 0 (unavoidable),
//! 1 (avoidable) or 2 (refused above the cap); `theorem run` returns 0
//! (confirmed), 1 (violated) or 2 (inconclusive). Usage and input errors
//! return 64 and internal errors 70.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complexes::{is_unavoidable, parse_subcomplex, UnavoidabilityMode, DEFAULT_MAX_SIMPLEX_DIM};
use crate::geometry::{verify_witness, Configuration, Witness};
use crate::solver::{find_tverberg_with, ConstraintSet, SearchOptions, SearchOutcome, SearchStatus, DEFAULT_CAP};
use crate::theorems::{
    admissible, bound_nc, gvkf_condition_original, gvkf_condition_sharpened, is_prime, is_prime_power,
    min_dimension_bound, moment_curve_config, random_config, run_instance_with, sarkaria_config, type_b_min_colors,
    BoundSet, TheoremId, TheoremInstance, Verdict, DEFAULT_COORD_RANGE,
};
use crate::{Error, Result};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "tverberg-lab", version, about = "Constrained Tverberg partitions with exact arithmetic")]
struct Cli {
    /// Seed for random configurations and theorem trials.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of theorem trials.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Maximum number of enumerated families per search.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Worker threads. Outputs do not depend on this value.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search a configuration for a constrained Tverberg partition.
    Solve {
        #[arg(long)]
        config: PathBuf,
        /// Constraint set as inline JSON or a path to a JSON file.
        #[arg(long)]
        constraints: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a witness (or a search outcome containing one) exactly.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        /// Constraint set as inline JSON or a path; defaults to pairwise.
        #[arg(long)]
        constraints: Option<String>,
    },
    /// Decide whether a subcomplex is Tverberg unavoidable.
    Unavoidable {
        /// Subcomplex expression, e.g. `skeleton(1) | induced(0..3)`.
        complex: String,
        /// Simplex dimension N (the simplex has N+1 vertices).
        #[arg(long = "n", short = 'n')]
        n: usize,
        #[arg(long, short = 'r')]
        r: usize,
        #[arg(long, value_enum, default_value_t = Mode::Pairwise)]
        mode: Mode,
        /// Largest N accepted for exhaustive enumeration.
        #[arg(long, default_value_t = DEFAULT_MAX_SIMPLEX_DIM)]
        max_n: usize,
    },
    /// Run theorem instances.
    #[command(subcommand)]
    Theorem(TheoremCommand),
    /// Write a point configuration.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Evaluate the parameter bounds for a set of parameters.
    Bounds {
        /// Parameters as JSON, e.g. `{"r":3,"j":3,"d":3,"k":2,"N":5}`.
        #[arg(long)]
        params: String,
        /// Dimension tuple to test for admissibility, e.g. `2,1`.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
    },
}

#[derive(Subcommand, Debug)]
enum TheoremCommand {
    /// Run trials of one catalog entry and write a report.
    Run(TheoremRun),
    /// List the catalog.
    List,
}

#[derive(Args, Debug)]
struct TheoremRun {
    #[arg(long)]
    id: String,
    /// Parameters as inline JSON or a path, e.g. `{"r":3,"d":3,"k":2}`.
    #[arg(long, default_value = "{}")]
    params: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenerateKind {
    /// Uniform integer points drawn by a seeded generator.
    Random {
        count: usize,
        dim: usize,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["LO", "HI"])]
        range: Option<Vec<i64>>,
    },
    /// Points (t, t^2, ..., t^d) for t = 1..count.
    Moment { count: usize, dim: usize },
    /// Repeated simplex vertices and barycenter for the j-wise lower bound.
    Sarkaria { r: usize, j: usize, dim: usize },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Pairwise,
    CoverPartition,
}

/// Runs the command line with the process arguments and returns the exit code.
pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Runs the command line with explicit arguments (the first is the program
/// name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Solve { config, constraints, out } => {
            let config = read_config(config)?;
            let constraints = ConstraintSet::from_json(&inline_or_file(constraints)?)?;
            let options = SearchOptions { cap: cli.cap.unwrap_or(DEFAULT_CAP), jobs: cli.jobs };
            let outcome = find_tverberg_with(&config, &constraints, &options)?;
            emit(out.as_deref(), &outcome.to_json())?;
            eprintln!(
                "{:?}: {} families, {} LP calls",
                outcome.status, outcome.stats.families_enumerated, outcome.stats.lp_calls
            );
            Ok(match outcome.status {
                SearchStatus::WitnessFound => 0,
                SearchStatus::ExhaustedNoWitness => 1,
                SearchStatus::AbortedCap => 2,
            })
        }
        Command::Verify { config, witness, constraints } => {
            let config = read_config(config)?;
            let witness = read_witness(witness)?;
            let constraints = match constraints {
                Some(c) => ConstraintSet::from_json(&inline_or_file(c)?)?,
                None => ConstraintSet::new(witness.faces.len().max(2)),
            };
            let report = verify_witness(&config, &witness, &constraints);
            emit(None, &to_pretty(&report))?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Unavoidable { complex, n, r, mode, max_n } => {
            let sigma = parse_subcomplex(complex)?;
            let mode = match mode {
                Mode::Pairwise => UnavoidabilityMode::Pairwise,
                Mode::CoverPartition => UnavoidabilityMode::CoverPartition,
            };
            match is_unavoidable(&sigma, *n, *r, mode, *max_n) {
                Ok(u) => {
                    emit(None, &to_pretty(&u))?;
                    Ok(if u.unavoidable { 0 } else { 1 })
                }
                Err(Error::Resource(msg)) => {
                    eprintln!("refused: {msg}");
                    Ok(2)
                }
                Err(e) => Err(e),
            }
        }
        Command::Theorem(TheoremCommand::List) => {
            let mut stdout = std::io::stdout().lock();
            for id in TheoremId::ALL {
                writeln!(stdout, "{:<28} {}", id.as_str(), id.statement())?;
            }
            Ok(0)
        }
        Command::Theorem(TheoremCommand::Run(run)) => {
            let id: TheoremId = run.id.parse()?;
            let mut inst = TheoremInstance::from_params_json(id, &inline_or_file(&run.params)?)?;
            if let Some(t) = cli.trials {
                inst.trials = t;
            }
            if let Some(s) = cli.seed {
                inst.seed = s;
            }
            if let Some(c) = cli.cap {
                inst.cap = c;
            }
            let report = run_instance_with(&inst, cli.jobs)?;
            emit(run.out.as_deref(), &report.to_json())?;
            eprintln!("{}", report.summary());
            Ok(match report.verdict {
                Verdict::Confirmed => 0,
                Verdict::Violated => 1,
                Verdict::Inconclusive => 2,
            })
        }
        Command::Generate { kind, out } => {
            let config = match kind {
                GenerateKind::Random { count, dim, range } => {
                    let range = match range.as_deref() {
                        Some([lo, hi]) => [*lo, *hi],
                        _ => DEFAULT_COORD_RANGE,
                    };
                    let (config, prov) = random_config(*count, *dim, range, cli.seed.unwrap_or(0))?;
                    eprintln!("generator {} seed {} range [{}, {}]", prov.generator, prov.seed, range[0], range[1]);
                    config
                }
                GenerateKind::Moment { count, dim } => moment_curve_config(*count, *dim)?,
                GenerateKind::Sarkaria { r, j, dim } => sarkaria_config(*r, *j, *dim)?,
            };
            emit(out.as_deref(), &config.to_json())?;
            Ok(0)
        }
        Command::Bounds { params, dims } => {
            let b: BoundSet = serde_json::from_str(&inline_or_file(params)?)?;
            b.validate()?;
            emit(None, &to_pretty(&evaluate_bounds(&b, dims.as_deref())?))?;
            Ok(0)
        }
    }
}

#[derive(Serialize, Default)]
struct BoundsReport {
    schema: String,
    params: BoundSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    tverberg_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_dimension_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    type_b_min_colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gvkf_original_m: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gvkf_sharpened: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    admissible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r_is_prime: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r_is_prime_power: Option<bool>,
}

fn evaluate_bounds(b: &BoundSet, dims: Option<&[usize]>) -> Result<BoundsReport> {
    let mut rep = BoundsReport { schema: crate::schema_string(), params: b.clone(), ..Default::default() };
    if let Some(r) = b.r {
        rep.r_is_prime = Some(is_prime(r));
        rep.r_is_prime_power = Some(is_prime_power(r));
    }
    if let (Some(r), Some(d)) = (b.r, b.d) {
        rep.tverberg_n = Some(bound_nc(r, d, 0)?);
        rep.min_dimension_bound = Some(min_dimension_bound(r, d));
        rep.type_b_min_colors = Some(type_b_min_colors(r, d));
        if let Some(c) = b.c {
            rep.n_c = Some(bound_nc(r, d, c)?);
        }
        if let (Some(j), Some(k), Some(n)) = (b.j, b.k, b.n) {
            rep.gvkf_sharpened = Some(gvkf_condition_sharpened(r, j, d, k, n));
            if k < d {
                rep.gvkf_original_m = Some(gvkf_condition_original(r, j, d, k, n)?);
            }
        }
    }
    if let Some(dims) = dims {
        let d = b.d.ok_or_else(|| Error::Input("admissibility needs d".into()))?;
        rep.admissible = Some(admissible(dims, d));
    }
    Ok(rep)
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization is infallible")
}

/// Inline JSON (anything starting with `{` or `[`) or the contents of a file.
fn inline_or_file(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else {
        read_file(Path::new(arg))
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_config(path: &Path) -> Result<Configuration> {
    Configuration::from_json(&read_file(path)?).map_err(|e| annotate(path, e))
}

/// Accepts a bare witness or a search outcome that carries one.
fn read_witness(path: &Path) -> Result<Witness> {
    let text = read_file(path)?;
    if let Ok(outcome) = SearchOutcome::from_json(&text) {
        return outcome.witness.ok_or_else(|| Error::Input(format!("{} holds no witness", path.display())));
    }
    Witness::from_json(&text).map_err(|e| annotate(path, e))
}

fn annotate(path: &Path, e: Error) -> Error {
    match e {
        Error::Json(j) => Error::Input(format!("{}: {j}", path.display())),
        other => other,
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_64() {
        assert_eq!(run(["tverberg-lab", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["tverberg-lab", "unavoidable", "skeleton(", "-n", "4", "-r", "2"]), EXIT_USAGE);
        assert_eq!(run(["tverberg-lab", "solve", "--config", "/nonexistent.json", "--constraints", "{\"r\":2}"]), EXIT_USAGE);
    }

    #[test]
    fn unavoidable_codes() {
        assert_eq!(run(["tverberg-lab", "unavoidable", "skeleton(1)", "-n", "4", "-r", "2"]), 0);
        assert_eq!(run(["tverberg-lab", "unavoidable", "induced(0..1)", "-n", "4", "-r", "2"]), 1);
        assert_eq!(run(["tverberg-lab", "unavoidable", "skeleton(1)", "-n", "20", "-r", "2"]), 2);
    }

    #[test]
    fn bounds_fields() {
        let b = BoundSet { r: Some(3), j: Some(3), d: Some(3), k: Some(2), n: Some(5), ..Default::default() };
        let rep = evaluate_bounds(&b, Some(&[2, 1])).unwrap();
        assert_eq!(rep.gvkf_original_m, Some(None));
        assert_eq!(rep.gvkf_sharpened, Some(true));
        assert_eq!(rep.admissible, Some(true));
        assert_eq!(rep.tverberg_n, Some(8));
    }
}
