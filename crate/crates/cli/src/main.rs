//! `fringestat`: random tree generation, tree parameters, limit constants,
//! Monte Carlo experiments and oracle verification.
//!
//! Exit codes: 0 success, 1 computation or gate failure, 2 usage error.

mod config;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fringestat::constants::{constants_report, DEFAULT_TOLERANCE, DEFAULT_TRUNCATION};
use fringestat::fringe::{fringe_sum, Toll};
use fringestat::gen::generate;
use fringestat::mc::gates::evaluate_gates;
use fringestat::mc::{run_experiment, ExperimentSpec, Parameter};
use fringestat::oracle::{self, Algorithms, VerifyConfig};
use fringestat::params::full_report;
use fringestat::rng::Seed;
use fringestat::{Error, Model, RootedTree};

#[derive(Parser, Debug)]
#[command(
    name = "fringestat",
    version,
    about = "Independence and domination numbers of random trees"
)]
pub struct Cli {
    /// `key = value` file with default flag values; explicit flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random tree.
    Gen(GenArgs),
    /// Compute every parameter of one tree.
    Params(ParamsArgs),
    /// Compute and cross-check the limit constants.
    Constants(ConstantsArgs),
    /// Run a Monte Carlo experiment.
    Simulate(SimulateArgs),
    /// Compare the fast algorithms with brute force.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args, Debug)]
struct TreeSource {
    /// Tree model.
    #[arg(long, value_parser = parse_model)]
    model: Option<Model>,
    /// Number of nodes (scientific notation such as 1e6 is accepted).
    #[arg(long, value_parser = parse_count)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replica index under the master seed.
    #[arg(long, default_value_t = 0)]
    replica: u64,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(flatten)]
    source: TreeSource,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write into this directory instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ParamsArgs {
    /// Tree JSON file; generation flags are used when absent.
    #[arg(long, conflicts_with_all = ["model", "n"])]
    tree: Option<PathBuf>,
    #[command(flatten)]
    source: TreeSource,
    /// Values of k for k-domination, comma separated.
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    /// Also dump per-node independence and domination flags.
    #[arg(long)]
    flags: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConstantsArgs {
    /// Series truncation index N.
    #[arg(long, value_parser = parse_count, default_value_t = DEFAULT_TRUNCATION)]
    truncation: usize,
    /// Absolute tolerance for quadrature and agreement checks.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long, required = true, value_parser = parse_model)]
    model: Option<Model>,
    /// I, D, M, VC, EC, CC or Dk (for example D2).
    #[arg(long, default_value = "I", value_parser = parse_parameter)]
    param: Parameter,
    /// Tree sizes, comma separated.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_count)]
    sizes: Vec<usize>,
    #[arg(long, value_parser = parse_count, default_value_t = 100)]
    replicas: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long, env = "FRINGESTAT_WORKERS")]
    workers: Option<usize>,
    /// csv writes per-replica values, json writes per-size summaries.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Directory for the CSV, summary and gate files.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Evaluate the acceptance gates and fail when any does not pass.
    #[arg(long)]
    gates: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Random trees per model.
    #[arg(long, value_parser = parse_count, default_value_t = 500)]
    trees: usize,
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Check a known-broken implementation instead.
    #[arg(long, hide = true)]
    corrupt: bool,
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Library errors caused by bad input are usage errors; the rest are
/// computation failures.
fn classify(e: Error) -> anyhow::Error {
    match e {
        Error::InvalidTree(_)
        | Error::Parse(_)
        | Error::WrongModel { .. }
        | Error::InvalidArgument(_)
        | Error::KTooLargeForBst { .. }
        | Error::BudgetExceeded { .. } => usage(e.to_string()),
        other => other.into(),
    }
}

fn parse_model(s: &str) -> Result<Model, String> {
    match s.parse::<Model>() {
        Ok(Model::Generic) => Err("model must be bst or rrt".into()),
        Ok(m) => Ok(m),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_parameter(s: &str) -> Result<Parameter, String> {
    s.parse::<Parameter>().map_err(|e| e.to_string())
}

/// Non-negative integer, optionally written as `1e5` or `2.5e3`.
fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(v) = s.parse::<usize>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a count"))?;
    if v >= 0.0 && v.fract() == 0.0 && v <= usize::MAX as f64 {
        Ok(v as usize)
    } else {
        Err(format!("`{s}` is not a non-negative integer"))
    }
}

fn emit(out: Option<&Path>, file_name: &str, body: &str) -> Result<()> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            let path = dir.join(file_name);
            fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn reject_format(format: Format, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(
            format!("format {format:?} is not supported by this subcommand").to_lowercase(),
        ))
    }
}

fn generated(source: &TreeSource) -> Result<(RootedTree, String)> {
    let model = source.model.ok_or_else(|| usage("--model is required"))?;
    let n = source.n.ok_or_else(|| usage("--n is required"))?;
    let sample = generate(model, n, Seed::new(source.seed, source.replica)).map_err(classify)?;
    let stem = format!("{model}_n{n}_s{}_r{}", source.seed, source.replica);
    Ok((sample.tree, stem))
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    reject_format(args.format, &[Format::Json, Format::Dot])?;
    let (tree, stem) = generated(&args.source)?;
    let (body, ext) = match args.format {
        Format::Dot => (tree.to_dot(), "dot"),
        _ => (tree.to_json(), "json"),
    };
    emit(
        args.out.as_deref(),
        &format!("tree_{stem}.{ext}"),
        &with_newline(body),
    )
}

fn bits(flags: &[bool]) -> Vec<u8> {
    flags.iter().map(|&b| b as u8).collect()
}

fn cmd_params(args: ParamsArgs) -> Result<()> {
    reject_format(args.format, &[Format::Json, Format::Csv])?;
    let (tree, stem) = match &args.tree {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let tree = RootedTree::from_json(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let stem = path
                .file_stem()
                .map_or("tree".into(), |s| s.to_string_lossy().into_owned());
            (tree, stem)
        }
        None => generated(&args.source)?,
    };
    let report = full_report(&tree, &args.k).map_err(classify)?;
    let body = match args.format {
        Format::Csv => {
            let mut header = String::from("n,I,D,M,VC,EC,CC,lap1_mult");
            let ec = report.edge_cover.map_or(String::new(), |v| v.to_string());
            let mut row = format!(
                "{},{},{},{},{},{},{},{}",
                report.n,
                report.independence,
                report.domination,
                report.matching,
                report.vertex_cover,
                ec,
                report.clique_cover,
                report.lap1_mult
            );
            for (k, v) in &report.k_domination {
                header.push_str(&format!(",D{k}"));
                row.push_str(&format!(",{v}"));
            }
            format!("{header}\n{row}\n")
        }
        _ => with_newline(report.to_json()),
    };
    let ext = if args.format == Format::Csv {
        "csv"
    } else {
        "json"
    };
    emit(args.out.as_deref(), &format!("params_{stem}.{ext}"), &body)?;
    if args.flags {
        let dump = json!({
            "n": tree.n(),
            "independence": bits(&fringe_sum(&tree, Toll::Independence).per_node),
            "domination": bits(&fringe_sum(&tree, Toll::Domination).per_node),
        });
        emit(
            args.out.as_deref(),
            &format!("flags_{stem}.json"),
            &with_newline(dump.to_string()),
        )?;
    }
    Ok(())
}

fn cmd_constants(args: ConstantsArgs) -> Result<ExitCode> {
    reject_format(args.format, &[Format::Json])?;
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        return Err(usage("--tolerance must be positive"));
    }
    let report = constants_report(args.truncation, args.tolerance).map_err(classify)?;
    emit(
        args.out.as_deref(),
        "constants.json",
        &with_newline(report.to_json()),
    )?;
    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        if !report.quadrature_converged {
            eprintln!("error: quadrature did not converge; the report is partial");
        } else {
            eprintln!("error: constant cross-checks disagree");
        }
        Ok(ExitCode::from(1))
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn cmd_simulate(args: SimulateArgs) -> Result<ExitCode> {
    reject_format(args.format, &[Format::Csv, Format::Json])?;
    let spec = ExperimentSpec {
        model: args.model.ok_or_else(|| usage("--model is required"))?,
        parameter: args.param,
        sizes: args.sizes,
        replicas: args.replicas,
        master_seed: args.seed,
        workers: args.workers.unwrap_or_else(default_workers),
    };
    spec.validate().map_err(classify)?;
    let experiment = run_experiment(&spec)?;
    let stem = format!("{}_{}_s{}", spec.model, spec.parameter, spec.master_seed);

    let mut csv = Vec::new();
    experiment.write_csv(&mut csv)?;
    let summaries: Vec<_> = experiment.summaries().collect();
    match &args.out {
        Some(dir) => {
            emit(
                Some(dir),
                &format!("{stem}.csv"),
                std::str::from_utf8(&csv)?,
            )?;
            for s in &summaries {
                emit(
                    Some(dir),
                    &format!("{stem}_n{}.json", s.n),
                    &with_newline(s.to_json()),
                )?;
            }
            if let Ok(fit) = experiment.slope() {
                emit(
                    Some(dir),
                    &format!("{stem}_slope.json"),
                    &with_newline(serde_json::to_string_pretty(&fit)?),
                )?;
            }
        }
        None if args.format == Format::Json => {
            emit(
                None,
                "",
                &with_newline(serde_json::to_string_pretty(&summaries)?),
            )?;
        }
        None => emit(None, "", std::str::from_utf8(&csv)?)?,
    }
    for s in &summaries {
        eprintln!(
            "n={} mean/n={:.6} var/n={:.6} ci=[{:.6}, {:.6}]",
            s.n, s.mean_over_n, s.variance_over_n, s.variance_over_n_ci.0, s.variance_over_n_ci.1
        );
    }

    if !args.gates {
        return Ok(ExitCode::SUCCESS);
    }
    let gates = evaluate_gates(&experiment);
    for g in &gates {
        eprintln!(
            "{} gate={} n={} value={} bound={}",
            if g.passed { "PASS" } else { "FAIL" },
            g.gate,
            g.n,
            g.value,
            g.bound
        );
    }
    if let Some(dir) = &args.out {
        emit(
            Some(dir),
            &format!("{stem}_gates.json"),
            &with_newline(serde_json::to_string_pretty(&gates)?),
        )?;
    }
    Ok(if gates.iter().all(|g| g.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    reject_format(args.format, &[Format::Json])?;
    let config = VerifyConfig {
        trees: args.trees,
        max_n: args.max_n,
        seed: args.seed,
    };
    let algorithms = if args.corrupt {
        oracle::faulty::algorithms()
    } else {
        Algorithms::default()
    };
    let report = oracle::verify(&config, algorithms).map_err(classify)?;
    print!("{}", report.table());
    if let Some(dir) = &args.out {
        emit(
            Some(dir),
            "verify.json",
            &with_newline(serde_json::to_string_pretty(&report)?),
        )?;
    }
    if report.passed() {
        return Ok(ExitCode::SUCCESS);
    }
    for row in &report.rows {
        if let Some(c) = &row.counterexample {
            println!(
                "counterexample {}: fast={} reference={} tree={}",
                row.parameter, c.fast, c.reference, c.tree_json
            );
        }
    }
    Ok(ExitCode::from(1))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(a) => cmd_gen(a).map(|_| ExitCode::SUCCESS),
        Command::Params(a) => cmd_params(a).map(|_| ExitCode::SUCCESS),
        Command::Constants(a) => cmd_constants(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn main() -> ExitCode {
    let args = match config::apply(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = Cli::parse_from(args);
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
