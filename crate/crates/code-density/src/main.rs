//! Thin command-line front end. All computation lives in the library; this
//! binary parses flags, loads the optional config file, dispatches, and maps
//! errors to exit codes:
//!
//!   0  success
//!   1  verification failure (or i/o failure)
//!   2  usage or parameter error
//!   3  work limit exceeded

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::BigUint;

use code_density::error::Error;
use code_density::limits::WorkLimit;
use code_density::report::{
    parse_rational, render_csv, render_jsonl, run_bounds, run_estimate, run_exact, run_sweep,
    Config, Metric, ParamSet, SizeRule, SweepSpec, VerifySuite,
};

/// Environment variable naming the default config file; the --config flag
/// overrides it, and individual flags override the file.
const CONFIG_ENV: &str = "CODE_DENSITY_CONFIG";

#[derive(Parser)]
#[command(
    name = "code-density",
    version,
    about = "Density bounds for block and subspace codes, with enumeration and Monte Carlo oracles",
    after_help = "Config file: simple key=value lines (work_limit, work_limit_objects,\n\
                  work_limit_pairs, confidence_level, workers). Default path comes from\n\
                  $CODE_DENSITY_CONFIG; --config overrides it; flags override the file.\n\
                  Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 work limit."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact rational density bounds for one parameter set
    Bounds(BoundsArgs),
    /// Exhaustive-enumeration density, checked against the bounds
    Exact(ExactArgs),
    /// Seeded Monte Carlo density estimate with an exact confidence interval
    Estimate(EstimateArgs),
    /// Bounds across a list of alphabet sizes, as CSV or JSON lines
    Sweep(SweepArgs),
    /// Built-in formula verifications against brute force
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// Distance metric: hamming or injection
    #[arg(long)]
    metric: String,
    /// Alphabet size (any integer >= 2 for hamming, a prime power for injection)
    #[arg(short = 'q', long = "q")]
    q: u64,
    /// Ambient length (vectors of F_q^n / subspaces of F_q^n)
    #[arg(short = 'n', long = "n")]
    n: u32,
    /// Subspace dimension (injection metric only)
    #[arg(short = 'k', long = "k")]
    k: Option<u32>,
    /// Target minimum distance
    #[arg(short = 'd', long = "d")]
    d: u32,
    /// Code cardinality S
    #[arg(short = 'S', long = "size")]
    size: String,
}

#[derive(Args)]
struct ConfigArgs {
    /// Unified work budget: caps enumerated objects and pair evaluations
    #[arg(long)]
    work_limit: Option<u64>,
    /// Config file path (overrides $CODE_DENSITY_CONFIG)
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    config: ConfigArgs,
    /// Write every qualifying code to this file (canonical text format)
    #[arg(long)]
    dump: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    config: ConfigArgs,
    /// Number of Monte Carlo trials
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Base seed; trial i uses a stream derived from (seed, i)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores); the output is worker-count independent
    #[arg(long)]
    workers: Option<usize>,
    /// Confidence level for the interval, e.g. 99/100 (overrides config)
    #[arg(long)]
    confidence: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// Distance metric: hamming or injection
    #[arg(long)]
    metric: String,
    /// Ambient length
    #[arg(short = 'n', long = "n")]
    n: u32,
    /// Subspace dimension (injection metric only)
    #[arg(short = 'k', long = "k")]
    k: Option<u32>,
    /// Target minimum distance
    #[arg(short = 'd', long = "d")]
    d: u32,
    /// Comma-separated alphabet sizes, e.g. 2,3,4,5,7,8,9
    #[arg(long = "q-list")]
    q_list: String,
    /// Constant cardinality rule: the same S for every q
    #[arg(long = "s-const", group = "rule")]
    s_const: Option<String>,
    /// Threshold-power rule: S_q = ceil(gamma_q^t) for rational t, e.g. 1/2
    #[arg(long = "s-gamma-exp", group = "rule")]
    s_gamma_exp: Option<String>,
    /// Explicit comma-separated cardinalities, matched to --q-list by position
    #[arg(long = "s-list", group = "rule")]
    s_list: Option<String>,
    /// Output format
    #[arg(long, default_value = "csv", value_parser = ["csv", "jsonl"])]
    format: String,
    /// Output path (stdout when omitted); nothing is written on failure
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: claim-a, w-formula, ball-sizes, injection-claims, or all
    suite: String,
    #[command(flatten)]
    config: ConfigArgs,
}

fn effective_config(args: &ConfigArgs) -> Result<Config, Error> {
    let path = args
        .config
        .clone()
        .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let mut config = match path {
        Some(p) => Config::load(&p)?,
        None => Config::default(),
    };
    if let Some(w) = args.work_limit {
        config.limit = WorkLimit::unified(w);
    }
    Ok(config)
}

fn parse_count(text: &str, what: &'static str) -> Result<BigUint, Error> {
    text.trim()
        .parse::<BigUint>()
        .map_err(|_| Error::invalid(what, format!("not a non-negative integer: {text:?}")))
}

fn parse_count_list(text: &str, what: &'static str) -> Result<Vec<BigUint>, Error> {
    text.split(',')
        .map(|t| parse_count(t, what))
        .collect()
}

fn parse_params(args: &ParamArgs) -> Result<ParamSet, Error> {
    let metric: Metric = args.metric.parse()?;
    let size = parse_count(&args.size, "S")?;
    ParamSet::new(metric, args.q, args.n, args.k, args.d, size)
}

fn parse_gamma_exponent(text: &str) -> Result<(u32, u32), Error> {
    let r = parse_rational(text)?;
    let (num, den) = (r.numer(), r.denom());
    let to_u32 = |v: &num::BigInt, what: &'static str| -> Result<u32, Error> {
        u32::try_from(v.clone())
            .map_err(|_| Error::invalid(what, "exponent must be a small non-negative rational"))
    };
    Ok((to_u32(num, "s-gamma-exp")?, to_u32(den, "s-gamma-exp")?))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Bounds(args) => {
            effective_config(&args.config)?;
            let params = parse_params(&args.params)?;
            println!("{}", run_bounds(&params)?.to_json());
            Ok(0)
        }
        Command::Exact(args) => {
            let config = effective_config(&args.config)?;
            let params = parse_params(&args.params)?;
            let record = match run_exact(&params, &config.limit, args.dump.as_deref()) {
                Err(e @ Error::WorkLimitExceeded { .. }) => {
                    eprintln!("hint: this instance is beyond exhaustive enumeration; try `estimate`");
                    return Err(e);
                }
                other => other?,
            };
            println!("{}", record.to_json());
            Ok(0)
        }
        Command::Estimate(args) => {
            let config = effective_config(&args.config)?;
            let params = parse_params(&args.params)?;
            let confidence = match &args.confidence {
                Some(text) => parse_rational(text)?,
                None => config.confidence.clone(),
            };
            let workers = args.workers.or(config.workers).unwrap_or(0);
            let record =
                run_estimate(&params, args.trials, args.seed, workers, &confidence)?;
            println!("{}", record.to_json());
            Ok(0)
        }
        Command::Sweep(args) => {
            let config = effective_config(&args.config)?;
            let metric: Metric = args.metric.parse()?;
            let q_list: Vec<u64> = args
                .q_list
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::invalid("q-list", format!("bad entry {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            let size_rule = match (&args.s_const, &args.s_gamma_exp, &args.s_list) {
                (Some(c), None, None) => SizeRule::Constant(parse_count(c, "s-const")?),
                (None, Some(t), None) => {
                    let (num, den) = parse_gamma_exponent(t)?;
                    SizeRule::GammaPower { num, den }
                }
                (None, None, Some(l)) => SizeRule::Explicit(parse_count_list(l, "s-list")?),
                _ => {
                    return Err(Error::invalid(
                        "S-rule",
                        "exactly one of --s-const, --s-gamma-exp, --s-list is required",
                    ))
                }
            };
            let _ = &config;
            let spec = SweepSpec {
                metric,
                n: args.n,
                d: args.d,
                k: args.k,
                q_list,
                size_rule,
            };
            let (records, summary) = run_sweep(&spec)?;
            let table = if args.format == "csv" {
                render_csv(&records)
            } else {
                render_jsonl(&records)
            };
            match &args.out {
                Some(path) => {
                    std::fs::write(path, table).map_err(|e| Error::Io(e.to_string()))?
                }
                None => print!("{table}"),
            }
            for line in summary.lines() {
                eprintln!("{line}");
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let config = effective_config(&args.config)?;
            let suite: VerifySuite = args.suite.parse()?;
            let reports = code_density::report::run_verify(suite, &config.limit)?;
            for report in &reports {
                if report.matches {
                    println!(
                        "ok    {}: {}",
                        report.quantity, report.formula_value
                    );
                } else {
                    println!(
                        "FAIL  {}: formula {} but brute force {}",
                        report.quantity, report.formula_value, report.brute_force_value
                    );
                    return Ok(1);
                }
            }
            println!("all {} checks passed", reports.len());
            Ok(0)
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::WorkLimitExceeded { .. } => 3,
        Error::Io(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
