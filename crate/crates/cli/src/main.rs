//! Command-line front end: derive tensors, solve single points, check the
//! bundled reference catalog, run grid scans, and re-render scan reports.
//!
//! Exit codes: 0 success; 1 usage or input error; 2 when a scan (or a
//! re-rendered scan report) contains Mismatch/Uncovered verdicts, so CI can
//! gate on it.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use lrc_core::algebra::{custom_group, make_group, Family, LieAlgebra3, Params};
use lrc_core::config::{load_constants, load_params, load_scan_config};
use lrc_core::connection::Flavor;
use lrc_core::error::Error;
use lrc_core::report;
use lrc_core::scalar::{parse_rational, Rational};
use lrc_core::scan::{default_grid, scan, ScanOutcome};
use lrc_core::solver::collineation_space;

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Exact left-invariant Ricci collineation engine for 3D Lorentzian Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Derive connection coefficients, curvature, and the symmetrized Ricci
    /// form at one parameter point
    Derive(PointArgs),
    /// Compute the Ricci collineation space at one parameter point
    Solve(PointArgs),
    /// Compare pipeline output against the bundled reference catalog at
    /// seeded random points
    CheckLemmas(CheckArgs),
    /// Sweep a parameter grid, comparing case predictions with computed
    /// spaces
    Scan(ScanArgs),
    /// Re-render a previously written scan JSON file
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct PointArgs {
    /// Family: G1..G7 or Custom
    #[arg(long)]
    family: Option<String>,
    /// Connection: lc, canonical, or kn
    #[arg(long, visible_alias = "connection", default_value = "canonical")]
    flavor: String,
    /// Rational "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Rational "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Rational "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Rational "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// G4 sign parameter: 1 or -1
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<i8>,
    /// TOML parameter record (family, alpha, beta, gamma, delta, eta)
    #[arg(long)]
    params: Option<PathBuf>,
    /// TOML structure constants for --family Custom (c12, c13, c23)
    #[arg(long)]
    constants: Option<PathBuf>,
    /// Output format (csv is scan/report only)
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also print decimal approximations of exact values
    #[arg(long)]
    float: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Random points per (family, flavor, check)
    #[arg(long, default_value_t = 20)]
    points: usize,
    /// RNG seed
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// TOML grid description; defaults to the built-in full grid
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// A scan JSON file written by `lrc scan`
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn fail(msg: impl Into<String>) -> Failure {
    Failure(msg.into())
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(format!("cannot read {}: {e}", path.display())))
}

fn emit(output: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| fail(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_flavor(s: &str) -> Result<Flavor, Failure> {
    s.parse::<Flavor>().map_err(Failure::from)
}

/// Resolve one (family, algebra) from flags and/or files.
fn build_point(args: &PointArgs) -> Result<(Family, LieAlgebra3<Rational>), Failure> {
    let flag_params = [&args.alpha, &args.beta, &args.gamma, &args.delta];
    if args.params.is_some() && (flag_params.iter().any(|f| f.is_some()) || args.eta.is_some()) {
        return Err(fail("use either --params or parameter flags, not both"));
    }
    if let Some(path) = &args.params {
        let file = load_params(&read_file(path)?)?;
        if let Some(f) = &args.family {
            let f: Family = f.parse()?;
            if f != file.family {
                return Err(fail(format!(
                    "--family {f} conflicts with the params file ({})",
                    file.family
                )));
            }
        }
        let a = make_group(file.family, file.params)?;
        return Ok((file.family, a));
    }
    let family: Family = args
        .family
        .as_deref()
        .ok_or_else(|| fail("--family is required (or provide --params FILE)"))?
        .parse()?;
    if family == Family::Custom {
        let path = args
            .constants
            .as_ref()
            .ok_or_else(|| fail("--family Custom requires --constants FILE"))?;
        let (c12, c13, c23) = load_constants(&read_file(path)?)?;
        let a = custom_group(c12, c13, c23)?;
        return Ok((family, a));
    }
    if args.constants.is_some() {
        return Err(fail("--constants applies only to --family Custom"));
    }
    let get = |v: &Option<String>| -> Result<Rational, Failure> {
        match v {
            Some(s) => parse_rational(s).map_err(|e| fail(e)),
            None => Ok(Rational::from_integer(0.into())),
        }
    };
    let eta = match args.eta {
        None => None,
        Some(1) => Some(1),
        Some(-1) => Some(-1),
        Some(other) => return Err(fail(format!("--eta must be 1 or -1, got {other}"))),
    };
    let params = Params {
        alpha: get(&args.alpha)?,
        beta: get(&args.beta)?,
        gamma: get(&args.gamma)?,
        delta: get(&args.delta)?,
        eta,
    };
    let a = make_group(family, params)?;
    Ok((family, a))
}

fn run_derive(args: &PointArgs) -> Run {
    let flavor = parse_flavor(&args.flavor)?;
    let (_, algebra) = build_point(args)?;
    let content = match args.format {
        Format::Text => report::derive_to_text(&algebra, flavor, args.float),
        Format::Json => report::render_json(&report::derive_to_json(&algebra, flavor, args.float)),
        Format::Csv => return Err(fail("derive has no CSV rendering (use text or json)")),
    };
    emit(args.output.as_ref(), &content)?;
    Ok(0)
}

fn run_solve(args: &PointArgs) -> Run {
    let flavor = parse_flavor(&args.flavor)?;
    let (family, algebra) = build_point(args)?;
    let space = collineation_space(&algebra, flavor);
    let content = match args.format {
        Format::Text => report::solve_to_text(family, flavor, &algebra.params, &space, args.float),
        Format::Json => report::render_json(&report::solve_to_json(
            family,
            flavor,
            &algebra.params,
            &space,
            args.float,
        )),
        Format::Csv => return Err(fail("solve has no CSV rendering (use text or json)")),
    };
    emit(args.output.as_ref(), &content)?;
    Ok(0)
}

fn run_check_lemmas(args: &CheckArgs) -> Run {
    if args.points == 0 {
        return Err(fail("--points must be at least 1"));
    }
    let checks = lrc_core::reference::check_lemmas(args.seed, args.points);
    let content = match args.format {
        Format::Text => report::lemma_checks_to_text(&checks),
        Format::Json => report::render_json(&report::lemma_checks_to_json(
            &checks,
            args.seed,
            args.points,
        )),
        Format::Csv => return Err(fail("check-lemmas has no CSV rendering (use text or json)")),
    };
    emit(args.output.as_ref(), &content)?;
    if checks.iter().all(|c| c.fully_certified()) {
        Ok(0)
    } else {
        Ok(2)
    }
}

fn scan_exit(outcome: &ScanOutcome) -> u8 {
    if outcome.summary.mismatches + outcome.summary.uncovered > 0 {
        2
    } else {
        0
    }
}

fn run_scan(args: &ScanArgs) -> Run {
    let cfg = match &args.config {
        Some(path) => load_scan_config(&read_file(path)?)?,
        None => default_grid(),
    };
    let outcome = scan(&cfg)?;
    let content = match args.format {
        Format::Json => report::render_json(&report::scan_to_json(&outcome)),
        Format::Csv => report::scan_to_csv(&outcome),
        Format::Text => report::scan_to_text(&outcome),
    };
    emit(args.output.as_ref(), &content)?;
    if args.output.is_some() {
        let s = outcome.summary;
        println!(
            "scan: total {}: match {}, mismatch {}, uncovered {}",
            s.total, s.matches, s.mismatches, s.uncovered
        );
    }
    Ok(scan_exit(&outcome))
}

fn run_report(args: &ReportArgs) -> Run {
    let v = report::parse_scan_json(&read_file(&args.input)?)?;
    let summary = report::json_verdict_counts(&v)?;
    let content = match args.format {
        Format::Text => report::json_to_text(&v)?,
        Format::Csv => report::json_to_csv(&v)?,
        Format::Json => report::render_json(&v),
    };
    emit(args.output.as_ref(), &content)?;
    if summary.mismatches + summary.uncovered > 0 {
        Ok(2)
    } else {
        Ok(0)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.verb {
        Verb::Derive(args) => run_derive(args),
        Verb::Solve(args) => run_solve(args),
        Verb::CheckLemmas(args) => run_check_lemmas(args),
        Verb::Scan(args) => run_scan(args),
        Verb::Report(args) => run_report(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
