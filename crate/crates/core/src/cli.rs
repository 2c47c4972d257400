//! Command-line front end: argument parsing, run configuration and JSON/CSV
//! reports.
//!
//! Exit codes: 0 pass, 1 bound violation, 2 domain error, 3 unsupported
//! combination, 4 I/O failure, 64 usage error.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    catalog, check_bound, find_record, witness_sequence, Approach, InequalityRecord, Scope, Side,
    VerificationReport,
};
use crate::error::Error;
use crate::geometry::{boundary_inf_sum, Domain};
use crate::metrics::MetricKind;
use crate::qc::{elementary_checks, empirical_distortion, ElementaryGrid, ElementaryReport, EmpiricalReport, MapFamily};

/// Environment variable that fixes the worker thread count.
pub const THREADS_ENV: &str = "SECTOR_METRICS_THREADS";

pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_QC_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 42;

/// Sharpness tolerances for attained and limit witnesses.
pub const ATTAINED_TOL: f64 = 1e-12;
pub const LIMIT_TOL: f64 = 1e-3;

pub fn default_theta_grid() -> Vec<f64> {
    [1.0 / 6.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0, 9.0 / 8.0, 1.25, 1.5, 1.75, 15.0 / 8.0]
        .iter()
        .map(|f| f * PI)
        .collect()
}

/// Angle pairs `(α, β)` transported by `qc-check`, each also run reversed.
pub const QC_ANGLE_PAIRS: [(f64, f64); 4] =
    [(PI / 3.0, PI / 2.0), (PI / 2.0, PI), (PI / 2.0, 1.5 * PI), (PI, 1.75 * PI)];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Violation = 1,
    Domain = 2,
    Unsupported = 3,
    Io = 4,
    Usage = 64,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Usage(_) => Status::Usage,
            CliError::Io(_) => Status::Io,
            CliError::Core(e) => match e {
                Error::PointNotInDomain { .. } | Error::InvalidDomain(_) | Error::InvalidTheta { .. } => {
                    Status::Domain
                }
                Error::UnknownRecord(_) | Error::OutOfRange { .. } | Error::InvalidK(_) => Status::Usage,
                _ => Status::Unsupported,
            },
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

#[derive(Debug, Parser)]
#[command(name = "sector-metrics", version, about = "Hyperbolic-type metrics on sectors and their sharp inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate s, j*, p and th(rho/2) for a pair of points.
    Dist(DistArgs),
    /// Certify every catalog bound by seeded sampling.
    Verify(RunArgs),
    /// Evaluate the witness families of each record.
    Sharpness(RunArgs),
    /// Elementary Hölder-type inequalities and transported sector pairs.
    QcCheck(QcArgs),
    /// CSV of constants and observed extremes per record and angle.
    Table(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainSpec {
    Halfplane,
    Disk,
    Sector,
    Strip,
    Punctured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    S,
    Jstar,
    P,
    Th,
}

impl From<Metric> for MetricKind {
    fn from(m: Metric) -> Self {
        match m {
            Metric::S => MetricKind::TriangularRatio,
            Metric::Jstar => MetricKind::JStar,
            Metric::P => MetricKind::PointPair,
            Metric::Th => MetricKind::TanhHalfRho,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long, value_enum)]
    pub domain: DomainSpec,
    /// Sector opening angle in radians.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Strip height; defaults to π.
    #[arg(long)]
    pub height: Option<f64>,
    /// First point as "re,im".
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub x: Complex64,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub y: Complex64,
    /// Print only this metric; an unsupported domain is then an error.
    #[arg(long, value_enum)]
    pub metric: Option<Metric>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Restrict to these record ids (repeatable).
    #[arg(long = "record")]
    pub records: Vec<String>,
    /// Comma-separated angles in radians.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub theta_grid: Option<Vec<f64>>,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value = "1e-10")]
    pub tolerance: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct QcArgs {
    #[arg(long, default_value_t = DEFAULT_QC_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

fn parse_point(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected \"re,im\", got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Complex64::new(parse(re)?, parse(im)?))
}

/// Formats `v` with 15 significant digits.
pub fn sig15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (14 - exp).max(0) as usize, v)
    } else {
        format!("{v:.14e}")
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit status.
/// Reports go to stdout (or `--output`), diagnostics to stderr.
pub fn main_with_args<I, T>(args: I) -> Status
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Status::Usage } else { Status::Pass };
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return e.status();
        }
    };
    let stdout = io::stdout();
    match pool.install(|| run(&cli.command, &mut stdout.lock())) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.status()
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV}={v:?} is not a positive integer")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(command: &Command, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match command {
        Command::Dist(a) => cmd_dist(a, stdout),
        Command::Verify(a) => {
            let reports = cmd_verify(a)?;
            write_reports(&a.output, stdout, &reports)?;
            Ok(if reports.iter().all(VerificationReport::passed) { Status::Pass } else { Status::Violation })
        }
        Command::Sharpness(a) => {
            let rows = cmd_sharpness(a)?;
            write_reports(&a.output, stdout, &rows)?;
            Ok(if rows.iter().all(|r| r.passed) { Status::Pass } else { Status::Violation })
        }
        Command::QcCheck(a) => {
            let report = cmd_qc(a)?;
            if a.output.format == Format::Csv {
                return Err(CliError::Usage("qc-check reports only as json".into()));
            }
            with_sink(&a.output, stdout, |w| write_json(w, &report))?;
            Ok(if report.passed { Status::Pass } else { Status::Violation })
        }
        Command::Table(a) => {
            // Always CSV; --format is ignored.
            let rows = cmd_table(a)?;
            with_sink(&a.output, stdout, |w| write_csv(w, &rows))?;
            Ok(Status::Pass)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistReport {
    pub domain: Domain,
    pub values: Vec<(String, f64)>,
    pub case: String,
}

pub fn dist_report(a: &DistArgs) -> Result<DistReport, CliError> {
    let domain = match a.domain {
        DomainSpec::Halfplane => Domain::HalfPlane,
        DomainSpec::Disk => Domain::UnitDisk,
        DomainSpec::Sector => {
            Domain::sector(a.theta.ok_or_else(|| CliError::Usage("--theta is required for a sector".into()))?)?
        }
        DomainSpec::Strip => Domain::strip(a.height.unwrap_or(PI))?,
        DomainSpec::Punctured => Domain::PuncturedPlane,
    };
    domain.require(a.x)?;
    domain.require(a.y)?;
    let inf = boundary_inf_sum(&domain, a.x, a.y)?;
    let kinds: Vec<MetricKind> = match a.metric {
        Some(m) => vec![m.into()],
        None => MetricKind::ALL.to_vec(),
    };
    let mut values = Vec::new();
    for kind in kinds {
        match kind.evaluate(&domain, a.x, a.y) {
            Ok(v) => values.push((kind.symbol().to_string(), v)),
            Err(Error::UnsupportedDomain { .. }) if a.metric.is_none() => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(DistReport { domain, values, case: inf.case.to_string() })
}

fn cmd_dist(a: &DistArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let report = dist_report(a)?;
    if a.json {
        write_json(out, &report)?;
    } else {
        writeln!(out, "domain    {}", report.domain)?;
        for (name, v) in &report.values {
            writeln!(out, "{name:<9} {}", sig15(*v))?;
        }
        writeln!(out, "case      {}", report.case)?;
    }
    Ok(Status::Pass)
}

/// `(record, θ)` pairs for a run, in catalog order then grid order. Strip
/// records run once at `θ = 0`; angles outside a record's range are skipped.
pub fn jobs(a: &RunArgs) -> Result<Vec<(&'static InequalityRecord, f64)>, CliError> {
    let grid = a.theta_grid.clone().unwrap_or_else(default_theta_grid);
    if grid.is_empty() {
        return Err(CliError::Usage("theta grid is empty".into()));
    }
    if let Some(bad) = grid.iter().find(|t| !t.is_finite()) {
        return Err(CliError::Usage(format!("theta {bad} is not finite")));
    }
    let mut sorted = grid;
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();
    let selected: Vec<&'static InequalityRecord> = if a.records.is_empty() {
        catalog().iter().collect()
    } else {
        let mut picked = a.records.iter().map(|id| find_record(id)).collect::<Result<Vec<_>, _>>()?;
        let pos = |r: &InequalityRecord| catalog().iter().position(|c| c.id == r.id);
        picked.sort_by_key(|r| pos(r));
        picked.dedup_by_key(|r| r.id);
        picked
    };
    let mut jobs = Vec::new();
    for r in selected {
        if r.scope == Scope::Strip {
            jobs.push((r, 0.0));
        } else {
            jobs.extend(sorted.iter().filter(|&&t| r.theta_range.contains(t)).map(|&t| (r, t)));
        }
    }
    if jobs.is_empty() {
        return Err(CliError::Usage("no theta in the grid lies in the selected records' ranges".into()));
    }
    Ok(jobs)
}

pub fn cmd_verify(a: &RunArgs) -> Result<Vec<VerificationReport>, CliError> {
    let jobs = jobs(a)?;
    let reports = jobs
        .par_iter()
        .map(|&(r, theta)| check_bound(r, theta, a.samples, a.seed, a.tolerance))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(reports)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessRow {
    pub record: String,
    pub theta: f64,
    pub side: Side,
    pub constant: f64,
    pub approach: Approach,
    pub best: f64,
    pub gap: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub steps: usize,
}

pub fn cmd_sharpness(a: &RunArgs) -> Result<Vec<SharpnessRow>, CliError> {
    let mut rows = Vec::new();
    for (r, theta) in jobs(a)? {
        for side in [Side::Lower, Side::Upper] {
            let Some(w) = r.witness(theta, side) else { continue };
            let seq = witness_sequence(r, theta, side)?;
            let qs = seq.iter().map(|&(_, q)| q);
            let (constant, best) = match side {
                Side::Lower => (r.lower_const(theta), qs.fold(f64::INFINITY, f64::min)),
                Side::Upper => (r.upper_const(theta), qs.fold(f64::NEG_INFINITY, f64::max)),
            };
            let tolerance = if w.approach == Approach::Attained { ATTAINED_TOL } else { LIMIT_TOL };
            let gap = (best - constant).abs();
            rows.push(SharpnessRow {
                record: r.id.to_string(),
                theta,
                side,
                constant,
                approach: w.approach,
                best,
                gap,
                tolerance,
                passed: gap <= tolerance,
                steps: seq.len(),
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QcReport {
    pub elementary: ElementaryReport,
    pub empirical: Vec<EmpiricalReport>,
    pub passed: bool,
}

pub fn cmd_qc(a: &QcArgs) -> Result<QcReport, CliError> {
    let elementary = elementary_checks(&ElementaryGrid::standard())?;
    let mut families = Vec::new();
    for (alpha, beta) in QC_ANGLE_PAIRS {
        for (a, b) in [(alpha, beta), (beta, alpha)] {
            if a <= PI && b <= PI {
                families.push(MapFamily::PowerMap { alpha: a, beta: b });
            }
            families.push(MapFamily::AngleStretch { alpha: a, beta: b });
        }
    }
    let empirical = families
        .into_iter()
        .map(|f| empirical_distortion(f, a.samples, a.seed))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = elementary.passed() && empirical.iter().all(|r| r.violations == 0);
    Ok(QcReport { elementary, empirical, passed })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub record_id: String,
    pub theta: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub sup_observed: f64,
    pub inf_observed: f64,
}

pub fn cmd_table(a: &RunArgs) -> Result<Vec<TableRow>, CliError> {
    Ok(cmd_verify(a)?
        .into_iter()
        .map(|r| TableRow {
            record_id: r.record,
            theta: r.theta,
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound,
            sup_observed: r.sup_observed,
            inf_observed: r.inf_observed,
        })
        .collect())
}

fn with_sink<F>(output: &Output, stdout: &mut dyn Write, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match &output.output {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(path)?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn write_reports<T: Serialize>(output: &Output, stdout: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    with_sink(output, stdout, |w| match output.format {
        Format::Json => write_json(w, &rows),
        Format::Csv => write_csv(w, rows),
    })
}

fn write_json<T: Serialize + ?Sized>(w: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn write_csv<T: Serialize>(w: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    let mut wtr = csv::Writer::from_writer(w);
    for row in rows {
        wtr.serialize(row)?;
    }
    wtr.flush()?;
    Ok(())
}
