//! Command-line interface.
//!
//! A config file given by `--config` holds flat `key = value` pairs; they are
//! spliced in as `--key value` directly after the subcommand so that flags on
//! the command line override them.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::amplifier::{self, AmplifierConfig};
use crate::characters::DirichletCharacter;
use crate::eisenstein::{self, CoefficientTable, EisensteinParams, EvalOptions};
use crate::error::{Error, Result};
use crate::lfunctions::{self, LValueRequest};
use crate::special_functions::{self, BesselRequest};
use crate::supnorm::{self, ScanConfig, ScanReport};

/// Environment variable consulted when `--threads` is absent.
pub const THREADS_ENV: &str = "EISENKIT_THREADS";

const SUBCOMMANDS: [&str; 8] = ["eval", "scatter", "fecheck", "amp", "scan", "bessel", "lfunc", "selftest"];

#[derive(Debug, Parser)]
#[command(name = "eisenkit", version, about = "Eisenstein series for pairs of Dirichlet characters")]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Flat TOML file of default flag values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write results here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: OutputFormat,
    /// Worker threads; falls back to EISENKIT_THREADS, then all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, default_value_t = 20240611, global = true)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long, default_value = "1:0")]
    pub chi1: String,
    #[arg(long, default_value = "1:0")]
    pub chi2: String,
    #[arg(long, allow_negative_numbers = true)]
    pub t0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub sigma: f64,
}

impl PairArgs {
    fn params(&self) -> Result<EisensteinParams> {
        EisensteinParams::new(parse_char(&self.chi1)?, parse_char(&self.chi2)?, Complex64::new(self.sigma, self.t0))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate E and F at one point.
    Eval {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[arg(long, default_value_t = 1e-10)]
        eps: f64,
        #[arg(long, default_value_t = eisenstein::DEFAULT_Y_MIN)]
        y_min: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Scattering constant and its local factors.
    Scatter {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Functional-equation residuals at random points with y in [0.5, 3].
    Fecheck {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Amplifier sum and normalized ratio.
    Amp {
        #[arg(long, default_value_t = 1)]
        q: u64,
        /// Length L; several comma-separated values give a report.
        #[arg(long = "L", alias = "length", value_delimiter = ',', required = true)]
        lengths: Vec<f64>,
        /// Sets r1 = r2.
        #[arg(long, allow_negative_numbers = true)]
        r: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        r1: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        r2: Option<f64>,
        #[arg(long, default_value = "1:0")]
        chi1: String,
        #[arg(long, default_value = "1:0")]
        chi2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Sup-norm scans of |F| and the exponent fit.
    Scan {
        /// Trivial characters (overrides --chi1/--chi2).
        #[arg(long)]
        level1: bool,
        #[arg(long, default_value = "1:0")]
        chi1: String,
        #[arg(long, default_value = "1:0")]
        chi2: String,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        t0: Vec<f64>,
        #[arg(long)]
        fit: bool,
        #[arg(long, default_value_t = 64)]
        x_steps: usize,
        #[arg(long, default_value_t = eisenstein::DEFAULT_Y_MIN)]
        y_min: f64,
        #[arg(long)]
        y_max: Option<f64>,
        #[arg(long, default_value_t = 1.05)]
        y_ratio: f64,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
        /// Directory for per-t0 reports.
        #[arg(long, default_value = "eisenkit-scan")]
        report_dir: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// K-Bessel function of complex order.
    Bessel {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        nu_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        nu_im: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Dirichlet L-function or its completion.
    Lfunc {
        #[arg(long, default_value = "1:0")]
        chi: String,
        #[arg(long, allow_negative_numbers = true)]
        s_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s_im: f64,
        #[arg(long)]
        completed: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Quick property suite.
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Eval { common, .. }
            | Command::Scatter { common, .. }
            | Command::Fecheck { common, .. }
            | Command::Amp { common, .. }
            | Command::Scan { common, .. }
            | Command::Bessel { common, .. }
            | Command::Lfunc { common, .. }
            | Command::Selftest { common } => common,
        }
    }
}

fn parse_char(s: &str) -> Result<DirichletCharacter> {
    s.parse()
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::invalid(format!("{}: {e}", path.display()))
}

/// `--key value` pairs from a flat TOML table.
pub fn config_args(text: &str) -> Result<Vec<OsString>> {
    let table: toml::Table = text.parse().map_err(|e| Error::invalid(format!("config: {e}")))?;
    let mut out = Vec::new();
    for (key, value) in table {
        let flag = format!("--{}", key.replace('_', "-"));
        let rendered = match value {
            toml::Value::String(s) => Some(s),
            toml::Value::Integer(i) => Some(i.to_string()),
            toml::Value::Float(f) => Some(f.to_string()),
            toml::Value::Boolean(true) => None,
            toml::Value::Boolean(false) => continue,
            toml::Value::Array(items) => Some(
                items
                    .iter()
                    .map(|v| match v {
                        toml::Value::String(s) => Ok(s.clone()),
                        toml::Value::Integer(i) => Ok(i.to_string()),
                        toml::Value::Float(f) => Ok(f.to_string()),
                        _ => Err(Error::invalid(format!("config key {key}: unsupported array item"))),
                    })
                    .collect::<Result<Vec<_>>>()?
                    .join(","),
            ),
            _ => return Err(Error::invalid(format!("config key {key}: nested tables are not supported"))),
        };
        out.push(flag.into());
        if let Some(v) = rendered {
            out.push(v.into());
        }
    }
    Ok(out)
}

fn find_config(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(rest) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(rest));
        }
    }
    None
}

/// Splice config-file flags in after the subcommand name.
pub fn expand_args(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(path) = find_config(&args) else {
        return Ok(args);
    };
    let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
    let extra = config_args(&text)?;
    let pos = args
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()))
        .ok_or_else(|| Error::invalid("--config needs a subcommand"))?;
    let mut out = args[..=pos].to_vec();
    out.extend(extra);
    out.extend_from_slice(&args[pos + 1..]);
    Ok(out)
}

fn thread_count(common: &Common) -> Result<Option<usize>> {
    if let Some(n) = common.threads {
        if n == 0 {
            return Err(Error::invalid("--threads must be positive"));
        }
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::invalid(format!("{THREADS_ENV}={v:?} is not a positive integer"))),
        },
        Err(_) => Ok(None),
    }
}

/// Run the CLI and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let args = match expand_args(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("eisenkit: {e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("eisenkit: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let common = cli.command.common();
    let threads = thread_count(common)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(&cli.command))
}

fn emit(common: &Common, body: &str, summary: &str) -> Result<()> {
    match &common.output {
        Some(path) => {
            fs::write(path, body).map_err(|e| io_err(path, e))?;
            println!("{summary}");
        }
        None => {
            print!("{body}");
            if !body.ends_with('\n') {
                println!();
            }
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::invalid(format!("serialization failed: {e}")))
}

/// Render a list of flat records as CSV with the given header.
fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct EvalOutput {
    chi1: String,
    chi2: String,
    s: Complex64,
    x: f64,
    y: f64,
    value: Complex64,
    truncated: Complex64,
    constant: Complex64,
    terms: u64,
    error_bound: f64,
}

#[derive(Serialize)]
struct ResidualRow {
    x: f64,
    y: f64,
    residual: f64,
}

#[derive(Serialize)]
struct FeOutput {
    chi1: String,
    chi2: String,
    t0: f64,
    eps: f64,
    max_residual: f64,
    residuals: Vec<ResidualRow>,
}

#[derive(Serialize)]
struct AmpRow {
    q: u64,
    length: f64,
    r1: f64,
    r2: f64,
    value: Complex64,
    ratio: f64,
}

#[derive(Serialize)]
struct ScanSummary {
    t0: Vec<f64>,
    supremum: Vec<f64>,
    argmax: Vec<(f64, f64)>,
    slope: Option<f64>,
    reference_exponent: f64,
    reports: Vec<String>,
}

fn dispatch(cmd: &Command) -> Result<()> {
    match cmd {
        Command::Eval {
            pair,
            x,
            y,
            eps,
            y_min,
            common,
        } => {
            let p = pair.params()?;
            let opts = EvalOptions { eps: *eps, y_min: *y_min };
            let e = eisenstein::evaluate_detailed(&p, *x, *y, &opts)?;
            let out = EvalOutput {
                chi1: p.chi1.label(),
                chi2: p.chi2.label(),
                s: p.s,
                x: *x,
                y: *y,
                value: e.value,
                truncated: e.truncated,
                constant: e.constant,
                terms: e.terms,
                error_bound: e.error_bound,
            };
            let body = match common.format {
                OutputFormat::Json => to_json(&out)?,
                OutputFormat::Csv => csv(
                    &["x", "y", "re", "im", "F_re", "F_im", "terms", "error_bound"],
                    &[vec![
                        x.to_string(),
                        y.to_string(),
                        e.value.re.to_string(),
                        e.value.im.to_string(),
                        e.truncated.re.to_string(),
                        e.truncated.im.to_string(),
                        e.terms.to_string(),
                        e.error_bound.to_string(),
                    ]],
                ),
            };
            emit(common, &body, &format!("E = {} ({} terms)", e.value, e.terms))
        }
        Command::Scatter { pair, common } => {
            let p = pair.params()?;
            let d = eisenstein::scattering_constant(&p)?;
            let body = match common.format {
                OutputFormat::Json => to_json(&d)?,
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = d
                        .local_factors
                        .iter()
                        .map(|(p, v)| vec![p.to_string(), v.re.to_string(), v.im.to_string()])
                        .collect();
                    let mut s = csv(&["prime", "re", "im"], &rows);
                    let _ = writeln!(s, "c,{},{}", d.scattering.re, d.scattering.im);
                    s
                }
            };
            emit(common, &body, &format!("c(s) = {} |c| = {}", d.scattering, d.scattering.norm()))
        }
        Command::Fecheck {
            pair,
            points,
            eps,
            common,
        } => {
            let p = pair.params()?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(common.seed);
            let opts = EvalOptions {
                eps: *eps,
                ..EvalOptions::default()
            };
            let mut residuals = Vec::with_capacity(*points);
            for _ in 0..*points {
                let x = rng.gen_range(-0.5..0.5);
                let y = rng.gen_range(0.5..=3.0);
                let residual = eisenstein::functional_equation_residual_with(&p, x, y, &opts)?;
                residuals.push(ResidualRow { x, y, residual });
            }
            let max_residual = residuals.iter().map(|r| r.residual).fold(0.0, f64::max);
            let out = FeOutput {
                chi1: p.chi1.label(),
                chi2: p.chi2.label(),
                t0: pair.t0,
                eps: *eps,
                max_residual,
                residuals,
            };
            let body = match common.format {
                OutputFormat::Json => to_json(&out.residuals)?,
                OutputFormat::Csv => csv(
                    &["x", "y", "residual"],
                    &out.residuals
                        .iter()
                        .map(|r| vec![r.x.to_string(), r.y.to_string(), r.residual.to_string()])
                        .collect::<Vec<_>>(),
                ),
            };
            emit(common, &body, &format!("max residual {:e} over {} points", out.max_residual, points))
        }
        Command::Amp {
            q,
            lengths,
            r,
            r1,
            r2,
            chi1,
            chi2,
            common,
        } => {
            let r1v = r1.or(*r).unwrap_or(0.0);
            let r2v = r2.or(*r).unwrap_or(0.0);
            let first = *lengths.first().expect("clap requires a length");
            let cfg = AmplifierConfig::with_characters(*q, first, r1v, r2v, parse_char(chi1)?, parse_char(chi2)?)?;
            let rows: Vec<AmpRow> = amplifier::asymptotic_report(&cfg, lengths)?
                .into_iter()
                .map(|row| AmpRow {
                    q: *q,
                    length: row.length,
                    r1: r1v,
                    r2: r2v,
                    value: row.value,
                    ratio: row.ratio,
                })
                .collect();
            let body = match common.format {
                OutputFormat::Csv => csv(
                    &["q", "L", "r1", "r2", "A_re", "A_im", "ratio"],
                    &rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.q.to_string(),
                                r.length.to_string(),
                                r.r1.to_string(),
                                r.r2.to_string(),
                                r.value.re.to_string(),
                                r.value.im.to_string(),
                                r.ratio.to_string(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
                OutputFormat::Json => to_json(&rows)?,
            };
            let last = rows.last().expect("at least one length");
            emit(common, &body, &format!("ratio {} at L = {}", last.ratio, last.length))
        }
        Command::Scan {
            level1,
            chi1,
            chi2,
            t0,
            fit,
            x_steps,
            y_min,
            y_max,
            y_ratio,
            eps,
            report_dir,
            common,
        } => {
            let (c1, c2) = if *level1 {
                (DirichletCharacter::trivial(), DirichletCharacter::trivial())
            } else {
                (parse_char(chi1)?, parse_char(chi2)?)
            };
            let cfg = ScanConfig {
                x_steps: *x_steps,
                y_min: *y_min,
                y_max: *y_max,
                y_ratio: *y_ratio,
                eps: *eps,
            };
            cfg.validate()?;
            let params: Vec<EisensteinParams> = t0
                .iter()
                .map(|&t| EisensteinParams::at_t(c1.clone(), c2.clone(), t))
                .collect::<Result<_>>()?;
            fs::create_dir_all(report_dir).map_err(|e| io_err(report_dir, e))?;
            let mut reports: Vec<ScanReport> = Vec::new();
            let mut files = Vec::new();
            for p in &params {
                let r = supnorm::scan(p, &cfg)?;
                let stem = format!("scan_{}_{}_t{}", p.chi1.label(), p.chi2.label(), r.t0).replace(':', "-");
                let json_path = report_dir.join(format!("{stem}.json"));
                let csv_path = report_dir.join(format!("{stem}.csv"));
                fs::write(&json_path, r.to_json()?).map_err(|e| io_err(&json_path, e))?;
                fs::write(&csv_path, r.to_csv()).map_err(|e| io_err(&csv_path, e))?;
                files.push(json_path.display().to_string());
                files.push(csv_path.display().to_string());
                reports.push(r);
            }
            let slope = if *fit { Some(supnorm::exponent_fit(&reports)?) } else { None };
            let summary = ScanSummary {
                t0: t0.clone(),
                supremum: reports.iter().map(|r| r.supremum).collect(),
                argmax: reports.iter().map(|r| r.argmax).collect(),
                slope,
                reference_exponent: supnorm::REFERENCE_EXPONENT,
                reports: files,
            };
            let body = match common.format {
                OutputFormat::Json => to_json(&summary)?,
                OutputFormat::Csv => csv(
                    &["t0", "supremum", "argmax_x", "argmax_y"],
                    &reports
                        .iter()
                        .map(|r| {
                            vec![
                                r.t0.to_string(),
                                r.supremum.to_string(),
                                r.argmax.0.to_string(),
                                r.argmax.1.to_string(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            let line = match slope {
                Some(s) => format!("slope {s:.4} (reference exponent 0.375) from {} scans", reports.len()),
                None => format!("{} scans written to {}", reports.len(), report_dir.display()),
            };
            emit(common, &body, &line)
        }
        Command::Bessel {
            nu_re,
            nu_im,
            x,
            tol,
            common,
        } => {
            let req = BesselRequest {
                order: Complex64::new(*nu_re, *nu_im),
                argument: *x,
                target_error: *tol,
            };
            let v = special_functions::bessel_k(&req)?;
            let body = match common.format {
                OutputFormat::Json => to_json(&serde_json::json!({
                    "nu": req.order, "x": x, "value": v
                }))?,
                OutputFormat::Csv => csv(
                    &["nu_re", "nu_im", "x", "re", "im"],
                    &[vec![
                        nu_re.to_string(),
                        nu_im.to_string(),
                        x.to_string(),
                        v.re.to_string(),
                        v.im.to_string(),
                    ]],
                ),
            };
            emit(common, &body, &format!("K = {v}"))
        }
        Command::Lfunc {
            chi,
            s_re,
            s_im,
            completed,
            common,
        } => {
            let req = LValueRequest {
                s: Complex64::new(*s_re, *s_im),
                character: parse_char(chi)?,
                completed: *completed,
            };
            let v = req.evaluate()?;
            let body = match common.format {
                OutputFormat::Json => to_json(&serde_json::json!({
                    "chi": chi, "s": req.s, "completed": completed, "value": v
                }))?,
                OutputFormat::Csv => csv(
                    &["chi", "s_re", "s_im", "completed", "re", "im"],
                    &[vec![
                        chi.clone(),
                        s_re.to_string(),
                        s_im.to_string(),
                        completed.to_string(),
                        v.re.to_string(),
                        v.im.to_string(),
                    ]],
                ),
            };
            emit(common, &body, &format!("{} = {v}", if *completed { "Lambda" } else { "L" }))
        }
        Command::Selftest { common } => {
            let checks = selftest();
            let failed = checks.iter().filter(|c| !c.passed).count();
            let body = match common.format {
                OutputFormat::Json => to_json(&checks)?,
                OutputFormat::Csv => csv(
                    &["name", "passed", "detail"],
                    &checks
                        .iter()
                        .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.replace(',', ";")])
                        .collect::<Vec<_>>(),
                ),
            };
            emit(common, &body, &format!("{} of {} checks passed", checks.len() - failed, checks.len()))?;
            if failed > 0 {
                return Err(Error::NoConvergence(format!("{failed} self-test checks failed")));
            }
            Ok(())
        }
    }
}

/// Outcome of one self-test check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match f() {
        Ok((passed, detail)) => Check {
            name: name.into(),
            passed,
            detail,
        },
        Err(e) => Check {
            name: name.into(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Fast property suite run by `eisenkit selftest`.
pub fn selftest() -> Vec<Check> {
    vec![
        check("gauss_sum_modulus", || {
            let mut worst = 0.0f64;
            for q in 1..=200 {
                for chi in DirichletCharacter::all(q)?.into_iter().filter(|c| c.is_primitive()) {
                    worst = worst.max((chi.gauss_sum()?.norm_sqr() - q as f64).abs());
                }
            }
            Ok((worst < 1e-10, format!("max ||G|^2 - q| = {worst:e}")))
        }),
        check("bessel_half_order", || {
            let mut worst = 0.0f64;
            for x in [1e-3, 0.5, 2.0, 30.0] {
                let v = special_functions::bessel_k(&BesselRequest::new(Complex64::new(0.5, 0.0), x))?;
                let exact = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
                worst = worst.max((v.re - exact).abs() / exact);
            }
            Ok((worst < 1e-13, format!("max rel error {worst:e}")))
        }),
        check("l_values", || {
            let z2 = lfunctions::dirichlet_l(Complex64::new(2.0, 0.0), &DirichletCharacter::trivial())?;
            let l4 = lfunctions::dirichlet_l(Complex64::new(1.0, 0.0), &DirichletCharacter::new(4, 1)?)?;
            let pi = std::f64::consts::PI;
            let err = (z2.re - pi * pi / 6.0).abs().max((l4.re - pi / 4.0).abs());
            Ok((err < 1e-13, format!("error {err:e}")))
        }),
        check("functional_equation", || {
            let mut worst = 0.0f64;
            for (a, b) in [("1:0", "1:0"), ("1:0", "4:1"), ("3:1", "4:1"), ("5:1", "5:3")] {
                let p = EisensteinParams::at_t(a.parse()?, b.parse()?, 5.0)?;
                for (x, y) in [(0.2, 0.9), (-0.31, 1.7), (0.44, 0.55)] {
                    let opts = EvalOptions {
                        eps: 1e-8,
                        ..EvalOptions::default()
                    };
                    worst = worst.max(eisenstein::functional_equation_residual_with(&p, x, y, &opts)?);
                }
            }
            Ok((worst < 1e-6, format!("max residual {worst:e}")))
        }),
        check("hecke_multiplicativity", || {
            let p = EisensteinParams::at_t("3:1".parse()?, "4:1".parse()?, 7.0)?;
            let t = CoefficientTable::build(&p, 1000)?;
            let mut worst = 0.0f64;
            for m in 1..=31usize {
                for n in 1..=1000 / m {
                    if crate::arith::gcd(m as u64, n as u64) == 1 {
                        let d = t.coefficients[m * n - 1] - t.coefficients[m - 1] * t.coefficients[n - 1];
                        worst = worst.max(d.norm());
                    }
                }
            }
            Ok((worst < 1e-12, format!("max deviation {worst:e}")))
        }),
        check("factorization_at_primes", || {
            let cfg = AmplifierConfig::with_characters(5, 100.0, 0.3, 0.7, "7:2".parse()?, "11:3".parse()?)?;
            let mut worst = 0.0f64;
            for xi in DirichletCharacter::all(5)? {
                let terms = amplifier::factorization_terms(&xi, &cfg);
                for p in crate::arith::primes_up_to(1000).into_iter().filter(|&p| p != 5) {
                    if p == 7 || p == 11 {
                        continue;
                    }
                    worst = worst.max(amplifier::factorization_check_with(p, &xi, &cfg, &terms)?);
                }
            }
            Ok((worst < 1e-10, format!("max deviation {worst:e}")))
        }),
        check("amplifier_sieve_vs_naive", || {
            let cfg = AmplifierConfig::new(3, 1e4, 20.0, 20.0)?;
            let a = amplifier::amplifier_sum(&cfg)?;
            let b = amplifier::amplifier_sum_naive(&cfg)?;
            Ok((a == b, format!("sieve {a}, naive {b}")))
        }),
        check("scan_determinism", || {
            let p = EisensteinParams::at_t(DirichletCharacter::trivial(), DirichletCharacter::trivial(), 10.0)?;
            let cfg = ScanConfig {
                x_steps: 16,
                y_ratio: 1.3,
                ..ScanConfig::default()
            };
            let a = supnorm::scan(&p, &cfg)?;
            let b = supnorm::scan(&p, &cfg)?;
            Ok((a.grid == b.grid, format!("supremum {}", a.supremum)))
        }),
    ]
}
