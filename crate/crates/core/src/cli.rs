//! Command-line front end.
//!
//! `parse_args` turns an argument vector into a validated [`RunRequest`];
//! [`run`] executes it and returns the exit code together with the text for
//! standard output. Exit codes: 0 success, 1 usage error, 2 computational
//! failure (reported as a JSON error object).

use std::fmt;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::radii::{solve_radius, CeilingKind, JanowskiPair, RadiusKind, RadiusOptions, RadiusResult};
use crate::series::{HyperBesselParams, SeriesConfig};
use crate::verify::{boundary_sup_below, BoundaryReport};
use crate::zeros::{first_zeros_f_prime, first_zeros_j, ZeroKind, ZeroTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_SAMPLES: usize = 720;
pub const DEFAULT_RHO_FRAC: f64 = 0.999;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Radius,
    Zeros,
    Verify,
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisName {
    /// One of the `α_i`; the index is 1-based.
    Alpha,
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanAxis {
    pub name: AxisName,
    pub index: Option<usize>,
    pub from: f64,
    pub to: f64,
    pub step: f64,
}

impl ScanAxis {
    /// Axis values `from, from + step, …` not exceeding `to`.
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.to - self.from) / self.step * (1.0 + 1e-12)).floor() as usize + 1;
        (0..n).map(|i| self.from + i as f64 * self.step).collect()
    }

    fn label(&self) -> String {
        match (self.name, self.index) {
            (AxisName::Alpha, Some(i)) => format!("alpha_{i}"),
            (AxisName::Alpha, None) => "alpha".into(),
            (AxisName::A, _) => "A".into(),
            (AxisName::B, _) => "B".into(),
        }
    }
}

/// A validated command invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRequest {
    pub command: Command,
    pub params: HyperBesselParams,
    pub kind: Option<RadiusKind>,
    /// Which zeros the `zeros` command tabulates.
    pub zero_kind: ZeroKind,
    pub jan: Option<JanowskiPair>,
    pub tol: f64,
    pub format: OutputFormat,
    pub scan_axis: Option<ScanAxis>,
    pub rho_frac: Option<f64>,
    pub samples: Option<usize>,
    pub count: Option<usize>,
}

/// Invalid command line. `display_only` marks `--help`/`--version` output.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError {
    pub message: String,
    pub display_only: bool,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            display_only: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.display_only {
            EXIT_OK
        } else {
            EXIT_USAGE
        }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser)]
#[command(
    name = "hyperbessel",
    version,
    about = "Starlikeness and convexity radii of normalized hyper-Bessel functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Solve one radius equation.
    Radius(Flags),
    /// Tabulate positive zeros of 𝒥 or f′.
    Zeros(Flags),
    /// Solve a radius and sample its defining inequality on a circle inside it.
    Verify(Flags),
    /// Solve a radius along a parameter axis.
    Scan(Flags),
}

#[derive(Args)]
struct Flags {
    /// Number of α parameters.
    #[arg(long = "d")]
    d: usize,
    /// Comma-separated α_1,…,α_d, each > −1.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// lemniscate-starlike | lemniscate-convex | janowski-starlike | janowski-convex
    /// (zeros: function-zeros | derivative-zeros).
    #[arg(long)]
    kind: Option<String>,
    #[arg(long = "A", allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long = "B", allow_negative_numbers = true)]
    b: Option<f64>,
    /// Root tolerance (scaled by 1 + radius).
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Number of zeros to tabulate.
    #[arg(long)]
    count: Option<usize>,
    /// Circle radius as a fraction of the computed radius.
    #[arg(long = "rho-frac")]
    rho_frac: Option<f64>,
    /// Angles sampled on the circle.
    #[arg(long)]
    samples: Option<usize>,
    /// Scan axis: alpha_i[:index] | A | B.
    #[arg(long)]
    axis: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    from: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    to: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    step: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

/// Parses and validates the arguments following the program name.
pub fn parse_args<S: AsRef<str>>(argv: &[S]) -> Result<RunRequest, UsageError> {
    let args = std::iter::once("hyperbessel").chain(argv.iter().map(AsRef::as_ref));
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        let display_only = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
        UsageError {
            message: e.render().to_string(),
            display_only,
        }
    })?;
    let (command, flags) = match cli.command {
        Sub::Radius(f) => (Command::Radius, f),
        Sub::Zeros(f) => (Command::Zeros, f),
        Sub::Verify(f) => (Command::Verify, f),
        Sub::Scan(f) => (Command::Scan, f),
    };
    validate(command, flags)
}

fn parse_alphas(d: usize, list: &str) -> Result<HyperBesselParams, UsageError> {
    let alphas = list
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| UsageError::new(format!("--alpha: malformed alpha list '{list}'")))?;
    if alphas.iter().any(|a| *a <= -1.0) {
        return Err(UsageError::new("--alpha: alpha must exceed -1"));
    }
    HyperBesselParams::with_dimension(d, alphas)
        .map_err(|e| UsageError::new(format!("--alpha/--d: {e}")))
}

fn janowski(a: f64, b: f64) -> Result<JanowskiPair, UsageError> {
    JanowskiPair::new(a, b).map_err(|e| {
        let msg = e.to_string();
        let msg = msg.strip_prefix("domain error: ").unwrap_or(&msg).to_string();
        UsageError::new(format!("--A/--B: {msg}"))
    })
}

fn required<T>(value: Option<T>, flag: &str, command: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| UsageError::new(format!("{flag} is required for '{command}'")))
}

fn radius_kind(kind: Option<&str>, command: &str) -> Result<RadiusKind, UsageError> {
    required(kind, "--kind", command)?
        .parse()
        .map_err(|_| UsageError::new(format!("--kind: unknown radius kind '{}'", kind.unwrap())))
}

fn parse_axis(spec: &str, params: &HyperBesselParams) -> Result<(AxisName, Option<usize>), UsageError> {
    let (name, index) = match spec.split_once(':') {
        Some((n, i)) => (
            n,
            Some(i.parse::<usize>().map_err(|_| {
                UsageError::new(format!("--axis: malformed index in '{spec}'"))
            })?),
        ),
        None => (spec, None),
    };
    match name {
        "alpha_i" | "alpha" => {
            let index = match index {
                Some(i) => i,
                None if params.d() == 1 => 1,
                None => {
                    return Err(UsageError::new(
                        "--axis: alpha axis needs an index (alpha_i:<1..d>) when d > 1",
                    ))
                }
            };
            if index == 0 || index > params.d() {
                return Err(UsageError::new(format!(
                    "--axis: alpha index {index} outside 1..={}",
                    params.d()
                )));
            }
            Ok((AxisName::Alpha, Some(index)))
        }
        "A" | "B" if index.is_some() => {
            Err(UsageError::new(format!("--axis: '{name}' takes no index")))
        }
        "A" => Ok((AxisName::A, None)),
        "B" => Ok((AxisName::B, None)),
        _ => Err(UsageError::new(format!("--axis: unknown axis '{name}'"))),
    }
}

fn validate(command: Command, f: Flags) -> Result<RunRequest, UsageError> {
    let name = match command {
        Command::Radius => "radius",
        Command::Zeros => "zeros",
        Command::Verify => "verify",
        Command::Scan => "scan",
    };
    let params = parse_alphas(f.d, &f.alpha)?;
    if !(f.tol > 0.0 && f.tol < 1.0) {
        return Err(UsageError::new("--tol: tolerance must lie in (0, 1)"));
    }

    let mut request = RunRequest {
        command,
        params,
        kind: None,
        zero_kind: ZeroKind::FunctionZeros,
        jan: None,
        tol: f.tol,
        format: f.format,
        scan_axis: None,
        rho_frac: None,
        samples: None,
        count: None,
    };

    if command == Command::Zeros {
        request.zero_kind = match f.kind.as_deref() {
            None | Some("function-zeros") => ZeroKind::FunctionZeros,
            Some("derivative-zeros") => ZeroKind::DerivativeZeros,
            Some(other) => {
                return Err(UsageError::new(format!(
                    "--kind: zeros takes function-zeros or derivative-zeros, got '{other}'"
                )))
            }
        };
        let count = required(f.count, "--count", name)?;
        if count == 0 {
            return Err(UsageError::new("--count: must be at least 1"));
        }
        request.count = Some(count);
        return Ok(request);
    }

    let kind = radius_kind(f.kind.as_deref(), name)?;
    request.kind = Some(kind);

    let axis = if command == Command::Scan {
        let spec = required(f.axis.as_deref(), "--axis", name)?;
        let (axis_name, index) = parse_axis(spec, &request.params)?;
        let axis = ScanAxis {
            name: axis_name,
            index,
            from: required(f.from, "--from", name)?,
            to: required(f.to, "--to", name)?,
            step: required(f.step, "--step", name)?,
        };
        if !(axis.step > 0.0 && axis.step.is_finite()) {
            return Err(UsageError::new("--step: must be positive"));
        }
        if !(axis.from < axis.to) {
            return Err(UsageError::new("--from/--to: empty scan range, require from < to"));
        }
        Some(axis)
    } else {
        None
    };

    // Janowski constants, with the scanned one taken from the axis
    if kind.is_janowski() {
        match axis.map(|a| a.name) {
            Some(AxisName::A) => {
                let b = required(f.b, "--B", name)?;
                for v in axis.unwrap().points() {
                    janowski(v, b)?;
                }
                request.jan = Some(janowski(axis.unwrap().from, b)?);
            }
            Some(AxisName::B) => {
                let a = required(f.a, "--A", name)?;
                for v in axis.unwrap().points() {
                    janowski(a, v)?;
                }
                request.jan = Some(janowski(a, axis.unwrap().from)?);
            }
            _ => {
                let a = required(f.a, "--A", name)?;
                let b = required(f.b, "--B", name)?;
                request.jan = Some(janowski(a, b)?);
            }
        }
    } else {
        if f.a.is_some() || f.b.is_some() {
            return Err(UsageError::new(format!("--A/--B: not used by kind {kind}")));
        }
        if matches!(axis.map(|a| a.name), Some(AxisName::A | AxisName::B)) {
            return Err(UsageError::new(format!("--axis: kind {kind} has no Janowski constants")));
        }
    }

    if let Some(ax) = axis {
        if ax.name == AxisName::Alpha && ax.points().iter().any(|&v| v <= -1.0) {
            return Err(UsageError::new("--from: alpha must exceed -1 over the scan range"));
        }
    }
    request.scan_axis = axis;

    if command == Command::Verify {
        let rho_frac = f.rho_frac.unwrap_or(DEFAULT_RHO_FRAC);
        if !(rho_frac > 0.0 && rho_frac < 1.0) {
            return Err(UsageError::new("--rho-frac: must lie in (0, 1)"));
        }
        let samples = f.samples.unwrap_or(DEFAULT_SAMPLES);
        if samples == 0 {
            return Err(UsageError::new("--samples: must be at least 1"));
        }
        request.rho_frac = Some(rho_frac);
        request.samples = Some(samples);
    }
    Ok(request)
}

/// Flat JSON record of a solved radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusRecord {
    pub kind: RadiusKind,
    pub d: usize,
    pub alphas: Vec<f64>,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    pub radius: f64,
    pub bracket: [f64; 2],
    pub residual: f64,
    pub iterations: usize,
    pub ceiling: f64,
    pub ceiling_kind: CeilingKind,
}

impl RadiusRecord {
    pub fn new(params: &HyperBesselParams, jan: Option<&JanowskiPair>, r: &RadiusResult) -> Self {
        Self {
            kind: r.kind,
            d: params.d(),
            alphas: params.alphas().to_vec(),
            a: jan.map(JanowskiPair::a),
            b: jan.map(JanowskiPair::b),
            radius: r.radius,
            bracket: [r.bracket.0, r.bracket.1],
            residual: r.residual,
            iterations: r.iterations,
            ceiling: r.ceiling,
            ceiling_kind: r.ceiling_kind,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZerosRecord {
    pub kind: ZeroKind,
    pub d: usize,
    pub alphas: Vec<f64>,
    pub zeros: Vec<f64>,
    pub residual_tol: f64,
}

impl From<&ZeroTable> for ZerosRecord {
    fn from(t: &ZeroTable) -> Self {
        Self {
            kind: t.kind,
            d: t.params.d(),
            alphas: t.params.alphas().to_vec(),
            zeros: t.zeros.clone(),
            residual_tol: t.residual_tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub radius: RadiusRecord,
    pub boundary: BoundaryReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub axis_value: f64,
    #[serde(flatten)]
    pub result: RadiusRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub axis: String,
    pub points: Vec<ScanPoint>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    error: ErrorBody<'a>,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn series_config() -> SeriesConfig {
    SeriesConfig::default()
}

fn solve(
    params: &HyperBesselParams,
    kind: RadiusKind,
    jan: Option<&JanowskiPair>,
    tol: f64,
    ceiling: Option<f64>,
) -> Result<RadiusResult, Error> {
    let opts = RadiusOptions {
        series: series_config(),
        tol,
        ceiling,
    };
    solve_radius(params, kind, jan, &opts)
}

const RADIUS_CSV_HEADER: &str =
    "kind,d,alphas,A,B,radius,bracket_lo,bracket_hi,residual,iterations,ceiling,ceiling_kind";

fn radius_csv_row(rec: &RadiusRecord) -> String {
    let alphas: Vec<String> = rec.alphas.iter().map(|&a| fmt_f64(a)).collect();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        rec.kind.as_str(),
        rec.d,
        alphas.join(";"),
        fmt_opt(rec.a),
        fmt_opt(rec.b),
        fmt_f64(rec.radius),
        fmt_f64(rec.bracket[0]),
        fmt_f64(rec.bracket[1]),
        fmt_f64(rec.residual),
        rec.iterations,
        fmt_f64(rec.ceiling),
        rec.ceiling_kind.as_str(),
    )
}

fn execute(req: &RunRequest) -> Result<String, Error> {
    let cfg = series_config();
    match req.command {
        Command::Radius => {
            let kind = req.kind.expect("validated");
            let r = solve(&req.params, kind, req.jan.as_ref(), req.tol, None)?;
            let rec = RadiusRecord::new(&req.params, req.jan.as_ref(), &r);
            Ok(match req.format {
                OutputFormat::Json => to_json(&rec),
                OutputFormat::Csv => format!("{RADIUS_CSV_HEADER}\n{}\n", radius_csv_row(&rec)),
            })
        }
        Command::Zeros => {
            let count = req.count.expect("validated");
            let table = match req.zero_kind {
                ZeroKind::FunctionZeros => first_zeros_j(&req.params, count, &cfg)?,
                ZeroKind::DerivativeZeros => first_zeros_f_prime(&req.params, count, &cfg)?,
            };
            Ok(match req.format {
                OutputFormat::Json => to_json(&ZerosRecord::from(&table)),
                OutputFormat::Csv => {
                    let mut out = String::from("n,zero\n");
                    for (i, z) in table.zeros.iter().enumerate() {
                        writeln!(out, "{},{}", i + 1, fmt_f64(*z)).unwrap();
                    }
                    out
                }
            })
        }
        Command::Verify => {
            let kind = req.kind.expect("validated");
            let r = solve(&req.params, kind, req.jan.as_ref(), req.tol, None)?;
            let rho = req.rho_frac.expect("validated") * r.radius;
            let samples = req.samples.expect("validated");
            let report =
                boundary_sup_below(&req.params, kind, req.jan.as_ref(), rho, samples, r.ceiling, &cfg)?;
            let rec = VerifyRecord {
                radius: RadiusRecord::new(&req.params, req.jan.as_ref(), &r),
                boundary: report,
            };
            Ok(match req.format {
                OutputFormat::Json => to_json(&rec),
                OutputFormat::Csv => {
                    let b = &rec.boundary;
                    format!(
                        "kind,radius,rho,samples,sup_modulus,argmax_angle,satisfied\n{},{},{},{},{},{},{}\n",
                        kind.as_str(),
                        fmt_f64(r.radius),
                        fmt_f64(b.rho),
                        b.samples,
                        if b.sup_modulus.is_finite() { fmt_f64(b.sup_modulus) } else { "inf".into() },
                        fmt_f64(b.argmax_angle),
                        b.satisfied,
                    )
                }
            })
        }
        Command::Scan => {
            let kind = req.kind.expect("validated");
            let axis = req.scan_axis.expect("validated");
            let mut points = Vec::new();
            // the ceiling depends only on the alphas
            let mut ceiling = None;
            for v in axis.points() {
                let (params, jan) = match axis.name {
                    AxisName::Alpha => {
                        let mut alphas = req.params.alphas().to_vec();
                        alphas[axis.index.expect("validated") - 1] = v;
                        (HyperBesselParams::new(alphas)?, req.jan)
                    }
                    AxisName::A => {
                        let b = req.jan.expect("validated").b();
                        (req.params.clone(), Some(JanowskiPair::new(v, b)?))
                    }
                    AxisName::B => {
                        let a = req.jan.expect("validated").a();
                        (req.params.clone(), Some(JanowskiPair::new(a, v)?))
                    }
                };
                let r = solve(&params, kind, jan.as_ref(), req.tol, ceiling)?;
                if axis.name != AxisName::Alpha {
                    ceiling = Some(r.ceiling);
                }
                points.push(ScanPoint {
                    axis_value: v,
                    result: RadiusRecord::new(&params, jan.as_ref(), &r),
                });
            }
            Ok(match req.format {
                OutputFormat::Json => to_json(&ScanRecord {
                    axis: axis.label(),
                    points,
                }),
                OutputFormat::Csv => {
                    let mut out = String::from("axis_value,radius,ceiling,residual\n");
                    for p in &points {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            fmt_f64(p.axis_value),
                            fmt_f64(p.result.radius),
                            fmt_f64(p.result.ceiling),
                            fmt_f64(p.result.residual)
                        )
                        .unwrap();
                    }
                    out
                }
            })
        }
    }
}

/// Executes a validated request.
pub fn run(request: &RunRequest) -> (i32, String) {
    match execute(request) {
        Ok(out) => (EXIT_OK, out),
        Err(e) => (
            EXIT_FAILURE,
            to_json(&ErrorRecord {
                error: ErrorBody {
                    code: e.code(),
                    message: e.to_string(),
                },
            }),
        ),
    }
}

/// Parses, runs and reports: `(exit code, stdout, stderr)`.
pub fn main_with_args<S: AsRef<str>>(argv: &[S]) -> (i32, String, String) {
    match parse_args(argv) {
        Ok(req) => {
            let (code, out) = run(&req);
            (code, out, String::new())
        }
        Err(e) if e.display_only => (e.exit_code(), e.message, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {}\n", e.message.trim_end())),
    }
}
