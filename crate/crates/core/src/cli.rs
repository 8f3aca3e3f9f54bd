//! Command-line frontend. [`run`] parses arguments, runs one subcommand and
//! returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, every checked relation holds |
//! | 1 | a relation failed or carries a caveat |
//! | 2 | invalid input |
//! | 3 | numerical failure |
//!
//! Every number is written with 17 significant digits, and identical
//! arguments give byte-identical output.

use std::ffi::OsString;
use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::levinson::{check_channel, default_tolerance, soliton_expected, LevinsonReport, SOLITON_TOLERANCE};
use crate::observables::cross_sections;
use crate::potentials::{self, AbModel, ModelFamily, SolitonParams};
use crate::radial::{log_grid, phase_sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RELATION: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ab-levinson", version, about = "Aharonov-Bohm partial-wave scattering and Levinson relation checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phase shifts over a log-spaced k grid (CSV `m,k,delta_rad` plus a JSON sidecar)
    #[command(allow_negative_numbers = true)]
    PhaseShift(PhaseShiftArgs),
    /// Both sides of the Levinson relation per channel
    #[command(allow_negative_numbers = true)]
    Levinson(LevinsonArgs),
    /// Partial and truncated total cross sections at one k
    #[command(allow_negative_numbers = true)]
    CrossSection(CrossSectionArgs),
    /// Soliton magnon table: numerical lhs, theorem rhs and closed-form value
    #[command(allow_negative_numbers = true)]
    Soliton(SolitonArgs),
    /// List the built-in model families
    Models(ModelsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    Free,
    Centrifugal,
    ReturnedFlux,
    ConventionalAb,
    PureFlux,
    Soliton,
    FluxWell,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Model selection. Flux may be given in units of `2π` (`--alpha`,
/// `--beta`) or absolutely (`--flux0`).
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: ModelName,
    /// Flux at the origin over 2π
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Flux at infinity over 2π
    #[arg(long)]
    pub beta: Option<f64>,
    /// Length scale
    #[arg(long = "R", default_value_t = 1.0)]
    pub r: f64,
    /// Absolute flux of the returned-flux line or of a pure flux line
    #[arg(long)]
    pub flux0: Option<f64>,
    /// Field inside the conventional AB cylinder
    #[arg(long = "B")]
    pub field: Option<f64>,
    /// Soliton charge
    #[arg(long)]
    pub q: Option<i32>,
    /// Depth of the flux-well disc
    #[arg(long = "V0")]
    pub depth: Option<f64>,
    /// `rho,V,Phi` table for `--model table`
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Channels: a single `--m` or an inclusive `--m-range a:b`.
#[derive(Debug, Clone, Args)]
pub struct ChannelArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "m_range")]
    pub m: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    pub m_range: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct PhaseShiftArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub channels: ChannelArgs,
    /// Defaults to 1e-3/R
    #[arg(long)]
    pub k_min: Option<f64>,
    /// Defaults to 1e2/R
    #[arg(long)]
    pub k_max: Option<f64>,
    #[arg(long, default_value_t = 128)]
    pub k_points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; the JSON sidecar goes next to it with extension `.json`
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LevinsonArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub channels: ChannelArgs,
    /// Residual tolerance in radians; defaults to 1e-3·π, or 2e-2·π for solitons
    #[arg(long)]
    pub tol: Option<f64>,
    /// `json` without `--out` prints the report array instead of the table
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Where to write the JSON report array
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CrossSectionArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub k: f64,
    #[arg(long, default_value_t = 10)]
    pub m_max: i32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SolitonArgs {
    #[arg(long)]
    pub q: i32,
    #[arg(long = "R", default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, allow_hyphen_values = true, default_value = "-4:4")]
    pub m_range: String,
    #[arg(long, default_value_t = SOLITON_TOLERANCE)]
    pub tol: f64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ModelsArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A number written with 17 significant digits; non-finite values become
/// `null` in JSON.
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        RawValue::from_string(fmt_num(self.0)).map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

pub fn fmt_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "NaN".into()
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Output goes to stdout or the files named by `--out`.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(&cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                EXIT_VALIDATION
            } else {
                EXIT_NUMERICAL
            }
        }
    }
}

/// Runs a parsed command, writing console output to `console`.
pub fn execute(command: &Command, console: &mut dyn Write) -> Result<i32> {
    match command {
        Command::PhaseShift(a) => cmd_phase_shift(a, console),
        Command::Levinson(a) => cmd_levinson(a, console),
        Command::CrossSection(a) => cmd_cross_section(a, console),
        Command::Soliton(a) => cmd_soliton(a, console),
        Command::Models(a) => cmd_models(a, console),
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn need<T: Copy>(v: Option<T>, flag: &str, model: &str) -> Result<T> {
    v.ok_or_else(|| invalid(format!("--model {model} needs --{flag}")))
}

pub fn build_model(a: &ModelArgs) -> Result<AbModel> {
    let r = a.r;
    if !(r.is_finite() && r > 0.0) {
        return Err(invalid(format!("--R must be positive, got {r}")));
    }
    let flux_turns = |name: &str| -> Result<f64> {
        match (a.alpha, a.flux0) {
            (Some(_), Some(_)) => Err(invalid("give either --alpha or --flux0, not both")),
            (Some(al), None) => Ok(al),
            (None, Some(f)) => Ok(f / (2.0 * PI)),
            (None, None) => Err(invalid(format!("--model {name} needs --alpha or --flux0"))),
        }
    };
    match a.model {
        ModelName::Free => Ok(potentials::make_free()),
        ModelName::Centrifugal => {
            potentials::make_centrifugal(need(a.alpha, "alpha", "centrifugal")?, need(a.beta, "beta", "centrifugal")?, r)
        }
        ModelName::ReturnedFlux => potentials::make_returned_flux(2.0 * PI * flux_turns("returned-flux")?, r),
        ModelName::ConventionalAb => {
            // β = B R²/2
            let field = match (a.field, a.beta) {
                (Some(_), Some(_)) => return Err(invalid("give either --B or --beta, not both")),
                (Some(b), None) => b,
                (None, Some(beta)) => 2.0 * beta / (r * r),
                (None, None) => return Err(invalid("--model conventional-ab needs --B or --beta")),
            };
            potentials::make_conventional_ab(field, r)
        }
        ModelName::PureFlux => potentials::make_pure_flux(flux_turns("pure-flux")?),
        ModelName::Soliton => {
            let q = need(a.q, "q", "soliton")?;
            if q < 1 {
                return Err(invalid(format!("soliton charge must be at least 1, got {q}")));
            }
            potentials::make_bp_soliton(SolitonParams::new(q, r))
        }
        ModelName::FluxWell => {
            potentials::make_flux_well(need(a.alpha, "alpha", "flux-well")?, need(a.depth, "V0", "flux-well")?, r)
        }
        ModelName::Table => {
            let path = a.file.as_deref().ok_or_else(|| invalid("--model table needs --file"))?;
            potentials::from_table_file(path)
        }
    }
}

/// Parses `a:b` into an inclusive range.
pub fn parse_m_range(s: &str) -> Result<(i32, i32)> {
    let (a, b) = s.split_once(':').ok_or_else(|| invalid(format!("m range must look like a:b, got {s:?}")))?;
    let parse = |t: &str| t.trim().parse::<i32>().map_err(|_| invalid(format!("bad channel number {t:?} in {s:?}")));
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(invalid(format!("empty m range {s:?}")));
    }
    Ok((a, b))
}

fn channel_range(c: &ChannelArgs) -> Result<(i32, i32)> {
    match (&c.m, &c.m_range) {
        (Some(m), None) => Ok((*m, *m)),
        (None, Some(s)) => parse_m_range(s),
        (None, None) => Err(invalid("give --m or --m-range")),
        (Some(_), Some(_)) => Err(invalid("give either --m or --m-range, not both")),
    }
}

fn check_tolerance(tol: f64) -> Result<f64> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(invalid(format!("--tol must be positive, got {tol}")))
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Writes `body` to `path`, or to `console` when no path is given.
fn emit(path: Option<&Path>, console: &mut dyn Write, body: &[u8]) -> Result<()> {
    match path {
        Some(p) => {
            let mut f = create(p)?;
            f.write_all(body)?;
            f.flush()?;
        }
        None => console.write_all(body)?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut v = serde_json::to_vec_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    v.push(b'\n');
    Ok(v)
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(&r).map_err(io_err)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

#[derive(Serialize)]
struct SidecarEntry {
    m: i32,
    delta_at_zero: Num,
    delta_at_infinity: Num,
    zero_law: crate::radial::FitLaw,
    infinity_law: crate::radial::FitLaw,
    /// Wavenumbers inserted to resolve steep stretches; not in the CSV.
    refined_points: usize,
}

#[derive(Serialize)]
struct CurveOut {
    m: i32,
    k: Vec<Num>,
    delta_rad: Vec<Num>,
    delta_at_zero: Num,
    delta_at_infinity: Num,
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    out.with_extension("json")
}

pub fn cmd_phase_shift(a: &PhaseShiftArgs, console: &mut dyn Write) -> Result<i32> {
    let model = build_model(&a.model)?;
    let (m_lo, m_hi) = channel_range(&a.channels)?;
    let r = model.length_scale();
    let k_min = a.k_min.unwrap_or(1e-3 / r);
    let k_max = a.k_max.unwrap_or(1e2 / r);
    if !(k_min > 0.0 && k_max > k_min && k_max.is_finite()) {
        return Err(invalid(format!("need 0 < k-min < k-max, got {k_min}, {k_max}")));
    }
    if a.k_points < 3 {
        return Err(invalid(format!("--k-points must be at least 3, got {}", a.k_points)));
    }
    if a.format == Format::Json && a.out.as_deref().is_some_and(|p| p.extension().is_some_and(|e| e == "json")) {
        return Err(invalid("JSON output file would collide with its sidecar; use a different extension"));
    }
    let grid = log_grid(k_min, k_max, a.k_points);
    let curves = (m_lo..=m_hi)
        .into_par_iter()
        .map(|m| phase_sweep(&model, m, &grid))
        .collect::<Result<Vec<_>>>()?;

    // rows on the requested grid only; refinement points are reported in the sidecar
    let on_grid = |c: &crate::radial::PhaseCurve| -> Vec<(f64, f64)> {
        let mut it = grid.iter().peekable();
        c.k_grid
            .iter()
            .zip(&c.delta)
            .filter(|(k, _)| {
                if it.peek() == Some(k) {
                    it.next();
                    true
                } else {
                    false
                }
            })
            .map(|(&k, &d)| (k, d))
            .collect()
    };
    let body = match a.format {
        Format::Csv => csv_bytes(
            &["m", "k", "delta_rad"],
            curves
                .iter()
                .flat_map(|c| on_grid(c).into_iter().map(move |(k, d)| vec![c.m.to_string(), fmt_num(k), fmt_num(d)])),
        )?,
        Format::Json => to_json(
            &curves
                .iter()
                .map(|c| {
                    let rows = on_grid(c);
                    CurveOut {
                        m: c.m,
                        k: rows.iter().map(|r| Num(r.0)).collect(),
                        delta_rad: rows.iter().map(|r| Num(r.1)).collect(),
                        delta_at_zero: Num(c.delta_at_zero),
                        delta_at_infinity: Num(c.delta_at_infinity),
                    }
                })
                .collect::<Vec<_>>(),
        )?,
    };
    emit(a.out.as_deref(), console, &body)?;
    if let Some(out) = &a.out {
        let sidecar: Vec<SidecarEntry> = curves
            .iter()
            .map(|c| SidecarEntry {
                m: c.m,
                delta_at_zero: Num(c.delta_at_zero),
                delta_at_infinity: Num(c.delta_at_infinity),
                zero_law: c.zero_fit.law,
                infinity_law: c.infinity_fit.law,
                refined_points: c.k_grid.len() - grid.len(),
            })
            .collect();
        emit(Some(&sidecar_path(out)), console, &to_json(&sidecar)?)?;
    }
    Ok(EXIT_OK)
}

/// [`LevinsonReport`] with 17-digit numbers.
#[derive(Serialize)]
struct ReportOut<'a> {
    m: i32,
    lhs: Num,
    n_bound: usize,
    half_bound: bool,
    nu: Num,
    mu: Num,
    rhs: Num,
    residual: Num,
    passed: bool,
    caveat: &'a Option<String>,
}

impl<'a> From<&'a LevinsonReport> for ReportOut<'a> {
    fn from(r: &'a LevinsonReport) -> Self {
        ReportOut {
            m: r.m,
            lhs: Num(r.lhs),
            n_bound: r.n_bound,
            half_bound: r.half_bound,
            nu: Num(r.nu),
            mu: Num(r.mu),
            rhs: Num(r.rhs),
            residual: Num(r.residual),
            passed: r.passed,
            caveat: &r.caveat,
        }
    }
}

pub fn reports_json(reports: &[LevinsonReport]) -> Result<Vec<u8>> {
    to_json(&reports.iter().map(ReportOut::from).collect::<Vec<_>>())
}

fn levinson_table(reports: &[LevinsonReport], tol: f64) -> String {
    let mut s = format!("tolerance {}\n", fmt_num(tol));
    s += &format!(
        "{:>4} {:>24} {:>24} {:>24} {:>3} {:>5} {:>6}  caveat\n",
        "m", "lhs", "rhs", "residual", "N_b", "half", "passed"
    );
    for r in reports {
        s += &format!(
            "{:>4} {:>24} {:>24} {:>24} {:>3} {:>5} {:>6}  {}\n",
            r.m,
            fmt_num(r.lhs),
            fmt_num(r.rhs),
            fmt_num(r.residual),
            r.n_bound,
            r.half_bound,
            r.passed,
            r.caveat.as_deref().unwrap_or("")
        );
    }
    s
}

/// A channel whose computation failed carries a NaN lhs; the other reports
/// are still written before exiting with the numerical code.
fn relation_code(reports: &[LevinsonReport]) -> i32 {
    if reports.iter().any(|r| r.lhs.is_nan()) {
        EXIT_NUMERICAL
    } else if reports.iter().all(|r| r.passed && r.caveat.is_none()) {
        EXIT_OK
    } else {
        EXIT_RELATION
    }
}

pub fn cmd_levinson(a: &LevinsonArgs, console: &mut dyn Write) -> Result<i32> {
    let model = build_model(&a.model)?;
    let (m_lo, m_hi) = channel_range(&a.channels)?;
    let tol = check_tolerance(a.tol.unwrap_or_else(|| default_tolerance(&model)))?;
    if a.format == Some(Format::Csv) {
        return Err(invalid("levinson writes JSON reports; --format csv is not available"));
    }
    let reports = (m_lo..=m_hi)
        .into_par_iter()
        .map(|m| check_channel(&model, m, tol))
        .collect::<Result<Vec<_>>>()?;
    let json = reports_json(&reports)?;
    match (&a.out, a.format) {
        (None, Some(Format::Json)) => console.write_all(&json)?,
        (out, _) => {
            console.write_all(levinson_table(&reports, tol).as_bytes())?;
            if let Some(p) = out {
                emit(Some(p), console, &json)?;
            }
        }
    }
    Ok(relation_code(&reports))
}

#[derive(Serialize)]
struct CrossSectionOut {
    k: Num,
    m_max: i32,
    rows: Vec<CrossRowOut>,
    total: Num,
    converged: bool,
}

#[derive(Serialize)]
struct CrossRowOut {
    m: i32,
    delta_rad: Num,
    sigma_partial: Num,
}

pub fn cmd_cross_section(a: &CrossSectionArgs, console: &mut dyn Write) -> Result<i32> {
    let model = build_model(&a.model)?;
    let cs = cross_sections(&model, a.k, a.m_max)?;
    let body = match a.format {
        Format::Csv => {
            let mut b = csv_bytes(
                &["m", "delta_rad", "sigma_partial"],
                cs.rows
                    .iter()
                    .map(|r| vec![r.m.to_string(), fmt_num(r.delta), fmt_num(r.sigma_partial)]),
            )?;
            b.extend(format!("# total={} converged={}\n", fmt_num(cs.total), cs.converged).bytes());
            b
        }
        Format::Json => to_json(&CrossSectionOut {
            k: Num(cs.k),
            m_max: cs.m_max,
            rows: cs
                .rows
                .iter()
                .map(|r| CrossRowOut { m: r.m, delta_rad: Num(r.delta), sigma_partial: Num(r.sigma_partial) })
                .collect(),
            total: Num(cs.total),
            converged: cs.converged,
        })?,
    };
    emit(a.out.as_deref(), console, &body)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SolitonRow<'a> {
    m: i32,
    lhs: Num,
    rhs: Num,
    expected: Num,
    n_bound: usize,
    half_bound: bool,
    passed: bool,
    caveat: &'a Option<String>,
}

pub fn cmd_soliton(a: &SolitonArgs, console: &mut dyn Write) -> Result<i32> {
    if a.q < 1 {
        return Err(invalid(format!("soliton charge must be at least 1, got {}", a.q)));
    }
    if !(a.r.is_finite() && a.r > 0.0) {
        return Err(invalid(format!("--R must be positive, got {}", a.r)));
    }
    let tol = check_tolerance(a.tol)?;
    if a.format == Some(Format::Csv) {
        return Err(invalid("soliton writes JSON reports; --format csv is not available"));
    }
    let (m_lo, m_hi) = parse_m_range(&a.m_range)?;
    let model = potentials::make_bp_soliton(SolitonParams::new(a.q, a.r))?;
    let reports = (m_lo..=m_hi)
        .into_par_iter()
        .map(|m| check_channel(&model, m, tol))
        .collect::<Result<Vec<_>>>()?;
    let expected = (m_lo..=m_hi).map(|m| soliton_expected(a.q, m)).collect::<Result<Vec<_>>>()?;
    let rows: Vec<SolitonRow> = reports
        .iter()
        .zip(&expected)
        .map(|(r, &e)| SolitonRow {
            m: r.m,
            lhs: Num(r.lhs),
            rhs: Num(r.rhs),
            expected: Num(e),
            n_bound: r.n_bound,
            half_bound: r.half_bound,
            passed: r.passed && (r.lhs - e).abs() <= tol && (r.rhs - e).abs() <= tol,
            caveat: &r.caveat,
        })
        .collect();
    let json = to_json(&rows)?;
    match (&a.out, a.format) {
        (None, Some(Format::Json)) => console.write_all(&json)?,
        (out, _) => {
            let mut s = format!("soliton q={} R={} tolerance {}\n", a.q, fmt_num(a.r), fmt_num(tol));
            s += &format!("{:>4} {:>24} {:>24} {:>24} {:>11} {:>6}\n", "m", "lhs", "rhs", "expected", "zero mode", "passed");
            for (row, r) in rows.iter().zip(&reports) {
                let class = if r.half_bound {
                    "half-bound"
                } else if r.n_bound > 0 {
                    "bound"
                } else {
                    "-"
                };
                s += &format!(
                    "{:>4} {:>24} {:>24} {:>24} {:>11} {:>6}\n",
                    r.m,
                    fmt_num(r.lhs),
                    fmt_num(r.rhs),
                    fmt_num(row.expected.0),
                    class,
                    row.passed
                );
            }
            console.write_all(s.as_bytes())?;
            if let Some(p) = out {
                emit(Some(p), console, &json)?;
            }
        }
    }
    Ok(if rows.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_RELATION })
}

#[derive(Serialize)]
struct ModelOut {
    name: String,
    family: String,
    alpha: Num,
    beta: Num,
    #[serde(rename = "R")]
    r: Num,
}

fn family_name(f: ModelFamily) -> &'static str {
    match f {
        ModelFamily::Free => "free",
        ModelFamily::Centrifugal => "centrifugal",
        ModelFamily::ConventionalAb => "conventional-ab",
        ModelFamily::PureFlux => "pure-flux",
        ModelFamily::Soliton { .. } => "soliton",
        ModelFamily::FluxWell => "flux-well",
        ModelFamily::Table => "table",
        ModelFamily::Scaled => "scaled",
    }
}

pub fn cmd_models(a: &ModelsArgs, console: &mut dyn Write) -> Result<i32> {
    let models: Vec<ModelOut> = potentials::catalog()
        .iter()
        .map(|m| ModelOut {
            name: m.name().to_string(),
            family: family_name(m.family()).into(),
            alpha: Num(m.alpha()),
            beta: Num(m.beta()),
            r: Num(m.length_scale()),
        })
        .collect();
    let body = match a.format {
        Format::Csv => csv_bytes(
            &["name", "family", "alpha", "beta", "R"],
            models
                .iter()
                .map(|m| vec![m.name.clone(), m.family.clone(), fmt_num(m.alpha.0), fmt_num(m.beta.0), fmt_num(m.r.0)]),
        )?,
        Format::Json => to_json(&models)?,
    };
    emit(a.out.as_deref(), console, &body)?;
    Ok(EXIT_OK)
}
