//! Command-line front end: identity verification, trig-sum tables and
//! state phase statistics with JSON or CSV output.
//!
//! Exit codes: 0 on success, 1 when an unconditionally-claimed identity
//! fails verification, 2 for usage and domain errors. Documented
//! discrepancies (the measured trig sum under the quoted k, the n = 0
//! crossing of the inverse-built unitary pair) are reported in the output
//! but never fail a run.
//!
//! Output is deterministic: identical configurations produce byte-identical
//! bytes, and the only metadata carried is the crate version plus the
//! resolved configuration itself.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    gates_exit, phase_distribution, phase_statistics, trig_sum_table, verify_all, BasisParams,
    IdentityReport, PhaseSample, PhaseStatistics, TrigStats,
};
use crate::error::{Error, Result};
use crate::fock::Boundary;
use crate::phase::{KConvention, PhaseFamily, SgConstruction, UnitaryConstruction};
use crate::states::{prepare, StateKind};

/// Which report a run produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Verify,
    Trig,
    Stats,
    Dist,
}

/// Family selector as exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum FamilySelector {
    /// Susskind-Glogower, direct shift construction.
    Sg,
    /// Susskind-Glogower from the annihilation operator and its inverse.
    SgFromAnnihilation,
    /// Susskind-Glogower from the creation operator and its inverse.
    SgFromCreation,
    /// Unitary family on the two-sided lattice, direct shift.
    Unitary,
    /// Unitary family built from the extended inverses.
    UnitaryFromInverses,
    /// Measured (quadrature) family scaled by the context number k.
    Measured,
}

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// A single quantum number or an inclusive range `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberSpec {
    Single(i64),
    Range { lo: i64, hi: i64 },
}

impl FromStr for NumberSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: i64 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in {s:?}"))?;
            let hi: i64 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in {s:?}"))?;
            Ok(NumberSpec::Range { lo, hi })
        } else {
            s.trim()
                .parse()
                .map(NumberSpec::Single)
                .map_err(|_| format!("expected an integer or lo..hi range, got {s:?}"))
        }
    }
}

impl fmt::Display for NumberSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumberSpec::Single(n) => write!(f, "{n}"),
            NumberSpec::Range { lo, hi } => write!(f, "{lo}..{hi}"),
        }
    }
}

/// Fully resolved run configuration; echoed verbatim into the report
/// header so outputs are self-describing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub dim: usize,
    pub half_width: usize,
    pub boundary: Boundary,
    pub family: FamilySelector,
    pub k: KConvention,
    pub alpha_re: Option<f64>,
    pub alpha_im: Option<f64>,
    pub r: Option<f64>,
    pub theta: f64,
    pub n: Option<NumberSpec>,
    pub tol_identity: f64,
    pub tol_quadrature: f64,
    pub bins: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.dim < 4 {
            return Err(Error::InvalidConfig("--dim must be at least 4".into()));
        }
        if self.half_width < 2 {
            return Err(Error::InvalidConfig("--half-width must be at least 2".into()));
        }
        let tol_ok = |t: f64| t.is_finite() && t > 0.0;
        if !tol_ok(self.tol_identity) || !tol_ok(self.tol_quadrature) {
            return Err(Error::InvalidConfig("tolerances must be positive".into()));
        }
        if self.bins < 4 {
            return Err(Error::InvalidConfig("--bins must be at least 4".into()));
        }
        Ok(())
    }

    fn basis_params(&self) -> BasisParams {
        BasisParams {
            dim: self.dim,
            half_width: self.half_width,
            boundary: self.boundary,
        }
    }

    fn phase_family(&self) -> PhaseFamily {
        match self.family {
            FamilySelector::Sg => PhaseFamily::SusskindGlogower(SgConstruction::Direct),
            FamilySelector::SgFromAnnihilation => {
                PhaseFamily::SusskindGlogower(SgConstruction::FromAnnihilation)
            }
            FamilySelector::SgFromCreation => {
                PhaseFamily::SusskindGlogower(SgConstruction::FromCreation)
            }
            FamilySelector::Unitary => PhaseFamily::Unitary(UnitaryConstruction::Direct),
            FamilySelector::UnitaryFromInverses => {
                PhaseFamily::Unitary(UnitaryConstruction::FromInverses)
            }
            FamilySelector::Measured => PhaseFamily::Measured(self.k),
        }
    }

    fn alpha(&self) -> Option<Complex64> {
        match (self.alpha_re, self.alpha_im) {
            (None, None) => None,
            (re, im) => Some(Complex64::new(re.unwrap_or(0.0), im.unwrap_or(0.0))),
        }
    }

    /// State selection for `stats`/`dist`: `--n` gives a number state,
    /// `--alpha-re`/`--alpha-im` a coherent state, `--r` (with `--theta`) a
    /// squeezed vacuum, and α together with r a squeezed coherent state.
    fn state_kind(&self) -> Result<StateKind> {
        let alpha = self.alpha();
        match (self.n, alpha, self.r) {
            (Some(NumberSpec::Single(n)), None, None) => Ok(StateKind::Number(n)),
            (Some(NumberSpec::Range { .. }), _, _) => Err(Error::InvalidConfig(
                "--n must be a single integer when preparing a state".into(),
            )),
            (Some(_), _, _) => Err(Error::InvalidConfig(
                "--n cannot be combined with --alpha-re/--alpha-im/--r".into(),
            )),
            (None, Some(alpha), None) => Ok(StateKind::Coherent(alpha)),
            (None, None, Some(r)) => Ok(StateKind::SqueezedVacuum {
                r,
                theta: self.theta,
            }),
            (None, Some(alpha), Some(r)) => Ok(StateKind::SqueezedCoherent {
                alpha,
                r,
                theta: self.theta,
            }),
            (None, None, None) => Err(Error::InvalidConfig(
                "no state given: use --n, --alpha-re/--alpha-im and/or --r".into(),
            )),
        }
    }

    fn trig_range(&self) -> Result<std::ops::RangeInclusive<i64>> {
        let default = || match self.phase_family() {
            PhaseFamily::SusskindGlogower(_) | PhaseFamily::Measured(_) => {
                0..=(self.dim as i64 - 2)
            }
            PhaseFamily::Unitary(_) => {
                let m = self.half_width as i64;
                match self.boundary {
                    Boundary::Cyclic => -m..=m,
                    Boundary::Truncated => (-m + 1)..=(m - 1),
                }
            }
        };
        Ok(match self.n {
            None => default(),
            Some(NumberSpec::Single(n)) => n..=n,
            Some(NumberSpec::Range { lo, hi }) => lo..=hi,
        })
    }
}

/// Report header: crate version plus the configuration that produced the
/// results. No timestamps — identical configs give identical bytes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub config: RunConfig,
}

/// Envelope for every JSON report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report<T> {
    pub meta: Meta,
    pub results: Vec<T>,
}

impl<T: Serialize> Report<T> {
    fn new(config: &RunConfig, results: Vec<T>) -> Self {
        Report {
            meta: Meta {
                version: env!("CARGO_PKG_VERSION").to_string(),
                config: config.clone(),
            },
            results,
        }
    }

    fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidConfig(format!("csv flush failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// CSV cannot nest the excluded-row list, so identity rows flatten it.
#[derive(Serialize)]
struct IdentityCsvRow<'a> {
    name: &'a str,
    residual_full: f64,
    residual_interior: f64,
    excluded_rows: String,
    passed: bool,
}

impl<'a> From<&'a IdentityReport> for IdentityCsvRow<'a> {
    fn from(r: &'a IdentityReport) -> Self {
        IdentityCsvRow {
            name: &r.name,
            residual_full: r.residual_full,
            residual_interior: r.residual_interior,
            excluded_rows: r
                .excluded_rows
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            passed: r.passed,
        }
    }
}

/// Rendered output plus the exit status the process should report.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub output: String,
    pub exit_code: i32,
}

/// Execute one fully-resolved configuration.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let params = config.basis_params();
    match config.command {
        CommandKind::Verify => {
            let reports = verify_all(&params, config.tol_identity)?;
            let failed = reports.iter().any(|r| gates_exit(&r.name) && !r.passed);
            let output = render(config, &reports, |rows| {
                to_csv(&rows.iter().map(IdentityCsvRow::from).collect::<Vec<_>>())
            })?;
            Ok(RunOutcome {
                output,
                exit_code: if failed { 1 } else { 0 },
            })
        }
        CommandKind::Trig => {
            let rows = trig_sum_table(
                config.phase_family(),
                &params,
                config.trig_range()?,
                config.tol_identity,
            )?;
            let output = render(config, &rows, |rows: &[TrigStats]| to_csv(rows))?;
            Ok(RunOutcome {
                output,
                exit_code: 0,
            })
        }
        CommandKind::Stats => {
            let basis = if config.phase_family().needs_one_sided() {
                params.one_sided()?
            } else {
                params.two_sided()?
            };
            let ket = if config.phase_family().needs_one_sided() {
                prepare(basis, config.state_kind()?)?
            } else {
                // two-sided statistics act on number states of the lattice
                match config.state_kind()? {
                    StateKind::Number(n) => crate::fock::number_state(basis, n)?,
                    _ => {
                        return Err(Error::InvalidConfig(
                            "only --n number states are defined on the two-sided lattice".into(),
                        ))
                    }
                }
            };
            let stats = phase_statistics(config.phase_family(), &ket)?;
            let output = render(config, &[stats], |rows: &[PhaseStatistics]| to_csv(rows))?;
            Ok(RunOutcome {
                output,
                exit_code: 0,
            })
        }
        CommandKind::Dist => {
            let basis = params.one_sided()?;
            let ket = prepare(basis, config.state_kind()?)?;
            let rows = phase_distribution(&ket, config.bins)?;
            let output = render(config, &rows, |rows: &[PhaseSample]| to_csv(rows))?;
            Ok(RunOutcome {
                output,
                exit_code: 0,
            })
        }
    }
}

fn render<T: Serialize + Clone>(
    config: &RunConfig,
    rows: &[T],
    csv_fn: impl Fn(&[T]) -> Result<String>,
) -> Result<String> {
    match config.format {
        OutputFormat::Json => Report::new(config, rows.to_vec()).to_json(),
        OutputFormat::Csv => csv_fn(rows),
    }
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// One-sided basis dimension D
    #[arg(long, default_value_t = 32)]
    dim: usize,

    /// Two-sided lattice half-width M (dimension 2M+1)
    #[arg(long, default_value_t = 16)]
    half_width: usize,

    /// Edge handling of the two-sided lattice
    #[arg(long, value_enum, default_value_t = CliBoundary::Cyclic)]
    boundary: CliBoundary,

    /// Phase-operator family
    #[arg(long, value_enum, default_value_t = FamilySelector::Sg)]
    family: FamilySelector,

    /// Scalar-k convention of the measured family
    #[arg(long, value_enum, default_value_t = CliK::Paper)]
    k: CliK,

    /// Real part of the coherent amplitude α
    #[arg(long, allow_hyphen_values = true)]
    alpha_re: Option<f64>,

    /// Imaginary part of the coherent amplitude α
    #[arg(long, allow_hyphen_values = true)]
    alpha_im: Option<f64>,

    /// Squeeze parameter r ≥ 0
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,

    /// Squeeze phase θ in radians
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    theta: f64,

    /// Quantum number: single integer, or inclusive range lo..hi for trig
    #[arg(long, allow_hyphen_values = true)]
    n: Option<NumberSpec>,

    /// Tolerance for identity residuals and trig-sum claims
    #[arg(long, default_value_t = 1e-12)]
    tol_identity: f64,

    /// Tolerance for quadrature-based quantities
    #[arg(long, default_value_t = 1e-6)]
    tol_quadrature: f64,

    /// Number of sample points of the phase distribution
    #[arg(long, default_value_t = 256)]
    bins: usize,

    /// Output encoding
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

// clap needs ValueEnum on the flag types; Boundary and KConvention carry
// their serde forms, so thin mirrors keep the two concerns apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliBoundary {
    Truncated,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliK {
    Paper,
    Normalized,
}

impl From<CliBoundary> for Boundary {
    fn from(b: CliBoundary) -> Self {
        match b {
            CliBoundary::Truncated => Boundary::Truncated,
            CliBoundary::Cyclic => Boundary::Cyclic,
        }
    }
}

impl From<CliK> for KConvention {
    fn from(k: CliK) -> Self {
        match k {
            CliK::Paper => KConvention::Paper,
            CliK::Normalized => KConvention::Normalized,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qphase",
    version,
    about = "Phase operators from ladder-operator inverses on truncated number bases"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Verify every operator identity and report residuals
    Verify(CommonArgs),
    /// Tabulate number-state expectations of cos² and sin² per family
    Trig(CommonArgs),
    /// Phase statistics of a prepared state under one family
    Stats(CommonArgs),
    /// Phase distribution of a prepared state over [-pi, pi)
    Dist(CommonArgs),
}

impl CliCommand {
    fn into_config(self) -> RunConfig {
        let (kind, args) = match self {
            CliCommand::Verify(a) => (CommandKind::Verify, a),
            CliCommand::Trig(a) => (CommandKind::Trig, a),
            CliCommand::Stats(a) => (CommandKind::Stats, a),
            CliCommand::Dist(a) => (CommandKind::Dist, a),
        };
        RunConfig {
            command: kind,
            dim: args.dim,
            half_width: args.half_width,
            boundary: args.boundary.into(),
            family: args.family,
            k: args.k.into(),
            alpha_re: args.alpha_re,
            alpha_im: args.alpha_im,
            r: args.r,
            theta: args.theta,
            n: args.n,
            tol_identity: args.tol_identity,
            tol_quadrature: args.tol_quadrature,
            bins: args.bins,
            format: args.format,
            out: args.out,
        }
    }
}

/// Parse `args`, run, and write the report; returns the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let config = cli.command.into_config();
    match run(&config) {
        Ok(outcome) => {
            let written = match &config.out {
                Some(path) => std::fs::write(path, &outcome.output).map_err(Error::from),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
