//! Command-line front end. [`run`] parses arguments and returns the text to
//! print and the exit code, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 property failure
//! under `--strict`, 3 annihilator procedure stall, 4 diagram violation.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::annihilators::{replay, AnnihilatorSolver, AnnihilatorTrace, FormulaValue, Variant};
use crate::catalog::{
    builtin, builtin_corpus, enumerate_unital_rings, extended_corpus, RingCorpus,
};
use crate::diagram::{builtin_diagram, check_diagram, hunt_nonimplications};
use crate::error::{Error, Result};
use crate::format::{format_ring, load_ring, save_ring};
use crate::poly::Polynomial;
use crate::properties::{evaluate, McCoyBound, Property};
use crate::ring::FiniteRing;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PROPERTY: i32 = 2;
pub const EXIT_STALL: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

pub const BOUND_ENV: &str = "RINGLAB_MCCOY_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "ringlab",
    version,
    about = "Exact experiments with finite rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Progress notes on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide ring properties.
    Check(CheckArgs),
    /// Find annihilators of a zero-divisor pair f*g = 0.
    Annihilate(AnnihilateArgs),
    /// Re-execute a saved annihilator trace.
    Replay(ReplayArgs),
    /// Check the implication diagram on a corpus.
    Diagram(DiagramArgs),
    /// Write one ring file per isomorphism class of unital rings.
    Enumerate(EnumerateArgs),
    /// Print a ring in the table file format.
    Export(ExportArgs),
    /// Load and validate a ring.
    Validate(ValidateArgs),
}

/// Degree bound for McCoy/Armendariz checks: flag, then environment, then 2,2.
#[derive(Args, Debug)]
pub struct BoundArg {
    #[arg(long = "mccoy-bound", value_name = "M,N", env = BOUND_ENV, default_value = "2,2")]
    pub mccoy_bound: McCoyBound,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// `builtin:NAME` or a ring file.
    #[arg(long)]
    pub ring: String,
    /// Every property (the default when no --property is given).
    #[arg(long, conflicts_with = "property")]
    pub all: bool,
    /// Property id, repeatable.
    #[arg(long)]
    pub property: Vec<String>,
    #[command(flatten)]
    pub bound: BoundArg,
    /// Exit with code 2 if any property fails.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    LeftPower,
    RightPower,
    RightDuo,
    LeftDuo,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Alternative,
    Induction,
}

#[derive(Args, Debug)]
pub struct AnnihilateArgs {
    #[arg(long)]
    pub ring: String,
    /// Coefficients of f, constant term first, e.g. `2,2`.
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
    #[arg(long, value_enum, default_value = "left-duo")]
    pub method: MethodArg,
    /// Which reduction the left Duo procedure uses.
    #[arg(long, value_enum, default_value = "alternative")]
    pub variant: VariantArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ReplayArgs {
    #[arg(long)]
    pub ring: String,
    /// Trace file as written by `annihilate`.
    #[arg(long)]
    pub trace: PathBuf,
}

#[derive(Args, Debug)]
pub struct DiagramArgs {
    /// `builtin`, `extended`, or a directory of `.ring` files.
    #[arg(long, default_value = "builtin")]
    pub corpus: String,
    #[command(flatten)]
    pub bound: BoundArg,
    /// Also scan non-arrows for separating rings.
    #[arg(long)]
    pub hunt: bool,
    /// Write the verdict matrix as comma-separated values.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub order: usize,
    /// Directory for the ring files; created if missing.
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(long)]
    pub ring: String,
}

/// What the binary should print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutcome {
    fn ok(stdout: String) -> Self {
        CliOutcome {
            stdout,
            ..Default::default()
        }
    }

    fn error(e: &Error) -> Self {
        CliOutcome {
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
            ..Default::default()
        }
    }
}

/// Loads `builtin:NAME` or a ring file.
pub fn load_ring_source(source: &str) -> Result<FiniteRing> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin(name),
        None => load_ring(Path::new(source)),
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

/// Writes `text` to `output` if given, otherwise returns it for stdout.
fn emit(text: String, output: Option<&Path>) -> Result<String> {
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| io_err(path, e))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutcome {
                    stderr: text,
                    code: EXIT_INPUT,
                    ..Default::default()
                }
            } else {
                CliOutcome::ok(text)
            };
        }
    };
    let verbose = cli.verbose;
    let result = match cli.command {
        Command::Check(a) => cmd_check(&a),
        Command::Annihilate(a) => cmd_annihilate(&a),
        Command::Replay(a) => cmd_replay(&a),
        Command::Diagram(a) => cmd_diagram(&a, verbose),
        Command::Enumerate(a) => cmd_enumerate(&a),
        Command::Export(a) => cmd_export(&a),
        Command::Validate(a) => cmd_validate(&a),
    };
    result.unwrap_or_else(|e| CliOutcome::error(&e))
}

fn parse_properties(all: bool, ids: &[String]) -> Result<Vec<Property>> {
    if all || ids.is_empty() {
        return Ok(Property::ALL.to_vec());
    }
    ids.iter()
        .map(|id| {
            Property::from_id(id)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown property {id:?}")))
        })
        .collect()
}

pub fn cmd_check(a: &CheckArgs) -> Result<CliOutcome> {
    let ring = load_ring_source(&a.ring)?;
    let properties = parse_properties(a.all, &a.property)?;
    let report = evaluate(&ring, &properties, a.bound.mccoy_bound);
    let code = if a.strict && report.any_failure() {
        EXIT_PROPERTY
    } else {
        EXIT_OK
    };
    Ok(CliOutcome {
        stdout: emit(report.to_string(), a.output.as_deref())?,
        code,
        ..Default::default()
    })
}

fn formula_lines(
    method: &str,
    f: &Polynomial<'_>,
    g: &Polynomial<'_>,
    names: [String; 2],
    values: (FormulaValue, FormulaValue),
) -> String {
    let mut out = format!("method {method}\ninput f={f} g={g}\n");
    for (name, v) in names.iter().zip([values.0, values.1]) {
        out.push_str(&format!(
            "formula {name} value={} is_zero={}\n",
            v.value, v.is_zero
        ));
    }
    out
}

pub fn cmd_annihilate(a: &AnnihilateArgs) -> Result<CliOutcome> {
    let ring = load_ring_source(&a.ring)?;
    let f = Polynomial::parse(&ring, &a.f)?;
    let g = Polynomial::parse(&ring, &a.g)?;
    let solver = AnnihilatorSolver::new(&ring);
    let trace: AnnihilatorTrace = match a.method {
        MethodArg::LeftPower => {
            let values = solver.left_power_annihilators(&f, &g)?;
            let e = g.coeffs().len();
            let text = formula_lines(
                "left_power",
                &f,
                &g,
                [format!("a0^{e}"), format!("am^{e}")],
                values,
            );
            return Ok(CliOutcome::ok(emit(text, a.output.as_deref())?));
        }
        MethodArg::RightPower => {
            let values = solver.right_power_annihilators(&f, &g)?;
            let e = f.coeffs().len();
            let text = formula_lines(
                "right_power",
                &f,
                &g,
                [format!("b0^{e}"), format!("bn^{e}")],
                values,
            );
            return Ok(CliOutcome::ok(emit(text, a.output.as_deref())?));
        }
        MethodArg::RightDuo => solver.right_duo_annihilator(&f, &g)?,
        MethodArg::LeftDuo => {
            let variant = match a.variant {
                VariantArg::Alternative => Variant::Alternative,
                VariantArg::Induction => Variant::Induction,
            };
            solver.left_duo_annihilator(&f, &g, variant)?
        }
        MethodArg::Oracle => solver.oracle_annihilator(&f, &g)?,
    };
    let (code, stderr) = if trace.stalled() {
        (
            EXIT_STALL,
            "procedure stalled; answer taken from the exhaustive scan\n".to_string(),
        )
    } else {
        (EXIT_OK, String::new())
    };
    Ok(CliOutcome {
        stdout: emit(trace.to_string(), a.output.as_deref())?,
        stderr,
        code,
    })
}

pub fn cmd_replay(a: &ReplayArgs) -> Result<CliOutcome> {
    let ring = load_ring_source(&a.ring)?;
    let text = fs::read_to_string(&a.trace).map_err(|e| io_err(&a.trace, e))?;
    let trace = AnnihilatorTrace::parse(&text)?;
    replay(&ring, &trace)?;
    let result = trace
        .result()
        .map_or_else(|| "none".to_string(), |r| r.to_string());
    Ok(CliOutcome::ok(format!(
        "replay ok method {} steps {} result {result}\n",
        trace.method,
        trace.steps.len()
    )))
}

fn load_corpus(spec: &str) -> Result<RingCorpus> {
    match spec {
        "builtin" => Ok(builtin_corpus()),
        "extended" => Ok(extended_corpus()),
        dir => RingCorpus::load_dir(Path::new(dir)),
    }
}

pub fn cmd_diagram(a: &DiagramArgs, verbose: bool) -> Result<CliOutcome> {
    let corpus = load_corpus(&a.corpus)?;
    let diagram = builtin_diagram();
    let report = check_diagram(&diagram, &corpus, a.bound.mccoy_bound)?;
    let mut text = report.to_string();
    if a.hunt {
        for found in
            hunt_nonimplications(&diagram, &report.matrix, &diagram.default_hunt_candidates())?
        {
            text.push_str(&found.to_string());
            text.push('\n');
        }
    }
    if let Some(path) = &a.csv {
        fs::write(path, report.matrix.to_csv()).map_err(|e| io_err(path, e))?;
    }
    let stderr = if verbose {
        format!(
            "checked {} rings against {} edges\n",
            corpus.len(),
            diagram.edges().len()
        )
    } else {
        String::new()
    };
    let code = if report.violations() > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    Ok(CliOutcome {
        stdout: emit(text, a.output.as_deref())?,
        stderr,
        code,
    })
}

/// `order4:0` becomes `order4_0.ring`.
pub fn ring_file_name(ring: &FiniteRing) -> String {
    let stem: String = ring
        .name()
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect();
    format!("{stem}.ring")
}

pub fn cmd_enumerate(a: &EnumerateArgs) -> Result<CliOutcome> {
    let corpus = enumerate_unital_rings(a.order)?;
    fs::create_dir_all(&a.output).map_err(|e| io_err(&a.output, e))?;
    let mut out = String::new();
    for ring in corpus.rings() {
        let path = a.output.join(ring_file_name(ring));
        save_ring(ring, &path)?;
        out.push_str(&format!("ring {} file {}\n", ring.name(), path.display()));
    }
    out.push_str(&format!("classes {}\n", corpus.len()));
    Ok(CliOutcome::ok(out))
}

pub fn cmd_export(a: &ExportArgs) -> Result<CliOutcome> {
    let ring = load_ring_source(&a.ring)?;
    Ok(CliOutcome::ok(emit(
        format_ring(&ring),
        a.output.as_deref(),
    )?))
}

pub fn cmd_validate(a: &ValidateArgs) -> Result<CliOutcome> {
    let ring = load_ring_source(&a.ring)?;
    let one = ring
        .one()
        .map_or_else(|| "none".to_string(), |e| e.to_string());
    Ok(CliOutcome::ok(format!(
        "valid ring {} order {} one {one}\n",
        ring.name(),
        ring.order()
    )))
}
