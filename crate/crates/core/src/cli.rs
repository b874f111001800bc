//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 input is not a Lie algebra.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::expengine::closed_form;
use crate::grid::{verify_grid, GridSize};
use crate::levicivita::classify_manifold_with;
use crate::lie::{class_algebra, jacobi_defect, StructureConstants};
use crate::mat3::Mat3;
use crate::structure::{standard_structure, ClassId, ClassParams, ClassReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_LIE: i32 = 3;

const DEFAULT_TOL: f64 = 1e-12;
const DEFAULT_VERIFY_TOL: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "paralie", version)]
#[command(
    about = "Lie algebras and matrix Lie groups of 3-dimensional almost paracontact almost paracomplex Riemannian manifolds"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Tolerance (default 1e-12; `verify` defaults to 1e-11)
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Write output to this file instead of stdout (`-` is stdout)
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the structure constants of a class algebra
    Construct {
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Classify structure constants read from a JSON file (`-` for stdin)
    Classify { input: PathBuf },
    /// Evaluate the closed-form group element e^A = E + tA + uA²
    Exp {
        #[command(flatten)]
        class: ClassArgs,
        /// Coordinates a,b,c of A = aM0 + bM1 + cM2
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true, default_value = "1,1,1")]
        coords: [f64; 3],
        /// Also compare against the scaling-and-squaring oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Check the closed forms against the oracle over the standard grid
    Verify {
        #[arg(long, value_enum, default_value_t = GridSize::Full)]
        grid: GridSize,
    },
    /// Numeric instantiation of A, tr A, tr A², t, u for every class
    Table {
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true, default_value = "1,1,1")]
        coords: [f64; 3],
    },
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct ClassArgs {
    /// Class id (F0, F1, F4, F5, F8, F9, F10, F11; case-insensitive)
    #[arg(long = "class", value_parser = parse_class)]
    pub class_id: ClassId,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
}

impl ClassArgs {
    fn params(&self) -> Result<ClassParams<f64>, CliError> {
        ClassParams::new(self.class_id, self.alpha, self.beta).map_err(|e| CliError::Usage(e.to_string()))
    }
}

fn parse_class(s: &str) -> Result<ClassId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_coords(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected a,b,c; got `{s}`"));
    };
    let num = |x: &str| x.parse::<f64>().map_err(|e| format!("`{x}`: {e}"));
    let out = [num(a)?, num(b)?, num(c)?];
    if out.iter().all(|x| x.is_finite()) {
        Ok(out)
    } else {
        Err(format!("non-finite coordinate in `{s}`"))
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    NotLie(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::NotLie(_) => EXIT_NOT_LIE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::NotLie(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Jacobi { .. } | Error::NotAntisymmetric { .. } => CliError::NotLie(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };

    let (code, body) = match execute(&cli) {
        Ok((code, body)) => (code, body),
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            return e.code();
        }
    };

    let written = match cli.output.as_ref().filter(|p| p.as_os_str() != "-") {
        Some(path) => fs::write(path, body.as_bytes()),
        None => stdout.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    if let Some(tol) = cli.tol {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(CliError::Usage(format!("--tol must be a positive number, got {tol}")));
        }
    }
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    let json = cli.format == Format::Json;

    match &cli.command {
        Command::Construct { class } => cmd_construct(&class.params()?, json).map(|s| (EXIT_OK, s)),
        Command::Classify { input } => cmd_classify(input, tol, json).map(|s| (EXIT_OK, s)),
        Command::Exp { class, coords, oracle } => {
            cmd_exp(&class.params()?, *coords, *oracle, json).map(|s| (EXIT_OK, s))
        }
        Command::Verify { grid } => cmd_verify(*grid, cli.tol.unwrap_or(DEFAULT_VERIFY_TOL), json),
        Command::Table { alpha, beta, coords } => cmd_table(*alpha, *beta, *coords, json).map(|s| (EXIT_OK, s)),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn fmt_matrix(out: &mut String, label: &str, m: &Mat3<f64>) {
    let pad = " ".repeat(label.len());
    for (r, row) in m.m.iter().enumerate() {
        let lead = if r == 1 { label } else { pad.as_str() };
        let _ = writeln!(out, "{lead}  [{:>15.9} {:>15.9} {:>15.9} ]", row[0], row[1], row[2]);
    }
}

fn cmd_construct(p: &ClassParams<f64>, json: bool) -> Result<String, CliError> {
    let c = class_algebra(p);
    let defect = jacobi_defect(&c);
    if json {
        let mut v = serde_json::to_value(p).expect("serializable");
        let obj = v.as_object_mut().expect("object");
        obj.insert("C".into(), serde_json::to_value(c.tensor()).expect("serializable"));
        obj.insert("jacobi_defect".into(), json!(defect));
        return Ok(to_json(&v));
    }
    let mut out = String::new();
    let _ = writeln!(out, "class {}  alpha = {}  beta = {}", p.class_id, p.alpha, p.beta);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let terms: Vec<String> =
            (0..3).filter(|&k| c.get(i, j, k) != 0.0).map(|k| format!("{} E{k}", c.get(i, j, k))).collect();
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = writeln!(out, "[E{i},E{j}] = {rhs}");
    }
    let _ = writeln!(out, "jacobi defect = {defect:e}");
    Ok(out)
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Accepts either `{"C": [[[..]]]}` or `{"class": .., "alpha": .., "beta": ..}`.
fn parse_constants(text: &str) -> Result<StructureConstants<f64>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    if let Some(raw) = v.get("C") {
        let t = serde_json::from_value(raw.clone())
            .map_err(|e| CliError::Usage(format!("`C` is not a 3x3x3 array of numbers: {e}")))?;
        return Ok(StructureConstants::new(t)?);
    }
    if v.get("class").is_some() {
        let p: ClassParams<f64> =
            serde_json::from_value(v).map_err(|e| CliError::Usage(format!("invalid class parameters: {e}")))?;
        let p = ClassParams::new(p.class_id, p.alpha, p.beta)?;
        return Ok(class_algebra(&p));
    }
    Err(CliError::Usage("expected an object with key `C` or `class`".into()))
}

fn cmd_classify(input: &PathBuf, tol: f64, json: bool) -> Result<String, CliError> {
    let c = parse_constants(&read_input(input)?)?;
    let report = classify_manifold_with(&c, &standard_structure(), tol)?;
    if json {
        return Ok(to_json(&report));
    }
    Ok(report_text(&report))
}

fn report_text(r: &ClassReport<f64>) -> String {
    let mut out = String::new();
    let verdict: Vec<&str> = r.verdict.iter().map(|c| c.as_str()).collect();
    let _ = writeln!(out, "verdict       {}", verdict.join(" + "));
    let _ = writeln!(out, "alpha         {}", r.alpha);
    let _ = writeln!(out, "beta          {}", r.beta);
    let _ = writeln!(out, "residual      {:e}", r.residual);
    if r.unclassified {
        let _ = writeln!(out, "unclassified  tensor lies outside the span of the basic classes");
    }
    let l = &r.lee;
    let _ = writeln!(out, "theta         ({}, {}, {})", l.theta[0], l.theta[1], l.theta[2]);
    let _ = writeln!(out, "theta*        ({}, {}, {})", l.theta_star[0], l.theta_star[1], l.theta_star[2]);
    let _ = writeln!(out, "omega         ({}, {}, {})", l.omega[0], l.omega[1], l.omega[2]);
    let _ = writeln!(out, "para-Sasakian {}", r.para_sasakian);
    out
}

fn cmd_exp(p: &ClassParams<f64>, [a, b, c]: [f64; 3], oracle: bool, json: bool) -> Result<String, CliError> {
    let mut r = closed_form(p, a, b, c)?;
    if oracle {
        r = r.with_oracle()?;
    }
    let det = r.det();
    if json {
        let mut v = serde_json::to_value(r).expect("serializable");
        v.as_object_mut().expect("object").insert("det".into(), json!(det));
        return Ok(to_json(&v));
    }
    let mut out = String::new();
    let _ = writeln!(out, "class {}  alpha = {}  beta = {}  (a,b,c) = ({a}, {b}, {c})", p.class_id, p.alpha, p.beta);
    fmt_matrix(&mut out, "A   ", &r.a);
    let _ = writeln!(out, "tr A  = {}", r.a.trace());
    let _ = writeln!(out, "tr A2 = {}", r.a.trace_sq());
    let _ = writeln!(out, "branch {}", r.branch.as_str());
    let _ = writeln!(out, "t = {}", r.t);
    let _ = writeln!(out, "u = {}", r.u);
    fmt_matrix(&mut out, "e^A ", &r.exp_a);
    let _ = writeln!(out, "det(e^A) = {det}");
    if let Some(res) = r.oracle_residual {
        let _ = writeln!(out, "oracle residual = {res:e}");
    }
    Ok(out)
}

fn cmd_verify(size: GridSize, tol: f64, json: bool) -> Result<(i32, String), CliError> {
    let summary = verify_grid(size)?;
    let pass = summary.iter().all(|s| s.passes(tol));
    let max_residual = summary.iter().fold(0.0f64, |m, s| m.max(s.max_residual));
    let code = if pass { EXIT_OK } else { EXIT_VERIFY_FAILED };

    if json {
        let grid = match size {
            GridSize::Full => "full",
            GridSize::Small => "small",
        };
        let v = json!({
            "grid": grid,
            "tol": tol,
            "classes": summary,
            "max_residual": max_residual,
            "pass": pass,
        });
        return Ok((code, to_json(&v)));
    }
    let mut out = String::new();
    for s in &summary {
        let verdict = if s.passes(tol) { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<4} points {:>5}  max residual {:>10.3e}  jacobi {:>8.1e}  {verdict}",
            s.class_id.as_str(),
            s.points,
            s.max_residual,
            s.max_jacobi_defect
        );
    }
    let _ = writeln!(
        out,
        "overall: {}  (max residual {max_residual:.3e}, tol {tol:e})",
        if pass { "PASS" } else { "FAIL" }
    );
    Ok((code, out))
}

#[derive(Serialize)]
struct TableRow {
    #[serde(rename = "class")]
    class_id: ClassId,
    #[serde(rename = "A")]
    a: Mat3<f64>,
    #[serde(rename = "trA")]
    tr_a: f64,
    #[serde(rename = "trA2")]
    tr_a2: f64,
    t: f64,
    u: f64,
    branch: &'static str,
}

fn cmd_table(alpha: f64, beta: f64, [a, b, c]: [f64; 3], json: bool) -> Result<String, CliError> {
    let rows = ClassId::BASIC
        .iter()
        .map(|&class_id| {
            let p = ClassParams::new(class_id, alpha, beta)?;
            let r = closed_form(&p, a, b, c)?;
            Ok(TableRow {
                class_id,
                a: r.a,
                tr_a: r.a.trace(),
                tr_a2: r.a.trace_sq(),
                t: r.t,
                u: r.u,
                branch: r.branch.as_str(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;

    if json {
        return Ok(to_json(&rows));
    }
    let mut out = String::new();
    let _ = writeln!(out, "alpha = {alpha}  beta = {beta}  (a,b,c) = ({a}, {b}, {c})");
    for row in &rows {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{}: tr A = {}  tr A2 = {}  t = {}  u = {}  ({})",
            row.class_id, row.tr_a, row.tr_a2, row.t, row.u, row.branch
        );
        fmt_matrix(&mut out, "A", &row.a);
    }
    Ok(out)
}
