//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blanchfield::{trace_form, BlanchfieldForm, BlanchfieldRecord};
use crate::cobordism::{cobordant_obstructions, obstruction_suite, ObstructionReport};
use crate::error::Error;
use crate::farber_levine::{fl_pairing_with_cancel, torsion_module, Bounds, CancelToken, TorsionModuleRecord};
use crate::io::matrix_to_json;
use crate::linalg::RatMatrix;
use crate::ring::rat_to_string;
use crate::seifert::{alexander_polynomial, validate, SeifertData};
use crate::sequiv::{reduce_to_nonsingular, replay, scalar_form, MoveTrace, Reduction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the realizability conditions.
    Validate { file: PathBuf },
    /// Alexander polynomial up to similarity.
    Alexander { file: PathBuf },
    /// Cobordism obstructions for one matrix.
    Obstruct { file: PathBuf },
    /// Obstructions to `A ~ B`.
    Cobordant { a: PathBuf, b: PathBuf },
    /// Reduce to a nonsingular S-equivalent matrix.
    SReduce { file: PathBuf },
    /// Replay a move trace.
    Replay { file: PathBuf },
    /// Presentation and pairing matrices.
    Blanchfield { file: PathBuf },
    /// Trace of the pairing against the scalar form.
    TraceForm { file: PathBuf },
    /// Finite torsion module and its linking pairing.
    FarberLevine { file: PathBuf },
}

#[derive(Clone, Debug, Parser)]
#[command(name = "diskknot", version, about = "Exact Seifert-matrix calculus for disk knots")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub k_max: Option<u64>,
    #[arg(long, global = true)]
    pub m_max: Option<u64>,
}

impl JobConfig {
    pub fn bounds(&self) -> Bounds {
        let d = Bounds::default();
        Bounds { k_max: self.k_max.unwrap_or(d.k_max), m_max: self.m_max.unwrap_or(d.m_max) }
    }
}

/// Exit status plus the rendered report (and a diagnostic for failures).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
    pub diagnostic: Option<String>,
}

enum Failure {
    Parse(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Parse(format!("{}: {e}", path.display()))
    })
}

fn matrix_text(m: &RatMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// A report in both renderings.
struct Report {
    json: Value,
    text: String,
    status: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, status: 0 }
    }
}

fn obstruction_report(r: &ObstructionReport) -> Report {
    let json = serde_json::to_value(r).expect("serialisable");
    let mut text = format!("verdict: {}\n", r.verdict);
    text += &format!("dim_even: {}\n", r.dim_even);
    if let Some(z) = r.signature_zero {
        text += &format!("signature_zero: {z}\n");
    }
    text += &format!("fox_milnor: {}\ndet_at_minus_one_square: {}\n", r.fox_milnor, r.det_at_minus_one_square);
    for why in &r.reasons {
        text += &format!("reason: {why}\n");
    }
    Report::ok(json, text)
}

fn execute(cfg: &JobConfig, cancel: &CancelToken) -> Result<Report, Failure> {
    match &cfg.command {
        Command::Validate { file } => {
            let s: SeifertData = parse_json(file)?;
            let rep = validate(&s);
            let mut json = serde_json::to_value(&rep).expect("serialisable");
            if let Some(f) = rep.failure() {
                json["failure"] = json!(f);
            }
            let mut text = format!("verdict: {}\n", if rep.verdict { "valid" } else { "invalid" });
            if let Some(f) = rep.failure() {
                text += &format!("failure: {f}\n");
            }
            text += &format!(
                "r_nondegenerate: {}\ntau_integral: {}\nmu_integral: {}\ndimension_ok: {}\nis_sphere_matrix: {}\ndet_r: {}\n",
                rep.r_nondegenerate, rep.tau_integral, rep.mu_integral, rep.dimension_ok, rep.is_sphere_matrix, rep.det_r
            );
            Ok(Report { json, text, status: if rep.verdict { 0 } else { 3 } })
        }
        Command::Alexander { file } => {
            let s: SeifertData = parse_json(file)?;
            let a = alexander_polynomial(&s)?;
            let json = json!({ "alexander": a.rep.to_string(), "ring": "rat" });
            Ok(Report::ok(json, format!("{}\n", a.rep)))
        }
        Command::Obstruct { file } => {
            let s: SeifertData = parse_json(file)?;
            Ok(obstruction_report(&obstruction_suite(&s)?))
        }
        Command::Cobordant { a, b } => {
            let a: SeifertData = parse_json(a)?;
            let b: SeifertData = parse_json(b)?;
            Ok(obstruction_report(&cobordant_obstructions(&a, &b)?))
        }
        Command::SReduce { file } => {
            let s: SeifertData = parse_json(file)?;
            let red = reduce_to_nonsingular(&s)?;
            let trace = red.trace();
            let (outcome, text) = match &red {
                Reduction::Nonsingular { result, .. } => (
                    "nonsingular",
                    format!("outcome: nonsingular\ndim: {}\ntheta: {}\n", result.dim(), matrix_text(&result.theta)),
                ),
                Reduction::ZeroModule { .. } => ("zero_module", "outcome: zero_module\n".to_string()),
            };
            let text = text + &format!("moves: {}\n", trace.moves.len());
            let json = json!({ "outcome": outcome, "trace": serde_json::to_value(trace).expect("serialisable") });
            Ok(Report::ok(json, text))
        }
        Command::Replay { file } => {
            let trace: MoveTrace = parse_json(file)?;
            let end = replay(&trace)?;
            let json = json!({ "replay": "ok", "moves": trace.moves.len(), "end": serde_json::to_value(&end).expect("serialisable") });
            let text = format!("replay: ok\nmoves: {}\nend: {}\n", trace.moves.len(), matrix_text(&end.theta));
            Ok(Report::ok(json, text))
        }
        Command::Blanchfield { file } => {
            let s: SeifertData = parse_json(file)?;
            let b = BlanchfieldForm::new(&s)?;
            let rec = BlanchfieldRecord::from(&b);
            let mut text = String::from("presentation:\n");
            for row in b.presentation.to_rows() {
                text += &format!("  [{}]\n", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
            }
            text += "pairing:\n";
            for row in b.pairing.to_rows() {
                text += &format!("  [{}]\n", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
            }
            text += &format!("hermitian: {}\n", rec.hermitian);
            Ok(Report::ok(serde_json::to_value(&rec).expect("serialisable"), text))
        }
        Command::TraceForm { file } => {
            let s: SeifertData = parse_json(file)?;
            let rational = trace_form(&BlanchfieldForm::rational_basis(&s)?);
            let integral = trace_form(&BlanchfieldForm::new(&s)?);
            let scalar = scalar_form(&s)?;
            let equal = rational == scalar;
            let json = json!({
                "trace_form": matrix_to_json(&rational),
                "scalar_form": matrix_to_json(&scalar),
                "equal": equal,
                "integral_basis_trace_form": matrix_to_json(&integral),
            });
            let text = format!(
                "trace_form: {}\nscalar_form: {}\nequal: {equal}\nintegral_basis_trace_form: {}\n",
                matrix_text(&rational),
                matrix_text(&scalar),
                matrix_text(&integral)
            );
            Ok(Report::ok(json, text))
        }
        Command::FarberLevine { file } => {
            let s: SeifertData = parse_json(file)?;
            let module = torsion_module(&s, cfg.bounds(), cancel)?;
            let table = fl_pairing_with_cancel(&s, &module, cancel)?;
            let rec = TorsionModuleRecord::from(&module);
            let json = json!({
                "module": serde_json::to_value(&rec).expect("serialisable"),
                "pairing": serde_json::to_value(&table).expect("serialisable"),
            });
            let mut text = format!(
                "orders: [{}]\nm: {}\nk: {}\n",
                rec.orders.join(", "),
                rec.m_exponent,
                rec.t_order
            );
            text += &format!("t_action: {}\n", matrix_text(&module.t_action.to_rat()));
            let pairing: Vec<String> = table
                .values
                .iter()
                .map(|r| format!("[{}]", r.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")))
                .collect();
            text += &format!("pairing: [{}]\n", pairing.join(", "));
            Ok(Report::ok(json, text))
        }
    }
}

pub fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn failure_outcome(cfg: &JobConfig, f: Failure) -> Outcome {
    let (status, condition, message) = match f {
        Failure::Parse(m) => (2, "parse_error".to_string(), m),
        Failure::Io(m) => (1, "io_error".to_string(), m),
        Failure::Lib(e) => {
            let status = match e {
                Error::InvalidCandidate(_) => 3,
                Error::BoundExceeded(_) | Error::InfiniteModule => 4,
                _ => 1,
            };
            (status, error_name(&e).to_string(), e.to_string())
        }
    };
    let report = match cfg.format {
        Format::Json => render_json(&json!({ "error": condition, "message": message })),
        Format::Text => String::new(),
    };
    Outcome { status, report, diagnostic: Some(format!("{condition}: {message}")) }
}

pub fn error_name(e: &Error) -> &'static str {
    match e {
        Error::InvalidCandidate(_) => "invalid_candidate",
        Error::BoundExceeded(_) => "bound_exceeded",
        Error::InfiniteModule => "infinite_module",
        Error::LiftFailure(_) => "lift_failure",
        Error::Cancelled => "cancelled",
        _ => "error",
    }
}

/// Runs one job without touching the output destination.
pub fn run(cfg: &JobConfig) -> Outcome {
    run_with_cancel(cfg, &CancelToken::new())
}

pub fn run_with_cancel(cfg: &JobConfig, cancel: &CancelToken) -> Outcome {
    match execute(cfg, cancel) {
        Ok(rep) => {
            let report = match cfg.format {
                Format::Json => render_json(&rep.json),
                Format::Text => rep.text,
            };
            let diagnostic = (rep.status == 3).then(|| {
                let why = rep.json.get("failure").and_then(Value::as_str).unwrap_or("invalid");
                format!("invalid_candidate: {why}")
            });
            Outcome { status: rep.status, report, diagnostic }
        }
        Err(f) => failure_outcome(cfg, f),
    }
}

/// Parses arguments, runs the job and writes the report; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match JobConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = run(&cfg);
    if let Some(d) = &out.diagnostic {
        eprintln!("{d}");
    }
    match &cfg.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &out.report) {
                eprintln!("io_error: {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{}", out.report),
    }
    out.status
}
