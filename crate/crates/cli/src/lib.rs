//! Command-line front end: parse a spec, run one analysis, and render the
//! result as a plain-text table or a versioned JSON report.

pub mod element_file;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ejalab::composite::{
    check_square_dimensions, lt_feasible, real_counterexample_model, tensor_construct, verify_axioms, AxiomReport,
    LtReport, SquareDimensionReport,
};
use ejalab::jordan::spectral_decompose_seeded;
use ejalab::spec_text::{parse_spec_raw, RawFactor};
use ejalab::{Error, ScalarKind, SimpleFactor, DEFAULT_SEED};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "ejalab-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "ejalab", version, about = "Jordan-algebraic quantum logics and local tomography")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Numerical tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Seed for every randomized step (decimal or 0x-prefixed hex).
    #[arg(long, global = true, env = "EJALAB_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Sampled pairs per checked property.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,

    /// Print the JSON report instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on worker threads for sampled sweeps.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension and rank of each simple factor.
    Classify { spec: String },
    /// Local-tomography feasibility.
    Lt { spec: String },
    /// Build the Kronecker tensor model and check its dimension and rank.
    Tensor { spec: String },
    /// Check the tensor-product conditions C1-C5 on sampled propositions.
    Verify {
        spec: String,
        #[arg(long, value_enum, default_value_t = ModelArg::ComplexKron)]
        model: ModelArg,
    },
    /// Spectral decomposition of an element read from a JSON file.
    Spectral { spec: String, element: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    ComplexKron,
    RealKron,
}

pub fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub command: String,
    pub spec: String,
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    pub result: Value,
    pub tool_version: &'static str,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// A finished command: its report, its table rendering, and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub report: ReportDocument,
    pub text: String,
    pub exit_code: u8,
}

/// 1 for infeasible verdicts, 2 for usage and parse errors, 3 for numeric
/// failures.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Infeasible(_) => 1,
        Error::Usage(_) | Error::Domain(_) | Error::Parse { .. } => 2,
        Error::Numeric { .. } | Error::Conditioning { .. } => 3,
    }
}

impl Cli {
    fn spec(&self) -> &str {
        match &self.command {
            Command::Classify { spec }
            | Command::Lt { spec }
            | Command::Tensor { spec }
            | Command::Verify { spec, .. }
            | Command::Spectral { spec, .. } => spec,
        }
    }

    fn name(&self) -> String {
        match &self.command {
            Command::Classify { .. } => "classify".into(),
            Command::Lt { .. } => "lt".into(),
            Command::Tensor { .. } => "tensor".into(),
            Command::Verify { model, .. } => format!(
                "verify --model {}",
                model.to_possible_value().expect("no skipped variants").get_name()
            ),
            Command::Spectral { element, .. } => format!("spectral {}", element.display()),
        }
    }

    fn document(&self, canonical: String, result: Value) -> ReportDocument {
        ReportDocument {
            schema: SCHEMA,
            command: self.name(),
            spec: canonical,
            seed: self.seed,
            tolerance: self.tol,
            samples: self.samples,
            result,
            tool_version: TOOL_VERSION,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(Error::Usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    let parsed = parse_spec_raw(cli.spec())?;
    let desc = parsed.descriptor.clone();
    let canonical = desc.to_string();
    match &cli.command {
        Command::Classify { .. } => {
            let (value, text) = classify(&desc);
            Ok(Outcome {
                report: cli.document(canonical, value),
                text,
                exit_code: 0,
            })
        }
        Command::Lt { .. } => {
            let report = lt_feasible(&desc);
            Ok(Outcome {
                text: lt_text(&report),
                exit_code: if report.feasible { 0 } else { 1 },
                report: cli.document(canonical, to_value(&report)),
            })
        }
        Command::Tensor { .. } => {
            let model = tensor_construct(&desc)?;
            let report = check_square_dimensions(&model)?;
            Ok(Outcome {
                text: tensor_text(&report),
                exit_code: if report.passed { 0 } else { 1 },
                report: cli.document(canonical, to_value(&report)),
            })
        }
        Command::Verify { model, .. } => {
            let model = match model {
                ModelArg::ComplexKron => tensor_construct(&desc)?,
                ModelArg::RealKron => match parsed.raw.as_slice() {
                    [RawFactor::Hermitian {
                        k,
                        scalar: ScalarKind::Real,
                    }] => real_counterexample_model(*k)?,
                    _ => {
                        return Err(Error::Usage(
                            "--model real-kron needs a single real matrix factor H(k,R)".into(),
                        ))
                    }
                },
            };
            let report = verify_axioms(&model, cli.samples, cli.seed, cli.tol)?;
            Ok(Outcome {
                text: verify_text(&report),
                exit_code: if report.passed { 0 } else { 1 },
                report: cli.document(canonical, to_value(&report)),
            })
        }
        Command::Spectral { element, .. } => {
            let algebra = element_file::algebra_for_raw(&parsed.raw)?;
            let raw_text = std::fs::read_to_string(element)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", element.display())))?;
            let doc: Value = serde_json::from_str(&raw_text)
                .map_err(|e| Error::Usage(format!("{} is not valid JSON: {e}", element.display())))?;
            let a = element_file::parse_element(&algebra, &doc, cli.tol)?;
            let d = spectral_decompose_seeded(&a, cli.tol, cli.seed)?;
            let frame: Vec<Value> = d
                .pairs()
                .iter()
                .map(|(r, q)| json!({ "eigenvalue": r, "idempotent": element_file::element_to_json(q) }))
                .collect();
            let result = json!({
                "algebra": algebra.to_string(),
                "rank": algebra.rank(),
                "eigenvalues": d.eigenvalues(),
                "frame": frame,
                "reconstruction_residual": d.reconstruct().dist(&a),
                "completeness_residual": d.completeness_residual(),
                "orthogonality_residual": d.orthogonality_residual(),
            });
            let mut text = format!("algebra: {algebra} (rank {})\n", algebra.rank());
            for (i, r) in d.eigenvalues().iter().enumerate() {
                let _ = writeln!(text, "  q{}: eigenvalue {r:.12}", i + 1);
            }
            let _ = writeln!(
                text,
                "residuals: reconstruction {:.2e}, completeness {:.2e}, orthogonality {:.2e}",
                d.reconstruct().dist(&a),
                d.completeness_residual(),
                d.orthogonality_residual()
            );
            Ok(Outcome {
                report: cli.document(canonical, result),
                text,
                exit_code: 0,
            })
        }
    }
}

#[derive(Serialize)]
struct ClassRow {
    factor: String,
    #[serde(flatten)]
    kind: SimpleFactor,
    n: usize,
    k: usize,
}

fn classify(desc: &ejalab::AlgebraDescriptor) -> (Value, String) {
    let rows: Vec<ClassRow> = desc
        .factors()
        .iter()
        .map(|f| ClassRow {
            factor: f.to_string(),
            kind: *f,
            n: f.dim(),
            k: f.rank(),
        })
        .collect();
    let mut text = format!("{:<12} {:>6} {:>4}\n", "factor", "n", "k");
    for r in &rows {
        let _ = writeln!(text, "{:<12} {:>6} {:>4}", r.factor, r.n, r.k);
    }
    let _ = writeln!(text, "{:<12} {:>6} {:>4}", "total", desc.dim(), desc.rank());
    let value = json!({
        "factors": to_value(&rows),
        "total_dim": desc.dim(),
        "total_rank": desc.rank(),
        "simple": desc.is_simple(),
    });
    (value, text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn lt_text(r: &LtReport) -> String {
    let mut s = format!(
        "spec: {}\nverdict: {}\n",
        r.spec,
        if r.feasible { "feasible" } else { "infeasible" }
    );
    let _ = writeln!(s, "{:<12} {:>6} {:>4}  feasible", "factor", "n", "k");
    for f in &r.factors {
        let _ = writeln!(s, "{:<12} {:>6} {:>4}  {}", f.factor, f.dim, f.rank, yes_no(f.feasible));
        if let Some(w) = &f.witness {
            let _ = writeln!(s, "  witness n^2 | real | complex | quaternion (rank {})", w.required_rank);
            let _ = writeln!(
                s,
                "          {} | {} | {} | {}",
                w.required_dim, w.candidate_real, w.candidate_complex, w.candidate_quaternion
            );
        }
        if let Some(c) = &f.caveat {
            let _ = writeln!(s, "  caveat: {c}");
        }
    }
    s
}

fn tensor_text(r: &SquareDimensionReport) -> String {
    let mut s = format!("base: {} (realized as {})\ntarget: {}\n", r.model.base, r.model.realized_base, r.model.target);
    let _ = writeln!(s, "n: {} = {}² {}", r.target_dim, r.base_dim, if r.dim_holds { "ok" } else { "FAIL" });
    let _ = writeln!(s, "k: {} = {}² {}", r.target_rank, r.base_rank, if r.rank_holds { "ok" } else { "FAIL" });
    let _ = writeln!(
        s,
        "basis images: rank {}/{} {}",
        r.basis_image_rank,
        r.basis_image_count,
        if r.basis_image_independent { "ok" } else { "FAIL" }
    );
    for n in &r.model.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn verify_text(r: &AxiomReport) -> String {
    let mut s = format!("model: {} {} -> {}\n", r.model.kind, r.model.realized_base, r.model.target);
    for v in &r.verdicts {
        let status = if v.passed { "PASS" } else { "FAIL" };
        if v.name == "C5" {
            let _ = writeln!(s, "{}: {status} rank {}/{}", v.name, r.span_rank.rank, r.span_rank.target_dim);
        } else {
            let _ = writeln!(
                s,
                "{}: {status} ({} checks, max residual {:.2e})",
                v.name, v.checked, v.max_residual
            );
        }
    }
    let _ = writeln!(s, "seed: {:#x}, tolerance: {:e}", r.seed, r.tolerance);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Outcome, Error> {
        let mut full = vec!["ejalab"];
        full.extend_from_slice(args);
        execute(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn seeds_accept_hex_and_decimal() {
        assert_eq!(parse_seed("0xE7A1"), Ok(0xE7A1));
        assert_eq!(parse_seed("42"), Ok(42));
        assert!(parse_seed("0xEJA1").is_err());
    }

    #[test]
    fn lt_exit_codes() {
        assert_eq!(run(&["lt", "H(3,O)"]).unwrap().exit_code, 1);
        assert_eq!(run(&["lt", "H(3,C) (+) spin(5) (+) R"]).unwrap().exit_code, 0);
        let err = run(&["lt", "H(4,O)"]).unwrap_err();
        assert_eq!(exit_code_for(&err), 2);
    }

    #[test]
    fn tensor_of_infeasible_spec_exits_one() {
        let err = run(&["tensor", "H(3,R)"]).unwrap_err();
        assert_eq!(exit_code_for(&err), 1);
    }

    #[test]
    fn real_kron_needs_a_real_matrix() {
        let err = run(&["verify", "H(2,C)", "--model", "real-kron"]).unwrap_err();
        assert_eq!(exit_code_for(&err), 2);
    }

    #[test]
    fn reports_are_byte_stable() {
        let a = run(&["verify", "H(2,C)", "--samples", "10"]).unwrap().report.to_json();
        let b = run(&["verify", "H(2,C)", "--samples", "10"]).unwrap().report.to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": \"ejalab-report/1\""));
    }
}
