//! The `mobi` command line. Kept in the library so it can be driven from
//! tests with in-memory output; the binary only forwards process arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{MobiError, Result};
use crate::harness::{all_passed, AffineVerdict, AxiomReport};
use crate::registry::{algebras, build_algebra, space_entry, spaces, ParamSpec, SpaceConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mobi", version, about = "Check and sample mobi algebras and mobi spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Algebra,
    Space,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathFormat {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct Instance {
    /// Registry name, see `mobi list`
    #[arg(long)]
    pub name: String,
    /// Instance parameter as key=value; values are read as JSON when they parse
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
}

#[derive(Debug, clap::Args)]
pub struct Sampling {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, env = "MOBI_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Defaults to the instance's registered tolerance
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List registered algebras and spaces with their parameters
    List {
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Print the JSON schema of the listing instead
        #[arg(long)]
        schema: bool,
    },
    /// Run the axiom and property suites on an algebra or a space
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Test the interchange law that characterises affine spaces
    Affine {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Evaluate q(from, t, to) on an even grid of times
    Sample {
        #[command(flatten)]
        instance: Instance,
        /// Start point as a JSON array of coordinates
        #[arg(long)]
        from: String,
        /// End point as a JSON array of coordinates
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 11)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = PathFormat::Csv)]
        format: PathFormat,
        /// Output file, written atomically; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Published schema of `mobi list --format json`.
pub const LIST_SCHEMA: &str = r#"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "mobi catalog",
  "type": "object",
  "additionalProperties": false,
  "required": ["algebras", "spaces"],
  "properties": {
    "algebras": {
      "type": "array",
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["name", "description"],
        "properties": {
          "name": {"type": "string"},
          "description": {"type": "string"}
        }
      }
    },
    "spaces": {
      "type": "array",
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["name", "description", "params", "default_tol", "control"],
        "properties": {
          "name": {"type": "string"},
          "description": {"type": "string"},
          "params": {
            "type": "array",
            "items": {
              "type": "object",
              "additionalProperties": false,
              "required": ["name", "kind", "default", "description"],
              "properties": {
                "name": {"type": "string"},
                "kind": {"enum": ["number", "integer", "string", "numbers"]},
                "default": {},
                "description": {"type": "string"}
              }
            }
          },
          "default_tol": {"type": "number"},
          "control": {"type": "boolean"}
        }
      }
    }
  }
}"#;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Listing {
    pub algebras: Vec<AlgebraInfo>,
    pub spaces: Vec<SpaceInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraInfo {
    pub name: String,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceInfo {
    pub name: String,
    pub description: String,
    pub params: Vec<ParamSpec>,
    pub default_tol: f64,
    pub control: bool,
}

pub fn listing() -> Listing {
    Listing {
        algebras: algebras()
            .into_iter()
            .map(|e| AlgebraInfo { name: e.name.into(), description: e.description.into() })
            .collect(),
        spaces: spaces()
            .into_iter()
            .map(|e| SpaceInfo {
                name: e.name.into(),
                description: e.description.into(),
                params: e.params,
                default_tol: e.default_tol,
                control: e.control,
            })
            .collect(),
    }
}

#[derive(Debug, Serialize)]
struct VerifyOutput<'a> {
    target: &'static str,
    name: &'a str,
    params: &'a std::collections::BTreeMap<String, serde_json::Value>,
    seed: u64,
    samples: usize,
    tol: f64,
    passed: bool,
    reports: &'a [AxiomReport],
}

#[derive(Debug, Serialize)]
struct AffineOutput<'a> {
    name: &'a str,
    seed: u64,
    tol: f64,
    #[serde(flatten)]
    verdict: &'a AffineVerdict,
}

#[derive(Debug, Serialize)]
struct PathSample {
    t: f64,
    point: Vec<f64>,
}

/// Shortest form of `x` with 17 significant digits, trailing zeros removed.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = mantissa.strip_prefix('-').map_or(("", mantissa), |m| ("-", m));
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    if !(-7..17).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        let frac = if tail.is_empty() { String::new() } else { format!(".{tail}") };
        return format!("{sign}{head}{frac}e{exp}");
    }
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{digits}", "0".repeat((-point) as usize))
    } else if point as usize >= digits.len() {
        format!("{digits}{}", "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

fn parse_point(flag: &str, text: &str) -> Result<Vec<f64>> {
    serde_json::from_str::<Vec<f64>>(text)
        .map_err(|e| MobiError::Config(format!("--{flag} must be a JSON array of numbers: {e}")))
}

/// Writes through a temporary file in the target directory, so a failed
/// run never leaves a partial file behind.
fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn render_text(header: &str, reports: &[AxiomReport]) -> String {
    let mut s = format!("{header}\n");
    for r in reports {
        let status = if r.passed { "pass" } else { "FAIL" };
        s += &format!(
            "  {:<24} {status}  {}/{} failed  {}\n",
            r.axiom_id, r.failure_count, r.samples_tested, r.statement
        );
        if let Some(w) = r.first_witness() {
            s += &format!(
                "      witness {}: lhs {} rhs {} (distance {:e})\n",
                w.inputs.join(", "),
                w.lhs,
                w.rhs,
                w.dist
            );
        }
        if let Some(note) = &r.note {
            s += &format!("      note: {note}\n");
        }
    }
    s
}

fn run_command(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| MobiError::Config(format!("i/o error: {e}"));
    match cmd {
        Command::List { format, schema } => {
            if schema {
                writeln!(out, "{LIST_SCHEMA}").map_err(io)?;
                return Ok(EXIT_OK);
            }
            let listing = listing();
            match format {
                ReportFormat::Json => {
                    let json = serde_json::to_string_pretty(&listing).expect("serialisable");
                    writeln!(out, "{json}").map_err(io)?;
                }
                ReportFormat::Text => {
                    writeln!(out, "algebras:").map_err(io)?;
                    for a in &listing.algebras {
                        writeln!(out, "  {:<20} {}", a.name, a.description).map_err(io)?;
                    }
                    writeln!(out, "spaces:").map_err(io)?;
                    for s in &listing.spaces {
                        writeln!(out, "  {:<20} {}", s.name, s.description).map_err(io)?;
                        for p in &s.params {
                            writeln!(out, "      {}={}  {}", p.name, p.default, p.description)
                                .map_err(io)?;
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { target, instance, sampling, format } => {
            if sampling.samples == 0 {
                return Err(MobiError::Config("--samples must be at least 1".into()));
            }
            let cfg = SpaceConfig::parse(&instance.name, &instance.params)?;
            let (tol, reports, target_name) = match target {
                Target::Algebra => {
                    let alg = build_algebra(&cfg)?;
                    let tol = sampling.tol.unwrap_or(1e-9);
                    (tol, alg.verify(sampling.seed, sampling.samples, tol), "algebra")
                }
                Target::Space => {
                    let entry = space_entry(&cfg.name)?;
                    let space = entry.build(&cfg.params)?;
                    let tol = sampling.tol.unwrap_or(entry.default_tol);
                    (tol, space.verify(sampling.seed, sampling.samples, tol), "space")
                }
            };
            let passed = all_passed(&reports);
            match format {
                ReportFormat::Json => {
                    let doc = VerifyOutput {
                        target: target_name,
                        name: &cfg.name,
                        params: &cfg.params,
                        seed: sampling.seed,
                        samples: sampling.samples,
                        tol,
                        passed,
                        reports: &reports,
                    };
                    let json = serde_json::to_string_pretty(&doc).expect("serialisable");
                    writeln!(out, "{json}").map_err(io)?;
                }
                ReportFormat::Text => {
                    let header = format!(
                        "{target_name} {}: {} (seed {}, {} samples, tol {:e})",
                        cfg.name,
                        if passed { "PASS" } else { "FAIL" },
                        sampling.seed,
                        sampling.samples,
                        tol
                    );
                    write!(out, "{}", render_text(&header, &reports)).map_err(io)?;
                }
            }
            Ok(if passed { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Affine { instance, sampling } => {
            let cfg = SpaceConfig::parse(&instance.name, &instance.params)?;
            let entry = space_entry(&cfg.name)?;
            let space = entry.build(&cfg.params)?;
            let tol = sampling.tol.unwrap_or(entry.default_tol);
            let verdict = space.affine(sampling.seed, sampling.samples, tol);
            let doc = AffineOutput { name: &cfg.name, seed: sampling.seed, tol, verdict: &verdict };
            let json = serde_json::to_string_pretty(&doc).expect("serialisable");
            writeln!(out, "{json}").map_err(io)?;
            Ok(if verdict.affine { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Sample { instance, from, to, steps, format, out: path } => {
            if steps < 2 {
                return Err(MobiError::Config("--steps must be at least 2".into()));
            }
            let cfg = SpaceConfig::parse(&instance.name, &instance.params)?;
            let space = space_entry(&cfg.name)?.build(&cfg.params)?;
            let (x, y) = (parse_point("from", &from)?, parse_point("to", &to)?);
            let times: Vec<f64> = (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect();
            let points = space.path(&x, &y, &times)?;
            let body = match format {
                PathFormat::Csv => {
                    let width = points.first().map_or(0, Vec::len);
                    let mut s = String::from("t");
                    for i in 0..width {
                        s += &format!(",c{i}");
                    }
                    s.push('\n');
                    for (t, p) in times.iter().zip(&points) {
                        s += &format_float(*t);
                        for c in p {
                            s.push(',');
                            s += &format_float(*c);
                        }
                        s.push('\n');
                    }
                    s
                }
                PathFormat::Json => {
                    let rows: Vec<PathSample> = times
                        .iter()
                        .zip(points)
                        .map(|(&t, point)| PathSample { t, point })
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("serialisable") + "\n"
                }
            };
            match path {
                Some(p) => write_atomically(&p, body.as_bytes()).map_err(io)?,
                None => out.write_all(body.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 success, 1 a law or the affine test failed,
/// 2 a usage or configuration error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run_command(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONFIG
        }
    }
}
