//! Command-line front end. `run` does all the work so it can be driven from
//! tests without spawning a process.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use bandspec_core::verify::{self, VerifyConfig, DEFAULT_CAP, DEFAULT_TOL};
use bandspec_core::{parse_expr_with, GraphExpr, OperatorKind, ParseError};
use clap::{Parser, Subcommand};

use crate::diagram::render_svg;
use crate::document::{SpectrumDocument, VerificationSummary};
use crate::formats::{parse_mult_table, write_edge_list, FileLoader};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "bandspec", version, about = "Band spectra of Cayley graph compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the band spectrum of an expression.
    Spectrum {
        expr: String,
        /// adjacency, laplacian, markov or normalized-laplacian
        #[arg(long, default_value = "adjacency")]
        kind: OperatorKind,
        #[arg(long)]
        json: bool,
    },
    /// Check a finite truncation's eigenvalues against the predicted bands.
    Verify {
        expr: String,
        /// Truncation parameter: cycle length, torus side or minimum tree-ball size.
        #[arg(long = "trunc", default_value_t = 16)]
        truncation: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Largest vertex count to eigensolve.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write an SVG band diagram.
    Diagram {
        expr: String,
        #[arg(long, default_value = "adjacency")]
        kind: OperatorKind,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the edge list of a Cayley graph given a multiplication table file.
    Cayley {
        table: PathBuf,
        /// Comma-separated generator indices; must be closed under inverses.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
    },
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "{msg}");
            EXIT_USAGE
        }
    }
}

/// `error: <kind> at position p` followed by the input with a caret under the
/// offending character.
pub fn annotate_parse_error(text: &str, e: &ParseError) -> String {
    let column = text.get(..e.position).map_or(e.position, |s| s.chars().count());
    format!("error: {e}\n  {text}\n  {}^", " ".repeat(column))
}

fn parse(text: &str) -> Result<GraphExpr, String> {
    parse_expr_with(text, &FileLoader).map_err(|e| annotate_parse_error(text, &e))
}

fn degree_for(e: &GraphExpr) -> Option<usize> {
    e.eval_meta().map(|m| m.degree).or_else(|| e.regular_degree())
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<u8, String> {
    let io = |e: std::io::Error| format!("error: {e}");
    match command {
        Command::Spectrum { expr, kind, json } => {
            let e = parse(&expr)?;
            let s = e.derived_spectrum(kind).map_err(|err| format!("error: {err}"))?;
            let doc = SpectrumDocument::new(&expr, kind, degree_for(&e), &s);
            let text = if json { doc.to_json() + "\n" } else { doc.to_text() };
            stdout.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { expr, truncation, tol, cap, json } => {
            let e = parse(&expr)?;
            let cfg = VerifyConfig { cap, tol };
            let report = verify::verify_containment(&e, truncation, &cfg).map_err(|err| format!("error: {err}"))?;
            let mut doc = SpectrumDocument::new(&expr, OperatorKind::Adjacency, degree_for(&e), &report.predicted);
            let summary = VerificationSummary::from(&report);
            let passed = summary.passed;
            let text = if json {
                doc.verification = Some(summary);
                doc.to_json() + "\n"
            } else {
                verification_text(&doc, &summary)
            };
            stdout.write_all(text.as_bytes()).map_err(io)?;
            Ok(if passed { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Diagram { expr, kind, out } => {
            let e = parse(&expr)?;
            let s = e.derived_spectrum(kind).map_err(|err| format!("error: {err}"))?;
            fs::write(&out, render_svg(&s, &expr)).map_err(|err| format!("error: {}: {err}", out.display()))?;
            Ok(EXIT_OK)
        }
        Command::Cayley { table, gens } => {
            let text = fs::read_to_string(&table).map_err(|err| format!("error: {}: {err}", table.display()))?;
            let group = parse_mult_table(&text).map_err(|err| format!("error: {}: {err}", table.display()))?;
            let g = bandspec_core::graph::cayley_graph(&group, &gens).map_err(|err| format!("error: {err}"))?;
            stdout.write_all(write_edge_list(&g).as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn verification_text(doc: &SpectrumDocument, v: &VerificationSummary) -> String {
    use crate::document::format_sig;
    let mut out = doc.to_text();
    out.push_str(&format!(
        "truncation: {}  vertices: {}  eigenvalues: {} ({} distinct)\n",
        v.truncation, v.vertices, v.eigenvalue_count, v.distinct_eigenvalues
    ));
    out.push_str(&format!("containment violations: {}\n", v.containment_violations.len()));
    for w in &v.containment_violations {
        out.push_str(&format!("  {} (distance {})\n", format_sig(w.eigenvalue, 12), format_sig(w.distance, 3)));
    }
    let uncovered = if v.uncovered_bands.is_empty() {
        "none".to_owned()
    } else {
        v.uncovered_bands.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    };
    out.push_str(&format!("uncovered bands: {uncovered}\n"));
    out.push_str(&format!("max band distance: {}\n", format_sig(v.max_band_distance, 6)));
    out.push_str(if v.passed { "PASS\n" } else { "FAIL\n" });
    out
}
