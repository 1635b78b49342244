//! The `ltlf` command-line front end.
//!
//! Exit codes: `sat`/`oracle sat` return 0 for satisfiable and 1 for
//! unsatisfiable, `valid`/`oracle valid` return 0 for valid and 1 for
//! invalid; every error returns 2.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::formula::{encode, parse, Formula, ParseError};
use crate::oracle;
use crate::semantics::{self, Trace};
use crate::tableau::{self, ProofGraph, SatVerdict, SearchStats, ValidityVerdict};

pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ltlf",
    version,
    about = "Decide and evaluate LTL formulae over finite traces"
)]
struct Cli {
    /// Print results as a JSON object.
    #[arg(long, global = true)]
    json: bool,

    /// Warn when the start node's closure has more formulae than this.
    #[arg(long, global = true, default_value_t = 16, value_name = "N")]
    max_closure: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide satisfiability; prints a witness trace when satisfiable.
    Sat { formula: String },
    /// Decide validity at every position; prints a countermodel when invalid.
    Valid {
        formula: String,
        /// Only require the formula at the first position.
        #[arg(long)]
        at_root: bool,
    },
    /// Evaluate a formula over a JSON trace file.
    Eval {
        formula: String,
        #[arg(long, value_name = "FILE")]
        trace: PathBuf,
        /// 1-based position.
        #[arg(long, default_value_t = 1, value_name = "I")]
        pos: usize,
    },
    /// Write the full proof graph in Graphviz DOT.
    Graph {
        formula: String,
        #[arg(long, value_name = "FILE")]
        dot: PathBuf,
    },
    /// Brute-force answers by trace enumeration, for cross-checking.
    Oracle {
        mode: OracleMode,
        formula: String,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleMode {
    Sat,
    Valid,
}

struct Failure(String);

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

fn parse_formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e: ParseError| {
        let caret = format!(
            "{}^",
            " ".repeat(text[..e.position.min(text.len())].chars().count())
        );
        Failure(format!("cannot parse formula: {e}\n  {text}\n  {caret}"))
    })
}

fn trace_json(t: &Trace) -> Value {
    serde_json::to_value(t).expect("trace serializes")
}

fn stats_json(stats: &SearchStats) -> Value {
    json!({ "nodes": stats.nodes, "expansions": stats.expansions })
}

fn guard(query: &Formula, limit: usize, err: &mut dyn Write) -> std::io::Result<()> {
    let size = tableau::root_closure_size(query);
    if size > limit {
        writeln!(
            err,
            "warning: start node closure has {size} formulae (limit {limit}); the search may be slow"
        )?;
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Sat { formula } => {
            let f = parse_formula(formula)?;
            guard(&f, cli.max_closure, err)?;
            let outcome = tableau::decide_sat(&f);
            report_sat(
                cli.json,
                &outcome.verdict,
                Some(stats_json(&outcome.stats)),
                out,
            )
        }
        Command::Valid { formula, at_root } => {
            let f = parse_formula(formula)?;
            let query = if *at_root {
                encode::neg(f.clone())
            } else {
                encode::eventually(encode::neg(f.clone()))
            };
            guard(&query, cli.max_closure, err)?;
            let outcome = if *at_root {
                tableau::decide_valid_at_root(&f)
            } else {
                tableau::decide_valid(&f)
            };
            report_valid(
                cli.json,
                &outcome.verdict,
                Some(stats_json(&outcome.stats)),
                out,
            )
        }
        Command::Eval {
            formula,
            trace,
            pos,
        } => {
            let f = parse_formula(formula)?;
            let text = std::fs::read_to_string(trace)
                .map_err(|e| Failure(format!("cannot read {}: {e}", trace.display())))?;
            let t = Trace::from_json(&text)
                .map_err(|e| Failure(format!("bad trace file {}: {e}", trace.display())))?;
            let here = semantics::eval(&t, *pos, &f).map_err(|e| Failure(e.to_string()))?;
            let everywhere = semantics::satisfies(&t, &f);
            if cli.json {
                let v =
                    json!({ "position": pos, "at_position": here, "all_positions": everywhere });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "at position {pos}: {here}")?;
                writeln!(out, "all positions: {everywhere}")?;
            }
            Ok(0)
        }
        Command::Graph { formula, dot } => {
            let f = parse_formula(formula)?;
            guard(&f, cli.max_closure, err)?;
            let graph = ProofGraph::build(&f);
            std::fs::write(dot, tableau::to_dot(&graph, true))
                .map_err(|e| Failure(format!("cannot write {}: {e}", dot.display())))?;
            if cli.json {
                let v = json!({
                    "nodes": graph.node_count(),
                    "edges": graph.edge_count(),
                    "roots": graph.roots().len(),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(
                    out,
                    "wrote {} nodes, {} edges to {}",
                    graph.node_count(),
                    graph.edge_count(),
                    dot.display()
                )?;
            }
            Ok(0)
        }
        Command::Oracle {
            mode,
            formula,
            max_len,
        } => {
            if *max_len == 0 {
                return Err(Failure("--max-len must be at least 1".to_string()));
            }
            let f = parse_formula(formula)?;
            let stats = json!({ "max_len": max_len });
            match mode {
                OracleMode::Sat => {
                    let verdict = match oracle::brute_force_sat(&f, *max_len) {
                        Some(t) => SatVerdict::Sat(t),
                        None => SatVerdict::Unsat,
                    };
                    report_sat(cli.json, &verdict, Some(stats), out)
                }
                OracleMode::Valid => {
                    let verdict = match oracle::brute_force_valid(&f, *max_len) {
                        Some(t) => ValidityVerdict::Invalid(t),
                        None => ValidityVerdict::Valid,
                    };
                    report_valid(cli.json, &verdict, Some(stats), out)
                }
            }
        }
    }
}

fn report_sat(
    as_json: bool,
    verdict: &SatVerdict,
    stats: Option<Value>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if as_json {
        let mut v = json!({ "verdict": if verdict.is_sat() { "sat" } else { "unsat" } });
        if let Some(w) = verdict.witness() {
            v["witness"] = trace_json(w);
        }
        if let Some(s) = stats {
            v["stats"] = s;
        }
        writeln!(out, "{v}")?;
    } else {
        match verdict.witness() {
            Some(w) => writeln!(out, "sat\n{}", w.to_json())?,
            None => writeln!(out, "unsat")?,
        }
    }
    Ok(if verdict.is_sat() { 0 } else { 1 })
}

fn report_valid(
    as_json: bool,
    verdict: &ValidityVerdict,
    stats: Option<Value>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if as_json {
        let mut v = json!({ "verdict": if verdict.is_valid() { "valid" } else { "invalid" } });
        if let Some(c) = verdict.countermodel() {
            v["countermodel"] = trace_json(c);
        }
        if let Some(s) = stats {
            v["stats"] = s;
        }
        writeln!(out, "{v}")?;
    } else {
        match verdict.countermodel() {
            Some(c) => writeln!(out, "invalid\n{}", c.to_json())?,
            None => writeln!(out, "valid")?,
        }
    }
    Ok(if verdict.is_valid() { 0 } else { 1 })
}
