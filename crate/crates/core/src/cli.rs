//! The `recsym` command line: `eval`, `check`, `search` and `boost`.
//!
//! Exit codes are 0 for success or an expected outcome, 1 for a verification
//! failure and 2 for usage, parse or evaluation errors. Diagnostics go to the
//! error stream only.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value as Json;

use crate::checker::{self, identities::IDENTITIES, Counterexample, SampleConfig, DEFAULT_SEED};
use crate::dynamic::AnyQuat;
use crate::expr::{evaluate, parse, Binding, Expr, ExprError, ExprKind, Func, RealLit, Span, Value};
use crate::quat::Rule;
use crate::scalar::{Backend, CScalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "recsym", version, about = "Compose 4-vectors under the Lorentz-Einstein and reciprocal-symmetric rules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression such as `qform(le((1;1,0,0),(13;0,0,5)))`.
    Eval(EvalArgs),
    /// Run registered identities over seeded samples.
    Check(CheckArgs),
    /// Look for a witness against a registered property.
    Search(SearchArgs),
    /// Build the boost 4-vector of a velocity (c = 1), optionally composed with a second one.
    Boost(BoostArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    expr: String,
    /// Bind a variable; later bindings may use earlier ones.
    #[arg(long = "let", value_name = "NAME=QUAT")]
    bindings: Vec<String>,
    #[arg(long, default_value = "exact", value_parser = parse_backend)]
    backend: Backend,
    /// Print the value as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SamplingArgs {
    #[arg(long, env = "RECSYM_SEED")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value = "exact", value_parser = parse_backend)]
    backend: Backend,
}

impl SamplingArgs {
    fn config(&self) -> SampleConfig {
        SampleConfig {
            seed: self.seed.unwrap_or(DEFAULT_SEED),
            count: self.count,
            backend: self.backend,
            ..SampleConfig::default()
        }
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Identity to run; repeat for several. All identities run when omitted.
    #[arg(long = "id", value_name = "IDENTITY_ID")]
    ids: Vec<String>,
    #[command(flatten)]
    sampling: SamplingArgs,
    /// Write the JSON report array to PATH (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long = "id", value_name = "PROPERTY_ID")]
    id: String,
    #[command(flatten)]
    sampling: SamplingArgs,
    /// Print the search report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct BoostArgs {
    #[arg(allow_hyphen_values = true)]
    vx: String,
    #[arg(allow_hyphen_values = true)]
    vy: String,
    #[arg(allow_hyphen_values = true)]
    vz: String,
    #[arg(long, num_args = 3, value_names = ["VX2", "VY2", "VZ2"], allow_hyphen_values = true)]
    compose: Option<Vec<String>>,
    #[arg(long, default_value = "le", requires = "compose", value_parser = parse_rule)]
    rule: Rule,
    #[arg(long, default_value = "float", value_parser = parse_backend)]
    backend: Backend,
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse()
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse()
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => eval(a, out),
        Command::Check(a) => check(a, out, err),
        Command::Search(a) => search(a, out),
        Command::Boost(a) => boost(a, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, String>;

fn io(e: std::io::Error) -> String {
    e.to_string()
}

/// `error` text followed by the offending source line and a caret marker.
fn diagnostic(source: &str, e: &ExprError) -> String {
    let Span { start, end, line, column } = e.span;
    let text = source.lines().nth(line - 1).unwrap_or("");
    let width = end.saturating_sub(start).clamp(1, text.len().saturating_sub(column - 1).max(1));
    format!("{e}\n  {text}\n  {}{}", " ".repeat(column - 1), "^".repeat(width))
}

fn eval(a: EvalArgs, out: &mut dyn Write) -> CmdResult {
    let mut bindings: Vec<Binding> = Vec::new();
    for binding in &a.bindings {
        let (name, source) = binding.split_once('=').ok_or_else(|| format!("--let expects NAME=QUAT, got `{binding}`"))?;
        let name = name.trim();
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            && name != "i"
            && Func::from_name(name).is_none();
        if !valid {
            return Err(format!("`{name}` is not a usable variable name"));
        }
        if bindings.iter().any(|b| b.name == name) {
            return Err(format!("variable `{name}` bound more than once"));
        }
        let value = parse(source)
            .and_then(|e| evaluate(&e, &bindings, a.backend))
            .map_err(|e| format!("in --let {name}: {}", diagnostic(source, &e)))?;
        let Value::Quat(q) = value else {
            return Err(format!("--let {name}: value is not a 4-vector"));
        };
        bindings.push(Binding::new(name, q));
    }
    let value = parse(&a.expr)
        .and_then(|e| evaluate(&e, &bindings, a.backend))
        .map_err(|e| diagnostic(&a.expr, &e))?;
    if a.json {
        let text = serde_json::to_string(&value).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(io)?;
    } else {
        writeln!(out, "{value}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn check(a: CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let cfg = a.sampling.config();
    let ids: Vec<String> = if a.ids.is_empty() { IDENTITIES.iter().map(|i| i.id.to_string()).collect() } else { a.ids };
    let reports = ids
        .iter()
        .map(|id| checker::check_identity(id, &cfg))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let all_passed = reports.iter().all(|r| r.passed);

    let json_to_stdout = a.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    // With the report going to stdout the human summary moves to stderr.
    let human: &mut dyn Write = if json_to_stdout { err } else { out };
    for r in &reports {
        writeln!(
            human,
            "{} {} [{}] {} samples, worst residual abs {:.3e} rel {:.3e}, {:.1} ms",
            if r.passed { "PASS" } else { "FAIL" },
            r.identity_id,
            r.backend,
            r.samples_run,
            r.worst_abs_residual,
            r.worst_rel_residual,
            r.elapsed_ms
        )
        .map_err(io)?;
        if let Some(c) = &r.counterexample {
            write_counterexample(human, c)?;
        }
    }
    if let Some(path) = &a.json {
        let text = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
        if json_to_stdout {
            writeln!(out, "{text}").map_err(io)?;
        } else {
            std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILED })
}

fn search(a: SearchArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = a.sampling.config();
    let report = checker::run_search(&a.id, &cfg).map_err(|e| e.to_string())?;
    if a.json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(io)?;
    } else {
        match &report.witness {
            Some(w) => {
                writeln!(out, "{}: witness found [{}]", report.property_id, report.backend).map_err(io)?;
                write_counterexample(out, w)?;
            }
            None => writeln!(out, "no counterexample in {} samples", report.samples_run).map_err(io)?,
        }
    }
    Ok(if report.matches_expectation { EXIT_OK } else { EXIT_FAILED })
}

fn write_counterexample(out: &mut dyn Write, c: &Counterexample) -> Result<(), String> {
    writeln!(out, "  stream position {}", c.stream_position).map_err(io)?;
    for (k, input) in c.inputs.iter().enumerate() {
        writeln!(out, "  input {}: {}", k + 1, render_json(input)).map_err(io)?;
    }
    writeln!(out, "  lhs: {}", render_json(&c.lhs)).map_err(io)?;
    writeln!(out, "  rhs: {}", render_json(&c.rhs)).map_err(io)?;
    writeln!(out, "  residual: {:.3e}", c.residual).map_err(io)
}

/// Renders report JSON (4-vectors, matrices, scalars, arrays) in the
/// notation the expression language accepts.
fn render_json(value: &Json) -> String {
    if let Ok(q) = serde_json::from_value::<AnyQuat>(value.clone()) {
        return q.to_string();
    }
    if let Ok(s) = serde_json::from_value::<CScalar>(value.clone()) {
        return s.to_string();
    }
    match value {
        Json::Array(items) => format!("[{}]", items.iter().map(render_json).collect::<Vec<_>>().join(", ")),
        Json::Object(map) if map.contains_key("m") => render_json(&map["m"]),
        Json::Object(map) if map.contains_key("error") => format!("error: {}", map["error"].as_str().unwrap_or("?")),
        other => other.to_string(),
    }
}

fn boost(a: BoostArgs, out: &mut dyn Write) -> CmdResult {
    let velocity = |parts: [&String; 3]| -> Result<Expr, String> {
        let lits = parts.map(|p| RealLit::parse(p).map_err(|e| format!("`{p}`: {}", e.kind)));
        let [x, y, z] = lits;
        Ok(Expr { kind: ExprKind::Boost([x?, y?, z?]), span: Span::default() })
    };
    let first = velocity([&a.vx, &a.vy, &a.vz])?;
    let expr = match &a.compose {
        None => first,
        Some(second) => {
            let second = velocity([&second[0], &second[1], &second[2]])?;
            let func = match a.rule {
                Rule::LorentzEinstein => Func::Le,
                Rule::ReciprocalSymmetric => Func::Rs,
            };
            Expr { kind: ExprKind::Call { func, args: vec![first, second] }, span: Span::default() }
        }
    };
    let value = evaluate(&expr, &[], a.backend).map_err(|e| e.kind.to_string())?;
    let Value::Quat(q) = value else { unreachable!("boosts and compositions are 4-vectors") };
    writeln!(out, "{q}").map_err(io)?;
    writeln!(out, "qform = {}", q.qform()).map_err(io)?;
    Ok(EXIT_OK)
}
