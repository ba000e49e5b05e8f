//! Command-line front end for `spinlrl-core`.
//!
//! Exit codes: 0 all pass, 1 check or oracle failure, 2 usage or parse
//! error, 3 I/O error.

#![forbid(unsafe_code)]

pub mod args;
pub mod exit;
pub mod report;
pub mod runner;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;
use spinlrl_core::clifford::render_fixture;
use spinlrl_core::expr::{self, parse};
use spinlrl_core::oracle::{crosscheck_expr, Oracle, OracleConfig};
use spinlrl_core::verify::{self, Suite, DEFAULT_DIMS};
use spinlrl_core::{Dim, Error, GaussianRational, MAX_DIM};

use args::{Cli, Command, Format, ListArgs, MatricesArgs, OracleArgs, OracleOpts, ReduceArgs, VerifyArgs};
use report::Report;

/// Environment variable naming the default report directory.
pub const OUT_DIR_ENV: &str = "SPINLRL_OUT_DIR";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => p.into(),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<expr::ParseError> for CliError {
    fn from(e: expr::ParseError) -> Self {
        CliError::Usage(format!("parse error at {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Reduce(a) => cmd_reduce(&a, out),
        Command::Matrices(a) => cmd_matrices(&a, out),
        Command::Oracle(a) => cmd_oracle(&a, out),
        Command::List(a) => cmd_list(&a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "spinlrl: {e}");
            e.code()
        }
    }
}

/// Parses `3`, `2..4` or `2..=4` (both ends inclusive).
pub fn parse_dims(text: &str, large: bool) -> Result<Vec<usize>, CliError> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad dimension '{text}'")));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let d = num(text)?;
            (d, d)
        }
    };
    let max = if large { MAX_DIM } else { *DEFAULT_DIMS.end() };
    if lo > hi || lo < 2 || hi > max {
        let hint = if !large && hi <= MAX_DIM { " (d = 7, 8 need --large-d)" } else { "" };
        return Err(CliError::Usage(format!("dimension range '{text}' outside 2..{max}{hint}")));
    }
    Ok((lo..=hi).collect())
}

fn parse_suite(s: &str) -> Result<Suite, CliError> {
    Suite::parse(s).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        CliError::Usage(format!("unknown suite '{s}' (expected one of {})", names.join(", ")))
    })
}

fn oracle_config(o: &OracleOpts) -> OracleConfig {
    OracleConfig { trials: o.trials, seed: o.seed, max_degree: o.max_degree, min_k: o.min_k.min(0) }
}

fn dim(d: usize) -> Result<Dim, CliError> {
    Ok(Dim::new(d)?)
}

fn default_out_path(suite: &str, dims: &[usize], format: Format) -> Option<PathBuf> {
    let dir = std::env::var_os(OUT_DIR_ENV)?;
    let range = match dims {
        [d] => format!("d{d}"),
        _ => format!("d{}-{}", dims[0], dims[dims.len() - 1]),
    };
    Some(PathBuf::from(dir).join(format!("spinlrl-{suite}-{range}.{}", format.extension())))
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let suite = parse_suite(&a.suite)?;
    let dims = parse_dims(&a.d, a.large_d)?;
    let cfg = a.oracle.then(|| oracle_config(&a.oracle_opts));
    let mut reports = Vec::new();
    let mut blocking = false;
    for &d in &dims {
        let outcomes = runner::run_suite(suite, d, cfg.as_ref())?;
        blocking |= outcomes.iter().any(|o| o.blocking(a.strict));
        reports.push(Report::new(suite.name(), d, &outcomes, !a.no_timing));
    }
    let text = match a.format {
        Format::Json => report::render_json(&reports),
        Format::Markdown => report::render_markdown(&reports),
        Format::Text => report::render_text(&reports),
    };
    let path = a.out.clone().or_else(|| default_out_path(suite.name(), &dims, a.format));
    match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| CliError::Io(format!("{}: {e}", parent.display())))?;
            }
            std::fs::write(&p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            writeln!(err, "wrote {}", p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(if blocking { exit::FAILURE } else { exit::PASS })
}

fn parse_value(text: &str, d: Dim) -> Result<GaussianRational, CliError> {
    let bad = || CliError::Usage(format!("'{text}' is not a numeric value"));
    let v = expr::reduce(text, d).map_err(|_| bad())?;
    v.as_scalar().and_then(|c| c.as_constant()).ok_or_else(bad)
}

/// Parses `alpha=...,E=...`.
pub fn parse_sub(text: &str, d: Dim) -> Result<(Option<GaussianRational>, Option<GaussianRational>), CliError> {
    let (mut alpha, mut energy) = (None, None);
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| CliError::Usage(format!("expected name=value, got '{part}'")))?;
        match k.trim() {
            "alpha" => alpha = Some(parse_value(v.trim(), d)?),
            "E" => energy = Some(parse_value(v.trim(), d)?),
            other => return Err(CliError::Usage(format!("unknown parameter '{other}' (expected alpha or E)"))),
        }
    }
    Ok((alpha, energy))
}

pub fn cmd_reduce(a: &ReduceArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let d = dim(a.d)?;
    let mut value = expr::reduce(&a.expr, d)?;
    if a.adjoint {
        value = value.adjoint();
    }
    if let Some(sub) = &a.sub {
        let (alpha, energy) = parse_sub(sub, d)?;
        value = value.substitute(alpha.as_ref(), energy.as_ref());
    }
    writeln!(out, "{}", expr::format(&value))?;
    Ok(exit::PASS)
}

pub fn cmd_matrices(a: &MatricesArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    out.write_all(render_fixture(a.d)?.as_bytes())?;
    Ok(exit::PASS)
}

pub fn cmd_oracle(a: &OracleArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let d = dim(a.d)?;
    let lhs = parse(&a.lhs, d)?;
    let rhs = parse(&a.rhs, d)?;
    let cfg = oracle_config(&a.opts);
    let mut oracle = Oracle::new(d)?;
    match crosscheck_expr(&mut oracle, &lhs, &rhs, &cfg)? {
        Ok(()) => {
            writeln!(out, "confirmed: both sides agree on {} test functions (seed {})", cfg.trials, cfg.seed)?;
            Ok(exit::PASS)
        }
        Err(w) => {
            writeln!(out, "witness: the two sides differ")?;
            writeln!(out, "{w}")?;
            Ok(exit::FAILURE)
        }
    }
}

pub fn cmd_list(a: &ListArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let suite = parse_suite(&a.suite)?;
    let checks: Vec<_> = verify::list_checks().iter().filter(|c| suite.contains(c)).collect();
    match a.format {
        Format::Json => {
            let rows: Vec<_> = checks
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "id": c.id,
                        "suite": c.suite.name(),
                        "tier": c.tier.name(),
                        "dims": c.only_dim.map_or("all".to_string(), |d| d.to_string()),
                        "description": c.description,
                        "paperRef": c.paper_ref,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("list serializes"))?;
        }
        Format::Markdown => {
            writeln!(out, "| id | suite | tier | dims | identity |\n|---|---|---|---|---|")?;
            for c in checks {
                let dims = c.only_dim.map_or("all".to_string(), |d| d.to_string());
                writeln!(out, "| {} | {} | {} | {dims} | `{}` |", c.id, c.suite.name(), c.tier.name(), c.paper_ref.replace('|', "\\|"))?;
            }
        }
        Format::Text => {
            for c in checks {
                let dims = c.only_dim.map_or("all".to_string(), |d| format!("d={d}"));
                writeln!(out, "{:<22} {:<12} {:<13} {:<5} {}", c.id, c.suite.name(), c.tier.name(), dims, c.description)?;
            }
        }
    }
    Ok(exit::PASS)
}
