//! Report assembly and rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use spinlrl_core::expr;
use spinlrl_core::verify::Tier;

use crate::runner::Outcome;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub d: usize,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckEntry {
    pub id: String,
    pub paper_ref: String,
    pub tier: String,
    pub pass: bool,
    pub instances: usize,
    pub failed_instances: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_instance: Option<String>,
    pub residual_term_count: usize,
    pub residual_text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_witness: Option<WitnessEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessEntry {
    pub instance: String,
    pub trial: u32,
    pub function: String,
    pub lhs_image: String,
    pub rhs_image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    /// Failures confined to the transcription tier.
    pub transcription_failed: usize,
}

impl Report {
    pub fn new(suite: &str, d: usize, outcomes: &[Outcome], timing: bool) -> Report {
        let checks: Vec<CheckEntry> = outcomes.iter().map(|o| entry(o, timing)).collect();
        let failed = checks.iter().filter(|c| !c.pass).count();
        let transcription_failed = checks.iter().filter(|c| !c.pass && c.tier == Tier::Transcription.name()).count();
        Report {
            suite: suite.into(),
            version: VERSION.into(),
            d,
            summary: Summary { passed: checks.len() - failed, failed, transcription_failed },
            checks,
        }
    }
}

fn entry(o: &Outcome, timing: bool) -> CheckEntry {
    let r = &o.result;
    CheckEntry {
        id: o.check.id.into(),
        paper_ref: o.check.paper_ref.into(),
        tier: o.check.tier.name().into(),
        pass: r.pass,
        instances: r.instances,
        failed_instances: r.failed_instances,
        failing_instance: r.failing_label.clone(),
        residual_term_count: r.term_count(),
        residual_text: expr::format(&r.residual),
        elapsed_ms: timing.then(|| (o.elapsed.as_secs_f64() * 1e3 * 1e3).round() / 1e3),
        oracle: o.oracle.as_ref().map(|v| if v.agrees { "agree" } else { "disagree" }.into()),
        oracle_witness: o.oracle.as_ref().and_then(|v| v.witness.as_ref()).map(|(label, w)| WitnessEntry {
            instance: label.clone(),
            trial: w.trial,
            function: w.function.to_string(),
            lhs_image: w.lhs_image.to_string(),
            rhs_image: w.rhs_image.to_string(),
        }),
    }
}

/// One report as an object, several as an array.
pub fn render_json(reports: &[Report]) -> String {
    let mut s = match reports {
        [one] => serde_json::to_string_pretty(one),
        many => serde_json::to_string_pretty(many),
    }
    .expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for (n, r) in reports.iter().enumerate() {
        if n > 0 {
            s.push('\n');
        }
        let _ = writeln!(s, "spinlrl {}  suite={}  d={}", r.version, r.suite, r.d);
        for c in &r.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(s, "{verdict}  {:<22} {:>5} instances", c.id, c.instances);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(s, "  {ms:>10.3} ms");
            }
            if let Some(o) = &c.oracle {
                let _ = write!(s, "  oracle {o}");
            }
            if c.tier == Tier::Transcription.name() && !c.pass {
                s.push_str("  [transcription]");
            }
            s.push('\n');
            if !c.pass {
                let at = c.failing_instance.as_deref().filter(|l| !l.is_empty()).unwrap_or("-");
                let _ = writeln!(s, "      {} of {} instances fail; first at {at}", c.failed_instances, c.instances);
                let _ = writeln!(s, "      residual ({} terms): {}", c.residual_term_count, c.residual_text);
            }
            if let Some(w) = &c.oracle_witness {
                let _ = writeln!(s, "      oracle witness at {} trial {}", w.instance, w.trial);
                let _ = writeln!(s, "        f   = {}", clip(&w.function));
                let _ = writeln!(s, "        lhs = {}", clip(&w.lhs_image));
                let _ = writeln!(s, "        rhs = {}", clip(&w.rhs_image));
            }
        }
        let _ = writeln!(
            s,
            "summary: {} passed, {} failed ({} transcription)",
            r.summary.passed, r.summary.failed, r.summary.transcription_failed
        );
    }
    s
}

const CLIP: usize = 160;

/// Shortens long function texts in the text report; JSON keeps them whole.
fn clip(text: &str) -> String {
    match text.char_indices().nth(CLIP) {
        Some((at, _)) => format!("{} ... ({} chars)", &text[..at], text.chars().count()),
        None => text.to_string(),
    }
}

fn md_cell(text: &str) -> String {
    text.replace('|', "\\|")
}

pub fn render_markdown(reports: &[Report]) -> String {
    let mut s = String::new();
    for (n, r) in reports.iter().enumerate() {
        if n > 0 {
            s.push('\n');
        }
        let _ = writeln!(s, "# spinlrl {}: suite `{}`, d = {}\n", r.version, r.suite, r.d);
        let timing = r.checks.iter().any(|c| c.elapsed_ms.is_some());
        s.push_str("| id | identity | tier | pass | residual terms |");
        s.push_str(if timing { " elapsed (ms) |\n" } else { "\n" });
        s.push_str("|---|---|---|---|---|");
        s.push_str(if timing { "---|\n" } else { "\n" });
        for c in &r.checks {
            let _ = write!(
                s,
                "| {} | `{}` | {} | {} | {} |",
                c.id,
                md_cell(&c.paper_ref),
                c.tier,
                if c.pass { "yes" } else { "**no**" },
                c.residual_term_count
            );
            match c.elapsed_ms {
                Some(ms) => {
                    let _ = writeln!(s, " {ms:.3} |");
                }
                None => s.push('\n'),
            }
        }
        let _ = writeln!(
            s,
            "\n**Summary:** {} passed, {} failed ({} transcription).",
            r.summary.passed, r.summary.failed, r.summary.transcription_failed
        );
        let failures: Vec<_> = r.checks.iter().filter(|c| !c.pass || c.oracle_witness.is_some()).collect();
        if !failures.is_empty() {
            s.push_str("\n## Residuals\n");
        }
        for c in failures {
            let _ = writeln!(s, "\n### {}\n", c.id);
            if let Some(label) = &c.failing_instance {
                let _ = writeln!(s, "First failing instance: `{label}`\n");
            }
            let _ = writeln!(s, "```text\n{}\n```", c.residual_text);
            if let Some(w) = &c.oracle_witness {
                let _ = writeln!(
                    s,
                    "\nOracle witness (`{}`, trial {}):\n\n```text\nf   = {}\nlhs = {}\nrhs = {}\n```",
                    w.instance, w.trial, w.function, w.lhs_image, w.rhs_image
                );
            }
        }
    }
    s
}
