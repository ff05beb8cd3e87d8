use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use super::{Mismatch, Tier, Verdict};

pub const SCHEMA: &str = "veritas/1";

/// Reproduction data attached to failures and existence findings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topology: Option<String>,
    /// Which graph `edges` belongs to: `ag`, `dg` or `source`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub edges: Vec<[String; 2]>,
    pub lhs: Value,
    pub rhs: Value,
    pub detail: String,
}

impl Witness {
    pub fn from_mismatch(m: Mismatch, topology: Option<String>, graph: Option<(&str, Vec<[String; 2]>)>) -> Self {
        let (graph, edges) = match graph {
            Some((name, edges)) => (Some(name.to_string()), edges),
            None => (None, Vec::new()),
        };
        Witness {
            topology,
            graph,
            edges,
            lhs: m.lhs,
            rhs: m.rhs,
            detail: m.detail,
        }
    }
}

/// One line of the JSON Lines report stream.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub schema: &'static str,
    pub claim: String,
    pub tier: Tier,
    /// Topology text for space claims, probe name for graph-map claims.
    pub space: String,
    pub verdict: Verdict,
    pub expected: Value,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TheoremReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

pub fn to_jsonl(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_json_line());
        out.push('\n');
    }
    out
}

#[derive(Default)]
struct Counts {
    pass: usize,
    fail: usize,
    degenerate: usize,
    not_applicable: usize,
}

/// Per claim and tier: counts of each verdict.
pub fn summary_table(reports: &[TheoremReport]) -> String {
    let mut rows: BTreeMap<(&str, Tier), Counts> = BTreeMap::new();
    for r in reports {
        let c = rows.entry((r.claim.as_str(), r.tier)).or_default();
        match r.verdict {
            Verdict::Pass => c.pass += 1,
            Verdict::Fail => c.fail += 1,
            Verdict::Degenerate => c.degenerate += 1,
            Verdict::NotApplicable => c.not_applicable += 1,
        }
    }
    let width = rows.keys().map(|(c, _)| c.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    writeln!(out, "{:<width$}  {:<10}  {:>5}  {:>5}  {:>5}  {:>5}", "claim", "tier", "pass", "fail", "degen", "n/a")
        .expect("write to String");
    for ((claim, tier), c) in &rows {
        writeln!(
            out,
            "{:<width$}  {:<10}  {:>5}  {:>5}  {:>5}  {:>5}",
            claim,
            tier.to_string(),
            c.pass,
            c.fail,
            c.degenerate,
            c.not_applicable
        )
        .expect("write to String");
    }
    out
}

/// Every failing or degenerate report, one line each.
pub fn findings_table(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Fail | Verdict::Degenerate))
    {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\texpected={}\tcomputed={}",
            r.claim, r.tier, r.verdict, r.space, r.expected, r.computed
        )
        .expect("write to String");
    }
    out
}
