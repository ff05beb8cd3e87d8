//! Runs selected claims over a list of spaces and collects reports.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::context::{DgReportFn, ReflCtx, SpaceCtx, SuiteCtx};
use super::hom::{aggregate, probes, trial_cases, HomCase, HomPart, HomTrials};
use super::registry::{Check, Claim, GraphKind, Scope};
use super::report::{TheoremReport, Witness, SCHEMA};
use super::{Outcome, Tier, Verdict, VeritasError};
use crate::graph::UGraph;
use crate::topo::enumerate_canonical;
use crate::{PointSet, SpaceFilter, Topology};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Only guaranteed-tier reports; guaranteed failures are errors.
    Guaranteed,
    /// Every report; nothing is an error.
    Explore,
    /// Every report; guaranteed failures are errors.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Assert,
    Explore,
}

impl Suite {
    pub fn mode(self) -> Mode {
        match self {
            Suite::Explore => Mode::Explore,
            Suite::Guaranteed | Suite::All => Mode::Assert,
        }
    }

    fn keeps(self, tier: Tier) -> bool {
        self != Suite::Guaranteed || tier == Tier::Guaranteed
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "guaranteed" => Ok(Suite::Guaranteed),
            "explore" => Ok(Suite::Explore),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub suite: Suite,
    pub hom: HomTrials,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            suite: Suite::Guaranteed,
            hom: HomTrials::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunResult {
    /// Sorted by claim id, then by space order, then probe order.
    pub reports: Vec<TheoremReport>,
    pub guaranteed_failures: usize,
}

impl RunResult {
    /// Whether the run should be reported as failing under `mode`.
    pub fn failed(&self, mode: Mode) -> bool {
        mode == Mode::Assert && self.guaranteed_failures > 0
    }
}

fn hom_tier(scope: Scope) -> Tier {
    match scope {
        Scope::All => Tier::Guaranteed,
        _ => Tier::Explore,
    }
}

fn labeled_edges<L: ToString>(g: &UGraph<L>) -> Vec<[String; 2]> {
    let l = g.labels();
    g.edges()
        .into_iter()
        .map(|(u, v)| [l[u].to_string(), l[v].to_string()])
        .collect()
}

fn witness_graph(claim: &Claim, ctx: &SpaceCtx) -> Option<(&'static str, Vec<[String; 2]>)> {
    match claim.graph {
        GraphKind::Ag => ctx.refl.ag.map(|ag| ("ag", labeled_edges(&ag.graph))),
        GraphKind::Dg => Some(("dg", labeled_edges::<PointSet>(&ctx.dg().graph))),
        GraphKind::None => None,
    }
}

fn report(claim: &Claim, tier: Tier, space: String, outcome: Outcome, witness: Option<Witness>) -> TheoremReport {
    TheoremReport {
        schema: SCHEMA,
        claim: claim.id.to_string(),
        tier,
        space,
        verdict: outcome.verdict,
        expected: outcome.expected,
        computed: outcome.computed,
        witness,
    }
}

fn space_report(claim: &Claim, ctx: &SpaceCtx, mut outcome: Outcome) -> TheoremReport {
    let witness = outcome
        .mismatch
        .take()
        .map(|m| Witness::from_mismatch(m, Some(ctx.key()), witness_graph(claim, ctx)));
    report(claim, claim.scope.tier(&ctx.class), ctx.key(), outcome, witness)
}

fn hom_report(claim: &Claim, name: &str, outcome: Outcome, edges: Option<Vec<[String; 2]>>) -> TheoremReport {
    let mut outcome = outcome;
    let witness = outcome
        .mismatch
        .take()
        .map(|m| Witness::from_mismatch(m, None, edges.map(|e| ("source", e))));
    report(claim, hom_tier(claim.scope), name.to_string(), outcome, witness)
}

fn evaluate(claim: &Claim, ctx: &SpaceCtx, reflection: &BTreeMap<(usize, usize), Outcome>, k: usize) -> Outcome {
    match claim.check {
        Check::Reflection(_) => reflection[&(k, ctx.refl.m)].clone(),
        Check::Space(f) => f(ctx),
        Check::Hom(_) => unreachable!("graph-map claims are not evaluated per space"),
    }
}

/// Outcomes of reflection claims depend only on the component count, so
/// they are computed once per distinct count.
fn reflection_outcomes(claims: &[&Claim], suite: &SuiteCtx, ms: &BTreeSet<usize>) -> BTreeMap<(usize, usize), Outcome> {
    let jobs: Vec<(usize, usize, fn(&ReflCtx) -> Outcome)> = claims
        .iter()
        .enumerate()
        .filter_map(|(k, c)| match c.check {
            Check::Reflection(f) => Some((k, f)),
            _ => None,
        })
        .flat_map(|(k, f)| ms.iter().map(move |&m| (k, m, f)))
        .collect();
    jobs.into_par_iter()
        .map(|(k, m, f)| ((k, m), f(&suite.reflection(m))))
        .collect()
}

/// Evaluates every claim on every space, and graph-map claims once on the
/// probes and the seeded trials.
pub fn run_suite(claims: &[&Claim], spaces: &[Topology], opts: &RunOptions, dg_report: &DgReportFn) -> RunResult {
    let ms: BTreeSet<usize> = spaces.iter().map(Topology::component_count).collect();
    let suite = SuiteCtx::new(ms.iter().copied());
    let reflection = reflection_outcomes(claims, &suite, &ms);

    let per_space: Vec<Vec<(usize, usize, TheoremReport)>> = spaces
        .par_iter()
        .enumerate()
        .map(|(s, t)| {
            let ctx = SpaceCtx::new(&suite, t, dg_report);
            claims
                .iter()
                .enumerate()
                .filter(|(_, c)| !matches!(c.check, Check::Hom(_)))
                .filter(|(_, c)| opts.suite.keeps(c.scope.tier(&ctx.class)))
                .map(|(k, c)| (k, s, space_report(c, &ctx, evaluate(c, &ctx, &reflection, k))))
                .collect()
        })
        .collect();
    let mut rows: Vec<(usize, usize, TheoremReport)> = per_space.into_iter().flatten().collect();

    let homs: Vec<(usize, &Claim, HomPart)> = claims
        .iter()
        .enumerate()
        .filter_map(|(k, c)| match c.check {
            Check::Hom(p) if opts.suite.keeps(hom_tier(c.scope)) => Some((k, *c, p)),
            _ => None,
        })
        .collect();
    if !homs.is_empty() {
        let probe_cases = probes();
        let trials = trial_cases(opts.hom);
        for (k, claim, part) in homs {
            for (j, case) in probe_cases.iter().enumerate() {
                let o = case.outcomes[part.index()].clone();
                rows.push((k, j, hom_report(claim, &case.name, o, Some(case.source_edges.clone()))));
            }
            let (o, edges) = aggregate(&trials, part);
            let name = format!("trials:seed={}:n={}", opts.hom.seed, opts.hom.trials);
            rows.push((k, probe_cases.len(), hom_report(claim, &name, o, edges)));
        }
    }

    rows.sort_by(|a, b| (a.2.claim.as_str(), a.1).cmp(&(b.2.claim.as_str(), b.1)));
    let reports: Vec<TheoremReport> = rows.into_iter().map(|r| r.2).collect();
    let guaranteed_failures = reports
        .iter()
        .filter(|r| r.tier == Tier::Guaranteed && r.verdict == Verdict::Fail)
        .count();
    RunResult {
        reports,
        guaranteed_failures,
    }
}

/// Canonical representatives on `min_n..=max_n` points that pass `filter`.
pub fn canonical_spaces(min_n: usize, max_n: usize, filter: SpaceFilter) -> Result<Vec<Topology>, VeritasError> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        for t in enumerate_canonical(n, crate::topo::MAX_ENUM_POINTS)? {
            if filter.matches(&t.classify()) {
                out.push(t);
            }
        }
    }
    Ok(out)
}

fn is_hit(claim: &Claim, r: &TheoremReport) -> bool {
    if claim.existential {
        r.verdict == Verdict::Pass
    } else {
        r.verdict == Verdict::Fail
    }
}

fn first_hom_hit(claim: &Claim, part: HomPart, cases: &[HomCase]) -> Option<TheoremReport> {
    cases.iter().find(|c| c.outcomes[part.index()].verdict == Verdict::Fail).map(|c| {
        hom_report(
            claim,
            &c.name,
            c.outcomes[part.index()].clone(),
            Some(c.source_edges.clone()),
        )
    })
}

/// The first failing instance of `claim`, or for an existence claim the
/// first example, in order of point count and canonical key. Graph-map
/// claims search the probes and then the seeded trials.
pub fn search_counterexample(
    claim: &Claim,
    min_n: usize,
    max_n: usize,
    filter: SpaceFilter,
    hom: HomTrials,
) -> Result<Option<TheoremReport>, VeritasError> {
    if let Check::Hom(part) = claim.check {
        return Ok(first_hom_hit(claim, part, &probes()).or_else(|| first_hom_hit(claim, part, &trial_cases(hom))));
    }
    let dg_report = super::context::compute_dg_report;
    for n in min_n..=max_n {
        let spaces = canonical_spaces(n, n, filter)?;
        let ms: BTreeSet<usize> = spaces.iter().map(Topology::component_count).collect();
        let suite = SuiteCtx::new(ms);
        let hit = spaces.par_iter().find_first(|t| {
            let ctx = SpaceCtx::new(&suite, t, &dg_report);
            let outcome = match claim.check {
                Check::Reflection(f) => f(&ctx.refl),
                Check::Space(f) => f(&ctx),
                Check::Hom(_) => unreachable!(),
            };
            is_hit(claim, &report(claim, Tier::Explore, String::new(), outcome, None))
        });
        if let Some(t) = hit {
            let ctx = SpaceCtx::new(&suite, t, &dg_report);
            let outcome = match claim.check {
                Check::Reflection(f) => f(&ctx.refl),
                Check::Space(f) => f(&ctx),
                Check::Hom(_) => unreachable!(),
            };
            return Ok(Some(space_report(claim, &ctx, outcome)));
        }
    }
    Ok(None)
}
