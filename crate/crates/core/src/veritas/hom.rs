//! Comparison of a graph with its image under an edge-reflecting
//! surjection `φ: G → G'`, on fixed probes and on seeded random twin
//! expansions.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{Mismatch, Outcome, Verdict};
use crate::graph::{
    chromatic_number, clique_number, diameter, dominating_number, girth, is_complemented, named, radius,
    DistanceValue, Measured, UGraph,
};
use crate::ideal::{build_ag_discrete, build_dg, twin_expansion, HomWitness};
use crate::Topology;

/// One part of the comparison, `(a)` through `(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum HomPart {
    Diameter,
    Radius,
    Girth,
    Dominating,
    Clique,
    Chromatic,
    Complemented,
}

impl HomPart {
    pub const ALL: [HomPart; 7] = [
        HomPart::Diameter,
        HomPart::Radius,
        HomPart::Girth,
        HomPart::Dominating,
        HomPart::Clique,
        HomPart::Chromatic,
        HomPart::Complemented,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Fixed seed and trial count of the random twin expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomTrials {
    pub seed: u64,
    pub trials: usize,
}

impl Default for HomTrials {
    fn default() -> Self {
        HomTrials { seed: 0x5eed, trials: 1000 }
    }
}

/// Verdicts of all seven parts for one witness, plus the source edges for
/// reproduction.
#[derive(Clone, Debug)]
pub struct HomCase {
    pub name: String,
    pub outcomes: [Outcome; 7],
    pub source_edges: Vec<[String; 2]>,
}

struct Sides {
    diameter: Measured<DistanceValue>,
    radius: Measured<DistanceValue>,
    girth: Measured<DistanceValue>,
    dominating: usize,
    clique: usize,
    chromatic: usize,
    complemented: bool,
}

impl Sides {
    fn of<L: Sync>(g: &UGraph<L>) -> Self {
        Sides {
            diameter: diameter(g),
            radius: radius(g),
            girth: girth(g),
            dominating: dominating_number(g),
            clique: clique_number(g),
            chromatic: chromatic_number(g),
            complemented: is_complemented(g),
        }
    }
}

fn at_most(a: Measured<DistanceValue>, b: Measured<DistanceValue>) -> Option<bool> {
    match (a, b) {
        (Measured::Value(x), Measured::Value(y)) => Some(match (x, y) {
            (_, DistanceValue::Inf) => true,
            (DistanceValue::Inf, DistanceValue::Finite(_)) => false,
            (DistanceValue::Finite(x), DistanceValue::Finite(y)) => x <= y,
        }),
        _ => None,
    }
}

/// Compares `G' = target` (expected side) with `G = source` (computed
/// side) for every part.
pub fn check_hom_parts<S, T>(w: &HomWitness<S, T>, label: &str) -> [Outcome; 7]
where
    S: Sync,
    T: Sync,
{
    let (src, tgt) = (Sides::of(w.source()), Sides::of(w.target()));
    let detail = |what: &str| format!("{label}: {what} of G' vs G");
    let measured_eq = |a: Measured<DistanceValue>, b: Measured<DistanceValue>, what: &str| {
        if a.is_degenerate() || b.is_degenerate() {
            Outcome::degenerate("a graph with fewer than two vertices")
        } else {
            Outcome::compare(a, b, detail(what))
        }
    };
    let girth = match at_most(tgt.girth, src.girth) {
        Some(holds) => Outcome::check(holds, tgt.girth, src.girth, detail("girth(G') <= girth(G)")),
        None => Outcome::degenerate("a graph with fewer than two vertices"),
    };
    [
        measured_eq(tgt.diameter, src.diameter, "diameter"),
        measured_eq(tgt.radius, src.radius, "radius"),
        girth,
        Outcome::check(
            tgt.dominating <= src.dominating,
            tgt.dominating,
            src.dominating,
            detail("dt(G') <= dt(G)"),
        ),
        Outcome::compare(tgt.clique, src.clique, detail("clique number")),
        Outcome::compare(tgt.chromatic, src.chromatic, detail("chromatic number")),
        Outcome::compare(tgt.complemented, src.complemented, detail("complemented")),
    ]
}

fn edges_of<L: Display>(g: &UGraph<L>) -> Vec<[String; 2]> {
    g.edges()
        .into_iter()
        .map(|(u, v)| [g.labels()[u].to_string(), g.labels()[v].to_string()])
        .collect()
}

struct Pair<'a>(&'a (usize, usize));

impl Display for Pair<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.{}", self.0 .0, self.0 .1)
    }
}

fn twin_edges(w: &HomWitness<(usize, usize), impl Sized>) -> Vec<[String; 2]> {
    let g = w.source();
    g.edges()
        .into_iter()
        .map(|(u, v)| [Pair(&g.labels()[u]).to_string(), Pair(&g.labels()[v]).to_string()])
        .collect()
}

/// The fixed probes: identity on the four-point graph, `K2` doubled into
/// `C4`, and the three-point graph mapped onto the disjoint open set
/// graph of the discrete three-point space.
pub fn probes() -> Vec<HomCase> {
    let mut out = Vec::new();

    let ag4 = build_ag_discrete(4).expect("4 points");
    let identity = twin_expansion(&ag4, &vec![1; ag4.len()]).expect("unit multiplicities");
    out.push(HomCase {
        name: "probe:identity-ag4".into(),
        outcomes: check_hom_parts(&identity, "identity on AG(4)"),
        source_edges: edges_of(identity.target()),
    });

    let c4 = twin_expansion(&named::complete(2), &[2, 2]).expect("positive multiplicities");
    out.push(HomCase {
        name: "probe:k2x2-c4".into(),
        outcomes: check_hom_parts(&c4, "K2 with both vertices doubled"),
        source_edges: twin_edges(&c4),
    });

    let ag3 = build_ag_discrete(3).expect("3 points");
    let dg3 = build_dg(&Topology::discrete(3));
    let same = HomWitness::from_label_map(ag3, dg3, |s| *s).expect("identical graphs");
    out.push(HomCase {
        name: "probe:ag3-dg3".into(),
        outcomes: check_hom_parts(&same, "AG(3) onto DG of the discrete 3-point space"),
        source_edges: edges_of(same.source()),
    });
    out
}

/// A random base graph on 2..=8 vertices with edge probability 1/2, and
/// multiplicities in 1..=3.
fn random_instance(rng: &mut ChaCha8Rng) -> (UGraph<usize>, Vec<usize>) {
    let n = rng.gen_range(2..=8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let base = UGraph::from_edges((0..n).collect(), edges).expect("valid edges");
    let mults = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    (base, mults)
}

pub fn trial_cases(cfg: HomTrials) -> Vec<HomCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let instances: Vec<(UGraph<usize>, Vec<usize>)> = (0..cfg.trials).map(|_| random_instance(&mut rng)).collect();
    instances
        .into_par_iter()
        .enumerate()
        .map(|(k, (base, mults))| {
            let w = twin_expansion(&base, &mults).expect("positive multiplicities");
            let label = format!("trial {k}: base edges {:?}, multiplicities {mults:?}", base.edges());
            HomCase {
                name: format!("trial:{k}"),
                outcomes: check_hom_parts(&w, &label),
                source_edges: twin_edges(&w),
            }
        })
        .collect()
}

/// Folds the trials into one outcome per part: pass when every trial
/// passes, otherwise the first failing trial as witness.
pub fn aggregate(cases: &[HomCase], part: HomPart) -> (Outcome, Option<Vec<[String; 2]>>) {
    let i = part.index();
    let count = |v: Verdict| cases.iter().filter(|c| c.outcomes[i].verdict == v).count();
    let (pass, fail, degenerate) = (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Degenerate));
    let expected = json!({ "trials": cases.len(), "failures": 0 });
    let computed = json!({ "trials": cases.len(), "pass": pass, "failures": fail, "degenerate": degenerate });
    match cases.iter().find(|c| c.outcomes[i].verdict == Verdict::Fail) {
        Some(first) => {
            let m = first.outcomes[i].mismatch.clone().unwrap_or_else(|| Mismatch::new((), (), "failed"));
            (
                Outcome {
                    verdict: Verdict::Fail,
                    expected,
                    computed,
                    mismatch: Some(m),
                },
                Some(first.source_edges.clone()),
            )
        }
        None if pass == 0 => (Outcome::degenerate("every trial was degenerate"), None),
        None => (
            Outcome {
                verdict: Verdict::Pass,
                expected,
                computed,
                mismatch: None,
            },
            None,
        ),
    }
}
