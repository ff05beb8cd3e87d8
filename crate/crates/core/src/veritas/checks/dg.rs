//! Claims about the disjoint open set graph, evaluated on the topology
//! itself with `|X|`, isolated points, cellularity and weight of `X`.

use std::collections::BTreeSet;

use serde_json::json;

use super::finite;
use crate::graph::{InvariantReport, Measured};
use crate::ideal::{girth_predictor, radius_predictor};
use crate::veritas::context::SpaceCtx;
use crate::veritas::Outcome;
use crate::PointSet;

fn report<'a>(ctx: &'a SpaceCtx) -> Result<&'a InvariantReport, Outcome> {
    let dg = ctx.dg();
    if dg.graph.is_empty() {
        Err(Outcome::degenerate("disjoint open set graph is empty"))
    } else {
        Ok(&dg.report)
    }
}

macro_rules! need_dg {
    ($ctx:expr) => {
        match report($ctx) {
            Ok(r) => r,
            Err(o) => return o,
        }
    };
}

type Shape = (BTreeSet<PointSet>, BTreeSet<(PointSet, PointSet)>);

fn shape<I, E>(labels: I, edges: E) -> Shape
where
    I: IntoIterator<Item = PointSet>,
    E: IntoIterator<Item = (PointSet, PointSet)>,
{
    (
        labels.into_iter().collect(),
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect(),
    )
}

/// Compares the graph with the annihilating-ideal graph of `C(X)`, whose
/// vertices (sets of components) are drawn as unions of components.
pub fn coincide(ctx: &SpaceCtx) -> Outcome {
    let dg = ctx.dg();
    let comps = ctx.topology.components();
    let lift = |s: PointSet| PointSet::from_points((0..comps.len()).filter(|&x| s.contains(comps[x])));
    let ag: Shape = match ctx.refl.ag {
        Some(ag) => {
            let l = ag.graph.labels();
            shape(l.iter().map(|&s| lift(s)), ag.graph.edges().into_iter().map(|(u, v)| (lift(l[u]), lift(l[v]))))
        }
        None => Shape::default(),
    };
    let l = dg.graph.labels();
    let dgs = shape(l.iter().copied(), dg.graph.edges().into_iter().map(|(u, v)| (l[u], l[v])));
    let summary = |s: &Shape| json!({ "vertices": s.0.len(), "edges": s.1.len() });
    let only_dg: Vec<String> = dgs.0.difference(&ag.0).map(ToString::to_string).collect();
    let only_ag: Vec<String> = ag.0.difference(&dgs.0).map(ToString::to_string).collect();
    Outcome::check(
        ag == dgs,
        json!({ "ag": summary(&ag) }),
        json!({ "dg": summary(&dgs) }),
        format!("vertices only in DG: {only_dg:?}; only in AG: {only_ag:?}"),
    )
}

fn n_detail(ctx: &SpaceCtx) -> String {
    format!("|X|={} isolated={}", ctx.topology.n(), ctx.topology.isolated_points())
}

pub fn diameter(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let expected = if ctx.topology.n() == 2 { 1 } else { 3 };
    Outcome::compare(finite(expected), r.diameter, n_detail(ctx))
}

pub fn star(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let two = ctx.topology.n() == 2;
    Outcome::check(
        two == r.is_star,
        json!({ "two_points": two }),
        json!({ "is_star": r.is_star }),
        n_detail(ctx),
    )
}

pub fn radius(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let t = ctx.topology;
    let predicted = radius_predictor(t.n(), !t.isolated_points().is_empty()).expect("n >= 2");
    Outcome::compare(finite(predicted), r.radius, n_detail(ctx))
}

pub fn girth(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let predicted = girth_predictor(ctx.topology.n()).expect("n >= 2");
    Outcome::compare(Measured::Value(predicted), r.girth, n_detail(ctx))
}

pub fn chi_clique_cellularity(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let c = ctx.topology.cellularity();
    Outcome::compare(
        json!({ "chromatic_number": c, "clique_number": c }),
        json!({ "chromatic_number": r.chromatic_number, "clique_number": r.clique_number }),
        format!("cellularity={c}"),
    )
}

pub fn dt_bounds(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let (c, w) = (ctx.topology.cellularity(), ctx.topology.weight());
    let dt = r.dominating_number;
    Outcome::check(
        c <= dt && dt <= w,
        json!({ "cellularity": c, "weight": w }),
        json!({ "dominating_number": dt }),
        format!("expected {c} <= dt <= {w}"),
    )
}

pub fn complemented(ctx: &SpaceCtx) -> Outcome {
    let r = need_dg!(ctx);
    let lonely: Vec<&str> = ctx
        .dg()
        .graph
        .labels()
        .iter()
        .enumerate()
        .filter(|&(v, _)| crate::graph::orthogonal_partner(&ctx.dg().graph, v).is_none())
        .map(|(v, _)| r.vertices[v].label.as_str())
        .collect();
    Outcome::check(
        r.is_complemented,
        json!({ "is_complemented": true }),
        json!({ "is_complemented": r.is_complemented }),
        format!("vertices without an orthogonal partner: {lonely:?}"),
    )
}
