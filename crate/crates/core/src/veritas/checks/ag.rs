//! Claims about the annihilating-ideal graph, evaluated on the discrete
//! reflection `X` with `m` points.

use serde_json::json;

use super::{finite, need_ag};
use crate::graph::{orthogonal, orthogonal_partner, DistanceValue, Measured};
use crate::ideal::{
    gi_classifier_repaired, girth_predictor, leaf_classifier, orthogonality_test, radius_predictor,
};
use crate::veritas::context::{AgModel, ReflCtx};
use crate::veritas::{Mismatch, Outcome, Tally};
use crate::PointSet;

fn pairs(ag: &AgModel) -> impl Iterator<Item = (usize, usize, PointSet, PointSet)> + '_ {
    let labels = ag.graph.labels();
    (0..labels.len()).flat_map(move |u| (u + 1..labels.len()).map(move |v| (u, v, labels[u], labels[v])))
}

fn pair_detail(g: PointSet, h: PointSet) -> String {
    format!("G={g} H={h}")
}

pub fn two_point_equivalences(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let rep = &ag.report;
    let flags = [
        r.m == 2,
        rep.diameter == finite(1),
        rep.clique_number == 2,
        rep.is_bipartite && rep.vertex_count >= 2,
        rep.is_complete_bipartite,
    ];
    let computed = json!({
        "two_points": flags[0],
        "diameter_one": flags[1],
        "clique_two": flags[2],
        "bipartite": flags[3],
        "complete_bipartite": flags[4],
    });
    Outcome::check(
        flags.iter().all(|&f| f == flags[0]),
        json!("all five conditions agree"),
        computed,
        format!("m={}", r.m),
    )
}

pub fn diameter_three(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let three = ag.report.diameter == finite(3);
    Outcome::check(
        (r.m >= 3) == three,
        json!({ "at_least_three_points": r.m >= 3 }),
        json!({ "diameter": ag.report.diameter }),
        format!("m={}", r.m),
    )
}

pub fn chi_equals_clique(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    Outcome::compare(ag.report.clique_number, ag.report.chromatic_number, "clique vs chromatic number")
}

pub fn finiteness(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let m = r.m as u32;
    let mut expected = json!({ "vertices": 2usize.pow(m) - 2 });
    let mut computed = json!({ "vertices": ag.report.vertex_count });
    if let Some(ring) = r.ring {
        expected["ideals"] = json!(2usize.pow(m));
        computed["ideals"] = json!(ring.ideals.len());
    }
    Outcome::compare(expected, computed, format!("m={}", r.m))
}

fn distance_part(r: &ReflCtx, k: u32, cond: fn(&AgModel, PointSet, PointSet) -> bool) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for (u, v, g, h) in pairs(ag) {
        let d = ag.distances.get(u, v);
        let c = cond(ag, g, h);
        t.record(c == (d == DistanceValue::Finite(k)), || {
            Mismatch::new(json!({ "condition": c }), json!({ "distance": d }), pair_detail(g, h))
        });
    }
    t.finish()
}

pub fn distance_a(r: &ReflCtx) -> Outcome {
    distance_part(r, 1, |_, g, h| g.is_disjoint(h))
}

pub fn distance_b(r: &ReflCtx) -> Outcome {
    distance_part(r, 2, |ag, g, h| !g.is_disjoint(h) && !ag.space.is_dense(g.union(h)))
}

pub fn distance_c(r: &ReflCtx) -> Outcome {
    distance_part(r, 3, |ag, g, h| !g.is_disjoint(h) && ag.space.is_dense(g.union(h)))
}

fn ecc_part(r: &ReflCtx, k: u32, cond: fn(usize, PointSet) -> bool) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for (v, &g) in ag.graph.labels().iter().enumerate() {
        let e = ag.distances.eccentricity(v);
        let c = cond(r.m, g);
        t.record(c == (e == finite(k)), || {
            Mismatch::new(json!({ "condition": c }), json!({ "eccentricity": e }), format!("G={g}"))
        });
    }
    t.finish()
}

pub fn ecc_a(r: &ReflCtx) -> Outcome {
    ecc_part(r, 3, |_, g| !g.is_singleton())
}

pub fn ecc_b(r: &ReflCtx) -> Outcome {
    ecc_part(r, 2, |m, g| g.is_singleton() && m > 2)
}

pub fn ecc_c(r: &ReflCtx) -> Outcome {
    ecc_part(r, 1, |m, g| g.is_singleton() && m == 2)
}

pub fn star(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    Outcome::check(
        (r.m == 2) == ag.report.is_star,
        json!({ "two_points": r.m == 2 }),
        json!({ "is_star": ag.report.is_star }),
        format!("m={}", r.m),
    )
}

pub fn radius(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let isolated = !ag.space.isolated_points().is_empty();
    let predicted = radius_predictor(r.m, isolated).expect("m >= 2");
    Outcome::compare(finite(predicted), ag.report.radius, format!("m={} isolated={isolated}", r.m))
}

pub fn leaf(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for (v, &g) in ag.graph.labels().iter().enumerate() {
        let predicted = leaf_classifier(&ag.space, g).expect("vertex");
        let degree = ag.graph.neighbors(v).len();
        t.record(predicted == (degree == 1), || {
            Mismatch::new(json!({ "complement_of_closure_singleton": predicted }), json!({ "degree": degree }), format!("G={g}"))
        });
    }
    t.finish()
}

/// Facts about a non-leaf pair used by the `gi` case analysis.
struct GiPair {
    g: PointSet,
    h: PointSet,
    gi: DistanceValue,
    disjoint: bool,
    dense: bool,
    equal_closures: bool,
    gap_singleton: bool,
}

fn gi_pairs(ag: &AgModel) -> impl Iterator<Item = GiPair> + '_ {
    let t = &ag.space;
    ag.non_leaf_gi().iter().map(move |&(u, v, gi)| {
        let (g, h) = (ag.graph.labels()[u], ag.graph.labels()[v]);
        let union = g.union(h);
        GiPair {
            g,
            h,
            gi,
            disjoint: g.is_disjoint(h),
            dense: t.is_dense(union),
            equal_closures: t.closure(g) == t.closure(h),
            gap_singleton: t.closure(union).complement(t.n()).is_singleton(),
        }
    })
}

/// `hyp(p)` selects the pairs a part speaks about; `holds(p)` is its claim.
fn gi_part(r: &ReflCtx, hyp: fn(&GiPair) -> bool, holds: fn(&GiPair) -> bool) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for p in gi_pairs(ag).filter(|p| hyp(p)) {
        t.record(holds(&p), || {
            Mismatch::new(
                json!({
                    "disjoint": p.disjoint,
                    "union_dense": p.dense,
                    "equal_closures": p.equal_closures,
                    "gap_singleton": p.gap_singleton,
                }),
                json!({ "gi": p.gi }),
                pair_detail(p.g, p.h),
            )
        });
    }
    t.finish()
}

fn gi_is(p: &GiPair, k: u32) -> bool {
    p.gi == DistanceValue::Finite(k)
}

pub fn gi_a(r: &ReflCtx) -> Outcome {
    gi_part(r, |_| true, |p| (p.disjoint && !p.dense) == gi_is(p, 3))
}

pub fn gi_b(r: &ReflCtx) -> Outcome {
    gi_part(r, |p| p.disjoint && p.dense, |p| gi_is(p, 4))
}

pub fn gi_c(r: &ReflCtx) -> Outcome {
    gi_part(r, |p| !p.disjoint && p.equal_closures, |p| gi_is(p, 4))
}

pub fn gi_d(r: &ReflCtx) -> Outcome {
    gi_part(r, |p| !p.disjoint && !p.equal_closures, |p| !p.gap_singleton == gi_is(p, 4))
}

pub fn gi_e(r: &ReflCtx) -> Outcome {
    gi_part(
        r,
        |_| true,
        |p| (!p.disjoint && !p.equal_closures && p.gap_singleton) == gi_is(p, 5),
    )
}

pub fn gi_repaired(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for p in gi_pairs(ag) {
        let predicted = gi_classifier_repaired(&ag.space, p.g, p.h).expect("non-leaf pair");
        t.equal(DistanceValue::Finite(predicted), p.gi, || pair_detail(p.g, p.h));
    }
    t.finish()
}

pub fn girth(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let predicted = girth_predictor(r.m).expect("m >= 2");
    Outcome::compare(Measured::Value(predicted), ag.report.girth, format!("m={}", r.m))
}

pub fn triangulated(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let flags = [
        !ag.space.isolated_points().is_empty(),
        ag.report.vertices.iter().any(|v| v.is_leaf),
        !ag.report.is_triangulated,
    ];
    Outcome::check(
        flags.iter().all(|&f| f == flags[0]),
        json!("all three conditions agree"),
        json!({ "isolated_point": flags[0], "has_leaf": flags[1], "not_triangulated": flags[2] }),
        format!("m={}", r.m),
    )
}

fn dt_sides(ag: &AgModel) -> (usize, usize, usize) {
    (ag.space.cellularity(), ag.report.dominating_number, ag.space.weight())
}

pub fn dt_bounds(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let (c, dt, w) = dt_sides(ag);
    Outcome::check(
        c <= dt && dt <= w,
        json!({ "cellularity": c, "weight": w }),
        json!({ "dominating_number": dt }),
        format!("m={}: expected {c} <= dt <= {w}", r.m),
    )
}

pub fn dt_bounds_repaired(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    if r.m == 2 {
        return Outcome::compare(1, ag.report.dominating_number, "two points: a single vertex dominates K2");
    }
    dt_bounds(r)
}

pub fn dt_discrete(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    Outcome::compare(r.m, ag.report.dominating_number, format!("m={}", r.m))
}

pub fn dt_discrete_repaired(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let expected = if r.m == 2 { 1 } else { r.m };
    Outcome::compare(expected, ag.report.dominating_number, format!("m={}", r.m))
}

pub fn dt_finite(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    Outcome::compare(
        json!({ "finite": true, "dominating_number": r.m }),
        json!({ "finite": true, "dominating_number": ag.report.dominating_number }),
        format!("m={}", r.m),
    )
}

pub fn chi_clique_cellularity(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let c = ag.space.cellularity();
    Outcome::compare(
        json!({ "chromatic_number": c, "clique_number": c }),
        json!({ "chromatic_number": ag.report.chromatic_number, "clique_number": ag.report.clique_number }),
        format!("m={} cellularity={c}", r.m),
    )
}

pub fn complemented(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for (v, &g) in ag.graph.labels().iter().enumerate() {
        let partner = orthogonal_partner(&ag.graph, v).map(|p| ag.graph.labels()[p].to_string());
        t.record(partner.is_some(), || {
            Mismatch::new(json!("an orthogonal partner"), json!(partner), format!("G={g}"))
        });
    }
    t.finish()
}

pub fn orthogonality(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let mut t = Tally::new();
    for (u, v, g, h) in pairs(ag) {
        let predicted = orthogonality_test(&ag.space, g, h).expect("vertices");
        let actual = orthogonal(&ag.graph, u, v).expect("vertices");
        t.equal(predicted, actual, || pair_detail(g, h));
    }
    t.finish()
}

/// A vertex is adjacent to the support union `S ∪ T` exactly when it is
/// adjacent to both `S` and `T`.
pub fn sum_adjacency(r: &ReflCtx) -> Outcome {
    let ag = need_ag!(r);
    let g = &ag.graph;
    let mut t = Tally::new();
    for (_, _, s, u) in pairs(ag) {
        let Some(su) = g.index_of(&s.union(u)) else { continue };
        let (si, ui) = (g.index_of(&s).expect("vertex"), g.index_of(&u).expect("vertex"));
        for k in 0..g.len() {
            let both = g.adjacent(k, si) && g.adjacent(k, ui);
            let sum = g.adjacent(k, su);
            t.record(both == sum, || {
                Mismatch::new(
                    json!({ "adjacent_to_both": both }),
                    json!({ "adjacent_to_union": sum }),
                    format!("K={} S={s} T={u}", g.labels()[k]),
                )
            });
        }
    }
    t.finish()
}
