//! Identities between `I`, `O`, `Ann` and the closure operator, checked on
//! the topology itself over all subsets and open sets. Where a ring model
//! of the reflection exists, the ring-level form is checked as well.

use serde_json::json;

use super::ring;
use crate::ideal::{ann_open, element_of_a, element_of_a_literal, element_of_a_repaired, i_of_set};
use crate::veritas::context::{RingModel, SpaceCtx};
use crate::veritas::{Mismatch, Outcome, Tally};
use crate::{PointSet, Topology};

fn subsets(t: &Topology) -> impl Iterator<Item = PointSet> {
    PointSet::all_subsets(t.n())
}

fn ann(t: &Topology, g: PointSet) -> PointSet {
    ann_open(t, g).expect("open set")
}

fn with_ring(ctx: &SpaceCtx, mut t: Tally, ring: fn(&RingModel) -> Tally) -> Outcome {
    if let Some(r) = ctx.refl.ring {
        t.merge(ring(r));
    }
    t.finish()
}

pub fn order_b(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        for v in subsets(t).filter(|v| u.is_subset(*v)) {
            let (iu, iv) = (i_of_set(t, u), i_of_set(t, v));
            tally.record(iv.is_subset(iu), || {
                Mismatch::new(iv.to_string(), iu.to_string(), format!("U={u} V={v}"))
            });
        }
    }
    tally.finish()
}

pub fn order_e(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        tally.equal(i_of_set(t, u).is_empty(), t.is_dense(u), || format!("U={u}"));
    }
    tally.finish()
}

pub fn order_f(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        tally.equal(i_of_set(t, u) == t.ground(), u.is_empty(), || format!("U={u}"));
    }
    tally.finish()
}

pub fn order_h(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        tally.equal(i_of_set(t, u), i_of_set(t, t.closure(u)), || format!("U={u}"));
    }
    tally.finish()
}

pub fn union_to_intersection(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        for v in subsets(t) {
            let rhs = i_of_set(t, u).intersection(i_of_set(t, v));
            tally.equal(i_of_set(t, u.union(v)), rhs, || format!("U={u} V={v}"));
        }
    }
    with_ring(ctx, tally, ring::i_of_union_tally)
}

fn cap_sides(t: &Topology, u: PointSet, v: PointSet) -> (PointSet, PointSet) {
    (i_of_set(t, u.intersection(v)), i_of_set(t, u).union(i_of_set(t, v)))
}

pub fn intersection_contains_sum(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        for v in subsets(t) {
            let (lhs, sum) = cap_sides(t, u, v);
            tally.record(sum.is_subset(lhs), || {
                Mismatch::new(lhs.to_string(), sum.to_string(), format!("U={u} V={v}"))
            });
        }
    }
    tally.finish()
}

/// `O(I(U ∩ V)) ⊋ O(I(U)) ∪ O(I(V)) = O(I(U) + I(V))` for some `U, V`.
pub fn intersection_strict(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut searched = 0;
    for u in subsets(t) {
        for v in subsets(t) {
            searched += 1;
            let (lhs, sum) = cap_sides(t, u, v);
            if lhs != sum {
                let example = Mismatch::new(
                    json!({ "O(I(U ∩ V))": lhs.to_string() }),
                    json!({ "O(I(U) + I(V))": sum.to_string() }),
                    format!("U={u} V={v}"),
                );
                return Outcome::existence(Some(example), searched);
            }
        }
    }
    Outcome::existence(None, searched)
}

pub fn dense_union(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        for v in subsets(t) {
            let disjoint = i_of_set(t, u).is_disjoint(i_of_set(t, v));
            tally.equal(t.is_dense(u.union(v)), disjoint, || format!("U={u} V={v}"));
        }
    }
    with_ring(ctx, tally, ring::dense_union_tally)
}

pub fn ann_cubed(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for &g in t.opens() {
        let once = ann(t, g);
        tally.equal(ann(t, ann(t, once)), once, || format!("G={g}"));
    }
    with_ring(ctx, tally, ring::io_cubed_tally)
}

fn open_pairs(t: &Topology) -> impl Iterator<Item = (PointSet, PointSet)> + '_ {
    t.opens().iter().flat_map(move |&g| t.opens().iter().map(move |&h| (g, h)))
}

pub fn ij_b(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for (g, h) in open_pairs(t) {
        let zero = g.is_disjoint(ann(t, h));
        tally.equal(zero, g.is_subset(t.closure(h)), || format!("G={g} H={h}"));
    }
    with_ring(ctx, tally, ring::ann_product_tally)
}

pub fn ij_c(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for (g, h) in open_pairs(t) {
        let zero = ann(t, g).is_disjoint(ann(t, h));
        tally.equal(zero, t.is_dense(g.union(h)), || format!("G={g} H={h}"));
    }
    with_ring(ctx, tally, ring::ann_ann_tally)
}

pub fn ij_d(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for (g, h) in open_pairs(t) {
        tally.equal(t.closure(g) == t.closure(h), ann(t, g) == ann(t, h), || format!("G={g} H={h}"));
    }
    with_ring(ctx, tally, ring::equal_ann_tally)
}

pub fn ij_e(ctx: &SpaceCtx) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        let iu = i_of_set(t, u);
        for &g in t.opens() {
            tally.equal(iu.is_disjoint(g), g.is_subset(t.closure(u)), || format!("U={u} G={g}"));
        }
    }
    with_ring(ctx, tally, ring::i_of_set_product_tally)
}

fn membership(ctx: &SpaceCtx, predicate: fn(&Topology, PointSet) -> bool) -> Outcome {
    let t = ctx.topology;
    let mut tally = Tally::new();
    for u in subsets(t) {
        let actual = element_of_a(t, u);
        let predicted = predicate(t, u);
        tally.record(actual == predicted, || {
            Mismatch::new(
                json!({ "predicted": predicted }),
                json!({ "nonzero_annihilating": actual, "closure": t.closure(u).to_string() }),
                format!("U={u}"),
            )
        });
    }
    tally.finish()
}

pub fn element_b(ctx: &SpaceCtx) -> Outcome {
    membership(ctx, element_of_a_repaired)
}

pub fn element_b_literal(ctx: &SpaceCtx) -> Outcome {
    membership(ctx, element_of_a_literal)
}
