//! Claims about ideals, checked on actual elements of `F₃^m`.
//!
//! The `*_tally` functions are shared with the operator checks, which
//! add the ring-level instances of the same identity when a model exists.

use serde_json::json;

use super::need_ring;
use crate::ideal::ring::{Elem, Ideal};
use crate::veritas::context::{ReflCtx, RingModel};
use crate::veritas::{Mismatch, Outcome, Tally};
use crate::PointSet;

fn ideal_json(r: &RingModel, i: &[Elem]) -> serde_json::Value {
    json!(i.iter().map(|&f| r.coords(f)).collect::<Vec<_>>())
}

fn ideal_name(r: &RingModel, k: usize) -> String {
    format!("I{k}=<support {}>", r.supports[k])
}

fn ideal_pairs(r: &RingModel) -> impl Iterator<Item = (usize, usize)> {
    let n = r.ideals.len();
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn is_subset(a: &[Elem], b: &[Elem]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

pub fn order_a(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r) {
        if is_subset(&r.ideals[a], &r.ideals[b]) {
            let holds = r.supports[a].is_subset(r.supports[b]);
            t.record(holds, || {
                Mismatch::new(r.supports[a].to_string(), r.supports[b].to_string(), format!("{} ⊆ {}", ideal_name(r, a), ideal_name(r, b)))
            });
        }
    }
    t.finish()
}

pub fn order_c(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for f in r.field.elements() {
        let empty = r.field.o_of(&[f]).is_empty();
        t.equal(empty, f == 0, || format!("S={{{}}}", r.coords(f)));
    }
    for (k, i) in r.ideals.iter().enumerate() {
        t.equal(r.supports[k].is_empty(), r.field.is_zero_ideal(i), || ideal_name(r, k));
    }
    t.finish()
}

pub fn order_d(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let ground = PointSet::full(r.points());
    let mut t = Tally::new();
    for f in r.field.elements() {
        let whole = r.field.o_of(&[f]) == ground;
        let free = r.field.is_free(&r.field.generate(&[f]));
        t.equal(whole, free, || format!("S={{{}}}", r.coords(f)));
    }
    t.finish()
}

pub fn order_g(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for f in r.field.elements() {
        let principal = r.field.o_of(&r.field.generate(&[f]));
        t.equal(principal, r.field.coz(f), || format!("f={}", r.coords(f)));
    }
    t.finish()
}

/// `O(<S>) = O(S)` for singletons, and for pairs when the ring is small
/// or the pair is `{0,1}`-valued.
pub fn generated(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    let mut check = |s: &[Elem]| {
        let lhs = r.field.o_of(&r.field.generate(s));
        let rhs = r.field.o_of(s);
        t.equal(lhs, rhs, || {
            let names: Vec<String> = s.iter().map(|&f| r.coords(f)).collect();
            format!("S={{{}}}", names.join(","))
        });
    };
    for f in r.field.elements() {
        check(&[f]);
    }
    let binary: Vec<Elem> = if r.points() <= 3 {
        r.field.elements().collect()
    } else {
        r.field
            .elements()
            .filter(|&f| (0..r.points()).all(|i| f / 3usize.pow(i as u32) % 3 < 2))
            .collect()
    };
    for (k, &f) in binary.iter().enumerate() {
        for &g in &binary[k + 1..] {
            check(&[f, g]);
        }
    }
    t.finish()
}

pub fn sum_support(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r).filter(|(a, b)| a <= b) {
        let sum = r.field.sum(&r.ideals[a], &r.ideals[b]);
        t.equal(r.field.o_of(&sum), r.supports[a].union(r.supports[b]), || {
            format!("{} + {}", ideal_name(r, a), ideal_name(r, b))
        });
    }
    t.finish()
}

pub fn cap_subset(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r) {
        let o = r.field.o_of(&r.field.intersection(&r.ideals[a], &r.ideals[b]));
        let meet = r.supports[a].intersection(r.supports[b]);
        t.record(o.is_subset(meet), || {
            Mismatch::new(o.to_string(), meet.to_string(), format!("{} ∩ {}", ideal_name(r, a), ideal_name(r, b)))
        });
    }
    t.finish()
}

pub fn cap_equal(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r) {
        let o = r.field.o_of(&r.field.intersection(&r.ideals[a], &r.ideals[b]));
        t.equal(o, r.supports[a].intersection(r.supports[b]), || {
            format!("{} ∩ {}", ideal_name(r, a), ideal_name(r, b))
        });
    }
    t.finish()
}

/// Strict inclusion `O(S₁ ∩ S₂) ⊊ O(S₁) ∩ O(S₂)` for subsets of the ring.
/// Pairs of ideals never give one, since `O` commutes with finite
/// intersections of ideals; the count of strict ideal pairs is reported.
pub fn cap_strict(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let strict_ideal_pairs = ideal_pairs(r)
        .filter(|&(a, b)| {
            let o = r.field.o_of(&r.field.intersection(&r.ideals[a], &r.ideals[b]));
            o != r.supports[a].intersection(r.supports[b])
        })
        .count();
    let mut searched = 0;
    for a in r.field.elements() {
        for b in a + 1..r.field.size() {
            searched += 1;
            let meet = r.field.coz(a).intersection(r.field.coz(b));
            // {a} ∩ {b} is empty, so its O is empty
            if !meet.is_empty() {
                let example = Mismatch::new(
                    json!({ "S1": [r.coords(a)], "S2": [r.coords(b)], "O(S1 ∩ S2)": PointSet::EMPTY.to_string() }),
                    json!({ "O(S1) ∩ O(S2)": meet.to_string() }),
                    format!(
                        "subsets of F3^{}; {} ideal pairs checked, {} strict",
                        r.points(),
                        r.ideals.len() * r.ideals.len(),
                        strict_ideal_pairs
                    ),
                );
                return Outcome::existence(Some(example), searched);
            }
        }
    }
    Outcome::existence(None, searched)
}

pub fn o_of_i(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for u in PointSet::all_subsets(r.points()) {
        t.equal(r.field.o_of(&r.field.i_of(u)), u.complement(r.points()), || format!("U={u}"));
    }
    t.finish()
}

pub fn i_of_o_is_ann(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for (k, i) in r.ideals.iter().enumerate() {
        let lhs = r.field.i_of(r.field.o_of(i));
        let holds = lhs == r.anns[k];
        t.record(holds, || Mismatch::new(ideal_json(r, &lhs), ideal_json(r, &r.anns[k]), ideal_name(r, k)));
    }
    t.finish()
}

pub fn o_of_ann(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for k in 0..r.ideals.len() {
        t.equal(r.field.o_of(&r.anns[k]), r.supports[k].complement(r.points()), || ideal_name(r, k));
    }
    t.finish()
}

pub fn open_image(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut image: Vec<PointSet> = r.supports.clone();
    image.sort_unstable();
    image.dedup();
    let all: Vec<PointSet> = {
        let mut v: Vec<PointSet> = PointSet::all_subsets(r.points()).collect();
        v.sort_unstable();
        v
    };
    Outcome::compare(
        all.iter().map(ToString::to_string).collect::<Vec<_>>(),
        image.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "open sets vs supports of ideals",
    )
}

pub fn product_zero(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r) {
        let zero = r.products_vanish(&r.ideals[a], &r.ideals[b]);
        t.equal(zero, r.supports[a].is_disjoint(r.supports[b]), || {
            format!("{} · {}", ideal_name(r, a), ideal_name(r, b))
        });
    }
    t.finish()
}

pub fn element_of_a(c: &ReflCtx) -> Outcome {
    let r = need_ring!(c);
    let ground = PointSet::full(r.points());
    let mut t = Tally::new();
    for (k, i) in r.ideals.iter().enumerate() {
        if r.field.is_zero_ideal(i) {
            continue;
        }
        let annihilating = !r.field.is_zero_ideal(&r.anns[k]);
        t.equal(annihilating, r.supports[k] != ground, || ideal_name(r, k));
    }
    t.finish()
}

/// `(IO)³(I) = (IO)(I)` where `IO(I) = I(O(I))`.
pub fn io_cubed_tally(r: &RingModel) -> Tally {
    let io = |i: &[Elem]| -> Ideal { r.field.i_of(r.field.o_of(i)) };
    let mut t = Tally::new();
    for (k, i) in r.ideals.iter().enumerate() {
        let once = io(i);
        let thrice = io(&io(&once));
        let holds = once == thrice;
        t.record(holds, || Mismatch::new(ideal_json(r, &thrice), ideal_json(r, &once), ideal_name(r, k)));
    }
    t
}

/// `I·Ann(J) = 0 ⟺ O(I) ⊆ cl O(J)`; closures are trivial in the ring model.
pub fn ann_product_tally(r: &RingModel) -> Tally {
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r) {
        let zero = r.products_vanish(&r.ideals[a], &r.anns[b]);
        t.equal(zero, r.supports[a].is_subset(r.supports[b]), || {
            format!("{} · Ann({})", ideal_name(r, a), ideal_name(r, b))
        });
    }
    t
}

/// `Ann(I)·Ann(J) = 0 ⟺ cl(O(I) ∪ O(J)) = X`.
pub fn ann_ann_tally(r: &RingModel) -> Tally {
    let ground = PointSet::full(r.points());
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r).filter(|(a, b)| a <= b) {
        let zero = r.products_vanish(&r.anns[a], &r.anns[b]);
        t.equal(zero, r.supports[a].union(r.supports[b]) == ground, || {
            format!("Ann({}) · Ann({})", ideal_name(r, a), ideal_name(r, b))
        });
    }
    t
}

/// `cl O(I) = cl O(J) ⟺ Ann(I) = Ann(J)`.
pub fn equal_ann_tally(r: &RingModel) -> Tally {
    let mut t = Tally::new();
    for (a, b) in ideal_pairs(r).filter(|(a, b)| a < b) {
        t.equal(r.supports[a] == r.supports[b], r.anns[a] == r.anns[b], || {
            format!("{} vs {}", ideal_name(r, a), ideal_name(r, b))
        });
    }
    t
}

/// `I(U)·I = 0 ⟺ O(I) ⊆ cl U`.
pub fn i_of_set_product_tally(r: &RingModel) -> Tally {
    let mut t = Tally::new();
    for u in PointSet::all_subsets(r.points()) {
        let iu = r.field.i_of(u);
        for (k, i) in r.ideals.iter().enumerate() {
            t.equal(r.products_vanish(&iu, i), r.supports[k].is_subset(u), || {
                format!("U={u} {}", ideal_name(r, k))
            });
        }
    }
    t
}

/// `U ∪ V = X ⟺ I(U) ∩ I(V) = 0 ⟺ I(U)·I(V) = 0` on the discrete model.
pub fn dense_union_tally(r: &RingModel) -> Tally {
    let n = r.points();
    let ground = PointSet::full(n);
    let sets: Vec<(PointSet, Ideal)> = PointSet::all_subsets(n).map(|u| (u, r.field.i_of(u))).collect();
    let mut t = Tally::new();
    for (a, (u, iu)) in sets.iter().enumerate() {
        for (v, iv) in &sets[a..] {
            let dense = u.union(*v) == ground;
            let meet_zero = r.field.is_zero_ideal(&r.field.intersection(iu, iv));
            let product_zero = r.products_vanish(iu, iv);
            t.record(dense == meet_zero && meet_zero == product_zero, || {
                Mismatch::new(
                    json!({ "union_dense": dense }),
                    json!({ "intersection_zero": meet_zero, "product_zero": product_zero }),
                    format!("U={u} V={v}"),
                )
            });
        }
    }
    t
}

/// `I(U ∪ V) = I(U) ∩ I(V)`.
pub fn i_of_union_tally(r: &RingModel) -> Tally {
    let n = r.points();
    let mut t = Tally::new();
    for u in PointSet::all_subsets(n) {
        for v in PointSet::all_subsets(n) {
            let lhs = r.field.i_of(u.union(v));
            let rhs = r.field.intersection(&r.field.i_of(u), &r.field.i_of(v));
            let holds = lhs == rhs;
            t.record(holds, || Mismatch::new(ideal_json(r, &lhs), ideal_json(r, &rhs), format!("U={u} V={v}")));
        }
    }
    t
}
