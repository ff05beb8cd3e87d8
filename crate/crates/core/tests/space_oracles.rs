//! Finite topologies and the ideal operators on them, checked against
//! definitions evaluated directly on the list of open sets.

use annigraph_core::ideal::{ann_open, build_ag_discrete, build_dg, i_of_set, tau_star};
use annigraph_core::topo::{enumerate_canonical, enumerate_topologies, MAX_ENUM_POINTS};
use annigraph_core::{PointSet, Topology};
use proptest::prelude::*;

/// Topologies on up to 6 points generated by a random family of subsets.
fn arb_topology() -> impl Strategy<Value = Topology> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(0u32..(1 << n), 0..6).prop_map(move |masks| {
            Topology::generated_by(n, masks.into_iter().map(PointSet::from_mask)).unwrap()
        })
    })
}

fn interior(t: &Topology, u: PointSet) -> PointSet {
    t.opens()
        .iter()
        .filter(|g| g.is_subset(u))
        .fold(PointSet::EMPTY, |a, g| a.union(*g))
}

fn closure(t: &Topology, u: PointSet) -> PointSet {
    interior(t, u.complement(t.n())).complement(t.n())
}

fn smallest_open_around(t: &Topology, x: usize) -> PointSet {
    t.opens()
        .iter()
        .filter(|g| g.contains(x))
        .fold(t.ground(), |a, g| a.intersection(*g))
}

/// Largest family of pairwise disjoint nonempty open sets.
fn max_packing(opens: &[PointSet], used: PointSet) -> usize {
    opens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty() && g.is_disjoint(used))
        .map(|(i, g)| 1 + max_packing(&opens[i + 1..], used.union(*g)))
        .max()
        .unwrap_or(0)
}

/// Smallest base: fewest open sets whose unions give every open set.
fn min_base_size(t: &Topology) -> usize {
    let nonempty: Vec<PointSet> = t.opens().iter().copied().filter(|g| !g.is_empty()).collect();
    (0..=nonempty.len())
        .find(|&k| {
            subsets_of_size(nonempty.len(), k).any(|pick| {
                let base: Vec<PointSet> = pick.iter().map(|&i| nonempty[i]).collect();
                nonempty.iter().all(|&g| {
                    base.iter()
                        .filter(|b| b.is_subset(g))
                        .fold(PointSet::EMPTY, |a, b| a.union(*b))
                        == g
                })
            })
        })
        .unwrap()
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn clopen_count(t: &Topology) -> u64 {
    t.opens()
        .iter()
        .filter(|g| t.opens().contains(&g.complement(t.n())))
        .count() as u64
}

#[test]
fn labeled_counts_match_generate_and_filter() {
    for (n, expected) in [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355), (5, 6942)] {
        assert_eq!(enumerate_topologies(n, MAX_ENUM_POINTS).unwrap().len(), expected, "n={n}");
    }
    // every family of proper nonempty subsets of a 3-point set
    let full = 0b111u32;
    let mut count = 0;
    for choice in 0u32..1 << 6 {
        let mut fam = vec![0, full];
        fam.extend((1..full).filter(|s| choice >> (s - 1) & 1 == 1));
        if fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b)))) {
            count += 1;
        }
    }
    assert_eq!(count, 29);
}

#[test]
fn canonical_counts() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_canonical(n, MAX_ENUM_POINTS).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 3, 9, 33, 139]);
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let all: Vec<Topology> = enumerate_topologies(4, MAX_ENUM_POINTS).unwrap().collect();
    assert!(all.windows(2).all(|w| w[0].opens() < w[1].opens()));
}

#[test]
fn dg_of_discrete_matches_ag() {
    for n in 2..=5 {
        assert_eq!(build_dg(&Topology::discrete(n)), build_ag_discrete(n).unwrap());
    }
}

proptest! {
    #[test]
    fn interior_and_closure(t in arb_topology(), mask in 0u32..64) {
        let u = PointSet::from_mask(mask).intersection(t.ground());
        prop_assert_eq!(t.interior(u), interior(&t, u));
        prop_assert_eq!(t.closure(u), closure(&t, u));
    }

    #[test]
    fn minimal_neighborhoods_weight_cellularity(t in arb_topology()) {
        for x in 0..t.n() {
            prop_assert_eq!(t.minimal_neighborhood(x).unwrap(), smallest_open_around(&t, x));
        }
        prop_assert_eq!(t.cellularity(), max_packing(t.opens(), PointSet::EMPTY));
        if t.opens().len() <= 20 {
            prop_assert_eq!(t.weight(), min_base_size(&t));
        }
    }

    #[test]
    fn binary_functions_are_clopen_sets(t in arb_topology()) {
        prop_assert_eq!(t.continuous_binary_functions(), clopen_count(&t));
        prop_assert_eq!(t.continuous_binary_functions(), 1u64 << t.component_count());
        let r = t.tychonoff_reflection();
        prop_assert_eq!(r.space, Topology::discrete(t.component_count()));
    }

    #[test]
    fn canonical_form_ignores_labels(t in arb_topology(), seed in any::<u64>()) {
        let mut image: Vec<usize> = (0..t.n()).collect();
        let mut s = seed;
        for i in (1..image.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            image.swap(i, (s >> 33) as usize % (i + 1));
        }
        let moved = t.relabel(&image);
        prop_assert_eq!(moved.canonical_form().unwrap(), t.canonical_form().unwrap());
        prop_assert_eq!(moved.classify(), t.classify());
    }

    #[test]
    fn annihilator_is_idempotent_after_two_steps(t in arb_topology()) {
        for &g in t.opens() {
            let ann = |h| ann_open(&t, h).unwrap();
            prop_assert_eq!(ann(ann(ann(g))), ann(g));
            prop_assert_eq!(ann(g), interior(&t, g.complement(t.n())));
        }
    }

    #[test]
    fn ideal_of_a_set_sees_only_its_closure(t in arb_topology(), a in 0u32..64, b in 0u32..64) {
        let (u, v) = (PointSet::from_mask(a).intersection(t.ground()), PointSet::from_mask(b).intersection(t.ground()));
        prop_assert_eq!(i_of_set(&t, u), i_of_set(&t, closure(&t, u)));
        let dense = closure(&t, u.union(v)) == t.ground();
        prop_assert_eq!(i_of_set(&t, u).is_disjoint(i_of_set(&t, v)), dense);
        prop_assert_eq!(i_of_set(&t, u.union(v)), i_of_set(&t, u).intersection(i_of_set(&t, v)));
    }

    #[test]
    fn equal_closures_iff_equal_annihilators(t in arb_topology()) {
        for &g in t.opens() {
            for &h in t.opens() {
                let same_closure = closure(&t, g) == closure(&t, h);
                prop_assert_eq!(same_closure, ann_open(&t, g).unwrap() == ann_open(&t, h).unwrap());
            }
        }
    }

    #[test]
    fn dg_vertices_and_edges(t in arb_topology()) {
        let g = build_dg(&t);
        let expected: Vec<PointSet> = t
            .opens()
            .iter()
            .copied()
            .filter(|o| !o.is_empty() && !interior(&t, o.complement(t.n())).is_empty())
            .collect();
        prop_assert_eq!(g.labels(), expected.as_slice());
        prop_assert_eq!(tau_star(&t), expected.clone());
        for u in 0..g.len() {
            for v in 0..g.len() {
                prop_assert_eq!(g.adjacent(u, v), u != v && expected[u].is_disjoint(expected[v]));
            }
        }
    }
}
