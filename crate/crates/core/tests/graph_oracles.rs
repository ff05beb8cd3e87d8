//! Exact graph searches checked against exhaustive enumeration on random
//! graphs of up to 12 vertices.

use annigraph_core::graph::*;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = UGraph<usize>> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            UGraph::from_edges((0..n).collect(), edges).unwrap()
        })
    })
}

fn adjacency_masks(g: &UGraph<usize>) -> Vec<u32> {
    (0..g.len())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect()
}

fn brute_dominating(g: &UGraph<usize>) -> usize {
    let n = g.len();
    let closed: Vec<u32> = adjacency_masks(g)
        .iter()
        .enumerate()
        .map(|(v, m)| m | 1 << v)
        .collect();
    let full = (1u32 << n) - 1;
    (0u32..1 << n)
        .filter(|s| (0..n).filter(|v| s >> v & 1 == 1).fold(0, |c, v| c | closed[v]) == full)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn brute_clique(g: &UGraph<usize>) -> usize {
    let n = g.len();
    let adj = adjacency_masks(g);
    (0u32..1 << n)
        .filter(|s| (0..n).filter(|v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !adj[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn brute_chromatic(g: &UGraph<usize>) -> usize {
    let n = g.len();
    (1..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|code| {
                let colors: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
            })
        })
        .unwrap()
}

/// Shortest simple cycle by exhaustive DFS over all vertex sequences.
fn brute_girth(g: &UGraph<usize>) -> DistanceValue {
    fn walk(g: &UGraph<usize>, start: usize, at: usize, len: u32, seen: &mut Vec<bool>, best: &mut Option<u32>) {
        for w in g.neighbors(at).iter() {
            if w == start && len >= 2 {
                *best = Some(best.map_or(len + 1, |b| b.min(len + 1)));
            } else if !seen[w] && w > start {
                seen[w] = true;
                walk(g, start, w, len + 1, seen, best);
                seen[w] = false;
            }
        }
    }
    let mut best = None;
    for s in 0..g.len() {
        let mut seen = vec![false; g.len()];
        seen[s] = true;
        walk(g, s, s, 0, &mut seen, &mut best);
    }
    best.map_or(DistanceValue::Inf, DistanceValue::Finite)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dominating_number_is_exact(g in arb_graph(12)) {
        prop_assert_eq!(dominating_number(&g), brute_dominating(&g));
        prop_assert!(dominating_number(&g) <= g.len());
    }

    #[test]
    fn clique_number_is_exact(g in arb_graph(12)) {
        prop_assert_eq!(clique_number(&g), brute_clique(&g));
    }

    #[test]
    fn chromatic_number_is_exact(g in arb_graph(8)) {
        prop_assert_eq!(chromatic_number(&g), brute_chromatic(&g));
    }

    #[test]
    fn colorings_and_cliques_are_valid(g in arb_graph(12)) {
        let coloring = optimal_coloring(&g);
        for (u, v) in g.edges() {
            prop_assert_ne!(coloring[u], coloring[v]);
        }
        let clique = maximum_clique(&g);
        for &a in &clique {
            for &b in &clique {
                prop_assert!(a == b || g.adjacent(a, b));
            }
        }
        prop_assert!(clique_number(&g) <= chromatic_number(&g));
    }

    #[test]
    fn girth_routes_agree(g in arb_graph(10)) {
        let expected = if g.len() < 2 { Measured::Degenerate } else { Measured::Value(brute_girth(&g)) };
        prop_assert_eq!(girth(&g), expected);
        prop_assert_eq!(girth_by_disjoint_paths(&g), expected);
        prop_assert_eq!(girth_by_cycle_search(&g, 10).unwrap(), expected);
    }

    #[test]
    fn gi_routes_agree(g in arb_graph(9), a in 0usize..9, b in 0usize..9) {
        let (u, v) = (a % g.len(), b % g.len());
        let flow = gi_disjoint_paths(&g, u, v).unwrap();
        prop_assert_eq!(gi(&g, u, v, 9).unwrap(), flow);
        if let DistanceValue::Finite(len) = flow {
            prop_assert!(len >= 3);
        }
    }

    #[test]
    fn distance_and_structure(g in arb_graph(12)) {
        let dm = DistanceMatrix::new(&g);
        if let (Measured::Value(r), Measured::Value(d)) = (dm.radius(), dm.diameter()) {
            prop_assert!(r <= d);
        }
        if is_complete_bipartite(&g) {
            prop_assert!(is_bipartite(&g));
        }
        if is_star(&g) {
            prop_assert!(dm.diameter().value().unwrap() <= DistanceValue::Finite(2));
        }
        if is_hypertriangulated(&g) && g.edges().len() > 0 {
            let isolated = (0..g.len()).any(|v| g.neighbors(v).is_empty());
            prop_assert!(isolated || is_triangulated(&g));
        }
    }
}
