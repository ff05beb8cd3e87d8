//! Exact dominating number, clique number and chromatic number.
//!
//! All three are branch-and-bound searches over [`VertexSet`] bitsets with
//! vertices visited in index order, so results and returned witnesses are
//! deterministic.

use super::{UGraph, VertexSet};

fn closed_neighborhood<L>(g: &UGraph<L>, v: usize) -> VertexSet {
    let mut s = g.neighbors(v).clone();
    s.insert(v);
    s
}

/// Least size of a dominating set. `0` on the empty graph.
pub fn dominating_number<L>(g: &UGraph<L>) -> usize {
    minimum_dominating_set(g).len()
}

/// A minimum dominating set, as sorted vertex indices.
pub fn minimum_dominating_set<L>(g: &UGraph<L>) -> Vec<usize> {
    let n = g.len();
    if n == 0 {
        return Vec::new();
    }
    let closed: Vec<VertexSet> = (0..n).map(|v| closed_neighborhood(g, v)).collect();
    let max_cover = closed.iter().map(VertexSet::len).max().unwrap_or(1);
    let mut best = greedy_dominating(&closed, n);
    let mut chosen = Vec::new();
    dominate(&closed, max_cover, &VertexSet::full(n), &mut chosen, &mut best);
    best.sort_unstable();
    best
}

fn greedy_dominating(closed: &[VertexSet], n: usize) -> Vec<usize> {
    let mut left = VertexSet::full(n);
    let mut picked = Vec::new();
    while !left.is_empty() {
        let v = (0..n)
            .max_by_key(|&v| (closed[v].intersection_len(&left), std::cmp::Reverse(v)))
            .expect("nonempty");
        picked.push(v);
        left.difference_with(&closed[v]);
    }
    picked
}

fn dominate(
    closed: &[VertexSet],
    max_cover: usize,
    undominated: &VertexSet,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if undominated.is_empty() {
        if chosen.len() < best.len() {
            best.clone_from(chosen);
        }
        return;
    }
    let lower = undominated.len().div_ceil(max_cover);
    if chosen.len() + lower >= best.len() {
        return;
    }
    // branch on the undominated vertex with the fewest possible dominators
    let pivot = undominated
        .iter()
        .min_by_key(|&u| closed[u].len())
        .expect("nonempty");
    for v in closed[pivot].iter() {
        chosen.push(v);
        dominate(closed, max_cover, &undominated.difference(&closed[v]), chosen, best);
        chosen.pop();
    }
}

/// Size of a largest clique. `0` on the empty graph.
pub fn clique_number<L>(g: &UGraph<L>) -> usize {
    maximum_clique(g).len()
}

/// A maximum clique, as sorted vertex indices.
pub fn maximum_clique<L>(g: &UGraph<L>) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, g.all_vertices(), &mut current, &mut best);
    best.sort_unstable();
    best
}

fn expand_clique<L>(g: &UGraph<L>, mut candidates: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            best.clone_from(current);
        }
        return;
    }
    let (order, bounds) = color_bound(g, &candidates);
    for (&v, &bound) in order.iter().zip(&bounds).rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        expand_clique(g, candidates.intersection(g.neighbors(v)), current, best);
        current.pop();
        candidates.remove(v);
    }
}

/// Greedy sequential coloring of `candidates`; returns vertices in color
/// class order with the running color count as an upper bound on the
/// clique size among each prefix.
fn color_bound<L>(g: &UGraph<L>, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.len());
    let mut bounds = Vec::with_capacity(candidates.len());
    let mut left = candidates.clone();
    let mut color = 0;
    while !left.is_empty() {
        color += 1;
        let mut class = left.clone();
        while let Some(v) = class.first() {
            class.remove(v);
            class.difference_with(g.neighbors(v));
            left.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

/// Least number of colors in a proper coloring. `0` on the empty graph.
pub fn chromatic_number<L>(g: &UGraph<L>) -> usize {
    optimal_coloring(g).into_iter().max().map_or(0, |c| c + 1)
}

/// A proper coloring with the least number of colors, colors `0..χ`.
pub fn optimal_coloring<L>(g: &UGraph<L>) -> Vec<usize> {
    let n = g.len();
    if n == 0 {
        return Vec::new();
    }
    let upper = dsatur(g);
    let upper_k = upper.iter().max().map_or(0, |c| c + 1);
    let clique = maximum_clique(g);
    for k in clique.len().max(1)..upper_k {
        let mut colors = vec![usize::MAX; n];
        // the clique takes fixed colors, breaking color symmetry
        for (c, &v) in clique.iter().enumerate() {
            colors[v] = c;
        }
        if color_with(g, k, &mut colors) {
            return colors;
        }
    }
    upper
}

/// Greedy DSATUR coloring.
fn dsatur<L>(g: &UGraph<L>) -> Vec<usize> {
    let n = g.len();
    let mut colors = vec![usize::MAX; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (saturation(g, &colors, v), g.neighbors(v).len(), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        colors[v] = (0..).find(|&c| g.neighbors(v).iter().all(|w| colors[w] != c)).expect("unbounded");
    }
    colors
}

fn saturation<L>(g: &UGraph<L>, colors: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|w| colors[w])
        .filter(|&c| c != usize::MAX)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Extends a partial coloring to a proper `k`-coloring, if one exists.
fn color_with<L>(g: &UGraph<L>, k: usize, colors: &mut [usize]) -> bool {
    let pick = (0..g.len())
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| (saturation(g, colors, v), g.neighbors(v).len(), std::cmp::Reverse(v)));
    let Some(v) = pick else {
        return true;
    };
    let used = colors.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |c| c + 1);
    // a fresh color is interchangeable with any other fresh one
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|w| colors[w] != c) {
            colors[v] = c;
            if color_with(g, k, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn petersen() -> UGraph<usize> {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        UGraph::from_edges((0..10).collect(), edges).unwrap()
    }

    #[test]
    fn named_graphs() {
        assert_eq!(dominating_number(&named::star(5)), 1);
        assert_eq!(dominating_number(&named::cycle(6)), 2);
        assert_eq!(dominating_number(&named::path(7)), 3);
        assert_eq!(dominating_number(&named::empty(4)), 4);
        assert_eq!(dominating_number(&named::empty(0)), 0);

        assert_eq!(clique_number(&named::complete(5)), 5);
        assert_eq!(clique_number(&named::cycle(5)), 2);
        assert_eq!(clique_number(&named::empty(3)), 1);
        assert_eq!(clique_number(&named::empty(0)), 0);

        assert_eq!(chromatic_number(&named::cycle(5)), 3);
        assert_eq!(chromatic_number(&named::cycle(6)), 2);
        assert_eq!(chromatic_number(&named::complete(4)), 4);
        assert_eq!(chromatic_number(&named::empty(3)), 1);
        assert_eq!(chromatic_number(&named::empty(0)), 0);
    }

    #[test]
    fn petersen_graph() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(dominating_number(&p), 3);
        assert_eq!(clique_number(&p), 2);
        assert_eq!(chromatic_number(&p), 3);
    }

    #[test]
    fn witnesses_are_valid() {
        let p = petersen();
        let dom = minimum_dominating_set(&p);
        let mut covered = VertexSet::new(p.len());
        for &v in &dom {
            covered.union_with(&closed_neighborhood(&p, v));
        }
        assert_eq!(covered.len(), p.len());

        let coloring = optimal_coloring(&p);
        for (u, v) in p.edges() {
            assert_ne!(coloring[u], coloring[v]);
        }

        let clique = maximum_clique(&named::complete(4));
        assert_eq!(clique, vec![0, 1, 2, 3]);
    }
}
