//! Girth and `gi(u, v)`, the length of the shortest cycle through two
//! vertices.
//!
//! Two independent routes are provided. The bounded search enumerates
//! simple cycles up to a length cap by iterative deepening. The disjoint
//! path route finds two internally vertex-disjoint `u`–`v` paths of least
//! total length with a unit-capacity min-cost flow on the node-split graph;
//! it has no cap and certifies when no cycle exists.

use std::collections::VecDeque;

use super::{bfs, DistanceValue, GraphError, Measured, UGraph};

/// Default cycle-length cap for [`gi`].
pub const DEFAULT_GI_CAP: usize = 8;

/// Shortest cycle length, by breadth-first search from every vertex.
pub fn girth<L>(g: &UGraph<L>) -> Measured<DistanceValue> {
    if g.len() < 2 {
        return Measured::Degenerate;
    }
    let n = g.len();
    let mut best: Option<u32> = None;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(u32::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    Measured::Value(best.map_or(DistanceValue::Inf, DistanceValue::Finite))
}

/// `gi(u, v)` by bounded cycle search, falling back on the disjoint-path
/// method to tell "no cycle at all" (`Inf`) from "only cycles longer than
/// `cap`" ([`GraphError::GiCapExceeded`]). With `u == v` this is the
/// shortest cycle through `u`.
pub fn gi<L>(g: &UGraph<L>, u: usize, v: usize, cap: usize) -> Result<DistanceValue, GraphError> {
    g.check(u)?;
    g.check(v)?;
    if let Some(len) = bounded_cycle_search(g, u, v, cap) {
        return Ok(DistanceValue::Finite(len));
    }
    match gi_disjoint_paths(g, u, v)? {
        DistanceValue::Inf => Ok(DistanceValue::Inf),
        DistanceValue::Finite(_) => Err(GraphError::GiCapExceeded { cap }),
    }
}

/// Shortest simple cycle of length at most `cap` through `u` and `v`.
pub fn bounded_cycle_search<L>(g: &UGraph<L>, u: usize, v: usize, cap: usize) -> Option<u32> {
    let from_u = bfs(g, u);
    let from_v = bfs(g, v);
    let d_vu = from_v[u]?;
    let mut search = CycleSearch {
        g,
        start: u,
        through: v,
        from_start: &from_u,
        from_through: &from_v,
        back_from_through: d_vu,
        on_path: vec![false; g.len()],
        target: 0,
    };
    (3..=cap as u32).find(|&k| {
        search.target = k;
        search.on_path.fill(false);
        search.on_path[u] = true;
        search.extend(u, 0, u == v)
    })
}

struct CycleSearch<'a, L> {
    g: &'a UGraph<L>,
    start: usize,
    through: usize,
    from_start: &'a [Option<u32>],
    from_through: &'a [Option<u32>],
    back_from_through: u32,
    on_path: Vec<bool>,
    target: u32,
}

impl<L> CycleSearch<'_, L> {
    /// Depth-first extension of a simple path `start .. at` of length `len`.
    fn extend(&mut self, at: usize, len: u32, seen_through: bool) -> bool {
        let remaining_lower = if seen_through {
            self.from_start[at]
        } else {
            self.from_through[at].map(|d| d + self.back_from_through)
        };
        match remaining_lower {
            Some(r) if len + r <= self.target => {}
            _ => return false,
        }
        for w in self.g.neighbors(at).iter() {
            if w == self.start {
                if seen_through && len + 1 == self.target && self.target >= 3 {
                    return true;
                }
                continue;
            }
            if self.on_path[w] || len + 1 >= self.target {
                continue;
            }
            self.on_path[w] = true;
            let found = self.extend(w, len + 1, seen_through || w == self.through);
            self.on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
}

/// `gi(u, v)` as the least total length of two internally vertex-disjoint
/// `u`–`v` paths. With `u == v`, the minimum over neighbors `w` of
/// `gi(u, w)`, since every cycle through `u` passes one of them.
pub fn gi_disjoint_paths<L>(g: &UGraph<L>, u: usize, v: usize) -> Result<DistanceValue, GraphError> {
    g.check(u)?;
    g.check(v)?;
    if u == v {
        return Ok(g
            .neighbors(u)
            .iter()
            .map(|w| two_disjoint_paths(g, u, w))
            .min()
            .unwrap_or(DistanceValue::Inf));
    }
    Ok(two_disjoint_paths(g, u, v))
}

/// Girth as the least `gi(u, u)` by the disjoint-path method.
pub fn girth_by_disjoint_paths<L>(g: &UGraph<L>) -> Measured<DistanceValue> {
    if g.len() < 2 {
        return Measured::Degenerate;
    }
    Measured::Value(
        (0..g.len())
            .map(|u| gi_disjoint_paths(g, u, u).expect("valid vertex"))
            .min()
            .expect("nonempty"),
    )
}

/// Girth as the least `gi(u, u)` by bounded cycle search.
pub fn girth_by_cycle_search<L>(g: &UGraph<L>, cap: usize) -> Result<Measured<DistanceValue>, GraphError> {
    if g.len() < 2 {
        return Ok(Measured::Degenerate);
    }
    let mut best = DistanceValue::Inf;
    for u in 0..g.len() {
        best = best.min(gi(g, u, u, cap)?);
    }
    Ok(Measured::Value(best))
}

struct Arc {
    to: usize,
    cap: i32,
    cost: i32,
    rev: usize,
}

struct FlowNet {
    arcs: Vec<Vec<Arc>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            arcs: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add(&mut self, from: usize, to: usize, cost: i32) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap: 1, cost, rev: rf });
        self.arcs[to].push(Arc { to: from, cap: 0, cost: -cost, rev: rt });
    }

    /// Pushes one unit along a cheapest residual path; returns its cost.
    fn augment(&mut self, s: usize, t: usize) -> Option<i32> {
        let n = self.arcs.len();
        let mut dist = vec![i32::MAX; n];
        let mut in_queue = vec![false; n];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            in_queue[x] = false;
            for (i, a) in self.arcs[x].iter().enumerate() {
                if a.cap > 0 && dist[x] + a.cost < dist[a.to] {
                    dist[a.to] = dist[x] + a.cost;
                    prev[a.to] = Some((x, i));
                    if !in_queue[a.to] {
                        in_queue[a.to] = true;
                        queue.push_back(a.to);
                    }
                }
            }
        }
        if dist[t] == i32::MAX {
            return None;
        }
        let mut at = t;
        while let Some((x, i)) = prev[at] {
            self.arcs[x][i].cap -= 1;
            let (to, rev) = (self.arcs[x][i].to, self.arcs[x][i].rev);
            self.arcs[to][rev].cap += 1;
            at = x;
        }
        Some(dist[t])
    }
}

fn two_disjoint_paths<L>(g: &UGraph<L>, s: usize, t: usize) -> DistanceValue {
    // vertex x splits into in-node 2x and out-node 2x+1
    let mut net = FlowNet::new(2 * g.len());
    for x in 0..g.len() {
        if x != s && x != t {
            net.add(2 * x, 2 * x + 1, 0);
        }
        for y in g.neighbors(x).iter() {
            net.add(2 * x + 1, 2 * y, 1);
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let total = net
        .augment(source, sink)
        .and_then(|a| net.augment(source, sink).map(|b| a + b));
    match total {
        Some(len) => DistanceValue::Finite(len as u32),
        None => DistanceValue::Inf,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use DistanceValue::{Finite, Inf};

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&named::cycle(4)), Measured::Value(Finite(4)));
        assert_eq!(girth(&named::cycle(7)), Measured::Value(Finite(7)));
        assert_eq!(girth(&named::path(5)), Measured::Value(Inf));
        assert_eq!(girth(&named::star(3)), Measured::Value(Inf));
        assert_eq!(girth(&named::complete(4)), Measured::Value(Finite(3)));
        assert_eq!(girth(&named::empty(1)), Measured::Degenerate);
    }

    #[test]
    fn gi_examples() {
        let c4 = named::cycle(4);
        assert_eq!(gi(&c4, 0, 2, DEFAULT_GI_CAP), Ok(Finite(4)));
        assert_eq!(gi_disjoint_paths(&c4, 0, 2), Ok(Finite(4)));
        let k4 = named::complete(4);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(gi(&k4, u, v, DEFAULT_GI_CAP), Ok(Finite(3)));
                assert_eq!(gi_disjoint_paths(&k4, u, v), Ok(Finite(3)));
            }
        }
        let tree = named::path(4);
        assert_eq!(gi(&tree, 0, 3, DEFAULT_GI_CAP), Ok(Inf));
        assert_eq!(gi_disjoint_paths(&tree, 1, 1), Ok(Inf));
    }

    #[test]
    fn cap_breach_is_an_error() {
        let c10 = named::cycle(10);
        assert_eq!(gi(&c10, 0, 5, 8), Err(GraphError::GiCapExceeded { cap: 8 }));
        assert_eq!(gi(&c10, 0, 5, 10), Ok(Finite(10)));
        assert_eq!(gi_disjoint_paths(&c10, 0, 5), Ok(Finite(10)));
        assert_eq!(gi(&c10, 0, 11, 8), Err(GraphError::UnknownVertex(11)));
    }

    #[test]
    fn cycle_through_both_not_just_one() {
        // two triangles joined by a bridge 2-3: no cycle contains 0 and 5
        let g = UGraph::from_edges(
            (0..6).collect(),
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        assert_eq!(gi(&g, 0, 5, 8), Ok(Inf));
        assert_eq!(gi_disjoint_paths(&g, 0, 5), Ok(Inf));
        assert_eq!(gi(&g, 0, 2, 8), Ok(Finite(3)));
        assert_eq!(girth_by_disjoint_paths(&g), Measured::Value(Finite(3)));
        assert_eq!(girth_by_cycle_search(&g, 8), Ok(Measured::Value(Finite(3))));
    }
}
