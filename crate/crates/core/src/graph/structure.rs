use super::{bfs, GraphError, UGraph};

pub fn is_leaf<L>(g: &UGraph<L>, v: usize) -> Result<bool, GraphError> {
    Ok(g.degree(v)? == 1)
}

/// Some vertex is adjacent to all the others. Needs at least two vertices.
pub fn is_star<L>(g: &UGraph<L>) -> bool {
    star_center(g).is_some()
}

pub fn star_center<L>(g: &UGraph<L>) -> Option<usize> {
    if g.len() < 2 {
        return None;
    }
    (0..g.len()).find(|&v| g.neighbors(v).len() == g.len() - 1)
}

/// Proper 2-coloring, or `None` if an odd cycle exists.
pub fn two_coloring<L>(g: &UGraph<L>) -> Option<Vec<bool>> {
    let n = g.len();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("pushed vertices are colored");
            for w in g.neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.expect("all colored")).collect())
}

pub fn is_bipartite<L>(g: &UGraph<L>) -> bool {
    two_coloring(g).is_some()
}

/// `K_{a,b}` with `a, b ≥ 1`: two nonempty parts, every cross pair an edge.
pub fn is_complete_bipartite<L>(g: &UGraph<L>) -> bool {
    if g.len() < 2 || bfs(g, 0).iter().any(Option::is_none) {
        return false;
    }
    let Some(side) = two_coloring(g) else {
        return false;
    };
    let a = side.iter().filter(|&&s| s).count();
    let b = side.len() - a;
    a > 0 && b > 0 && g.edge_count() == a * b
}

/// Every vertex lies on a triangle. Vacuously true on the empty graph.
pub fn is_triangulated<L>(g: &UGraph<L>) -> bool {
    (0..g.len()).all(|v| {
        g.neighbors(v)
            .iter()
            .any(|w| g.neighbors(v).intersects(g.neighbors(w)))
    })
}

/// Every edge lies on a triangle. Vacuously true without edges.
pub fn is_hypertriangulated<L>(g: &UGraph<L>) -> bool {
    g.edges()
        .into_iter()
        .all(|(u, v)| g.neighbors(u).intersects(g.neighbors(v)))
}

/// `u ⊥ v`: adjacent with no common neighbor.
pub fn orthogonal<L>(g: &UGraph<L>, u: usize, v: usize) -> Result<bool, GraphError> {
    g.check(u)?;
    g.check(v)?;
    Ok(g.adjacent(u, v) && !g.neighbors(u).intersects(g.neighbors(v)))
}

/// Some orthogonal partner for `u`, smallest index first.
pub fn orthogonal_partner<L>(g: &UGraph<L>, u: usize) -> Option<usize> {
    g.neighbors(u)
        .iter()
        .find(|&v| !g.neighbors(u).intersects(g.neighbors(v)))
}

/// Every vertex has an orthogonal partner. Vacuously true when empty.
pub fn is_complemented<L>(g: &UGraph<L>) -> bool {
    (0..g.len()).all(|u| orthogonal_partner(g, u).is_some())
}

pub fn is_connected<L>(g: &UGraph<L>) -> bool {
    g.is_empty() || bfs(g, 0).iter().all(Option::is_some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn leaves_and_stars() {
        let star = named::star(3);
        assert_eq!(star_center(&star), Some(0));
        assert!(is_star(&star));
        assert_eq!(is_leaf(&star, 1), Ok(true));
        assert_eq!(is_leaf(&star, 0), Ok(false));
        assert!(is_star(&named::path(2)));
        assert!(!is_star(&named::empty(1)));
        assert!(!is_star(&named::cycle(4)));
        assert_eq!(is_leaf(&star, 4), Err(GraphError::UnknownVertex(4)));
    }

    #[test]
    fn bipartiteness() {
        assert!(is_complete_bipartite(&named::cycle(4)));
        assert!(is_bipartite(&named::cycle(6)));
        assert!(!is_complete_bipartite(&named::cycle(6)));
        assert!(!is_bipartite(&named::complete(3)));
        assert!(is_complete_bipartite(&named::path(2)));
        assert!(is_complete_bipartite(&named::star(4)));
        assert!(!is_complete_bipartite(&named::empty(2)));
    }

    #[test]
    fn triangles() {
        let k4 = named::complete(4);
        assert!(is_triangulated(&k4) && is_hypertriangulated(&k4));
        let p3 = named::path(3);
        assert!(!is_triangulated(&p3) && !is_hypertriangulated(&p3));
        let bowtie =
            UGraph::from_edges((0..5).collect(), [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
                .unwrap();
        assert!(is_triangulated(&bowtie));
        assert!(is_hypertriangulated(&bowtie));
        assert!(is_triangulated(&named::empty(0)));
    }

    #[test]
    fn orthogonality() {
        let k2 = named::complete(2);
        assert_eq!(orthogonal(&k2, 0, 1), Ok(true));
        assert!(is_complemented(&k2));

        let k3 = named::complete(3);
        assert_eq!(orthogonal(&k3, 0, 1), Ok(false));
        assert!(!is_complemented(&k3));

        let c4 = named::cycle(4);
        for (u, v) in c4.edges() {
            assert_eq!(orthogonal(&c4, u, v), Ok(true));
        }
        assert_eq!(orthogonal(&c4, 0, 2), Ok(false));
        assert!(is_complemented(&c4));
    }
}
