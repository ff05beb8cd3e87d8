//! DOT, DIMACS and JSON renderings of a labeled graph.

use std::fmt::{Display, Write};

use serde::Serialize;

use super::UGraph;

pub fn to_dot<L: Display>(g: &UGraph<L>) -> String {
    let mut out = String::from("graph G {\n");
    for (v, label) in g.labels().iter().enumerate() {
        let label = label.to_string().replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  v{v} [label=\"{label}\"];").expect("write to String");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  v{u} -- v{v};").expect("write to String");
    }
    out.push_str("}\n");
    out
}

/// DIMACS edge format with 1-based vertices; labels go in `c` comments.
pub fn to_dimacs<L: Display>(g: &UGraph<L>) -> String {
    let mut out = String::new();
    for (v, label) in g.labels().iter().enumerate() {
        writeln!(out, "c {} {label}", v + 1).expect("write to String");
    }
    writeln!(out, "p edge {} {}", g.len(), g.edge_count()).expect("write to String");
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("write to String");
    }
    out
}

#[derive(Serialize)]
struct GraphJson<'a, L> {
    vertices: &'a [L],
    edges: Vec<(usize, usize)>,
}

/// `{"vertices": [...labels...], "edges": [[u, v], ...]}` with 0-based
/// indices into `vertices`.
pub fn to_json<L: Serialize>(g: &UGraph<L>) -> String {
    serde_json::to_string(&GraphJson {
        vertices: g.labels(),
        edges: g.edges(),
    })
    .expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn dot_and_dimacs() {
        let g = named::path(3);
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph G {\n"));
        assert!(dot.contains("  v1 [label=\"1\"];\n"));
        assert!(dot.contains("  v0 -- v1;\n  v1 -- v2;\n"));

        let dimacs = to_dimacs(&g);
        assert!(dimacs.contains("p edge 3 2\n"));
        assert!(dimacs.ends_with("e 1 2\ne 2 3\n"));
    }

    #[test]
    fn json_shape() {
        let g = UGraph::from_edges(vec![vec![0u8], vec![1]], [(0, 1)]).unwrap();
        assert_eq!(
            to_json(&g),
            r#"{"vertices":[[0],[1]],"edges":[[0,1]]}"#
        );
    }
}
