use std::fmt::Display;

use serde::{Deserialize, Serialize};

use super::{
    chromatic_number, clique_number, dominating_number, girth, is_bipartite, is_complemented,
    is_complete_bipartite, is_hypertriangulated, is_star, is_triangulated, DistanceMatrix,
    DistanceValue, Measured, UGraph,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub label: String,
    pub eccentricity: Measured<DistanceValue>,
    pub degree: usize,
    pub is_leaf: bool,
}

/// Every invariant the tool computes for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degenerate: bool,
    pub diameter: Measured<DistanceValue>,
    pub radius: Measured<DistanceValue>,
    pub girth: Measured<DistanceValue>,
    pub dominating_number: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub is_star: bool,
    pub is_bipartite: bool,
    pub is_complete_bipartite: bool,
    pub is_triangulated: bool,
    pub is_hypertriangulated: bool,
    pub is_complemented: bool,
    pub vertices: Vec<VertexReport>,
}

impl InvariantReport {
    pub fn compute<L: Display + Sync>(g: &UGraph<L>) -> Self {
        let dm = DistanceMatrix::new(g);
        let vertices = (0..g.len())
            .map(|v| {
                let degree = g.neighbors(v).len();
                VertexReport {
                    label: g.labels()[v].to_string(),
                    eccentricity: dm.eccentricity(v),
                    degree,
                    is_leaf: degree == 1,
                }
            })
            .collect();
        InvariantReport {
            vertex_count: g.len(),
            edge_count: g.edge_count(),
            degenerate: g.len() < 2,
            diameter: dm.diameter(),
            radius: dm.radius(),
            girth: girth(g),
            dominating_number: dominating_number(g),
            clique_number: clique_number(g),
            chromatic_number: chromatic_number(g),
            is_star: is_star(g),
            is_bipartite: is_bipartite(g),
            is_complete_bipartite: is_complete_bipartite(g),
            is_triangulated: is_triangulated(g),
            is_hypertriangulated: is_hypertriangulated(g),
            is_complemented: is_complemented(g),
            vertices,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn report_for_c4() {
        let r = InvariantReport::compute(&named::cycle(4));
        assert_eq!(r.vertex_count, 4);
        assert_eq!(r.edge_count, 4);
        assert_eq!(r.girth, Measured::Value(DistanceValue::Finite(4)));
        assert_eq!(r.dominating_number, 2);
        assert_eq!(r.chromatic_number, 2);
        assert!(r.is_complete_bipartite && r.is_complemented && !r.is_star);
        assert!(r.vertices.iter().all(|v| v.degree == 2 && !v.is_leaf));
    }

    #[test]
    fn single_vertex_is_degenerate() {
        let r = InvariantReport::compute(&named::empty(1));
        assert!(r.degenerate);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["diameter"], "degenerate");
        assert_eq!(json["vertices"][0]["eccentricity"], "degenerate");
        let back: InvariantReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
