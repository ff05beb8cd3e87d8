//! Simple undirected graphs with exact invariants.

mod bitset;
mod cycles;
mod distance;
pub mod export;
mod report;
mod search;
mod structure;
mod ugraph;

pub use bitset::VertexSet;
pub use cycles::{
    bounded_cycle_search, gi, gi_disjoint_paths, girth, girth_by_cycle_search,
    girth_by_disjoint_paths, DEFAULT_GI_CAP,
};
pub use distance::{bfs, diameter, distance, eccentricity, radius, DistanceMatrix, DistanceValue, Measured};
pub use report::{InvariantReport, VertexReport};
pub use search::{
    chromatic_number, clique_number, dominating_number, maximum_clique, minimum_dominating_set,
    optimal_coloring,
};
pub use structure::{
    is_bipartite, is_complemented, is_complete_bipartite, is_connected, is_hypertriangulated,
    is_leaf, is_star, is_triangulated, orthogonal, orthogonal_partner, star_center, two_coloring,
};
pub use ugraph::{named, GraphError, UGraph};
