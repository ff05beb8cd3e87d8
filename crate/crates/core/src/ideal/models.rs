use super::IdealError;
use crate::graph::UGraph;
use crate::{PointSet, Topology};

/// Largest point count accepted by [`build_ag_discrete`] (4094 vertices).
pub const MAX_AG_POINTS: usize = 12;

/// The annihilating-ideal graph of `C(X)` for discrete `X` on `n` points:
/// vertices are the nonempty proper subsets, adjacency is disjointness.
pub fn build_ag_discrete(n: usize) -> Result<UGraph<PointSet>, IdealError> {
    if !(2..=MAX_AG_POINTS).contains(&n) {
        return Err(IdealError::PointsOutOfRange { n, min: 2, max: MAX_AG_POINTS });
    }
    Ok(disjointness_graph(proper_subsets(n)))
}

/// The annihilating-ideal graph of `C(X)` for an arbitrary finite space,
/// built on its discrete reflection. Empty when the space is connected.
pub fn ag_of_space(t: &Topology) -> Result<UGraph<PointSet>, IdealError> {
    let m = t.component_count();
    if m < 2 {
        return Ok(disjointness_graph(Vec::new()));
    }
    build_ag_discrete(m)
}

/// Nonempty open sets whose complement has nonempty interior.
pub fn tau_star(t: &Topology) -> Vec<PointSet> {
    t.opens().iter().copied().filter(|&g| is_vertex_open(t, g)).collect()
}

pub fn is_vertex_open(t: &Topology, g: PointSet) -> bool {
    t.is_open(g) && !g.is_empty() && !t.interior(g.complement(t.n())).is_empty()
}

/// The disjoint open set graph on `tau_star(t)`.
pub fn build_dg(t: &Topology) -> UGraph<PointSet> {
    disjointness_graph(tau_star(t))
}

fn proper_subsets(n: usize) -> Vec<PointSet> {
    (1..(1u32 << n) - 1).map(PointSet::from_mask).collect()
}

fn disjointness_graph(labels: Vec<PointSet>) -> UGraph<PointSet> {
    UGraph::from_relation(labels, |a, b| a.is_disjoint(*b)).expect("labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, is_star, DistanceValue, Measured};

    #[test]
    fn ag_small_cases() {
        let g2 = build_ag_discrete(2).unwrap();
        assert_eq!((g2.len(), g2.edge_count()), (2, 1));
        assert!(is_star(&g2));
        let g3 = build_ag_discrete(3).unwrap();
        assert_eq!((g3.len(), g3.edge_count()), (6, 6));
        assert_eq!(diameter(&g3), Measured::Value(DistanceValue::Finite(3)));
        assert!(build_ag_discrete(1).is_err());
        assert!(build_ag_discrete(MAX_AG_POINTS + 1).is_err());
    }

    #[test]
    fn dg_examples() {
        for n in 2..=5 {
            assert_eq!(build_dg(&Topology::discrete(n)), build_ag_discrete(n).unwrap());
        }
        assert!(build_dg(&Topology::sierpinski()).is_empty());
        let t = Topology::new(
            4,
            vec![
                PointSet::EMPTY,
                PointSet::from_mask(0b0011),
                PointSet::from_mask(0b1100),
                PointSet::full(4),
            ],
        )
        .unwrap();
        let g = build_dg(&t);
        assert_eq!((g.len(), g.edge_count()), (2, 1));
    }

    #[test]
    fn ag_of_space_uses_components() {
        let t = Topology::new(
            4,
            vec![
                PointSet::EMPTY,
                PointSet::from_mask(0b0011),
                PointSet::from_mask(0b1100),
                PointSet::full(4),
            ],
        )
        .unwrap();
        assert_eq!(ag_of_space(&t).unwrap(), build_ag_discrete(2).unwrap());
        assert!(ag_of_space(&Topology::sierpinski()).unwrap().is_empty());
    }
}
