//! Closed-form predictions of distances, eccentricities, leaves and `gi`
//! from the open sets `G = O(I)` and `H = O(J)` alone.

use serde::Serialize;

use super::{is_vertex_open, IdealError};
use crate::graph::DistanceValue;
use crate::{PointSet, Topology};

fn vertex(t: &Topology, g: PointSet) -> Result<PointSet, IdealError> {
    if is_vertex_open(t, g) {
        Ok(g)
    } else {
        Err(IdealError::NotVertex(g))
    }
}

fn distinct_pair(t: &Topology, g: PointSet, h: PointSet) -> Result<(), IdealError> {
    vertex(t, g)?;
    vertex(t, h)?;
    if g == h {
        return Err(IdealError::SameVertex(g));
    }
    Ok(())
}

fn union_dense(t: &Topology, g: PointSet, h: PointSet) -> bool {
    t.is_dense(g.union(h))
}

/// `IJ = 0`: distinct vertices with disjoint open sets.
pub fn adjacency_test(t: &Topology, g: PointSet, h: PointSet) -> Result<bool, IdealError> {
    vertex(t, g)?;
    vertex(t, h)?;
    Ok(g != h && g.is_disjoint(h))
}

/// Adjacent, and the union of the two open sets is dense.
pub fn orthogonality_test(t: &Topology, g: PointSet, h: PointSet) -> Result<bool, IdealError> {
    Ok(adjacency_test(t, g, h)? && union_dense(t, g, h))
}

/// Predicted distance: 1 if disjoint, 2 if overlapping with non-dense
/// union, 3 if overlapping with dense union.
pub fn distance_classifier(t: &Topology, g: PointSet, h: PointSet) -> Result<u32, IdealError> {
    distinct_pair(t, g, h)?;
    Ok(if g.is_disjoint(h) {
        1
    } else if !union_dense(t, g, h) {
        2
    } else {
        3
    })
}

/// Predicted eccentricity: 3 unless the open set is a single point, then
/// 2, or 1 on a two-point space.
pub fn ecc_classifier(t: &Topology, g: PointSet) -> Result<u32, IdealError> {
    vertex(t, g)?;
    Ok(if !g.is_singleton() {
        3
    } else if t.n() > 2 {
        2
    } else {
        1
    })
}

/// Predicted leaf: the complement of the closure is a single point.
pub fn leaf_classifier(t: &Topology, g: PointSet) -> Result<bool, IdealError> {
    vertex(t, g)?;
    Ok(t.closure(g).complement(t.n()).is_singleton())
}

/// Which configuration a pair of non-leaf vertices falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GiCase {
    /// Disjoint, union not dense.
    DisjointSparse,
    /// Disjoint, union dense.
    DisjointDense,
    /// Overlapping, equal closures.
    EqualClosures,
    /// Overlapping, distinct closures, at least two points outside the
    /// closure of the union.
    WideGap,
    /// Overlapping, distinct closures, exactly one point outside the
    /// closure of the union.
    SinglePointGap,
    /// Overlapping, distinct closures, dense union.
    DenseUnion,
}

impl GiCase {
    /// Shortest cycle length through both vertices as the case analysis
    /// states it: a dense union counts as "not a single point outside",
    /// so it is predicted 4.
    pub fn gi(self) -> u32 {
        match self {
            GiCase::DisjointSparse => 3,
            GiCase::DisjointDense | GiCase::EqualClosures | GiCase::WideGap | GiCase::DenseUnion => 4,
            GiCase::SinglePointGap => 5,
        }
    }

    /// As [`GiCase::gi`], except that a dense union with overlap puts the
    /// vertices at distance 3, so any cycle through both has length 6 or
    /// more, and 6 is attained when each complement has two points.
    pub fn gi_repaired(self) -> u32 {
        match self {
            GiCase::DenseUnion => 6,
            other => other.gi(),
        }
    }
}

/// Classifies a distinct pair of non-leaf vertices. Leaves are refused.
pub fn gi_case(t: &Topology, g: PointSet, h: PointSet) -> Result<GiCase, IdealError> {
    distinct_pair(t, g, h)?;
    for v in [g, h] {
        if leaf_classifier(t, v)? {
            return Err(IdealError::LeafVertex(v));
        }
    }
    let gap = t.closure(g.union(h)).complement(t.n());
    Ok(if g.is_disjoint(h) {
        if gap.is_empty() {
            GiCase::DisjointDense
        } else {
            GiCase::DisjointSparse
        }
    } else if t.closure(g) == t.closure(h) {
        GiCase::EqualClosures
    } else if gap.is_empty() {
        GiCase::DenseUnion
    } else if gap.is_singleton() {
        GiCase::SinglePointGap
    } else {
        GiCase::WideGap
    })
}

/// Predicted `gi` in `{3, 4, 5}` by the five-case analysis.
pub fn gi_classifier(t: &Topology, g: PointSet, h: PointSet) -> Result<u32, IdealError> {
    gi_case(t, g, h).map(GiCase::gi)
}

/// Predicted `gi` in `{3, 4, 5, 6}`, separating the dense-union case.
pub fn gi_classifier_repaired(t: &Topology, g: PointSet, h: PointSet) -> Result<u32, IdealError> {
    gi_case(t, g, h).map(GiCase::gi_repaired)
}

/// Radius of the annihilating-ideal graph for a space with `m` points.
pub fn radius_predictor(m: usize, has_isolated: bool) -> Result<u32, IdealError> {
    check_points(m)?;
    Ok(if m == 2 {
        1
    } else if has_isolated {
        2
    } else {
        3
    })
}

/// Girth of the annihilating-ideal graph for a space with `m` points.
pub fn girth_predictor(m: usize) -> Result<DistanceValue, IdealError> {
    check_points(m)?;
    Ok(if m == 2 { DistanceValue::Inf } else { DistanceValue::Finite(3) })
}

/// Predicts the graph is triangulated exactly when no point is isolated.
pub fn triangulated_predictor(t: &Topology) -> bool {
    t.isolated_points().is_empty()
}

fn check_points(m: usize) -> Result<(), IdealError> {
    if m < 2 {
        return Err(IdealError::PointsOutOfRange { n: m, min: 2, max: usize::MAX });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn adjacency_and_orthogonality() {
        let d3 = Topology::discrete(3);
        assert_eq!(adjacency_test(&d3, set(&[0]), set(&[1])), Ok(true));
        assert_eq!(orthogonality_test(&d3, set(&[0]), set(&[1])), Ok(false));
        let d2 = Topology::discrete(2);
        assert_eq!(orthogonality_test(&d2, set(&[0]), set(&[1])), Ok(true));
        let d4 = Topology::discrete(4);
        assert_eq!(orthogonality_test(&d4, set(&[0, 1]), set(&[2, 3])), Ok(true));
        assert_eq!(
            adjacency_test(&d3, set(&[0, 1, 2]), set(&[1])),
            Err(IdealError::NotVertex(set(&[0, 1, 2])))
        );
    }

    #[test]
    fn distance_ecc_leaf() {
        let d3 = Topology::discrete(3);
        assert_eq!(distance_classifier(&d3, set(&[0]), set(&[1])), Ok(1));
        assert_eq!(distance_classifier(&d3, set(&[0]), set(&[0, 1])), Ok(2));
        assert_eq!(distance_classifier(&d3, set(&[0, 1]), set(&[1, 2])), Ok(3));
        assert_eq!(
            distance_classifier(&d3, set(&[0]), set(&[0])),
            Err(IdealError::SameVertex(set(&[0])))
        );
        assert_eq!(ecc_classifier(&d3, set(&[0, 1])), Ok(3));
        assert_eq!(ecc_classifier(&d3, set(&[0])), Ok(2));
        assert_eq!(ecc_classifier(&Topology::discrete(2), set(&[0])), Ok(1));
        assert_eq!(leaf_classifier(&d3, set(&[0, 1])), Ok(true));
        assert_eq!(leaf_classifier(&d3, set(&[0])), Ok(false));
        assert_eq!(leaf_classifier(&Topology::discrete(4), set(&[0, 1])), Ok(false));
    }

    #[test]
    fn gi_cases() {
        let d4 = Topology::discrete(4);
        assert_eq!(gi_classifier(&d4, set(&[0]), set(&[1])), Ok(3));
        assert_eq!(gi_classifier(&d4, set(&[0, 1]), set(&[2, 3])), Ok(4));
        assert_eq!(gi_classifier(&d4, set(&[0, 1]), set(&[1, 2])), Ok(5));
        assert_eq!(gi_classifier(&d4, set(&[0]), set(&[0, 1])), Ok(4));
        assert_eq!(
            gi_classifier(&d4, set(&[0, 1, 2]), set(&[0])),
            Err(IdealError::LeafVertex(set(&[0, 1, 2])))
        );
        let d5 = Topology::discrete(5);
        assert_eq!(gi_case(&d5, set(&[0, 1, 2]), set(&[2, 3, 4])), Ok(GiCase::DenseUnion));
        assert_eq!(gi_classifier(&d5, set(&[0, 1, 2]), set(&[2, 3, 4])), Ok(4));
        assert_eq!(gi_classifier_repaired(&d5, set(&[0, 1, 2]), set(&[2, 3, 4])), Ok(6));
        assert_eq!(gi_classifier_repaired(&d4, set(&[0, 1]), set(&[1, 2])), Ok(5));
    }

    #[test]
    fn predictors() {
        assert_eq!(radius_predictor(2, true), Ok(1));
        assert_eq!(radius_predictor(5, true), Ok(2));
        assert_eq!(radius_predictor(3, true), Ok(2));
        assert_eq!(radius_predictor(4, false), Ok(3));
        assert_eq!(girth_predictor(2), Ok(DistanceValue::Inf));
        assert_eq!(girth_predictor(5), Ok(DistanceValue::Finite(3)));
        assert!(radius_predictor(1, true).is_err());
        assert!(!triangulated_predictor(&Topology::discrete(3)));
        assert!(triangulated_predictor(&Topology::indiscrete(3)));
    }
}
