use serde::Serialize;

use super::IdealError;
use crate::{PointSet, Topology};

/// A nonzero annihilating ideal of `C(X)` for finite discrete `X`, stored
/// by its support `S`: the ideal of all functions vanishing off `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IdealVertex {
    n: usize,
    support: PointSet,
}

impl IdealVertex {
    pub fn new(n: usize, support: PointSet) -> Result<Self, IdealError> {
        if !support.is_subset(PointSet::full(n)) {
            return Err(IdealError::OutsideGround { set: support, n });
        }
        if support.is_empty() || support == PointSet::full(n) {
            return Err(IdealError::NotAnnihilating { support });
        }
        Ok(IdealVertex { n, support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> PointSet {
        self.support
    }
}

/// `O(I)`, the union of cozero sets of members of `I`.
pub fn o_of_ideal(v: &IdealVertex) -> PointSet {
    v.support
}

/// `O(I(U)) = (X \ U)°`, the open set representing the ideal of functions
/// vanishing on `U`.
pub fn i_of_set(t: &Topology, u: PointSet) -> PointSet {
    t.interior(u.complement(t.n()))
}

/// `O(Ann(I)) = (X \ G)°` for an ideal with `O(I) = G`.
pub fn ann_open(t: &Topology, g: PointSet) -> Result<PointSet, IdealError> {
    if !t.is_open(g) {
        return Err(IdealError::NotOpen(g));
    }
    Ok(t.interior(g.complement(t.n())))
}

/// Whether `I(U)` is a nonzero ideal with nonzero annihilator, evaluated
/// through the operators: `O(I(U)) ≠ ∅` and `O(Ann(I(U))) ≠ ∅`.
pub fn element_of_a(t: &Topology, u: PointSet) -> bool {
    let i = i_of_set(t, u);
    let ann = ann_open(t, i).expect("interiors are open");
    !i.is_empty() && !ann.is_empty()
}

/// `(cl U)° ≠ ∅`, read without any density condition on `U`.
pub fn element_of_a_literal(t: &Topology, u: PointSet) -> bool {
    !t.interior(t.closure(u)).is_empty()
}

/// `cl U ≠ X` and `(cl U)° ≠ ∅`.
pub fn element_of_a_repaired(t: &Topology, u: PointSet) -> bool {
    let cl = t.closure(u);
    cl != t.ground() && !t.interior(cl).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn ideal_vertices() {
        let v = IdealVertex::new(4, set(&[0, 2])).unwrap();
        assert_eq!(o_of_ideal(&v), set(&[0, 2]));
        assert_eq!(o_of_ideal(&IdealVertex::new(4, set(&[0])).unwrap()), set(&[0]));
        assert_eq!(
            IdealVertex::new(4, PointSet::full(4)),
            Err(IdealError::NotAnnihilating { support: PointSet::full(4) })
        );
        assert!(IdealVertex::new(4, PointSet::EMPTY).is_err());
        assert!(IdealVertex::new(2, set(&[3])).is_err());
    }

    #[test]
    fn i_of_set_examples() {
        assert_eq!(i_of_set(&Topology::discrete(3), set(&[0])), set(&[1, 2]));
        assert_eq!(i_of_set(&Topology::sierpinski(), set(&[0])), PointSet::EMPTY);
        assert_eq!(i_of_set(&Topology::sierpinski(), PointSet::EMPTY), PointSet::full(2));
    }

    #[test]
    fn ann_open_examples() {
        assert_eq!(ann_open(&Topology::discrete(4), set(&[0, 1])), Ok(set(&[2, 3])));
        let t = Topology::new(4, vec![PointSet::EMPTY, set(&[0, 1]), set(&[2, 3]), PointSet::full(4)])
            .unwrap();
        assert_eq!(ann_open(&t, set(&[0, 1])), Ok(set(&[2, 3])));
        assert_eq!(ann_open(&t, set(&[0])), Err(IdealError::NotOpen(set(&[0]))));
    }

    #[test]
    fn element_predicates_diverge_on_dense_sets() {
        let s = Topology::sierpinski();
        let u = set(&[0]);
        assert!(element_of_a_literal(&s, u));
        assert!(!element_of_a_repaired(&s, u));
        assert!(!element_of_a(&s, u));
        let d = Topology::discrete(3);
        assert!(element_of_a(&d, u) && element_of_a_repaired(&d, u));
    }
}
