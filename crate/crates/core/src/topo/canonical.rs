use std::fmt;

use itertools::Itertools;

use super::{TopoError, Topology};
use crate::PointSet;

/// Largest point count accepted by the brute-force canonical form.
pub const MAX_CANON_POINTS: usize = 8;

/// Lexicographically smallest sorted open-set list over all relabelings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: usize,
    opens: Vec<PointSet>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// The representative topology whose encoding is this key.
    pub fn into_topology(self) -> Topology {
        Topology::from_sorted_unchecked(self.n, self.opens)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_text(f, self.n, &self.opens)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

impl Topology {
    /// Canonical key up to homeomorphism, by brute force over all `n!`
    /// permutations of the points.
    pub fn canonical_form(&self) -> Result<CanonicalKey, TopoError> {
        let n = self.n();
        if n > MAX_CANON_POINTS {
            return Err(TopoError::CapExceeded {
                n,
                cap: MAX_CANON_POINTS,
            });
        }
        let mut best = self.opens().to_vec();
        let mut scratch = Vec::with_capacity(best.len());
        for perm in (0..n).permutations(n) {
            scratch.clear();
            scratch.extend(self.opens().iter().map(|o| o.map_points(&perm)));
            scratch.sort_unstable();
            if scratch < best {
                std::mem::swap(&mut best, &mut scratch);
            }
        }
        Ok(CanonicalKey { n, opens: best })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::enumerate_topologies;

    #[test]
    fn discrete_and_indiscrete_are_fixed() {
        let d = Topology::discrete(3);
        assert_eq!(d.canonical_form().unwrap().opens(), d.opens());
        let i = Topology::indiscrete(4);
        assert_eq!(i.canonical_form().unwrap().into_topology(), i);
    }

    #[test]
    fn relabelings_share_a_key() {
        let s = Topology::sierpinski();
        let flipped = s.relabel(&[1, 0]);
        assert_ne!(s, flipped);
        assert_eq!(s.canonical_form().unwrap(), flipped.canonical_form().unwrap());
    }

    #[test]
    fn three_point_classes() {
        let mut keys: Vec<_> = enumerate_topologies(3, 5)
            .unwrap()
            .map(|t| t.canonical_form().unwrap())
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 9);
    }

    #[test]
    fn key_renders_in_text_format() {
        let key = Topology::sierpinski().canonical_form().unwrap();
        assert_eq!(key.to_string(), "n=2; opens=0,1,3");
    }
}
