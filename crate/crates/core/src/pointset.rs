use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest ground set a [`PointSet`] can describe.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set `{0, .., n-1}`, stored as a bit mask.
///
/// The ground size is not stored; the owning [`Topology`](crate::Topology)
/// supplies it. Ordering is by mask value, which is the fixed vertex order
/// used everywhere labels need sorting.
///
/// Serializes as the sorted list of its points, e.g. `[0, 2]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u32);

impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(d)?;
        if let Some(&p) = points.iter().find(|&&p| p >= MAX_POINTS) {
            return Err(serde::de::Error::custom(format!("point {p} exceeds {MAX_POINTS} points")));
        }
        Ok(PointSet::from_points(points))
    }
}

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_mask(mask: u32) -> Self {
        PointSet(mask)
    }

    /// The whole ground set on `n` points.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub const fn singleton(point: usize) -> Self {
        PointSet(1 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        PointSet(points.into_iter().fold(0, |m, p| m | (1 << p)))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, point: usize) -> bool {
        point < 32 && self.0 & (1 << point) != 0
    }

    pub const fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub const fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the ground set on `n` points.
    pub const fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_singleton(self) -> bool {
        self.0 != 0 && self.0 & (self.0 - 1) == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of the ground set on `n` points, in mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        (0..=PointSet::full(n).0).map(PointSet)
    }

    /// Image of this set under a point map.
    pub fn map_points(self, image: &[usize]) -> PointSet {
        PointSet::from_points(self.iter().map(|p| image[p]))
    }
}

/// Iterator over the members of a [`PointSet`] in increasing order.
#[derive(Clone, Debug)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Points;

    fn into_iter(self) -> Points {
        self.iter()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}

/// Renders as a sorted point list, e.g. `{0,2}`.
impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serde_as_point_list() {
        let a = PointSet::from_points([2, 0]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,2]");
        assert_eq!(serde_json::from_str::<PointSet>("[2,0]").unwrap(), a);
        assert!(serde_json::from_str::<PointSet>("[16]").is_err());
    }

    #[test]
    fn set_algebra() {
        let a = PointSet::from_points([0, 2]);
        let b = PointSet::from_points([1, 2]);
        assert_eq!(a.union(b), PointSet::from_points([0, 1, 2]));
        assert_eq!(a.intersection(b), PointSet::singleton(2));
        assert_eq!(a.difference(b), PointSet::singleton(0));
        assert_eq!(a.complement(4), PointSet::from_points([1, 3]));
        assert!(PointSet::singleton(2).is_subset(a));
        assert!(!a.is_disjoint(b));
        assert_eq!(a.len(), 2);
        assert_eq!(a.first(), Some(0));
        assert_eq!(PointSet::EMPTY.first(), None);
    }

    #[test]
    fn singleton_detection() {
        assert!(PointSet::singleton(5).is_singleton());
        assert!(!PointSet::EMPTY.is_singleton());
        assert!(!PointSet::from_points([0, 1]).is_singleton());
    }

    #[test]
    fn display_is_sorted_list() {
        assert_eq!(PointSet::from_points([2, 0]).to_string(), "{0,2}");
        assert_eq!(PointSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn full_sets() {
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(PointSet::full(3).mask(), 0b111);
        assert_eq!(PointSet::full(16).mask(), 0xffff);
        assert_eq!(PointSet::all_subsets(3).count(), 8);
    }
}
