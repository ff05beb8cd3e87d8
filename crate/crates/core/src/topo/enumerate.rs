use super::{CanonicalKey, TopoError, Topology};
use crate::PointSet;

/// Default largest point count for enumeration.
pub const DEFAULT_ENUM_CAP: usize = 5;

/// Hard limit: families are encoded as one bit per subset in a `u64`.
pub const MAX_ENUM_POINTS: usize = 6;

/// Every topology on `n` labeled points, once each, sorted by the
/// lexicographic order of their sorted open-set lists.
pub struct Topologies {
    inner: std::vec::IntoIter<Topology>,
}

impl Iterator for Topologies {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for Topologies {}

/// Enumerates all topologies on `n` labeled points.
///
/// Families of open sets form a closure system under "close under union
/// and intersection", so they are walked in lectic order with the
/// next-closure step: extend by one candidate set, close, and keep the
/// result only when the closure adds nothing below the candidate.
pub fn enumerate_topologies(n: usize, cap: usize) -> Result<Topologies, TopoError> {
    check_cap(n, cap)?;
    let mut found = Vec::new();
    if n == 0 {
        found.push(Topology::from_sorted_unchecked(0, vec![PointSet::EMPTY]));
    } else {
        next_closure(n, |family| found.push(decode(n, family)));
    }
    found.sort_unstable_by(|a, b| a.opens().cmp(b.opens()));
    Ok(Topologies {
        inner: found.into_iter(),
    })
}

/// One representative per homeomorphism class: the relabeling whose
/// encoding is the canonical key. Sorted by key.
pub fn enumerate_canonical(n: usize, cap: usize) -> Result<Vec<Topology>, TopoError> {
    let mut keys: Vec<CanonicalKey> = enumerate_topologies(n, cap)?
        .map(|t| t.canonical_form())
        .collect::<Result<_, _>>()?;
    keys.sort_unstable();
    keys.dedup();
    Ok(keys.into_iter().map(CanonicalKey::into_topology).collect())
}

fn check_cap(n: usize, cap: usize) -> Result<(), TopoError> {
    let cap = cap.min(MAX_ENUM_POINTS);
    if n > cap {
        return Err(TopoError::CapExceeded { n, cap });
    }
    Ok(())
}

fn decode(n: usize, family: u64) -> Topology {
    let opens = (0..=PointSet::full(n).mask())
        .filter(|&s| family & (1u64 << s) != 0)
        .map(PointSet::from_mask)
        .collect();
    Topology::from_sorted_unchecked(n, opens)
}

/// Union/intersection closure of a family (bit `s` set iff subset `s` is
/// in it), always including `∅` and `X`.
fn close(n: usize, family: u64) -> u64 {
    let ground = PointSet::full(n);
    let mut minimal = [ground; MAX_ENUM_POINTS];
    let mut rest = family;
    while rest != 0 {
        let s = PointSet::from_mask(rest.trailing_zeros());
        rest &= rest - 1;
        for x in s {
            minimal[x] = minimal[x].intersection(s);
        }
    }
    let mut closed = 0u64;
    for pick in PointSet::all_subsets(n) {
        let union = pick
            .iter()
            .fold(PointSet::EMPTY, |acc, x| acc.union(minimal[x]));
        closed |= 1u64 << union.mask();
    }
    closed
}

fn next_closure(n: usize, mut emit: impl FnMut(u64)) {
    let elements = 1usize << n;
    let mut current = close(n, 0);
    emit(current);
    'outer: loop {
        for i in (0..elements).rev() {
            let bit = 1u64 << i;
            if current & bit != 0 {
                current &= !bit;
                continue;
            }
            let below = bit - 1;
            let candidate = close(n, current | bit);
            if candidate & below == current & below {
                current = candidate;
                emit(current);
                continue 'outer;
            }
        }
        break;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_topologies(n, 5).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn five_points() {
        assert_eq!(enumerate_topologies(5, 5).unwrap().count(), 6942);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_topologies(6, 5).err(),
            Some(TopoError::CapExceeded { n: 6, cap: 5 })
        );
        assert_eq!(
            enumerate_topologies(7, 10).err(),
            Some(TopoError::CapExceeded { n: 7, cap: 6 })
        );
    }

    #[test]
    fn stream_is_sorted_and_valid() {
        let all: Vec<Topology> = enumerate_topologies(3, 5).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].opens() < w[1].opens()));
        for t in &all {
            assert_eq!(&Topology::new(3, t.opens().to_vec()).unwrap(), t);
        }
        assert_eq!(all.first().unwrap(), &Topology::discrete(3));
        assert_eq!(all.last().unwrap(), &Topology::indiscrete(3));
    }

    #[test]
    fn canonical_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_canonical(n, 5).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 9, 33]);
    }
}
