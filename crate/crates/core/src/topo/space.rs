use std::fmt;

use serde::{Deserialize, Serialize};

use super::TopoError;
use crate::{PointSet, MAX_POINTS};

/// A topology on `n` labeled points.
///
/// Invariants: contains `∅` and `X`, closed under pairwise union and
/// intersection, no duplicates. Open sets are kept sorted by mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Topology {
    n: usize,
    opens: Vec<PointSet>,
    minimal: Vec<PointSet>,
}

/// Classification flags used to select spaces in sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceClass {
    pub is_discrete: bool,
    pub is_t0: bool,
    pub is_t1: bool,
    pub has_isolated_point: bool,
    /// Number of weak components of the specialization digraph.
    pub component_count: usize,
}

/// Predicates over [`SpaceClass`] accepted by enumeration front ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceFilter {
    All,
    Discrete,
    T0,
    T1,
    Connected,
    Isolated,
    NoIsolated,
}

impl SpaceFilter {
    pub fn matches(self, class: &SpaceClass) -> bool {
        match self {
            SpaceFilter::All => true,
            SpaceFilter::Discrete => class.is_discrete,
            SpaceFilter::T0 => class.is_t0,
            SpaceFilter::T1 => class.is_t1,
            SpaceFilter::Connected => class.component_count == 1,
            SpaceFilter::Isolated => class.has_isolated_point,
            SpaceFilter::NoIsolated => !class.has_isolated_point,
        }
    }
}

impl std::str::FromStr for SpaceFilter {
    type Err = TopoError;

    fn from_str(s: &str) -> Result<Self, TopoError> {
        Ok(match s {
            "all" => SpaceFilter::All,
            "discrete" => SpaceFilter::Discrete,
            "t0" => SpaceFilter::T0,
            "t1" => SpaceFilter::T1,
            "connected" => SpaceFilter::Connected,
            "isolated" => SpaceFilter::Isolated,
            "no-isolated" => SpaceFilter::NoIsolated,
            other => return Err(TopoError::Parse(format!("unknown space filter `{other}`"))),
        })
    }
}

/// The discrete space on weak components together with the quotient map.
///
/// Real-valued continuous functions on a finite space are constant on each
/// minimal neighborhood, hence on each weak component, so `C(X)` only sees
/// this quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub space: Topology,
    /// `quotient[x]` is the component (point of `space`) containing `x`.
    pub quotient: Vec<usize>,
}

impl Topology {
    /// Validates and builds a topology from its full list of open sets.
    pub fn new(n: usize, mut opens: Vec<PointSet>) -> Result<Self, TopoError> {
        if n > MAX_POINTS {
            return Err(TopoError::TooManyPoints { n, max: MAX_POINTS });
        }
        let ground = PointSet::full(n);
        if let Some(&set) = opens.iter().find(|s| !s.is_subset(ground)) {
            return Err(TopoError::OutsideGround { set, n });
        }
        opens.sort_unstable();
        if let Some(w) = opens.windows(2).find(|w| w[0] == w[1]) {
            return Err(TopoError::Duplicate(w[0]));
        }
        if opens.binary_search(&PointSet::EMPTY).is_err() {
            return Err(TopoError::MissingEmpty);
        }
        if opens.binary_search(&ground).is_err() {
            return Err(TopoError::MissingGround);
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                let closed = opens.binary_search(&a.union(b)).is_ok()
                    && opens.binary_search(&a.intersection(b)).is_ok();
                if !closed {
                    return Err(TopoError::NotClosed { a, b });
                }
            }
        }
        Ok(Self::from_sorted_unchecked(n, opens))
    }

    /// The smallest topology containing every set of `family`.
    pub fn generated_by<I>(n: usize, family: I) -> Result<Self, TopoError>
    where
        I: IntoIterator<Item = PointSet>,
    {
        if n > MAX_POINTS {
            return Err(TopoError::TooManyPoints { n, max: MAX_POINTS });
        }
        let ground = PointSet::full(n);
        let mut minimal = vec![ground; n];
        for set in family {
            if !set.is_subset(ground) {
                return Err(TopoError::OutsideGround { set, n });
            }
            for x in set {
                minimal[x] = minimal[x].intersection(set);
            }
        }
        Ok(Self::from_minimal(n, minimal))
    }

    /// Builds the topology whose opens are all unions of the given minimal
    /// neighborhoods. `minimal[x]` must contain `x`.
    pub(crate) fn from_minimal(n: usize, minimal: Vec<PointSet>) -> Self {
        let mut opens: Vec<PointSet> = PointSet::all_subsets(n)
            .map(|pick| {
                pick.iter()
                    .fold(PointSet::EMPTY, |acc, x| acc.union(minimal[x]))
            })
            .collect();
        opens.sort_unstable();
        opens.dedup();
        Topology { n, opens, minimal }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, opens: Vec<PointSet>) -> Self {
        let ground = PointSet::full(n);
        let minimal = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(ground, |acc, &o| acc.intersection(o))
            })
            .collect();
        Topology { n, opens, minimal }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_minimal(n, (0..n).map(PointSet::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_minimal(n, vec![PointSet::full(n); n])
    }

    /// `{∅, {0}, {0,1}}` on two points.
    pub fn sierpinski() -> Self {
        Self::from_minimal(2, vec![PointSet::singleton(0), PointSet::full(2)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Open sets sorted by mask.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.is_open(set.complement(self.n))
    }

    /// Largest open subset of `set` (points outside the ground set are ignored).
    pub fn interior(&self, set: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&x| self.minimal[x].is_subset(set))
            .collect()
    }

    /// Smallest closed superset of `set`.
    pub fn closure(&self, set: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&x| !self.minimal[x].is_disjoint(set))
            .collect()
    }

    pub fn is_dense(&self, set: PointSet) -> bool {
        self.closure(set) == self.ground()
    }

    pub fn isolated_points(&self) -> PointSet {
        (0..self.n)
            .filter(|&x| self.minimal[x].is_singleton())
            .collect()
    }

    /// Intersection of all open sets containing `x`.
    pub fn minimal_neighborhood(&self, x: usize) -> Result<PointSet, TopoError> {
        self.minimal
            .get(x)
            .copied()
            .ok_or(TopoError::PointOutOfRange { point: x, n: self.n })
    }

    pub fn minimal_neighborhoods(&self) -> &[PointSet] {
        &self.minimal
    }

    /// The distinct minimal neighborhoods, sorted. This is the unique
    /// minimal base of a finite space.
    pub fn minimal_base(&self) -> Vec<PointSet> {
        let mut base = self.minimal.clone();
        base.sort_unstable();
        base.dedup();
        base
    }

    pub fn weight(&self) -> usize {
        self.minimal_base().len()
    }

    /// Largest family of pairwise disjoint nonempty open sets.
    ///
    /// Every open set of a disjoint family contains some minimal
    /// neighborhood, so a maximum set packing over the minimal base is
    /// enough.
    pub fn cellularity(&self) -> usize {
        fn pack(base: &[PointSet], used: PointSet) -> usize {
            match base.split_first() {
                None => 0,
                Some((&first, rest)) => {
                    let skip = pack(rest, used);
                    if first.is_disjoint(used) {
                        skip.max(1 + pack(rest, used.union(first)))
                    } else {
                        skip
                    }
                }
            }
        }
        pack(&self.minimal_base(), PointSet::EMPTY)
    }

    /// Weak component index of every point, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for x in 0..self.n {
            for y in self.minimal[x] {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        (0..self.n)
            .map(|x| {
                let r = find(&mut parent, x);
                if label[r] == usize::MAX {
                    label[r] = next;
                    next += 1;
                }
                label[r]
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn classify(&self) -> SpaceClass {
        let ground = self.ground();
        let is_discrete = self.minimal.iter().all(|m| m.is_singleton());
        let is_t0 = {
            let mut m = self.minimal.clone();
            m.sort_unstable();
            m.dedup();
            m.len() == self.n
        };
        let is_t1 = (0..self.n).all(|x| self.is_open(PointSet::singleton(x).complement(self.n)));
        debug_assert!(ground.is_empty() || self.is_open(ground));
        SpaceClass {
            is_discrete,
            is_t0,
            is_t1,
            has_isolated_point: !self.isolated_points().is_empty(),
            component_count: self.component_count(),
        }
    }

    /// The discrete space on weak components and the quotient map onto it.
    pub fn tychonoff_reflection(&self) -> Reflection {
        let quotient = self.components();
        let m = quotient.iter().max().map_or(0, |m| m + 1);
        Reflection {
            space: Topology::discrete(m),
            quotient,
        }
    }

    /// Number of maps `X → {0,1}` that are constant on every minimal
    /// neighborhood, i.e. continuous into the two-point subspace of ℝ.
    pub fn continuous_binary_functions(&self) -> u64 {
        PointSet::all_subsets(self.n)
            .filter(|&ones| {
                self.minimal
                    .iter()
                    .all(|m| m.is_subset(ones) || m.is_disjoint(ones))
            })
            .count() as u64
    }

    /// The same topology with point `x` renamed to `image[x]`.
    pub fn relabel(&self, image: &[usize]) -> Topology {
        let mut opens: Vec<PointSet> = self.opens.iter().map(|o| o.map_points(image)).collect();
        opens.sort_unstable();
        let mut minimal = vec![PointSet::EMPTY; self.n];
        for x in 0..self.n {
            minimal[image[x]] = self.minimal[x].map_points(image);
        }
        Topology {
            n: self.n,
            opens,
            minimal,
        }
    }
}

/// The topology text format: `n=<k>; opens=<hex>,<hex>,...`.
impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_text(f, self.n, &self.opens)
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology({self})")
    }
}
