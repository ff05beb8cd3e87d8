use super::IdealError;
use crate::graph::UGraph;

/// A surjective vertex map `φ: V(G) → V(G')` with `{u, v} ∈ E(G)` exactly
/// when `{φu, φv} ∈ E(G')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomWitness<S, T> {
    source: UGraph<S>,
    target: UGraph<T>,
    map: Vec<usize>,
}

impl<S, T> HomWitness<S, T> {
    /// Checks surjectivity and the edge condition on every pair.
    pub fn new(source: UGraph<S>, target: UGraph<T>, map: Vec<usize>) -> Result<Self, IdealError> {
        if map.len() != source.len() {
            return Err(IdealError::InvalidWitness(format!(
                "map has {} entries for {} source vertices",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.len()) {
            return Err(IdealError::InvalidWitness(format!("image {bad} is not a target vertex")));
        }
        let mut hit = vec![false; target.len()];
        for &x in &map {
            hit[x] = true;
        }
        if let Some(missed) = hit.iter().position(|&h| !h) {
            return Err(IdealError::InvalidWitness(format!("target vertex {missed} is not hit")));
        }
        for u in 0..source.len() {
            for v in u + 1..source.len() {
                if source.adjacent(u, v) != target.adjacent(map[u], map[v]) {
                    return Err(IdealError::InvalidWitness(format!(
                        "pair ({u}, {v}) breaks the edge condition"
                    )));
                }
            }
        }
        Ok(HomWitness { source, target, map })
    }

    /// Builds the map by sending each source label to a target label.
    pub fn from_label_map<F>(source: UGraph<S>, target: UGraph<T>, f: F) -> Result<Self, IdealError>
    where
        T: Ord,
        F: Fn(&S) -> T,
    {
        let map = source
            .labels()
            .iter()
            .map(|l| {
                target
                    .index_of(&f(l))
                    .ok_or_else(|| IdealError::InvalidWitness("label maps outside the target".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, map)
    }

    /// `G`, the domain of `φ`.
    pub fn source(&self) -> &UGraph<S> {
        &self.source
    }

    /// `G'`, the image of `φ`.
    pub fn target(&self) -> &UGraph<T> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// Replaces base vertex `b` by `multiplicities[b]` pairwise non-adjacent
/// copies with the neighborhood of `b`; `φ` sends each copy back to `b`.
/// Source labels are `(b, copy)`.
pub fn twin_expansion<L: Clone>(
    base: &UGraph<L>,
    multiplicities: &[usize],
) -> Result<HomWitness<(usize, usize), L>, IdealError> {
    if multiplicities.len() != base.len() {
        return Err(IdealError::MultiplicityCount {
            expected: base.len(),
            got: multiplicities.len(),
        });
    }
    if let Some(b) = multiplicities.iter().position(|&k| k == 0) {
        return Err(IdealError::ZeroMultiplicity(b));
    }
    let labels: Vec<(usize, usize)> = multiplicities
        .iter()
        .enumerate()
        .flat_map(|(b, &k)| (0..k).map(move |c| (b, c)))
        .collect();
    let map: Vec<usize> = labels.iter().map(|&(b, _)| b).collect();
    let mut edges = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if base.adjacent(map[i], map[j]) {
                edges.push((i, j));
            }
        }
    }
    // labels are generated in sorted order, so indices are preserved
    let source = UGraph::from_edges(labels, edges)?;
    HomWitness::new(source, base.clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_complete_bipartite, named, DistanceValue, Measured};

    #[test]
    fn k2_doubled_is_c4() {
        let w = twin_expansion(&named::complete(2), &[2, 2]).unwrap();
        assert_eq!(w.source().len(), 4);
        assert_eq!(w.source().edge_count(), 4);
        assert!(is_complete_bipartite(w.source()));
        assert_eq!(girth(w.source()), Measured::Value(DistanceValue::Finite(4)));
        assert_eq!(girth(w.target()), Measured::Value(DistanceValue::Inf));
        assert_eq!(w.map(), &[0, 0, 1, 1]);
    }

    #[test]
    fn unit_multiplicities_give_identity() {
        let base = named::cycle(5);
        let w = twin_expansion(&base, &[1; 5]).unwrap();
        assert_eq!(w.source().edges(), base.edges());
        assert_eq!(w.map(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn invalid_inputs() {
        let base = named::path(3);
        assert_eq!(twin_expansion(&base, &[1, 0, 1]).err(), Some(IdealError::ZeroMultiplicity(1)));
        assert!(twin_expansion(&base, &[1, 1]).is_err());
        assert!(HomWitness::new(named::path(3), named::complete(2), vec![0, 1, 1]).is_err());
        assert!(HomWitness::new(named::path(2), named::complete(3), vec![0, 1]).is_err());
        assert!(HomWitness::new(named::cycle(4), named::complete(2), vec![0, 1, 0, 1]).is_ok());
    }
}
