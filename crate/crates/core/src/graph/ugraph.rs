use thiserror::Error;

use super::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex label at positions {0} and {1}")]
    DuplicateLabel(usize, usize),
    #[error("no cycle of length <= {cap} through the given vertices, but a longer one exists")]
    GiCapExceeded { cap: usize },
}

/// Simple undirected graph with unique, sorted vertex labels.
///
/// Vertex `i` carries `labels()[i]`; labels are kept in ascending order so
/// index order doubles as the fixed tie-breaking order of every search.
#[derive(Clone, PartialEq, Eq)]
pub struct UGraph<L> {
    labels: Vec<L>,
    adj: Vec<VertexSet>,
}

impl<L: Ord> UGraph<L> {
    /// Builds a graph from labels and edges given as positions into
    /// `labels`. Labels are sorted afterwards and edges remapped.
    pub fn from_edges<I>(labels: Vec<L>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        if let Some(w) = order.windows(2).find(|w| labels[w[0]] == labels[w[1]]) {
            return Err(GraphError::DuplicateLabel(w[0].min(w[1]), w[0].max(w[1])));
        }
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut adj = vec![VertexSet::new(n); n];
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::UnknownVertex(a));
            }
            if b >= n {
                return Err(GraphError::UnknownVertex(b));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (a, b) = (position[a], position[b]);
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let mut slots: Vec<Option<L>> = labels.into_iter().map(Some).collect();
        let labels = order
            .iter()
            .map(|&old| slots[old].take().expect("each position taken once"))
            .collect();
        Ok(UGraph { labels, adj })
    }

    /// Builds a graph by testing every pair of distinct labels.
    pub fn from_relation<F>(labels: Vec<L>, adjacent: F) -> Result<Self, GraphError>
    where
        F: Fn(&L, &L) -> bool,
    {
        let n = labels.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if adjacent(&labels[a], &labels[b]) {
                    edges.push((a, b));
                }
            }
        }
        Self::from_edges(labels, edges)
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }
}

impl<L> UGraph<L> {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Result<&L, GraphError> {
        self.labels.get(v).ok_or(GraphError::UnknownVertex(v))
    }

    pub(crate) fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Neighborhood of `v`. Panics on an unknown vertex.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|n| n.contains(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }
}

impl<L: std::fmt::Debug> std::fmt::Debug for UGraph<L> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UGraph")
            .field("labels", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Small named graphs on `0..n` labels, used across tests and benches.
pub mod named {
    use super::UGraph;

    pub fn path(n: usize) -> UGraph<usize> {
        UGraph::from_edges((0..n).collect(), (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> UGraph<usize> {
        UGraph::from_edges((0..n).collect(), (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> UGraph<usize> {
        UGraph::from_relation((0..n).collect(), |_, _| true).unwrap()
    }

    /// `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> UGraph<usize> {
        UGraph::from_edges((0..=leaves).collect(), (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn empty(n: usize) -> UGraph<usize> {
        UGraph::from_edges((0..n).collect(), []).unwrap()
    }
}
