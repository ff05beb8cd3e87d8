use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GraphError, UGraph};

const PARALLEL_BFS_MIN: usize = 256;

/// A path length, or `Inf` when no path (or cycle) exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DistanceValue {
    Finite(u32),
    Inf,
}

impl DistanceValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            DistanceValue::Finite(d) => Some(d),
            DistanceValue::Inf => None,
        }
    }

    fn from_option(d: Option<u32>) -> Self {
        d.map_or(DistanceValue::Inf, DistanceValue::Finite)
    }
}

impl fmt::Display for DistanceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceValue::Finite(d) => write!(f, "{d}"),
            DistanceValue::Inf => f.write_str("inf"),
        }
    }
}

/// Serialized as a number, or the string `"inf"`.
impl Serialize for DistanceValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DistanceValue::Finite(d) => s.serialize_u32(*d),
            DistanceValue::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DistanceValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(u32),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(v) => Ok(DistanceValue::Finite(v)),
            Raw::Word(w) if w == "inf" => Ok(DistanceValue::Inf),
            Raw::Word(w) => Err(serde::de::Error::custom(format!("expected a distance, got `{w}`"))),
        }
    }
}

/// A graph measure that is undefined on graphs with fewer than two
/// vertices. Serialized as the inner value, or `"degenerate"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measured<T> {
    Value(T),
    Degenerate,
}

impl<T> Measured<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Measured::Value(v) => Some(v),
            Measured::Degenerate => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, Measured::Degenerate)
    }
}

impl<T: fmt::Display> fmt::Display for Measured<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measured::Value(v) => v.fmt(f),
            Measured::Degenerate => f.write_str("degenerate"),
        }
    }
}

impl<T: Serialize> Serialize for Measured<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Measured::Value(v) => v.serialize(s),
            Measured::Degenerate => s.serialize_str("degenerate"),
        }
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Measured<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        if v.as_str() == Some("degenerate") {
            return Ok(Measured::Degenerate);
        }
        T::deserialize(v).map(Measured::Value).map_err(serde::de::Error::custom)
    }
}

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
pub fn bfs<L>(g: &UGraph<L>, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.len()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for w in g.neighbors(u).iter() {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distance<L>(g: &UGraph<L>, u: usize, v: usize) -> Result<DistanceValue, GraphError> {
    g.check(u)?;
    g.check(v)?;
    Ok(DistanceValue::from_option(bfs(g, u)[v]))
}

/// All-pairs shortest path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    cells: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn new<L: Sync>(g: &UGraph<L>) -> Self {
        let n = g.len();
        // rows are assembled in source order whatever the worker count
        let rows: Vec<Vec<Option<u32>>> = if n >= PARALLEL_BFS_MIN {
            (0..n).into_par_iter().map(|s| bfs(g, s)).collect()
        } else {
            (0..n).map(|s| bfs(g, s)).collect()
        };
        DistanceMatrix {
            n,
            cells: rows.concat(),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> DistanceValue {
        DistanceValue::from_option(self.cells[u * self.n + v])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Largest distance from `u` to any other vertex.
    pub fn eccentricity(&self, u: usize) -> Measured<DistanceValue> {
        if self.n < 2 {
            return Measured::Degenerate;
        }
        Measured::Value(
            (0..self.n)
                .filter(|&v| v != u)
                .map(|v| self.get(u, v))
                .max()
                .expect("at least one other vertex"),
        )
    }

    pub fn radius(&self) -> Measured<DistanceValue> {
        if self.n < 2 {
            return Measured::Degenerate;
        }
        Measured::Value(
            (0..self.n)
                .filter_map(|u| self.eccentricity(u).value())
                .min()
                .expect("nonempty"),
        )
    }

    pub fn diameter(&self) -> Measured<DistanceValue> {
        if self.n < 2 {
            return Measured::Degenerate;
        }
        Measured::Value(
            (0..self.n)
                .filter_map(|u| self.eccentricity(u).value())
                .max()
                .expect("nonempty"),
        )
    }
}

pub fn eccentricity<L: Sync>(g: &UGraph<L>, u: usize) -> Result<Measured<DistanceValue>, GraphError> {
    g.check(u)?;
    if g.len() < 2 {
        return Ok(Measured::Degenerate);
    }
    Ok(Measured::Value(
        bfs(g, u)
            .into_iter()
            .enumerate()
            .filter(|&(v, _)| v != u)
            .map(|(_, d)| DistanceValue::from_option(d))
            .max()
            .expect("at least one other vertex"),
    ))
}

pub fn radius<L: Sync>(g: &UGraph<L>) -> Measured<DistanceValue> {
    DistanceMatrix::new(g).radius()
}

pub fn diameter<L: Sync>(g: &UGraph<L>) -> Measured<DistanceValue> {
    DistanceMatrix::new(g).diameter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use DistanceValue::{Finite, Inf};

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&named::path(3), 0, 2), Ok(Finite(2)));
        let k4 = named::complete(4);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(distance(&k4, u, v), Ok(Finite(1)));
                }
            }
        }
        assert_eq!(distance(&named::empty(2), 0, 1), Ok(Inf));
        assert_eq!(distance(&named::empty(2), 0, 2), Err(GraphError::UnknownVertex(2)));
    }

    #[test]
    fn eccentricity_radius_diameter() {
        let p3 = named::path(3);
        assert_eq!(eccentricity(&p3, 1), Ok(Measured::Value(Finite(1))));
        assert_eq!(radius(&p3), Measured::Value(Finite(1)));
        assert_eq!(diameter(&p3), Measured::Value(Finite(2)));

        let star = named::star(4);
        assert_eq!(radius(&star), Measured::Value(Finite(1)));
        assert_eq!(diameter(&star), Measured::Value(Finite(2)));

        let c5 = named::cycle(5);
        assert_eq!(radius(&c5), Measured::Value(Finite(2)));
        assert_eq!(diameter(&c5), Measured::Value(Finite(2)));
    }

    #[test]
    fn degenerate_and_disconnected() {
        assert_eq!(radius(&named::empty(0)), Measured::Degenerate);
        assert_eq!(diameter(&named::empty(1)), Measured::Degenerate);
        assert_eq!(eccentricity(&named::empty(1), 0), Ok(Measured::Degenerate));
        assert_eq!(radius(&named::empty(3)), Measured::Value(Inf));
    }

    #[test]
    fn serialization() {
        let v = serde_json::to_string(&vec![
            Measured::Value(Finite(3)),
            Measured::Value(Inf),
            Measured::Degenerate,
        ])
        .unwrap();
        assert_eq!(v, r#"[3,"inf","degenerate"]"#);
        let back: Vec<Measured<DistanceValue>> = serde_json::from_str(&v).unwrap();
        assert_eq!(back, vec![Measured::Value(Finite(3)), Measured::Value(Inf), Measured::Degenerate]);
    }
}
