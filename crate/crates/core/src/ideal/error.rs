use thiserror::Error;

use crate::graph::GraphError;
use crate::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("support {support} is empty or the whole space; the ideal is not annihilating")]
    NotAnnihilating { support: PointSet },
    #[error("set {set} is outside the ground set of {n} points")]
    OutsideGround { set: PointSet, n: usize },
    #[error("set {0} is not open")]
    NotOpen(PointSet),
    #[error("{0} is not a vertex: it must be a nonempty open set whose complement has nonempty interior")]
    NotVertex(PointSet),
    #[error("both arguments are the vertex {0}; a distinct pair is required")]
    SameVertex(PointSet),
    #[error("{0} is a leaf vertex")]
    LeafVertex(PointSet),
    #[error("{n} points is outside the supported range {min}..={max}")]
    PointsOutOfRange { n: usize, min: usize, max: usize },
    #[error("multiplicity of base vertex {0} is zero")]
    ZeroMultiplicity(usize),
    #[error("expected {expected} multiplicities, got {got}")]
    MultiplicityCount { expected: usize, got: usize },
    #[error("invalid homomorphism witness: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
