use thiserror::Error;

use crate::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopoError {
    #[error("{n} points exceeds the supported maximum of {max}")]
    TooManyPoints { n: usize, max: usize },
    #[error("set {set} is not contained in the ground set of {n} points")]
    OutsideGround { set: PointSet, n: usize },
    #[error("point {point} out of range for a space on {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("the empty set is missing from the open sets")]
    MissingEmpty,
    #[error("the ground set is missing from the open sets")]
    MissingGround,
    #[error("open set {0} is listed more than once")]
    Duplicate(PointSet),
    #[error("open sets {a} and {b} have a union or intersection that is not open")]
    NotClosed { a: PointSet, b: PointSet },
    #[error("enumeration on {n} points exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
