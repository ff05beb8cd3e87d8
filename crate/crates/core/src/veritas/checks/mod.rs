//! Checker functions, one per claim. Reflection checks see only the
//! component count; space checks see the topology itself.

pub mod ag;
pub mod dg;
pub mod ops;
pub mod ring;

use crate::graph::{DistanceValue, Measured};

macro_rules! need_ag {
    ($r:expr) => {
        match $r.ag {
            Some(ag) => ag,
            None => {
                return $crate::veritas::Outcome::degenerate(
                    "annihilating-ideal graph is empty: the reflection has fewer than two points",
                )
            }
        }
    };
}

macro_rules! need_ring {
    ($r:expr) => {
        match $r.ring {
            Some(ring) => ring,
            None => {
                return $crate::veritas::Outcome::not_applicable(
                    "ring model is limited to at most 5 components",
                )
            }
        }
    };
}

pub(crate) use need_ag;
pub(crate) use need_ring;

pub(crate) fn finite(k: u32) -> Measured<DistanceValue> {
    Measured::Value(DistanceValue::Finite(k))
}
