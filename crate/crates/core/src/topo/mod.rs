//! Finite topological spaces on labeled points `{0, .., n-1}`.
//!
//! A [`Topology`] stores its open sets sorted by mask together with the
//! minimal neighborhood of every point. In a finite space the minimal
//! neighborhoods form the unique smallest base, so interior, closure,
//! weight and cellularity all reduce to operations on that base.

mod canonical;
mod enumerate;
mod error;
pub mod format;
mod space;

pub use canonical::CanonicalKey;
pub use enumerate::{
    enumerate_canonical, enumerate_topologies, Topologies, DEFAULT_ENUM_CAP, MAX_ENUM_POINTS,
};
pub use error::TopoError;
pub use space::{Reflection, SpaceClass, SpaceFilter, Topology};
