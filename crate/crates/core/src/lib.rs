//! Annihilating-ideal graphs of `C(X)` for finite spaces and disjoint open
//! set graphs of finite topologies, with exact graph invariants and a
//! harness that checks each claimed identity against brute force.

pub mod graph;
pub mod ideal;
mod pointset;
pub mod topo;
pub mod veritas;

pub use pointset::{PointSet, Points, MAX_POINTS};
pub use topo::{CanonicalKey, Reflection, SpaceClass, SpaceFilter, TopoError, Topology};
