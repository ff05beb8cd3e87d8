//! Benchmark fixtures shared by the criterion targets.

use annigraph_core::graph::UGraph;
use annigraph_core::ideal::{build_ag_discrete, build_dg};
use annigraph_core::{PointSet, Topology};

/// AG of the discrete space on `n` points.
pub fn ag(n: usize) -> UGraph<PointSet> {
    build_ag_discrete(n).expect("n within the model's range")
}

/// DG of the `k`-fold disjoint union of two-point indiscrete spaces, a
/// non-discrete space whose graph is as large as AG on `k` points.
pub fn dg_of_pairs(k: usize) -> UGraph<PointSet> {
    let blocks = (0..k).map(|i| PointSet::from_points([2 * i, 2 * i + 1]));
    build_dg(&Topology::generated_by(2 * k, blocks).expect("within point limit"))
}
