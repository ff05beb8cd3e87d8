//! Ideals of `C(X)` represented by open sets, the annihilating-ideal graph
//! of a finite space, the disjoint open set graph of any finite topology,
//! and closed-form predictions of their invariants.
//!
//! For finite `X`, `C(X)` only depends on the discrete space of weak
//! components, and every ideal of `ℝ^m` is `{f : Coz(f) ⊆ S}` for a unique
//! `S`. An ideal is therefore identified with its support `O(I) = S`, and
//! the product `IJ` vanishes exactly when the supports are disjoint.

mod classify;
mod error;
mod hom;
mod models;
mod operators;
pub mod ring;

pub use classify::{
    adjacency_test, distance_classifier, ecc_classifier, gi_case, gi_classifier, gi_classifier_repaired,
    girth_predictor, leaf_classifier, orthogonality_test, radius_predictor,
    triangulated_predictor, GiCase,
};
pub use error::IdealError;
pub use hom::{twin_expansion, HomWitness};
pub use models::{ag_of_space, build_ag_discrete, build_dg, is_vertex_open, tau_star, MAX_AG_POINTS};
pub use operators::{
    ann_open, element_of_a, element_of_a_literal, element_of_a_repaired, i_of_set, o_of_ideal,
    IdealVertex,
};
