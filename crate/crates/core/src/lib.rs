//! Closures, factors, constrained spanning trees, clique and spectral
//! thresholds for small simple graphs, with an exhaustive verification
//! harness.
//!
//! Graphs have at most 64 vertices and store one adjacency bitmask per
//! vertex; every algorithm works on those word-parallel rows.

pub mod cliques;
pub mod closure;
pub mod connectivity;
pub mod error;
pub mod factors;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matching;
pub mod spectral;
pub mod thresholds;
pub mod trees;
pub mod verify;

pub use cliques::{binomial, clique_number, count_cliques, posa_clique_bound, posa_property, PosaQuery};
pub use closure::{
    closure_for_k_factor, closure_for_one_factor, closure_for_spanning_k_tree, is_closed,
    l_closure, ClosureIndex,
};
pub use connectivity::{is_m_connected, vertex_connectivity};
pub use error::{Error, Result};
pub use factors::{brute_force_k_factor, has_k_factor, has_one_factor, FactorCertificate};
pub use families::{Family, Parts};
pub use graph::{Graph, GraphStats, VertexSet, MAX_VERTICES};
pub use iso::is_isomorphic;
pub use verify::format_sig;
pub use matching::{max_matching, Matching};
pub use spectral::{
    hong_bound, hong_shu_fang_bound, quotient_rho, spectral_radius, QuotientSystem, DEFAULT_TOL,
};
pub use thresholds::{
    clique_threshold_1f, clique_threshold_kf, phi, psi, spectral_threshold_1f,
    spectral_threshold_1f_printed, spectral_threshold_kf, Branch, CliqueThreshold,
    ThresholdQuery,
};
pub use trees::{
    has_spanning_k_tree, has_spanning_k_tree_with_budget, has_spanning_tree_leaf_deg,
    has_spanning_tree_leaf_deg_with_budget, kaneko_check, kaneko_check_with_budget, leaf_degree,
    spanning_tree_min_max_degree, spanning_tree_min_max_degree_with_budget, KanekoVerdict,
    SearchBudget, SubsetCertificate, TreeCertificate,
};
