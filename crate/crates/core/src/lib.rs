//! Spectral bounds for simple graphs on up to 64 vertices.
//!
//! The crate computes adjacency and Laplacian spectra exactly enough to test
//! a family of eigenvalue bounds parameterized by degree, girth, and
//! domination invariants, detects when a bound is attained, and explains
//! each attained case by a structural equality class that is revalidated
//! from scratch. Supporting machinery: a bitset graph type, a graph6 codec,
//! exact invariants (girth, diameter, domination number), a cyclic Jacobi
//! eigensolver, named graph families, and exhaustive enumeration of
//! isomorphism classes for small orders.

pub mod bounds;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod spectra;

pub use bounds::{
    audit_graph, check_cao, check_delta_gamma, check_fms, check_grone_merris, check_hong,
    check_hsf, check_llt_girth, check_llt_lambda2, check_mohar, check_theorem1, check_theorem2,
    check_theorem3, classify_theorem1, classify_theorem3, rhs_dominance_th1_vs_main1,
    theorem2_equality_class, validate_equality_class, Analysis, BoundCheck, BoundId,
    BoundParseError, BoundSelection, EqualityClass, GraphAudit, MoharScope, Violation,
};
pub use enumerate::{canonical_code, enumerate_nonisomorphic, EnumError};
pub use families::{make_family, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use invariants::{
    diameter, domination_number, girth, is_dominating_set, minimum_dominating_set, profile,
    Count, InvariantProfile,
};
pub use spectra::{
    adjacency_spectrum, laplacian_spectrum, spectral_radius, symmetric_eigenvalues, EigenError,
    EigenOrder, Spectrum, SymMatrix, EIGEN_TOL,
};
