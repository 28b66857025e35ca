//! Homogeneous spectra of multigraded polynomial rings.
//!
//! A polynomial ring `S = R[T_1, ..., T_k]` graded by a finitely generated
//! abelian group `D = Z^s (+) Z/m_1 (+) ... (+) Z/m_t` carries a homogeneous
//! spectrum `Proj(S)` glued from affine charts `D_+(f) = Spec S_(f)` over the
//! *relevant* homogeneous elements `f`: those whose powers have homogeneous
//! divisors of degrees spanning a finite-index subgroup of `D`. For monomials
//! relevance depends only on the support, so the whole model is combinatorial:
//! a simplicial (multi-)fan in the dual of the degree-zero exponent lattice.
//!
//! The crate computes, over exact integer arithmetic:
//!
//! - minimal relevant supports and the radical generators of the monomial
//!   irrelevant ideal ([`relevance`]);
//! - each chart's coordinate monoid, its Hilbert-basis generators as Laurent
//!   monomials, and the associated fan cone ([`charts`]);
//! - the assembled model with a three-valued separation analysis: pairwise
//!   degree-cone certificates plus a fan compatibility check ([`projmodel`]);
//! - degree-zero subrings, Veronese submonoid generators, and brute-force
//!   binomial relations ([`sections`]).
//!
//! The supporting layers are an exact integer linear algebra kit (Smith and
//! Hermite normal forms, kernel lattices with torsion congruences) in
//! [`intlin`] and a rational polyhedral cone toolkit (double description,
//! faces, Hilbert bases of cone-lattice monoids) in [`cones`]. All arithmetic
//! is overflow-checked: results are exact or an [`Error::Overflow`] is
//! reported, never a silent wraparound.

pub mod arith;
pub mod charts;
pub mod cones;
pub mod grading;
pub mod intlin;
pub mod projmodel;
pub mod relevance;
pub mod render;
pub mod sections;

use thiserror::Error;

/// Errors reported by the library.
///
/// Parse diagnostics are deliberately split into distinct variants so a
/// front end can report them (and map them to exit codes) individually.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact arithmetic left the representable integer range.
    #[error("arithmetic overflow: intermediate value outside the exact integer range")]
    Overflow,

    /// The ring document is not syntactically valid.
    #[error("malformed ring document: {0}")]
    Malformed(String),

    /// Lengths of variables, degrees, or degree components disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A variable name occurs twice.
    #[error("duplicate variable name: {0}")]
    DuplicateVariable(String),

    /// A torsion order smaller than 2 was supplied.
    #[error("torsion order must be at least 2, got {0}")]
    InvalidTorsionOrder(i64),

    /// Other document-level validation failures.
    #[error("invalid ring document: {0}")]
    Validation(String),

    /// Subset enumeration refused: too many variables for the configured cap.
    #[error("enumeration cap exceeded: {vars} variables, cap {cap}")]
    EnumerationCap { vars: usize, cap: usize },

    /// A bounded search exceeded its configured ceiling.
    #[error("resource ceiling exceeded: {0}")]
    ResourceCeiling(String),

    /// A chart was requested at a support that is not relevant.
    #[error("support not relevant: degree rank {rank} < {needed}")]
    IrrelevantSupport { rank: usize, needed: usize },

    /// An operation restricted to torsion-free gradings was called with torsion.
    #[error("operation requires a torsion-free grading")]
    TorsionUnsupported,

    /// The constant monomial was passed where a nonconstant one is required.
    #[error("constant monomial: relevance test requires a nonconstant monomial")]
    ConstantMonomial,

    /// Two internal criteria produced contradictory verdicts; this is a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use charts::{build_chart, chart_cone, degree_cone, Chart};
pub use cones::{
    cone_from_generators, cone_from_halfspaces, dualize, hilbert_basis, intersect, is_face, Cone,
    HilbertBasis,
};
pub use grading::{
    degree_of_monomial, degree_of_vector, kernel_lattice_of, parse_ring_spec, GradingGroup,
    Monomial, Multidegree, RingSpec,
};
pub use intlin::{
    finite_index, kernel_lattice, rank, smith_normal_form, IntMatrix, LatticeBasis,
    SmithDecomposition,
};
pub use projmodel::{
    build_model, fan_check, pairwise_separation, separation_verdict, FanVerdict, Overall,
    PairwiseEntry, ProjModel, SeparationReport,
};
pub use relevance::{
    irrelevant_radical_generators, is_relevant_monomial, is_relevant_support,
    minimal_relevant_supports, RelevantFamily, Support, DEFAULT_ENUMERATION_CAP,
};
pub use sections::{binomial_relations, veronese_generators, zero_subring_generators};
