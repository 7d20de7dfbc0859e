//! Exact computation of the graded commutative ring attached to a finite
//! multigraph: the cohomology ring of the configuration space of points in
//! `R^r` indexed by the graph.
//!
//! The ring is the quotient of a free graded commutative algebra with one
//! degree-`r-1` generator per edge by the ideal of Arnold classes of the
//! graph's circuits. Only the parity of `r` matters to the ring structure;
//! gradings are stored in weight units of `r-1`.
//!
//! The crate computes the graded structure by two independent routes — exact
//! integer presentations reduced by Smith normal form, and the
//! deletion-contraction recursion on Poincaré polynomials — and
//! machine-verifies the deletion-contraction short exact sequences and the
//! pullback square on concrete graphs.

pub mod algebra;
pub mod arnold;
pub mod family;
pub mod graph;
pub mod linalg;
pub mod morphism;
pub mod poincare;

pub use algebra::{Element, Monomial, Parity, TensorElement};
pub use arnold::{ArnoldClass, BettiTable, GradedPresentation, NbcBasis};
pub use graph::{CanonicalForm, Circuit, Edge, EdgeId, EdgeRelabeling, Multigraph, VertexId};
pub use morphism::{CheckKind, CheckReport};
pub use poincare::PoincarePolynomial;

/// Errors surfaced by graph and ring operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(EdgeId),
    #[error("malformed circuit: {0}")]
    MalformedCircuit(String),
    #[error("element mentions edge {0} outside the graph's edge set")]
    ForeignEdge(EdgeId),
    #[error("element is not homogeneous; reduce each weight component separately")]
    Inhomogeneous,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("element parse error: {0}")]
    ElementParse(String),
    #[error("graph cannot be written in the text format: {0}")]
    Unwritable(String),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("graph has a loop; {0}")]
    LoopForbidden(String),
    #[error("graph is not simple; {0}")]
    NotSimple(String),
    #[error("invalid edge order: {0}")]
    BadEdgeOrder(String),
    #[error("basis validation failed at weight {weight}: {msg}")]
    BasisValidation { weight: usize, msg: String },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
