use thiserror::Error;

/// Errors reported by the toolkit.
///
/// Every variant is an input or capacity problem; none of them signals a
/// violated mathematical identity (those are reported through the `verify_*`
/// result types, never as `Err`).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set over {set_len} vertices does not match graph on {n} vertices")]
    UniverseMismatch { set_len: usize, n: usize },

    #[error("the set must be nonempty")]
    EmptySet,

    #[error("the graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("exponential search too large: n = {n} exceeds cap {cap}")]
    SearchTooLarge { n: usize, cap: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("invalid bipartition: {reason}")]
    InvalidBipartition { reason: String },

    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    #[error("{p} is not congruent to 1 mod 4")]
    NotOneModFour { p: u64 },

    #[error("p = {p} exceeds the Paley cap {cap}")]
    PaleyTooLarge { p: u64, cap: u64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("code has nonzero kernel, min weight is 0")]
    SingularCode,

    #[error("message space too large: k = {k} exceeds enumeration cap {cap}")]
    MessageSpaceTooLarge { k: usize, cap: usize },

    #[error("matrix must be nonempty")]
    EmptyMatrix,

    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },

    #[error("distinguished vertex {u} is not on the gadget's left side")]
    GadgetVertexNotLeft { u: usize },

    #[error("reduction precondition failed: {condition}")]
    PreconditionFailed { condition: String },

    #[error("value {value} outside [0, 1]")]
    OutOfUnitInterval { value: f64 },

    #[error("density must lie in (0, 1/2], got {c}")]
    DensityOutOfRange { c: f64 },

    #[error("tolerance must be positive, got {tol}")]
    BadTolerance { tol: f64 },

    #[error("graph6 encoding supports at most 62 vertices, got {n}")]
    Graph6TooLarge { n: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
