//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} is already in the subset")]
    ElementInSet { element: usize },

    #[error("index {index} out of range for ground set of size {n}")]
    OutOfRange { index: usize, n: usize },

    #[error("ground-set size {n} exceeds the brute-force limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("no subset satisfies the feasibility predicate")]
    Infeasible,

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("cardinality {k} out of range for ground set of size {n}")]
    BadK { k: usize, n: usize },

    #[error("principal submatrix is singular or not positive definite")]
    SingularSubmatrix,

    #[error("exact mode supports at most {limit} elements, got {n}")]
    TooLargeForExact { n: usize, limit: usize },

    #[error("coordinate {index} = {value} lies outside the unit box")]
    OutOfBox { index: usize, value: f64 },

    #[error("negative denominator in a ratio pair (L={l:?}, added={s:?})")]
    NegativeDenominator { l: Vec<usize>, s: Vec<usize> },

    #[error("candidate set overlaps the observed domain")]
    Overlap,

    #[error("horizon {horizon} exceeds the number of nodes {n}")]
    BadHorizon { horizon: usize, n: usize },

    #[error("at least one objective function is required")]
    EmptyFunctionList,

    #[error("rounding supports uniform and partition matroids only")]
    UnsupportedMatroid,

    #[error("edge ({from}, {to}) is not present in the graph")]
    UnknownEdge { from: usize, to: usize },

    #[error("matrix is not symmetric at entry ({i}, {j})")]
    AsymmetricH { i: usize, j: usize },

    #[error("polytope domain is empty or malformed: {0}")]
    InfeasibleDomain(String),

    #[error("linear program failed: {0}")]
    LpFailure(String),

    #[error("unsupported projection domain: {0}")]
    UnsupportedDomain(String),

    #[error("ground sets do not match ({0} vs {1} elements)")]
    GroundMismatch(usize, usize),

    #[error("labels must be unique and match the ground-set size")]
    BadLabels,
}
