//! Error and warning types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed in a simple graph")]
    SelfLoop { v: usize },
    #[error("cartesian product requires nonempty factors")]
    EmptyProduct,
    #[error("unknown graph family `{name}`")]
    UnknownFamily { name: String },
    #[error("family `{family}` expects {expected}, got {got} parameters")]
    ParameterCount {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("family `{family}` requires {requirement}")]
    ParameterRange {
        family: &'static str,
        requirement: String,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list is empty")]
    Empty,
    #[error("malformed header line `{line}` (expected `n m`)")]
    MalformedHeader { line: String },
    #[error("malformed edge on line {line_no}: `{line}`")]
    MalformedLine { line_no: usize, line: String },
    #[error("line {line_no}: vertex {v} out of range for n = {n}")]
    VertexOutOfRange { line_no: usize, v: usize, n: usize },
    #[error("line {line_no}: self-loop `{v} {v}`")]
    SelfLoop { line_no: usize, v: usize },
    #[error("header declares {expected} edges but {found} edge lines follow")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Non-fatal findings surfaced while parsing an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListWarning {
    DuplicateEdge { line_no: usize, u: usize, v: usize },
}

impl std::fmt::Display for EdgeListWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeListWarning::DuplicateEdge { line_no, u, v } => {
                write!(f, "line {line_no}: duplicate edge {u} {v}")
            }
        }
    }
}

/// Non-fatal findings from graph validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphWarning {
    IsolatedVertex(usize),
}

impl std::fmt::Display for GraphWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphWarning::IsolatedVertex(v) => write!(f, "vertex {v} is isolated"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error(
        "search budget exhausted: {planned} closure evaluations planned against a budget of \
         {budget}; every set of at most {exhausted} vertices was ruled out"
    )]
    BudgetExceeded {
        planned: u64,
        budget: u64,
        /// Largest size fully exhausted, i.e. the proven bound is `exhausted + 1 <= Z`.
        exhausted: usize,
    },
    #[error("graph on {n} vertices exceeds the exact path-cover limit of {limit}")]
    PathCoverTooLarge { n: usize, limit: usize },
    #[error("the given set is not a zero forcing set")]
    NotForcingSet,
    #[error("no stored construction for family `{family}` with these parameters")]
    NoConstruction { family: String },
    #[error("stored construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("invariant bound violated (solver bug): {0}")]
    BoundViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
