use thiserror::Error;

/// Errors produced by graph construction, parsing and the counting engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) is not present")]
    EdgeAbsent(usize, usize),

    #[error("edge ({0}, {1}) is already present")]
    EdgeExists(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("enumeration needs {required} candidate assignments, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
