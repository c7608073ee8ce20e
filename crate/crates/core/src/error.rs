use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no edges")]
    EmptyInput,

    #[error("graph must contain at least one node")]
    EmptyGraph,

    #[error("node id {id} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { id: usize, node_count: usize },

    #[error("q-logarithm argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("entropic index must be finite and non-negative, got {0}")]
    InvalidEntropicIndex(f64),

    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),

    #[error("node {0} is isolated and has no local degree distribution")]
    IsolatedNode(usize),

    #[error("q grid is empty")]
    EmptyGrid,

    #[error("q grid must be strictly increasing ({prev} is followed by {next})")]
    GridNotIncreasing { prev: f64, next: f64 },

    #[error("invalid grid specification `{spec}`: {message}")]
    GridSpec { spec: String, message: String },

    #[error("q grid must contain {0}")]
    MissingGridPoint(f64),

    #[error("relaxed stability tolerance must lie in (0, 0.05], got {0}")]
    InvalidTolerance(f64),

    #[error(
        "rankings cover different node sets; only in first: [{}], only in second: [{}]",
        only_in_a.join(", "),
        only_in_b.join(", ")
    )]
    NodeSetMismatch {
        only_in_a: Vec<String>,
        only_in_b: Vec<String>,
    },
}
