use thiserror::Error;

/// Errors produced by graph construction, metric evaluation and I/O.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge list is empty")]
    EmptyEdgeList,

    #[error("edge {from} -> {to} has invalid weight {weight} (must be finite and > 0)")]
    InvalidWeight {
        from: String,
        to: String,
        weight: f64,
    },

    #[error("node label must not be empty")]
    EmptyLabel,

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("alpha = {alpha} is outside the allowed domain ({domain})")]
    AlphaOutOfDomain { alpha: f64, domain: &'static str },

    #[error("direction `{direction}` does not apply to a {kind} graph")]
    DirectionMismatch {
        direction: &'static str,
        kind: &'static str,
    },

    #[error("invalid bounds parameters: {0}")]
    InvalidBoundsParams(String),

    #[error("bounds do not match the vector: {0}")]
    BoundsMismatch(String),

    #[error("degenerate bounds: lower = upper = {0}")]
    DegenerateBounds(f64),

    #[error("{metric} requires a connected graph; no path from `{from}` to `{to}`")]
    Disconnected {
        metric: &'static str,
        from: String,
        to: String,
    },

    #[error("{metric} is only defined for undirected graphs")]
    RequiresUndirected { metric: &'static str },

    #[error("eigenvector power iteration did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("centrality vectors cover different node sets: {0}")]
    NodeSetMismatch(String),

    #[error("rank correlation needs at least 3 nodes, got {0}")]
    TooFewNodes(usize),

    #[error("rank correlation undefined: `{0}` has constant scores")]
    ConstantRanking(String),

    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),

    #[error("unknown metric `{0}`")]
    UnknownMetric(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("GEXF: {0}")]
    Gexf(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
