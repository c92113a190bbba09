use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph must have at least {min} vertices, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("infeasible parameters: {0}")]
    InvalidParameters(String),
    #[error("edge ({u}, {v}) is not a cut edge")]
    NotCutEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is a pendant edge")]
    PendantEdge { u: usize, v: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("enumeration refused: {0}")]
    Refused(String),
}
