use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("vertex index {index} out of range 1..={vertex_count}")]
    VertexOutOfRange { index: usize, vertex_count: usize },
    #[error("unknown arrow id `{0}`")]
    UnknownArrow(String),
    #[error("arrows `{first}` and `{second}` do not compose: head {head} != tail {tail}")]
    NotComposable {
        first: String,
        second: String,
        head: usize,
        tail: usize,
    },
    #[error("operands live over different quivers")]
    MixedQuiver,
    #[error("path `{path}` is not closed: starts at vertex {start}, ends at vertex {end}")]
    OpenPath {
        path: String,
        start: usize,
        end: usize,
    },
    #[error("expected {expected} entries (one per vertex), got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("block for vertex {vertex} is singular")]
    SingularBlock { vertex: usize },
    #[error("matrix is not block diagonal for the dimension vector (entry {row},{column})")]
    NotBlockDiagonal { row: usize, column: usize },
    #[error("matrix has size {actual}, expected {expected}")]
    MatrixSize { expected: usize, actual: usize },
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("invalid variable `{0}`")]
    BadVariable(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
