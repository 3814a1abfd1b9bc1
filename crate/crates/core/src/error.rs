use thiserror::Error;

/// Failure while reading an instance or family file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex id out of range: {id} (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("duplicate edge declaration {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex {0} in set declaration")]
    DuplicateVertex(usize),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex id out of range: {id} (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("generator parameters out of range: {0}")]
    GeneratorRange(String),
    #[error("separators belong to different separator instances")]
    ContextMismatch,
    #[error("vertex {0} is not a member of the separator")]
    NotInSeparator(usize),
    #[error("vertex set is not a separator: {0}")]
    NotASeparator(String),
    #[error(
        "degenerate family: the smallest element is empty (source and sink already disconnected)"
    )]
    DegenerateFamily,
    #[error("empty family")]
    EmptyFamily,
    #[error("order relation is inconsistent: {0}")]
    InconsistentOrder(String),
    #[error("oracle budget exceeded: {0}")]
    OracleBudget(String),
    #[error("provider could not decide an instance with {terminals} terminals above the threshold {threshold}; use the exact provider")]
    ProviderUnknown { terminals: usize, threshold: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
