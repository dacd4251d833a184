use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tournament needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a tournament on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair {{{0}, {1}}} is oriented more than once")]
    DuplicatePair(usize, usize),
    #[error("pair {{{0}, {1}}} has no orientation")]
    MissingPair(usize, usize),
    #[error("({0}, {1}) is not an arc")]
    NotAnArc(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set universe {got} does not match tournament order {expected}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("{what} exceeds cap: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("vertex set is not Q-invariant")]
    NotInvariant,
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("malformed classifier tree: {0}")]
    MalformedTree(String),
    #[error("invalid attachment: {0}")]
    InvalidAttachment(String),
    #[error("not a spanning set partition")]
    NotSpanningPartition,
    #[error("degenerate range: {0}")]
    DegenerateRange(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid game subset: {0}")]
    InvalidGameSubset(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),
    #[error("dyadic elements coincide")]
    EqualElements,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("inverse system invalid at level {level}: {reason}")]
    InvalidSystem { level: usize, reason: String },
    #[error("threads agree on all {0} stored levels")]
    Undetermined(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::CapExceeded {
            what,
            size: size.into(),
            cap: cap.into(),
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
