use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is empty")]
    EmptySequence,
    #[error("adjacent values differ by more than 1 at position {0}")]
    NotOneDifference(usize),
    #[error("value range of the sequence does not fit in its value type")]
    RangeOverflow,
    #[error("sequence of length {0} exceeds the supported maximum")]
    TooLong(usize),
    #[error("kappa must be at least 3, got {0}")]
    InvalidKappa(usize),
    #[error("n = {n} exceeds the exhaustive limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("depth {d} out of range for node {node} of depth {depth}")]
    DepthOutOfRange { node: usize, d: i64, depth: usize },
    #[error("unknown node {0}")]
    UnknownNode(usize),
    #[error("n = {0} is too large to inspect (limit 10000)")]
    TooLargeForInspect(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad generator spec: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree has no root")]
    NoRoot,
    #[error("tree has more than one root ({0} and {1})")]
    MultipleRoots(usize, usize),
    #[error("parent links form a cycle through node {0}")]
    Cycle(usize),
    #[error("node {0} is not reachable from the root")]
    UnreachableNode(usize),
    #[error("malformed tree input: {0}")]
    Malformed(String),
    #[error("unbalanced parentheses at byte {0}")]
    Unbalanced(usize),
    #[error("empty parenthesis string")]
    Empty,
}
