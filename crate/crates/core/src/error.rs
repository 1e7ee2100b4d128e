use thiserror::Error;

/// Errors produced by graph construction, colouring validation, the
/// constructive colourings and the exact solver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid circulant parameters C_{n}({d1},{d2}): need 1 <= d1 < d2 <= floor((n-1)/2)")]
    InvalidGraph { n: usize, d1: usize, d2: usize },

    #[error("graph has {n} vertices, exact independence number is limited to {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("colouring has {found} vertices but the graph has {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed colouring: {0}")]
    MalformedColouring(String),

    #[error("colour class {0} is empty")]
    EmptyClass(u8),

    #[error("5p + 9q = {0} is below the smallest admissible order 7")]
    DegenerateSize(usize),

    #[error("no stored sporadic colouring for n = {0}")]
    NotSporadic(usize),

    #[error("n = {0} is below the smallest admissible order 7")]
    OrderTooSmall(usize),

    #[error("n = {0} is not one of the Type II orders 7, 8, 12, 13, 17")]
    NotTypeTwo(usize),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("search for n = {n}, k = {k} hit the node limit after {nodes} nodes")]
    Inconclusive { n: usize, k: u8, nodes: u64 },

    #[error("certificate check failed: {0}")]
    CertificateMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
