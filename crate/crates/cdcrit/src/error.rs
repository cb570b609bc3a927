use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1}) in input")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),
    #[error("empty vertex set not allowed here")]
    EmptySet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph must be 2-connected for this check")]
    NotTwoConnected,
    #[error("designated head vertex {0} is not a vertex of the block")]
    HeadNotInBlock(usize),
    #[error("{what} is capped at n <= {cap}, got n = {n}")]
    ScaleCapExceeded {
        what: &'static str,
        cap: usize,
        n: usize,
    },
    #[error("parity mismatch: n = {n} and ell = {ell} must have equal parity")]
    ParityMismatch { n: usize, ell: usize },
    #[error("minimum degree {found} below required {required}")]
    MinDegreeTooSmall { required: usize, found: usize },
    #[error("ell = {0} not supported (only 0, 1, 2)")]
    UnsupportedEll(usize),
    #[error("claimed gamma_c = {claimed} does not match solver value {actual}")]
    GammaMismatch { claimed: usize, actual: usize },
    #[error("report does not belong to this graph: {0}")]
    StaleReport(String),
    #[error("marked subgraph is not a maximal complete subgraph of order >= 2")]
    NotMaximalClique,
    #[error("block fails the class-B3 property check: {0}")]
    NotB3Block(String),
    #[error("graph fails the P(k) membership check")]
    NotPkMember,
    #[error("invalid family parameters: {0}")]
    BadFamilyParams(String),
    #[error("cannot parse family spec: {0}")]
    BadFamilySpec(String),
    #[error("invalid graph6 input: {0}")]
    BadGraph6(String),
    #[error("join expression invalid: {0}")]
    BadJoinExpr(String),
    #[error("unknown suite id: {0}")]
    UnknownSuite(String),
    #[error("invalid manifest line: {0}")]
    BadManifest(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
