use thiserror::Error;

/// Errors raised by graph construction, the colouring pipelines and the verifiers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("graph is disconnected: {0} undefined")]
    Disconnected(&'static str),
    /// A theorem hypothesis (minimum degree, order, chordality, ...) does not hold.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("{what} = {value} exceeds cap {cap}; raise the cap to proceed")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    /// The base colouring of G[D] has no rainbow path for a pair the extension needs.
    #[error("base colouring does not rainbow-connect ({0}, {1})")]
    BaseNotRainbow(usize, usize),
    #[error("witness path for ({0}, {1}) is not a rainbow path")]
    BrokenWitness(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
