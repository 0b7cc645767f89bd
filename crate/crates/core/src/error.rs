use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex index {index} out of range for {n} vertices")]
    BadIndex { index: usize, n: usize },
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("edge multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("vertex {0} does not have degree two")]
    NotDegreeTwo(usize),
    #[error("the two neighbors of vertex {0} coincide")]
    NeighborsNotDistinct(usize),
    #[error("{what}: feasibility cap exceeded ({detail})")]
    FeasibilityCapExceeded { what: &'static str, detail: String },
    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("a scramble needs at least one egg")]
    EmptyCollection,
    #[error("egg {0} is empty")]
    EmptyEgg(usize),
    #[error("egg {0} does not induce a connected subgraph")]
    DisconnectedEgg(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("vertex {0} does not fit the subdivision")]
    BadVertex(usize),
    #[error("scramble order {0} is below 3")]
    OrderTooSmall(u64),

    #[error("divisor length {got} does not match {n} vertices")]
    BadDivisor { got: usize, n: usize },
    #[error("vertex set must be a nonempty subset of the vertices")]
    BadSet,
    #[error("vertex {0} is in debt outside the burning source")]
    NegativeOutsideSource(usize),
    #[error("no positive-rank divisor of degree at most {0}")]
    CapExceeded(u64),

    #[error("invalid tree-cut decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("graph has fewer than three vertices")]
    TooSmall,
    #[error("missing invariant: {0}")]
    MissingInvariant(&'static str),

    #[error("edge ({0}, {1}) is not a bridge")]
    NotABridge(usize, usize),

    #[error("set {index} has {size} elements, more than k = {k}")]
    SetTooLarge { index: usize, size: usize, k: usize },
    #[error("graph is not simple")]
    NotSimple,
    #[error("no family case applies")]
    NoCaseMatches,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
