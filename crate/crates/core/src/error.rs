use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("terminals must be distinct, got s = t = {0}")]
    SameTerminals(usize),
    #[error("terminals {s} and {t} lie in different components")]
    TerminalsDisconnected { s: usize, t: usize },
    #[error("{slots} edge slots exceed the enumeration ceiling of {ceiling}")]
    SlotCeiling { slots: usize, ceiling: usize },
    #[error("{0}")]
    InvalidNVector(String),
    #[error("polynomial is not a valid state polynomial: {0}")]
    NotStatePolynomial(String),
    #[error("cannot parse polynomial: {0}")]
    PolynomialSyntax(String),
    #[error("cannot parse graph: {0}")]
    GraphSyntax(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("family {0} has no closed-form split polynomial")]
    NoClosedForm(String),
    #[error("family {0} has no stated state counts")]
    NoStatedCounts(String),
    #[error("state-count vectors differ in shape: (n, m) = ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("unknown engine {0:?}; expected oracle, factoring or partition")]
    InvalidEngine(String),
    #[error("unknown graph mode {0:?}; expected simple or multi")]
    InvalidMode(String),
    #[error("(n, m) = ({n}, {m}) is outside the search ceiling: {reason}")]
    SearchCeiling { n: usize, m: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
