use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(u32),

    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    UnknownVertex { vertex: u32, order: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(u32, u32),

    #[error("malformed graph6 input at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 cannot encode parallel edges; use the JSON edge-list format")]
    NotSimple,

    #[error("malformed JSON graph: {0}")]
    Json(String),

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("odd vertex set must have even size, got {0}")]
    OddParity(usize),

    #[error("graph must be connected")]
    Disconnected,

    #[error("not an induced 4-cycle: {0}")]
    NotInducedFourCycle(String),

    #[error("resource limit: {what} is {value}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("certificate check failed: {0}")]
    Certificate(String),

    #[error("unknown statement `{id}`; registered: {registry}")]
    UnknownStatement { id: String, registry: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    pub(crate) fn limit(what: &'static str, value: u64, limit: u64) -> Self {
        Error::ResourceLimit { what, value, limit }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
