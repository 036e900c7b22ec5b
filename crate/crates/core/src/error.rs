use thiserror::Error;

use crate::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop arc at vertex {0}")]
    LoopArc(Vertex),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("order {order} exceeds the supported limit {limit} for {what}")]
    SizeLimitExceeded {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("digraph format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("coloring does not assign a color to vertex {0}")]
    PartialColoring(Vertex),
    #[error("missing arc ({0},{1})")]
    MissingArc(Vertex, Vertex),
    #[error("vertices {0} and {1} do not induce a digon")]
    MissingDigon(Vertex, Vertex),
    #[error("join vertex pair uses the same vertex {0} twice")]
    SameVertex(Vertex),
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(Vertex, Vertex),
    #[error("identification set is empty")]
    EmptySet,
    #[error("bad bijection: {0}")]
    BadBijection(String),
    #[error("not a block: {0}")]
    NotABlock(String),
    #[error("digraph is not {0}-critical")]
    NotCritical(usize),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("target has dichromatic number {chi} < {k}")]
    TargetTooEasy { chi: usize, k: usize },
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{0}")]
    Parse(#[from] crate::script::ParseError),
    #[error("step `{name}` (line {line}): {source}")]
    Step {
        name: String,
        line: usize,
        source: Box<Error>,
    },
    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
}
