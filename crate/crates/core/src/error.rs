use thiserror::Error;

use crate::verify::Counterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed embedding: {0}")]
    Malformed(String),

    #[error("dart {0} is out of range")]
    DartOutOfRange(usize),

    #[error("rotation system is not planar: component containing vertex {vertex} has V - E + F = {euler}")]
    NotPlanar { vertex: usize, euler: i64 },

    #[error("graph is not outerplane")]
    NotOuterplane,

    #[error("graph is not simple")]
    NotSimple,

    #[error("graph is not biconnected")]
    NotBiconnected,

    #[error("graph has a bridge")]
    HasBridge,

    #[error("graph is not a tree")]
    NotATree,

    #[error("cannot contract loop edge {0}")]
    LoopContraction(usize),

    #[error("contracted edge set contains a cycle")]
    CyclicContraction,

    #[error("vertex {vertex} does not occur on face {face}")]
    NotOnFace { vertex: usize, face: usize },

    #[error("darts {0} and {1} do not lie on a common face")]
    CornersOnDifferentFaces(usize, usize),

    #[error("edge {0}-{1} is not an outer-face edge")]
    NotOuterEdge(usize, usize),

    #[error("graph is not a cactus")]
    NotCactus,

    #[error("cactus has an odd cycle of length {0}")]
    OddCycle(usize),

    #[error("graph has {0} 2-connected components, at most one allowed")]
    MultipleBlocks(usize),

    #[error("invalid blocking set: {0}")]
    InvalidBlockingSet(String),

    #[error("search guard exceeded: {n} vertices, limit {limit}")]
    GuardExceeded { n: usize, limit: usize },

    #[error("colouring has {got} entries for {expected} vertices")]
    PartialColouring { expected: usize, got: usize },

    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("generator produced an instance outside its class: {0}")]
    GeneratorBug(String),

    #[error("colouring failed verification on face {}", .0.face)]
    Unverified(Box<Counterexample>),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
