use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("graph is not simple: {0}")]
    NonSimple(String),

    #[error("rotation system is not a planar embedding of a connected graph: {0}")]
    EulerViolation(String),

    #[error("roots {0:?} do not lie on a common face")]
    RootsNotOnOuterFace([usize; 3]),

    #[error("roots {0:?} lie on the outer face but not in clockwise order")]
    RootsNotClockwise([usize; 3]),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not 3-connected")]
    NotThreeConnected,

    #[error("shelling found no removable path with {remaining} vertices left")]
    ShellingStuck { remaining: usize },

    #[error("input wood is invalid: {0}")]
    InvalidWood(ValidationReport),

    #[error("ordering constraints of the color trees contain a cycle")]
    CyclicConstraint,

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),

    #[error("degree bound violated: {0}")]
    DegreeBound(ValidationReport),

    #[error("dual complement property violated: {0}")]
    DualComplement(ValidationReport),

    #[error("H0 contains the cycle {0:?} (forest property violated)")]
    CycleInHZero(Vec<usize>),

    #[error("no edge of cycle {0:?} has its dual in the dual candidate graph")]
    NoWitness(Vec<usize>),

    #[error("candidate graph H is not connected")]
    HNotConnected,

    #[error("not a spanning tree: {0}")]
    NotATree(String),

    #[error("enumeration exceeds cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
