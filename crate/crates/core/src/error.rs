use thiserror::Error;

use crate::embed::{HalfEdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rotation system is not planar: n - m + f = {euler} (expected 2)")]
    NonPlanar { euler: i64 },
    #[error("inconsistent rotation system: {0}")]
    Inconsistent(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("special vertices are missing")]
    SpecialsMissing,
    #[error("special vertices are not on the outer face")]
    SpecialsNotOnOuterFace,
    #[error("flavor precondition failed: {0}")]
    FlavorPreconditionFailed(String),
    #[error("labeling is invalid: {0}")]
    InvalidLabeling(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("out-degree sum {sum} does not match edge count {edges}")]
    SpecSumMismatch { sum: usize, edges: usize },
    #[error("no orientation realizes the out-degree prescription")]
    Infeasible { witness: Option<Vec<VertexId>> },
    #[error("orientation violates its degree contract: {0}")]
    BadOrientation(String),
    #[error("conflicting labels at angle {angle}")]
    ConflictingLabels { angle: HalfEdgeId },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph is not a quadrangulation")]
    NotQuadrangulation,
    #[error("bad special vertices: {0}")]
    BadSpecials(String),
    #[error("face is not contractible: {0}")]
    NotContractible(String),
    #[error("edge is not bidirected")]
    NotBidirected,
    #[error("no feasible split target")]
    NoFeasibleTarget,
    #[error("split would separate the special vertices from a common face")]
    OuterFaceCare,
    #[error("angle does not admit a merge: {0}")]
    NotMergeable(String),
    #[error("cycle is not directed in the orientation")]
    NotDirected,
    #[error("graph is not a Laman graph")]
    NotLaman,
    #[error("no valid base triangle for a Henneberg construction")]
    NoValidBase,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
