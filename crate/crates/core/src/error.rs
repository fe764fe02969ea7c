use thiserror::Error;

use crate::cover::CoverViolation;
use crate::graph::{ArcId, VertexId};
use crate::schreier::LabelViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("arc {arc} out of range (graph has {count} arcs)")]
    ArcOutOfRange { arc: usize, count: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has a half-edge at arc {}", .0.index())]
    HalfEdgePresent(ArcId),

    #[error("vertex {} has odd degree {degree}", .vertex.index())]
    OddDegree { vertex: VertexId, degree: usize },

    #[error("bipartition does not fit the graph: {0}")]
    InvalidBipartition(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("requested {requested} matchings from a {degree}-regular graph")]
    TooManyMatchings { requested: usize, degree: usize },

    #[error("not a matching of the graph: {0}")]
    InvalidMatching(String),

    #[error("map size mismatch: {0}")]
    MapSizeMismatch(String),

    #[error("covering map is invalid ({} violations)", .0.len())]
    InvalidCovering(Vec<CoverViolation>),

    #[error("factors and matchings do not partition the edges: {0}")]
    PartitionViolated(String),

    #[error("labeling is invalid ({} violations)", .0.len())]
    InvalidLabeling(Vec<LabelViolation>),

    #[error("invalid permutation action: {0}")]
    InvalidAction(String),

    #[error("action is not transitive")]
    NotTransitive,

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
