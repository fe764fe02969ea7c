//! Schreier graphs, perfect matchings and canonical double covers of
//! finite regular multigraphs with loops, parallel edges and half-edges.
//!
//! The main entry point is [`schreier::classify`]: a connected regular
//! graph either receives a Schreier labeling directly, or its canonical
//! double cover does. Every certificate can be re-checked independently
//! with [`schreier::verify_labeling`] and [`cover::CoveringMap::verify`].

pub mod corpus;
pub mod cover;
pub mod error;
pub mod factorization;
pub mod fixtures;
pub mod graph;
pub mod matching;
pub mod schreier;

pub use cover::{canonical_double_cover, CoverViolation, CoveringMap};
pub use error::{Error, Result};
pub use factorization::{
    bouquet, cover_to_bouquet, euler_circuit, orient_by_euler, two_factorization, Bouquet,
    EulerOrientation, TwoFactor,
};
pub use graph::{ArcData, ArcId, Bipartition, EdgeId, EdgeKind, Graph, GraphViolation, VertexId};
pub use matching::{
    is_matchable, max_matching_bipartite, max_matching_general, orthogonal_matchings,
    remove_matching, ArcCorrespondence, MatchabilityCertificate, Matching,
};
pub use schreier::{
    action_from_labeling, classify, label_bipartite_involutions, label_from_factorization,
    orbital_graph, verify_labeling, ClassificationResult, GeneratorLetter, GroupSignature,
    LabelViolation, PermutationAction, SchreierLabeling, Sign,
};
