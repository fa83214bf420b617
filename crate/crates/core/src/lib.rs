//! Maximum bipartite matching by alternating-path augmentation, minimum vertex
//! covers read off a maximum matching, and the matrix counterparts: structural
//! rank, maximum transversal and minimum line cover of a sparsity pattern.
//!
//! Every optimum comes with a witness of the opposite kind. A matching of
//! size `k` and a vertex cover of size `k` prove each other optimal, since
//! each matched edge needs its own cover vertex.

pub mod cover;
pub mod graph;
pub mod matching;
pub mod matrix;
pub mod oracle;

pub use cover::{
    alternating_reachability, classify_cases, extract_cover, konig_certificate, verify_cover, AlternatingReachability,
    CaseReport, Certificate, CoverError, EdgeCase, VertexCover,
};
pub use graph::{partition_general_graph, BipartiteGraph, Edge, GraphError, OddCycle, Partition, PartitionError, Side};
pub use matching::{
    augment, find_augmenting_k_path, maximum_matching, verify_matching, verify_pairs, AugmentError, KPath,
    KPathViolation, Matching, MatchingViolation, Strategy,
};
pub use matrix::{
    line_certificate, maximum_transversal, minimum_line_cover, structural_rank, to_graph, verify_line_cover,
    verify_transversal, LineCertificate, LineCover, PatternError, SparsityPattern, Transversal,
};
