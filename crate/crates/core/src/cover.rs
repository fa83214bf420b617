//! Minimum vertex covers extracted from maximum matchings.
//!
//! For each matched pair (P, Q) the cover takes Q when some K-path from an
//! exposed left vertex reaches Q, and P otherwise. On a maximum matching this
//! picks exactly one endpoint per pair and touches every edge, so the cover
//! and the matching have equal size and certify each other.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge, Side};
use crate::matching::{maximum_matching, KPath, Matching, Strategy};

/// Vertices reachable by K-paths from the exposed left vertices, the exposed
/// left vertices themselves included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingReachability {
    reachable_left: Vec<bool>,
    reachable_right: Vec<bool>,
}

impl AlternatingReachability {
    pub fn is_left_reachable(&self, p: usize) -> bool {
        self.reachable_left[p]
    }

    pub fn is_right_reachable(&self, q: usize) -> bool {
        self.reachable_right[q]
    }

    pub fn reachable_left(&self) -> impl Iterator<Item = usize> + '_ {
        self.reachable_left
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(|(p, _)| p)
    }

    pub fn reachable_right(&self) -> impl Iterator<Item = usize> + '_ {
        self.reachable_right
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(|(q, _)| q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("matching is not maximum: augmenting K-path {0}")]
    NotMaximum(KPath),
}

/// Breadth-first closure over all exposed left vertices at once.
///
/// Unmatched edges are followed left to right, matched edges right to left.
/// Reaching an exposed right vertex means the matching admits an augmenting
/// path; that path is returned as the error.
pub fn alternating_reachability(
    graph: &BipartiteGraph,
    maximum: &Matching,
) -> Result<AlternatingReachability, CoverError> {
    const NONE: usize = usize::MAX;
    let mut reachable_left = vec![false; graph.left_count()];
    let mut reachable_right = vec![false; graph.right_count()];
    let mut right_parent = vec![NONE; graph.right_count()];
    let mut queue: VecDeque<usize> = VecDeque::new();

    for (p, reached) in reachable_left.iter_mut().enumerate() {
        if maximum.is_left_exposed(p) {
            *reached = true;
            queue.push_back(p);
        }
    }
    while let Some(p) = queue.pop_front() {
        for &q in graph.left_neighbors(p) {
            if reachable_right[q] || maximum.left_mate(p) == Some(q) {
                continue;
            }
            reachable_right[q] = true;
            right_parent[q] = p;
            match maximum.right_mate(q) {
                None => {
                    let mut rev = vec![q];
                    let mut at = p;
                    loop {
                        rev.push(at);
                        match maximum.left_mate(at) {
                            None => break,
                            Some(prev) => {
                                rev.push(prev);
                                at = right_parent[prev];
                            }
                        }
                    }
                    rev.reverse();
                    return Err(CoverError::NotMaximum(KPath::new(rev)));
                }
                Some(next) => {
                    if !reachable_left[next] {
                        reachable_left[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(AlternatingReachability {
        reachable_left,
        reachable_right,
    })
}

/// A set of vertices touching every edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexCover {
    /// Ascending left indices.
    pub left: Vec<usize>,
    /// Ascending right indices.
    pub right: Vec<usize>,
}

impl VertexCover {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> Self {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        VertexCover { left, right }
    }

    /// The whole left side.
    pub fn all_left(graph: &BipartiteGraph) -> Self {
        VertexCover {
            left: (0..graph.left_count()).collect(),
            right: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn contains(&self, side: Side, index: usize) -> bool {
        match side {
            Side::Left => self.left.binary_search(&index).is_ok(),
            Side::Right => self.right.binary_search(&index).is_ok(),
        }
    }
}

/// Picks one endpoint of every matched pair: the right one when it is
/// reachable by a K-path, the left one otherwise.
pub fn extract_cover(graph: &BipartiteGraph, maximum: &Matching) -> Result<VertexCover, CoverError> {
    let reach = alternating_reachability(graph, maximum)?;
    Ok(cover_from_reachability(maximum, &reach))
}

fn cover_from_reachability(maximum: &Matching, reach: &AlternatingReachability) -> VertexCover {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for e in maximum.pairs() {
        if reach.is_right_reachable(e.right) {
            right.push(e.right);
        } else {
            left.push(e.left);
        }
    }
    right.sort_unstable();
    VertexCover { left, right }
}

/// Returns the first edge (in ascending order) with neither endpoint in the
/// cover.
pub fn verify_cover(graph: &BipartiteGraph, cover: &VertexCover) -> Result<(), Edge> {
    let mut in_left = vec![false; graph.left_count()];
    let mut in_right = vec![false; graph.right_count()];
    for &p in &cover.left {
        if p < in_left.len() {
            in_left[p] = true;
        }
    }
    for &q in &cover.right {
        if q < in_right.len() {
            in_right[q] = true;
        }
    }
    match graph.edges().find(|e| !in_left[e.left] && !in_right[e.right]) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// A maximum matching together with a vertex cover of the same size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub matching: Matching,
    pub cover: VertexCover,
}

/// Computes a matching and a cover of equal size. Each certifies the other:
/// no matching can exceed a cover and no cover can undercut a matching.
pub fn konig_certificate(graph: &BipartiteGraph, strategy: Strategy) -> Certificate {
    let matching = maximum_matching(graph, strategy);
    let cover = extract_cover(graph, &matching).expect("maximum_matching returns a maximum matching");
    debug_assert_eq!(cover.size(), matching.size());
    Certificate { matching, cover }
}

/// How an edge (P, Q) sits relative to a matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeCase {
    /// Both endpoints exposed. Impossible for a maximum matching.
    BothExposed,
    /// P exposed, Q matched.
    ExposedLeft,
    /// P matched, Q exposed.
    ExposedRight,
    /// Both matched; `same_pair` when (P, Q) is itself a matched edge.
    BothMatched { same_pair: bool },
}

impl EdgeCase {
    /// 1 through 4.
    pub fn number(self) -> u8 {
        match self {
            EdgeCase::BothExposed => 1,
            EdgeCase::ExposedLeft => 2,
            EdgeCase::ExposedRight => 3,
            EdgeCase::BothMatched { .. } => 4,
        }
    }
}

pub fn classify_edge(matching: &Matching, edge: Edge) -> EdgeCase {
    match (matching.left_mate(edge.left), matching.right_mate(edge.right)) {
        (None, None) => EdgeCase::BothExposed,
        (None, Some(_)) => EdgeCase::ExposedLeft,
        (Some(_), None) => EdgeCase::ExposedRight,
        (Some(q), Some(_)) => EdgeCase::BothMatched {
            same_pair: q == edge.right,
        },
    }
}

/// An edge whose case-specific coverage reason does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFailure {
    pub edge: Edge,
    pub case: EdgeCase,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CaseReport {
    /// Edge counts for cases 1 to 4.
    pub counts: [usize; 4],
    pub failures: Vec<CaseFailure>,
}

impl CaseReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.counts[0] == 0
    }
}

/// Sorts every edge into one of the four cases and checks the reason it is
/// covered:
///
/// 1. both endpoints exposed: never allowed;
/// 2. P exposed: the single edge is a K-path, so Q is reachable and chosen;
/// 3. Q exposed: Q_α (P's mate) must be unreachable, so P is chosen;
/// 4. both matched: either the edge is the pair itself and exactly one end is
///    chosen, or P is chosen, or Q_α is reachable which extends to Q, and Q
///    is chosen.
pub fn classify_cases(
    graph: &BipartiteGraph,
    matching: &Matching,
    reach: &AlternatingReachability,
    cover: &VertexCover,
) -> CaseReport {
    let mut report = CaseReport::default();
    for edge in graph.edges() {
        let case = classify_edge(matching, edge);
        report.counts[usize::from(case.number() - 1)] += 1;
        let p_in = cover.contains(Side::Left, edge.left);
        let q_in = cover.contains(Side::Right, edge.right);
        let failure = match case {
            EdgeCase::BothExposed => Some("both endpoints exposed"),
            EdgeCase::ExposedLeft => {
                (!(reach.is_right_reachable(edge.right) && q_in)).then_some("Q is not reachable and chosen")
            }
            EdgeCase::ExposedRight => {
                let mate = matching.left_mate(edge.left).expect("P is matched");
                (reach.is_right_reachable(mate) || !p_in).then_some("P's mate is reachable or P not chosen")
            }
            EdgeCase::BothMatched { same_pair: true } => {
                (p_in == q_in).then_some("pair must contribute exactly one endpoint")
            }
            EdgeCase::BothMatched { same_pair: false } => {
                let mate = matching.left_mate(edge.left).expect("P is matched");
                let via_p = !reach.is_right_reachable(mate) && p_in;
                let via_q = reach.is_right_reachable(mate) && reach.is_right_reachable(edge.right) && q_in;
                (!(via_p || via_q)).then_some("neither P chosen nor Q reachable through P's mate")
            }
        };
        if let Some(reason) = failure {
            report.failures.push(CaseFailure { edge, case, reason });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::verify_matching;
    use crate::oracle;

    fn graph(l: usize, r: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(l, r, edges.iter().copied()).unwrap()
    }

    #[test]
    fn single_matched_edge_reaches_nothing() {
        let g = graph(1, 1, &[(0, 0)]);
        let m = Matching::from_pairs(1, 1, [(0, 0)]).unwrap();
        let r = alternating_reachability(&g, &m).unwrap();
        assert_eq!(r.reachable_left().count(), 0);
        assert_eq!(r.reachable_right().count(), 0);
    }

    #[test]
    fn two_lefts_one_right() {
        let g = graph(2, 1, &[(0, 0), (1, 0)]);
        let m = Matching::from_pairs(2, 1, [(0, 0)]).unwrap();
        assert_eq!(oracle::k_paths(&g, &m), vec![vec![1, 0], vec![1, 0, 0]]);
        let r = alternating_reachability(&g, &m).unwrap();
        assert_eq!(r.reachable_left().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(r.reachable_right().collect::<Vec<_>>(), vec![0]);

        let c = extract_cover(&g, &m).unwrap();
        assert_eq!(c, VertexCover::new(vec![], vec![0]));
        assert_eq!(oracle::brute_force_min_cover(&g).unwrap(), 1);
    }

    #[test]
    fn all_left_matched_reaches_nothing() {
        let g = graph(2, 3, &[(0, 0), (0, 1), (1, 1), (1, 2)]);
        let m = Matching::from_pairs(2, 3, [(0, 0), (1, 1)]).unwrap();
        let r = alternating_reachability(&g, &m).unwrap();
        assert_eq!(r.reachable_left().count() + r.reachable_right().count(), 0);
    }

    #[test]
    fn non_maximum_matching_is_rejected_with_path() {
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let m = Matching::from_pairs(2, 2, [(1, 0)]).unwrap();
        let err = alternating_reachability(&g, &m).unwrap_err();
        let CoverError::NotMaximum(path) = err;
        assert_eq!(path.vertices(), &[0, 0, 1, 1]);
        assert!(path.is_augmenting(&m));
        path.check(&g, &m).unwrap();
    }

    #[test]
    fn star_is_covered_by_its_center() {
        let g = graph(1, 3, &[(0, 0), (0, 1), (0, 2)]);
        let cert = konig_certificate(&g, Strategy::Simple);
        assert_eq!(cert.cover, VertexCover::new(vec![0], vec![]));
        assert_eq!(oracle::brute_force_min_cover(&g).unwrap(), 1);
    }

    #[test]
    fn complete_two_by_three_takes_the_left_side() {
        let g = BipartiteGraph::complete(2, 3);
        assert_eq!(oracle::brute_force_min_cover(&g).unwrap(), 2);
        for s in [Strategy::Simple, Strategy::Layered] {
            let cert = konig_certificate(&g, s);
            assert_eq!(cert.cover, VertexCover::new(vec![0, 1], vec![]));
        }
    }

    #[test]
    fn six_cycle_certificate() {
        // C6 as L{0,1,2} R{0,1,2}: L_i - R_i, L_i - R_{i+1 mod 3}.
        let g = graph(3, 3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]);
        assert_eq!(oracle::brute_force_min_cover(&g).unwrap(), 3);
        let cert = konig_certificate(&g, Strategy::Layered);
        assert_eq!((cert.matching.size(), cert.cover.size()), (3, 3));
    }

    #[test]
    fn empty_graph_certificate() {
        let cert = konig_certificate(&BipartiteGraph::edgeless(0, 0), Strategy::Simple);
        assert_eq!((cert.matching.size(), cert.cover.size()), (0, 0));
        // M = 0 with vertices present: empty cover.
        let cert = konig_certificate(&BipartiteGraph::edgeless(3, 2), Strategy::Layered);
        assert_eq!(cert.cover, VertexCover::default());
    }

    #[test]
    fn complete_square_certificates() {
        for n in 0..7 {
            let g = BipartiteGraph::complete(n, n);
            let cert = konig_certificate(&g, Strategy::Layered);
            assert_eq!((cert.matching.size(), cert.cover.size()), (n, n));
            verify_matching(&g, &cert.matching).unwrap();
            verify_cover(&g, &cert.cover).unwrap();
        }
    }

    #[test]
    fn verify_cover_reports_first_uncovered_edge() {
        let g = graph(1, 1, &[(0, 0)]);
        assert_eq!(verify_cover(&g, &VertexCover::default()), Err(Edge::new(0, 0)));
        let g = graph(3, 3, &[(0, 2), (1, 0), (2, 1)]);
        assert_eq!(
            verify_cover(&g, &VertexCover::new(vec![0], vec![])),
            Err(Edge::new(1, 0))
        );
        assert_eq!(verify_cover(&g, &VertexCover::all_left(&g)), Ok(()));
    }

    #[test]
    fn four_cases_on_a_mixed_graph() {
        // Maximum matching {L0-R0, L2-R1} leaves L1 and R2 exposed.
        let g = graph(3, 3, &[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]);
        let cert = konig_certificate(&g, Strategy::Simple);
        assert_eq!(
            cert.matching.pairs().collect::<Vec<_>>(),
            vec![Edge::new(0, 0), Edge::new(2, 1)]
        );
        let reach = alternating_reachability(&g, &cert.matching).unwrap();
        let report = classify_cases(&g, &cert.matching, &reach, &cert.cover);
        assert!(report.is_clean(), "{report:?}");
        assert_eq!(report.counts, [0, 1, 1, 3]);

        // A non-maximum matching exhibits case 1.
        let m = Matching::from_pairs(3, 3, [(1, 0)]).unwrap();
        let bogus_reach = AlternatingReachability {
            reachable_left: vec![true, false, true],
            reachable_right: vec![true, false, false],
        };
        let report = classify_cases(&g, &m, &bogus_reach, &VertexCover::default());
        assert!(report.counts[0] > 0);
        assert!(!report.is_clean());
    }
}
