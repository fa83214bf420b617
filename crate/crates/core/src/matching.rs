//! Matchings, alternating K-paths and maximum matching.
//!
//! A K-path starts at an exposed left vertex and alternates between edges
//! outside the matching (1st, 3rd, ...) and edges inside it (2nd, 4th, ...).
//! When it also ends at an exposed right vertex it is augmenting: flipping
//! every edge along it grows the matching by exactly one.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge, Side};

const EXPOSED: usize = usize::MAX;
const UNREACHED: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, stored as mate arrays on both
/// sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pair_of_left: Vec<usize>,
    pair_of_right: Vec<usize>,
    size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingViolation {
    #[error("matching is sized {matching_left}x{matching_right} but graph is {graph_left}x{graph_right}")]
    DimensionMismatch {
        matching_left: usize,
        matching_right: usize,
        graph_left: usize,
        graph_right: usize,
    },
    #[error("pair {0} is out of bounds")]
    OutOfBounds(Edge),
    #[error("pair {0} is not an edge")]
    NotAnEdge(Edge),
    #[error("pairs {first} and {second} share {side} vertex {index}")]
    SharedVertex {
        side: Side,
        index: usize,
        first: Edge,
        second: Edge,
    },
    #[error("mate arrays disagree at left {left} / right {right}")]
    Inconsistent { left: usize, right: usize },
    #[error("recorded size {recorded} but {actual} pairs are matched")]
    SizeMismatch { recorded: usize, actual: usize },
}

impl Matching {
    /// The empty matching: every vertex exposed.
    pub fn empty(left_count: usize, right_count: usize) -> Self {
        Matching {
            pair_of_left: vec![EXPOSED; left_count],
            pair_of_right: vec![EXPOSED; right_count],
            size: 0,
        }
    }

    /// Builds a matching from explicit pairs. Pairs must be in bounds and
    /// vertex-disjoint; whether they are graph edges is not checked here.
    pub fn from_pairs<I, E>(left_count: usize, right_count: usize, pairs: I) -> Result<Self, MatchingViolation>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut m = Matching::empty(left_count, right_count);
        for e in pairs {
            let e = e.into();
            if e.left >= left_count || e.right >= right_count {
                return Err(MatchingViolation::OutOfBounds(e));
            }
            if let Some(q) = m.left_mate(e.left) {
                return Err(MatchingViolation::SharedVertex {
                    side: Side::Left,
                    index: e.left,
                    first: Edge::new(e.left, q),
                    second: e,
                });
            }
            if let Some(p) = m.right_mate(e.right) {
                return Err(MatchingViolation::SharedVertex {
                    side: Side::Right,
                    index: e.right,
                    first: Edge::new(p, e.right),
                    second: e,
                });
            }
            m.pair_of_left[e.left] = e.right;
            m.pair_of_right[e.right] = e.left;
            m.size += 1;
        }
        Ok(m)
    }

    pub fn left_count(&self) -> usize {
        self.pair_of_left.len()
    }

    pub fn right_count(&self) -> usize {
        self.pair_of_right.len()
    }

    /// Number of matched pairs.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn left_mate(&self, p: usize) -> Option<usize> {
        match self.pair_of_left[p] {
            EXPOSED => None,
            q => Some(q),
        }
    }

    #[inline]
    pub fn right_mate(&self, q: usize) -> Option<usize> {
        match self.pair_of_right[q] {
            EXPOSED => None,
            p => Some(p),
        }
    }

    #[inline]
    pub fn is_left_exposed(&self, p: usize) -> bool {
        self.pair_of_left[p] == EXPOSED
    }

    #[inline]
    pub fn is_right_exposed(&self, q: usize) -> bool {
        self.pair_of_right[q] == EXPOSED
    }

    pub fn contains(&self, e: Edge) -> bool {
        e.left < self.pair_of_left.len() && self.pair_of_left[e.left] == e.right
    }

    /// Matched pairs in ascending left order.
    pub fn pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pair_of_left
            .iter()
            .enumerate()
            .filter(|&(_, &q)| q != EXPOSED)
            .map(|(p, &q)| Edge::new(p, q))
    }

    /// Flips every edge of an augmenting K-path, growing the matching by one.
    ///
    /// The path is checked against the matching before anything changes.
    /// Graph membership of the unmatched edges is the caller's concern; see
    /// [`KPath::check`].
    pub fn augment(&mut self, path: &KPath) -> Result<(), AugmentError> {
        self.check_augmenting(path)?;
        for pair in path.vertices.chunks_exact(2) {
            let (p, q) = (pair[0], pair[1]);
            self.pair_of_left[p] = q;
            self.pair_of_right[q] = p;
        }
        self.size += 1;
        Ok(())
    }

    fn check_augmenting(&self, path: &KPath) -> Result<(), AugmentError> {
        let v = &path.vertices;
        if v.is_empty() {
            return Err(AugmentError::Empty);
        }
        for (i, &x) in v.iter().enumerate() {
            let bound = if i % 2 == 0 {
                self.left_count()
            } else {
                self.right_count()
            };
            if x >= bound {
                return Err(AugmentError::OutOfBounds { position: i, index: x });
            }
        }
        if v.len() % 2 == 1 {
            return Err(AugmentError::EndsOnLeft(*v.last().unwrap()));
        }
        if !self.is_left_exposed(v[0]) {
            return Err(AugmentError::StartNotExposed(v[0]));
        }
        let end = v[v.len() - 1];
        if !self.is_right_exposed(end) {
            return Err(AugmentError::EndNotExposed(end));
        }
        for k in 0..path.edge_count() {
            let edge = path.edge_at(k);
            let matched = self.contains(edge);
            let should_be_matched = k % 2 == 1;
            if matched != should_be_matched {
                return Err(AugmentError::WrongRole {
                    position: k + 1,
                    edge,
                    matched,
                });
            }
        }
        path.first_repeat().map_or(Ok(()), |(side, index)| {
            Err(AugmentError::RepeatedVertex { side, index })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AugmentError {
    #[error("empty path")]
    Empty,
    #[error("path vertex #{position} ({index}) is out of bounds")]
    OutOfBounds { position: usize, index: usize },
    #[error("path ends at left vertex {0}; an augmenting path ends on the right")]
    EndsOnLeft(usize),
    #[error("path starts at matched left vertex {0}")]
    StartNotExposed(usize),
    #[error("path ends at matched right vertex {0}")]
    EndNotExposed(usize),
    #[error("edge #{position} {edge} has the wrong role (matched: {matched})")]
    WrongRole { position: usize, edge: Edge, matched: bool },
    #[error("path repeats {side} vertex {index}")]
    RepeatedVertex { side: Side, index: usize },
}

/// Consumes `matching` and returns it augmented along `path`.
pub fn augment(mut matching: Matching, path: &KPath) -> Result<Matching, AugmentError> {
    matching.augment(path)?;
    Ok(matching)
}

/// An alternating path starting on the left side.
///
/// `vertices[0]` is a left index, `vertices[1]` a right index, and so on.
/// Edge `k` (0-based) joins `vertices[k]` and `vertices[k + 1]`; in K-path
/// terms it is the `k + 1`-th edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KPath {
    vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KPathViolation {
    #[error("empty path")]
    Empty,
    #[error("path vertex #{position} is out of bounds")]
    OutOfBounds { position: usize },
    #[error("first vertex L{0} is matched")]
    StartNotExposed(usize),
    #[error("edge #{position} {edge} is not a graph edge")]
    NotAnEdge { position: usize, edge: Edge },
    #[error("edge #{position} {edge} should {expected} the matching")]
    WrongRole {
        position: usize,
        edge: Edge,
        expected: &'static str,
    },
    #[error("path repeats {side} vertex {index}")]
    RepeatedVertex { side: Side, index: usize },
}

impl KPath {
    /// Wraps an alternating left/right vertex sequence starting on the left.
    pub fn new(vertices: Vec<usize>) -> Self {
        KPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Side of the final vertex.
    pub fn end_side(&self) -> Side {
        if self.vertices.len() % 2 == 1 {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Edge `k` as a (left, right) pair.
    pub fn edge_at(&self, k: usize) -> Edge {
        let (a, b) = (self.vertices[k], self.vertices[k + 1]);
        if k.is_multiple_of(2) {
            Edge::new(a, b)
        } else {
            Edge::new(b, a)
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_count()).map(move |k| self.edge_at(k))
    }

    /// For each edge, whether it currently belongs to `matching`.
    pub fn edge_roles(&self, matching: &Matching) -> Vec<bool> {
        self.edges().map(|e| matching.contains(e)).collect()
    }

    /// True when the path ends at an exposed right vertex.
    pub fn is_augmenting(&self, matching: &Matching) -> bool {
        self.end_side() == Side::Right
            && self
                .vertices
                .last()
                .is_some_and(|&q| q < matching.right_count() && matching.is_right_exposed(q))
    }

    fn first_repeat(&self) -> Option<(Side, usize)> {
        let mut seen = HashSet::with_capacity(self.vertices.len());
        self.vertices.iter().enumerate().find_map(|(i, &x)| {
            let side = if i % 2 == 0 { Side::Left } else { Side::Right };
            (!seen.insert((side, x))).then_some((side, x))
        })
    }

    /// Checks the K-path invariants against a graph and matching: open with
    /// no repeated vertex, starting at an exposed left vertex, edges present
    /// in the graph, odd-numbered edges outside the matching and
    /// even-numbered edges inside it.
    pub fn check(&self, graph: &BipartiteGraph, matching: &Matching) -> Result<(), KPathViolation> {
        if self.vertices.is_empty() {
            return Err(KPathViolation::Empty);
        }
        for (i, &x) in self.vertices.iter().enumerate() {
            let bound = if i % 2 == 0 {
                graph.left_count()
            } else {
                graph.right_count()
            };
            if x >= bound {
                return Err(KPathViolation::OutOfBounds { position: i });
            }
        }
        if !matching.is_left_exposed(self.vertices[0]) {
            return Err(KPathViolation::StartNotExposed(self.vertices[0]));
        }
        if let Some((side, index)) = self.first_repeat() {
            return Err(KPathViolation::RepeatedVertex { side, index });
        }
        for k in 0..self.edge_count() {
            let edge = self.edge_at(k);
            if !graph.has_edge(edge.left, edge.right) {
                return Err(KPathViolation::NotAnEdge { position: k + 1, edge });
            }
            let in_matching = matching.contains(edge);
            if k % 2 == 1 && !in_matching {
                return Err(KPathViolation::WrongRole {
                    position: k + 1,
                    edge,
                    expected: "belong to",
                });
            }
            if k % 2 == 0 && in_matching {
                return Err(KPathViolation::WrongRole {
                    position: k + 1,
                    edge,
                    expected: "lie outside",
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for KPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let tag = if i % 2 == 0 { 'L' } else { 'R' };
            write!(f, "{tag}{v}")?;
        }
        Ok(())
    }
}

/// Reusable scratch space for breadth-first K-path search.
struct KPathSearch {
    /// Left vertex from which each right vertex was first reached.
    right_parent: Vec<usize>,
    right_stamp: Vec<u32>,
    stamp: u32,
    queue: VecDeque<usize>,
}

impl KPathSearch {
    fn new(right_count: usize) -> Self {
        KPathSearch {
            right_parent: vec![UNREACHED; right_count],
            right_stamp: vec![0; right_count],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    /// Breadth-first search from every exposed left vertex at once, in
    /// ascending order, scanning neighbors in ascending order. Returns the
    /// first augmenting path discovered.
    fn run(&mut self, graph: &BipartiteGraph, matching: &Matching) -> Option<KPath> {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.right_stamp.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        self.queue.clear();
        self.queue
            .extend((0..graph.left_count()).filter(|&p| matching.is_left_exposed(p)));

        while let Some(p) = self.queue.pop_front() {
            for &q in graph.left_neighbors(p) {
                if self.right_stamp[q] == self.stamp {
                    continue;
                }
                self.right_stamp[q] = self.stamp;
                self.right_parent[q] = p;
                match matching.right_mate(q) {
                    None => return Some(self.trace(q, matching)),
                    // A matched left vertex is reachable only through its
                    // mate, so it is enqueued at most once.
                    Some(next) => self.queue.push_back(next),
                }
            }
        }
        None
    }

    fn trace(&self, end: usize, matching: &Matching) -> KPath {
        let mut rev = vec![end];
        let mut q = end;
        loop {
            let p = self.right_parent[q];
            rev.push(p);
            match matching.left_mate(p) {
                None => break,
                Some(prev) => {
                    rev.push(prev);
                    q = prev;
                }
            }
        }
        rev.reverse();
        KPath::new(rev)
    }
}

/// Finds an augmenting K-path, or `None` if the matching is maximum.
pub fn find_augmenting_k_path(graph: &BipartiteGraph, matching: &Matching) -> Option<KPath> {
    debug_assert_eq!(matching.left_count(), graph.left_count());
    debug_assert_eq!(matching.right_count(), graph.right_count());
    KPathSearch::new(graph.right_count()).run(graph, matching)
}

/// How [`maximum_matching`] grows its matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// One augmenting K-path per round, from the empty matching.
    Simple,
    /// Greedy seed, then phases that augment along a maximal set of
    /// vertex-disjoint shortest K-paths.
    #[default]
    Layered,
}

/// Computes a maximum matching. The result is deterministic for a given
/// graph and strategy; the two strategies agree on size but may pick
/// different pairs.
pub fn maximum_matching(graph: &BipartiteGraph, strategy: Strategy) -> Matching {
    match strategy {
        Strategy::Simple => simple(graph),
        Strategy::Layered => layered(graph),
    }
}

fn simple(graph: &BipartiteGraph) -> Matching {
    let mut matching = Matching::empty(graph.left_count(), graph.right_count());
    let mut search = KPathSearch::new(graph.right_count());
    while let Some(path) = search.run(graph, &matching) {
        matching.augment(&path).expect("search returns augmenting paths");
    }
    matching
}

fn greedy_seed(graph: &BipartiteGraph) -> Matching {
    let mut m = Matching::empty(graph.left_count(), graph.right_count());
    for p in 0..graph.left_count() {
        if let Some(&q) = graph.left_neighbors(p).iter().find(|&&q| m.is_right_exposed(q)) {
            m.pair_of_left[p] = q;
            m.pair_of_right[q] = p;
            m.size += 1;
        }
    }
    m
}

fn layered(graph: &BipartiteGraph) -> Matching {
    const INF: usize = usize::MAX;
    let n_left = graph.left_count();
    let mut m = greedy_seed(graph);
    let cap = n_left.min(graph.right_count());
    let mut dist = vec![INF; n_left];
    let mut queue: Vec<usize> = Vec::with_capacity(n_left);
    // (left vertex, its layer, next adjacency slot to try)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    while m.size < cap {
        // Layer the left vertices by alternating distance from the exposed
        // ones, stopping after the first layer that touches an exposed right.
        queue.clear();
        for (p, d) in dist.iter_mut().enumerate() {
            if m.is_left_exposed(p) {
                *d = 0;
                queue.push(p);
            } else {
                *d = INF;
            }
        }
        let mut limit = INF;
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            let d = dist[p];
            if d >= limit {
                break;
            }
            for &q in graph.left_neighbors(p) {
                match m.right_mate(q) {
                    None => limit = limit.min(d + 1),
                    Some(next) if dist[next] == INF => {
                        dist[next] = d + 1;
                        queue.push(next);
                    }
                    Some(_) => {}
                }
            }
        }
        if limit == INF {
            break;
        }

        // Vertex-disjoint shortest augmenting paths by iterative DFS along
        // the layers. A visited vertex gets its layer cleared so no later
        // search in this phase reuses it.
        let mut grew = false;
        for root in 0..n_left {
            if !m.is_left_exposed(root) || dist[root] != 0 {
                continue;
            }
            stack.clear();
            stack.push((root, 0, 0));
            dist[root] = INF;
            while let Some(top) = stack.last_mut() {
                let (p, d, slot) = *top;
                let adj = graph.left_neighbors(p);
                if slot == adj.len() {
                    stack.pop();
                    continue;
                }
                top.2 += 1;
                let q = adj[slot];
                match m.right_mate(q) {
                    None => {
                        if d + 1 != limit {
                            continue;
                        }
                        for &(u, _, s) in stack.iter() {
                            let v = graph.left_neighbors(u)[s - 1];
                            m.pair_of_left[u] = v;
                            m.pair_of_right[v] = u;
                        }
                        m.size += 1;
                        grew = true;
                        break;
                    }
                    Some(next) if dist[next] == d + 1 => {
                        dist[next] = INF;
                        stack.push((next, d + 1, 0));
                    }
                    Some(_) => {}
                }
            }
        }
        if !grew {
            break;
        }
    }
    m
}

/// Checks that every matched pair is a graph edge and no vertex is used twice.
pub fn verify_matching(graph: &BipartiteGraph, matching: &Matching) -> Result<(), MatchingViolation> {
    if matching.left_count() != graph.left_count() || matching.right_count() != graph.right_count() {
        return Err(MatchingViolation::DimensionMismatch {
            matching_left: matching.left_count(),
            matching_right: matching.right_count(),
            graph_left: graph.left_count(),
            graph_right: graph.right_count(),
        });
    }
    let mut actual = 0;
    for (p, &q) in matching.pair_of_left.iter().enumerate() {
        if q == EXPOSED {
            continue;
        }
        if q >= graph.right_count() {
            return Err(MatchingViolation::OutOfBounds(Edge::new(p, q)));
        }
        if matching.pair_of_right[q] != p {
            return Err(MatchingViolation::Inconsistent { left: p, right: q });
        }
        if !graph.has_edge(p, q) {
            return Err(MatchingViolation::NotAnEdge(Edge::new(p, q)));
        }
        actual += 1;
    }
    for (q, &p) in matching.pair_of_right.iter().enumerate() {
        if p != EXPOSED && (p >= graph.left_count() || matching.pair_of_left[p] != q) {
            return Err(MatchingViolation::Inconsistent { left: p, right: q });
        }
    }
    if actual != matching.size {
        return Err(MatchingViolation::SizeMismatch {
            recorded: matching.size,
            actual,
        });
    }
    Ok(())
}

/// Checks a claimed list of pairs: each must be a graph edge and no vertex
/// may appear twice. Reports the first violation in list order.
pub fn verify_pairs(graph: &BipartiteGraph, pairs: &[Edge]) -> Result<(), MatchingViolation> {
    let mut left_owner: Vec<Option<Edge>> = vec![None; graph.left_count()];
    let mut right_owner: Vec<Option<Edge>> = vec![None; graph.right_count()];
    for &e in pairs {
        if e.left >= graph.left_count() || e.right >= graph.right_count() {
            return Err(MatchingViolation::OutOfBounds(e));
        }
        if !graph.has_edge(e.left, e.right) {
            return Err(MatchingViolation::NotAnEdge(e));
        }
        if let Some(first) = left_owner[e.left] {
            return Err(MatchingViolation::SharedVertex {
                side: Side::Left,
                index: e.left,
                first,
                second: e,
            });
        }
        if let Some(first) = right_owner[e.right] {
            return Err(MatchingViolation::SharedVertex {
                side: Side::Right,
                index: e.right,
                first,
                second: e,
            });
        }
        left_owner[e.left] = Some(e);
        right_owner[e.right] = Some(e);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn graph(l: usize, r: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(l, r, edges.iter().copied()).unwrap()
    }

    #[test]
    fn one_edge_path() {
        let g = graph(1, 1, &[(0, 0)]);
        let m = Matching::empty(1, 1);
        let path = find_augmenting_k_path(&g, &m).unwrap();
        assert_eq!(path.vertices(), &[0, 0]);
        assert_eq!(path.to_string(), "L0 R0");
        let m = augment(m, &path).unwrap();
        assert_eq!(m.size(), 1);
        assert!(find_augmenting_k_path(&g, &m).is_none());
    }

    #[test]
    fn three_edge_path_is_the_unique_augmenting_path() {
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let m = Matching::from_pairs(2, 2, [(1, 0)]).unwrap();
        let all = oracle::augmenting_k_paths(&g, &m);
        assert_eq!(all, vec![vec![0, 0, 1, 1]]);
        let path = find_augmenting_k_path(&g, &m).unwrap();
        assert_eq!(path.vertices(), &[0, 0, 1, 1]);
        assert_eq!(path.edge_roles(&m), vec![false, true, false]);
        path.check(&g, &m).unwrap();

        let m = augment(m, &path).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![Edge::new(0, 0), Edge::new(1, 1)]);
        verify_matching(&g, &m).unwrap();
    }

    #[test]
    fn augment_rejects_non_augmenting_paths() {
        let m = Matching::from_pairs(2, 2, [(1, 0)]).unwrap();
        // ends at matched R0
        assert_eq!(
            m.clone().augment(&KPath::new(vec![0, 0])),
            Err(AugmentError::EndNotExposed(0))
        );
        // ends on the left
        assert_eq!(
            m.clone().augment(&KPath::new(vec![0, 0, 1])),
            Err(AugmentError::EndsOnLeft(1))
        );
        // starts at a matched vertex
        assert_eq!(
            m.clone().augment(&KPath::new(vec![1, 1])),
            Err(AugmentError::StartNotExposed(1))
        );
        assert_eq!(m.clone().augment(&KPath::new(vec![])), Err(AugmentError::Empty));
        // second edge (R1, L1) is not matched
        let m2 = Matching::from_pairs(3, 3, [(1, 0)]).unwrap();
        assert!(matches!(
            m2.clone().augment(&KPath::new(vec![0, 1, 1, 2])),
            Err(AugmentError::WrongRole { position: 2, .. })
        ));
        assert!(matches!(
            m2.clone().augment(&KPath::new(vec![0, 7])),
            Err(AugmentError::OutOfBounds { position: 1, index: 7 })
        ));
    }

    #[test]
    fn matched_graph_has_no_path() {
        let g = graph(1, 1, &[(0, 0)]);
        let m = Matching::from_pairs(1, 1, [(0, 0)]).unwrap();
        assert!(find_augmenting_k_path(&g, &m).is_none());
    }

    #[test]
    fn empty_and_complete() {
        for s in [Strategy::Simple, Strategy::Layered] {
            assert_eq!(maximum_matching(&graph(0, 0, &[]), s).size(), 0);
            assert_eq!(maximum_matching(&BipartiteGraph::edgeless(3, 4), s).size(), 0);
            for n in 1..6 {
                let m = maximum_matching(&BipartiteGraph::complete(n, n), s);
                assert_eq!(m.size(), n);
            }
        }
    }

    #[test]
    fn three_by_two_path() {
        let g = graph(3, 2, &[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert_eq!(oracle::brute_force_max_matching(&g).unwrap(), 2);
        for s in [Strategy::Simple, Strategy::Layered] {
            let m = maximum_matching(&g, s);
            assert_eq!(m.size(), 2);
            verify_matching(&g, &m).unwrap();
        }
    }

    #[test]
    fn simple_strategy_from_empty_is_reproducible() {
        // Rounds: [L0 R0], [L2 R1], then [L1 R0 L0 R1 L2 R2].
        let g = graph(3, 3, &[(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)]);
        let m = maximum_matching(&g, Strategy::Simple);
        assert_eq!(
            m.pairs().collect::<Vec<_>>(),
            vec![Edge::new(0, 1), Edge::new(1, 0), Edge::new(2, 2)]
        );
        assert_eq!(m, maximum_matching(&g, Strategy::Simple));
    }

    #[test]
    fn verification_reports_violations() {
        let g = graph(2, 2, &[(0, 1), (1, 1)]);
        let bogus = Matching::from_pairs(2, 2, [(0, 0)]).unwrap();
        assert_eq!(
            verify_matching(&g, &bogus),
            Err(MatchingViolation::NotAnEdge(Edge::new(0, 0)))
        );
        assert!(matches!(
            verify_pairs(&g, &[Edge::new(0, 1), Edge::new(1, 1)]),
            Err(MatchingViolation::SharedVertex {
                side: Side::Right,
                index: 1,
                ..
            })
        ));
        assert!(matches!(
            Matching::from_pairs(2, 2, [(0, 0), (1, 0)]),
            Err(MatchingViolation::SharedVertex {
                side: Side::Right,
                index: 0,
                ..
            })
        ));
        assert!(matches!(
            verify_matching(&g, &Matching::empty(3, 2)),
            Err(MatchingViolation::DimensionMismatch { .. })
        ));
        verify_pairs(&g, &[Edge::new(1, 1)]).unwrap();
    }

    #[test]
    fn kpath_check_catches_bad_paths() {
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let m = Matching::from_pairs(2, 2, [(1, 0)]).unwrap();
        assert!(matches!(
            KPath::new(vec![0, 1]).check(&g, &m),
            Err(KPathViolation::NotAnEdge { position: 1, .. })
        ));
        assert_eq!(
            KPath::new(vec![1, 1]).check(&g, &m),
            Err(KPathViolation::StartNotExposed(1))
        );
        assert!(matches!(
            KPath::new(vec![0, 0, 1, 0]).check(&g, &m),
            Err(KPathViolation::RepeatedVertex {
                side: Side::Right,
                index: 0
            })
        ));
        // a K-path may end on the left
        KPath::new(vec![0, 0, 1]).check(&g, &m).unwrap();
        assert!(!KPath::new(vec![0, 0, 1]).is_augmenting(&m));
    }

    #[test]
    fn layered_handles_long_chains() {
        // Greedy matches L_i to R_i, leaving L_n (adjacent only to R_0) and
        // R_n exposed. The only augmenting path visits every vertex.
        let n = 20_000;
        let mut edges = vec![(n, 0)];
        for i in 0..n {
            edges.push((i, i));
            edges.push((i, i + 1));
        }
        let g = graph(n + 1, n + 1, &edges);
        let m = maximum_matching(&g, Strategy::Layered);
        assert_eq!(m.size(), n + 1);
        verify_matching(&g, &m).unwrap();
    }
}
