//! Bipartite graph storage and construction.
//!
//! Vertices are dense indices on each side. Adjacency is kept in compressed
//! sparse row form for both directions so that the matching engine can walk
//! left-to-right and right-to-left without hashing.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// One side of the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// An edge joining left vertex `left` to right vertex `right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub left: usize,
    pub right: usize,
}

impl Edge {
    pub fn new(left: usize, right: usize) -> Self {
        Edge { left, right }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((left, right): (usize, usize)) -> Self {
        Edge { left, right }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge #{position} {edge}: {side} index {index} out of bounds (side has {count} vertices)")]
    EdgeOutOfBounds {
        position: usize,
        edge: Edge,
        side: Side,
        index: usize,
        count: usize,
    },
    #[error("{side} vertex {index} out of bounds (side has {count} vertices)")]
    VertexOutOfBounds { side: Side, index: usize, count: usize },
}

/// Compressed adjacency for one direction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    #[inline]
    fn row(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }
}

/// A finite bipartite graph with left side `0..left_count` and right side
/// `0..right_count`.
///
/// Every edge joins the two sides by construction. Adjacency lists are
/// strictly increasing and the right-to-left lists are the exact transpose of
/// the left-to-right lists. The graph is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    adjacency: Csr,
    reverse_adjacency: Csr,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Parallel edges collapse to one.
    pub fn new<I, E>(left_count: usize, right_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for (position, edge) in edges.into_iter().enumerate() {
            let edge = edge.into();
            if edge.left >= left_count {
                return Err(GraphError::EdgeOutOfBounds {
                    position,
                    edge,
                    side: Side::Left,
                    index: edge.left,
                    count: left_count,
                });
            }
            if edge.right >= right_count {
                return Err(GraphError::EdgeOutOfBounds {
                    position,
                    edge,
                    side: Side::Right,
                    index: edge.right,
                    count: right_count,
                });
            }
            list.push(edge);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unique(left_count, right_count, &list))
    }

    /// Edges must be in bounds, sorted and free of duplicates.
    fn from_sorted_unique(left_count: usize, right_count: usize, edges: &[Edge]) -> Self {
        let mut offsets = vec![0usize; left_count + 1];
        for e in edges {
            offsets[e.left + 1] += 1;
        }
        for i in 0..left_count {
            offsets[i + 1] += offsets[i];
        }
        let targets = edges.iter().map(|e| e.right).collect();
        let adjacency = Csr { offsets, targets };

        // Counting-sort transpose. Edges are visited in ascending left order,
        // so every reverse row comes out ascending as well.
        let mut rev_offsets = vec![0usize; right_count + 1];
        for e in edges {
            rev_offsets[e.right + 1] += 1;
        }
        for i in 0..right_count {
            rev_offsets[i + 1] += rev_offsets[i];
        }
        let mut cursor = rev_offsets.clone();
        let mut rev_targets = vec![0usize; edges.len()];
        for e in edges {
            rev_targets[cursor[e.right]] = e.left;
            cursor[e.right] += 1;
        }
        let reverse_adjacency = Csr {
            offsets: rev_offsets,
            targets: rev_targets,
        };

        BipartiteGraph {
            left_count,
            right_count,
            adjacency,
            reverse_adjacency,
        }
    }

    /// A graph with the given side sizes and no edges.
    pub fn edgeless(left_count: usize, right_count: usize) -> Self {
        Self::from_sorted_unique(left_count, right_count, &[])
    }

    /// The complete bipartite graph on `left_count + right_count` vertices.
    pub fn complete(left_count: usize, right_count: usize) -> Self {
        let edges: Vec<Edge> = (0..left_count)
            .flat_map(|p| (0..right_count).map(move |q| Edge::new(p, q)))
            .collect();
        Self::from_sorted_unique(left_count, right_count, &edges)
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn vertex_count(&self) -> usize {
        self.left_count + self.right_count
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.targets.len()
    }

    pub fn count(&self, side: Side) -> usize {
        match side {
            Side::Left => self.left_count,
            Side::Right => self.right_count,
        }
    }

    /// Neighbors of a vertex, in ascending order.
    pub fn neighbors(&self, side: Side, index: usize) -> Result<&[usize], GraphError> {
        let count = self.count(side);
        if index >= count {
            return Err(GraphError::VertexOutOfBounds { side, index, count });
        }
        Ok(match side {
            Side::Left => self.adjacency.row(index),
            Side::Right => self.reverse_adjacency.row(index),
        })
    }

    /// Right neighbors of left vertex `p`. Panics if `p` is out of bounds.
    #[inline]
    pub fn left_neighbors(&self, p: usize) -> &[usize] {
        self.adjacency.row(p)
    }

    /// Left neighbors of right vertex `q`. Panics if `q` is out of bounds.
    #[inline]
    pub fn right_neighbors(&self, q: usize) -> &[usize] {
        self.reverse_adjacency.row(q)
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        left < self.left_count && right < self.right_count && self.adjacency.row(left).binary_search(&right).is_ok()
    }

    /// All edges in ascending (left, right) order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.left_count).flat_map(move |p| self.adjacency.row(p).iter().map(move |&q| Edge::new(p, q)))
    }

    /// The same graph with the sides swapped.
    pub fn transposed(&self) -> BipartiteGraph {
        BipartiteGraph {
            left_count: self.right_count,
            right_count: self.left_count,
            adjacency: self.reverse_adjacency.clone(),
            reverse_adjacency: self.adjacency.clone(),
        }
    }

    /// Full scan of the transpose invariant. Intended for tests.
    pub fn is_transpose_consistent(&self) -> bool {
        let strictly_increasing = |rows: &Csr, n: usize| (0..n).all(|i| rows.row(i).windows(2).all(|w| w[0] < w[1]));
        if !strictly_increasing(&self.adjacency, self.left_count)
            || !strictly_increasing(&self.reverse_adjacency, self.right_count)
        {
            return false;
        }
        if self.adjacency.targets.len() != self.reverse_adjacency.targets.len() {
            return false;
        }
        (0..self.left_count).all(|p| {
            self.adjacency
                .row(p)
                .iter()
                .all(|&q| q < self.right_count && self.reverse_adjacency.row(q).binary_search(&p).is_ok())
        })
    }
}

/// Result of splitting a general undirected graph into its two color classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub graph: BipartiteGraph,
    /// For each input vertex: its side and its index within that side.
    pub assignment: Vec<(Side, usize)>,
    /// Input vertex for each left index.
    pub left_vertices: Vec<usize>,
    /// Input vertex for each right index.
    pub right_vertices: Vec<usize>,
}

impl Partition {
    /// Input vertex behind a side-local index.
    pub fn original(&self, side: Side, index: usize) -> usize {
        match side {
            Side::Left => self.left_vertices[index],
            Side::Right => self.right_vertices[index],
        }
    }
}

/// A closed walk of odd length, given as its vertex sequence. The closing
/// edge runs from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

impl OddCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that the cycle has odd length and every consecutive pair,
    /// including the closing pair, is an edge of `edges`.
    pub fn is_witness_for(&self, edges: &[(usize, usize)]) -> bool {
        let n = self.0.len();
        if n.is_multiple_of(2) {
            return false;
        }
        let present = |a: usize, b: usize| edges.iter().any(|&(u, v)| (u == a && v == b) || (u == b && v == a));
        (0..n).all(|i| present(self.0[i], self.0[(i + 1) % n]))
    }
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("edge #{position} ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    VertexOutOfBounds {
        position: usize,
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not bipartite: odd cycle {0}")]
    OddCycle(OddCycle),
}

/// Two-colors an undirected graph by breadth-first search.
///
/// Components are visited from their smallest vertex, which goes to the left
/// side; isolated vertices therefore land on the left. Within a side,
/// vertices keep their relative input order. On failure the error carries a
/// simple odd cycle.
pub fn partition_general_graph(
    vertex_count: usize,
    undirected_edges: &[(usize, usize)],
) -> Result<Partition, PartitionError> {
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for (position, &(u, v)) in undirected_edges.iter().enumerate() {
        if u >= vertex_count || v >= vertex_count {
            return Err(PartitionError::VertexOutOfBounds {
                position,
                u,
                v,
                vertex_count,
            });
        }
        if u == v {
            return Err(PartitionError::SelfLoop(u));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }

    const UNSEEN: usize = usize::MAX;
    let mut color: Vec<Option<Side>> = vec![None; vertex_count];
    let mut parent = vec![UNSEEN; vertex_count];
    let mut depth = vec![0usize; vertex_count];
    let mut queue = VecDeque::new();

    for root in 0..vertex_count {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(Side::Left);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in &adjacency[u] {
                match color[v] {
                    None => {
                        color[v] = Some(cu.opposite());
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(PartitionError::OddCycle(odd_cycle_through(u, v, &parent, &depth)));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let mut assignment = Vec::with_capacity(vertex_count);
    let mut left_vertices = Vec::new();
    let mut right_vertices = Vec::new();
    for (v, c) in color.iter().enumerate() {
        match c.expect("every vertex colored") {
            Side::Left => {
                assignment.push((Side::Left, left_vertices.len()));
                left_vertices.push(v);
            }
            Side::Right => {
                assignment.push((Side::Right, right_vertices.len()));
                right_vertices.push(v);
            }
        }
    }
    let edges = undirected_edges.iter().map(|&(u, v)| {
        let (su, iu) = assignment[u];
        let (_, iv) = assignment[v];
        match su {
            Side::Left => Edge::new(iu, iv),
            Side::Right => Edge::new(iv, iu),
        }
    });
    let graph = BipartiteGraph::new(left_vertices.len(), right_vertices.len(), edges)
        .expect("partition produces in-bounds edges");

    Ok(Partition {
        graph,
        assignment,
        left_vertices,
        right_vertices,
    })
}

/// `u` and `v` are adjacent, have the same color, and both sit in the same
/// BFS tree. Walks both up to their lowest common ancestor.
fn odd_cycle_through(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let mut up_u = vec![u];
    let mut up_v = vec![v];
    let (mut a, mut b) = (u, v);
    while depth[a] > depth[b] {
        a = parent[a];
        up_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_v.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_u.push(a);
        up_v.push(b);
    }
    // up_u: u .. lca, up_v: v .. lca. Cycle: lca .. u, v .. (child of lca).
    up_v.pop();
    let mut cycle: Vec<usize> = up_u.into_iter().rev().collect();
    cycle.extend(up_v);
    OddCycle(cycle)
}
