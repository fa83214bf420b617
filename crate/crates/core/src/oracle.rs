//! Exponential brute-force references for small instances.
//!
//! Nothing here reuses the matching or cover machinery: each routine works
//! from a flat edge (or entry) list with its own bookkeeping, so a bug in the
//! main algorithms cannot hide behind a shared helper.

use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge};
use crate::matching::Matching;
use crate::matrix::SparsityPattern;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {size}, above the brute-force bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
}

/// Size bounds that keep enumeration tractable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_edges: usize,
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_edges: 24,
            max_vertices: 20,
        }
    }
}

fn check(what: &'static str, size: usize, bound: usize) -> Result<(), OracleError> {
    if size > bound {
        Err(OracleError::TooLarge { what, size, bound })
    } else {
        Ok(())
    }
}

/// Largest set of pairwise vertex-disjoint edges, by backtracking over edges.
pub fn brute_force_max_matching(graph: &BipartiteGraph) -> Result<usize, OracleError> {
    brute_force_max_matching_with(graph, Limits::default())
}

pub fn brute_force_max_matching_with(graph: &BipartiteGraph, limits: Limits) -> Result<usize, OracleError> {
    let edges: Vec<(usize, usize)> = graph.edges().map(|e| (e.left, e.right)).collect();
    check("edge count", edges.len(), limits.max_edges)?;
    Ok(max_disjoint(&edges, graph.left_count(), graph.right_count()))
}

/// Maximum number of pairwise disjoint pairs from `pairs`, where the first
/// and second coordinates live in separate index spaces.
fn max_disjoint(pairs: &[(usize, usize)], a_count: usize, b_count: usize) -> usize {
    fn go(
        pairs: &[(usize, usize)],
        i: usize,
        used_a: &mut [bool],
        used_b: &mut [bool],
        taken: usize,
        best: &mut usize,
    ) {
        if taken + (pairs.len() - i) <= *best {
            return;
        }
        if i == pairs.len() {
            *best = taken;
            return;
        }
        let (a, b) = pairs[i];
        if !used_a[a] && !used_b[b] {
            used_a[a] = true;
            used_b[b] = true;
            go(pairs, i + 1, used_a, used_b, taken + 1, best);
            used_a[a] = false;
            used_b[b] = false;
        }
        go(pairs, i + 1, used_a, used_b, taken, best);
    }
    let mut best = 0;
    go(
        pairs,
        0,
        &mut vec![false; a_count],
        &mut vec![false; b_count],
        0,
        &mut best,
    );
    best
}

/// Fewest vertices touching every edge, by branching on an uncovered edge.
pub fn brute_force_min_cover(graph: &BipartiteGraph) -> Result<usize, OracleError> {
    brute_force_min_cover_with(graph, Limits::default())
}

pub fn brute_force_min_cover_with(graph: &BipartiteGraph, limits: Limits) -> Result<usize, OracleError> {
    check("vertex count", graph.vertex_count(), limits.max_vertices)?;
    let edges: Vec<(usize, usize)> = graph.edges().map(|e| (e.left, e.right)).collect();
    Ok(min_hitting(&edges, graph.left_count(), graph.right_count()))
}

/// Fewest elements (from either index space) hitting every pair.
fn min_hitting(pairs: &[(usize, usize)], a_count: usize, b_count: usize) -> usize {
    fn go(pairs: &[(usize, usize)], in_a: &mut [bool], in_b: &mut [bool], chosen: usize, best: &mut usize) {
        if chosen >= *best {
            return;
        }
        let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| !in_a[a] && !in_b[b]) else {
            *best = chosen;
            return;
        };
        in_a[a] = true;
        go(pairs, in_a, in_b, chosen + 1, best);
        in_a[a] = false;
        in_b[b] = true;
        go(pairs, in_a, in_b, chosen + 1, best);
        in_b[b] = false;
    }
    let mut best = a_count + b_count;
    go(
        pairs,
        &mut vec![false; a_count],
        &mut vec![false; b_count],
        0,
        &mut best,
    );
    best
}

/// Largest set of entries pairwise sharing no row and no column.
pub fn brute_force_max_transversal(pattern: &SparsityPattern) -> Result<usize, OracleError> {
    check("entry count", pattern.nnz(), Limits::default().max_edges)?;
    Ok(max_disjoint(pattern.entries(), pattern.rows(), pattern.cols()))
}

/// Fewest rows and columns containing every entry.
pub fn brute_force_min_line_cover(pattern: &SparsityPattern) -> Result<usize, OracleError> {
    check(
        "line count",
        pattern.rows() + pattern.cols(),
        Limits::default().max_vertices,
    )?;
    Ok(min_hitting(pattern.entries(), pattern.rows(), pattern.cols()))
}

/// Every K-path for `matching`: simple paths with at least one edge that
/// start at an exposed left vertex, take unmatched edges out of left vertices
/// and matched edges out of right vertices. Vertex sequences alternate
/// left/right starting on the left, and the result is sorted.
pub fn k_paths(graph: &BipartiteGraph, matching: &Matching) -> Vec<Vec<usize>> {
    let edges: Vec<(usize, usize)> = graph.edges().map(|e| (e.left, e.right)).collect();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_left = vec![false; graph.left_count()];
    let mut on_right = vec![false; graph.right_count()];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        edges: &[(usize, usize)],
        matching: &Matching,
        path: &mut Vec<usize>,
        on_left: &mut [bool],
        on_right: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        let at_left = path.len() % 2 == 1;
        for &(p, q) in edges {
            let matched = matching.contains(Edge::new(p, q));
            let next = if at_left {
                if p != last || matched || on_right[q] {
                    continue;
                }
                q
            } else {
                if q != last || !matched || on_left[p] {
                    continue;
                }
                p
            };
            if at_left {
                on_right[next] = true;
            } else {
                on_left[next] = true;
            }
            path.push(next);
            out.push(path.clone());
            extend(edges, matching, path, on_left, on_right, out);
            path.pop();
            if at_left {
                on_right[next] = false;
            } else {
                on_left[next] = false;
            }
        }
    }

    for start in 0..graph.left_count() {
        if matching.left_mate(start).is_some() {
            continue;
        }
        path.push(start);
        on_left[start] = true;
        extend(&edges, matching, &mut path, &mut on_left, &mut on_right, &mut out);
        on_left[start] = false;
        path.pop();
    }
    out.sort();
    out
}

/// K-paths that end at an exposed right vertex.
pub fn augmenting_k_paths(graph: &BipartiteGraph, matching: &Matching) -> Vec<Vec<usize>> {
    k_paths(graph, matching)
        .into_iter()
        .filter(|p| p.len() % 2 == 0 && matching.right_mate(*p.last().unwrap()).is_none())
        .collect()
}

/// Every bipartite graph on exactly `left x right` vertices, one per edge
/// subset. Bit `k` of the subset index selects edge `(k / right, k % right)`;
/// subsets are yielded in ascending index order.
#[derive(Debug, Clone)]
pub struct BipartiteGraphs {
    left: usize,
    right: usize,
    next: u64,
    end: u64,
}

pub const MAX_ENUMERATED_SLOTS: usize = 16;

pub fn enumerate_bipartite_graphs(left: usize, right: usize) -> Result<BipartiteGraphs, OracleError> {
    let slots = left * right;
    check("left x right", slots, MAX_ENUMERATED_SLOTS)?;
    Ok(BipartiteGraphs {
        left,
        right,
        next: 0,
        end: 1u64 << slots,
    })
}

impl Iterator for BipartiteGraphs {
    type Item = BipartiteGraph;

    fn next(&mut self) -> Option<BipartiteGraph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = (0..self.left * self.right)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| Edge::new(k / self.right, k % self.right));
        Some(BipartiteGraph::new(self.left, self.right, edges).expect("slots are in bounds"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BipartiteGraphs {}
