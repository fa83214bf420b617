//! Sparsity patterns and their structural quantities.
//!
//! Row `i` becomes left vertex `i`, column `k` becomes right vertex `k`, and
//! every non-vanishing position `(i, k)` becomes an edge. Matchings turn into
//! transversals and vertex covers into line covers.

use thiserror::Error;

use crate::cover::{extract_cover, VertexCover};
use crate::graph::{BipartiteGraph, Edge};
use crate::matching::{maximum_matching, Matching, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("position ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate position ({row}, {col})")]
    Duplicate { row: usize, col: usize },
}

/// The set of non-vanishing positions of a `rows` x `cols` matrix, kept in
/// row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsityPattern {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize)>,
}

impl SparsityPattern {
    /// Builds a pattern from positions. Rejects out-of-bounds and repeated
    /// positions.
    pub fn new<I>(rows: usize, cols: usize, positions: I) -> Result<Self, PatternError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut entries = Vec::new();
        for (row, col) in positions {
            if row >= rows || col >= cols {
                return Err(PatternError::OutOfBounds { row, col, rows, cols });
            }
            entries.push((row, col));
        }
        entries.sort_unstable();
        if let Some(w) = entries.windows(2).find(|w| w[0] == w[1]) {
            let (row, col) = w[0];
            return Err(PatternError::Duplicate { row, col });
        }
        Ok(SparsityPattern { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        SparsityPattern {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparsityPattern {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Positions in row-major order.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.entries.binary_search(&(row, col)).is_ok()
    }
}

/// Keeps the positions whose element satisfies `keep`.
pub fn pattern_from_values<T, I, F>(
    rows: usize,
    cols: usize,
    values: I,
    keep: F,
) -> Result<SparsityPattern, PatternError>
where
    I: IntoIterator<Item = ((usize, usize), T)>,
    F: Fn(&T) -> bool,
{
    pattern_from_values_at(rows, cols, values, |_, _, v| keep(v))
}

/// Like [`pattern_from_values`], but the predicate also sees the position.
pub fn pattern_from_values_at<T, I, F>(
    rows: usize,
    cols: usize,
    values: I,
    keep: F,
) -> Result<SparsityPattern, PatternError>
where
    I: IntoIterator<Item = ((usize, usize), T)>,
    F: Fn(usize, usize, &T) -> bool,
{
    let mut positions = Vec::new();
    for ((row, col), value) in values {
        if row >= rows || col >= cols {
            return Err(PatternError::OutOfBounds { row, col, rows, cols });
        }
        if keep(row, col, &value) {
            positions.push((row, col));
        }
    }
    SparsityPattern::new(rows, cols, positions)
}

/// The default predicate: element differs from `T::default()` (zero for
/// numbers).
pub fn nonzero_pattern<T, I>(rows: usize, cols: usize, values: I) -> Result<SparsityPattern, PatternError>
where
    T: Default + PartialEq,
    I: IntoIterator<Item = ((usize, usize), T)>,
{
    let zero = T::default();
    pattern_from_values(rows, cols, values, |v| *v != zero)
}

/// One edge per entry; rows on the left, columns on the right.
pub fn to_graph(pattern: &SparsityPattern) -> BipartiteGraph {
    BipartiteGraph::new(
        pattern.rows,
        pattern.cols,
        pattern.entries.iter().map(|&(r, c)| Edge::new(r, c)),
    )
    .expect("pattern positions are in bounds")
}

/// Entries pairwise sharing no row and no column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Transversal {
    /// Row-major order.
    pub positions: Vec<(usize, usize)>,
}

impl Transversal {
    pub fn size(&self) -> usize {
        self.positions.len()
    }

    fn from_matching(matching: &Matching) -> Self {
        Transversal {
            positions: matching.pairs().map(|e| (e.left, e.right)).collect(),
        }
    }
}

/// Rows and columns chosen to contain every entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LineCover {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl LineCover {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Self {
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        LineCover { rows, cols }
    }

    pub fn size(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    fn from_vertex_cover(cover: VertexCover) -> Self {
        LineCover {
            rows: cover.left,
            cols: cover.right,
        }
    }
}

/// Maximum transversal and minimum line cover of one pattern, equal in size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCertificate {
    pub transversal: Transversal,
    pub cover: LineCover,
}

/// Computes a maximum transversal and a minimum line cover together.
pub fn line_certificate(pattern: &SparsityPattern, strategy: Strategy) -> LineCertificate {
    let graph = to_graph(pattern);
    let matching = maximum_matching(&graph, strategy);
    let cover = extract_cover(&graph, &matching).expect("maximum_matching returns a maximum matching");
    let cert = LineCertificate {
        transversal: Transversal::from_matching(&matching),
        cover: LineCover::from_vertex_cover(cover),
    };
    assert_eq!(cert.transversal.size(), cert.cover.size());
    cert
}

/// Largest number of entries no two of which share a line.
pub fn structural_rank(pattern: &SparsityPattern) -> usize {
    structural_rank_with(pattern, Strategy::default())
}

pub fn structural_rank_with(pattern: &SparsityPattern, strategy: Strategy) -> usize {
    let rank = maximum_matching(&to_graph(pattern), strategy).size();
    assert!(rank <= pattern.rows.min(pattern.cols));
    rank
}

pub fn maximum_transversal(pattern: &SparsityPattern) -> Transversal {
    maximum_transversal_with(pattern, Strategy::default())
}

pub fn maximum_transversal_with(pattern: &SparsityPattern, strategy: Strategy) -> Transversal {
    Transversal::from_matching(&maximum_matching(&to_graph(pattern), strategy))
}

/// Fewest rows and columns containing every entry.
pub fn minimum_line_cover(pattern: &SparsityPattern) -> LineCover {
    minimum_line_cover_with(pattern, Strategy::default())
}

pub fn minimum_line_cover_with(pattern: &SparsityPattern, strategy: Strategy) -> LineCover {
    line_certificate(pattern, strategy).cover
}

/// Returns the first entry (row-major) lying in no chosen line.
pub fn verify_line_cover(pattern: &SparsityPattern, cover: &LineCover) -> Result<(), (usize, usize)> {
    let mut row_in = vec![false; pattern.rows];
    let mut col_in = vec![false; pattern.cols];
    cover
        .rows
        .iter()
        .filter(|&&r| r < pattern.rows)
        .for_each(|&r| row_in[r] = true);
    cover
        .cols
        .iter()
        .filter(|&&c| c < pattern.cols)
        .for_each(|&c| col_in[c] = true);
    match pattern.entries.iter().find(|&&(r, c)| !row_in[r] && !col_in[c]) {
        Some(&e) => Err(e),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalViolation {
    #[error("({0}, {1}) is not an entry")]
    NotAnEntry(usize, usize),
    #[error("row {0} used twice")]
    SharedRow(usize),
    #[error("column {0} used twice")]
    SharedCol(usize),
}

/// Checks that every position is an entry and no line is used twice.
pub fn verify_transversal(pattern: &SparsityPattern, transversal: &Transversal) -> Result<(), TransversalViolation> {
    let mut row_used = vec![false; pattern.rows];
    let mut col_used = vec![false; pattern.cols];
    for &(r, c) in &transversal.positions {
        if !pattern.contains(r, c) {
            return Err(TransversalViolation::NotAnEntry(r, c));
        }
        if std::mem::replace(&mut row_used[r], true) {
            return Err(TransversalViolation::SharedRow(r));
        }
        if std::mem::replace(&mut col_used[c], true) {
            return Err(TransversalViolation::SharedCol(c));
        }
    }
    Ok(())
}
