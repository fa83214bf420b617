//! Edge-list and Matrix Market readers.

use std::fmt;

use konig::{partition_general_graph, BipartiteGraph, Edge, PartitionError, SparsityPattern};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{message}, line {line}")]
    Malformed { line: usize, message: String },
    #[error("{side} index {index} out of bounds, line {line}")]
    OutOfBounds {
        side: &'static str,
        index: usize,
        line: usize,
    },
    #[error("self-loop at vertex {vertex}, line {line}")]
    SelfLoop { vertex: usize, line: usize },
    #[error("graph is not bipartite: odd cycle {}", fmt_cycle(.0))]
    NotBipartite(Vec<usize>),
    #[error("duplicate coordinate ({row}, {col}), line {line}")]
    Duplicate { row: usize, col: usize, line: usize },
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
}

fn fmt_cycle(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn malformed(line: usize, message: impl fmt::Display) -> InputError {
    InputError::Malformed {
        line,
        message: message.to_string(),
    }
}

/// A graph read from an edge list, with the input vertex name behind every
/// side-local index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: BipartiteGraph,
    pub left_labels: Vec<usize>,
    pub right_labels: Vec<usize>,
}

impl LabeledGraph {
    pub fn identity(graph: BipartiteGraph) -> Self {
        LabeledGraph {
            left_labels: (0..graph.left_count()).collect(),
            right_labels: (0..graph.right_count()).collect(),
            graph,
        }
    }
}

/// Non-empty lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_usize(field: &str, line: usize, what: &str) -> Result<usize, InputError> {
    field
        .parse::<usize>()
        .map_err(|_| malformed(line, format!("invalid {what} '{field}'")))
}

fn two_fields(fields: &[&str], line: usize, what: [&str; 2]) -> Result<(usize, usize), InputError> {
    if fields.len() != 2 {
        return Err(malformed(line, format!("expected '{} {}'", what[0], what[1])));
    }
    Ok((
        parse_usize(fields[0], line, what[0])?,
        parse_usize(fields[1], line, what[1])?,
    ))
}

/// Bipartite edge list: a header line `L R`, then one `left right` pair per
/// line. Indices are 0-based; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, InputError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(InputError::Empty)?;
    let (left_count, right_count) = two_fields(&header, header_line, ["left count", "right count"])?;
    let mut edges = Vec::new();
    for (line, fields) in lines {
        let (p, q) = two_fields(&fields, line, ["left", "right"])?;
        if p >= left_count {
            return Err(InputError::OutOfBounds {
                side: "left",
                index: p,
                line,
            });
        }
        if q >= right_count {
            return Err(InputError::OutOfBounds {
                side: "right",
                index: q,
                line,
            });
        }
        edges.push(Edge::new(p, q));
    }
    let graph = BipartiteGraph::new(left_count, right_count, edges).expect("edges were bounds-checked");
    Ok(LabeledGraph::identity(graph))
}

/// General undirected edge list: a header line `N`, then one `u v` pair per
/// line over vertices `0..N`. The graph is two-colored; an odd cycle is an
/// error.
pub fn parse_general_edge_list(text: &str) -> Result<LabeledGraph, InputError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(InputError::Empty)?;
    if header.len() != 1 {
        return Err(malformed(header_line, "expected 'vertex count'"));
    }
    let n = parse_usize(header[0], header_line, "vertex count")?;
    let mut edges = Vec::new();
    for (line, fields) in lines {
        let (u, v) = two_fields(&fields, line, ["u", "v"])?;
        for x in [u, v] {
            if x >= n {
                return Err(InputError::OutOfBounds {
                    side: "vertex",
                    index: x,
                    line,
                });
            }
        }
        if u == v {
            return Err(InputError::SelfLoop { vertex: u, line });
        }
        edges.push((u, v));
    }
    match partition_general_graph(n, &edges) {
        Ok(part) => Ok(LabeledGraph {
            graph: part.graph,
            left_labels: part.left_vertices,
            right_labels: part.right_vertices,
        }),
        Err(PartitionError::OddCycle(c)) => Err(InputError::NotBipartite(c.0)),
        Err(other) => unreachable!("validated above: {other}"),
    }
}

/// Which stored Matrix Market entries count as non-vanishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntryMode {
    /// Stored entries whose value is nonzero.
    #[default]
    Predicate,
    /// Every stored entry, explicit zeros included.
    Structural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Real,
    Integer,
    Pattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
    SkewSymmetric,
}

/// A pattern read from Matrix Market plus what was stored in the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixInput {
    pub pattern: SparsityPattern,
    /// Coordinates listed in the file.
    pub stored: usize,
    /// Stored entries left out because their value is zero.
    pub dropped_zeros: usize,
}

/// Reads a coordinate-format Matrix Market file into 0-based positions.
///
/// `real`, `integer` and `pattern` fields are accepted with `general`,
/// `symmetric` or `skew-symmetric` storage; symmetric storage is mirrored
/// across the diagonal. A `pattern` field always reads structurally.
pub fn parse_matrix_market(text: &str, mode: EntryMode) -> Result<MatrixInput, InputError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (banner_line, banner) = lines.next().ok_or(InputError::Empty)?;
    let (field, symmetry) = parse_banner(banner, banner_line)?;
    let mode = if field == Field::Pattern {
        EntryMode::Structural
    } else {
        mode
    };

    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (size_line, size) = body
        .next()
        .ok_or_else(|| malformed(banner_line + 1, "missing size line"))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    if dims.len() != 3 {
        return Err(malformed(size_line, "expected 'rows cols entries'"));
    }
    let rows = parse_usize(dims[0], size_line, "row count")?;
    let cols = parse_usize(dims[1], size_line, "column count")?;
    let expected = parse_usize(dims[2], size_line, "entry count")?;
    if symmetry != Symmetry::General && rows != cols {
        return Err(malformed(size_line, "symmetric storage requires a square matrix"));
    }

    let mut seen: Vec<((usize, usize), usize)> = Vec::with_capacity(expected);
    let mut keep: Vec<(usize, usize)> = Vec::with_capacity(expected);
    let mut stored = 0;
    let mut dropped_zeros = 0;
    for (line, raw) in body {
        if stored == expected {
            return Err(malformed(line, format!("more than the declared {expected} entries")));
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let want = if field == Field::Pattern { 2 } else { 3 };
        if fields.len() != want {
            return Err(malformed(line, format!("expected {want} fields")));
        }
        let i = parse_usize(fields[0], line, "row index")?;
        let j = parse_usize(fields[1], line, "column index")?;
        if i == 0 || i > rows {
            return Err(InputError::OutOfBounds {
                side: "row",
                index: i,
                line,
            });
        }
        if j == 0 || j > cols {
            return Err(InputError::OutOfBounds {
                side: "column",
                index: j,
                line,
            });
        }
        let nonzero = match field {
            Field::Pattern => true,
            Field::Integer => {
                fields[2]
                    .parse::<i64>()
                    .map_err(|_| malformed(line, format!("invalid integer '{}'", fields[2])))?
                    != 0
            }
            Field::Real => {
                fields[2]
                    .parse::<f64>()
                    .map_err(|_| malformed(line, format!("invalid real '{}'", fields[2])))?
                    != 0.0
            }
        };
        stored += 1;
        let (r, c) = (i - 1, j - 1);
        let mut positions = vec![(r, c)];
        if symmetry != Symmetry::General && r != c {
            positions.push((c, r));
        }
        for pos in positions {
            seen.push((pos, line));
            if nonzero || mode == EntryMode::Structural {
                keep.push(pos);
            }
        }
        if !nonzero && mode == EntryMode::Predicate {
            dropped_zeros += 1;
        }
    }
    if stored != expected {
        return Err(InputError::EntryCount {
            expected,
            found: stored,
        });
    }
    seen.sort_unstable_by_key(|&(pos, line)| (pos, line));
    if let Some(w) = seen.windows(2).find(|w| w[0].0 == w[1].0) {
        let ((r, c), line) = w[1];
        return Err(InputError::Duplicate {
            row: r + 1,
            col: c + 1,
            line,
        });
    }
    let pattern = SparsityPattern::new(rows, cols, keep).expect("positions checked and unique");
    Ok(MatrixInput {
        pattern,
        stored,
        dropped_zeros,
    })
}

fn parse_banner(banner: &str, line: usize) -> Result<(Field, Symmetry), InputError> {
    let words: Vec<String> = banner.split_whitespace().map(str::to_ascii_lowercase).collect();
    if words.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(malformed(line, "banner must start with %%MatrixMarket"));
    }
    if words.len() != 5 || words[1] != "matrix" || words[2] != "coordinate" {
        return Err(malformed(
            line,
            "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'",
        ));
    }
    let field = match words[3].as_str() {
        "real" | "double" => Field::Real,
        "integer" => Field::Integer,
        "pattern" => Field::Pattern,
        other => return Err(malformed(line, format!("unsupported field '{other}'"))),
    };
    let symmetry = match words[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "skew-symmetric" => Symmetry::SkewSymmetric,
        other => return Err(malformed(line, format!("unsupported symmetry '{other}'"))),
    };
    Ok((field, symmetry))
}
