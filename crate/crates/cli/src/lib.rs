//! Command-line front end: reads edge lists and Matrix Market files, runs
//! matching, cover and structural-rank computations, and emits certificate
//! reports in text or JSON.

pub mod input;
pub mod report;

use std::time::Instant;

use konig::oracle::{self, OracleError};
use konig::{
    konig_certificate, line_certificate, maximum_matching, structural_rank, verify_cover, verify_line_cover,
    verify_matching, verify_pairs, verify_transversal, BipartiteGraph, Edge, LineCover, SparsityPattern, Strategy,
    Transversal, VertexCover,
};
use thiserror::Error;

pub use input::{parse_edge_list, parse_general_edge_list, parse_matrix_market, EntryMode, InputError, LabeledGraph};
pub use report::{Command, Report};
use report::{CoverSection, InputSummary, LineCoverSection, MatchingSection, RankSection, TransversalSection, Verdict};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_SINGULAR: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("certificate check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    MatrixMarket,
}

impl Format {
    /// `.mtx` files are Matrix Market, everything else an edge list.
    pub fn from_path(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") => Format::MatrixMarket,
            _ => Format::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub format: Format,
    pub mode: EntryMode,
    pub strategy: Strategy,
    pub general: bool,
}

/// A parsed input: a labeled graph, plus the pattern view for matrix input.
struct Problem {
    labeled: LabeledGraph,
    pattern: SparsityPattern,
    summary: InputSummary,
}

fn load(text: &str, options: &Options) -> Result<Problem, CliError> {
    match options.format {
        Format::EdgeList => {
            let labeled = if options.general {
                parse_general_edge_list(text)?
            } else {
                parse_edge_list(text)?
            };
            let g = &labeled.graph;
            let pattern = SparsityPattern::new(g.left_count(), g.right_count(), g.edges().map(|e| (e.left, e.right)))
                .expect("graph edges are unique and in bounds");
            let summary = InputSummary {
                format: "edgelist".into(),
                general: options.general,
                mode: None,
                left: g.left_count(),
                right: g.right_count(),
                edges: g.edge_count(),
                stored: None,
                dropped_zeros: None,
            };
            Ok(Problem {
                labeled,
                pattern,
                summary,
            })
        }
        Format::MatrixMarket => {
            if options.general {
                return Err(CliError::Usage("--general applies to edge lists only".into()));
            }
            let m = parse_matrix_market(text, options.mode)?;
            let summary = InputSummary {
                format: "mtx".into(),
                general: false,
                mode: Some(mode_name(options.mode).into()),
                left: m.pattern.rows(),
                right: m.pattern.cols(),
                edges: m.pattern.nnz(),
                stored: Some(m.stored),
                dropped_zeros: Some(m.dropped_zeros),
            };
            let labeled = LabeledGraph::identity(konig::to_graph(&m.pattern));
            Ok(Problem {
                labeled,
                pattern: m.pattern,
                summary,
            })
        }
    }
}

pub fn mode_name(mode: EntryMode) -> &'static str {
    match mode {
        EntryMode::Predicate => "predicate",
        EntryMode::Structural => "structural",
    }
}

pub fn strategy_name(strategy: Strategy) -> &'static str {
    match strategy {
        Strategy::Simple => "simple",
        Strategy::Layered => "layered",
    }
}

fn verdict<E: std::fmt::Display>(check: &str, result: Result<(), E>) -> Verdict {
    Verdict {
        check: check.into(),
        status: match result {
            Ok(()) => "valid".into(),
            Err(e) => format!("invalid: {e}"),
        },
    }
}

fn equality(check: &str, a: usize, b: usize) -> Verdict {
    verdict(check, if a == b { Ok(()) } else { Err(format!("{a} != {b}")) })
}

/// Result of one command: the report and the process exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: u8,
}

/// Runs `command` on the text of an input file.
///
/// Every certificate is verified before the report is returned; a failed
/// verification or unequal matching and cover sizes is an error, never a
/// report.
pub fn run(command: Command, text: &str, options: &Options) -> Result<Outcome, CliError> {
    let problem = load(text, options)?;
    let graph = &problem.labeled.graph;
    let started = Instant::now();
    let mut report = Report {
        command,
        strategy: strategy_name(options.strategy).into(),
        input: problem.summary.clone(),
        matching: None,
        cover: None,
        structural_rank: None,
        transversal: None,
        line_cover: None,
        verdicts: Vec::new(),
        elapsed_us: 0,
    };
    let mut exit_code = EXIT_OK;

    match command {
        Command::Match => {
            let m = maximum_matching(graph, options.strategy);
            report.verdicts.push(verdict("matching", verify_matching(graph, &m)));
            report.matching = Some(matching_section(&problem.labeled, m.pairs()));
        }
        Command::Cover | Command::Certify => {
            let cert = konig_certificate(graph, options.strategy);
            report
                .verdicts
                .push(verdict("matching", verify_matching(graph, &cert.matching)));
            report.verdicts.push(verdict(
                "cover",
                verify_cover(graph, &cert.cover).map_err(|e| format!("edge {e} uncovered")),
            ));
            report.verdicts.push(equality(
                "matching size = cover size",
                cert.matching.size(),
                cert.cover.size(),
            ));
            if command == Command::Certify {
                report.matching = Some(matching_section(&problem.labeled, cert.matching.pairs()));
            }
            report.cover = Some(cover_section(&problem.labeled, &cert.cover));
        }
        Command::Strank => {
            let p = &problem.pattern;
            let rank = structural_rank(p);
            let bound = p.rows().min(p.cols());
            report.structural_rank = Some(RankSection {
                rank,
                bound,
                singular: rank < bound,
            });
            if rank < bound {
                exit_code = EXIT_SINGULAR;
            }
        }
        Command::Linecover => {
            let p = &problem.pattern;
            let cert = line_certificate(p, options.strategy);
            let rank = cert.transversal.size();
            let bound = p.rows().min(p.cols());
            report
                .verdicts
                .push(verdict("transversal", verify_transversal(p, &cert.transversal)));
            report.verdicts.push(verdict(
                "line cover",
                verify_line_cover(p, &cert.cover).map_err(|(r, c)| format!("entry ({r},{c}) uncovered")),
            ));
            report
                .verdicts
                .push(equality("transversal size = line cover size", rank, cert.cover.size()));
            report.structural_rank = Some(RankSection {
                rank,
                bound,
                singular: rank < bound,
            });
            report.transversal = Some(transversal_section(&cert.transversal));
            report.line_cover = Some(LineCoverSection {
                size: cert.cover.size(),
                rows: cert.cover.rows,
                cols: cert.cover.cols,
            });
        }
    }
    report.elapsed_us = u64::try_from(started.elapsed().as_micros()).unwrap_or(u64::MAX);

    if let Some(bad) = report.verdicts.iter().find(|v| !v.is_valid()) {
        return Err(CliError::Internal(format!("{}: {}", bad.check, bad.status)));
    }
    Ok(Outcome { report, exit_code })
}

fn matching_section(labeled: &LabeledGraph, pairs: impl Iterator<Item = Edge>) -> MatchingSection {
    let pairs: Vec<[usize; 2]> = pairs
        .map(|e| [labeled.left_labels[e.left], labeled.right_labels[e.right]])
        .collect();
    MatchingSection {
        size: pairs.len(),
        pairs,
    }
}

fn cover_section(labeled: &LabeledGraph, cover: &VertexCover) -> CoverSection {
    CoverSection {
        size: cover.size(),
        left: cover.left.iter().map(|&p| labeled.left_labels[p]).collect(),
        right: cover.right.iter().map(|&q| labeled.right_labels[q]).collect(),
    }
}

fn transversal_section(t: &Transversal) -> TransversalSection {
    TransversalSection {
        size: t.size(),
        positions: t.positions.iter().map(|&(r, c)| [r, c]).collect(),
    }
}

/// Brute-force reference values for a small input, as text.
pub fn run_oracle(text: &str, options: &Options) -> Result<String, CliError> {
    let problem = load(text, options)?;
    let g = &problem.labeled.graph;
    let p = &problem.pattern;
    Ok(format!(
        "brute-force maximum matching: {}\nbrute-force minimum cover: {}\nbrute-force maximum transversal: {}\nbrute-force minimum line cover: {}\n",
        oracle::brute_force_max_matching(g)?,
        oracle::brute_force_min_cover(g)?,
        oracle::brute_force_max_transversal(p)?,
        oracle::brute_force_min_line_cover(p)?,
    ))
}

/// Re-verifies a report against the input it was produced from, trusting
/// nothing but the witnesses it contains.
pub fn recheck(report: &Report, text: &str, options: &Options) -> Result<(), String> {
    let problem = load(text, options).map_err(|e| e.to_string())?;
    let g: &BipartiteGraph = &problem.labeled.graph;
    let index_of = |labels: &[usize], label: usize| {
        labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| format!("unknown vertex label {label}"))
    };
    let mut matching_size = None;
    if let Some(m) = &report.matching {
        let mut pairs = Vec::new();
        for &[a, b] in &m.pairs {
            pairs.push(Edge::new(
                index_of(&problem.labeled.left_labels, a)?,
                index_of(&problem.labeled.right_labels, b)?,
            ));
        }
        verify_pairs(g, &pairs).map_err(|e| e.to_string())?;
        if pairs.len() != m.size {
            return Err("matching size disagrees with its pairs".into());
        }
        matching_size = Some(m.size);
    }
    if let Some(c) = &report.cover {
        let left = c
            .left
            .iter()
            .map(|&l| index_of(&problem.labeled.left_labels, l))
            .collect::<Result<Vec<_>, _>>()?;
        let right = c
            .right
            .iter()
            .map(|&l| index_of(&problem.labeled.right_labels, l))
            .collect::<Result<Vec<_>, _>>()?;
        let cover = VertexCover::new(left, right);
        verify_cover(g, &cover).map_err(|e| format!("edge {e} uncovered"))?;
        if cover.size() != c.size {
            return Err("cover size disagrees with its vertices".into());
        }
        if matching_size.is_some_and(|m| m != c.size) {
            return Err("matching and cover sizes differ".into());
        }
    }
    if let Some(t) = &report.transversal {
        let t = Transversal {
            positions: t.positions.iter().map(|&[r, c]| (r, c)).collect(),
        };
        verify_transversal(&problem.pattern, &t).map_err(|e| e.to_string())?;
        if let Some(l) = &report.line_cover {
            let cover = LineCover::new(l.rows.clone(), l.cols.clone());
            verify_line_cover(&problem.pattern, &cover).map_err(|(r, c)| format!("entry ({r},{c}) uncovered"))?;
            if cover.size() != t.size() {
                return Err("transversal and line cover sizes differ".into());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const K23: &str = "2 3\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n";

    #[test]
    fn certify_complete_two_by_three() {
        let out = run(Command::Certify, K23, &Options::default()).unwrap();
        let r = &out.report;
        assert_eq!(out.exit_code, EXIT_OK);
        assert_eq!(r.matching.as_ref().unwrap().size, 2);
        assert_eq!(r.cover.as_ref().unwrap().size, 2);
        assert!(r.all_valid());
        recheck(r, K23, &Options::default()).unwrap();
    }

    #[test]
    fn strank_exit_codes() {
        let mtx = Options {
            format: Format::MatrixMarket,
            ..Options::default()
        };
        let identity = "%%MatrixMarket matrix coordinate real general\n3 3 3\n1 1 1\n2 2 1\n3 3 1\n";
        let out = run(Command::Strank, identity, &mtx).unwrap();
        assert_eq!(out.report.structural_rank.as_ref().unwrap().rank, 3);
        assert_eq!(out.exit_code, EXIT_OK);
        let zero = "%%MatrixMarket matrix coordinate real general\n3 3 0\n";
        let out = run(Command::Strank, zero, &mtx).unwrap();
        assert_eq!(out.report.structural_rank.as_ref().unwrap().rank, 0);
        assert_eq!(out.exit_code, EXIT_SINGULAR);
    }

    #[test]
    fn general_mode_reports_original_labels() {
        let c6 = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
        let opts = Options {
            general: true,
            ..Options::default()
        };
        let out = run(Command::Certify, c6, &opts).unwrap();
        let m = out.report.matching.as_ref().unwrap();
        assert_eq!(m.size, 3);
        for [a, b] in &m.pairs {
            assert_eq!(a % 2, 0);
            assert_eq!(b % 2, 1);
        }
        recheck(&out.report, c6, &opts).unwrap();
    }

    #[test]
    fn structured_round_trip() {
        let out = run(Command::Linecover, K23, &Options::default()).unwrap();
        let back = Report::from_structured(&out.report.to_structured()).unwrap();
        assert_eq!(back, out.report);
        recheck(&back, K23, &Options::default()).unwrap();
    }

    #[test]
    fn recheck_catches_tampering() {
        let out = run(Command::Certify, K23, &Options::default()).unwrap();
        let mut bad = out.report.clone();
        bad.cover.as_mut().unwrap().left.pop();
        bad.cover.as_mut().unwrap().size -= 1;
        assert!(recheck(&bad, K23, &Options::default()).is_err());
    }

    #[test]
    fn general_flag_rejected_for_matrix_market() {
        let opts = Options {
            format: Format::MatrixMarket,
            general: true,
            ..Options::default()
        };
        assert!(matches!(
            run(
                Command::Strank,
                "%%MatrixMarket matrix coordinate real general\n1 1 0\n",
                &opts
            ),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn oracle_values() {
        let text = run_oracle(K23, &Options::default()).unwrap();
        assert!(text.starts_with("brute-force maximum matching: 2\nbrute-force minimum cover: 2\n"));
    }
}
