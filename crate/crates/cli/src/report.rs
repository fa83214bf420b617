//! The certificate report and its two renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Match,
    Cover,
    Certify,
    Strank,
    Linecover,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Match => "match",
            Command::Cover => "cover",
            Command::Certify => "certify",
            Command::Strank => "strank",
            Command::Linecover => "linecover",
        }
    }

    pub fn is_matrix(self) -> bool {
        matches!(self, Command::Strank | Command::Linecover)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    /// `edgelist` or `mtx`.
    pub format: String,
    #[serde(default)]
    pub general: bool,
    /// Entry mode for Matrix Market input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    /// Left vertices, or rows.
    pub left: usize,
    /// Right vertices, or columns.
    pub right: usize,
    /// Edges, or non-vanishing entries.
    pub edges: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stored: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dropped_zeros: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingSection {
    pub size: usize,
    /// `[left, right]` vertex labels.
    pub pairs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSection {
    pub size: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankSection {
    pub rank: usize,
    /// min(rows, cols)
    pub bound: usize,
    pub singular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalSection {
    pub size: usize,
    /// 0-based `[row, col]` positions.
    pub positions: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCoverSection {
    pub size: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    /// `valid`, or `invalid: <reason>`.
    pub status: String,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.status == "valid"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: Command,
    pub strategy: String,
    pub input: InputSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchingSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structural_rank: Option<RankSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transversal: Option<TransversalSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_cover: Option<LineCoverSection>,
    pub verdicts: Vec<Verdict>,
    pub elapsed_us: u64,
}

impl Report {
    pub fn all_valid(&self) -> bool {
        self.verdicts.iter().all(Verdict::is_valid)
    }

    /// Pretty JSON followed by a newline.
    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_structured(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let matrix = self.input.format == "mtx" || self.command.is_matrix();
        let _ = writeln!(w, "command: {}", self.command.name());
        let _ = writeln!(w, "strategy: {}", self.strategy);
        let i = &self.input;
        let mut source = i.format.clone();
        if i.general {
            source.push_str(" (general)");
        }
        if let Some(mode) = &i.mode {
            let _ = write!(source, " ({mode})");
        }
        if matrix {
            let _ = write!(
                w,
                "input: {source}, {} x {} matrix, {} entries",
                i.left, i.right, i.edges
            );
        } else {
            let _ = write!(
                w,
                "input: {source}, {} left x {} right, {} edges",
                i.left, i.right, i.edges
            );
        }
        if let (Some(stored), Some(dropped)) = (i.stored, i.dropped_zeros) {
            let _ = write!(w, " ({stored} stored, {dropped} explicit zeros dropped)");
        }
        let _ = writeln!(w);

        if let Some(m) = &self.matching {
            let _ = writeln!(w, "matching size: {}", m.size);
            let _ = writeln!(
                w,
                "matching pairs: {}",
                join(m.pairs.iter().map(|[p, q]| format!("{p}-{q}")))
            );
        }
        if let Some(c) = &self.cover {
            let _ = writeln!(w, "cover size: {}", c.size);
            let _ = writeln!(w, "cover left: {}", join(c.left.iter()));
            let _ = writeln!(w, "cover right: {}", join(c.right.iter()));
        }
        if let Some(r) = &self.structural_rank {
            let _ = writeln!(w, "structural rank: {} (bound {})", r.rank, r.bound);
            let status = if r.singular { "structurally singular" } else { "full" };
            let _ = writeln!(w, "status: {status}");
        }
        if let Some(t) = &self.transversal {
            let _ = writeln!(w, "transversal size: {}", t.size);
            let _ = writeln!(
                w,
                "transversal: {}",
                join(t.positions.iter().map(|[r, c]| format!("({r},{c})")))
            );
        }
        if let Some(l) = &self.line_cover {
            let _ = writeln!(w, "line cover size: {}", l.size);
            let _ = writeln!(w, "cover rows: {}", join(l.rows.iter()));
            let _ = writeln!(w, "cover cols: {}", join(l.cols.iter()));
        }
        for v in &self.verdicts {
            let _ = writeln!(w, "check {}: {}", v.check, v.status);
        }
        let _ = writeln!(w, "elapsed: {} us", self.elapsed_us);
        out
    }
}

fn join<I>(items: I) -> String
where
    I: IntoIterator,
    I::Item: ToString,
{
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(" ")
    }
}
