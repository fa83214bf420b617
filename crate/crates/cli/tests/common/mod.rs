//! Golden-file runner for the `konig` binary over the checked-in corpus.
//!
//! Set `KONIG_BLESS=1` to rewrite the golden files from the current output.

use std::path::{Path, PathBuf};
use std::process::Command;

use konig_cli::{recheck, EntryMode, Format, Options, Report};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "certify_k23",
        args: &["certify", "k23.edges"],
        exit: 0,
    },
    Case {
        name: "certify_k23_simple",
        args: &["certify", "k23.edges", "--strategy", "simple"],
        exit: 0,
    },
    Case {
        name: "certify_k23_structured",
        args: &["certify", "k23.edges", "--output", "structured"],
        exit: 0,
    },
    Case {
        name: "certify_c6_general",
        args: &["certify", "c6.edges", "--general"],
        exit: 0,
    },
    Case {
        name: "certify_cross3_edges",
        args: &["certify", "cross3.edges"],
        exit: 0,
    },
    Case {
        name: "certify_triangle_general",
        args: &["certify", "triangle.edges", "--general"],
        exit: 1,
    },
    Case {
        name: "linecover_k23",
        args: &["linecover", "k23.edges"],
        exit: 0,
    },
    Case {
        name: "strank_identity3",
        args: &["strank", "identity3.mtx"],
        exit: 0,
    },
    Case {
        name: "strank_identity5",
        args: &["strank", "identity5.mtx"],
        exit: 0,
    },
    Case {
        name: "linecover_identity3",
        args: &["linecover", "identity3.mtx"],
        exit: 0,
    },
    Case {
        name: "certify_identity5",
        args: &["certify", "identity5.mtx"],
        exit: 0,
    },
    Case {
        name: "strank_cross3",
        args: &["strank", "cross3.mtx"],
        exit: 2,
    },
    Case {
        name: "linecover_cross3",
        args: &["linecover", "cross3.mtx"],
        exit: 0,
    },
    Case {
        name: "linecover_cross3_structured",
        args: &["linecover", "cross3.mtx", "--output", "structured"],
        exit: 0,
    },
    Case {
        name: "strank_zero3",
        args: &["strank", "zero3.mtx"],
        exit: 2,
    },
    Case {
        name: "linecover_zero3",
        args: &["linecover", "zero3.mtx"],
        exit: 0,
    },
    Case {
        name: "strank_explicit_zeros_predicate",
        args: &["strank", "explicit_zeros.mtx"],
        exit: 2,
    },
    Case {
        name: "strank_explicit_zeros_structural",
        args: &["strank", "explicit_zeros.mtx", "--mode", "structural"],
        exit: 0,
    },
    Case {
        name: "linecover_explicit_zeros_predicate",
        args: &["linecover", "explicit_zeros.mtx"],
        exit: 0,
    },
    Case {
        name: "linecover_explicit_zeros_structural",
        args: &["linecover", "explicit_zeros.mtx", "--mode", "structural"],
        exit: 0,
    },
];

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Run {
    pub transcript: String,
    pub exit: i32,
    pub stdout: String,
}

/// Runs the binary with the corpus file path substituted for the input.
pub fn invoke(args: &[&str]) -> Run {
    let corpus = corpus_dir();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_konig"));
    cmd.current_dir(&corpus);
    for a in args {
        cmd.arg(a);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
    let exit = out.status.code().unwrap_or(-1);
    let mut transcript = normalize(&stdout);
    if !stderr.is_empty() {
        transcript.push_str("[stderr]\n");
        transcript.push_str(&stderr);
    }
    transcript.push_str(&format!("[exit {exit}]\n"));
    Run {
        transcript,
        exit,
        stdout,
    }
}

/// Blanks out the timing field, the only non-deterministic part of a report.
pub fn normalize(output: &str) -> String {
    output
        .lines()
        .map(|line| {
            let t = line.trim_start();
            if t.starts_with("elapsed: ") {
                "elapsed: <timing>".to_string()
            } else if t.starts_with("\"elapsed_us\": ") {
                let indent = &line[..line.len() - t.len()];
                format!("{indent}\"elapsed_us\": 0")
            } else {
                line.to_string()
            }
        })
        .map(|l| l + "\n")
        .collect()
}

fn options_for(args: &[&str]) -> Options {
    let input = Path::new(args[1]);
    let flag = |name: &str| args.iter().position(|a| *a == name).map(|i| args[i + 1]);
    Options {
        format: Format::from_path(input),
        mode: if flag("--mode") == Some("structural") {
            EntryMode::Structural
        } else {
            EntryMode::Predicate
        },
        strategy: if flag("--strategy") == Some("simple") {
            konig::Strategy::Simple
        } else {
            konig::Strategy::Layered
        },
        general: args.contains(&"--general"),
    }
}

/// Checks one case; returns a description of the first problem found.
pub fn check_case(case: &Case) -> Result<(), String> {
    let first = invoke(case.args);
    let second = invoke(case.args);
    if first.transcript != second.transcript {
        return Err(format!("{}: output differs between runs", case.name));
    }
    if first.exit != case.exit {
        return Err(format!(
            "{}: exit {} (expected {})\n{}",
            case.name, first.exit, case.exit, first.transcript
        ));
    }
    let golden_path = golden_dir().join(format!("{}.out", case.name));
    if std::env::var_os("KONIG_BLESS").is_some() {
        std::fs::write(&golden_path, &first.transcript).map_err(|e| e.to_string())?;
    }
    let golden = std::fs::read_to_string(&golden_path)
        .map_err(|e| format!("{}: cannot read {}: {e}", case.name, golden_path.display()))?;
    if golden != first.transcript {
        return Err(format!(
            "{}: output differs from golden\n--- expected\n{golden}--- actual\n{}",
            case.name, first.transcript
        ));
    }
    if case.exit == 1 {
        return Ok(());
    }

    // Equalities: re-run in structured form and re-verify the witnesses
    // against the input with nothing but the library's checkers.
    let mut args: Vec<&str> = case.args.iter().copied().filter(|a| *a != "structured").collect();
    if let Some(i) = args.iter().position(|a| *a == "--output") {
        args.remove(i);
    }
    args.extend(["--output", "structured"]);
    let structured = invoke(&args);
    let report = Report::from_structured(&structured.stdout).map_err(|e| format!("{}: {e}", case.name))?;
    if !report.all_valid() {
        return Err(format!("{}: report carries an invalid verdict", case.name));
    }
    if let (Some(m), Some(c)) = (&report.matching, &report.cover) {
        if m.size != c.size {
            return Err(format!("{}: matching {} != cover {}", case.name, m.size, c.size));
        }
    }
    if let (Some(t), Some(l), Some(r)) = (&report.transversal, &report.line_cover, &report.structural_rank) {
        if t.size != l.size || t.size != r.rank {
            return Err(format!("{}: transversal/line cover/rank disagree", case.name));
        }
    }
    let text = std::fs::read_to_string(corpus_dir().join(case.args[1])).map_err(|e| e.to_string())?;
    recheck(&report, &text, &options_for(case.args)).map_err(|e| format!("{}: recheck failed: {e}", case.name))
}
