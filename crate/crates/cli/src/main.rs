use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use konig::Strategy;
use konig_cli::{run, run_oracle, Command, EntryMode, Format, Options, EXIT_ERROR};

/// Maximum matchings, minimum vertex covers and structural rank, each with a
/// checkable certificate.
#[derive(Parser)]
#[command(name = "konig", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Maximum matching.
    Match(InputArgs),
    /// Minimum vertex cover.
    Cover(InputArgs),
    /// Maximum matching and minimum vertex cover of equal size.
    Certify(InputArgs),
    /// Structural rank; exits with 2 when structurally singular.
    Strank(InputArgs),
    /// Maximum transversal and minimum line cover.
    Linecover(InputArgs),
    /// Brute-force reference values for small inputs.
    #[command(hide = true)]
    Oracle(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge list or Matrix Market file.
    input: PathBuf,
    /// Input format; defaults to mtx for *.mtx and edgelist otherwise.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Which Matrix Market entries count: nonzero values, or every stored one.
    #[arg(long, value_enum, default_value_t = ModeArg::Predicate)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Layered)]
    strategy: StrategyArg,
    /// Treat the edge list as an arbitrary undirected graph and two-color it.
    #[arg(long)]
    general: bool,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Mtx,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Predicate,
    Structural,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Simple,
    Layered,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Structured,
}

impl InputArgs {
    fn options(&self) -> Options {
        Options {
            format: match self.format {
                Some(FormatArg::Edgelist) => Format::EdgeList,
                Some(FormatArg::Mtx) => Format::MatrixMarket,
                None => Format::from_path(&self.input),
            },
            mode: match self.mode {
                ModeArg::Predicate => EntryMode::Predicate,
                ModeArg::Structural => EntryMode::Structural,
            },
            strategy: match self.strategy {
                StrategyArg::Simple => Strategy::Simple,
                StrategyArg::Layered => Strategy::Layered,
            },
            general: self.general,
        }
    }
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("konig: {message}");
    ExitCode::from(EXIT_ERROR)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (command, args) = match cli.command {
        Cmd::Match(a) => (Some(Command::Match), a),
        Cmd::Cover(a) => (Some(Command::Cover), a),
        Cmd::Certify(a) => (Some(Command::Certify), a),
        Cmd::Strank(a) => (Some(Command::Strank), a),
        Cmd::Linecover(a) => (Some(Command::Linecover), a),
        Cmd::Oracle(a) => (None, a),
    };
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return fail(format_args!("{}: {e}", args.input.display())),
    };
    let options = args.options();
    let Some(command) = command else {
        return match run_oracle(&text, &options) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        };
    };
    match run(command, &text, &options) {
        Ok(outcome) => {
            match args.output {
                OutputArg::Text => print!("{}", outcome.report.to_text()),
                OutputArg::Structured => print!("{}", outcome.report.to_structured()),
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => fail(e),
    }
}
