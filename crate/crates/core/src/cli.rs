//! Command-line surface of the `skgram` binary.
//!
//! [`run`] does all the work and returns the text and exit code instead of
//! touching the process, so it can be driven from tests and examples.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::counting;
use crate::error::Error;
use crate::grammar::GrammarStore;
use crate::membership::Matcher;
use crate::term::Term;
use crate::verify::{verify, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest grammar index and term size accepted without `--allow-large`.
pub const DEFAULT_N_CAP: usize = 4;
pub const DEFAULT_SIZE_CAP: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "skgram",
    version,
    about = "Normal-order reduction grammars for SK combinators"
)]
pub struct Cli {
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Lift the default caps on grammar index and term size.
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the productions of R_n in canonical order.
    Grammar {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GrammarFormat::Text)]
        format: GrammarFormat,
    },
    /// Print |R_0| .. |R_maxN|.
    Sizes {
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        max_n: usize,
    },
    /// Print the number of terms of each size k <= kmax in R_n.
    Series {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Csv)]
        format: SeriesFormat,
    },
    /// Number of normal-order steps a term needs, if at most maxN.
    Classify {
        #[arg(long)]
        term: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Cross-check every term up to a size against the reducer.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 64)]
        fuel: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GrammarFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Csv,
    Json,
}

/// What a command printed and how it wants the process to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let mut outcome = execute(&cli);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            return Outcome::usage(format!("cannot write {}: {e}", path.display()));
        }
        outcome.stdout.clear();
    }
    outcome
}

/// Run an already parsed command line, ignoring `--out`.
pub fn execute(cli: &Cli) -> Outcome {
    if let Err(msg) = check_caps(cli) {
        return Outcome::usage(msg);
    }
    match dispatch(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(e),
    }
}

fn check_caps(cli: &Cli) -> std::result::Result<(), String> {
    if cli.allow_large {
        return Ok(());
    }
    let (n, size) = match cli.command {
        Command::Grammar { n, .. } | Command::Series { n, .. } => (n, 0),
        Command::Sizes { max_n } | Command::Classify { max_n, .. } => (max_n, 0),
        Command::Verify {
            max_size, max_n, ..
        } => (max_n, max_size),
    };
    if n > DEFAULT_N_CAP {
        return Err(format!(
            "grammar index {n} exceeds {DEFAULT_N_CAP}; pass --allow-large to build it anyway"
        ));
    }
    if size > DEFAULT_SIZE_CAP {
        return Err(format!(
            "term size {size} exceeds {DEFAULT_SIZE_CAP}; pass --allow-large to enumerate anyway"
        ));
    }
    Ok(())
}

fn dispatch(command: &Command) -> crate::Result<Outcome> {
    match *command {
        Command::Grammar { n, format } => {
            let store = GrammarStore::with_grammars(n)?;
            Ok(Outcome::ok(match format {
                GrammarFormat::Text => store.dump_text(n)?,
                GrammarFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&store.dump(n)?)
                        .expect("grammar dumps serialize");
                    s.push('\n');
                    s
                }
            }))
        }
        Command::Sizes { max_n } => {
            let store = GrammarStore::with_grammars(max_n)?;
            let mut out = String::from("n\tproductions\n");
            for n in 0..=max_n {
                out.push_str(&format!("{n}\t{}\n", store.grammar(n)?.len()));
            }
            Ok(Outcome::ok(out))
        }
        Command::Series { n, kmax, format } => {
            let store = GrammarStore::with_grammars(n)?;
            let series = counting::series(&store, n, kmax)?;
            Ok(Outcome::ok(match format {
                SeriesFormat::Csv => series.to_csv(),
                SeriesFormat::Json => series.to_json() + "\n",
            }))
        }
        Command::Classify { ref term, max_n } => {
            let x = Term::parse(term)?;
            let store = GrammarStore::with_grammars(max_n)?;
            let c = Matcher::new(&store).classify(&x, max_n)?;
            Ok(Outcome::ok(format!("{c}\n")))
        }
        Command::Verify {
            max_size,
            max_n,
            fuel,
            jobs,
        } => {
            if jobs == 0 {
                return Err(Error::Usage("--jobs must be at least 1".into()));
            }
            let store = GrammarStore::with_grammars(max_n)?;
            let report = verify(
                &store,
                VerifyConfig {
                    max_size,
                    max_n,
                    fuel,
                    jobs,
                },
            )?;
            Ok(Outcome {
                stdout: report.render(),
                stderr: String::new(),
                code: if report.is_ok() {
                    EXIT_OK
                } else {
                    EXIT_MISMATCH
                },
            })
        }
    }
}
