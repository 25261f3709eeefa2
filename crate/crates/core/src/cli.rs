//! The `multiplicity` command line.
//!
//! Exit codes: 0 success (and "zero" / "equivalent"), 1 a negative verdict
//! ("nonzero", "inequivalent", no conjugacy), 2 usage or input errors, 3
//! internal invariant violations.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::automaton::{Word, WeightedAutomaton};
use crate::budget::OracleBudget;
use crate::conjugate::{conjugacy_witness, minimize};
use crate::decision::{equivalent, is_zero};
use crate::error::Error;
use crate::format::{parse_automaton, print_automaton};
use crate::gram::gram_equivalent;
use crate::hankel::{hankel_automaton, series_rank};
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "multiplicity", version, about = "Weighted automata over the rationals")]
struct Cli {
    /// Overrides the brute-force and Gram-matrix size budgets.
    #[arg(long, global = true, value_name = "N")]
    oracle_budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Pair {
    first: PathBuf,
    second: PathBuf,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prints the value of a word (`a.b.a`, `aba`, or '' for ε).
    Eval {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decides zeroness; prints a witness word otherwise.
    Zero { file: PathBuf },
    /// Decides equivalence; prints a counterexample otherwise.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Use the Gram-matrix procedure (no counterexample).
        #[arg(long)]
        gram: bool,
    },
    /// Minimizes; prints original and minimal state counts.
    Minimize {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Prints the rank of the series.
    Rank { file: PathBuf },
    /// Builds the Hankel automaton; prints its complete set.
    Hankel {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Prints the conjugacy matrix Q between two minimal equivalent automata.
    Conjugacy { first: PathBuf, second: PathBuf },
    /// Automaton for the pointwise sum.
    Sum(Pair),
    /// Automaton for the pointwise difference.
    Diff(Pair),
    /// Automaton for the pointwise product.
    Product(Pair),
}

/// Result of one command-line invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvariantViolation(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn load(path: &Path) -> Result<WeightedAutomaton<Rational>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_automaton(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn save_or_print(a: &WeightedAutomaton<Rational>, output: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let text = print_automaton(a);
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            out.push_str(&text);
            Ok(())
        }
    }
}

/// Runs the command line on `args` (including the program name) and
/// captures its output.
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput::fail(EXIT_USAGE, text)
            } else {
                CliOutput::ok(EXIT_OK, text)
            };
        }
    };
    let budget = cli.oracle_budget.map(OracleBudget::uniform).unwrap_or_default();
    match execute(cli.command, &budget) {
        Ok((code, stdout)) => CliOutput::ok(code, stdout),
        Err(f) => CliOutput::fail(f.code, format!("error: {}\n", f.message)),
    }
}

fn execute(command: Command, budget: &OracleBudget) -> Result<(i32, String), Failure> {
    let mut out = String::new();
    let code = match command {
        Command::Eval { file, word } => {
            let a = load(&file)?;
            let w = Word::parse(&word, a.alphabet())?;
            out = format!("{}\n", a.evaluate(&w)?);
            EXIT_OK
        }
        Command::Zero { file } => match is_zero(&load(&file)?).witness {
            None => {
                out.push_str("zero\n");
                EXIT_OK
            }
            Some(w) => {
                out = format!("nonzero\nwitness: {w}\n");
                EXIT_NEGATIVE
            }
        },
        Command::Equiv { first, second, gram } => {
            let (a1, a2) = (load(&first)?, load(&second)?);
            if gram {
                if gram_equivalent(&a1, &a2, budget)? {
                    out.push_str("equivalent\n");
                    EXIT_OK
                } else {
                    out.push_str("inequivalent\n");
                    EXIT_NEGATIVE
                }
            } else {
                match equivalent(&a1, &a2)?.counterexample {
                    None => {
                        out.push_str("equivalent\n");
                        EXIT_OK
                    }
                    Some(w) => {
                        out = format!("inequivalent\ncounterexample: {w}\n");
                        EXIT_NEGATIVE
                    }
                }
            }
        }
        Command::Minimize { file, output } => {
            let a = load(&file)?;
            let m = minimize(&a);
            if let Some(path) = output.as_deref() {
                save_or_print(&m, Some(path), &mut out)?;
            }
            out.push_str(&format!("{} -> {}\n", a.states(), m.states()));
            EXIT_OK
        }
        Command::Rank { file } => {
            out = format!("{}\n", series_rank(&load(&file)?));
            EXIT_OK
        }
        Command::Hankel { file, output } => {
            let h = hankel_automaton(&load(&file)?);
            let words: Vec<String> = h.complete_set.words.iter().map(|w| w.to_string()).collect();
            out = format!("complete set: {{{}}}\n", words.join(", "));
            save_or_print(&h.automaton, output.as_deref(), &mut out)?;
            EXIT_OK
        }
        Command::Conjugacy { first, second } => {
            let (a1, a2) = (load(&first)?, load(&second)?);
            match conjugacy_witness(&a1, &a2) {
                Ok(w) => {
                    out = w.q.to_string();
                    EXIT_OK
                }
                Err(e @ (Error::NotMinimal(_) | Error::NotEquivalent { .. })) => {
                    out = format!("not conjugate: {e}\n");
                    EXIT_NEGATIVE
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Sum(p) => combine(p, |a, b| a.sum(b), &mut out)?,
        Command::Diff(p) => combine(p, |a, b| a.difference(b), &mut out)?,
        Command::Product(p) => combine(p, |a, b| a.hadamard(b), &mut out)?,
    };
    Ok((code, out))
}

fn combine(
    p: Pair,
    op: impl Fn(&WeightedAutomaton<Rational>, &WeightedAutomaton<Rational>) -> crate::error::Result<WeightedAutomaton<Rational>>,
    out: &mut String,
) -> Result<i32, Failure> {
    let (a1, a2) = (load(&p.first)?, load(&p.second)?);
    let c = op(&a1, &a2)?;
    save_or_print(&c, p.output.as_deref(), out)?;
    if p.output.is_some() {
        out.push_str(&format!("{} states\n", c.states()));
    }
    Ok(EXIT_OK)
}
