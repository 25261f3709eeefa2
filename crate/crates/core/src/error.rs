use thiserror::Error;

use crate::automaton::Word;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system has no unique solution")]
    NotUnique,
    #[error("matrix is singular")]
    Singular,
    #[error("invalid symbol {0:?}: symbols are non-empty and contain no whitespace, '.', ',' or quotes")]
    InvalidSymbol(String),
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("alphabets differ: {{{left}}} vs {{{right}}}")]
    AlphabetMismatch { left: String, right: String },
    #[error("{what} needs {required}, budget is {limit}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("automaton {0} is not minimal")]
    NotMinimal(usize),
    #[error("automata are not equivalent (they differ on {counterexample})")]
    NotEquivalent { counterexample: Word },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
