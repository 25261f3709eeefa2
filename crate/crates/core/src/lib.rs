//! Exact algorithms for weighted automata over a field.
//!
//! A weighted automaton `(n, Σ, M, α, η)` assigns every word `w` the value
//! `α M(w) η`. This crate evaluates automata, combines them (sum, difference,
//! pointwise product), computes forward and backward spaces with witness
//! words, decides zeroness and equivalence with counterexamples, minimizes by
//! conjugating twice, builds Hankel automata, and offers a Gram-matrix route
//! to the forward space for cross-checking.
//!
//! Everything is generic over an exact [`Field`]; [`Rational`] (arbitrary
//! precision) is the default and the one the file format and CLI use.
//!
//! ```
//! use multiplicity::samples::{doubling, redundant_doubling};
//! use multiplicity::{equivalent, minimize};
//!
//! let a = redundant_doubling();
//! assert_eq!(a.evaluate_str("aaa").unwrap().to_string(), "8");
//! assert!(equivalent(&a, &doubling()).unwrap().is_equivalent());
//! assert_eq!(minimize(&a).states(), 1);
//! ```

pub mod automaton;
pub mod budget;
pub mod cli;
pub mod conjugate;
pub mod decision;
pub mod error;
pub mod format;
pub mod gram;
pub mod hankel;
pub mod linalg;
pub mod oracles;
pub mod samples;
pub mod scalar;
pub mod spaces;

pub use automaton::{difference, evaluate, hadamard, sum, Alphabet, Symbol, WeightedAutomaton, Word};
pub use budget::OracleBudget;
pub use conjugate::{
    backward_conjugate, conjugacy_witness, forward_conjugate, is_minimal, minimize, ConjugacyWitness, Conjugate,
};
pub use decision::{brute_force_values, equivalent, is_zero, EquivVerdict, ZeroVerdict};
pub use error::{Error, Result};
pub use format::{parse_automaton, print_automaton};
pub use gram::{gram_equivalent, gram_forward_basis, gram_is_zero, gram_matrix, GramMatrix};
pub use hankel::{hankel_automaton, hankel_block, series_rank, CompleteSet, HankelAutomaton, HankelBlock};
pub use linalg::{invert, kronecker, mat_mul, rank, solve_left, solve_right, EchelonBasis, Matrix};
pub use scalar::{parse_rational, Field};
pub use spaces::{backward_basis, forward_basis, Direction, WordVectorBasis};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Rational with `i64` parts; panics on overflow.
pub type Rational64 = num_rational::Ratio<i64>;

pub type RatMatrix = Matrix<Rational>;
pub type RatAutomaton = WeightedAutomaton<Rational>;
pub type RatEchelonBasis = EchelonBasis<Rational>;
pub type RatWordVectorBasis = WordVectorBasis<Rational>;
