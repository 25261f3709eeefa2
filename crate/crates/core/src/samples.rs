//! Small named automata over `{a}` used throughout the docs and tests.

use crate::automaton::{Alphabet, WeightedAutomaton};
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn unary(n: usize, m: &[Rational], initial: Vec<Rational>, final_weights: Vec<Rational>) -> WeightedAutomaton<Rational> {
    let m = Matrix::new(n, n, m.to_vec()).expect("square");
    WeightedAutomaton::from_parts(sigma_a(), vec![m], initial, final_weights).expect("valid sample")
}

/// The alphabet `{a}`.
pub fn sigma_a() -> Alphabet {
    Alphabet::from_tokens(&["a"]).expect("valid alphabet")
}

/// One state, `a^k ↦ 2^k`.
pub fn doubling() -> WeightedAutomaton<Rational> {
    unary(1, &[q(2, 1)], vec![q(1, 1)], vec![q(1, 1)])
}

/// One state, `a^k ↦ 3^k`.
pub fn tripling() -> WeightedAutomaton<Rational> {
    unary(1, &[q(3, 1)], vec![q(1, 1)], vec![q(1, 1)])
}

/// Two states with `α = (1/2, 1/2)`, `M(a) = 2I`, `η = (1, 1)`: the doubling
/// series again.
pub fn redundant_doubling() -> WeightedAutomaton<Rational> {
    unary(
        2,
        &[q(2, 1), q(0, 1), q(0, 1), q(2, 1)],
        vec![q(1, 2), q(1, 2)],
        vec![q(1, 1), q(1, 1)],
    )
}

/// Two states, `a^k ↦ k`.
pub fn counting() -> WeightedAutomaton<Rational> {
    unary(
        2,
        &[q(1, 1), q(1, 1), q(0, 1), q(1, 1)],
        vec![q(1, 1), q(0, 1)],
        vec![q(0, 1), q(1, 1)],
    )
}
