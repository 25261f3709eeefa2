//! Forward and backward conjugates, minimization, and conjugacy witnesses.
//!
//! Let `F` be a matrix whose rows form a basis of the forward space. Because
//! the space is closed under every `M(a)`, there are unique matrices `M→(a)`
//! with `F M(a) = M→(a) F`, and a unique `α→` with `α→ F = α`. The forward
//! conjugate `(dim, Σ, M→, α→, F η)` computes the same series and is
//! forward-minimal. Dually, a basis `B` of the backward space gives
//! `M(a) B = B M←(a)`, `B η← = η` and the backward conjugate
//! `(dim, Σ, M←, α B, η←)`.
//!
//! The backward conjugate of a forward-minimal automaton is minimal, so
//! conjugating twice minimizes.

use crate::automaton::WeightedAutomaton;
use crate::decision::equivalent;
use crate::error::{Error, Result};
use crate::linalg::{invert, mat_mul, solve_left, solve_right, Matrix};
use crate::scalar::Field;
use crate::spaces::{backward_basis, forward_basis, Direction};

/// A conjugate automaton together with the base it was computed from.
#[derive(Clone, PartialEq, Eq)]
pub struct Conjugate<K> {
    pub automaton: WeightedAutomaton<K>,
    /// `F` (`dim x n`, rows span the forward space) or `B` (`n x dim`,
    /// columns span the backward space).
    pub base: Matrix<K>,
    pub direction: Direction,
}

/// Invertible `Q` with `α1 = α2 Q`, `Q η1 = η2` and `Q M1(a) = M2(a) Q`.
#[derive(Clone, PartialEq, Eq)]
pub struct ConjugacyWitness<K> {
    pub q: Matrix<K>,
}

fn solved<T>(r: Result<T>) -> T {
    // The spaces are invariant and the bases independent, so these systems
    // always have exactly one solution.
    r.expect("conjugate system is uniquely solvable")
}

/// The forward conjugate with base `F` stacked from [`forward_basis`] in
/// discovery order.
pub fn forward_conjugate<K: Field>(a: &WeightedAutomaton<K>) -> Conjugate<K> {
    let basis = forward_basis(a);
    let f = basis.base_matrix();
    let transitions = a
        .transitions()
        .iter()
        .map(|m| solved(solve_left(&f, &solved(mat_mul(&f, m)))))
        .collect();
    let initial = if basis.is_empty() {
        Vec::new()
    } else {
        solved(solve_left(&f, &Matrix::row_vector(a.initial()))).row(0).to_vec()
    };
    let final_weights = solved(f.right_apply(a.final_weights()));
    let automaton = solved(WeightedAutomaton::from_parts(
        a.alphabet().clone(),
        transitions,
        initial,
        final_weights,
    ));
    Conjugate {
        automaton,
        base: f,
        direction: Direction::Forward,
    }
}

/// The backward conjugate with base `B` whose columns come from
/// [`backward_basis`] in discovery order.
pub fn backward_conjugate<K: Field>(a: &WeightedAutomaton<K>) -> Conjugate<K> {
    let basis = backward_basis(a);
    let b = basis.base_matrix();
    let transitions = a
        .transitions()
        .iter()
        .map(|m| solved(solve_right(&b, &solved(mat_mul(m, &b)))))
        .collect();
    let final_weights = if basis.is_empty() {
        Vec::new()
    } else {
        solved(solve_right(&b, &Matrix::column_vector(a.final_weights()))).column(0)
    };
    let initial = solved(b.left_apply(a.initial()));
    let automaton = solved(WeightedAutomaton::from_parts(
        a.alphabet().clone(),
        transitions,
        initial,
        final_weights,
    ));
    Conjugate {
        automaton,
        base: b,
        direction: Direction::Backward,
    }
}

/// A minimal automaton equivalent to `a`: the backward conjugate of the
/// forward conjugate.
pub fn minimize<K: Field>(a: &WeightedAutomaton<K>) -> WeightedAutomaton<K> {
    backward_conjugate(&forward_conjugate(a).automaton).automaton
}

/// Minimization in the other order (forward conjugate of the backward
/// conjugate). Gives an automaton of the same size as [`minimize`].
pub fn minimize_backward_first<K: Field>(a: &WeightedAutomaton<K>) -> WeightedAutomaton<K> {
    forward_conjugate(&backward_conjugate(a).automaton).automaton
}

/// Whether the forward and backward spaces both have full dimension.
pub fn is_minimal<K: Field>(a: &WeightedAutomaton<K>) -> bool {
    let n = a.states();
    forward_basis(a).dim() == n && backward_basis(a).dim() == n
}

/// Finds the change of basis relating two minimal equivalent automata.
///
/// With `W` the forward-basis words of `a1`, the rows `α_i M_i(w)` for
/// `w ∈ W` form invertible matrices `F1`, `F2`, and `Q = F2⁻¹ F1`.
pub fn conjugacy_witness<K: Field>(
    a1: &WeightedAutomaton<K>,
    a2: &WeightedAutomaton<K>,
) -> Result<ConjugacyWitness<K>> {
    if !is_minimal(a1) {
        return Err(Error::NotMinimal(1));
    }
    if !is_minimal(a2) {
        return Err(Error::NotMinimal(2));
    }
    if let Some(w) = equivalent(a1, a2)?.counterexample {
        return Err(Error::NotEquivalent { counterexample: w });
    }
    let n = a1.states();
    let words: Vec<_> = forward_basis(a1).words().cloned().collect();
    let rows = |a: &WeightedAutomaton<K>| -> Result<Matrix<K>> {
        let vs = words
            .iter()
            .map(|w| a.forward_vector(w))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(n, &vs)
    };
    let f1 = rows(a1)?;
    let f2 = rows(a2)?;
    let f2_inv = invert(&f2).map_err(|_| {
        Error::InvariantViolation("second automaton's rows on the basis words are singular".into())
    })?;
    let q = mat_mul(&f2_inv, &f1)?;
    let witness = ConjugacyWitness { q };
    if !witness.holds(a1, a2)? {
        return Err(Error::InvariantViolation(
            "computed conjugacy matrix does not satisfy the defining identities".into(),
        ));
    }
    Ok(witness)
}

impl<K: Field> ConjugacyWitness<K> {
    /// Checks `α1 = α2 Q`, `Q η1 = η2`, `Q M1(a) = M2(a) Q` for all `a`, and
    /// that `Q` is invertible.
    pub fn holds(&self, a1: &WeightedAutomaton<K>, a2: &WeightedAutomaton<K>) -> Result<bool> {
        let q = &self.q;
        if a1.alphabet() != a2.alphabet()
            || q.rows() != a2.states()
            || q.cols() != a1.states()
            || invert(q).is_err()
        {
            return Ok(false);
        }
        if q.left_apply(a2.initial())? != a1.initial() {
            return Ok(false);
        }
        if q.right_apply(a1.final_weights())? != a2.final_weights() {
            return Ok(false);
        }
        for (m1, m2) in a1.transitions().iter().zip(a2.transitions()) {
            if mat_mul(q, m1)? != mat_mul(m2, q)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<K: Field> std::fmt::Debug for Conjugate<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Conjugate")
            .field("automaton", &self.automaton)
            .field("base", &self.base)
            .field("direction", &self.direction)
            .finish()
    }
}

impl<K: Field> std::fmt::Debug for ConjugacyWitness<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConjugacyWitness")
            .field("q", &self.q)
            .finish()
    }
}
