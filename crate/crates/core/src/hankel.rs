//! Finite Hankel blocks, complete sets and the Hankel automaton.
//!
//! The Hankel matrix of a series `s` is the infinite matrix `H[x, y] = s(xy)`.
//! A set of words `C` is complete when the columns `H[·, C]` form a basis of
//! its column space; the Hankel automaton for `s, C` then has initial vector
//! `H[ε, C]`, transitions determined by `H[·, C] M(a) = H[·, aC]` and final
//! vector determined by `H[·, C] η = H[·, ε]`.
//!
//! The infinite matrix is never materialized: the Hankel automaton is the
//! backward conjugate of a forward-minimal equivalent automaton, with `C` the
//! words of its backward basis. Finite blocks exist for verification.

use crate::automaton::{Word, WeightedAutomaton};
use crate::budget::OracleBudget;
use crate::conjugate::{backward_conjugate, forward_conjugate, minimize};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::spaces::backward_basis;

/// The finite block `H[X, Y]` of a series' Hankel matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct HankelBlock<K> {
    pub row_words: Vec<Word>,
    pub col_words: Vec<Word>,
    pub values: Matrix<K>,
}

/// Words whose Hankel columns form a basis of the column space, ordered by
/// discovery in the backward basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompleteSet {
    pub words: Vec<Word>,
}

impl CompleteSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `w·C`
    pub fn shifted(&self, w: &Word) -> Vec<Word> {
        self.words.iter().map(|c| w.concat(c)).collect()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct HankelAutomaton<K> {
    pub automaton: WeightedAutomaton<K>,
    pub complete_set: CompleteSet,
}

/// `H[X, Y]` for the series of `a`. The block size counts against
/// `budget.max_words`.
pub fn hankel_block<K: Field>(
    a: &WeightedAutomaton<K>,
    row_words: &[Word],
    col_words: &[Word],
    budget: &OracleBudget,
) -> Result<HankelBlock<K>> {
    let required = (row_words.len() as u128).saturating_mul(col_words.len() as u128);
    if required > budget.max_words {
        return Err(Error::BudgetExceeded {
            what: "Hankel block",
            required,
            limit: budget.max_words,
        });
    }
    // s(xy) = (α M(x)) · (M(y) η): one vector per word instead of one
    // evaluation per entry.
    let fwd = row_words
        .iter()
        .map(|x| a.forward_vector(x))
        .collect::<Result<Vec<_>>>()?;
    let bwd = col_words
        .iter()
        .map(|y| a.backward_vector(y))
        .collect::<Result<Vec<_>>>()?;
    let mut data = Vec::with_capacity(fwd.len() * bwd.len());
    for u in &fwd {
        for v in &bwd {
            data.push(crate::linalg::dot(u, v));
        }
    }
    Ok(HankelBlock {
        row_words: row_words.to_vec(),
        col_words: col_words.to_vec(),
        values: Matrix::new(fwd.len(), bwd.len(), data)?,
    })
}

/// The Hankel automaton of `⟦a⟧` together with its complete set.
///
/// The result is minimal, equivalent to `a`, and every word of `C` has length
/// below `|C|`. A zero series gives the 0-state automaton and `C = ∅`.
pub fn hankel_automaton<K: Field>(a: &WeightedAutomaton<K>) -> HankelAutomaton<K> {
    let forward_minimal = forward_conjugate(a).automaton;
    let words = backward_basis(&forward_minimal).words().cloned().collect();
    let automaton = backward_conjugate(&forward_minimal).automaton;
    HankelAutomaton {
        automaton,
        complete_set: CompleteSet { words },
    }
}

/// Rank of the Hankel matrix of `⟦a⟧`, i.e. the size of a minimal equivalent
/// automaton.
pub fn series_rank<K: Field>(a: &WeightedAutomaton<K>) -> usize {
    minimize(a).states()
}

impl<K: Field> std::fmt::Debug for HankelBlock<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HankelBlock")
            .field("row_words", &self.row_words)
            .field("col_words", &self.col_words)
            .field("values", &self.values)
            .finish()
    }
}

impl<K: Field> std::fmt::Debug for HankelAutomaton<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HankelAutomaton")
            .field("automaton", &self.automaton)
            .field("complete_set", &self.complete_set)
            .finish()
    }
}
