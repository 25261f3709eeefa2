//! Forward and backward spaces of an automaton, computed by a breadth-first
//! worklist that records a witness word for every basis vector.
//!
//! The forward space is spanned by the row vectors `α M(w)`, the backward
//! space by the column vectors `M(w) η`. Each is the smallest space that
//! contains its seed (`α` resp. `η`) and is closed under the transition
//! matrices, so it suffices to extend newly found basis vectors by one letter
//! until nothing new appears.

use std::collections::VecDeque;

use crate::automaton::{Word, WeightedAutomaton};
use crate::error::Result;
use crate::linalg::{is_zero_vector, EchelonBasis, Matrix};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// A basis of the forward or backward space together with, for every basis
/// vector, a word that produces it.
///
/// Pairs are in discovery order, which is length-lexicographic: the empty
/// word first, then children in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordVectorBasis<K> {
    direction: Direction,
    pairs: Vec<(Word, Vec<K>)>,
    echelon: EchelonBasis<K>,
}

impl<K: Field> WordVectorBasis<K> {
    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn pairs(&self) -> &[(Word, Vec<K>)] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ambient_dim()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.pairs.iter().map(|(w, _)| w)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<K>> + '_ {
        self.pairs.iter().map(|(_, v)| v)
    }

    /// The reduced echelon form of the same span.
    pub fn echelon(&self) -> &EchelonBasis<K> {
        &self.echelon
    }

    pub fn contains(&self, v: &[K]) -> Result<bool> {
        self.echelon.contains(v)
    }

    /// The base matrix: basis vectors as rows (forward, `dim x n`) or as
    /// columns (backward, `n x dim`).
    pub fn base_matrix(&self) -> Matrix<K> {
        let n = self.ambient_dim();
        let vectors: Vec<&[K]> = self.pairs.iter().map(|(_, v)| v.as_slice()).collect();
        let rows = Matrix::from_rows(n, &vectors).expect("basis vectors have the ambient length");
        match self.direction {
            Direction::Forward => rows,
            Direction::Backward => rows.transpose(),
        }
    }
}

/// Basis of the forward space `⟨α M(w) | w ∈ Σ*⟩`.
///
/// Empty when `α = 0`. The queue is FIFO and children are generated in
/// alphabet order, so every word has length at most `dim - 1`.
pub fn forward_basis<K: Field>(a: &WeightedAutomaton<K>) -> WordVectorBasis<K> {
    worklist(a, Direction::Forward)
}

/// Basis of the backward space `⟨M(w) η | w ∈ Σ*⟩`.
///
/// Mirror image of [`forward_basis`]: a vector `v` is extended to `M(a) v`
/// and its word `w` to `a·w`.
pub fn backward_basis<K: Field>(a: &WeightedAutomaton<K>) -> WordVectorBasis<K> {
    worklist(a, Direction::Backward)
}

fn worklist<K: Field>(a: &WeightedAutomaton<K>, direction: Direction) -> WordVectorBasis<K> {
    let n = a.states();
    let seed = match direction {
        Direction::Forward => a.initial(),
        Direction::Backward => a.final_weights(),
    };
    let mut basis = WordVectorBasis {
        direction,
        pairs: Vec::new(),
        echelon: EchelonBasis::new(n),
    };
    if is_zero_vector(seed) {
        return basis;
    }

    // Dimensions are consistent by construction of `WeightedAutomaton`.
    let step = |v: &[K], m: &Matrix<K>| -> Vec<K> {
        match direction {
            Direction::Forward => m.left_apply(v),
            Direction::Backward => m.right_apply(v),
        }
        .expect("dimensions checked at construction")
    };

    basis.echelon.insert(seed).expect("seed has length n");
    basis.pairs.push((Word::empty(), seed.to_vec()));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if basis.pairs.len() == n {
            break;
        }
        let (w, v) = basis.pairs[i].clone();
        for (sym, m) in a.letters() {
            let next = step(&v, m);
            if basis.echelon.insert(&next).expect("length n") {
                let word = match direction {
                    Direction::Forward => w.append(sym),
                    Direction::Backward => w.prepend(sym),
                };
                basis.pairs.push((word, next));
                queue.push_back(basis.pairs.len() - 1);
            }
        }
    }
    basis
}
