//! Forward-space bases from the Gram matrix `E = Fᵀ F`, where `F` stacks the
//! rows `α M(w)` for all `w` of length below `n`.
//!
//! `E` has the same row space as `F`, and its entries satisfy
//!
//! ```text
//! E[i][j] = (α ⊗ α) (Σ_{k<n} S^k) (e_i ⊗ e_j),   S = Σ_a M(a) ⊗ M(a)
//! ```
//!
//! This is a second route to the forward space that avoids the worklist, and
//! is used to cross-check it. The power sum is accumulated on the `n²`-vector
//! `(α ⊗ α) S^k`, never on `S^k` itself.

use crate::automaton::WeightedAutomaton;
use crate::budget::OracleBudget;
use crate::error::{Error, Result};
use crate::linalg::{dot, EchelonBasis, Matrix};
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct GramMatrix<K> {
    pub e: Matrix<K>,
}

fn check_budget(states: usize, budget: &OracleBudget) -> Result<()> {
    if states > budget.max_gram_states {
        return Err(Error::BudgetExceeded {
            what: "Gram matrix",
            required: states as u128,
            limit: budget.max_gram_states as u128,
        });
    }
    Ok(())
}

/// `v (A ⊗ A)` for an `n²` row vector `v`, without forming `A ⊗ A`.
///
/// Reading `v` as the row-major `n x n` matrix `V`, the product is the
/// row-major reading of `Aᵀ V A`.
fn apply_kron_square<K: Field>(v: &Matrix<K>, a: &Matrix<K>) -> Matrix<K> {
    let va = crate::linalg::mat_mul(v, a).expect("square, same size");
    crate::linalg::mat_mul(&a.transpose(), &va).expect("square, same size")
}

/// The Gram matrix of the forward space.
pub fn gram_matrix<K: Field>(a: &WeightedAutomaton<K>, budget: &OracleBudget) -> Result<GramMatrix<K>> {
    let n = a.states();
    check_budget(n, budget)?;
    // (α ⊗ α) as an n x n matrix is the outer product αᵀ α.
    let alpha_col = Matrix::column_vector(a.initial());
    let alpha_row = Matrix::row_vector(a.initial());
    let mut term = crate::linalg::mat_mul(&alpha_col, &alpha_row)?;
    let mut acc = term.clone();
    for _ in 1..n {
        let mut next = Matrix::zeros(n, n);
        for m in a.transitions() {
            next = next.add(&apply_kron_square(&term, m))?;
        }
        term = next;
        acc = acc.add(&term)?;
    }
    Ok(GramMatrix { e: acc })
}

/// Rows of `E` that raise the rank of the rows before them; together they
/// form a basis of the forward space.
pub fn gram_forward_basis<K: Field>(a: &WeightedAutomaton<K>, budget: &OracleBudget) -> Result<Vec<Vec<K>>> {
    let g = gram_matrix(a, budget)?;
    let mut echelon = EchelonBasis::new(a.states());
    let mut selected = Vec::new();
    for row in g.e.row_iter() {
        if echelon.insert(row)? {
            selected.push(row.to_vec());
        }
    }
    Ok(selected)
}

/// Zeroness via the Gram basis. No witness word is produced.
pub fn gram_is_zero<K: Field>(a: &WeightedAutomaton<K>, budget: &OracleBudget) -> Result<bool> {
    Ok(gram_forward_basis(a, budget)?
        .iter()
        .all(|v| dot(v, a.final_weights()).is_zero()))
}

/// Equivalence via [`gram_is_zero`] of the difference automaton.
pub fn gram_equivalent<K: Field>(
    a1: &WeightedAutomaton<K>,
    a2: &WeightedAutomaton<K>,
    budget: &OracleBudget,
) -> Result<bool> {
    let diff = a1.difference(a2)?;
    gram_is_zero(&diff, budget)
}

impl<K: Field> std::fmt::Debug for GramMatrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GramMatrix")
            .field("e", &self.e)
            .finish()
    }
}
