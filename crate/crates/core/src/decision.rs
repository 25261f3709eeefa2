//! Zeroness and equivalence with witness words, plus brute-force evaluation.
//!
//! An automaton is zero iff its forward space is orthogonal to `η`, and it
//! suffices to test the basis vectors. The basis words double as candidate
//! witnesses; they have length at most `n - 1`. Equivalence reduces to
//! zeroness of the difference automaton, so counterexamples have length at
//! most `n1 + n2 - 1`.

use crate::automaton::{Word, WeightedAutomaton};
use crate::budget::OracleBudget;
use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::scalar::Field;
use crate::spaces::forward_basis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroVerdict {
    /// A word with non-zero value, present iff the automaton is not zero.
    pub witness: Option<Word>,
}

impl ZeroVerdict {
    pub fn is_zero(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivVerdict {
    /// A word on which the series differ, present iff they are inequivalent.
    pub counterexample: Option<Word>,
}

impl EquivVerdict {
    pub fn is_equivalent(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Decides whether `a` computes the zero series.
///
/// The witness is the first forward-basis word (in discovery order) whose
/// vector `v` has `v η ≠ 0`.
pub fn is_zero<K: Field>(a: &WeightedAutomaton<K>) -> ZeroVerdict {
    let basis = forward_basis(a);
    let witness = basis
        .pairs()
        .iter()
        .find(|(_, v)| !dot(v, a.final_weights()).is_zero())
        .map(|(w, _)| w.clone());
    ZeroVerdict { witness }
}

/// Decides whether two automata over the same alphabet are equivalent.
pub fn equivalent<K: Field>(a1: &WeightedAutomaton<K>, a2: &WeightedAutomaton<K>) -> Result<EquivVerdict> {
    let diff = a1.difference(a2)?;
    Ok(EquivVerdict {
        counterexample: is_zero(&diff).witness,
    })
}

/// Values of `a` on every word of length at most `max_len`, in
/// length-lexicographic order.
pub fn brute_force_values<K: Field>(
    a: &WeightedAutomaton<K>,
    max_len: usize,
    budget: &OracleBudget,
) -> Result<Vec<(Word, K)>> {
    let required = a.alphabet().count_words_up_to(max_len);
    if required > budget.max_words {
        return Err(Error::BudgetExceeded {
            what: "brute-force enumeration",
            required,
            limit: budget.max_words,
        });
    }
    a.alphabet()
        .words_up_to(max_len)
        .into_iter()
        .map(|w| {
            let v = a.evaluate(&w)?;
            Ok((w, v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::automaton::Alphabet;
    use crate::linalg::Matrix;
    use crate::samples::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn unary(n: usize, m: &[i64], alpha: &[i64], eta: &[i64]) -> WeightedAutomaton<Rational> {
        let m = Matrix::new(n, n, m.iter().map(|&x| q(x)).collect()).unwrap();
        let v = |x: &[i64]| x.iter().map(|&x| q(x)).collect();
        WeightedAutomaton::from_parts(sigma_a(), vec![m], v(alpha), v(eta)).unwrap()
    }

    #[test]
    fn zero_by_cancellation() {
        // s(ε) = 1 - 1, s(a) = 1 - 1: swapping keeps the cancellation.
        let a = unary(2, &[0, 1, 1, 0], &[1, -1], &[1, 1]);
        assert!(is_zero(&a).is_zero());
        let values = brute_force_values(&a, 1, &OracleBudget::default()).unwrap();
        assert!(values.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn nonzero_with_longest_allowed_witness() {
        let a = unary(2, &[0, 1, 0, 0], &[1, 0], &[0, 1]);
        let v = is_zero(&a);
        assert!(!v.is_zero());
        let w = v.witness.unwrap();
        assert_eq!(w.to_string(), "a");
        assert_eq!(a.evaluate(&w).unwrap(), q(1));
    }

    #[test]
    fn zero_state_is_zero() {
        assert!(is_zero(&WeightedAutomaton::<Rational>::zero(sigma_a())).is_zero());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&doubling(), &redundant_doubling()).unwrap().is_equivalent());
        let v = equivalent(&doubling(), &tripling()).unwrap();
        assert_eq!(v.counterexample.unwrap().to_string(), "a");
        let d = doubling();
        assert!(equivalent(&d, &d).unwrap().is_equivalent());
        let other = WeightedAutomaton::<Rational>::zero(Alphabet::from_tokens(&["b"]).unwrap());
        assert!(matches!(equivalent(&d, &other), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn brute_force_examples() {
        let budget = OracleBudget::default();
        let vals: Vec<(String, Rational)> = brute_force_values(&doubling(), 2, &budget)
            .unwrap()
            .into_iter()
            .map(|(w, v)| (w.to_string(), v))
            .collect();
        assert_eq!(vals, vec![("ε".into(), q(1)), ("a".into(), q(2)), ("a.a".into(), q(4))]);

        let z = WeightedAutomaton::<Rational>::zero(sigma_a());
        assert!(brute_force_values(&z, 2, &budget).unwrap().iter().all(|(_, v)| v.is_zero()));

        let counts: Vec<Rational> = brute_force_values(&counting(), 3, &budget)
            .unwrap()
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        assert_eq!(counts, vec![q(0), q(1), q(2), q(3)]);
    }

    #[test]
    fn brute_force_respects_budget() {
        let sigma = Alphabet::from_tokens(&["a", "b"]).unwrap();
        let z = WeightedAutomaton::<Rational>::zero(sigma);
        let tight = OracleBudget { max_words: 6, ..OracleBudget::default() };
        assert!(matches!(
            brute_force_values(&z, 2, &tight),
            Err(Error::BudgetExceeded { required: 7, limit: 6, .. })
        ));
        assert_eq!(brute_force_values(&z, 1, &tight).unwrap().len(), 3);
    }
}
