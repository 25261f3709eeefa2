//! Weighted automata `(n, Σ, M, α, η)` and their closure constructions.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, kronecker, kronecker_vec, Matrix};
use crate::scalar::Field;

/// A letter of the alphabet: a non-empty token without whitespace, `.`, `,`
/// or quote characters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        let bad = |c: char| c.is_whitespace() || matches!(c, '.' | ',' | '"' | '\'' | '`');
        if token.is_empty() || token.chars().any(bad) {
            return Err(Error::InvalidSymbol(token));
        }
        Ok(Self(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite word; the empty word is ε.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self · a`
    pub fn append(&self, a: &Symbol) -> Word {
        let mut v = self.0.clone();
        v.push(a.clone());
        Word(v)
    }

    /// `a · self`
    pub fn prepend(&self, a: &Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a.clone());
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Parses a word over `alphabet`.
    ///
    /// Accepted forms: symbols joined by `.` (`a.b.a`); a single symbol;
    /// plain concatenation (`aba`) when every symbol is one character; the
    /// empty string or `ε` for the empty word.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Word> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let lookup = |tok: &str| {
            alphabet
                .get(tok)
                .cloned()
                .ok_or_else(|| Error::UnknownSymbol(tok.to_string()))
        };
        if text.contains('.') {
            return text.split('.').map(lookup).collect::<Result<_>>().map(Word);
        }
        if let Some(a) = alphabet.get(text) {
            return Ok(Word(vec![a.clone()]));
        }
        if text == "ε" {
            return Ok(Word::empty());
        }
        if alphabet.is_single_char() {
            let mut buf = [0u8; 4];
            return text
                .chars()
                .map(|c| lookup(c.encode_utf8(&mut buf)))
                .collect::<Result<_>>()
                .map(Word);
        }
        Err(Error::UnknownSymbol(text.to_string()))
    }
}

impl fmt::Display for Word {
    /// Dotted form (`a.b.a`); the empty word prints as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A finite alphabet, kept sorted by token.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<Symbol>);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Result<Self> {
        let mut v: Vec<Symbol> = symbols.into_iter().collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSymbol(w[0].0.clone()));
        }
        Ok(Self(v))
    }

    /// Alphabet from string tokens.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        Self::new(
            tokens
                .iter()
                .map(|t| Symbol::new(t.as_ref()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.0.binary_search_by(|s| s.as_str().cmp(token)).ok()
    }

    pub fn get(&self, token: &str) -> Option<&Symbol> {
        self.index_of(token).map(|i| &self.0[i])
    }

    fn is_single_char(&self) -> bool {
        self.0.iter().all(|s| s.0.chars().count() == 1)
    }

    /// Alphabet positions of the letters of `w`.
    pub fn indices(&self, w: &Word) -> Result<Vec<usize>> {
        w.symbols()
            .iter()
            .map(|s| {
                self.index_of(s.as_str())
                    .ok_or_else(|| Error::UnknownSymbol(s.0.clone()))
            })
            .collect()
    }

    /// All words of length at most `max_len` in length-lexicographic order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            if self.0.is_empty() {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|w| self.0.iter().map(move |a| w.append(a)))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Number of words of length at most `max_len`, saturating.
    pub fn count_words_up_to(&self, max_len: usize) -> u128 {
        let k = self.0.len() as u128;
        let mut total: u128 = 0;
        let mut layer: u128 = 1;
        for _ in 0..=max_len {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(k);
            if layer == 0 {
                break;
            }
        }
        total
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A weighted automaton `(n, Σ, M, α, η)` over the field `K`.
///
/// Its series maps a word `w` to `α M(w) η`, where `M` is extended to words
/// multiplicatively and `M(ε) = I`. With `n = 0` the series is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedAutomaton<K> {
    alphabet: Alphabet,
    /// Indexed by alphabet position.
    transitions: Vec<Matrix<K>>,
    initial: Vec<K>,
    final_weights: Vec<K>,
}

impl<K: Field> WeightedAutomaton<K> {
    /// Validating constructor. `transitions` must give exactly one `n x n`
    /// matrix per alphabet symbol, in any order.
    pub fn new(
        alphabet: Alphabet,
        transitions: impl IntoIterator<Item = (Symbol, Matrix<K>)>,
        initial: Vec<K>,
        final_weights: Vec<K>,
    ) -> Result<Self> {
        let n = initial.len();
        if final_weights.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "initial vector has length {n}, final vector has length {}",
                final_weights.len()
            )));
        }
        let mut slots: Vec<Option<Matrix<K>>> = vec![None; alphabet.len()];
        for (a, m) in transitions {
            let i = alphabet
                .index_of(a.as_str())
                .ok_or_else(|| Error::UnknownSymbol(a.0.clone()))?;
            if slots[i].is_some() {
                return Err(Error::DuplicateSymbol(a.0.clone()));
            }
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "transition matrix for `{a}` is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            slots[i] = Some(m);
        }
        let transitions = slots
            .into_iter()
            .zip(alphabet.symbols())
            .map(|(m, a)| {
                m.ok_or_else(|| {
                    Error::DimensionMismatch(format!("missing transition matrix for `{a}`"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet,
            transitions,
            initial,
            final_weights,
        })
    }

    /// Constructor taking the matrices in alphabet order.
    pub fn from_parts(
        alphabet: Alphabet,
        transitions: Vec<Matrix<K>>,
        initial: Vec<K>,
        final_weights: Vec<K>,
    ) -> Result<Self> {
        if transitions.len() != alphabet.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} transition matrices for {} symbols",
                transitions.len(),
                alphabet.len()
            )));
        }
        let pairs: Vec<_> = alphabet.symbols().iter().cloned().zip(transitions).collect();
        Self::new(alphabet, pairs, initial, final_weights)
    }

    /// The 0-state automaton over `alphabet`.
    pub fn zero(alphabet: Alphabet) -> Self {
        let transitions = vec![Matrix::zeros(0, 0); alphabet.len()];
        Self {
            alphabet,
            transitions,
            initial: Vec::new(),
            final_weights: Vec::new(),
        }
    }

    pub fn states(&self) -> usize {
        self.initial.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> &[K] {
        &self.initial
    }

    pub fn final_weights(&self) -> &[K] {
        &self.final_weights
    }

    /// Transition matrices in alphabet order.
    pub fn transitions(&self) -> &[Matrix<K>] {
        &self.transitions
    }

    pub fn transition(&self, a: &Symbol) -> Option<&Matrix<K>> {
        self.alphabet.index_of(a.as_str()).map(|i| &self.transitions[i])
    }

    pub fn transition_at(&self, index: usize) -> &Matrix<K> {
        &self.transitions[index]
    }

    /// `(symbol, matrix)` pairs in alphabet order.
    pub fn letters(&self) -> impl Iterator<Item = (&Symbol, &Matrix<K>)> + '_ {
        self.alphabet.symbols().iter().zip(&self.transitions)
    }

    /// `M(w)` as an explicit matrix.
    pub fn word_matrix(&self, w: &Word) -> Result<Matrix<K>> {
        let mut acc = Matrix::identity(self.states());
        for i in self.alphabet.indices(w)? {
            acc = linalg::mat_mul(&acc, &self.transitions[i])?;
        }
        Ok(acc)
    }

    /// `α M(w)`, computed as a left fold of vector-matrix products.
    pub fn forward_vector(&self, w: &Word) -> Result<Vec<K>> {
        let mut v = self.initial.clone();
        for i in self.alphabet.indices(w)? {
            v = self.transitions[i].left_apply(&v)?;
        }
        Ok(v)
    }

    /// `M(w) η`.
    pub fn backward_vector(&self, w: &Word) -> Result<Vec<K>> {
        let mut v = self.final_weights.clone();
        for i in self.alphabet.indices(w)?.into_iter().rev() {
            v = self.transitions[i].right_apply(&v)?;
        }
        Ok(v)
    }

    /// The series value `α M(w) η`.
    pub fn evaluate(&self, w: &Word) -> Result<K> {
        let v = self.forward_vector(w)?;
        Ok(linalg::dot(&v, &self.final_weights))
    }

    /// Evaluates a word given as text, see [`Word::parse`].
    pub fn evaluate_str(&self, w: &str) -> Result<K> {
        self.evaluate(&Word::parse(w, &self.alphabet)?)
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        Ok(())
    }

    fn block_union(&self, other: &Self, negate_second: bool) -> Result<Self> {
        self.check_alphabet(other)?;
        let transitions = self
            .transitions
            .iter()
            .zip(&other.transitions)
            .map(|(m1, m2)| m1.block_diagonal(m2))
            .collect();
        let initial = self
            .initial
            .iter()
            .cloned()
            .chain(other.initial.iter().map(|x| {
                if negate_second {
                    -x.clone()
                } else {
                    x.clone()
                }
            }))
            .collect();
        let final_weights = self
            .final_weights
            .iter()
            .chain(&other.final_weights)
            .cloned()
            .collect();
        Ok(Self {
            alphabet: self.alphabet.clone(),
            transitions,
            initial,
            final_weights,
        })
    }

    /// Automaton for the pointwise sum of the two series, with `n1 + n2`
    /// states.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.block_union(other, false)
    }

    /// Automaton for the pointwise difference: the sum construction with the
    /// second initial vector negated.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.block_union(other, true)
    }

    /// Automaton for the pointwise (Hadamard) product, with `n1 * n2` states
    /// and Kronecker-product weights.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        Ok(Self {
            alphabet: self.alphabet.clone(),
            transitions: self
                .transitions
                .iter()
                .zip(&other.transitions)
                .map(|(m1, m2)| kronecker(m1, m2))
                .collect(),
            initial: kronecker_vec(&self.initial, &other.initial),
            final_weights: kronecker_vec(&self.final_weights, &other.final_weights),
        })
    }
}

impl<K: Field> fmt::Debug for WeightedAutomaton<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_vec = |v: &[K]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        writeln!(f, "WeightedAutomaton {{ n: {}, alphabet: {:?}", self.states(), self.alphabet)?;
        writeln!(f, "  initial: [{}]", fmt_vec(&self.initial))?;
        writeln!(f, "  final: [{}]", fmt_vec(&self.final_weights))?;
        for (a, m) in self.letters() {
            writeln!(f, "  {a}: {m:?}")?;
        }
        write!(f, "}}")
    }
}

/// Free-function form of [`WeightedAutomaton::evaluate`].
pub fn evaluate<K: Field>(a: &WeightedAutomaton<K>, w: &Word) -> Result<K> {
    a.evaluate(w)
}

pub fn sum<K: Field>(a1: &WeightedAutomaton<K>, a2: &WeightedAutomaton<K>) -> Result<WeightedAutomaton<K>> {
    a1.sum(a2)
}

pub fn difference<K: Field>(
    a1: &WeightedAutomaton<K>,
    a2: &WeightedAutomaton<K>,
) -> Result<WeightedAutomaton<K>> {
    a1.difference(a2)
}

pub fn hadamard<K: Field>(
    a1: &WeightedAutomaton<K>,
    a2: &WeightedAutomaton<K>,
) -> Result<WeightedAutomaton<K>> {
    a1.hadamard(a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::samples::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn symbols_are_validated() {
        assert!(Symbol::new("a").is_ok());
        assert!(Symbol::new("tok_1").is_ok());
        for bad in ["", "a b", "a,b", "a.b", "\"", "'", "\t"] {
            assert!(Symbol::new(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn alphabet_is_sorted_and_rejects_duplicates() {
        let sigma = Alphabet::from_tokens(&["b", "a", "c"]).unwrap();
        assert_eq!(sigma.to_string(), "a, b, c");
        assert!(matches!(Alphabet::from_tokens(&["a", "a"]), Err(Error::DuplicateSymbol(_))));
    }

    #[test]
    fn words_parse_in_all_forms() {
        let sigma = Alphabet::from_tokens(&["a", "b"]).unwrap();
        let aba = Word::parse("a.b.a", &sigma).unwrap();
        assert_eq!(Word::parse("aba", &sigma).unwrap(), aba);
        assert_eq!(aba.to_string(), "a.b.a");
        assert!(Word::parse("", &sigma).unwrap().is_empty());
        assert!(Word::parse("ε", &sigma).unwrap().is_empty());
        assert!(matches!(Word::parse("abc", &sigma), Err(Error::UnknownSymbol(_))));

        let long = Alphabet::from_tokens(&["go", "stop"]).unwrap();
        assert_eq!(Word::parse("go.stop", &long).unwrap().len(), 2);
        assert_eq!(Word::parse("stop", &long).unwrap().len(), 1);
        assert!(Word::parse("gostop", &long).is_err());
    }

    #[test]
    fn words_up_to_is_length_lex() {
        let sigma = Alphabet::from_tokens(&["a", "b"]).unwrap();
        let words: Vec<String> = sigma.words_up_to(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["ε", "a", "b", "a.a", "a.b", "b.a", "b.b"]);
        assert_eq!(sigma.count_words_up_to(2), 7);
        assert_eq!(Alphabet::default().words_up_to(3).len(), 1);
        assert_eq!(Alphabet::default().count_words_up_to(3), 1);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(doubling().evaluate_str("aaa").unwrap(), q(8));
        assert_eq!(counting().evaluate_str("aaaa").unwrap(), q(4));
        let z = WeightedAutomaton::<Rational>::zero(sigma_a());
        assert_eq!(z.evaluate_str("aaa").unwrap(), q(0));
        assert_eq!(z.evaluate_str("").unwrap(), q(0));
        assert!(matches!(doubling().evaluate_str("b"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn constructor_validates_shapes() {
        let sigma = sigma_a();
        let a = Symbol::new("a").unwrap();
        assert!(WeightedAutomaton::new(sigma.clone(), [(a.clone(), Matrix::identity(2))], vec![q(1)], vec![q(1)]).is_err());
        assert!(WeightedAutomaton::<Rational>::new(sigma.clone(), [], vec![q(1)], vec![q(1)]).is_err());
        assert!(WeightedAutomaton::new(sigma.clone(), [(a.clone(), Matrix::identity(1))], vec![q(1)], vec![]).is_err());
        let b = Symbol::new("b").unwrap();
        assert!(matches!(
            WeightedAutomaton::new(sigma, [(b, Matrix::identity(1))], vec![q(1)], vec![q(1)]),
            Err(Error::UnknownSymbol(_))
        ));
    }

    #[test]
    fn sum_examples() {
        let s = doubling().sum(&doubling()).unwrap();
        assert_eq!(s.states(), 2);
        assert_eq!(s.evaluate_str("aa").unwrap(), q(8));
        let z = WeightedAutomaton::zero(sigma_a());
        let s = doubling().sum(&z).unwrap();
        for w in sigma_a().words_up_to(4) {
            assert_eq!(s.evaluate(&w).unwrap(), doubling().evaluate(&w).unwrap());
        }
    }

    #[test]
    fn difference_examples() {
        let d = doubling().difference(&counting()).unwrap();
        assert_eq!(d.evaluate_str("aaa").unwrap(), q(5));
        let z = WeightedAutomaton::zero(sigma_a());
        let d = counting().difference(&z).unwrap();
        for w in sigma_a().words_up_to(4) {
            assert_eq!(d.evaluate(&w).unwrap(), counting().evaluate(&w).unwrap());
        }
        let dd = counting().difference(&counting()).unwrap();
        for w in sigma_a().words_up_to(4) {
            assert!(dd.evaluate(&w).unwrap().is_zero());
        }
    }

    #[test]
    fn hadamard_examples() {
        let h = doubling().hadamard(&counting()).unwrap();
        assert_eq!(h.states(), 2);
        assert_eq!(h.evaluate_str("aaa").unwrap(), q(24));
        let one = WeightedAutomaton::from_parts(sigma_a(), vec![Matrix::identity(1)], vec![q(1)], vec![q(1)]).unwrap();
        let h = counting().hadamard(&one).unwrap();
        for w in sigma_a().words_up_to(4) {
            assert_eq!(h.evaluate(&w).unwrap(), counting().evaluate(&w).unwrap());
        }
    }

    #[test]
    fn combination_rejects_mixed_alphabets() {
        let other = WeightedAutomaton::<Rational>::zero(Alphabet::from_tokens(&["b"]).unwrap());
        assert!(matches!(doubling().sum(&other), Err(Error::AlphabetMismatch { .. })));
        assert!(matches!(doubling().difference(&other), Err(Error::AlphabetMismatch { .. })));
        assert!(matches!(doubling().hadamard(&other), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn backward_vector_matches_word_matrix() {
        let a = counting();
        let w = Word::parse("aaa", a.alphabet()).unwrap();
        let direct = a.word_matrix(&w).unwrap().right_apply(a.final_weights()).unwrap();
        assert_eq!(a.backward_vector(&w).unwrap(), direct);
    }
}
