//! Seeded random automata and brute-force oracles for property tests.
//!
//! The oracles here deliberately take the long way round (enumerate words,
//! evaluate every concatenation, stack explicit matrices) so they share no
//! code path with the algorithms they are used to check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, Symbol, Word, WeightedAutomaton};
use crate::linalg::{invert, mat_mul, rank, Matrix};
use crate::scalar::Field;

/// Parameters for random automata. Generation is a deterministic function of
/// these fields.
#[derive(Clone, Debug, PartialEq)]
pub struct AutomatonGenerator {
    pub min_states: usize,
    pub max_states: usize,
    /// Symbols are `a`, `b`, `c`, ...
    pub alphabet_size: usize,
    /// Non-zero entries are drawn uniformly from these `(numer, denom)`
    /// pairs.
    pub entry_pool: Vec<(i64, i64)>,
    /// Probability that an entry is drawn from the pool rather than set to 0.
    pub density: f64,
    pub seed: u64,
}

impl AutomatonGenerator {
    pub fn new(seed: u64) -> Self {
        let entry_pool = (-3..=3)
            .flat_map(|n| (1..=2).map(move |d| (n, d)))
            .collect();
        Self {
            min_states: 0,
            max_states: 3,
            alphabet_size: 2,
            entry_pool,
            density: 0.6,
            seed,
        }
    }

    pub fn states(mut self, min: usize, max: usize) -> Self {
        self.min_states = min;
        self.max_states = max;
        self
    }

    pub fn alphabet_size(mut self, size: usize) -> Self {
        self.alphabet_size = size;
        self
    }

    pub fn density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    pub fn alphabet(&self) -> Alphabet {
        let symbols = (0..self.alphabet_size).map(|i| {
            let token = if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("s{i}")
            };
            Symbol::new(token).expect("generated tokens are valid")
        });
        Alphabet::new(symbols).expect("generated tokens are distinct")
    }

    /// A stream of automata drawn from one seeded RNG.
    pub fn sampler(&self) -> Sampler {
        Sampler {
            config: self.clone(),
            rng: ChaCha8Rng::seed_from_u64(self.seed),
        }
    }
}

/// A seeded stream of random automata and related objects.
#[derive(Clone, Debug)]
pub struct Sampler {
    config: AutomatonGenerator,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn config(&self) -> &AutomatonGenerator {
        &self.config
    }

    fn entry<K: Field>(&mut self, density: f64) -> K {
        if self.config.entry_pool.is_empty() || !self.rng.random_bool(density.clamp(0.0, 1.0)) {
            return K::zero();
        }
        let (n, d) = self.config.entry_pool[self.rng.random_range(0..self.config.entry_pool.len())];
        K::from_ratio(n, d)
    }

    fn vector<K: Field>(&mut self, n: usize, density: f64) -> Vec<K> {
        (0..n).map(|_| self.entry(density)).collect()
    }

    pub fn matrix<K: Field>(&mut self, rows: usize, cols: usize) -> Matrix<K> {
        let density = self.config.density;
        Matrix::new(rows, cols, self.vector(rows * cols, density)).expect("sized")
    }

    pub fn states(&mut self) -> usize {
        let (lo, hi) = (self.config.min_states, self.config.max_states.max(self.config.min_states));
        self.rng.random_range(lo..=hi)
    }

    pub fn automaton<K: Field>(&mut self) -> WeightedAutomaton<K> {
        let n = self.states();
        self.automaton_with_states(n)
    }

    pub fn automaton_with_states<K: Field>(&mut self, n: usize) -> WeightedAutomaton<K> {
        let alphabet = self.config.alphabet();
        let transitions = (0..alphabet.len()).map(|_| self.matrix(n, n)).collect();
        let density = self.config.density;
        let initial = self.vector(n, density);
        let final_weights = self.vector(n, density);
        WeightedAutomaton::from_parts(alphabet, transitions, initial, final_weights)
            .expect("generated automata are well-formed")
    }

    /// A random invertible `n x n` matrix with fully dense entries from the
    /// pool.
    pub fn invertible<K: Field>(&mut self, n: usize) -> Matrix<K> {
        loop {
            let m = Matrix::new(n, n, self.vector(n * n, 1.0)).expect("sized");
            if rank(&m) == n {
                return m;
            }
        }
    }

    /// A random automaton and a copy transformed by a random change of basis.
    pub fn planted_pair<K: Field>(&mut self) -> (WeightedAutomaton<K>, WeightedAutomaton<K>) {
        let a = self.automaton();
        let p = self.invertible(a.states());
        let b = change_basis(&a, &p);
        (a, b)
    }
}

/// `random_automaton(gen)`: the first automaton of the generator's stream.
pub fn random_automaton<K: Field>(gen: &AutomatonGenerator) -> WeightedAutomaton<K> {
    gen.sampler().automaton()
}

/// `plant_equivalent_pair(gen)`: the first planted pair of the stream.
pub fn plant_equivalent_pair<K: Field>(gen: &AutomatonGenerator) -> (WeightedAutomaton<K>, WeightedAutomaton<K>) {
    gen.sampler().planted_pair()
}

/// The automaton `(α P⁻¹, P M(a) P⁻¹, P η)`, which is equivalent to `a` and
/// related to it by the conjugacy matrix `P`.
pub fn change_basis<K: Field>(a: &WeightedAutomaton<K>, p: &Matrix<K>) -> WeightedAutomaton<K> {
    let p_inv = invert(p).expect("base change must be invertible");
    let transitions = a
        .transitions()
        .iter()
        .map(|m| mat_mul(&mat_mul(p, m).expect("sized"), &p_inv).expect("sized"))
        .collect();
    let initial = p_inv.left_apply(a.initial()).expect("sized");
    let final_weights = p.right_apply(a.final_weights()).expect("sized");
    WeightedAutomaton::from_parts(a.alphabet().clone(), transitions, initial, final_weights)
        .expect("shapes preserved")
}

/// `α M(w) η` by multiplying out the explicit matrix product.
pub fn naive_value<K: Field>(a: &WeightedAutomaton<K>, w: &Word) -> K {
    let n = a.states();
    let mut m = Matrix::identity(n);
    for s in w.symbols() {
        let t = a.transition(s).expect("word over the automaton's alphabet");
        m = mat_mul(&m, t).expect("square");
    }
    let alpha = Matrix::row_vector(a.initial());
    let eta = Matrix::column_vector(a.final_weights());
    let v = mat_mul(&mat_mul(&alpha, &m).expect("sized"), &eta).expect("sized");
    if n == 0 {
        K::zero()
    } else {
        v[(0, 0)].clone()
    }
}

/// Whether the two series agree on every word of length at most `max_len`;
/// returns the first disagreement otherwise.
pub fn first_disagreement<K: Field>(
    a1: &WeightedAutomaton<K>,
    a2: &WeightedAutomaton<K>,
    max_len: usize,
) -> Option<Word> {
    a1.alphabet()
        .words_up_to(max_len)
        .into_iter()
        .find(|w| naive_value(a1, w) != naive_value(a2, w))
}

/// Rank of `H[Σ^{≤L}, Σ^{≤L}]` with `L = max(n - 1, 0)`, every entry
/// evaluated as `s(xy)`. For an `n`-state automaton this equals the rank of
/// the whole Hankel matrix.
pub fn hankel_rank_oracle<K: Field>(a: &WeightedAutomaton<K>) -> usize {
    let words = a.alphabet().words_up_to(a.states().saturating_sub(1));
    let k = words.len();
    let mut data = Vec::with_capacity(k * k);
    for x in &words {
        for y in &words {
            data.push(naive_value(a, &x.concat(y)));
        }
    }
    rank(&Matrix::new(k, k, data).expect("sized"))
}

/// `Fᵀ F` with `F` the explicit stack of `α M(w)` over `w ∈ Σ^{≤n-1}`.
pub fn enumerated_gram<K: Field>(a: &WeightedAutomaton<K>) -> Matrix<K> {
    let n = a.states();
    let words = a.alphabet().words_up_to(n.saturating_sub(1));
    let rows: Vec<Vec<K>> = words
        .iter()
        .map(|w| {
            let alpha = Matrix::row_vector(a.initial());
            let mut v = alpha;
            for s in w.symbols() {
                v = mat_mul(&v, a.transition(s).expect("known symbol")).expect("sized");
            }
            v.row(0).to_vec()
        })
        .collect();
    let f = Matrix::from_rows(n, &rows).expect("sized");
    mat_mul(&f.transpose(), &f).expect("sized")
}

/// Naive forward-space basis: repeatedly rescan the whole word set for any
/// one-letter extension outside the current span, restarting after each
/// addition.
pub fn restart_scan_forward_basis<K: Field>(a: &WeightedAutomaton<K>) -> Vec<(Word, Vec<K>)> {
    let n = a.states();
    let vec_of = |w: &Word| -> Vec<K> {
        let mut v = Matrix::row_vector(a.initial());
        for s in w.symbols() {
            v = mat_mul(&v, a.transition(s).expect("known symbol")).expect("sized");
        }
        if n == 0 {
            Vec::new()
        } else {
            v.row(0).to_vec()
        }
    };
    if a.initial().iter().all(K::is_zero) {
        return Vec::new();
    }
    let mut found = vec![(Word::empty(), a.initial().to_vec())];
    'outer: loop {
        let current = Matrix::from_rows(n, &found.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>()).expect("sized");
        let r = rank(&current);
        for (w, _) in found.clone() {
            for s in a.alphabet().symbols() {
                let wa = w.append(s);
                let mut rows: Vec<Vec<K>> = found.iter().map(|(_, v)| v.clone()).collect();
                let v = vec_of(&wa);
                rows.push(v.clone());
                if rank(&Matrix::from_rows(n, &rows).expect("sized")) > r {
                    found.push((wa, v));
                    continue 'outer;
                }
            }
        }
        return found;
    }
}
