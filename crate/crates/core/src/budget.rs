/// Size limits for the operations whose cost is exponential (brute-force
/// enumeration, finite Hankel blocks) or grows as a high power of the state
/// count (Gram matrices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Maximum number of words enumerated, or entries in a Hankel block.
    pub max_words: u128,
    /// Maximum state count accepted by the Gram-matrix operations.
    pub max_gram_states: usize,
}

impl OracleBudget {
    pub const DEFAULT_MAX_WORDS: u128 = 1 << 20;
    pub const DEFAULT_MAX_GRAM_STATES: usize = 64;

    /// A budget applying the same limit `n` to both knobs.
    pub fn uniform(n: usize) -> Self {
        Self {
            max_words: n as u128,
            max_gram_states: n,
        }
    }

    pub fn unlimited() -> Self {
        Self {
            max_words: u128::MAX,
            max_gram_states: usize::MAX,
        }
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_words: Self::DEFAULT_MAX_WORDS,
            max_gram_states: Self::DEFAULT_MAX_GRAM_STATES,
        }
    }
}
