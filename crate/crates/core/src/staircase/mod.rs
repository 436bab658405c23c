//! Staircase words of `P_{n,L}` over the alphabet `1..=k`: the defining
//! predicate, a brute-force counter, and transfer-matrix counting over the
//! automaton of valid length-`L` suffixes.

mod automaton;
mod count;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use automaton::{
    build_suffix_automaton, build_suffix_automaton_with_limit, SuffixState, TransferMatrix,
    DEFAULT_MAX_STATES,
};
pub use count::{suffix_class_series, transfer_count, transfer_series, CountStrategy};

/// Largest `k^n` the brute-force counter will enumerate.
pub const BRUTE_FORCE_LIMIT: u64 = 100_000_000;

/// Alphabet size `k >= 2` and adjacency radius `L >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseParams {
    k: u32,
    l: u32,
}

impl StaircaseParams {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("alphabet size k must be >= 2, got {k}")));
        }
        if l < 1 {
            return Err(Error::InvalidParams(format!("radius L must be >= 1, got {l}")));
        }
        Ok(StaircaseParams { k, l })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Number of staircase words of length `n <= L`, i.e. words whose
    /// letters all lie in some `{a, a+1}`: `1` for `n = 0`, otherwise
    /// `k + (k-1)(2^n - 2)`.
    pub fn short_word_count(&self, n: u32) -> BigUint {
        if n == 0 {
            return BigUint::one();
        }
        let two_n = BigUint::one() << n;
        BigUint::from(self.k) + BigUint::from(self.k - 1) * (two_n - 2u32)
    }

    /// Number of valid suffix states, `k + (k-1)(2^L - 2)`.
    pub fn state_count(&self) -> BigUint {
        self.short_word_count(self.l)
    }
}

/// True iff every two letters at distance at most `L` differ by at most one.
///
/// The pairwise form coincides with the sliding-window condition for words of
/// length `> L` and also covers shorter words.
pub fn is_staircase(word: &[u32], params: StaircaseParams) -> Result<bool> {
    if let Some(&letter) = word.iter().find(|&&c| c < 1 || c > params.k) {
        return Err(Error::LetterOutOfRange { letter, k: params.k });
    }
    let l = params.l as usize;
    Ok(word.iter().enumerate().all(|(i, &a)| {
        word[i + 1..]
            .iter()
            .take(l)
            .all(|&b| a.abs_diff(b) <= 1)
    }))
}

/// Counts staircase words of length `n` by testing every word in `[k]^n`.
pub fn brute_force_count(params: StaircaseParams, n: u32) -> Result<BigUint> {
    let total = u64::from(params.k)
        .checked_pow(n)
        .filter(|&t| t <= BRUTE_FORCE_LIMIT)
        .ok_or_else(|| {
            Error::InstanceTooLarge(format!(
                "brute force over {}^{} words exceeds {BRUTE_FORCE_LIMIT}",
                params.k, n
            ))
        })?;
    let n = n as usize;
    let mut word = vec![1u32; n];
    let mut count = 0u64;
    for _ in 0..total {
        if is_staircase(&word, params)? {
            count += 1;
        }
        // odometer increment
        for pos in (0..n).rev() {
            if word[pos] < params.k {
                word[pos] += 1;
                break;
            }
            word[pos] = 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Brute-force counts for lengths `0..terms`.
pub fn brute_force_series(params: StaircaseParams, terms: u32) -> Result<Vec<BigUint>> {
    (0..terms).map(|n| brute_force_count(params, n)).collect()
}

pub(crate) fn big_to_u64(v: &BigUint) -> Option<u64> {
    if v.is_zero() {
        return Some(0);
    }
    let digits = v.to_u64_digits();
    (digits.len() == 1).then(|| digits[0])
}
