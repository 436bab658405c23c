use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::automaton::{build_suffix_automaton, SuffixState, TransferMatrix};
use super::StaircaseParams;
use crate::error::{Error, Result};

/// How `1^T M^e 1` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CountStrategy {
    /// Binary exponentiation when `dim^2 * log2(e) < e`, otherwise stepping.
    #[default]
    Auto,
    /// Square-and-multiply on the dense matrix.
    Power,
    /// `e` sparse vector steps.
    Iterate,
}

/// Ring operations for counting, exact or modulo `p`.
trait Arith {
    type T: Clone;
    fn zero(&self) -> Self::T;
    fn one(&self) -> Self::T;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
}

struct Exact;

impl Arith for Exact {
    type T = BigUint;
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a.is_zero() || b.is_zero() {
            return BigUint::zero();
        }
        a * b
    }
}

struct Modular(u64);

impl Arith for Modular {
    type T = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((u128::from(*a) + u128::from(*b)) % u128::from(self.0)) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((u128::from(*a) * u128::from(*b)) % u128::from(self.0)) as u64
    }
}

fn dense<A: Arith>(m: &TransferMatrix, ar: &A) -> Vec<Vec<A::T>> {
    (0..m.dim())
        .map(|i| {
            let mut row = vec![ar.zero(); m.dim()];
            for &j in m.successors(i) {
                row[j] = ar.one();
            }
            row
        })
        .collect()
}

fn mat_mul<A: Arith>(a: &[Vec<A::T>], b: &[Vec<A::T>], ar: &A) -> Vec<Vec<A::T>> {
    let n = a.len();
    let mut out = vec![vec![ar.zero(); n]; n];
    for i in 0..n {
        for (l, a_il) in a[i].iter().enumerate() {
            for j in 0..n {
                let prod = ar.mul(a_il, &b[l][j]);
                out[i][j] = ar.add(&out[i][j], &prod);
            }
        }
    }
    out
}

fn row_times<A: Arith>(v: &[A::T], m: &[Vec<A::T>], ar: &A) -> Vec<A::T> {
    let n = v.len();
    let mut out = vec![ar.zero(); n];
    for (i, vi) in v.iter().enumerate() {
        for j in 0..n {
            let prod = ar.mul(vi, &m[i][j]);
            out[j] = ar.add(&out[j], &prod);
        }
    }
    out
}

fn step<A: Arith>(v: &[A::T], preds: &[Vec<usize>], ar: &A) -> Vec<A::T> {
    preds
        .iter()
        .map(|ps| ps.iter().fold(ar.zero(), |acc, &i| ar.add(&acc, &v[i])))
        .collect()
}

/// Row vector `1^T M^e`.
fn ones_times_power<A: Arith>(m: &TransferMatrix, e: u64, strategy: CountStrategy, ar: &A) -> Vec<A::T> {
    let dim = m.dim() as u64;
    let bits = u64::from(64 - e.leading_zeros());
    let use_power = match strategy {
        CountStrategy::Power => true,
        CountStrategy::Iterate => false,
        CountStrategy::Auto => dim.saturating_mul(dim).saturating_mul(bits) < e,
    };
    let mut v = vec![ar.one(); m.dim()];
    if use_power {
        let mut base = dense(m, ar);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                v = row_times(&v, &base, ar);
            }
            e >>= 1;
            if e > 0 {
                base = mat_mul(&base, &base, ar);
            }
        }
    } else {
        let preds = m.predecessors();
        for _ in 0..e {
            v = step(&v, &preds, ar);
        }
    }
    v
}

impl TransferMatrix {
    /// Exact number of staircase words of length `n`.
    pub fn count(&self, n: u64) -> BigUint {
        self.count_with(n, CountStrategy::Auto)
    }

    pub fn count_with(&self, n: u64, strategy: CountStrategy) -> BigUint {
        let params = self.params();
        if n <= u64::from(params.l()) {
            return params.short_word_count(n as u32);
        }
        let v = ones_times_power(self, n - u64::from(params.l()), strategy, &Exact);
        v.iter().fold(BigUint::zero(), |acc, c| acc + c)
    }

    /// Number of staircase words of length `n`, modulo `modulus`.
    pub fn count_mod(&self, n: u64, modulus: u64) -> Result<u64> {
        self.count_mod_with(n, modulus, CountStrategy::Auto)
    }

    pub fn count_mod_with(&self, n: u64, modulus: u64, strategy: CountStrategy) -> Result<u64> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let params = self.params();
        if n <= u64::from(params.l()) {
            let c = params.short_word_count(n as u32) % modulus;
            return Ok(super::big_to_u64(&c).expect("reduced below a u64 modulus"));
        }
        let ar = Modular(modulus);
        let v = ones_times_power(self, n - u64::from(params.l()), strategy, &ar);
        Ok(v.iter().fold(0, |acc, c| ar.add(&acc, c)))
    }

    /// Counts for lengths `0..terms`, by stepping the state vector once per
    /// length.
    pub fn series(&self, terms: usize) -> Vec<BigUint> {
        let params = self.params();
        let l = params.l() as usize;
        let mut out: Vec<BigUint> = (0..terms.min(l + 1))
            .map(|n| params.short_word_count(n as u32))
            .collect();
        if terms <= l + 1 {
            return out;
        }
        let preds = self.predecessors();
        let mut v = vec![BigUint::one(); self.dim()];
        for _ in l + 1..terms {
            v = step(&v, &preds, &Exact);
            out.push(v.iter().fold(BigUint::zero(), |acc, c| acc + c));
        }
        out
    }

    /// Counts of words of each length `0..terms` whose last `L` letters are
    /// `state`.
    pub fn suffix_series(&self, state: &SuffixState, terms: usize) -> Result<Vec<BigUint>> {
        let idx = self
            .index_of(state)
            .ok_or_else(|| Error::InvalidState(format!("{} is not a state", state.label())))?;
        let l = self.params().l() as usize;
        let mut out = vec![BigUint::zero(); terms.min(l)];
        if terms <= l {
            return Ok(out);
        }
        let preds = self.predecessors();
        let mut v = vec![BigUint::one(); self.dim()];
        out.push(v[idx].clone());
        for _ in l + 1..terms {
            v = step(&v, &preds, &Exact);
            out.push(v[idx].clone());
        }
        Ok(out)
    }
}

/// Count of staircase words of length `n`; reduced modulo `modulus` when
/// one is given.
pub fn transfer_count(params: StaircaseParams, n: u64, modulus: Option<u64>) -> Result<BigUint> {
    if modulus == Some(0) {
        return Err(Error::ZeroModulus);
    }
    let m = build_suffix_automaton(params)?;
    match modulus {
        None => Ok(m.count(n)),
        Some(p) => Ok(BigUint::from(m.count_mod(n, p)?)),
    }
}

pub fn transfer_series(params: StaircaseParams, terms: usize) -> Result<Vec<BigUint>> {
    Ok(build_suffix_automaton(params)?.series(terms))
}

pub fn suffix_class_series(
    params: StaircaseParams,
    state: &SuffixState,
    terms: usize,
) -> Result<Vec<BigUint>> {
    SuffixState::new(state.letters().to_vec(), params)?;
    build_suffix_automaton(params)?.suffix_series(state, terms)
}
