use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::ToPrimitive;

use super::StaircaseParams;
use crate::error::{Error, Result};

/// Default bound on the number of automaton states.
pub const DEFAULT_MAX_STATES: usize = 10_000;

/// The last `L` letters of a staircase word; all letters lie in `{a, a+1}`
/// for some `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuffixState {
    letters: Vec<u32>,
}

impl SuffixState {
    /// Validates length, alphabet range and the `max - min <= 1` condition.
    pub fn new(letters: Vec<u32>, params: StaircaseParams) -> Result<Self> {
        if letters.len() != params.l() as usize {
            return Err(Error::InvalidState(format!(
                "expected {} letters, got {}",
                params.l(),
                letters.len()
            )));
        }
        if letters.iter().any(|&c| c < 1 || c > params.k()) {
            return Err(Error::InvalidState(format!(
                "letters {letters:?} outside 1..={}",
                params.k()
            )));
        }
        let state = SuffixState { letters };
        if state.spread() > 1 {
            return Err(Error::InvalidState(format!(
                "letters {:?} differ by more than one",
                state.letters
            )));
        }
        Ok(state)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    fn spread(&self) -> u32 {
        let max = self.letters.iter().max().copied().unwrap_or(0);
        let min = self.letters.iter().min().copied().unwrap_or(0);
        max - min
    }

    /// Image under the letter complement `a -> k + 1 - a`.
    pub fn reflect(&self, k: u32) -> SuffixState {
        SuffixState {
            letters: self.letters.iter().map(|&a| k + 1 - a).collect(),
        }
    }

    pub fn label(&self) -> String {
        self.letters
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Transfer matrix between suffix states: entry `(i, j)` is 1 iff appending
/// some letter to a word ending in state `i` keeps it staircase and leaves
/// state `j` as the new suffix.
///
/// Each state has at most three successors, so the matrix is stored as
/// adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    params: StaircaseParams,
    states: Vec<SuffixState>,
    successors: Vec<Vec<usize>>,
}

impl TransferMatrix {
    pub fn params(&self) -> StaircaseParams {
        self.params
    }

    pub fn states(&self) -> &[SuffixState] {
        &self.states
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.successors[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.successors[i].contains(&j))
    }

    pub fn index_of(&self, state: &SuffixState) -> Option<usize> {
        self.states.binary_search(state).ok()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Predecessor lists, the transpose of `successors`.
    pub(crate) fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut preds = vec![Vec::new(); self.dim()];
        for (i, succ) in self.successors.iter().enumerate() {
            for &j in succ {
                preds[j].push(i);
            }
        }
        preds
    }

    /// Graphviz rendering, one node per state and one edge per transition
    /// labelled with the appended letter.
    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "digraph staircase_k{}_l{} {{\n  rankdir=LR;\n",
            self.params.k(),
            self.params.l()
        );
        for s in &self.states {
            let _ = writeln!(out, "  \"{}\";", s.label());
        }
        for (i, succ) in self.successors.iter().enumerate() {
            for &j in succ {
                let letter = self.states[j].letters.last().copied().unwrap_or(0);
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [label=\"{letter}\"];",
                    self.states[i].label(),
                    self.states[j].label()
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_suffix_automaton(params: StaircaseParams) -> Result<TransferMatrix> {
    build_suffix_automaton_with_limit(params, DEFAULT_MAX_STATES)
}

/// Enumerates states in lexicographic order of their letters and wires the
/// transitions.
pub fn build_suffix_automaton_with_limit(
    params: StaircaseParams,
    max_states: usize,
) -> Result<TransferMatrix> {
    let count = params.state_count();
    let too_large = || {
        Error::InstanceTooLarge(format!(
            "automaton for k={}, L={} has {count} states, limit {max_states}",
            params.k(),
            params.l()
        ))
    };
    let n_states = count.to_usize().ok_or_else(too_large)?;
    if n_states > max_states {
        return Err(too_large());
    }
    let (k, l) = (params.k(), params.l() as usize);
    let mut states = Vec::with_capacity(n_states);
    for a in 1..=k {
        states.push(SuffixState { letters: vec![a; l] });
        if a == k {
            continue;
        }
        // offsets in {0,1}^L other than all-zero and all-one
        for mask in 1u64..(1u64 << l) - 1 {
            let letters = (0..l).map(|i| a + ((mask >> i) & 1) as u32).collect();
            states.push(SuffixState { letters });
        }
    }
    states.sort();
    debug_assert_eq!(states.len(), n_states);

    let index: HashMap<&[u32], usize> = states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.letters.as_slice(), i))
        .collect();
    let successors = states
        .iter()
        .map(|s| {
            let max = *s.letters.iter().max().expect("L >= 1");
            let min = *s.letters.iter().min().expect("L >= 1");
            let lo = max.saturating_sub(1).max(1);
            let hi = (min + 1).min(k);
            (lo..=hi)
                .map(|y| {
                    let mut next = s.letters[1..].to_vec();
                    next.push(y);
                    index[next.as_slice()]
                })
                .collect()
        })
        .collect();
    Ok(TransferMatrix {
        params,
        states,
        successors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::is_staircase;

    fn p(k: u32, l: u32) -> StaircaseParams {
        StaircaseParams::new(k, l).unwrap()
    }

    #[test]
    fn k3_l2_states_in_lex_order() {
        let m = build_suffix_automaton(p(3, 2)).unwrap();
        let labels: Vec<String> = m.states().iter().map(SuffixState::label).collect();
        assert_eq!(labels, ["1,1", "1,2", "2,1", "2,2", "2,3", "3,2", "3,3"]);
    }

    #[test]
    fn binary_radius_one_is_complete() {
        let m = build_suffix_automaton(p(2, 1)).unwrap();
        assert_eq!(m.to_dense(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn state_count_formula() {
        assert_eq!(build_suffix_automaton(p(4, 3)).unwrap().dim(), 22);
        for k in 2..=6 {
            for l in 1..=4 {
                let m = build_suffix_automaton(p(k, l)).unwrap();
                assert_eq!(m.dim(), (k + (k - 1) * ((1 << l) - 2)) as usize);
            }
        }
    }

    #[test]
    fn transitions_match_window_condition() {
        for (k, l) in [(3, 1), (3, 2), (4, 3)] {
            let params = p(k, l);
            let m = build_suffix_automaton(params).unwrap();
            for (i, si) in m.states().iter().enumerate() {
                for (j, sj) in m.states().iter().enumerate() {
                    let shifted = si.letters()[1..] == sj.letters()[..l as usize - 1];
                    let mut word = si.letters().to_vec();
                    word.push(*sj.letters().last().unwrap());
                    let expected = shifted && is_staircase(&word, params).unwrap();
                    assert_eq!(m.entry(i, j) == 1, expected, "{} -> {}", si.label(), sj.label());
                }
            }
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            build_suffix_automaton_with_limit(p(6, 3), 10),
            Err(Error::InstanceTooLarge(_))
        ));
        assert!(matches!(build_suffix_automaton(p(2, 70)), Err(Error::InstanceTooLarge(_))));
    }

    #[test]
    fn state_validation_and_reflection() {
        let params = p(3, 2);
        assert!(SuffixState::new(vec![1, 3], params).is_err());
        assert!(SuffixState::new(vec![1], params).is_err());
        assert!(SuffixState::new(vec![0, 1], params).is_err());
        let s = SuffixState::new(vec![1, 2], params).unwrap();
        assert_eq!(s.reflect(3).letters(), &[3, 2]);
    }

    #[test]
    fn dot_export_lists_every_edge() {
        let m = build_suffix_automaton(p(2, 1)).unwrap();
        let dot = m.to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("\"1\" -> \"2\" [label=\"2\"];"));
    }
}
