use thiserror::Error;

use super::{Coding, Letter, Morphism, MorphismError};
use crate::fib::{rep_f, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DfaoError {
    #[error("no transition from state {state} on digit {digit}")]
    UndefinedTransition { state: u32, digit: u8 },
    #[error("digit {0} is not 0 or 1")]
    BadDigit(u8),
    #[error("transition from state {from} targets missing state {to}")]
    DanglingTransition { from: u32, to: u32 },
    #[error("automaton has no states")]
    Empty,
    #[error("coding covers {coding} letters but the morphism has {alphabet}")]
    CodingSize { coding: usize, alphabet: usize },
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// Deterministic finite automaton with output over the digits `{0, 1}`.
///
/// State `0` is initial. Missing transitions reject.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfao {
    transitions: Vec<[Option<u32>; 2]>,
    outputs: Vec<u32>,
}

impl Dfao {
    pub fn new(transitions: Vec<[Option<u32>; 2]>, outputs: Vec<u32>) -> Result<Self, DfaoError> {
        if transitions.is_empty() || transitions.len() != outputs.len() {
            return Err(DfaoError::Empty);
        }
        let n = transitions.len() as u32;
        for (from, row) in transitions.iter().enumerate() {
            for &to in row.iter().flatten() {
                if to >= n {
                    return Err(DfaoError::DanglingTransition {
                        from: from as u32,
                        to,
                    });
                }
            }
        }
        Ok(Dfao {
            transitions,
            outputs,
        })
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn output(&self, state: u32) -> u32 {
        self.outputs[state as usize]
    }

    pub fn transition(&self, state: u32, digit: u8) -> Option<u32> {
        self.transitions[state as usize]
            .get(digit as usize)
            .copied()
            .flatten()
    }

    pub fn transitions(&self) -> &[[Option<u32>; 2]] {
        &self.transitions
    }

    pub fn outputs(&self) -> &[u32] {
        &self.outputs
    }

    /// Runs the automaton on `digits`, most significant first.
    pub fn eval_word(&self, digits: &[u8]) -> Result<u32, DfaoError> {
        let mut state = 0u32;
        for &d in digits {
            if d > 1 {
                return Err(DfaoError::BadDigit(d));
            }
            state = self
                .transition(state, d)
                .ok_or(DfaoError::UndefinedTransition { state, digit: d })?;
        }
        Ok(self.output(state))
    }

    /// Output on `rep_F(n)`.
    pub fn eval<T: Natural>(&self, n: T) -> Result<u32, DfaoError> {
        self.eval_word(rep_f(n).digits())
    }

    /// Outputs for `0..len`.
    pub fn eval_prefix(&self, len: u64) -> Result<Vec<u32>, DfaoError> {
        (0..len).map(|n| self.eval(n)).collect()
    }
}

/// Automaton of a φ-morphism: `μ(c) = de` gives `c -0-> d` and `c -1-> e`,
/// `μ(c) = d` gives only `c -0-> d`; outputs come from the coding.
pub fn promote(m: &Morphism, coding: &Coding<u32>) -> Result<Dfao, DfaoError> {
    m.check_phi_candidate()?;
    if coding.size() != m.alphabet_size() {
        return Err(DfaoError::CodingSize {
            coding: coding.size(),
            alphabet: m.alphabet_size(),
        });
    }
    let transitions = m
        .images()
        .iter()
        .map(|img| [Some(img[0] as Letter), img.get(1).map(|&e| e as Letter)])
        .collect();
    Dfao::new(transitions, coding.outputs().to_vec())
}
