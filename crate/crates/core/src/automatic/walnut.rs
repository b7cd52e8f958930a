//! Walnut word-automaton text format for Fibonacci DFAOs.
//!
//! ```text
//! msd_fib
//!
//! 0 1
//! 0 -> 0
//! 1 -> 1
//!
//! 1 0
//! 0 -> 0
//! ```
//!
//! The first line names the numeration system. Each state block starts with
//! `<state> <output>` followed by its transitions `<digit> -> <state>`. State
//! `0` is initial; an absent transition rejects. [`export`] writes the
//! canonical form: a blank line before each block, states in increasing
//! order, transitions in increasing digit order.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Dfao, DfaoError};

pub const NUMERATION: &str = "msd_fib";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalnutError {
    #[error("expected header `msd_fib`, found {0:?}")]
    Header(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("state {0} is defined twice")]
    DuplicateState(u32),
    #[error("states must be numbered 0..n; state {0} is missing")]
    MissingState(u32),
    #[error(transparent)]
    Automaton(#[from] DfaoError),
}

pub fn export(d: &Dfao) -> String {
    let mut out = String::from(NUMERATION);
    out.push('\n');
    for (state, row) in d.transitions().iter().enumerate() {
        let _ = write!(out, "\n{} {}\n", state, d.output(state as u32));
        for (digit, to) in row.iter().enumerate() {
            if let Some(to) = to {
                let _ = writeln!(out, "{digit} -> {to}");
            }
        }
    }
    out
}

pub fn import(text: &str) -> Result<Dfao, WalnutError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, NUMERATION)) => {}
        Some((_, other)) => return Err(WalnutError::Header(other.to_string())),
        None => return Err(WalnutError::Header(String::new())),
    }

    let mut states: Vec<Option<(u32, [Option<u32>; 2])>> = Vec::new();
    let mut current: Option<u32> = None;
    for (line, l) in lines {
        let syntax = |msg: &str| WalnutError::Syntax {
            line,
            msg: msg.to_string(),
        };
        if let Some((lhs, rhs)) = l.split_once("->") {
            let digit: usize = lhs.trim().parse().map_err(|_| syntax("bad digit"))?;
            let to: u32 = rhs.trim().parse().map_err(|_| syntax("bad target state"))?;
            if digit > 1 {
                return Err(syntax("digits must be 0 or 1"));
            }
            let state = current.ok_or_else(|| syntax("transition before any state"))?;
            let slot = &mut states[state as usize]
                .as_mut()
                .expect("current state exists")
                .1[digit];
            if slot.is_some() {
                return Err(syntax("duplicate transition"));
            }
            *slot = Some(to);
        } else {
            let mut parts = l.split_whitespace();
            let (Some(id), Some(out), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(syntax("expected `<state> <output>`"));
            };
            let id: u32 = id.parse().map_err(|_| syntax("bad state id"))?;
            let out: u32 = out.parse().map_err(|_| syntax("bad output"))?;
            if states.len() <= id as usize {
                states.resize(id as usize + 1, None);
            }
            if states[id as usize].is_some() {
                return Err(WalnutError::DuplicateState(id));
            }
            states[id as usize] = Some((out, [None, None]));
            current = Some(id);
        }
    }

    let mut transitions = Vec::with_capacity(states.len());
    let mut outputs = Vec::with_capacity(states.len());
    for (id, s) in states.into_iter().enumerate() {
        let (out, row) = s.ok_or(WalnutError::MissingState(id as u32))?;
        transitions.push(row);
        outputs.push(out);
    }
    Ok(Dfao::new(transitions, outputs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "msd_fib\n\n0 1\n0 -> 0\n1 -> 1\n\n1 0\n0 -> 0\n";

    #[test]
    fn canonical_round_trip() {
        let d = import(SAMPLE).unwrap();
        assert_eq!(d.state_count(), 2);
        assert_eq!(export(&d), SAMPLE);
    }

    #[test]
    fn tolerant_import() {
        let messy = "# comment\nmsd_fib\n1 0\n0->0\n0 1\n  1 -> 1\n0 -> 0\n";
        let d = import(messy).unwrap();
        assert_eq!(export(&d), SAMPLE);
    }

    #[test]
    fn import_errors() {
        assert!(matches!(
            import("lsd_2\n0 1\n"),
            Err(WalnutError::Header(_))
        ));
        assert!(matches!(
            import("msd_fib\n0 -> 1\n"),
            Err(WalnutError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            import("msd_fib\n0 1\n2 -> 0\n"),
            Err(WalnutError::Syntax { .. })
        ));
        assert!(matches!(
            import("msd_fib\n0 1\n0 1\n"),
            Err(WalnutError::DuplicateState(0))
        ));
        assert!(matches!(
            import("msd_fib\n1 1\n"),
            Err(WalnutError::MissingState(0))
        ));
        assert!(matches!(
            import("msd_fib\n0 1\n0 -> 3\n"),
            Err(WalnutError::Automaton(DfaoError::DanglingTransition {
                from: 0,
                to: 3
            }))
        ));
    }
}
