use std::fmt;
use std::ops::ControlFlow;

use bitvec::prelude::*;

use super::sweep::sweep;
use super::{options, GameSpec, Position};

/// A position where a check fails, with the member options it sees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub position: Position,
    pub is_member: bool,
    pub member_options: Vec<Position>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = if self.is_member {
            "member"
        } else {
            "non-member"
        };
        write!(
            f,
            "{role} {} has {} member option(s)",
            self.position,
            self.member_options.len()
        )?;
        for (i, p) in self.member_options.iter().take(4).enumerate() {
            write!(f, "{}{p}", if i == 0 { ": " } else { ", " })?;
        }
        if self.member_options.len() > 4 {
            f.write_str(", …")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(c) => Some(c),
        }
    }
}

fn evaluate(bound: u64, candidate: impl Fn(u64, u64) -> bool) -> BitVec {
    let side = bound + 1;
    let mut bits = BitVec::with_capacity((side * side) as usize);
    for y in 0..side {
        for x in 0..side {
            bits.push(candidate(x, y));
        }
    }
    bits
}

fn run(
    spec: GameSpec,
    bound: u64,
    report: u64,
    candidate: impl Fn(u64, u64) -> bool,
    fails: impl Fn(bool, u32) -> bool,
) -> Verdict {
    let side = bound + 1;
    let member = evaluate(bound, candidate);
    let at = |x: u64, y: u64| member[(y * side + x) as usize];
    let found = sweep(bound, |x, y, count| {
        let m = at(x, y);
        let p = Position::new(x, y);
        if x <= report && y <= report && !spec.is_terminal(p) && fails(m, count) {
            return ControlFlow::Break(p);
        }
        ControlFlow::Continue(m)
    });
    match found {
        None => Verdict::Holds,
        Some(position) => Verdict::Fails(Counterexample {
            position,
            is_member: at(position.x, position.y),
            member_options: options(position)
                .into_iter()
                .filter(|q| at(q.x, q.y))
                .collect(),
        }),
    }
}

/// Stability on `[0, bound]²`: every non-terminal member has at most
/// `k − 1` member options (none for `K^ℓ`).
pub fn check_stable(candidate: impl Fn(u64, u64) -> bool, spec: GameSpec, bound: u64) -> Verdict {
    let allowed = spec.max_p_options_of_p();
    run(spec, bound, bound, candidate, |m, count| {
        m && count > allowed
    })
}

/// Absorption on `[0, bound]²`: every non-terminal non-member has at least
/// `k` member options (one for `K^ℓ`).
///
/// Options only decrease coordinates, so the evaluated box needs no margin;
/// `safety_margin` enlarges it anyway and only the original box is reported.
pub fn check_absorbing(
    candidate: impl Fn(u64, u64) -> bool,
    spec: GameSpec,
    bound: u64,
    safety_margin: u64,
) -> Verdict {
    let needed = spec.winning_options_needed();
    run(spec, bound + safety_margin, bound, candidate, |m, count| {
        !m && count < needed
    })
}
