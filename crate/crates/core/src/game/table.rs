use std::fmt;

use bitvec::prelude::*;
use thiserror::Error;

use super::sweep::sweep_symmetric;
use super::{GameSpec, Position};
use crate::characterize::PposSequence;

/// Largest bound [`solve`] accepts by default (about 56 MB of bits).
pub const DEFAULT_BOUND_LIMIT: u64 = 30_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("bound {bound} exceeds the limit {limit}")]
    BoundTooLarge { bound: u64, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    P,
    N,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::P => "P",
            Class::N => "N",
        })
    }
}

/// P/N classification of `[0, bound]²`, one bit per position with `x ≤ y`.
#[derive(Clone, PartialEq, Eq)]
pub struct PnTable {
    spec: GameSpec,
    bound: u64,
    bits: BitVec<u64, Lsb0>,
}

fn tri(x: u64, y: u64) -> usize {
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    (y * (y + 1) / 2 + x) as usize
}

fn half_len(bound: u64) -> usize {
    let side = bound + 1;
    (side * (side + 1) / 2) as usize
}

impl PnTable {
    pub(crate) fn from_fn(
        spec: GameSpec,
        bound: u64,
        mut is_p: impl FnMut(u64, u64) -> bool,
    ) -> Self {
        let mut bits = BitVec::with_capacity(half_len(bound));
        for y in 0..=bound {
            for x in 0..=y {
                bits.push(is_p(x, y));
            }
        }
        PnTable { spec, bound, bits }
    }

    pub fn spec(&self) -> GameSpec {
        self.spec
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, p: Position) -> bool {
        p.x <= self.bound && p.y <= self.bound
    }

    /// Panics outside the board.
    pub fn is_p(&self, x: u64, y: u64) -> bool {
        assert!(
            x <= self.bound && y <= self.bound,
            "({x}, {y}) outside [0, {}]²",
            self.bound
        );
        self.bits[tri(x, y)]
    }

    pub fn class(&self, p: Position) -> Option<Class> {
        self.contains(p).then(|| {
            if self.is_p(p.x, p.y) {
                Class::P
            } else {
                Class::N
            }
        })
    }

    /// All P-positions in both orientations, row by row.
    pub fn p_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        for y in 0..=self.bound {
            for x in 0..=self.bound {
                if self.is_p(x, y) {
                    out.push(Position::new(x, y));
                }
            }
        }
        out
    }

    /// P-positions with `x ≤ y`, sorted.
    pub fn p_pairs(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut y = 0u64;
        for i in self.bits.iter_ones() {
            let i = i as u64;
            while (y + 1) * (y + 2) / 2 <= i {
                y += 1;
            }
            out.push((i - y * (y + 1) / 2, y));
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for PnTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PnTable")
            .field("spec", &self.spec)
            .field("bound", &self.bound)
            .field("p_count", &self.bits.count_ones())
            .finish()
    }
}

pub fn solve(spec: GameSpec, bound: u64) -> Result<PnTable, SolveError> {
    solve_with_limit(spec, bound, DEFAULT_BOUND_LIMIT)
}

/// Exact classification of `[0, bound]²`.
pub fn solve_with_limit(spec: GameSpec, bound: u64, limit: u64) -> Result<PnTable, SolveError> {
    if bound > limit {
        return Err(SolveError::BoundTooLarge { bound, limit });
    }
    let allowed = spec.max_p_options_of_p();
    let mut bits: BitVec<u64, Lsb0> = BitVec::repeat(false, half_len(bound));
    sweep_symmetric(bound, |x, y, count| {
        let p = spec.is_terminal(Position::new(x, y)) || count <= allowed;
        if p {
            bits.set(tri(x, y), true);
        }
        p
    });
    Ok(PnTable { spec, bound, bits })
}

/// Non-terminal P-pairs `a ≤ b` of the table, sorted by `a`.
///
/// Only pairs with `b ≤ bound` are seen. For `K^ℓ` the `b`s increase with
/// `a`, so the result is an exact prefix. Blocking games have no terminal
/// positions, so `(0, 0)` is included; their `ell` field is 0.
pub fn ppos_list(table: &PnTable) -> PposSequence {
    let spec = table.spec();
    let pairs = table
        .p_pairs()
        .into_iter()
        .filter(|&(a, b)| !spec.is_terminal(Position::new(a, b)))
        .collect();
    let ell = match spec {
        GameSpec::Terminal { ell } => ell,
        GameSpec::Blocking { .. } => 0,
    };
    PposSequence::new(ell, pairs)
}
