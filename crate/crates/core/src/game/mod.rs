//! Wythoff rule-sets with terminal positions (`K^ℓ`) or blocking (`W^k`),
//! exact retrograde solving, kernel checks and move redundancy.

pub mod cache;
mod check;
mod redundancy;
mod sweep;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use check::{check_absorbing, check_stable, Counterexample, Verdict};
pub use redundancy::{non_redundant_witness, RedundancyIndex, WitnessSearch};
pub use table::{
    ppos_list, solve, solve_with_limit, Class, PnTable, SolveError, DEFAULT_BOUND_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("blocking budget k must be at least 1")]
    ZeroBlocking,
    #[error("move ({dx}, {dy}) is not a Wythoff move (i,0), (0,i) or (i,i) with i > 0")]
    BadMove { dx: u64, dy: u64 },
    #[error("unrecognised game {0:?}; expected K<ell> or W<k>")]
    Parse(String),
}

/// A queen position `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub x: u64,
    pub y: u64,
}

impl Position {
    pub const fn new(x: u64, y: u64) -> Self {
        Position { x, y }
    }

    pub fn mirrored(self) -> Self {
        Position {
            x: self.y,
            y: self.x,
        }
    }

    pub fn sum(self) -> u64 {
        self.x + self.y
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(u64, u64)> for Position {
    fn from((x, y): (u64, u64)) -> Self {
        Position { x, y }
    }
}

/// Rule-set: Wythoff moves plus terminal positions `x + y ≤ ℓ` (`K^ℓ`) or a
/// blocking budget of `k − 1` options (`W^k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GameSpec {
    Terminal { ell: u32 },
    Blocking { k: u32 },
}

impl GameSpec {
    pub const fn terminal(ell: u32) -> Self {
        GameSpec::Terminal { ell }
    }

    pub fn blocking(k: u32) -> Result<Self, GameError> {
        if k == 0 {
            return Err(GameError::ZeroBlocking);
        }
        Ok(GameSpec::Blocking { k })
    }

    /// Classic Wythoff as `K^0`.
    pub const fn wythoff() -> Self {
        GameSpec::Terminal { ell: 0 }
    }

    pub fn is_terminal(&self, p: Position) -> bool {
        match *self {
            GameSpec::Terminal { ell } => p.sum() <= u64::from(ell),
            GameSpec::Blocking { .. } => false,
        }
    }

    /// Number of P-options a position may have and still be P.
    pub fn max_p_options_of_p(&self) -> u32 {
        match *self {
            GameSpec::Terminal { .. } => 0,
            GameSpec::Blocking { k } => k - 1,
        }
    }

    /// `1` for `K^ℓ`, `k` for `W^k`: P-options an N-position needs.
    pub fn winning_options_needed(&self) -> u32 {
        self.max_p_options_of_p() + 1
    }

    pub fn param(&self) -> u32 {
        match *self {
            GameSpec::Terminal { ell } => ell,
            GameSpec::Blocking { k } => k,
        }
    }

    pub fn variant_char(&self) -> char {
        match self {
            GameSpec::Terminal { .. } => 'K',
            GameSpec::Blocking { .. } => 'W',
        }
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.variant_char(), self.param())
    }
}

impl FromStr for GameSpec {
    type Err = GameError;

    /// `"K2"`, `"W3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GameError::Parse(s.to_string());
        let mut chars = s.chars();
        let variant = chars.next().ok_or_else(bad)?;
        let param: u32 = chars.as_str().parse().map_err(|_| bad())?;
        match variant.to_ascii_uppercase() {
            'K' => Ok(GameSpec::terminal(param)),
            'W' => GameSpec::blocking(param),
            _ => Err(bad()),
        }
    }
}

/// A Wythoff move, as the amount removed from each pile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    dx: u64,
    dy: u64,
}

impl Move {
    pub fn new(dx: u64, dy: u64) -> Result<Self, GameError> {
        let ok = (dx > 0 && dy == 0) || (dx == 0 && dy > 0) || (dx > 0 && dx == dy);
        if !ok {
            return Err(GameError::BadMove { dx, dy });
        }
        Ok(Move { dx, dy })
    }

    pub fn horizontal(i: u64) -> Result<Self, GameError> {
        Move::new(i, 0)
    }

    pub fn vertical(i: u64) -> Result<Self, GameError> {
        Move::new(0, i)
    }

    pub fn diagonal(i: u64) -> Result<Self, GameError> {
        Move::new(i, i)
    }

    pub fn dx(&self) -> u64 {
        self.dx
    }

    pub fn dy(&self) -> u64 {
        self.dy
    }

    /// Target of the move from `p`, if it stays on the board.
    pub fn apply(&self, p: Position) -> Option<Position> {
        Some(Position::new(
            p.x.checked_sub(self.dx)?,
            p.y.checked_sub(self.dy)?,
        ))
    }

    /// The move leading from `from` to `to`, when one exists.
    pub fn between(from: Position, to: Position) -> Option<Self> {
        let dx = from.x.checked_sub(to.x)?;
        let dy = from.y.checked_sub(to.y)?;
        Move::new(dx, dy).ok()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// All Wythoff options of `p`: horizontal, then vertical, then diagonal,
/// each nearest first.
pub fn options(p: Position) -> Vec<Position> {
    let mut out = Vec::with_capacity((p.x + p.y + p.x.min(p.y)) as usize);
    out.extend((1..=p.x).map(|i| Position::new(p.x - i, p.y)));
    out.extend((1..=p.y).map(|i| Position::new(p.x, p.y - i)));
    out.extend((1..=p.x.min(p.y)).map(|i| Position::new(p.x - i, p.y - i)));
    out
}

/// Whether `to` is an option of `from`.
pub fn is_option(from: Position, to: Position) -> bool {
    Move::between(from, to).is_some()
}
