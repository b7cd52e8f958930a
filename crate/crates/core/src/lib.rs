//! Wythoff variants with terminal positions and blocking: exact solving,
//! Fibonacci numeration, automatic-sequence machinery and closed-form
//! characterizations of the P-positions.

pub mod automatic;
pub mod characterize;
pub mod fib;
pub mod game;
pub mod verify;

pub use automatic::{Coding, Dfao, Morphism};
pub use characterize::PposSequence;
pub use game::{GameSpec, PnTable, Position};

/// Pile sizes and sequence values.
pub type Nat = u64;

/// Exact rationals for density statistics.
pub type Rational = num_rational::Ratio<i64>;
