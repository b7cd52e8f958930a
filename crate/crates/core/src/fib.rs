//! Fibonacci (Zeckendorf) numeration.
//!
//! Weights are `F_0 = 1, F_1 = 2, F_{i+2} = F_{i+1} + F_i`. Every natural has a
//! unique greedy representation with no two adjacent ones; `0` is represented
//! by the empty word. All arithmetic here is integer only, including the
//! Beatty floors `⌊nφ⌋` and `⌊nφ²⌋`, which come out of left shifts of the
//! representation.
//!
//! The numeric entry points are generic over any unsigned primitive integer.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{PrimInt, Unsigned};
use thiserror::Error;

/// Unsigned primitive integers usable as naturals.
pub trait Natural: PrimInt + Unsigned + fmt::Debug {}

impl<T: PrimInt + Unsigned + fmt::Debug> Natural for T {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumerationError {
    #[error("symbol {symbol:?} at position {position} is not a binary digit")]
    NonBinaryDigit { position: usize, symbol: char },
    #[error("word {0:?} is not a canonical Fibonacci representation")]
    NotCanonical(String),
    #[error("value does not fit in the target integer type")]
    Overflow,
}

/// A canonical Fibonacci representation, most significant digit first.
///
/// No two adjacent digits are both one and the first digit is one unless the
/// word is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FibWord(Vec<u8>);

impl FibWord {
    /// The empty word, which represents zero.
    pub fn empty() -> Self {
        FibWord(Vec::new())
    }

    /// Wraps `digits` after checking the canonical form.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, NumerationError> {
        if let Some(position) = digits.iter().position(|&d| d > 1) {
            return Err(NumerationError::NonBinaryDigit {
                position,
                symbol: char::from_digit(u32::from(digits[position]), 36).unwrap_or('?'),
            });
        }
        if !is_canonical(&digits) {
            return Err(NumerationError::NotCanonical(digits_to_string(&digits)));
        }
        Ok(FibWord(digits))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ends_with_zero(&self) -> bool {
        self.0.last() == Some(&0)
    }

    /// The word followed by `suffix`; the result need not be canonical.
    pub fn concat(&self, suffix: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.0.len() + suffix.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(suffix);
        out
    }

    pub fn value<T: Natural>(&self) -> Result<T, NumerationError> {
        val_f(&self.0)
    }
}

/// Radix order: shorter words first, then lexicographic.
impl Ord for FibWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FibWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FibWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        f.write_str(&digits_to_string(&self.0))
    }
}

impl FromStr for FibWord {
    type Err = NumerationError;

    /// Accepts `""` or `"ε"` for the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ε" {
            return Ok(FibWord::empty());
        }
        FibWord::from_digits(parse_binary(s)?)
    }
}

fn digits_to_string(digits: &[u8]) -> String {
    digits.iter().map(|&d| char::from(b'0' + d)).collect()
}

/// Parses a string of `0`/`1` characters into digits.
pub fn parse_binary(s: &str) -> Result<Vec<u8>, NumerationError> {
    s.chars()
        .enumerate()
        .map(|(position, c)| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            symbol => Err(NumerationError::NonBinaryDigit { position, symbol }),
        })
        .collect()
}

fn is_canonical(digits: &[u8]) -> bool {
    if digits.first() == Some(&0) {
        return false;
    }
    digits.windows(2).all(|w| !(w[0] == 1 && w[1] == 1))
}

/// Fibonacci weights `F_0, F_1, …` not exceeding `limit`.
pub fn weights_up_to<T: Natural>(limit: T) -> Vec<T> {
    let mut out = Vec::new();
    let (mut a, mut b) = (T::one(), T::one() + T::one());
    while a <= limit {
        out.push(a);
        match a.checked_add(&b) {
            Some(c) => {
                a = b;
                b = c;
            }
            None => {
                if b <= limit {
                    out.push(b);
                }
                break;
            }
        }
    }
    out
}

/// Greedy Fibonacci representation of `n`.
pub fn rep_f<T: Natural>(n: T) -> FibWord {
    let weights = weights_up_to(n);
    let mut rest = n;
    let mut digits = Vec::with_capacity(weights.len());
    for &w in weights.iter().rev() {
        if w <= rest {
            digits.push(1);
            rest = rest - w;
        } else {
            digits.push(0);
        }
    }
    debug_assert!(rest.is_zero());
    FibWord(digits)
}

/// Value of an arbitrary 0/1 word (canonical or not), most significant first.
pub fn val_f<T: Natural>(digits: &[u8]) -> Result<T, NumerationError> {
    let mut total = T::zero();
    // (F_i, F_{i+1}); None once the weight no longer fits in T
    let mut weight: Option<(T, Option<T>)> = Some((T::one(), T::one().checked_add(&T::one())));
    for (back, &d) in digits.iter().rev().enumerate() {
        if d > 1 {
            return Err(NumerationError::NonBinaryDigit {
                position: digits.len() - 1 - back,
                symbol: char::from_digit(u32::from(d), 36).unwrap_or('?'),
            });
        }
        if d == 1 {
            let (w, _) = weight.ok_or(NumerationError::Overflow)?;
            total = total.checked_add(&w).ok_or(NumerationError::Overflow)?;
        }
        weight = match weight {
            Some((a, Some(b))) => Some((b, a.checked_add(&b))),
            _ => None,
        };
    }
    Ok(total)
}

/// Value of a word given as a `0`/`1` string.
pub fn val_f_str<T: Natural>(s: &str) -> Result<T, NumerationError> {
    val_f(&parse_binary(s)?)
}

/// `val_F(rep_F(n) · 0^times)`.
///
/// # Panics
/// If the result overflows `T`.
pub fn shift_by<T: Natural>(n: T, times: usize) -> T {
    let word = rep_f(n).concat(&vec![0; times]);
    val_f(&word).expect("shifted value overflows the integer type")
}

/// `val_F(rep_F(n) · 0)`.
pub fn shift<T: Natural>(n: T) -> T {
    shift_by(n, 1)
}

/// `⌊nφ⌋`, exactly.
pub fn floor_phi<T: Natural>(n: T) -> T {
    if n.is_zero() {
        return T::zero();
    }
    shift(n - T::one()) + T::one()
}

/// `⌊nφ²⌋`, exactly.
pub fn floor_phi2<T: Natural>(n: T) -> T {
    if n.is_zero() {
        return T::zero();
    }
    shift_by(n - T::one(), 2) + T::one() + T::one()
}

/// Hofstadter's G-sequence, `h(n) = ⌊(n+1)φ⌋ − n − 1`.
pub fn hofstadter_h<T: Natural>(n: T) -> T {
    floor_phi(n + T::one()) - n - T::one()
}

/// Least natural not in `set`.
pub fn mex<I: IntoIterator<Item = usize>>(set: I) -> usize {
    let mut seen = MexSet::new();
    for v in set {
        seen.insert(v);
    }
    seen.mex()
}

/// Growing set of naturals with amortised O(1) `mex` while only inserting.
#[derive(Debug, Clone, Default)]
pub struct MexSet {
    present: Vec<bool>,
    cursor: usize,
}

impl MexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize) {
        if v >= self.present.len() {
            let new_len = (v + 1).max(self.present.len() * 2);
            self.present.resize(new_len, false);
        }
        self.present[v] = true;
    }

    pub fn contains(&self, v: usize) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn mex(&mut self) -> usize {
        while self.contains(self.cursor) {
            self.cursor += 1;
        }
        self.cursor
    }
}
