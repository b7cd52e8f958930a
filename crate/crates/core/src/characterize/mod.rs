//! Closed-form, recursive, morphic and asymptotic descriptions of the
//! non-terminal P-positions, each checkable against the solver.

pub mod closed_form;
pub mod discrepancy;
pub mod morphic;
pub mod spectrum;

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fib::MexSet;
use crate::Nat;

pub use closed_form::{
    closed_form_k1, closed_form_k2, closed_form_k3, closed_form_k4, k1_floor_pair, k2_member,
    ppos_w2, ppos_w3,
};
pub use discrepancy::{
    cmp_sqrt5, counting_check, density_within, discrepancy_profile, DiscrepancyProfile,
};
pub use morphic::morphic_coding_check;
pub use spectrum::spectrum_bounds;

/// First place a finite check fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at {at}: {detail}")]
pub struct Mismatch {
    pub at: u64,
    pub detail: String,
}

impl Mismatch {
    pub fn new(at: u64, detail: impl Into<String>) -> Self {
        Mismatch {
            at,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum SequenceIoError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("row {row}: index {found} out of sequence, expected {row}")]
    Index { row: usize, found: u64 },
}

/// Non-terminal P-pairs `(a_n, b_n)`, `a_n ≤ b_n`, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PposSequence {
    ell: u32,
    pairs: Vec<(Nat, Nat)>,
}

#[derive(Serialize, Deserialize)]
struct Row {
    n: u64,
    a_n: Nat,
    b_n: Nat,
}

impl PposSequence {
    pub fn new(ell: u32, pairs: Vec<(Nat, Nat)>) -> Self {
        PposSequence { ell, pairs }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn pairs(&self) -> &[(Nat, Nat)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn a(&self, n: usize) -> Nat {
        self.pairs[n].0
    }

    pub fn b(&self, n: usize) -> Nat {
        self.pairs[n].1
    }

    pub fn a_values(&self) -> Vec<Nat> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn b_values(&self) -> Vec<Nat> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// The pairs with `b_n ≤ bound`.
    pub fn within(&self, bound: Nat) -> PposSequence {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(_, b)| b <= bound)
            .collect();
        PposSequence::new(self.ell, pairs)
    }

    /// Checks the structure of a `K^ℓ` sequence: `b_n = a_n + n + ℓ + 1`,
    /// gaps of `a` in `{1, 2}` and of `b` in `{2, 3}`, and that the `a`s and
    /// `b`s partition `(ℓ, b_last]` up to the last complete stretch.
    pub fn check_structure(&self) -> Result<(), String> {
        let ell = Nat::from(self.ell);
        for (n, &(a, b)) in self.pairs.iter().enumerate() {
            if b != a + n as Nat + ell + 1 {
                return Err(format!(
                    "b_{n} = {b} but a_{n} + {n} + {ell} + 1 = {}",
                    a + n as Nat + ell + 1
                ));
            }
        }
        for (n, w) in self.pairs.windows(2).enumerate() {
            let (da, db) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            if !(1..=2).contains(&da) || !(2..=3).contains(&db) {
                return Err(format!("gaps at n = {n}: a grows by {da}, b by {db}"));
            }
        }
        let Some(&(a_last, _)) = self.pairs.last() else {
            return Ok(());
        };
        let mut seen = vec![0u8; a_last as usize + 1];
        for &(a, b) in &self.pairs {
            for v in [a, b] {
                if v <= a_last {
                    seen[v as usize] += 1;
                }
            }
        }
        for v in 0..=a_last {
            let expected = u8::from(v > ell);
            if seen[v as usize] != expected {
                return Err(format!(
                    "{v} occurs {} times among the pairs",
                    seen[v as usize]
                ));
            }
        }
        Ok(())
    }

    /// CSV with header `n,a_n,b_n`.
    pub fn write_csv(&self, w: impl Write) -> Result<(), SequenceIoError> {
        let mut out = csv::Writer::from_writer(w);
        for (n, &(a_n, b_n)) in self.pairs.iter().enumerate() {
            out.serialize(Row {
                n: n as u64,
                a_n,
                b_n,
            })?;
        }
        out.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn read_csv(ell: u32, r: impl Read) -> Result<Self, SequenceIoError> {
        let mut input = csv::Reader::from_reader(r);
        let mut pairs = Vec::new();
        for (row, rec) in input.deserialize::<Row>().enumerate() {
            let rec = rec?;
            if rec.n != row as u64 {
                return Err(SequenceIoError::Index { row, found: rec.n });
            }
            pairs.push((rec.a_n, rec.b_n));
        }
        Ok(PposSequence::new(ell, pairs))
    }

    pub fn to_json(&self) -> Result<String, SequenceIoError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, SequenceIoError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// The first `count` pairs of `a_n = mex({a_i, b_i : i < n} ∪ {0, …, ℓ})`,
/// `b_n = a_n + n + ℓ + 1`.
pub fn mex_sequence(ell: u32, count: usize) -> PposSequence {
    let mut used = MexSet::new();
    for v in 0..=ell as usize {
        used.insert(v);
    }
    let mut pairs = Vec::with_capacity(count);
    for n in 0..count {
        let a = used.mex();
        let b = a + n + ell as usize + 1;
        used.insert(a);
        used.insert(b);
        pairs.push((a as Nat, b as Nat));
    }
    PposSequence::new(ell, pairs)
}
