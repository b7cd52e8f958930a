//! Recovering a φ-morphism and a coding from a prefix of a sequence.
//!
//! Under a φ-morphism the image `μ^i(w_n)` of the letter at position `n`
//! occupies the positions whose representations extend `rep_F(n)` by `i`
//! digits. The `t`-type of `n` collects `w_n` and those `t` factors; types are
//! numbered in order of first appearance and become the letters of the
//! inferred morphism.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use super::{
    commutes_with_fibonacci, structural_coding, Coding, FibLetter, Letter, Morphism, MorphismError,
};
use crate::fib::{rep_f, val_f};

/// Range of `t` tried by [`infer_morphism_auto`].
pub const AUTO_MIN_TYPES: usize = 2;
pub const AUTO_MAX_TYPES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InferError {
    #[error("prefix of length {len} is too short to build any {t}-type")]
    Empty { len: usize, t: usize },
    #[error(
        "type {letter} has image {expected:?} at position {first} but {found:?} at position {position}; \
         try a larger t or a longer prefix"
    )]
    Inconsistent {
        letter: Letter,
        first: u64,
        position: u64,
        expected: Vec<Letter>,
        found: Vec<Letter>,
    },
    #[error("image of type {letter} is not determined inside the prefix; use a longer prefix")]
    PrefixTooShort { letter: Letter },
    #[error(
        "inferred morphism predicts a different symbol at position {position}; try a larger t"
    )]
    PredictionMismatch { position: usize },
    #[error("type {0} breaks the Fibonacci shape f∘μ = σ∘f")]
    NotFibonacciShaped(Letter),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// `(α(i, n), β(i, n))`: first and last positions of `μ^i(w_n)`.
pub fn block_span(i: usize, n: u64) -> (u64, u64) {
    let zeros = vec![0u8; i];
    let alpha = val_f(&rep_f(n).concat(&zeros)).expect("block start overflows u64");
    let next: u64 = val_f(&rep_f(n + 1).concat(&zeros)).expect("block end overflows u64");
    (alpha, next - 1)
}

/// Distinct `t`-types of a prefix and the type of every position that has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTable<S> {
    t: usize,
    types: Vec<Vec<Vec<S>>>,
    assignment: Vec<Letter>,
}

impl<S: Copy + Eq + Hash> TypeTable<S> {
    /// Types of every position `n` with `β(t, n)` inside the prefix.
    pub fn build(prefix: &[S], t: usize) -> Self {
        let mut index: HashMap<Vec<Vec<S>>, Letter> = HashMap::new();
        let mut types = Vec::new();
        let mut assignment = Vec::new();
        let len = prefix.len() as u64;
        for n in 0u64.. {
            let spans: Vec<(u64, u64)> = (1..=t).map(|i| block_span(i, n)).collect();
            let last = spans.last().map_or(n, |&(_, b)| b);
            if last >= len {
                break;
            }
            let mut key = Vec::with_capacity(t + 1);
            key.push(vec![prefix[n as usize]]);
            for (a, b) in spans {
                key.push(prefix[a as usize..=b as usize].to_vec());
            }
            let id = *index.entry(key.clone()).or_insert_with(|| {
                types.push(key);
                (types.len() - 1) as Letter
            });
            assignment.push(id);
        }
        TypeTable {
            t,
            types,
            assignment,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    /// The `(t+1)` factors of a type.
    pub fn factors(&self, letter: Letter) -> &[Vec<S>] {
        &self.types[letter as usize]
    }

    /// Number of leading positions that received a type.
    pub fn typed_len(&self) -> usize {
        self.assignment.len()
    }

    pub fn type_of(&self, n: u64) -> Option<Letter> {
        self.assignment.get(n as usize).copied()
    }

    pub fn assignment(&self) -> &[Letter] {
        &self.assignment
    }
}

/// Outcome of the inference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inference<S> {
    pub morphism: Morphism,
    /// Type to first tuple element.
    pub coding: Coding<S>,
    /// Type to `a` (image of length 2) or `b` (image of length 1).
    pub structural: Coding<FibLetter>,
    pub types: TypeTable<S>,
}

impl<S> Inference<S> {
    pub fn t(&self) -> usize {
        self.types.t
    }
}

/// Infers a φ-morphism from `prefix` using `t`-types.
pub fn infer_morphism<S>(prefix: &[S], t: usize) -> Result<Inference<S>, InferError>
where
    S: Copy + Eq + Hash + Debug,
{
    let table = TypeTable::build(prefix, t);
    let typed = table.typed_len() as u64;
    if typed == 0 {
        return Err(InferError::Empty {
            len: prefix.len(),
            t,
        });
    }

    let mut images: Vec<Option<(u64, Vec<Letter>)>> = vec![None; table.type_count()];
    for n in 0..typed {
        let (a, b) = block_span(1, n);
        if b >= typed {
            break;
        }
        let letter = table.assignment[n as usize];
        let found = table.assignment[a as usize..=b as usize].to_vec();
        match &images[letter as usize] {
            None => images[letter as usize] = Some((n, found)),
            Some((first, expected)) if *expected != found => {
                return Err(InferError::Inconsistent {
                    letter,
                    first: *first,
                    position: n,
                    expected: expected.clone(),
                    found,
                })
            }
            Some(_) => {}
        }
    }

    let images = images
        .into_iter()
        .enumerate()
        .map(|(c, img)| {
            img.map(|(_, w)| w).ok_or(InferError::PrefixTooShort {
                letter: c as Letter,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let morphism = Morphism::new(images)?;
    let coding = Coding::new(table.types.iter().map(|ty| ty[0][0]).collect());
    let structural = structural_coding(&morphism)?;
    commutes_with_fibonacci(&morphism, &structural).map_err(InferError::NotFibonacciShaped)?;

    let predicted = coding.apply_word(&morphism.fixed_point_prefix(0, prefix.len())?);
    if let Some(position) = predicted.iter().zip(prefix).position(|(p, w)| p != w) {
        return Err(InferError::PredictionMismatch { position });
    }

    Ok(Inference {
        morphism,
        coding,
        structural,
        types: table,
    })
}

/// Tries `t = 2, 3, …, 6` and returns the first consistent inference, or the
/// error of the last attempt.
pub fn infer_morphism_auto<S>(prefix: &[S]) -> Result<Inference<S>, InferError>
where
    S: Copy + Eq + Hash + Debug,
{
    let mut last = None;
    for t in AUTO_MIN_TYPES..=AUTO_MAX_TYPES {
        match infer_morphism(prefix, t) {
            Ok(inf) => return Ok(inf),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one t is tried"))
}
