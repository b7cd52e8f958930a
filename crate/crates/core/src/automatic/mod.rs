//! Morphisms, codings and the automata they induce.
//!
//! A morphism here is a letter-to-word map over the alphabet `0..size`. The
//! letters are written with single base-36 characters (`0`–`9`, `a`–`z`) and
//! may also be written as parenthesised decimals, so both `7 -> ab` and
//! `7 -> (11)(12)` parse.

pub mod catalog;
mod dfao;
mod infer;
pub mod sequences;
pub mod walnut;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use dfao::{promote, Dfao, DfaoError};
pub use infer::{
    block_span, infer_morphism, infer_morphism_auto, InferError, Inference, TypeTable,
    AUTO_MAX_TYPES, AUTO_MIN_TYPES,
};

pub type Letter = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("image of letter {0} is empty")]
    EmptyImage(Letter),
    #[error(
        "letter {letter} in the image of {source_letter} is outside the alphabet of size {size}"
    )]
    LetterOutOfRange {
        source_letter: Letter,
        letter: Letter,
        size: usize,
    },
    #[error("letter {0} is not in the alphabet")]
    UnknownLetter(Letter),
    #[error(
        "letter {0} is not prolongable: its image must start with it and have length at least 2"
    )]
    NotProlongable(Letter),
    #[error("image of letter {letter} has length {len}; φ-morphisms need lengths 1 or 2")]
    NotPhiMorphism { letter: Letter, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Letter-to-word map over a finite alphabet `0..alphabet_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    images: Vec<Vec<Letter>>,
}

impl Morphism {
    pub fn new(images: Vec<Vec<Letter>>) -> Result<Self, MorphismError> {
        let size = images.len();
        for (c, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(MorphismError::EmptyImage(c as Letter));
            }
            if let Some(&bad) = img.iter().find(|&&d| d as usize >= size) {
                return Err(MorphismError::LetterOutOfRange {
                    source_letter: c as Letter,
                    letter: bad,
                    size,
                });
            }
        }
        Ok(Morphism { images })
    }

    /// The Fibonacci morphism `a ↦ ab, b ↦ a` with `a = 0`, `b = 1`.
    pub fn fibonacci() -> Self {
        Morphism {
            images: vec![vec![0, 1], vec![0]],
        }
    }

    /// Parses `"0 -> 01, 1 -> 2, 2 -> 31"`; `↦` is accepted for `->` and
    /// entries may be separated by commas, semicolons or newlines. Every
    /// letter of the alphabet must be defined exactly once.
    pub fn parse(text: &str) -> Result<Self, MorphismError> {
        let mut defs: BTreeMap<Letter, Vec<Letter>> = BTreeMap::new();
        for entry in split_entries(text) {
            let (lhs, rhs) = split_arrow(entry)?;
            let src = parse_letters(lhs)?;
            if src.len() != 1 {
                return Err(MorphismError::Parse(format!(
                    "expected one letter before the arrow in {entry:?}"
                )));
            }
            let img = parse_letters(rhs)?;
            if defs.insert(src[0], img).is_some() {
                return Err(MorphismError::Parse(format!(
                    "letter {} defined twice",
                    src[0]
                )));
            }
        }
        let size = defs.len();
        let mut images = Vec::with_capacity(size);
        for (expected, (c, img)) in defs.into_iter().enumerate() {
            if c as usize != expected {
                return Err(MorphismError::Parse(format!(
                    "letter {expected} has no image"
                )));
            }
            images.push(img);
        }
        Morphism::new(images)
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, c: Letter) -> &[Letter] {
        &self.images[c as usize]
    }

    pub fn images(&self) -> &[Vec<Letter>] {
        &self.images
    }

    /// All image lengths are 1 or 2.
    pub fn is_phi_candidate(&self) -> bool {
        self.images.iter().all(|img| matches!(img.len(), 1 | 2))
    }

    pub(crate) fn check_phi_candidate(&self) -> Result<(), MorphismError> {
        match self
            .images
            .iter()
            .position(|img| !matches!(img.len(), 1 | 2))
        {
            Some(c) => Err(MorphismError::NotPhiMorphism {
                letter: c as Letter,
                len: self.images[c].len(),
            }),
            None => Ok(()),
        }
    }

    pub fn apply(&self, word: &[Letter]) -> Vec<Letter> {
        word.iter()
            .flat_map(|&c| self.image(c).iter().copied())
            .collect()
    }

    /// `μ^i(c)`.
    pub fn power_image(&self, c: Letter, i: usize) -> Vec<Letter> {
        let mut w = vec![c];
        for _ in 0..i {
            w = self.apply(&w);
        }
        w
    }

    /// First `len` letters of the fixed point starting with `seed`.
    pub fn fixed_point_prefix(
        &self,
        seed: Letter,
        len: usize,
    ) -> Result<Vec<Letter>, MorphismError> {
        if seed as usize >= self.alphabet_size() {
            return Err(MorphismError::UnknownLetter(seed));
        }
        let start = self.image(seed);
        if start[0] != seed {
            return Err(MorphismError::NotProlongable(seed));
        }
        if len <= 1 {
            return Ok(vec![seed; len]);
        }
        if start.len() < 2 {
            return Err(MorphismError::NotProlongable(seed));
        }
        let mut w = start.to_vec();
        let mut next = 1;
        while w.len() < len {
            let c = w[next];
            w.extend_from_slice(self.image(c));
            next += 1;
        }
        w.truncate(len);
        Ok(w)
    }

    /// Letters reachable from `seed` by iterating the morphism.
    pub fn reachable_from(&self, seed: Letter) -> Vec<Letter> {
        let mut seen = vec![false; self.alphabet_size()];
        let mut stack = vec![seed];
        seen[seed as usize] = true;
        while let Some(c) = stack.pop() {
            for &d in self.image(c) {
                if !seen[d as usize] {
                    seen[d as usize] = true;
                    stack.push(d);
                }
            }
        }
        (0..self.alphabet_size() as Letter)
            .filter(|&c| seen[c as usize])
            .collect()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.alphabet_size();
        for (c, img) in self.images.iter().enumerate() {
            if c > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} ↦ ", letter_token(c as Letter, size))?;
            for &d in img {
                f.write_str(&letter_token(d, size))?;
            }
        }
        Ok(())
    }
}

/// How a letter is written: a base-36 character for alphabets up to 36
/// letters, a parenthesised decimal otherwise.
pub fn letter_token(c: Letter, alphabet_size: usize) -> String {
    if alphabet_size <= 36 {
        char::from_digit(c, 36)
            .map(String::from)
            .unwrap_or_else(|| format!("({c})"))
    } else if c < 10 {
        c.to_string()
    } else {
        format!("({c})")
    }
}

fn split_entries(text: &str) -> impl Iterator<Item = &str> {
    text.split([',', ';', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
}

fn split_arrow(entry: &str) -> Result<(&str, &str), MorphismError> {
    entry
        .split_once("->")
        .or_else(|| entry.split_once('↦'))
        .map(|(l, r)| (l.trim(), r.trim()))
        .ok_or_else(|| MorphismError::Parse(format!("missing arrow in {entry:?}")))
}

fn parse_letters(s: &str) -> Result<Vec<Letter>, MorphismError> {
    let mut out = Vec::new();
    let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        if c == '(' {
            let mut num = String::new();
            loop {
                match chars.next() {
                    Some(')') => break,
                    Some(d) if d.is_ascii_digit() => num.push(d),
                    _ => {
                        return Err(MorphismError::Parse(format!(
                            "bad parenthesised letter in {s:?}"
                        )))
                    }
                }
            }
            out.push(
                num.parse()
                    .map_err(|_| MorphismError::Parse(format!("empty letter in {s:?}")))?,
            );
        } else {
            let d = c
                .to_digit(36)
                .ok_or_else(|| MorphismError::Parse(format!("bad letter {c:?} in {s:?}")))?;
            out.push(d);
        }
    }
    Ok(out)
}

/// Letter-to-letter output map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coding<O = u32> {
    outputs: Vec<O>,
}

impl<O: Copy + Eq> Coding<O> {
    pub fn new(outputs: Vec<O>) -> Self {
        Coding { outputs }
    }

    pub fn size(&self) -> usize {
        self.outputs.len()
    }

    pub fn apply(&self, c: Letter) -> O {
        self.outputs[c as usize]
    }

    pub fn apply_word(&self, word: &[Letter]) -> Vec<O> {
        word.iter().map(|&c| self.apply(c)).collect()
    }

    pub fn outputs(&self) -> &[O] {
        &self.outputs
    }

    /// Letters grouped by output, groups ordered by their smallest letter.
    pub fn groups(&self) -> Vec<(Vec<Letter>, O)> {
        let mut groups: Vec<(Vec<Letter>, O)> = Vec::new();
        for (c, &o) in self.outputs.iter().enumerate() {
            match groups.iter_mut().find(|(_, out)| *out == o) {
                Some((letters, _)) => letters.push(c as Letter),
                None => groups.push((vec![c as Letter], o)),
            }
        }
        groups
    }
}

impl Coding<u32> {
    /// Parses `"0,2,3,5 -> 1; 1,4 -> 0"`. Letters use the same notation as
    /// morphisms; outputs are decimal.
    pub fn parse(text: &str) -> Result<Self, MorphismError> {
        let mut map: BTreeMap<Letter, u32> = BTreeMap::new();
        for group in text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let (lhs, rhs) = split_arrow(group)?;
            let out: u32 = rhs
                .parse()
                .map_err(|_| MorphismError::Parse(format!("bad output {rhs:?}")))?;
            for tok in lhs.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let letter = parse_coding_letter(tok)?;
                if map.insert(letter, out).is_some() {
                    return Err(MorphismError::Parse(format!("letter {letter} coded twice")));
                }
            }
        }
        let outputs: Vec<u32> = map.values().copied().collect();
        if map.keys().enumerate().any(|(i, &c)| c as usize != i) {
            return Err(MorphismError::Parse("coding is not total on 0..n".into()));
        }
        Ok(Coding { outputs })
    }
}

/// A single letter in a coding list: one base-36 character, `(n)`, or a
/// plain decimal of several digits.
fn parse_coding_letter(tok: &str) -> Result<Letter, MorphismError> {
    if tok.chars().count() == 1 || tok.starts_with('(') {
        let letters = parse_letters(tok)?;
        if letters.len() == 1 {
            return Ok(letters[0]);
        }
    } else if let Ok(v) = tok.parse() {
        return Ok(v);
    }
    Err(MorphismError::Parse(format!("bad letter {tok:?}")))
}

impl<O: Copy + Eq + fmt::Display> fmt::Display for Coding<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.size();
        for (i, (letters, out)) in self.groups().into_iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let names: Vec<String> = letters.iter().map(|&c| letter_token(c, size)).collect();
            write!(f, "{} ↦ {}", names.join(","), out)?;
        }
        Ok(())
    }
}

/// The two letters of the Fibonacci word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FibLetter {
    A,
    B,
}

impl FibLetter {
    /// Letter index in [`Morphism::fibonacci`].
    pub fn as_letter(self) -> Letter {
        match self {
            FibLetter::A => 0,
            FibLetter::B => 1,
        }
    }
}

impl fmt::Display for FibLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FibLetter::A => "a",
            FibLetter::B => "b",
        })
    }
}

/// The coding `f` sending a letter to `a` when its image has length 2 and to
/// `b` when it has length 1.
pub fn structural_coding(m: &Morphism) -> Result<Coding<FibLetter>, MorphismError> {
    m.check_phi_candidate()?;
    Ok(Coding::new(
        m.images()
            .iter()
            .map(|img| {
                if img.len() == 2 {
                    FibLetter::A
                } else {
                    FibLetter::B
                }
            })
            .collect(),
    ))
}

/// Checks `f(μ(i)) = σ(f(i))` for every letter; returns the first letter
/// where it fails.
pub fn commutes_with_fibonacci(m: &Morphism, f: &Coding<FibLetter>) -> Result<(), Letter> {
    let sigma = Morphism::fibonacci();
    for c in 0..m.alphabet_size() as Letter {
        let lhs: Vec<Letter> = m.image(c).iter().map(|&d| f.apply(d).as_letter()).collect();
        let rhs = sigma.image(f.apply(c).as_letter());
        if lhs != rhs {
            return Err(c);
        }
    }
    Ok(())
}
