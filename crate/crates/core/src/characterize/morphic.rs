use super::{Mismatch, PposSequence};
use crate::automatic::{Coding, FibLetter, Morphism};
use crate::Nat;

/// Checks that `c(m^ω(0))`, indexed from `offset`, carries `a` at every
/// `a_n` and `b` at every `b_n` up to `horizon`, and that these positions
/// cover `offset..=horizon` exactly once.
pub fn morphic_coding_check(
    m: &Morphism,
    c: &Coding<FibLetter>,
    offset: Nat,
    pp: &PposSequence,
    horizon: Nat,
) -> Result<(), Mismatch> {
    if horizon < offset {
        return Ok(());
    }
    let len = (horizon - offset + 1) as usize;
    let word = m
        .fixed_point_prefix(0, len)
        .map_err(|e| Mismatch::new(0, format!("no fixed point: {e}")))?;
    let mut covered = vec![false; len];
    let mut visit = |v: Nat, want: FibLetter, n: usize| -> Result<(), Mismatch> {
        if v < offset || v > horizon {
            return Ok(());
        }
        let j = (v - offset) as usize;
        let got = c.apply(word[j]);
        if got != want {
            return Err(Mismatch::new(
                n as u64,
                format!("letter {j} is {got}, pair {n} needs {want} at {v}"),
            ));
        }
        if std::mem::replace(&mut covered[j], true) {
            return Err(Mismatch::new(
                n as u64,
                format!("{v} occurs twice among the pairs"),
            ));
        }
        Ok(())
    };
    for (n, &(a, b)) in pp.pairs().iter().enumerate() {
        if a > horizon {
            break;
        }
        visit(a, FibLetter::A, n)?;
        visit(b, FibLetter::B, n)?;
    }
    match covered.iter().position(|&seen| !seen) {
        None => Ok(()),
        Some(j) => Err(Mismatch::new(
            j as u64 + offset,
            format!("{} is in neither sequence", j as Nat + offset),
        )),
    }
}
