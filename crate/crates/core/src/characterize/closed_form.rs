//! Closed forms for the P-positions of `K¹`–`K⁴`, `W²` and `W³`.

use std::sync::OnceLock;

use crate::automatic::catalog;
use crate::automatic::Dfao;
use crate::fib::{floor_phi, floor_phi2, rep_f, val_f};
use crate::Nat;

use super::PposSequence;

fn cached(cell: &'static OnceLock<Dfao>, make: fn() -> Dfao) -> &'static Dfao {
    cell.get_or_init(make)
}

fn g_at(n: Nat) -> Nat {
    static CELL: OnceLock<Dfao> = OnceLock::new();
    Nat::from(
        cached(&CELL, catalog::g_dfao)
            .eval(n)
            .expect("the g automaton is total"),
    )
}

fn g3_at(n: Nat) -> Nat {
    static CELL: OnceLock<Dfao> = OnceLock::new();
    Nat::from(
        cached(&CELL, catalog::g3_dfao)
            .eval(n)
            .expect("the g3 automaton is total"),
    )
}

fn g4_at(n: Nat) -> Nat {
    static CELL: OnceLock<Dfao> = OnceLock::new();
    Nat::from(
        cached(&CELL, catalog::g4_dfao)
            .eval(n)
            .expect("the g4 automaton is total"),
    )
}

fn sorted(x: Nat, y: Nat) -> (Nat, Nat) {
    (x.min(y), x.max(y))
}

/// `K¹`: terminal (`a + b ≤ 1`), or `rep_F(a)` ends in 0 and
/// `rep_F(b) = rep_F(a)·1`. Either orientation is accepted.
pub fn closed_form_k1(a: Nat, b: Nat) -> bool {
    let (a, b) = sorted(a, b);
    if a + b <= 1 {
        return true;
    }
    let ra = rep_f(a);
    if !ra.ends_with_zero() {
        return false;
    }
    val_f::<Nat>(&ra.concat(&[1])).is_ok_and(|v| v == b)
}

/// `(⌊(n+1)φ⌋ − 1, ⌊(n+1)φ²⌋ − 1)`.
///
/// Index 0 gives the terminal pair `(0, 1)`, so the non-terminal pair
/// `(a_n, b_n)` of `K¹` is `k1_floor_pair(n + 1)`.
pub fn k1_floor_pair(n: Nat) -> (Nat, Nat) {
    (floor_phi(n + 1) - 1, floor_phi2(n + 1) - 1)
}

/// `(⌊nφ⌋ + g(n) − 1, ⌊nφ²⌋ + g(n))`.
pub fn closed_form_k2(n: Nat) -> (Nat, Nat) {
    let g = g_at(n);
    (floor_phi(n) + g - 1, floor_phi2(n) + g)
}

/// Membership in `{closed_form_k2(n) : n ≥ 0}`, either orientation.
///
/// The pair with index `n` has `b − a = n + 1`, which pins `n` down.
pub fn k2_member(x: Nat, y: Nat) -> bool {
    let (lo, hi) = sorted(x, y);
    if hi == lo {
        return false;
    }
    closed_form_k2(hi - lo - 1) == (lo, hi)
}

/// `n`-th non-terminal P-pair of `K³`:
/// `(⌊(n+2)φ⌋ + g₃(n+1) − 1, ⌊(n+2)φ²⌋ + g₃(n+1) + 1)`.
pub fn closed_form_k3(n: Nat) -> (Nat, Nat) {
    let g = g3_at(n + 1);
    (floor_phi(n + 2) + g - 1, floor_phi2(n + 2) + g + 1)
}

/// `n`-th non-terminal P-pair of `K⁴`:
/// `(⌊(n+2)φ⌋ + g₄(n+1), ⌊(n+2)φ²⌋ + g₄(n+1) + 3)`.
pub fn closed_form_k4(n: Nat) -> (Nat, Nat) {
    let g = g4_at(n + 1);
    (floor_phi(n + 2) + g, floor_phi2(n + 2) + g + 3)
}

/// `{(0,0)} ∪ {{n, 2n+1}} ∪ {{2⌊nφ⌋+2, 2⌊nφ²⌋+2}}`.
pub fn ppos_w2(x: Nat, y: Nat) -> bool {
    let (lo, hi) = sorted(x, y);
    if hi == 0 || hi == 2 * lo + 1 {
        return true;
    }
    if lo < 2 || lo % 2 == 1 || hi % 2 == 1 {
        return false;
    }
    let (p, q) = ((lo - 2) / 2, (hi - 2) / 2);
    // ⌊nφ²⌋ − ⌊nφ⌋ = n
    let n = q - p;
    floor_phi(n) == p && floor_phi2(n) == q
}

/// `{(0,0)} ∪ {{n, 2n+1}} ∪ {{n, 2n+2}}`.
pub fn ppos_w3(x: Nat, y: Nat) -> bool {
    let (lo, hi) = sorted(x, y);
    hi == 0 || hi == 2 * lo + 1 || hi == 2 * lo + 2
}

/// `g₃(0..=len)` read back from the `K³` pairs: `g₃(n+1) = a_n − ⌊(n+2)φ⌋ + 1`.
/// `g₃(0)` is not determined by the pairs and is set to 1.
pub fn g3_from_ppos(pp: &PposSequence) -> Vec<u32> {
    let mut out = vec![1];
    for (n, &(a, _)) in pp.pairs().iter().enumerate() {
        out.push((a + 1 - floor_phi(n as Nat + 2)) as u32);
    }
    out
}

/// `g₄(0..=len)` from the `K⁴` pairs: `g₄(n+1) = a_n − ⌊(n+2)φ⌋`, `g₄(0) = 1`.
pub fn g4_from_ppos(pp: &PposSequence) -> Vec<u32> {
    let mut out = vec![1];
    for (n, &(a, _)) in pp.pairs().iter().enumerate() {
        out.push((a - floor_phi(n as Nat + 2)) as u32);
    }
    out
}
