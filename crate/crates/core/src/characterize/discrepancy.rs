//! `S_n`, `D_n = S_n − n/φ`, `ε_n` and `λ_ℓ(n)`, with every irrational bound
//! decided in integer arithmetic.

use std::cmp::Ordering;

use super::{mex_sequence, Mismatch, PposSequence};
use crate::fib::floor_phi;
use crate::Nat;

/// Sign of `p − q·√5` for `q ≥ 0`. Never `Equal` unless `p = q = 0`.
pub fn cmp_sqrt5(p: i128, q: i128) -> Ordering {
    debug_assert!(q >= 0);
    if p < 0 {
        return if q == 0 { p.cmp(&0) } else { Ordering::Less };
    }
    (p * p).cmp(&(5 * q * q))
}

/// `|a/n − φ| ≤ num/den`, decided exactly.
pub fn density_within(a: Nat, n: Nat, num: u64, den: u64) -> bool {
    let (a, n, num, den) = (a as i128, n as i128, num as i128, den as i128);
    // |2·den·a − den·n − den·n·√5| ≤ 2·num·n
    let centre = 2 * den * a - den * n;
    let slack = 2 * num * n;
    cmp_sqrt5(centre - slack, den * n) != Ordering::Greater
        && cmp_sqrt5(centre + slack, den * n) != Ordering::Less
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyProfile {
    ell: u32,
    pairs: PposSequence,
    /// `S_n = #{i : b_i < a_n}`
    s: Vec<u64>,
}

impl DiscrepancyProfile {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn horizon(&self) -> u64 {
        self.s.len() as u64 - 1
    }

    pub fn s(&self, n: u64) -> u64 {
        self.s[n as usize]
    }

    pub fn pairs(&self) -> &PposSequence {
        &self.pairs
    }

    /// `S_n + S_{S_n} − n + ℓ`. Meaningful for `n > ℓ`, where `S_n ≥ 1`.
    pub fn epsilon(&self, n: u64) -> i64 {
        let s = self.s(n);
        (s + self.s(s)) as i64 - n as i64 + i64::from(self.ell)
    }

    /// `λ_ℓ(n) = a_n − ⌊(n+ℓ)φ⌋`.
    pub fn lambda(&self, n: u64) -> i64 {
        self.pairs.a(n as usize) as i64 - floor_phi(n + u64::from(self.ell)) as i64
    }

    /// `|D_n| ≤ φℓ`. With `A = 2S_n + n` this is
    /// `A − ℓ ≤ (n+ℓ)√5` and `(n−ℓ)√5 ≤ A + ℓ`.
    pub fn discrepancy_bounded(&self, n: u64) -> bool {
        let ell = i128::from(self.ell);
        let n = n as i128;
        let a = 2 * self.s(n as u64) as i128 + n;
        let upper = cmp_sqrt5(a - ell, n + ell) != Ordering::Greater;
        let lower = n - ell <= 0 || cmp_sqrt5(a + ell, n - ell) != Ordering::Less;
        upper && lower
    }

    /// `|λ_ℓ(n)| ≤ ℓ√5 + 2`.
    pub fn lambda_bounded(&self, n: u64) -> bool {
        let excess = i128::from(self.lambda(n).unsigned_abs() as i64) - 2;
        cmp_sqrt5(excess, i128::from(self.ell)) != Ordering::Greater
    }

    /// Every identity and bound for `n ≤ horizon`; the first failure otherwise.
    pub fn verify(&self) -> Result<(), Mismatch> {
        let ell = u64::from(self.ell);
        for n in 0..=self.horizon() {
            let s = self.s(n);
            if n <= ell && s != 0 {
                return Err(Mismatch::new(n, format!("S_{n} = {s}, expected 0")));
            }
            if n == ell + 1 && s != 1 {
                return Err(Mismatch::new(n, format!("S_{n} = {s}, expected 1")));
            }
            if n > 0 && s < self.s(n - 1) {
                return Err(Mismatch::new(n, "S decreases"));
            }
            if n > ell {
                let eps = self.epsilon(n);
                if !(0..=1).contains(&eps) {
                    return Err(Mismatch::new(n, format!("ε_{n} = {eps}")));
                }
            }
            if !self.discrepancy_bounded(n) {
                return Err(Mismatch::new(n, format!("|D_{n}| > φℓ with S_{n} = {s}")));
            }
            if !self.lambda_bounded(n) {
                return Err(Mismatch::new(
                    n,
                    format!("|λ({n})| = {} exceeds ℓ√5 + 2", self.lambda(n).abs()),
                ));
            }
        }
        Ok(())
    }
}

/// Profile of `mex_sequence(ell)` for `n ≤ horizon`.
pub fn discrepancy_profile(ell: u32, horizon: u64) -> DiscrepancyProfile {
    let pairs = mex_sequence(ell, horizon as usize + 1);
    let mut s = Vec::with_capacity(pairs.len());
    let mut below = 0;
    for &(a, _) in pairs.pairs() {
        while pairs.b(below) < a {
            below += 1;
        }
        s.push(below as u64);
    }
    DiscrepancyProfile { ell, pairs, s }
}

/// `π_A(x) + π_B(x) = x − ℓ − 1` for `ℓ + 1 < x ≤ limit` and `π_A(b_n) = a_n`,
/// with `π` counting values strictly below `x`.
pub fn counting_check(pp: &PposSequence, limit: Nat) -> Result<(), Mismatch> {
    let ell = Nat::from(pp.ell());
    match pp.pairs().last() {
        Some(&(a, _)) if a >= limit => {}
        _ => return Err(Mismatch::new(limit, "sequence does not reach the limit")),
    }
    let (a_vals, b_vals) = (pp.a_values(), pp.b_values());
    let below = |v: &[Nat], x: Nat| v.partition_point(|&e| e < x) as Nat;
    for x in ell + 2..=limit {
        let (pa, pb) = (below(&a_vals, x), below(&b_vals, x));
        if pa + pb != x - ell - 1 {
            return Err(Mismatch::new(
                x,
                format!("π_A = {pa}, π_B = {pb}, expected sum {}", x - ell - 1),
            ));
        }
    }
    for (n, &(a, b)) in pp.pairs().iter().enumerate() {
        if b > limit {
            break;
        }
        if below(&a_vals, b) != a {
            return Err(Mismatch::new(
                n as u64,
                format!("π_A(b_{n}) = {} ≠ a_{n} = {a}", below(&a_vals, b)),
            ));
        }
    }
    Ok(())
}
