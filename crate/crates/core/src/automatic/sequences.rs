//! The sequence `g` of the `K²` closed form, computed two independent ways.

use crate::fib::{floor_phi, floor_phi2, hofstadter_h};

/// `g(0..len)` from its defining rule: `g(0) = 1`, `g(1) = 0`, and for
/// `n ≥ 2`, `g(n) = 1 − g(m)` when `⌊nφ⌋ = ⌊mφ²⌋ + 1` for some `m`, else `1`.
///
/// `m` is found by exact search; `⌊mφ²⌋ ≥ 2m` keeps it below `n`.
pub fn g_table_def(len: usize) -> Vec<u32> {
    let mut g = Vec::with_capacity(len);
    // ⌊mφ²⌋ + 1 for m = 0, 1, … (strictly increasing)
    let mut upper: Vec<u64> = Vec::new();
    for n in 0..len as u64 {
        let v = match n {
            0 => 1,
            1 => 0,
            _ => {
                let target = floor_phi(n);
                while upper.last().is_none_or(|&u| u < target) {
                    upper.push(floor_phi2(upper.len() as u64) + 1);
                }
                match upper.binary_search(&target) {
                    Ok(m) => 1 - g[m],
                    Err(_) => 1,
                }
            }
        };
        g.push(v);
    }
    g
}

/// `g(n)` from the defining rule.
pub fn g_def(n: u64) -> u32 {
    g_table_def(n as usize + 1)[n as usize]
}

/// `g(0..len)` from the Hofstadter recurrence: for `n ≥ 2`,
/// `g(n) = 1 − g(h(n−1))` when `h(n−2) < h(n−1)`, else `1`.
/// The base values are `g(0) = 1`, `g(1) = 0`.
pub fn g_table_hofstadter(len: usize) -> Vec<u32> {
    let mut g: Vec<u32> = Vec::with_capacity(len);
    for n in 0..len as u64 {
        let v = match n {
            0 => 1,
            1 => 0,
            _ => {
                let (h2, h1) = (hofstadter_h(n - 2), hofstadter_h(n - 1));
                if h2 < h1 {
                    1 - g[h1 as usize]
                } else {
                    1
                }
            }
        };
        g.push(v);
    }
    g
}
