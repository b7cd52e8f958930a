//! Anti-diagonal traversal with running member counts per line.

use std::ops::ControlFlow;

/// Visits every position of `[0, bound]²` in increasing `x + y` (then
/// increasing `x`), passing the number of member options seen so far.
///
/// `decide` returns whether the position is a member, or breaks. Every option
/// of a position has a smaller coordinate sum, so the counts are final when
/// the position is visited.
pub(crate) fn sweep<B>(
    bound: u64,
    mut decide: impl FnMut(u64, u64, u32) -> ControlFlow<B, bool>,
) -> Option<B> {
    let side = bound as usize + 1;
    let mut row = vec![0u32; side];
    let mut col = vec![0u32; side];
    // index x − y + bound
    let mut diag = vec![0u32; 2 * side - 1];
    for s in 0..=2 * bound {
        let lo = s.saturating_sub(bound);
        let hi = s.min(bound);
        for x in lo..=hi {
            let y = s - x;
            let (xi, yi) = (x as usize, y as usize);
            let di = xi + side - 1 - yi;
            let count = row[yi] + col[xi] + diag[di];
            match decide(x, y, count) {
                ControlFlow::Break(b) => return Some(b),
                ControlFlow::Continue(true) => {
                    row[yi] += 1;
                    col[xi] += 1;
                    diag[di] += 1;
                }
                ControlFlow::Continue(false) => {}
            }
        }
    }
    None
}

/// [`sweep`] restricted to `x ≤ y` for symmetric membership: each decision
/// also counts the mirror position.
pub(crate) fn sweep_symmetric(bound: u64, mut decide: impl FnMut(u64, u64, u32) -> bool) {
    let side = bound as usize + 1;
    let mut row = vec![0u32; side];
    let mut col = vec![0u32; side];
    let mut diag = vec![0u32; 2 * side - 1];
    for s in 0..=2 * bound {
        let lo = s.saturating_sub(bound);
        let hi = s / 2;
        for x in lo..=hi {
            let y = s - x;
            let (xi, yi) = (x as usize, y as usize);
            let di = xi + side - 1 - yi;
            if decide(x, y, row[yi] + col[xi] + diag[di]) {
                row[yi] += 1;
                col[xi] += 1;
                diag[di] += 1;
                if x != y {
                    row[xi] += 1;
                    col[yi] += 1;
                    diag[yi + side - 1 - xi] += 1;
                }
            }
        }
    }
}
