use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use super::sweep::sweep;
use super::{solve, GameSpec, Move, PnTable, Position, SolveError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSearch {
    /// An N-position whose P-options are exactly `p_options`, one of them
    /// reached by the move searched for.
    Found {
        position: Position,
        p_options: Vec<Position>,
    },
    /// No witness on `[0, bound]²`. This does not show the move is redundant.
    Inconclusive { bound: u64 },
}

impl WitnessSearch {
    pub fn position(&self) -> Option<Position> {
        match self {
            WitnessSearch::Found { position, .. } => Some(*position),
            WitnessSearch::Inconclusive { .. } => None,
        }
    }
}

impl fmt::Display for WitnessSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessSearch::Found { position, .. } => write!(f, "witness {position}"),
            WitnessSearch::Inconclusive { bound } => write!(f, "inconclusive at bound {bound}"),
        }
    }
}

/// First witness (in anti-diagonal order) for every move that has one.
///
/// A witness for `m` is an N-position with exactly as many P-options as it
/// needs to be N (1 for `K^ℓ`, `k` for `W^k`), one of them reached by `m`.
/// Removing `m` from the rules would flip such a position to P.
#[derive(Debug, Clone)]
pub struct RedundancyIndex {
    bound: u64,
    witnesses: HashMap<Move, (Position, Vec<Position>)>,
}

impl RedundancyIndex {
    pub fn build(table: &PnTable) -> Self {
        let spec = table.spec();
        let bound = table.bound();
        let needed = spec.winning_options_needed();

        // rows[y]: the x with (x, y) in P, increasing; by symmetry rows[x]
        // also lists column x.
        let mut rows: Vec<Vec<u64>> = vec![Vec::new(); bound as usize + 1];
        // diagonals keyed by x − y + bound
        let mut diags: Vec<Vec<u64>> = vec![Vec::new(); 2 * bound as usize + 1];
        for y in 0..=bound {
            for x in 0..=bound {
                if table.is_p(x, y) {
                    rows[y as usize].push(x);
                    diags[(x + bound - y) as usize].push(x);
                }
            }
        }

        let mut witnesses = HashMap::new();
        sweep::<()>(bound, |x, y, count| {
            let here = Position::new(x, y);
            let member = table.is_p(x, y);
            if !member && !spec.is_terminal(here) && count == needed {
                let d = bound + x - y;
                let mut p_options: Vec<Position> = rows[y as usize]
                    .iter()
                    .take_while(|&&a| a < x)
                    .map(|&a| Position::new(a, y))
                    .collect();
                p_options.extend(
                    rows[x as usize]
                        .iter()
                        .take_while(|&&b| b < y)
                        .map(|&b| Position::new(x, b)),
                );
                p_options.extend(
                    diags[d as usize]
                        .iter()
                        .take_while(|&&a| a < x)
                        .map(|&a| Position::new(a, a + y - x)),
                );
                debug_assert_eq!(p_options.len() as u32, needed);
                for q in &p_options {
                    let m = Move::between(here, *q).expect("options are reachable");
                    witnesses
                        .entry(m)
                        .or_insert_with(|| (here, p_options.clone()));
                }
            }
            ControlFlow::Continue(member)
        });
        RedundancyIndex { bound, witnesses }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn witness(&self, m: Move) -> WitnessSearch {
        match self.witnesses.get(&m) {
            Some((position, p_options)) => WitnessSearch::Found {
                position: *position,
                p_options: p_options.clone(),
            },
            None => WitnessSearch::Inconclusive { bound: self.bound },
        }
    }
}

pub fn non_redundant_witness(
    spec: GameSpec,
    m: Move,
    bound: u64,
) -> Result<WitnessSearch, SolveError> {
    let table = solve(spec, bound)?;
    Ok(RedundancyIndex::build(&table).witness(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::options;

    fn assert_genuine(spec: GameSpec, bound: u64, m: Move) {
        let t = solve(spec, bound).unwrap();
        let w = RedundancyIndex::build(&t).witness(m);
        let WitnessSearch::Found {
            position,
            p_options,
        } = w
        else {
            panic!("{spec} {m}: {w}");
        };
        let brute: Vec<Position> = options(position)
            .into_iter()
            .filter(|q| t.is_p(q.x, q.y))
            .collect();
        assert!(!t.is_p(position.x, position.y));
        assert_eq!(brute.len() as u32, spec.winning_options_needed());
        let mut sorted = p_options.clone();
        sorted.sort();
        let mut brute_sorted = brute;
        brute_sorted.sort();
        assert_eq!(sorted, brute_sorted);
        assert!(p_options.contains(&m.apply(position).unwrap()));
    }

    #[test]
    fn witnesses_are_genuine() {
        assert_genuine(GameSpec::terminal(2), 200, Move::horizontal(1).unwrap());
        assert_genuine(GameSpec::wythoff(), 100, Move::diagonal(1).unwrap());
        for i in 1..=20 {
            assert_genuine(
                GameSpec::blocking(2).unwrap(),
                300,
                Move::diagonal(i).unwrap(),
            );
        }
    }

    #[test]
    fn large_move_is_inconclusive_on_small_board() {
        let w =
            non_redundant_witness(GameSpec::wythoff(), Move::vertical(50).unwrap(), 10).unwrap();
        assert_eq!(w, WitnessSearch::Inconclusive { bound: 10 });
    }
}
