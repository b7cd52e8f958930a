//! End-to-end acceptance checks, one line of output each:
//! `PASS [n] <what> (<seconds> s)` or `FAIL [n] ...` with the reason.

use std::time::{Duration, Instant};

use wythoff_core::automatic::sequences::{g_table_def, g_table_hofstadter};
use wythoff_core::automatic::{
    catalog, infer_morphism, infer_morphism_auto, Coding, FibLetter, Morphism,
};
use wythoff_core::characterize::closed_form::{g3_from_ppos, g4_from_ppos};
use wythoff_core::characterize::spectrum::stabilization_length;
use wythoff_core::characterize::{
    closed_form_k1, closed_form_k3, closed_form_k4, counting_check, density_within,
    discrepancy_profile, k1_floor_pair, k2_member, mex_sequence, morphic_coding_check, ppos_w2,
    ppos_w3, spectrum_bounds,
};
use wythoff_core::fib::{hofstadter_h, rep_f};
use wythoff_core::game::{
    check_absorbing, check_stable, options, ppos_list, solve, GameSpec, Move, PnTable, Position,
    RedundancyIndex, WitnessSearch,
};
use wythoff_core::{Nat, Rational};

fn criterion(id: u32, what: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let secs = start.elapsed().as_secs_f64();
    let outcome = match outcome {
        Ok(_) if start.elapsed() > limit => {
            Err(format!("took {secs:.2} s, limit {} s", limit.as_secs()))
        }
        other => other,
    };
    match outcome {
        Ok(note) if note.is_empty() => println!("PASS [{id}] {what} ({secs:.2} s)"),
        Ok(note) => println!("PASS [{id}] {what} ({secs:.2} s; {note})"),
        Err(reason) => {
            println!("FAIL [{id}] {what} ({secs:.2} s): {reason}");
            panic!("[{id}] {what}: {reason}");
        }
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn same_set(table: &PnTable, candidate: impl Fn(Nat, Nat) -> bool) -> Result<(), String> {
    let b = table.bound();
    for y in 0..=b {
        for x in 0..=b {
            if table.is_p(x, y) != candidate(x, y) {
                return Err(format!(
                    "sets differ at ({x}, {y}); solver says P = {}",
                    table.is_p(x, y)
                ));
            }
        }
    }
    Ok(())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn solved(spec: GameSpec, bound: Nat) -> PnTable {
    solve(spec, bound).expect("bound within limit")
}

#[test]
fn c01_g_and_h_first_values() {
    criterion(
        1,
        "g(0..20) and h(0..20) from the definition and the automaton",
        secs(1),
        || {
            let g = [
                1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1,
            ];
            let h: [Nat; 21] = [
                0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12, 12,
            ];
            ensure(g_table_def(21) == g, || {
                format!("definition gives {:?}", g_table_def(21))
            })?;
            ensure(g_table_hofstadter(21) == g, || {
                "recurrence through h disagrees".into()
            })?;
            let auto = catalog::g_dfao()
                .eval_prefix(21)
                .map_err(|e| e.to_string())?;
            ensure(auto == g, || format!("automaton gives {auto:?}"))?;
            let closed: Vec<Nat> = (0..21).map(hofstadter_h).collect();
            ensure(closed == h, || format!("h closed form gives {closed:?}"))?;
            // h(0) = 0, h(n) = n − h(h(n−1))
            let mut rec = vec![0 as Nat];
            for n in 1..21 {
                let prev = rec[n - 1] as usize;
                rec.push(n as Nat - rec[prev]);
            }
            ensure(rec == h, || format!("h recurrence gives {rec:?}"))?;
            Ok(String::new())
        },
    );
}

#[test]
fn c02_k1_pairs_and_representations() {
    criterion(
        2,
        "K1: first ten pairs with representations, rule set equals solver on [0,800]²",
        secs(5),
        || {
            let expected: [(Nat, &str, Nat, &str); 10] = [
                (0, "ε", 1, "1"),
                (2, "10", 4, "101"),
                (3, "100", 6, "1001"),
                (5, "1000", 9, "10001"),
                (7, "1010", 12, "10101"),
                (8, "10000", 14, "100001"),
                (10, "10010", 17, "100101"),
                (11, "10100", 19, "101001"),
                (13, "100000", 22, "1000001"),
                (15, "100010", 25, "1000101"),
            ];
            let t = solved(GameSpec::terminal(1), 800);
            // the first row is the terminal pair (0, 1)
            let mut pairs = vec![(0, 1)];
            pairs.extend_from_slice(&ppos_list(&t).pairs()[..9]);
            for (row, (&(a, b), &(ea, ra, eb, rb))) in pairs.iter().zip(&expected).enumerate() {
                ensure((a, b) == (ea, eb), || {
                    format!("row {row}: solver ({a}, {b}), expected ({ea}, {eb})")
                })?;
                let (sa, sb) = (rep_f(a).to_string(), rep_f(b).to_string());
                ensure(sa == ra && sb == rb, || {
                    format!("row {row}: representations {sa}, {sb}")
                })?;
                ensure(closed_form_k1(a, b), || {
                    format!("row {row} rejected by the rule")
                })?;
            }
            same_set(&t, closed_form_k1)?;
            Ok(String::new())
        },
    );
}

#[test]
fn c03_k2_formula_set() {
    criterion(
        3,
        "K2: formula set with g equals the solver P-set on [0,800]²",
        secs(10),
        || {
            let t = solved(GameSpec::terminal(2), 800);
            // Outside the terminal triangle the formula alone must match; inside
            // it lists (0,1), (0,2) and their mirrors, the rest is terminal.
            same_set(&t, |x, y| k2_member(x, y) || x + y <= 2)?;
            let missing: Vec<(Nat, Nat)> = [(0, 0), (1, 1)]
                .into_iter()
                .filter(|&(x, y)| !k2_member(x, y))
                .collect();
            ensure(missing == [(0, 0), (1, 1)], || {
                format!("unexpected terminal coverage {missing:?}")
            })?;
            let spec = GameSpec::terminal(2);
            let formula = |x, y| k2_member(x, y) || x + y <= 1;
            ensure(check_stable(formula, spec, 800).holds(), || {
                "formula set not stable".into()
            })?;
            ensure(check_absorbing(formula, spec, 800, 0).holds(), || {
                "formula set not absorbing".into()
            })?;
            Ok("terminals (0,0), (1,1) come from x + y ≤ 2".into())
        },
    );
}

fn k3_k4(id: u32, ell: u32, table: [[Nat; 18]; 2], form: fn(Nat) -> (Nat, Nat)) {
    let what = format!("K{ell}: first 18 pairs from the closed form with g{ell} equal the solver");
    criterion(id, &what, secs(10), || {
        let t = solved(GameSpec::terminal(ell), 800);
        let pp = ppos_list(&t);
        for (n, (&a, &b)) in table[0].iter().zip(&table[1]).enumerate() {
            let want = (a, b);
            let f = form(n as Nat);
            ensure(f == want, || {
                format!("pair {n}: formula {f:?}, expected {want:?}")
            })?;
            ensure(pp.pairs()[n] == want, || {
                format!("pair {n}: solver {:?}", pp.pairs()[n])
            })?;
        }
        for (n, &p) in pp.pairs().iter().enumerate() {
            ensure(form(n as Nat) == p, || {
                format!("pair {n}: solver {p:?}, formula {:?}", form(n as Nat))
            })?;
        }
        Ok(format!("all {} pairs on the board agree", pp.len()))
    });
}

#[test]
fn c04a_k3_pairs() {
    let table = [
        [
            4, 5, 6, 7, 9, 11, 13, 15, 16, 18, 19, 21, 22, 24, 25, 27, 29, 30,
        ],
        [
            8, 10, 12, 14, 17, 20, 23, 26, 28, 31, 33, 36, 38, 41, 43, 46, 49, 51,
        ],
    ];
    k3_k4(4, 3, table, closed_form_k3);
}

#[test]
fn c04b_k4_pairs() {
    let table = [
        [
            5, 6, 7, 8, 9, 11, 13, 15, 17, 19, 20, 22, 23, 25, 26, 28, 29, 31,
        ],
        [
            10, 12, 14, 16, 18, 21, 24, 27, 30, 33, 35, 38, 40, 43, 45, 48, 50, 53,
        ],
    ];
    k3_k4(4, 4, table, closed_form_k4);
}

#[test]
fn c05_mex_recursion() {
    criterion(
        5,
        "mex recursion equals solver pairs for ell 0..9 on [0,1000]²",
        secs(60),
        || {
            for ell in 0..=9 {
                let found = ppos_list(&solved(GameSpec::terminal(ell), 1000));
                let expected = mex_sequence(ell, 1000).within(1000);
                ensure(found == expected, || {
                    format!("ell = {ell}: {} vs {} pairs", found.len(), expected.len())
                })?;
            }
            Ok(String::new())
        },
    );
}

#[test]
fn c06_blocking() {
    criterion(
        6,
        "W2 and W3 sets equal the solver on [0,400]², W1 equals K0 on [0,300]²",
        secs(30),
        || {
            same_set(&solved(GameSpec::blocking(2).unwrap(), 400), ppos_w2)
                .map_err(|e| format!("W2: {e}"))?;
            same_set(&solved(GameSpec::blocking(3).unwrap(), 400), ppos_w3)
                .map_err(|e| format!("W3: {e}"))?;
            let w1 = solved(GameSpec::blocking(1).unwrap(), 300);
            let k0 = solved(GameSpec::wythoff(), 300);
            same_set(&w1, |x, y| k0.is_p(x, y)).map_err(|e| format!("W1: {e}"))?;
            Ok(String::new())
        },
    );
}

#[test]
fn c07_heuristic() {
    criterion(
        7,
        "heuristic recovers the g, g3 and g4 morphisms and codings verbatim",
        secs(5),
        || {
            let g = g_table_def(256);
            let inf = infer_morphism(&g, 3).map_err(|e| format!("g: {e}"))?;
            let (mu, rho) = catalog::g();
            ensure(inf.morphism == mu, || {
                format!("g morphism {}", inf.morphism)
            })?;
            ensure(inf.coding == rho, || format!("g coding {}", inf.coding))?;
            ensure(inf.coding.to_string() == "0,2,3,5 ↦ 1; 1,4 ↦ 0", || {
                inf.coding.to_string()
            })?;

            let mut used = Vec::new();
            for (name, ell, expected) in [("g3", 3u32, catalog::g3()), ("g4", 4, catalog::g4())] {
                // 600 pairs, read off the solver
                let pp = ppos_list(&solved(GameSpec::terminal(ell), 1600));
                let pp = wythoff_core::PposSequence::new(ell, pp.pairs()[..600].to_vec());
                let prefix = if ell == 3 {
                    g3_from_ppos(&pp)
                } else {
                    g4_from_ppos(&pp)
                };
                let inf = infer_morphism_auto(&prefix).map_err(|e| format!("{name}: {e}"))?;
                ensure(inf.morphism == expected.0, || {
                    format!("{name} morphism {}", inf.morphism)
                })?;
                ensure(inf.coding == expected.1, || {
                    format!("{name} coding {}", inf.coding)
                })?;
                used.push(format!("{name} with t = {}", inf.t()));
            }
            Ok(used.join(", "))
        },
    );
}

#[test]
fn c08_morphic_codings() {
    criterion(
        8,
        "morphic words code the K1, K2, K3 pairs up to letter 10^4",
        secs(10),
        || {
            for ell in 1..=3u32 {
                let offset = Nat::from(ell) + 1;
                let (m, c) = catalog::ab_coding(ell).unwrap();
                let pp = ppos_list(&solved(GameSpec::terminal(ell), 16_500));
                let horizon = 10_000 + offset;
                ensure(pp.a(pp.len() - 1) >= horizon, || {
                    format!("ell = {ell}: board too small")
                })?;
                morphic_coding_check(&m, &c, offset, &pp, horizon)
                    .map_err(|e| format!("ell = {ell}: {e}"))?;
            }
            Ok(String::new())
        },
    );
}

#[test]
fn c09_discrepancy() {
    criterion(
        9,
        "S_n identity with ε_n in {0,1}, certified |D_n| ≤ φℓ, density at 10^5",
        secs(60),
        || {
            let horizon = 100_000;
            for ell in 1..=8 {
                let p = discrepancy_profile(ell, horizon);
                p.verify().map_err(|e| format!("ell = {ell}: {e}"))?;
                for n in u64::from(ell) + 1..=horizon {
                    let s = p.s(n);
                    let eps = p.epsilon(n);
                    ensure(
                        (s + p.s(s)) as i64 == n as i64 - i64::from(ell) + eps
                            && (0..=1).contains(&eps),
                        || format!("ell = {ell}, n = {n}: ε = {eps}"),
                    )?;
                }
                let a = p.pairs().a(horizon as usize);
                ensure(density_within(a, horizon, 1, 100), || {
                    format!("ell = {ell}: a_n/n = {a}/{horizon}")
                })?;
            }
            Ok(String::new())
        },
    );
}

#[test]
fn c10_spectrum_and_k1_closed_forms() {
    criterion(
        10,
        "spectrum statistics are (2ℓ+1)/(ℓ+1), (ℓ+1)/ℓ; K1 floor forms to 10^4",
        secs(5),
        || {
            let mut lengths = Vec::new();
            for ell in 2..=4i64 {
                let a = mex_sequence(ell as u32, 200).a_values();
                let target = (
                    Rational::new(2 * ell + 1, ell + 1),
                    Rational::new(ell + 1, ell),
                );
                let got = spectrum_bounds(&a).unwrap();
                ensure(got == target, || format!("ell = {ell}: {got:?}"))?;
                let len = stabilization_length(&a, target).unwrap();
                lengths.push(format!("ell = {ell} stable from length {len}"));
            }
            // index 0 of the floor forms is the terminal pair (0, 1)
            ensure(k1_floor_pair(0) == (0, 1), || {
                format!("{:?}", k1_floor_pair(0))
            })?;
            let pp = mex_sequence(1, 10_000);
            for n in 0..10_000 {
                let f = k1_floor_pair(n as Nat + 1);
                ensure(f == pp.pairs()[n], || {
                    format!("n = {n}: {f:?} vs {:?}", pp.pairs()[n])
                })?;
            }
            Ok(lengths.join(", "))
        },
    );
}

#[test]
fn c11_no_redundant_moves() {
    criterion(
        11,
        "every move of size ≤ 30 has a witness on [0,400]² for K1..K4, W2, W3",
        secs(120),
        || {
            let mut specs: Vec<GameSpec> = (1..=4).map(GameSpec::terminal).collect();
            specs.push(GameSpec::blocking(2).unwrap());
            specs.push(GameSpec::blocking(3).unwrap());
            for spec in specs {
                let t = solved(spec, 400);
                let index = RedundancyIndex::build(&t);
                for i in 1..=30 {
                    for m in [Move::horizontal(i), Move::vertical(i), Move::diagonal(i)] {
                        let m = m.unwrap();
                        let WitnessSearch::Found { position, .. } = index.witness(m) else {
                            return Err(format!("{spec}: move {m} {}", index.witness(m)));
                        };
                        let p_opts: Vec<Position> = options(position)
                            .into_iter()
                            .filter(|q| t.is_p(q.x, q.y))
                            .collect();
                        ensure(
                            !t.is_p(position.x, position.y)
                                && p_opts.len() as u32 == spec.winning_options_needed()
                                && p_opts.contains(&m.apply(position).unwrap()),
                            || format!("{spec}: witness {position} for {m} is not genuine"),
                        )?;
                    }
                }
            }
            Ok(String::new())
        },
    );
}

#[test]
fn c12_properties() {
    criterion(
        12,
        "kernel uniqueness, complementarity, automaton vs iteration, counting identity",
        secs(60),
        || {
            let mut specs: Vec<(GameSpec, Nat)> =
                (0..=6).map(|l| (GameSpec::terminal(l), 400)).collect();
            specs.extend((1..=4).map(|k| (GameSpec::blocking(k).unwrap(), 300)));
            for (spec, bound) in specs {
                let t = solved(spec, bound);
                let m = |x, y| t.is_p(x, y);
                ensure(check_stable(m, spec, bound).holds(), || {
                    format!("{spec}: not stable")
                })?;
                ensure(check_absorbing(m, spec, bound, 0).holds(), || {
                    format!("{spec}: not absorbing")
                })?;
                // flipping any single position breaks one of the two properties
                for p in [
                    Position::new(3, 5),
                    Position::new(bound / 2, bound / 3),
                    Position::new(bound, bound),
                ] {
                    let flipped = |x, y| {
                        (Position::new(x, y) == p || Position::new(y, x) == p) != t.is_p(x, y)
                    };
                    if spec.is_terminal(p) {
                        continue;
                    }
                    let both = check_stable(flipped, spec, bound).holds()
                        && check_absorbing(flipped, spec, bound, 0).holds();
                    ensure(!both, || format!("{spec}: flipping {p} keeps a kernel"))?;
                }
            }
            for ell in 0..=9 {
                mex_sequence(ell, 20_000)
                    .check_structure()
                    .map_err(|e| format!("ell = {ell}: {e}"))?;
            }
            for (name, morphism, coding) in catalog::NAMED {
                let m = Morphism::parse(morphism).unwrap();
                let c = Coding::parse(coding).unwrap();
                let d = catalog::named_dfao(name).unwrap();
                let iterated = c.apply_word(&m.fixed_point_prefix(0, 5000).unwrap());
                ensure(d.eval_prefix(5000).unwrap() == iterated, || {
                    format!("{name}: automaton and iteration differ")
                })?;
            }
            let fib = (
                Morphism::fibonacci(),
                Coding::new(vec![FibLetter::A, FibLetter::B]),
            );
            morphic_coding_check(&fib.0, &fib.1, 1, &mex_sequence(0, 4000), 5000)
                .map_err(|e| e.to_string())?;
            for ell in 1..=4 {
                counting_check(&mex_sequence(ell, 4000), 5000)
                    .map_err(|e| format!("ell = {ell}: {e}"))?;
            }
            Ok(String::new())
        },
    );
}
