use crate::automatic::{catalog, Coding, FibLetter, Morphism};
use crate::characterize::{
    closed_form_k1, closed_form_k3, closed_form_k4, counting_check, density_within,
    discrepancy_profile, k2_member, mex_sequence, morphic_coding_check, ppos_w2, ppos_w3,
    PposSequence,
};
use crate::game::{
    check_absorbing, check_stable, ppos_list, solve, GameSpec, Move, PnTable, Position,
    RedundancyIndex, Verdict,
};

use super::{
    CheckResult, Suite, SuiteParams, VerificationReport, VerifyError, DEFAULT_HORIZON,
    DEFAULT_K_BOUND, DEFAULT_W_BOUND,
};

const REDUNDANCY_MAX_STEP: u64 = 30;

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let mut items = Vec::new();
    match suite {
        Suite::All => {
            for s in [
                Suite::Kernel,
                Suite::ClosedForms,
                Suite::Mex,
                Suite::Blocking,
                Suite::Discrepancy,
                Suite::Redundancy,
                Suite::Morphic,
            ] {
                collect(s, params, &mut items)?;
            }
        }
        s => collect(s, params, &mut items)?,
    }
    Ok(VerificationReport::new(items))
}

fn collect(suite: Suite, p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    match suite {
        Suite::Kernel => kernel(p, out),
        Suite::ClosedForms => closed_forms(p, out),
        Suite::Mex => mex(p, out),
        Suite::Blocking => blocking(p, out),
        Suite::Discrepancy => discrepancy(p, out),
        Suite::Redundancy => redundancy(p, out),
        Suite::Morphic => morphic(p, out),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn k_bound(p: &SuiteParams) -> u64 {
    p.bound.unwrap_or(DEFAULT_K_BOUND)
}

fn w_bound(p: &SuiteParams) -> u64 {
    p.bound.unwrap_or(DEFAULT_W_BOUND)
}

fn ells(p: &SuiteParams, default: std::ops::RangeInclusive<u32>) -> Vec<u32> {
    p.ell.map_or_else(|| default.collect(), |l| vec![l])
}

fn blocking_spec(k: u32) -> Result<GameSpec, VerifyError> {
    GameSpec::blocking(k).map_err(|e| VerifyError::Unsupported {
        suite: "blocking",
        what: e.to_string(),
    })
}

fn solved(spec: GameSpec, bound: u64) -> Result<PnTable, String> {
    solve(spec, bound).map_err(|e| e.to_string())
}

fn verdict(v: Verdict) -> Result<(), String> {
    match v {
        Verdict::Holds => Ok(()),
        Verdict::Fails(c) => Err(c.to_string()),
    }
}

/// First position of `[0, bound]²` where `candidate` and the table disagree.
fn same_set(table: &PnTable, candidate: impl Fn(u64, u64) -> bool) -> Result<(), String> {
    let b = table.bound();
    for y in 0..=b {
        for x in 0..=b {
            let (t, c) = (table.is_p(x, y), candidate(x, y));
            if t != c {
                let side = if t {
                    "P in the game but not in the formula"
                } else {
                    "in the formula but N"
                };
                return Err(format!("{} is {side}", Position::new(x, y)));
            }
        }
    }
    Ok(())
}

fn same_pairs(found: &[(u64, u64)], expected: &[(u64, u64)]) -> Result<(), String> {
    if let Some(n) = (0..found.len().min(expected.len())).find(|&n| found[n] != expected[n]) {
        return Err(format!(
            "pair {n}: game {:?}, formula {:?}",
            found[n], expected[n]
        ));
    }
    if found.len() != expected.len() {
        return Err(format!(
            "{} pairs from the game, {} from the formula",
            found.len(),
            expected.len()
        ));
    }
    Ok(())
}

fn kernel(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let mut specs: Vec<(GameSpec, u64)> = Vec::new();
    match (p.ell, p.k) {
        (None, None) => {
            specs.extend((0..=4).map(|l| (GameSpec::terminal(l), k_bound(p))));
            for k in 1..=3 {
                specs.push((blocking_spec(k)?, w_bound(p)));
            }
        }
        (ell, k) => {
            if let Some(l) = ell {
                specs.push((GameSpec::terminal(l), k_bound(p)));
            }
            if let Some(k) = k {
                specs.push((blocking_spec(k)?, w_bound(p)));
            }
        }
    }
    for (spec, bound) in specs {
        out.push(CheckResult::timed(
            format!("kernel/{spec}"),
            spec.to_string(),
            bound,
            || {
                let t = solved(spec, bound)?;
                verdict(check_stable(|x, y| t.is_p(x, y), spec, bound))?;
                verdict(check_absorbing(|x, y| t.is_p(x, y), spec, bound, 0))
            },
        ));
    }
    if p.ell.is_none() && p.k.is_none() || p.k == Some(1) {
        let bound = w_bound(p).min(300);
        out.push(CheckResult::timed(
            "kernel/W1 equals K0",
            "W1",
            bound,
            || {
                let w = solved(blocking_spec(1).expect("k = 1 is valid"), bound)?;
                let k = solved(GameSpec::wythoff(), bound)?;
                same_set(&w, |x, y| k.is_p(x, y))
            },
        ));
    }
    Ok(())
}

fn closed_forms(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let bound = k_bound(p);
    for ell in ells(p, 1..=4) {
        let spec = GameSpec::terminal(ell);
        let name = |what: &str| format!("closed-forms/{spec} {what}");
        match ell {
            1 => out.push(CheckResult::timed(name("set"), "K1", bound, || {
                same_set(&solved(spec, bound)?, closed_form_k1)
            })),
            2 => {
                // the formula lists (0,1) and (0,2) but not the other terminals
                let eq1 = |x: u64, y: u64| k2_member(x, y) || x + y <= 2;
                out.push(CheckResult::timed(name("set"), "K2", bound, || {
                    same_set(&solved(spec, bound)?, eq1)
                }));
                out.push(CheckResult::timed(name("stable"), "K2", bound, || {
                    verdict(check_stable(eq1, spec, bound))
                }));
                out.push(CheckResult::timed(name("absorbing"), "K2", bound, || {
                    verdict(check_absorbing(eq1, spec, bound, 0))
                }));
            }
            3 | 4 => {
                let form = if ell == 3 {
                    closed_form_k3
                } else {
                    closed_form_k4
                };
                out.push(CheckResult::timed(
                    name("pairs"),
                    spec.to_string(),
                    bound,
                    || {
                        let found = ppos_list(&solved(spec, bound)?);
                        let expected: Vec<(u64, u64)> = (0..found.len() as u64).map(form).collect();
                        same_pairs(found.pairs(), &expected)?;
                        // the next formula pair must leave the board
                        let next = form(found.len() as u64);
                        if next.1 <= bound {
                            return Err(format!("formula pair {next:?} missing from the game"));
                        }
                        Ok(())
                    },
                ));
            }
            _ => {
                return Err(VerifyError::Unsupported {
                    suite: "closed-forms",
                    what: format!("ell = {ell}"),
                });
            }
        }
    }
    Ok(())
}

fn mex(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let bound = k_bound(p);
    for ell in ells(p, 0..=9) {
        let spec = GameSpec::terminal(ell);
        out.push(CheckResult::timed(
            format!("mex/{spec}"),
            spec.to_string(),
            bound,
            || {
                let found = ppos_list(&solved(spec, bound)?);
                let expected = mex_sequence(ell, bound as usize).within(bound);
                same_pairs(found.pairs(), expected.pairs())?;
                expected.check_structure()
            },
        ));
    }
    Ok(())
}

fn blocking(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let bound = w_bound(p);
    let ks = p.k.map_or_else(|| vec![2, 3], |k| vec![k]);
    for k in ks {
        let spec = blocking_spec(k)?;
        let formula: fn(u64, u64) -> bool = match k {
            2 => ppos_w2,
            3 => ppos_w3,
            _ => {
                return Err(VerifyError::Unsupported {
                    suite: "blocking",
                    what: format!("k = {k}"),
                })
            }
        };
        let name = |what: &str| format!("blocking/{spec} {what}");
        out.push(CheckResult::timed(
            name("set"),
            spec.to_string(),
            bound,
            || same_set(&solved(spec, bound)?, formula),
        ));
        out.push(CheckResult::timed(
            name("stable"),
            spec.to_string(),
            bound,
            || verdict(check_stable(formula, spec, bound)),
        ));
        out.push(CheckResult::timed(
            name("absorbing"),
            spec.to_string(),
            bound,
            || verdict(check_absorbing(formula, spec, bound, 0)),
        ));
    }
    Ok(())
}

fn discrepancy(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let horizon = p.horizon.unwrap_or(DEFAULT_HORIZON);
    for ell in ells(p, 1..=8) {
        let spec = GameSpec::terminal(ell).to_string();
        out.push(CheckResult::timed(
            format!("discrepancy/K{ell}"),
            spec,
            horizon,
            || {
                let profile = discrepancy_profile(ell, horizon);
                profile.verify().map_err(|m| m.to_string())?;
                let pp = profile.pairs();
                if horizon > 0 && !density_within(pp.a(horizon as usize), horizon, 1, 100) {
                    return Err(format!("a_{horizon}/{horizon} is more than 1/100 from φ"));
                }
                counting_check(pp, pp.a(pp.len() - 1)).map_err(|m| m.to_string())
            },
        ));
    }
    Ok(())
}

fn redundancy(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let bound = w_bound(p);
    let specs: Vec<GameSpec> = match (p.ell, p.k) {
        (None, None) => {
            let mut v: Vec<GameSpec> = (1..=4).map(GameSpec::terminal).collect();
            v.push(blocking_spec(2)?);
            v.push(blocking_spec(3)?);
            v
        }
        (ell, k) => ell
            .map(GameSpec::terminal)
            .into_iter()
            .chain(k.map(blocking_spec).transpose()?)
            .collect(),
    };
    for spec in specs {
        out.push(CheckResult::timed(
            format!("redundancy/{spec}"),
            spec.to_string(),
            bound,
            || {
                let index = RedundancyIndex::build(&solved(spec, bound)?);
                for i in 1..=REDUNDANCY_MAX_STEP {
                    for m in [Move::horizontal(i), Move::vertical(i), Move::diagonal(i)] {
                        let m = m.expect("i > 0");
                        if index.witness(m).position().is_none() {
                            return Err(format!("move {m}: {}", index.witness(m)));
                        }
                    }
                }
                Ok(())
            },
        ));
    }
    Ok(())
}

fn morphic(p: &SuiteParams, out: &mut Vec<CheckResult>) -> Result<(), VerifyError> {
    let bound = k_bound(p);
    for ell in ells(p, 0..=3) {
        let spec = GameSpec::terminal(ell);
        let (m, c): (Morphism, Coding<FibLetter>) = match ell {
            0 => (
                Morphism::fibonacci(),
                Coding::new(vec![FibLetter::A, FibLetter::B]),
            ),
            _ => catalog::ab_coding(ell).ok_or_else(|| VerifyError::Unsupported {
                suite: "morphic",
                what: format!("ell = {ell}"),
            })?,
        };
        out.push(CheckResult::timed(
            format!("morphic/{spec}"),
            spec.to_string(),
            bound,
            || {
                let pp: PposSequence = ppos_list(&solved(spec, bound)?);
                // pairs with a ≤ bound < b are invisible, so only values up to
                // the last a are known to be covered
                let horizon = pp.pairs().last().map_or(0, |&(a, _)| a);
                morphic_coding_check(&m, &c, u64::from(ell) + 1, &pp, horizon)
                    .map_err(|e| e.to_string())
            },
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(ell: Option<u32>, k: Option<u32>) -> SuiteParams {
        SuiteParams {
            ell,
            k,
            bound: Some(120),
            horizon: Some(2000),
        }
    }

    #[test]
    fn every_suite_passes_small() {
        let report = run_suite(Suite::All, &small(None, None)).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.items().len() > 30);
    }

    #[test]
    fn unsupported_parameters() {
        assert!(run_suite(Suite::ClosedForms, &small(Some(7), None)).is_err());
        assert!(run_suite(Suite::Blocking, &small(None, Some(5))).is_err());
        assert!(run_suite(Suite::Blocking, &small(None, Some(0))).is_err());
    }
}
