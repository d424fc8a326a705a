//! Differential sweep: closed forms vs. the blow-up pipeline vs. brute-force
//! enumeration, on exhaustive small-graph catalogues.

use std::fmt;

use num_bigint::BigInt;

use crate::blowup::blow_up;
use crate::chromatic::chromatic_polynomial;
use crate::error::Error;
use crate::exec::Execution;
use crate::fractional::{
    b_fold_chromatic_number, complete_closed_form, forest_closed_form, fractional_count,
    generalized_frt_polynomial, naive_frt_check, tree_closed_form, FrtMode,
};
use crate::graph::{connected_graphs, forests_with_profile, generate, trees, Graph, GraphKind};
use crate::oracle::enumerate_count_with;

#[derive(Debug, Clone)]
pub struct SelfCheckConfig {
    pub max_n: usize,
    pub max_b: usize,
    pub max_lambda: u64,
    pub budget: u64,
    pub execution: Execution,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig {
            max_n: 4,
            max_b: 3,
            max_lambda: 8,
            budget: 1_000_000_000,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CheckRow {
    pub name: &'static str,
    pub instances: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<32} {:>6} checked {:>4} skipped",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.instances,
            self.skipped
        )?;
        for failure in self.failures.iter().take(5) {
            write!(f, "\n       {failure}")?;
        }
        Ok(())
    }
}

/// Outcome of one instance: `Ok(true)` checked, `Ok(false)` skipped for
/// budget, `Err` a mismatch description.
type Outcome = Result<bool, String>;

fn tally(name: &'static str, outcomes: Vec<Outcome>) -> CheckRow {
    let mut row = CheckRow {
        name,
        ..Default::default()
    };
    for o in outcomes {
        match o {
            Ok(true) => row.instances += 1,
            Ok(false) => row.skipped += 1,
            Err(msg) => {
                row.instances += 1;
                row.failures.push(msg);
            }
        }
    }
    row
}

fn expect_eq(what: impl Fn() -> String, got: &BigInt, want: &BigInt) -> Outcome {
    if got == want {
        Ok(true)
    } else {
        Err(format!("{}: got {got}, expected {want}", what()))
    }
}

/// Connected graphs up to `max_n` vertices, plus C5 and K2 + K1.
pub fn sweep_graphs(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            out.push((format!("conn{n}#{i}"), g));
        }
    }
    out.push(("C5".into(), generate(&GraphKind::Cycle(5)).expect("valid")));
    out.push((
        "K2+K1".into(),
        generate(&GraphKind::Forest {
            parts: vec![2, 1],
            seed: 0,
        })
        .expect("valid"),
    ));
    out
}

pub fn run_selfcheck(cfg: &SelfCheckConfig) -> Vec<CheckRow> {
    let exec = cfg.execution;
    let graphs = sweep_graphs(cfg.max_n);
    let mut rows = Vec::new();

    // Pipeline vs. oracle.
    let cases: Vec<(usize, usize, u64)> = (0..graphs.len())
        .flat_map(|gi| {
            (1..=cfg.max_b).flat_map(move |b| (0..=cfg.max_lambda).map(move |l| (gi, b, l)))
        })
        .collect();
    rows.push(tally(
        "count = oracle",
        exec.map(&cases, |&(gi, b, lambda)| {
            let (name, g) = &graphs[gi];
            let label = || format!("{name} b={b} λ={lambda}");
            let via_poly =
                fractional_count(g, lambda, b).map_err(|e| format!("{}: {e}", label()))?;
            match enumerate_count_with(
                g,
                lambda as u32,
                b as u32,
                cfg.budget,
                Execution::Sequential,
            ) {
                Ok(c) => expect_eq(label, &via_poly, &BigInt::from(c)),
                Err(Error::BudgetExceeded { .. }) => Ok(false),
                Err(e) => Err(format!("{}: {e}", label())),
            }
        }),
    ));

    // Complete graphs.
    let cases: Vec<(usize, usize, u64)> = (1..=cfg.max_n.min(4))
        .flat_map(|n| {
            (1..=cfg.max_b).flat_map(move |b| (0..=(n * b) as u64 + 2).map(move |l| (n, b, l)))
        })
        .collect();
    rows.push(tally(
        "complete closed form",
        exec.map(&cases, |&(n, b, lambda)| {
            let g = generate(&GraphKind::Complete(n)).expect("valid");
            let got = fractional_count(&g, lambda, b).map_err(|e| e.to_string())?;
            expect_eq(
                || format!("K{n} b={b} λ={lambda}"),
                &got,
                &complete_closed_form(n, lambda, b),
            )
        }),
    ));

    // Trees and forests.
    let small_b = cfg.max_b.min(2);
    let small_lambda = cfg.max_lambda.min(6);
    let mut shapes: Vec<(Vec<usize>, Graph)> = Vec::new();
    for n in 1..=cfg.max_n.max(5) {
        shapes.extend(trees(n).into_iter().map(|t| (vec![n], t)));
    }
    for profile in [vec![2, 1], vec![3, 2], vec![2, 2, 1]] {
        shapes.extend(
            forests_with_profile(&profile)
                .into_iter()
                .map(|f| (profile.clone(), f)),
        );
    }
    let cases: Vec<(usize, usize, u64)> = (0..shapes.len())
        .flat_map(|si| (1..=small_b).flat_map(move |b| (0..=small_lambda).map(move |l| (si, b, l))))
        .collect();
    rows.push(tally(
        "tree / forest closed form",
        exec.map(&cases, |&(si, b, lambda)| {
            let (profile, g) = &shapes[si];
            let got = fractional_count(g, lambda, b).map_err(|e| e.to_string())?;
            let want = if profile.len() == 1 {
                tree_closed_form(profile[0], lambda, b)
            } else {
                forest_closed_form(profile, lambda, b)
            };
            expect_eq(|| format!("{g:?} b={b} λ={lambda}"), &got, &want)
        }),
    ));

    // Generalized reduction, every admissible pair of the blow-up.
    let frt_b = cfg.max_b.min(2);
    let cases: Vec<(usize, usize, (usize, usize), FrtMode)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(gi, (_, g))| {
            (1..=frt_b).flat_map(move |b| {
                let blown = blow_up(g, b).expect("b >= 1");
                let del: Vec<_> = blown
                    .edges()
                    .map(|e| (gi, b, e, FrtMode::Deletion))
                    .collect();
                let add: Vec<_> = blown
                    .non_edges()
                    .map(|e| (gi, b, e, FrtMode::Addition))
                    .collect();
                del.into_iter().chain(add)
            })
        })
        .collect();
    rows.push(tally(
        "generalized reduction",
        exec.map(&cases, |&(gi, b, pair, mode)| {
            let (name, g) = &graphs[gi];
            let fp = generalized_frt_polynomial(g, b, pair, mode).map_err(|e| e.to_string())?;
            let direct = chromatic_polynomial(&blow_up(g, b).expect("b >= 1"));
            if fp.numerator() != &direct {
                return Err(format!("{name} b={b} {mode:?} {pair:?}: numerator differs"));
            }
            for lambda in 0..=cfg.max_lambda {
                fp.evaluate(lambda)
                    .map_err(|e| format!("{name} b={b}: {e}"))?;
            }
            Ok(true)
        }),
    ));

    // Naive reduction is exact for ordinary colourings.
    let cases: Vec<(usize, (usize, usize), u64)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(gi, (_, g))| {
            g.edges()
                .flat_map(move |e| (0..=cfg.max_lambda).map(move |l| (gi, e, l)))
                .collect::<Vec<_>>()
        })
        .collect();
    rows.push(tally(
        "naive reduction at b = 1",
        exec.map(&cases, |&(gi, e, lambda)| {
            let (name, g) = &graphs[gi];
            let r = naive_frt_check(g, e, lambda, 1).map_err(|e| e.to_string())?;
            expect_eq(|| format!("{name} {e:?} λ={lambda}"), &r.rhs, &r.lhs)
        }),
    ));

    // Naive reduction fails on the triangle at b = 2, λ = 6.
    let k3 = generate(&GraphKind::Complete(3)).expect("valid");
    let outcome = match naive_frt_check(&k3, (0, 1), 6, 2) {
        Ok(r) if !r.holds => Ok(true),
        Ok(r) => Err(format!(
            "naive reduction unexpectedly holds: {} = {}",
            r.lhs, r.rhs
        )),
        Err(e) => Err(e.to_string()),
    };
    rows.push(tally("naive reduction fails at b = 2", vec![outcome]));

    // b-fold chromatic number (internally cross-checked against χ(G^b)).
    let cases: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|gi| (1..=cfg.max_b).map(move |b| (gi, b)))
        .collect();
    rows.push(tally(
        "b-fold chromatic number",
        exec.map(&cases, |&(gi, b)| {
            let (name, g) = &graphs[gi];
            b_fold_chromatic_number(g, b)
                .map(|_| true)
                .map_err(|e| format!("{name} b={b}: {e}"))
        }),
    ));

    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let cfg = SelfCheckConfig {
            max_n: 3,
            max_b: 2,
            max_lambda: 5,
            ..Default::default()
        };
        let rows = run_selfcheck(&cfg);
        assert_eq!(rows.len(), 7);
        for row in &rows {
            assert!(row.passed(), "{row}");
            assert!(row.instances > 0, "{row}");
        }
    }

    #[test]
    fn tight_budget_skips_instead_of_failing() {
        let cfg = SelfCheckConfig {
            max_n: 2,
            max_b: 1,
            max_lambda: 4,
            budget: 3,
            ..Default::default()
        };
        let rows = run_selfcheck(&cfg);
        assert!(rows[0].skipped > 0);
        assert!(rows.iter().all(CheckRow::passed));
    }
}
