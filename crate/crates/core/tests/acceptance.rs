//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use apery_core::ideal::{
    betti_signature, cross_check_betti, resolution_matrices, verify_complex, weight_vector,
};
use apery_core::semigroup::gcd;
use apery_core::tangent_cone::{cz_decompose, gorenstein_condition, unique_expression_check};
use apery_core::verify::{sweep_gamma4, sweep_geo, DRange, GeoGrid, SweepSummary, VerifyOptions};
use apery_core::{Gamma4Params, NumericalSemigroup};
use rayon::prelude::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Runs a criterion, failing it when it exceeds `limit`.
fn run(id: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let ok = o.ok && in_time;
    let limit_note = limit.map_or(String::new(), |l| format!(" / limit {:.0}s", l.as_secs_f64()));
    println!(
        "{} [{id}] {name}: {}{} ({:.2}s{limit_note})",
        if ok { "PASS" } else { "FAIL" },
        o.detail,
        if in_time { "" } else { "; time limit exceeded" },
        elapsed.as_secs_f64(),
    );
    ok
}

fn first_failures(s: &SweepSummary) -> String {
    s.reports
        .iter()
        .flat_map(|r| r.failures())
        .take(3)
        .map(|d| format!("{:?} {}: computed {} expected {}", d.params, d.claim, d.computed, d.expected))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn has_claim(s: &SweepSummary, claim: &str) -> usize {
    s.reports
        .iter()
        .flat_map(|r| r.failures())
        .filter(|d| d.claim == claim)
        .count()
}

fn worked_example() -> Outcome {
    let p = Gamma4Params::new(11, 24).unwrap();
    let mut errs = Vec::new();
    if p.generators() != [11, 46, 105, 188] {
        errs.push("generators");
    }
    if p.omega_row() != [0, 46, 92, 105, 151, 197, 188, 234, 280, 293, 339] {
        errs.push("omega row");
    }
    let expected_table = vec![
        vec![0, 46, 92, 105, 151, 197, 188, 234, 280, 293, 339],
        vec![11, 46, 92, 105, 151, 197, 188, 234, 280, 293, 339],
        vec![22, 57, 92, 116, 151, 197, 199, 234, 280, 293, 339],
        vec![33, 68, 103, 127, 162, 197, 210, 245, 280, 304, 339],
    ];
    let oracle = p.semigroup().apery_table();
    if oracle.rows_in_order(&p.step_order()) != expected_table {
        errs.push("oracle table");
    }
    if p.apery_table() != oracle {
        errs.push("closed-form table");
    }
    let cz = cz_decompose(&oracle);
    if cz.free_shifts != [0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3] || !cz.torsion.is_empty() {
        errs.push("decomposition");
    }
    let h = cz.hilbert_series();
    if h.numerator() != [1, 3, 4, 3] || p.hilbert_series() != h {
        errs.push("hilbert series");
    }
    if errs.is_empty() {
        outcome(true, format!("table, decomposition F+F(-1)^3+F(-2)^4+F(-3)^3, {h}"))
    } else {
        outcome(false, format!("mismatch in {}", errs.join(", ")))
    }
}

fn gamma4_sweep(s: &SweepSummary) -> Outcome {
    let warnings = s.claim_counts();
    let q0 = warnings
        .iter()
        .filter(|(c, _)| c.starts_with("tk_q0_count"))
        .map(|(_, n)| n)
        .sum::<usize>();
    let uncorrected = has_claim(s, "tk_q0_count: uncorrected value matches the oracle");
    let detail = format!(
        "{} instances, {} failed, q=0 corrections applied {q0} times, uncorrected matches {uncorrected}",
        s.instances, s.failed
    );
    if s.failed == 0 && s.skipped.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail}; {}", first_failures(s)))
    }
}

fn uniqueness(g4: &SweepSummary, geo: &SweepSummary) -> Outcome {
    let bad = has_claim(g4, "unique_expression") + has_claim(geo, "unique_expression");
    let control = NumericalSemigroup::new(vec![5, 6, 9]).unwrap();
    let control_ok = !unique_expression_check(&control, &control.apery_set(5).unwrap());
    outcome(
        bad == 0 && control_ok,
        format!(
            "{} instances with non-unique Apéry expressions; control <5,6,9> non-unique: {control_ok}",
            bad
        ),
    )
}

fn ideal_grid() -> Vec<Gamma4Params> {
    let mut out = Vec::new();
    for q in 0..6 {
        for m in 1..=4 {
            if q == 0 && m < 2 {
                continue;
            }
            for d in 1..=5 {
                let a = 6 * m + q;
                if gcd(a, d) == 1 {
                    out.push(Gamma4Params::new(a, d).unwrap());
                }
            }
        }
    }
    out
}

fn ideal_verification(grid: &[Gamma4Params]) -> Outcome {
    let bad: Vec<String> = grid
        .par_iter()
        .filter_map(|p| match cross_check_betti(p) {
            Ok(r) if r.passed() && r.homogeneous && r.standard_monomials == p.a() as u64 => None,
            Ok(r) => Some(format!("({}, {}): {:?}", p.a(), p.d(), r.discrepancies)),
            Err(e) => Some(format!("({}, {}): {e}", p.a(), p.d())),
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} instances, {} failed {}", grid.len(), bad.len(), bad.join(" | ")),
    )
}

fn resolution_verification(grid: &[Gamma4Params]) -> Outcome {
    let bad: Vec<String> = grid
        .par_iter()
        .filter_map(|p| {
            let r = match resolution_matrices(p) {
                Ok(r) => r,
                Err(e) => return Some(format!("({}, {}): {e}", p.a(), p.d())),
            };
            let report = verify_complex(&r, &weight_vector(p)).ok()?;
            if report.passed() && r.ranks() == betti_signature(p.q()) {
                None
            } else {
                Some(format!("({}, {}): ranks {:?} {:?}", p.a(), p.d(), r.ranks(), report.failures))
            }
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} instances, {} failed {}", grid.len(), bad.len(), bad.join(" | ")),
    )
}

fn geo_sweep(s: &SweepSummary) -> Outcome {
    let detail = format!(
        "{} instances, {} failed, {} grid points skipped by hypotheses",
        s.instances,
        s.failed,
        s.skipped.len()
    );
    outcome(s.failed == 0 && s.instances > 0, format!("{detail} {}", first_failures(s)))
}

fn tangent_cone(g4: &SweepSummary, geo: &SweepSummary) -> Outcome {
    let torsion = has_claim(g4, "tangent_cone_cm") + has_claim(geo, "tangent_cone_cm");
    let two_three = gorenstein_condition(&NumericalSemigroup::new(vec![2, 3]).unwrap()).holds;
    let gor = sweep_gamma4(7..=50, 1..=40, VerifyOptions { gorenstein: true, ideal: false });
    let count = |prefix: &str| gor.discrepancies().filter(|d| d.claim.starts_with(prefix)).count();
    let condition_holds = count("gorenstein_proof_step");
    let gorenstein = count("gorenstein_claim");
    let gorenstein_q: std::collections::BTreeSet<i64> = gor
        .discrepancies()
        .filter(|d| d.claim.starts_with("gorenstein_claim"))
        .map(|d| d.params["a"] % 6)
        .collect();
    let mut sample = BTreeMap::new();
    for (a, d) in [(11, 24), (7, 1)] {
        let g = gorenstein_condition(&Gamma4Params::new(a, d).unwrap().semigroup());
        sample.insert(format!("({a},{d})"), g.holds);
    }
    outcome(
        torsion == 0 && two_three && gor.failed == 0,
        format!(
            "torsion-free in all swept instances: {}; <2,3> condition holds: {two_three}; \
             Gamma4 necessary condition holds in {condition_holds}/{n} instances {sample:?}; \
             Gorenstein tangent cone (one-element socle) in {gorenstein}/{n} instances, a mod 6 in {gorenstein_q:?} \
             (logged as warnings)",
            torsion == 0,
            n = gor.instances
        ),
    )
}

fn spot_values() -> Outcome {
    let p = Gamma4Params::new(11, 24).unwrap();
    let rows = p.apery_table().rows_in_order(&p.step_order());
    let ok = p.omega(9) == 293 && rows[2][2] == 92 && rows[3][2] == 103;
    outcome(
        ok,
        format!("ω(9) = {}, column 2: row 2 = {}, row 3 = {}", p.omega(9), rows[2][2], rows[3][2]),
    )
}

fn performance() -> Outcome {
    let p = Gamma4Params::new(1_000_000, 1).unwrap();
    let s = p.semigroup();
    let start = Instant::now();
    let ap = s.apery_set(1_000_000).unwrap();
    let elapsed = start.elapsed();
    let agrees = ap == p.apery_set();
    outcome(
        agrees,
        format!("a = 10^6 Apéry set in {:.3}s, closed form agrees: {agrees}", elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let suite = Instant::now();
    let secs = |s| Some(Duration::from_secs(s));
    let mut all = true;

    all &= run(1, "worked example (11, 24)", secs(1), worked_example);

    let mut g4 = None;
    all &= run(2, "Gamma4 closed forms vs oracle, 7<=a<=50, 1<=d<=40", secs(60), || {
        let s = sweep_gamma4(7..=50, 1..=40, VerifyOptions::default());
        let o = gamma4_sweep(&s);
        g4 = Some(s);
        o
    });
    let g4 = g4.unwrap();

    let mut geo = None;
    let geo_run = |geo: &mut Option<SweepSummary>| {
        let s = sweep_geo(&GeoGrid {
            a: 7..=30,
            r: 2..=3,
            h: 1..=2,
            n: 1..=3,
            d: DRange::Auto(20),
        });
        let o = geo_sweep(&s);
        *geo = Some(s);
        o
    };
    // the geometric sweep feeds criteria 3 and 7, so it runs first
    let c6 = run(6, "geometric family vs oracle", secs(60), || geo_run(&mut geo));
    let geo = geo.unwrap();

    all &= run(3, "unique Apéry expressions", None, || uniqueness(&g4, &geo));
    let grid = ideal_grid();
    all &= run(4, "H_q generators: homogeneity, quotient count, Betti degrees", secs(30), || {
        ideal_verification(&grid)
    });
    all &= run(5, "resolutions: complex, minimal, graded, ranks", secs(30), || {
        resolution_verification(&grid)
    });
    all &= c6;
    all &= run(7, "tangent cone: torsion, Gorenstein condition (report)", None, || {
        tangent_cone(&g4, &geo)
    });
    all &= run(8, "worked-example spot values", None, spot_values);
    all &= run(9, "performance: Apéry set at a = 10^6", secs(2), performance);
    let total = suite.elapsed();
    let in_budget = total < Duration::from_secs(180);
    println!(
        "{} [9] performance: full suite in {:.2}s / limit 180s",
        if in_budget { "PASS" } else { "FAIL" },
        total.as_secs_f64()
    );
    all &= in_budget;

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
