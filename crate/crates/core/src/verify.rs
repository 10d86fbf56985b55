//! Per-instance comparison of the closed forms with the oracle engine, and
//! parallel sweeps over parameter grids.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma4::Gamma4Params;
use crate::geo::{min_digit_sum, r_adic, GeoParams};
use crate::ideal;
use crate::report::{fmt_list, Discrepancy};
use crate::semigroup::{gcd, AperySet, AperyTable, NumericalSemigroup};
use crate::tangent_cone::{
    cz_decompose, gorenstein_condition, reduction_socle, unique_expression_check, CzDecomposition,
};

/// Optional, more expensive parts of a verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    /// Check `H_q` and the resolution matrices (Γ₄ only).
    pub ideal: bool,
    /// Evaluate the Gorenstein necessary condition (Γ₄ only).
    pub gorenstein: bool,
}

impl VerifyOptions {
    pub fn all() -> Self {
        Self {
            ideal: true,
            gorenstein: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub params: BTreeMap<String, i64>,
    /// Names of the checks that ran.
    pub checks: Vec<&'static str>,
    pub discrepancies: Vec<Discrepancy>,
}

impl InstanceReport {
    fn new(params: BTreeMap<String, i64>) -> Self {
        Self {
            params,
            checks: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        !self.discrepancies.iter().any(Discrepancy::is_failure)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies.iter().filter(|d| d.is_failure())
    }

    /// Records a failure, with the oracle value as `computed`, unless the
    /// closed form equals the oracle.
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, name: &'static str, closed: T, oracle: T) {
        self.checks.push(name);
        if closed != oracle {
            self.discrepancies.push(Discrepancy::failure(
                &self.params,
                name,
                format!("{oracle:?}"),
                format!("{closed:?}"),
            ));
        }
    }

    fn check_true(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> (String, String)) {
        self.checks.push(name);
        if !ok {
            let (computed, expected) = detail();
            self.discrepancies
                .push(Discrepancy::failure(&self.params, name, computed, expected));
        }
    }
}

fn fmt_table(t: &AperyTable) -> String {
    fmt_list(t.rows().iter().map(|r| fmt_list(r, '[', ']')), '[', ']')
}

/// Checks shared by both families on the oracle side: the table is
/// torsion-free and every Apéry element has one factorization.
fn tangent_cone_checks(
    report: &mut InstanceReport,
    s: &NumericalSemigroup,
    oracle_ap: &AperySet,
    oracle_table: &AperyTable,
) -> CzDecomposition {
    let decomposition = cz_decompose(oracle_table);
    report.check_true("tangent_cone_cm", decomposition.is_cohen_macaulay(), || {
        (fmt_list(decomposition.torsion.iter().map(|t| format!("({},{})", t.shift, t.length)), '[', ']'), "[]".into())
    });
    report.check_true("unique_expression", unique_expression_check(s, oracle_ap), || {
        ("some Apéry element has several factorizations".into(), "unique".into())
    });
    decomposition
}

/// Compares every closed form for `Γ₄(a, d)` with the oracle.
///
/// Failures mean a closed form disagrees with the oracle. Warnings record
/// known caveats of the closed forms (PF listing convention, the `q = 2`
/// Frobenius guard, the `q = 0` count at `k = μ`), the Gorenstein necessary
/// condition holding, and tangent cones found to be Gorenstein.
pub fn verify_gamma4(p: &Gamma4Params, options: VerifyOptions) -> Result<InstanceReport> {
    let mut report = InstanceReport::new(p.params());
    let s = p.semigroup();
    let a = p.a();

    let oracle_ap = s.apery_set(a)?;
    report.check("apery_set", p.apery_set().elements().to_vec(), oracle_ap.elements().to_vec());
    report.check("pseudo_frobenius", p.pf(), s.pseudo_frobenius());
    report.check("frobenius", p.frobenius(), s.frobenius());
    report.check("type", p.pf().len(), s.type_number());

    let listed = p.pf_apery_elements();
    if listed != p.pf() {
        report.discrepancies.push(Discrepancy::warning(
            &report.params,
            "pf_convention: listed as maximal Apéry elements ω(i)",
            fmt_list(p.pf(), '{', '}'),
            fmt_list(&listed, '{', '}'),
        ));
    }
    report.discrepancies.extend(p.frobenius_discrepancies());

    let oracle_table = s.apery_table();
    report.checks.push("apery_table");
    let closed_table = p.apery_table();
    if closed_table != oracle_table {
        report.discrepancies.push(Discrepancy::failure(
            &report.params,
            "apery_table",
            fmt_table(&oracle_table),
            fmt_table(&closed_table),
        ));
    }
    report.check("reduction_number", p.reduction_number(), oracle_table.reduction_number());

    let decomposition = tangent_cone_checks(&mut report, &s, &oracle_ap, &oracle_table);
    let histogram = decomposition.shift_histogram();
    let tk = p.tk();
    report.check_true("tk_sum", tk.iter().sum::<u64>() == a as u64, || {
        (tk.iter().sum::<u64>().to_string(), a.to_string())
    });
    report.check("tk", tk.clone(), histogram.clone());
    let case_table = p.tk_case_table();
    if case_table != tk {
        if case_table == histogram {
            report.discrepancies.push(Discrepancy::failure(
                &report.params,
                "tk_q0_count: uncorrected value matches the oracle",
                fmt_list(&histogram, '(', ')'),
                fmt_list(&tk, '(', ')'),
            ));
        } else {
            report.discrepancies.push(Discrepancy::warning(
                &report.params,
                "tk_q0_count: case table counts i = a at k = μ",
                fmt_list(&histogram, '(', ')'),
                fmt_list(&case_table, '(', ')'),
            ));
        }
    }
    report.check(
        "hilbert_series",
        p.hilbert_series().numerator().to_vec(),
        decomposition.hilbert_series().numerator().to_vec(),
    );

    if options.gorenstein {
        report.checks.push("gorenstein_condition");
        if gorenstein_condition(&s).holds {
            report.discrepancies.push(Discrepancy::warning(
                &report.params,
                "gorenstein_proof_step: necessary condition holds for every n",
                "holds",
                "fails for some n",
            ));
        }
        if let Some(socle) = reduction_socle(&s) {
            if socle.len() == 1 {
                report.discrepancies.push(Discrepancy::warning(
                    &report.params,
                    "gorenstein_claim: tangent cone is Gorenstein",
                    format!("socle of G/(t^a) is {}", fmt_list(&socle, '{', '}')),
                    "not Gorenstein",
                ));
            }
        }
    }

    if options.ideal {
        let w = ideal::weight_vector(p);
        let ideal_report = ideal::cross_check_betti(p)?;
        report.checks.push("ideal_generators");
        report.discrepancies.extend(ideal_report.discrepancies);

        let resolution = ideal::resolution_matrices(p)?;
        report.check("betti_signature", resolution.ranks(), ideal::betti_signature(p.q()));
        let complex = ideal::verify_complex(&resolution, &w)?;
        report.check_true("resolution_complex", complex.passed(), || {
            let detail = complex
                .failures
                .iter()
                .map(|f| format!("{}[{},{}]: {}", f.matrix, f.row, f.col, f.reason))
                .collect::<Vec<_>>()
                .join("; ");
            (detail, "complex, minimal, graded".into())
        });
    }
    Ok(report)
}

/// Compares the closed forms for the geometric family with the oracle.
pub fn verify_geo(p: &GeoParams) -> Result<InstanceReport> {
    let mut report = InstanceReport::new(p.params());
    let s = p.semigroup();
    let a = p.a();

    let oracle_ap = s.apery_set(a)?;
    report.check("apery_set", p.apery_set().elements().to_vec(), oracle_ap.elements().to_vec());

    let oracle_table = s.apery_table();
    report.checks.push("apery_table");
    let closed_table = p.apery_table();
    if closed_table != oracle_table {
        report.discrepancies.push(Discrepancy::failure(
            &report.params,
            "apery_table",
            fmt_table(&oracle_table),
            fmt_table(&closed_table),
        ));
    }
    report.check("table_depth", p.table_depth(), oracle_table.reduction_number());

    let (r, n) = (p.r() as u64, p.n() as usize);
    let bad_digit = (0..a as u64).find(|&i| {
        let greedy = r_adic(i, r, n).map(|d| d.digit_sum()).ok();
        greedy != min_digit_sum(i, r, n).ok()
    });
    report.check_true("r_adic_digit_sum", bad_digit.is_none(), || {
        (format!("greedy digit sum not minimal at i={}", bad_digit.unwrap()), "minimal".into())
    });

    let decomposition = tangent_cone_checks(&mut report, &s, &oracle_ap, &oracle_table);
    report.check(
        "hilbert_series",
        p.hilbert_series().numerator().to_vec(),
        decomposition.hilbert_series().numerator().to_vec(),
    );
    Ok(report)
}

/// A grid point that was not run, with the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub params: BTreeMap<String, i64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub warnings: usize,
    pub skipped: Vec<Skipped>,
    /// Per-instance reports, sorted by parameters.
    pub reports: Vec<InstanceReport>,
}

impl SweepSummary {
    fn collect(mut reports: Vec<InstanceReport>, mut skipped: Vec<Skipped>) -> Self {
        reports.sort_by(|x, y| x.params.values().cmp(y.params.values()));
        skipped.sort_by(|x, y| x.params.values().cmp(y.params.values()));
        let failed = reports.iter().filter(|r| !r.passed()).count();
        let warnings = reports
            .iter()
            .flat_map(|r| &r.discrepancies)
            .filter(|d| !d.is_failure())
            .count();
        Self {
            instances: reports.len(),
            passed: reports.len() - failed,
            failed,
            warnings,
            skipped,
            reports,
        }
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &Discrepancy> {
        self.reports.iter().flat_map(|r| &r.discrepancies)
    }

    /// Count of discrepancies per claim.
    pub fn claim_counts(&self) -> BTreeMap<&str, usize> {
        let mut out = BTreeMap::new();
        for d in self.discrepancies() {
            *out.entry(d.claim.as_str()).or_insert(0) += 1;
        }
        out
    }
}

fn split<T>(results: Vec<std::result::Result<T, Skipped>>) -> (Vec<T>, Vec<Skipped>) {
    let mut ok = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            Ok(x) => ok.push(x),
            Err(s) => skipped.push(s),
        }
    }
    (ok, skipped)
}

fn skip(params: BTreeMap<String, i64>, err: Error) -> Skipped {
    Skipped {
        params,
        reason: err.to_string(),
    }
}

/// Runs [`verify_gamma4`] on every `(a, d)` in the grid with
/// `gcd(a, d) = 1`, in parallel.
pub fn sweep_gamma4(
    a_range: RangeInclusive<i64>,
    d_range: RangeInclusive<i64>,
    options: VerifyOptions,
) -> SweepSummary {
    let grid: Vec<(i64, i64)> = a_range
        .flat_map(|a| d_range.clone().map(move |d| (a, d)))
        .filter(|&(a, d)| gcd(a, d) == 1)
        .collect();
    let results = grid
        .into_par_iter()
        .map(|(a, d)| {
            let params = crate::report::params([("a", a), ("d", d)]);
            Gamma4Params::new(a, d)
                .and_then(|p| verify_gamma4(&p, options))
                .map_err(|e| skip(params, e))
        })
        .collect();
    let (reports, skipped) = split(results);
    SweepSummary::collect(reports, skipped)
}

/// Range of `d` for the geometric sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DRange {
    /// `h·n·(r-1) + 1 ..= h·n·(r-1) + count` for each `(r, h, n)`.
    Auto(i64),
    Explicit(RangeInclusive<i64>),
}

/// Grid for the geometric family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeoGrid {
    pub a: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
    pub h: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
    pub d: DRange,
}

impl GeoGrid {
    /// Points with `gcd(a, d) = gcd(a, r) = 1`; the remaining hypotheses are
    /// checked per instance.
    pub fn points(&self) -> Vec<[i64; 5]> {
        let mut out = Vec::new();
        for a in self.a.clone() {
            for r in self.r.clone() {
                for h in self.h.clone() {
                    for n in self.n.clone() {
                        let ds = match &self.d {
                            DRange::Auto(count) => {
                                let base = h * n * (r - 1);
                                base + 1..=base + count
                            }
                            DRange::Explicit(range) => range.clone(),
                        };
                        for d in ds {
                            if gcd(a, d) == 1 && gcd(a, r) == 1 {
                                out.push([a, d, r, h, n]);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Runs [`verify_geo`] over the grid in parallel. Points failing the family
/// hypotheses (including minimality) are skipped with a note.
pub fn sweep_geo(grid: &GeoGrid) -> SweepSummary {
    let results = grid
        .points()
        .into_par_iter()
        .map(|[a, d, r, h, n]| {
            let params = crate::report::params([("a", a), ("d", d), ("r", r), ("h", h), ("n", n)]);
            GeoParams::new(a, d, r, h, n)
                .and_then(|p| verify_geo(&p))
                .map_err(|e| skip(params, e))
        })
        .collect();
    let (reports, skipped) = split(results);
    SweepSummary::collect(reports, skipped)
}
