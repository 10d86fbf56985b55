use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use apery_core::ideal::{self, PolyMatrix};
use apery_core::tangent_cone::{cz_decompose, gorenstein_condition, reduction_socle};
use apery_core::verify::{self, DRange, GeoGrid, SweepSummary, VerifyOptions};
use apery_core::{AperyTable, Gamma4Params, GeoParams, NumericalSemigroup, Result};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::output::{join, table_text, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gamma4Item {
    Apery,
    Pf,
    Frobenius,
    Table,
    Hilbert,
    Tk,
    Ideal,
    Resolution,
    Derivations,
    Cone,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeoItem {
    Apery,
    Table,
    Hilbert,
    Cone,
    All,
}

/// Parses `lo..hi` (inclusive), `lo..=hi`, or a single value.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    let range = match s.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let v = parse(s)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

pub fn parse_gens(s: &str) -> std::result::Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

fn rows_by_index(table: &AperyTable, order: &[usize]) -> Value {
    json!(table.rows_in_order(order))
}

fn indexed_table_text(table: &AperyTable, order: &[usize]) -> String {
    let header: Vec<String> = std::iter::once("s\\t".to_string())
        .chain((0..order.len()).map(|t| t.to_string()))
        .collect();
    table_text(&header, &table.rows_in_order(order))
}

fn residue_table_text(table: &AperyTable) -> String {
    let header: Vec<String> = std::iter::once("s\\r".to_string())
        .chain((0..table.modulus()).map(|r| r.to_string()))
        .collect();
    table_text(&header, table.rows())
}

fn matrix_text(m: &PolyMatrix) -> String {
    let mut out = String::new();
    for row in m.entries() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  [{}]", cells.join(", "));
    }
    out
}

fn cone_section(report: &mut Report, s: &NumericalSemigroup, table: &AperyTable) {
    let cz = cz_decompose(table);
    let gorenstein = gorenstein_condition(s);
    let socle = reduction_socle(s);
    let hist = cz.shift_histogram();
    let summands: Vec<String> = hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| match (k, c) {
            (0, 1) => "F".to_string(),
            (_, 1) => format!("F(-{k})"),
            _ => format!("F(-{k})^{c}"),
        })
        .chain(cz.torsion.iter().map(|t| format!("F/(t^a)^{}(-{})", t.length, t.shift)))
        .collect();
    let text = format!(
        "{}\n  cohen-macaulay: {}\n  buchsbaum: {}\n  gorenstein necessary condition holds: {}\n  reduction socle: {}",
        summands.join(" + "),
        cz.is_cohen_macaulay(),
        cz.is_buchsbaum().map_or("undecided".to_string(), |b| b.to_string()),
        gorenstein.holds,
        socle.as_ref().map_or("n/a".to_string(), join),
    );
    report.section(
        "tangent_cone",
        json!({
            "free_shifts": cz.free_shifts,
            "torsion": cz.torsion,
            "cohen_macaulay": cz.is_cohen_macaulay(),
            "buchsbaum": cz.is_buchsbaum(),
            "gorenstein_condition": gorenstein,
            "reduction_socle": socle,
            "gorenstein": socle.as_ref().map(|v| v.len() == 1),
        }),
        text,
    );
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoreItem {
    Apery,
    Frobenius,
    Pf,
    Table,
    Factorizations,
    Betti,
    Cone,
}

pub struct CoreArgs {
    pub gens: Vec<i64>,
    pub item: CoreItem,
    pub wrt: Option<i64>,
    pub x: Option<i64>,
    pub bound: Option<i64>,
}

pub fn core(args: &CoreArgs) -> Result<Report> {
    let s = NumericalSemigroup::new(args.gens.clone())?;
    let mut report = Report::new(BTreeMap::new());
    report.section("generators", json!(s.generators()), join(s.generators()));
    match args.item {
        CoreItem::Apery => {
            let wrt = args.wrt.unwrap_or(s.multiplicity());
            let ap = s.apery_set(wrt)?;
            report.section("wrt", json!(wrt), wrt.to_string());
            report.section("by_residue", json!(ap.elements()), join(ap.elements()));
            report.section("apery", json!(ap.sorted()), join(ap.sorted()));
        }
        CoreItem::Frobenius => {
            let f = s.frobenius();
            report.section("frobenius", json!(f), f.to_string());
        }
        CoreItem::Pf => {
            let pf = s.pseudo_frobenius();
            report.section("pf", json!(pf), join(&pf));
            report.section("type", json!(pf.len()), pf.len().to_string());
        }
        CoreItem::Table => {
            let t = s.apery_table();
            report.section("reduction_number", json!(t.reduction_number()), t.reduction_number().to_string());
            report.section("rows", json!(t.rows()), residue_table_text(&t));
            report.table = Some(t.rows().to_vec());
        }
        CoreItem::Factorizations => {
            let x = args
                .x
                .ok_or_else(|| apery_core::Error::Domain("factorizations needs --x".into()))?;
            if x < 0 {
                return Err(apery_core::Error::Domain(format!("{x} is negative")));
            }
            let f: Vec<_> = s.factorizations(x).into_iter().map(|f| f.exponents).collect();
            let text = f.iter().map(|e| format!("({})", join(e))).collect::<Vec<_>>().join(" ");
            report.section("x", json!(x), x.to_string());
            report.section("factorizations", json!(f), if text.is_empty() { "none".into() } else { text });
        }
        CoreItem::Betti => {
            let b = s.betti_degrees(args.bound);
            let text = b.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(",");
            report.section("betti_degrees", json!(b), text);
        }
        CoreItem::Cone => {
            let t = s.apery_table();
            cone_section(&mut report, &s, &t);
        }
    }
    Ok(report)
}

pub struct Gamma4Args {
    pub a: i64,
    pub d: i64,
    pub item: Gamma4Item,
    pub verify: bool,
    pub apery_convention: bool,
}

pub fn gamma4(args: &Gamma4Args) -> Result<Report> {
    let p = Gamma4Params::new(args.a, args.d)?;
    let mut report = Report::new(p.params());
    report.section("generators", json!(p.generators()), join(p.generators()));
    let all = args.item == Gamma4Item::All;
    let want = |item: Gamma4Item| all || args.item == item;

    if want(Gamma4Item::Apery) {
        let row = p.omega_row();
        report.section("apery", json!(row), join(&row));
        report.insert("apery_by_residue", json!(p.apery_set().elements()));
    }
    if want(Gamma4Item::Pf) {
        if args.apery_convention {
            let listed = p.pf_apery_elements();
            report.section("pf_apery_elements", json!(listed), join(&listed));
        } else {
            report.section("pf", json!(p.pf()), join(p.pf()));
        }
        report.section("type", json!(p.pf().len()), p.pf().len().to_string());
    }
    if want(Gamma4Item::Frobenius) {
        report.section("frobenius", json!(p.frobenius()), p.frobenius().to_string());
    }
    if want(Gamma4Item::Table) {
        let t = p.apery_table();
        report.section("reduction_number", json!(p.reduction_number()), p.reduction_number().to_string());
        report.section("table", rows_by_index(&t, &p.step_order()), indexed_table_text(&t, &p.step_order()));
        report.insert("table_by_residue", json!(t.rows()));
        report.table = Some(t.rows().to_vec());
    }
    if want(Gamma4Item::Hilbert) {
        let h = p.hilbert_series();
        report.section("hilbert", json!({ "numerator": h.numerator(), "series": h.to_string() }), h.to_string());
    }
    if want(Gamma4Item::Tk) {
        report.section("tk", json!(p.tk()), join(p.tk()));
    }
    if want(Gamma4Item::Derivations) {
        let e = p.derivation_exponents();
        report.section("derivation_exponents", json!(e), join(&e));
    }
    if want(Gamma4Item::Cone) {
        let s = p.semigroup();
        cone_section(&mut report, &s, &s.apery_table());
    }
    if want(Gamma4Item::Ideal) {
        let h = ideal::hq_generators(&p)?;
        let text: Vec<String> = h.iter().map(ToString::to_string).collect();
        let value: Vec<Value> = h
            .iter()
            .map(|b| json!({ "plus": b.plus, "minus": b.minus, "text": b.to_string() }))
            .collect();
        report.section("ideal", json!(value), text.join("\n") + "\n");
        let sci = p.set_theoretic_complete_intersection();
        report.section("set_theoretic_complete_intersection", json!(sci), sci.to_string());
    }
    if want(Gamma4Item::Resolution) {
        let r = ideal::resolution_matrices(&p)?;
        let check = ideal::verify_complex(&r, &ideal::weight_vector(&p))?;
        let text = format!(
            "ranks {}\nphi1\n{}phi2\n{}phi3\n{}complex check passed: {}",
            join(r.ranks()),
            matrix_text(&r.phi1),
            matrix_text(&r.phi2),
            matrix_text(&r.phi3),
            check.passed()
        );
        report.section(
            "resolution",
            json!({ "ranks": r.ranks(), "phi1": r.phi1, "phi2": r.phi2, "phi3": r.phi3, "check": check }),
            text,
        );
    }
    if all {
        // a full dump is not a single table
        report.table = None;
    }
    if args.verify {
        let v = verify::verify_gamma4(&p, VerifyOptions::all())?;
        report.section(
            "verification",
            json!({ "checks": v.checks, "passed": v.passed() }),
            format!("{} checks, passed: {}", v.checks.len(), v.passed()),
        );
        report.discrepancies = v.discrepancies;
    }
    Ok(report)
}

pub struct GeoArgs {
    pub a: i64,
    pub d: i64,
    pub r: i64,
    pub h: i64,
    pub n: i64,
    pub item: GeoItem,
    pub verify: bool,
}

pub fn geo(args: &GeoArgs) -> Result<Report> {
    let p = GeoParams::new(args.a, args.d, args.r, args.h, args.n)?;
    let mut report = Report::new(p.params());
    report.section("generators", json!(p.generators()), join(p.generators()));
    let all = args.item == GeoItem::All;
    let want = |item: GeoItem| all || args.item == item;

    if want(GeoItem::Apery) {
        let row = p.omega_row();
        report.section("apery", json!(row), join(&row));
        report.insert("apery_by_residue", json!(p.apery_set().elements()));
    }
    if want(GeoItem::Table) {
        let t = p.apery_table();
        report.section("table_depth", json!(p.table_depth()), p.table_depth().to_string());
        report.section("table", rows_by_index(&t, &p.step_order()), indexed_table_text(&t, &p.step_order()));
        report.insert("table_by_residue", json!(t.rows()));
        report.table = Some(t.rows().to_vec());
    }
    if want(GeoItem::Hilbert) {
        let h = p.hilbert_series();
        report.section("hilbert", json!({ "numerator": h.numerator(), "series": h.to_string() }), h.to_string());
    }
    if want(GeoItem::Cone) {
        let s = p.semigroup();
        cone_section(&mut report, &s, &s.apery_table());
    }
    if all {
        report.table = None;
    }
    if args.verify {
        let v = verify::verify_geo(&p)?;
        report.section(
            "verification",
            json!({ "checks": v.checks, "passed": v.passed() }),
            format!("{} checks, passed: {}", v.checks.len(), v.passed()),
        );
        report.discrepancies = v.discrepancies;
    }
    Ok(report)
}

fn sweep_report(grid: BTreeMap<String, Value>, summary: SweepSummary) -> Report {
    let mut report = Report::new(BTreeMap::new());
    report.result = json!({ "grid": grid });
    let counts = summary.claim_counts();
    report.section(
        "summary",
        json!({
            "instances": summary.instances,
            "passed": summary.passed,
            "failed": summary.failed,
            "warnings": summary.warnings,
            "skipped": summary.skipped.len(),
        }),
        format!(
            "{} instances, {} passed, {} failed, {} warnings, {} skipped",
            summary.instances,
            summary.passed,
            summary.failed,
            summary.warnings,
            summary.skipped.len()
        ),
    );
    let counts_text: String = counts.iter().map(|(c, n)| format!("  {n:>6}  {c}\n")).collect();
    report.section("claims", json!(counts), if counts_text.is_empty() { "none".into() } else { counts_text });
    report.insert("skipped", json!(summary.skipped));
    report.discrepancies = summary.discrepancies().cloned().collect();
    report
}

fn range_value(r: &RangeInclusive<i64>) -> Value {
    json!([r.start(), r.end()])
}

pub fn sweep_gamma4(a: RangeInclusive<i64>, d: RangeInclusive<i64>, options: VerifyOptions) -> Report {
    let grid = BTreeMap::from([
        ("family".to_string(), json!("gamma4")),
        ("a".to_string(), range_value(&a)),
        ("d".to_string(), range_value(&d)),
    ]);
    sweep_report(grid, verify::sweep_gamma4(a, d, options))
}

pub fn sweep_geo(grid: GeoGrid) -> Report {
    let d = match &grid.d {
        DRange::Auto(count) => json!({ "auto": count }),
        DRange::Explicit(r) => range_value(r),
    };
    let desc = BTreeMap::from([
        ("family".to_string(), json!("geo")),
        ("a".to_string(), range_value(&grid.a)),
        ("r".to_string(), range_value(&grid.r)),
        ("h".to_string(), range_value(&grid.h)),
        ("n".to_string(), range_value(&grid.n)),
        ("d".to_string(), d),
    ]);
    sweep_report(desc, verify::sweep_geo(&grid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("7..50").unwrap(), 7..=50);
        assert_eq!(parse_range("7..=50").unwrap(), 7..=50);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x..2").is_err());
    }

    #[test]
    fn generator_lists() {
        assert_eq!(parse_gens("2, 3").unwrap(), vec![2, 3]);
        assert!(parse_gens("2,,3").is_err());
    }
}
