//! Ladder analysis of Apéry tables and the resulting decomposition of the
//! tangent cone as a module over the fiber cone `F` of the multiplicity
//! element.
//!
//! Each column of an Apéry table is a non-decreasing ladder. Its landings
//! (maximal constant runs of length at least one) give one free summand
//! `F(-d)` and, for every gap between consecutive landings, a torsion
//! summand `F/(t^a)^c F(-b)`. The residue-0 column always contributes `F`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{AperySet, AperyTable, LengthTable, NumericalSemigroup};

/// A non-decreasing sequence of integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ladder(Vec<i64>);

impl Ladder {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if let Some(i) = (1..values.len()).find(|&i| values[i] < values[i - 1]) {
            return Err(Error::Domain(format!(
                "ladder decreases at position {i}: {} > {}",
                values[i - 1],
                values[i]
            )));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// Maximal constant runs of length at least one, in increasing order.
    pub fn landings(&self) -> Vec<Landing> {
        let v = &self.0;
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=v.len() {
            if i == v.len() || v[i] != v[start] {
                if i - 1 > start {
                    out.push(Landing { start, end: i - 1 });
                }
                start = i;
            }
        }
        out
    }

    pub fn stats(&self) -> LadderStats {
        let landings = self.landings();
        let Some(last) = landings.last() else {
            return LadderStats {
                landings,
                p: 0,
                d: 0,
                torsion: Vec::new(),
            };
        };
        let d = last.end;
        let torsion = landings
            .windows(2)
            .map(|w| TorsionSummand {
                shift: w[0].end as u64,
                length: (w[1].start - w[0].end) as u64,
            })
            .collect();
        LadderStats {
            p: landings.len() - 1,
            d,
            torsion,
            landings,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Landing {
    pub start: usize,
    pub end: usize,
}

impl Landing {
    pub fn length(&self) -> usize {
        self.end - self.start
    }
}

/// Cyclic summand `F/(t^a)^length F(-shift)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TorsionSummand {
    pub shift: u64,
    pub length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderStats {
    pub landings: Vec<Landing>,
    /// Number of landings minus one (0 when there is none).
    pub p: usize,
    /// End of the last landing; 0 for a ladder without landings.
    pub d: usize,
    /// `(b_j, c_j) = (e_{j-1}, s_j - e_{j-1})` for `j = 1..=p`.
    pub torsion: Vec<TorsionSummand>,
}

pub fn ladder_stats(ladder: &Ladder) -> LadderStats {
    ladder.stats()
}

/// Tangent cone as `F ⊕ ⊕ F(-dᵢ) ⊕ torsion`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CzDecomposition {
    pub modulus: i64,
    /// One shift per residue, 0 for residue 0; sorted.
    pub free_shifts: Vec<u64>,
    pub torsion: Vec<TorsionSummand>,
}

impl CzDecomposition {
    /// `free_shifts` as a histogram indexed by shift.
    pub fn shift_histogram(&self) -> Vec<u64> {
        let top = self.free_shifts.iter().copied().max().unwrap_or(0) as usize;
        let mut h = vec![0u64; top + 1];
        for &s in &self.free_shifts {
            h[s as usize] += 1;
        }
        h
    }

    /// Cohen-Macaulay iff the tangent cone is free over `F`, i.e. there is no
    /// torsion summand.
    pub fn is_cohen_macaulay(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Reported only: a Cohen-Macaulay tangent cone is Buchsbaum. `None`
    /// means the decomposition alone does not decide it.
    pub fn is_buchsbaum(&self) -> Option<bool> {
        self.is_cohen_macaulay().then_some(true)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert_from_decomposition(self)
    }
}

pub fn cz_decompose(table: &AperyTable) -> CzDecomposition {
    let mut free_shifts = vec![0u64];
    let mut torsion = Vec::new();
    for residue in 1..table.modulus() as usize {
        let ladder = Ladder::new(table.column(residue)).expect("Apéry table columns are non-decreasing");
        let stats = ladder.stats();
        free_shifts.push(stats.d as u64);
        torsion.extend(stats.torsion);
    }
    free_shifts.sort_unstable();
    torsion.sort_unstable();
    CzDecomposition {
        modulus: table.modulus(),
        free_shifts,
        torsion,
    }
}

pub fn is_tangent_cone_cm(decomposition: &CzDecomposition) -> bool {
    decomposition.is_cohen_macaulay()
}

/// Hilbert series `numerator(x) / (1 - x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
}

impl HilbertSeries {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut numerator: Vec<i64>) -> Self {
        while numerator.len() > 1 && *numerator.last().unwrap() == 0 {
            numerator.pop();
        }
        Self { numerator }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn numerator_at_one(&self) -> i64 {
        self.numerator.iter().sum()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{k}"),
            });
        }
        let body = if terms.is_empty() { "0".to_string() } else { terms.join("+").replace("+-", "-") };
        write!(f, "({body})/(1-x)")
    }
}

/// Free summands contribute `x^d`, torsion summands `x^b (1 + ... + x^{c-1})`.
pub fn hilbert_from_decomposition(decomposition: &CzDecomposition) -> HilbertSeries {
    let top = decomposition
        .free_shifts
        .iter()
        .copied()
        .chain(decomposition.torsion.iter().map(|t| t.shift + t.length.saturating_sub(1)))
        .max()
        .unwrap_or(0) as usize;
    let mut numerator = vec![0i64; top + 1];
    for &d in &decomposition.free_shifts {
        numerator[d as usize] += 1;
    }
    for t in &decomposition.torsion {
        for k in 0..t.length {
            numerator[(t.shift + k) as usize] += 1;
        }
    }
    HilbertSeries::new(numerator)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinStep {
    pub n: usize,
    pub holds: bool,
    /// Smallest `x` in `nM` with `x + a` in `(n+2)M` but `x` not in `(n+1)M`.
    pub witness: Option<i64>,
}

/// Per-`n` evaluation of `nM ∩ ((n+2)M - a) = (n+1)M`, a necessary condition
/// for a Gorenstein tangent cone. It does not decide Gorensteinness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub steps: Vec<GorensteinStep>,
    pub holds: bool,
}

/// Evaluates the condition for `1 <= n <= reduction_number` over the window
/// `0..=F + (n+2)·max_generator`.
pub fn gorenstein_condition(s: &NumericalSemigroup) -> GorensteinReport {
    let a = s.multiplicity();
    let reduction = s.apery_table().reduction_number();
    let frobenius = s.frobenius();
    let max_gen = *s.generators().last().unwrap();
    let mut lengths = LengthTable::new(s, 0);
    let steps: Vec<GorensteinStep> = (1..=reduction)
        .map(|n| {
            let n64 = n as u64;
            let window = frobenius + (n as i64 + 2) * max_gen;
            lengths.extend_to(window + a);
            let witness = (0..=window).find(|&x| {
                let lhs = lengths.in_power(x, n64) && lengths.in_power(x + a, n64 + 2);
                lhs != lengths.in_power(x, n64 + 1)
            });
            GorensteinStep {
                n,
                holds: witness.is_none(),
                witness,
            }
        })
        .collect();
    GorensteinReport {
        holds: steps.iter().all(|s| s.holds),
        steps,
    }
}

/// Socle of the reduction `G/(t^a)G` of the tangent cone, as Apéry
/// elements, when the tangent cone is Cohen-Macaulay; `None` otherwise.
///
/// In the Cohen-Macaulay case the reduction has basis `Ap(S, a)`, graded by
/// maximal factorization length, and `w·g` is nonzero exactly when `w + g` is
/// in `Ap(S, a)` with length one more than `w`. The tangent cone is
/// Gorenstein iff the socle has one element. Reported only.
pub fn reduction_socle(s: &NumericalSemigroup) -> Option<Vec<i64>> {
    let a = s.multiplicity();
    if !cz_decompose(&s.apery_table()).is_cohen_macaulay() {
        return None;
    }
    let ap = s.apery_set(a).expect("multiplicity is an element");
    let max_gen = *s.generators().last().unwrap();
    let lengths = LengthTable::new(s, ap.max() + max_gen);
    let others = &s.generators()[1..];
    let mut socle: Vec<i64> = ap
        .elements()
        .iter()
        .copied()
        .filter(|&w| {
            others
                .iter()
                .all(|&g| !(ap.contains(w + g) && lengths.get(w + g) == lengths.get(w).map(|l| l + 1)))
        })
        .collect();
    socle.sort_unstable();
    Some(socle)
}

/// True iff every nonzero element of `apery` has exactly one factorization
/// over the generators of `s`.
pub fn unique_expression_check(s: &NumericalSemigroup, apery: &AperySet) -> bool {
    apery
        .elements()
        .iter()
        .filter(|&&w| w != 0)
        .all(|&w| s.factorizations(w).len() == 1)
}
