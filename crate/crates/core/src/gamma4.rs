//! Closed forms for `Γ₄ = ⟨a, 2a+d, 3a+3d, 4a+6d⟩`, the semigroup generated by
//! the first four partial sums of the arithmetic progression `a, a+d, ...`.
//!
//! Write `i = 6μ + q_i` with `0 <= q_i < 6` and split `q_i = 3ν + ξ` with
//! `ν ∈ {0,1}`, `ξ ∈ {0,1,2}`. The nonzero Apéry elements with respect to
//! `a` are `ω(i) = (4μ + 3ν + 2ξ)a + i·d`, each with the single expression
//! `μ·s₄ + ν·s₃ + ξ·s₂`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{self, Discrepancy};
use crate::semigroup::{gcd, AperySet, AperyTable, NumericalSemigroup};
use crate::tangent_cone::HilbertSeries;

/// Parameters `(a, d)` with `a >= 7`, `d >= 1`, `gcd(a, d) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Gamma4Params {
    a: i64,
    d: i64,
}

/// `ω(i)` together with its digits `(μ, ν, ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gamma4AperyEntry {
    pub i: i64,
    pub mu: i64,
    pub nu: i64,
    pub xi: i64,
    pub omega: i64,
}

impl Gamma4AperyEntry {
    /// Maximum factorization length of `ω(i)`.
    pub fn depth(&self) -> i64 {
        self.mu + self.nu + self.xi
    }
}

/// Which guard to use for the `q = 2` branch of the Frobenius case rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Q2Guard {
    /// `a > 2`, vacuous for `a >= 7`.
    Literal,
    /// `a > 2d`, the condition under which `ω(a-3) > ω(a-1)`.
    Corrected,
}

impl Gamma4Params {
    pub fn new(a: i64, d: i64) -> Result<Self> {
        if a < 7 {
            return Err(Error::Parameter(format!("a must be at least 7, got {a}")));
        }
        if d < 1 {
            return Err(Error::Parameter(format!("d must be positive, got {d}")));
        }
        if gcd(a, d) != 1 {
            return Err(Error::Parameter(format!("gcd({a}, {d}) must be 1")));
        }
        // ω(a-1) < (4a/6 + 5)a + a·d; keep that and a·s₄ in range
        let s4 = a
            .checked_mul(4)
            .and_then(|x| d.checked_mul(6).and_then(|y| x.checked_add(y)));
        let ok = s4
            .and_then(|s4| s4.checked_mul(a))
            .and_then(|x| x.checked_mul(2))
            .is_some();
        if !ok {
            return Err(Error::Range(format!(
                "(a, d) = ({a}, {d}) overflows 64-bit arithmetic"
            )));
        }
        Ok(Self { a, d })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `⌊a/6⌋`.
    pub fn m(&self) -> i64 {
        self.a / 6
    }

    /// `a mod 6`.
    pub fn q(&self) -> i64 {
        self.a % 6
    }

    pub fn params(&self) -> BTreeMap<String, i64> {
        report::params([("a", self.a), ("d", self.d)])
    }

    /// `(s₁, s₂, s₃, s₄) = (a, 2a+d, 3a+3d, 4a+6d)`.
    pub fn generators(&self) -> [i64; 4] {
        let (a, d) = (self.a, self.d);
        [a, 2 * a + d, 3 * a + 3 * d, 4 * a + 6 * d]
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(self.generators().to_vec()).expect("valid parameters")
    }

    /// `(μ, ν, ξ)` for `0 <= i < a`.
    pub fn digits(i: i64) -> (i64, i64, i64) {
        let (mu, q) = (i / 6, i % 6);
        if q >= 3 {
            (mu, 1, q - 3)
        } else {
            (mu, 0, q)
        }
    }

    pub fn entry(&self, i: i64) -> Gamma4AperyEntry {
        let (mu, nu, xi) = Self::digits(i);
        Gamma4AperyEntry {
            i,
            mu,
            nu,
            xi,
            omega: (4 * mu + 3 * nu + 2 * xi) * self.a + i * self.d,
        }
    }

    /// `ω(i)` for `0 <= i < a`, with `ω(0) = 0`.
    pub fn omega(&self, i: i64) -> i64 {
        self.entry(i).omega
    }

    /// Entries for `i = 1..a-1`.
    pub fn apery_entries(&self) -> Vec<Gamma4AperyEntry> {
        (1..self.a).map(|i| self.entry(i)).collect()
    }

    /// `ω(0), ω(1), ..., ω(a-1)`.
    pub fn omega_row(&self) -> Vec<i64> {
        (0..self.a).map(|i| self.omega(i)).collect()
    }

    /// Residue of `ω(t)` for each index `t`, i.e. `t·d mod a`.
    pub fn step_order(&self) -> Vec<usize> {
        (0..self.a).map(|t| ((t * self.d) % self.a) as usize).collect()
    }

    pub fn apery_set(&self) -> AperySet {
        let mut elements = vec![0; self.a as usize];
        for (t, r) in self.step_order().into_iter().enumerate() {
            elements[r] = self.omega(t as i64);
        }
        AperySet::from_elements(self.a, elements).expect("ω(t) is congruent to t·d")
    }

    /// Indices `i` whose `ω(i)` are the maximal Apéry elements, by `q`.
    pub fn pf_indices(&self) -> Vec<i64> {
        let a = self.a;
        match self.q() {
            0 => vec![a - 1],
            1 => vec![a - 1, a - 2],
            2 => vec![a - 1, a - 3],
            3 => vec![a - 1, a - 4],
            4 => vec![a - 1, a - 2, a - 5],
            _ => vec![a - 1, a - 3, a - 6],
        }
    }

    /// Pseudo-Frobenius numbers `ω(i) - a`.
    pub fn pf(&self) -> BTreeSet<i64> {
        self.pf_apery_elements().into_iter().map(|w| w - self.a).collect()
    }

    /// The maximal Apéry elements `ω(i)` themselves.
    pub fn pf_apery_elements(&self) -> BTreeSet<i64> {
        self.pf_indices().into_iter().map(|i| self.omega(i)).collect()
    }

    /// Frobenius number as the largest pseudo-Frobenius number.
    pub fn frobenius(&self) -> i64 {
        *self.pf().iter().next_back().unwrap()
    }

    /// The case rule picking one `ω(i)` as the Frobenius element, shifted
    /// by `-a`.
    pub fn frobenius_case_rule(&self, q2_guard: Q2Guard) -> i64 {
        let (a, d) = (self.a, self.d);
        let i = match self.q() {
            1 if 3 * a > d => a - 2,
            2 => {
                let guard = match q2_guard {
                    Q2Guard::Literal => a > 2,
                    Q2Guard::Corrected => a > 2 * d,
                };
                if guard {
                    a - 3
                } else {
                    a - 1
                }
            }
            4 if a > d => a - 2,
            _ => a - 1,
        };
        self.omega(i) - a
    }

    /// Warnings where the case rule for the Frobenius number disagrees with
    /// the maximum of the pseudo-Frobenius set.
    pub fn frobenius_discrepancies(&self) -> Vec<Discrepancy> {
        let f = self.frobenius();
        let mut out = Vec::new();
        let literal = self.frobenius_case_rule(Q2Guard::Literal);
        if literal != f {
            out.push(Discrepancy::warning(
                &self.params(),
                format!("frobenius case rule, q={} (q=2 guard a>2)", self.q()),
                f,
                literal,
            ));
        }
        let corrected = self.frobenius_case_rule(Q2Guard::Corrected);
        if corrected != f {
            out.push(Discrepancy::warning(
                &self.params(),
                format!("frobenius case rule, q={} (q=2 guard a>2d)", self.q()),
                f,
                corrected,
            ));
        }
        out
    }

    /// `⌊a/6⌋ + 2`.
    pub fn reduction_number(&self) -> usize {
        (self.m() + 2) as usize
    }

    /// Counts `t_k = #{0 <= i < a : μᵢ+νᵢ+ξᵢ = k}` from the case table,
    /// with no adjustment for `q = 0`.
    ///
    /// For `q = 0` the triple `(μ, 0, 0)` encodes `i = a`, so the entry at
    /// `k = μ` is one too large here; [`Self::tk`] removes it.
    pub fn tk_case_table(&self) -> Vec<u64> {
        let (mu, q) = (self.m() as usize, self.q() as u64);
        let mut t = vec![0u64; mu + 3];
        t[0] = 1;
        t[1] = 3;
        t[2] = if mu == 1 { q / 2 + 2 } else { 5 };
        for tk in t.iter_mut().take(mu + 1).skip(3) {
            *tk = 6;
        }
        if mu >= 2 {
            t[mu + 1] = q / 2 + 3;
        }
        t[mu + 2] = match q {
            0..=2 => 1,
            3 | 4 => 2,
            _ => 3,
        };
        t
    }

    /// Multiplicities `t_0, ..., t_{⌊a/6⌋+2}` of the free summands
    /// `F(-k)` of the tangent cone. They sum to `a`.
    pub fn tk(&self) -> Vec<u64> {
        let mut t = self.tk_case_table();
        if self.q() == 0 {
            t[self.m() as usize] -= 1;
        }
        t
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.tk().into_iter().map(|x| x as i64).collect())
    }

    /// Closed-form Apéry table, residue-indexed like the oracle table.
    ///
    /// Column `t` holds `ω(t)` while `s <= μ+ν+ξ` and
    /// `(3μ + 2ν + ξ + s)a + t·d` afterwards.
    pub fn apery_table(&self) -> AperyTable {
        let a = self.a;
        let depth = self.reduction_number();
        let order = self.step_order();
        let rows = (0..=depth as i64)
            .map(|s| {
                let mut row = vec![0; a as usize];
                for (t, &r) in order.iter().enumerate() {
                    let e = self.entry(t as i64);
                    row[r] = if s <= e.depth() {
                        e.omega
                    } else {
                        (3 * e.mu + 2 * e.nu + e.xi + s) * a + e.i * self.d
                    };
                }
                row
            })
            .collect();
        AperyTable::from_rows(a, rows).expect("rows have width a")
    }

    /// Exponents `α + 1` of the derivations `t^{α+1}`, `α` pseudo-Frobenius.
    pub fn derivation_exponents(&self) -> BTreeSet<i64> {
        self.pf().into_iter().map(|x| x + 1).collect()
    }

    /// Whether the defining ideal is a set-theoretic complete intersection
    /// by the known case list (`q ∈ {0, 3, 4, 5}`). Reported, not checked.
    pub fn set_theoretic_complete_intersection(&self) -> bool {
        matches!(self.q(), 0 | 3 | 4 | 5)
    }
}
