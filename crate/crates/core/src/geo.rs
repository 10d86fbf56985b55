//! Closed forms for `⟨a, ha + d, ha + rd, ..., ha + rⁿd⟩`, generated by `a`
//! and shifted partial terms of a geometric progression.
//!
//! The Apéry element in the class of `i·d` is `ℓᵢ·h·a + i·d`, where `ℓᵢ` is
//! the digit sum of the base-`r` expansion of `i` truncated at position `n`
//! (the top digit absorbs the remainder).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report;
use crate::semigroup::{gcd, AperySet, AperyTable, NumericalSemigroup};
use crate::tangent_cone::HilbertSeries;

/// Base-`r` digits `α₀, ..., αₙ` with `αₖ < r` for `k < n` and an unbounded
/// top digit `αₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RAdicDigits {
    pub digits: Vec<u64>,
}

impl RAdicDigits {
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    pub fn value(&self, r: u64) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &digit| acc * r + digit)
    }
}

/// Greedy base-`r` expansion of `value` up to order `order`.
pub fn r_adic(value: u64, r: u64, order: usize) -> Result<RAdicDigits> {
    if r < 2 {
        return Err(Error::Parameter(format!("radix must be at least 2, got {r}")));
    }
    let mut digits = Vec::with_capacity(order + 1);
    let mut rest = value;
    for _ in 0..order {
        digits.push(rest % r);
        rest /= r;
    }
    digits.push(rest);
    Ok(RAdicDigits { digits })
}

/// Least coefficient sum over all ways of writing
/// `value = Σ βₖ rᵏ` with `βₖ >= 0`, `k = 0..=order`, found by exhaustive
/// recursion over the coefficients from the top position down.
pub fn min_digit_sum(value: u64, r: u64, order: usize) -> Result<u64> {
    if r < 2 {
        return Err(Error::Parameter(format!("radix must be at least 2, got {r}")));
    }
    fn go(value: u64, r: u64, k: usize) -> u64 {
        if k == 0 {
            return value;
        }
        let weight = r.pow(k as u32);
        (0..=value / weight)
            .map(|beta| beta + go(value - beta * weight, r, k - 1))
            .min()
            .unwrap()
    }
    Ok(go(value, r, order))
}

/// Parameters `(a, d, r, h, n)` of the geometric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GeoParams {
    a: i64,
    d: i64,
    r: i64,
    h: i64,
    n: i64,
}

/// `(i, ℓᵢ, ωᵢ)` for one residue index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeoAperyEntry {
    pub i: i64,
    pub digit_sum: i64,
    pub omega: i64,
}

impl GeoParams {
    /// Validates `a >= 2`, `r >= 2`, `d, h, n >= 1`, `gcd(a, d) = gcd(a, r) = 1`,
    /// `d > h·n·(r-1)`, and minimality of the resulting generating set.
    pub fn new(a: i64, d: i64, r: i64, h: i64, n: i64) -> Result<Self> {
        if a < 2 {
            return Err(Error::Parameter(format!("a must be at least 2, got {a}")));
        }
        if r < 2 {
            return Err(Error::Parameter(format!("r must be at least 2, got {r}")));
        }
        if d < 1 || h < 1 || n < 1 {
            return Err(Error::Parameter(format!(
                "d, h, n must be positive, got d={d}, h={h}, n={n}"
            )));
        }
        if gcd(a, d) != 1 || gcd(a, r) != 1 {
            return Err(Error::Parameter(format!(
                "need gcd(a, d) = gcd(a, r) = 1 for a={a}, d={d}, r={r}"
            )));
        }
        let bound = h
            .checked_mul(n)
            .and_then(|x| x.checked_mul(r - 1))
            .ok_or_else(|| Error::Range("h·n·(r-1) overflows".into()))?;
        if d <= bound {
            return Err(Error::Parameter(format!(
                "need d > h·n·(r-1) = {bound}, got d={d}"
            )));
        }
        let fits = r
            .checked_pow(n as u32)
            .and_then(|p| p.checked_mul(d))
            .and_then(|x| x.checked_add(h.checked_mul(a)?))
            .and_then(|x| x.checked_mul(a))
            .is_some();
        if !fits {
            return Err(Error::Range("largest generator overflows".into()));
        }
        let p = Self { a, d, r, h, n };
        let s = NumericalSemigroup::new(p.generators())?;
        if let Some(g) = s.redundant_generator() {
            return Err(Error::Parameter(format!(
                "generators {:?} are not minimal: {g} is a combination of the others",
                p.generators()
            )));
        }
        Ok(p)
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn r(&self) -> i64 {
        self.r
    }
    pub fn h(&self) -> i64 {
        self.h
    }
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn params(&self) -> BTreeMap<String, i64> {
        report::params([
            ("a", self.a),
            ("d", self.d),
            ("r", self.r),
            ("h", self.h),
            ("n", self.n),
        ])
    }

    /// `(a, ha + d, ha + rd, ..., ha + rⁿd)`.
    pub fn generators(&self) -> Vec<i64> {
        std::iter::once(self.a)
            .chain((0..=self.n as u32).map(|k| self.h * self.a + self.r.pow(k) * self.d))
            .collect()
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(self.generators()).expect("validated at construction")
    }

    /// `ℓᵢ` for `0 <= i < a`.
    pub fn digit_sum(&self, i: i64) -> i64 {
        r_adic(i as u64, self.r as u64, self.n as usize)
            .expect("r >= 2")
            .digit_sum() as i64
    }

    pub fn entry(&self, i: i64) -> GeoAperyEntry {
        let l = self.digit_sum(i);
        GeoAperyEntry {
            i,
            digit_sum: l,
            omega: l * self.h * self.a + i * self.d,
        }
    }

    /// Entries for `i = 1..a-1`.
    pub fn apery_entries(&self) -> Vec<GeoAperyEntry> {
        (1..self.a).map(|i| self.entry(i)).collect()
    }

    /// `ω₀, ..., ω_{a-1}` in index order.
    pub fn omega_row(&self) -> Vec<i64> {
        (0..self.a).map(|i| self.entry(i).omega).collect()
    }

    /// Residue `t·d mod a` of each index `t`.
    pub fn step_order(&self) -> Vec<usize> {
        (0..self.a).map(|t| ((t * self.d) % self.a) as usize).collect()
    }

    pub fn apery_set(&self) -> AperySet {
        let mut elements = vec![0; self.a as usize];
        for (t, r) in self.step_order().into_iter().enumerate() {
            elements[r] = self.entry(t as i64).omega;
        }
        AperySet::from_elements(self.a, elements).expect("ω(t) is congruent to t·d")
    }

    /// Largest digit sum, the number of nontrivial table rows.
    pub fn table_depth(&self) -> usize {
        (0..self.a).map(|i| self.digit_sum(i)).max().unwrap_or(0) as usize
    }

    /// Closed-form Apéry table, residue-indexed.
    pub fn apery_table(&self) -> AperyTable {
        let depth = self.table_depth() as i64;
        let order = self.step_order();
        let rows = (0..=depth)
            .map(|s| {
                let mut row = vec![0; self.a as usize];
                for (t, &res) in order.iter().enumerate() {
                    let e = self.entry(t as i64);
                    row[res] = if s <= e.digit_sum {
                        e.omega
                    } else {
                        e.omega + (s - e.digit_sum) * self.a
                    };
                }
                row
            })
            .collect();
        AperyTable::from_rows(self.a, rows).expect("rows have width a")
    }

    /// Numerator coefficient at `k` is `#{i : ℓᵢ = k}`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let mut counts = vec![0i64; self.table_depth() + 1];
        for i in 0..self.a {
            counts[self.digit_sum(i) as usize] += 1;
        }
        HilbertSeries::new(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_adic_examples() {
        assert_eq!(r_adic(0, 3, 2).unwrap().digits, vec![0, 0, 0]);
        assert_eq!(r_adic(6, 2, 2).unwrap().digits, vec![0, 1, 1]);
        let d = r_adic(11, 2, 2).unwrap();
        assert_eq!(d.digits, vec![1, 1, 2]);
        assert_eq!(d.digit_sum(), 4);
        assert_eq!(d.value(2), 11);
        assert!(matches!(r_adic(3, 1, 2), Err(Error::Parameter(_))));
    }

    #[test]
    fn brute_force_digit_sums() {
        assert_eq!(min_digit_sum(6, 2, 2).unwrap(), 2);
        assert_eq!(min_digit_sum(11, 2, 2).unwrap(), 4);
        assert_eq!(min_digit_sum(0, 5, 3).unwrap(), 0);
    }

    #[test]
    fn parameter_guards() {
        let p = GeoParams::new(7, 3, 2, 1, 2).unwrap();
        assert_eq!(p.generators(), vec![7, 10, 13, 19]);
        assert!(matches!(GeoParams::new(11, 24, 1, 1, 2), Err(Error::Parameter(_))));
        assert!(matches!(GeoParams::new(7, 2, 2, 1, 2), Err(Error::Parameter(_))));
        assert!(matches!(GeoParams::new(8, 3, 2, 1, 1), Err(Error::Parameter(_))));
        assert!(matches!(GeoParams::new(9, 4, 3, 1, 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn apery_examples() {
        let p = GeoParams::new(7, 3, 2, 1, 2).unwrap();
        let e = p.entry(3);
        assert_eq!((e.digit_sum, e.omega), (2, 23));
        assert_eq!(p.omega_row(), vec![0, 10, 13, 23, 19, 29, 32]);
        // a single nonzero digit α at position k gives α·a_{k+1}
        let e = p.entry(4);
        assert_eq!(e.omega, 19);
    }

    #[test]
    fn table_example() {
        let p = GeoParams::new(7, 3, 2, 1, 2).unwrap();
        assert_eq!(p.table_depth(), 2);
        let t = p.apery_table();
        assert_eq!(
            t.rows_in_order(&p.step_order()),
            vec![
                vec![0, 10, 13, 23, 19, 29, 32],
                vec![7, 10, 13, 23, 19, 29, 32],
                vec![14, 17, 20, 23, 26, 29, 32],
            ]
        );
        assert_eq!(t.column(0), vec![0, 7, 14]);
        assert_eq!(p.hilbert_series().numerator(), &[1, 3, 3]);
    }
}
