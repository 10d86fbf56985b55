//! Closed-form-free oracle engine for arbitrary numerical semigroups.
//!
//! Everything here works from the generator list alone: membership,
//! Apéry sets (shortest paths over the residue graph), pseudo-Frobenius
//! numbers, factorizations and their lengths, Apéry tables of the powers
//! of the maximal ideal, and the Betti degrees of the defining ideal.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use serde::Serialize;

use crate::error::{Error, Result};

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A numerical semigroup given by a generating list.
///
/// The list is stored sorted and strictly increasing. It need not be a
/// minimal generating set; see [`NumericalSemigroup::is_minimal_generating`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds a semigroup from generators given in any order.
    ///
    /// Rejects repeated generators, lists with fewer than two entries,
    /// generators below 2, a gcd different from 1, and lists whose
    /// `multiplicity * max_generator` does not fit in an `i64`.
    pub fn new(generators: impl Into<Vec<i64>>) -> Result<Self> {
        let mut generators = generators.into();
        generators.sort_unstable();
        if generators.len() < 2 {
            return Err(Error::Domain(format!(
                "need at least two generators, got {generators:?}"
            )));
        }
        if generators[0] < 2 {
            return Err(Error::Domain(format!(
                "generators must be at least 2, got {}",
                generators[0]
            )));
        }
        if let Some(w) = generators.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("repeated generator {}", w[0])));
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::Domain(format!(
                "generators {generators:?} have gcd {g}, expected 1"
            )));
        }
        let max = *generators.last().unwrap();
        if generators[0].checked_mul(max).is_none() {
            return Err(Error::Range(format!(
                "{} * {max} overflows 64-bit arithmetic",
                generators[0]
            )));
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    fn max_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    /// Membership by a dynamic-programming scan over `0..=x`.
    pub fn contains(&self, x: i64) -> Result<bool> {
        if x < 0 {
            return Err(Error::Domain(format!("membership of negative integer {x}")));
        }
        Ok(membership_scan(&self.generators, x as usize)[x as usize])
    }

    /// Apéry set with respect to `a`: for each residue class modulo `a`, the
    /// least element of the semigroup in that class.
    ///
    /// Computed with Dijkstra over the residue graph whose arcs are
    /// `r -> (r + g) mod a` of weight `g`.
    pub fn apery_set(&self, a: i64) -> Result<AperySet> {
        if a <= 0 {
            return Err(Error::Domain(format!("Apéry modulus must be positive, got {a}")));
        }
        if a.checked_mul(self.max_generator()).is_none() {
            return Err(Error::Range(format!(
                "{a} * {} overflows 64-bit arithmetic",
                self.max_generator()
            )));
        }
        if a != self.multiplicity() {
            let base = residue_shortest_paths(&self.generators, self.multiplicity());
            let m = self.multiplicity();
            if a < base[(a % m) as usize] {
                return Err(Error::Domain(format!("{a} is not an element of the semigroup")));
            }
        }
        Ok(AperySet {
            modulus: a,
            elements: residue_shortest_paths(&self.generators, a),
        })
    }

    /// Largest integer not in the semigroup.
    pub fn frobenius(&self) -> i64 {
        let m = self.multiplicity();
        let ap = self.apery_set(m).expect("multiplicity is an element");
        ap.max() - m
    }

    /// Pseudo-Frobenius numbers, as `w - m` for the maximal elements `w` of
    /// the Apéry set with respect to the multiplicity `m`.
    pub fn pseudo_frobenius(&self) -> BTreeSet<i64> {
        let m = self.multiplicity();
        let ap = self.apery_set(m).expect("multiplicity is an element");
        ap.maximals(&self.generators)
            .into_iter()
            .map(|w| w - m)
            .collect()
    }

    /// Type of the semigroup, the number of pseudo-Frobenius numbers.
    pub fn type_number(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// True iff no generator lies in the semigroup generated by the others.
    pub fn is_minimal_generating(&self) -> bool {
        self.redundant_generator().is_none()
    }

    /// First generator that is a combination of the others, if any.
    pub fn redundant_generator(&self) -> Option<i64> {
        (0..self.generators.len()).find_map(|i| {
            let g = self.generators[i];
            let others: Vec<i64> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            membership_scan(&others, g as usize)[g as usize].then_some(g)
        })
    }

    /// All factorizations of `x`. The last generator's exponent is the
    /// primary sort key (descending), then the one before it, and so on.
    pub fn factorizations(&self, x: i64) -> Vec<Factorization> {
        let mut out = Vec::new();
        if x < 0 {
            return out;
        }
        let mut exps = vec![0u64; self.generators.len()];
        enumerate_factorizations(&self.generators, self.generators.len() - 1, x, &mut exps, &mut out);
        out
    }

    /// Maximum factorization length of `x`, `None` if `x` is not in the
    /// semigroup. The empty factorization gives `Some(0)` for `x = 0`.
    pub fn max_factorization_length(&self, x: i64) -> Option<u64> {
        if x < 0 {
            return None;
        }
        LengthTable::new(self, x).get(x)
    }

    /// Apéry table of the powers of the maximal ideal with respect to the
    /// multiplicity, with rows `0..=reduction_number`.
    pub fn apery_table(&self) -> AperyTable {
        let a = self.multiplicity();
        let ap = self.apery_set(a).expect("multiplicity is an element");
        let mut lengths = LengthTable::new(self, ap.max() + a);
        let mut rows = vec![ap.elements];
        let mut n = 0u64;
        loop {
            let current = rows.last().unwrap();
            let next: Vec<i64> = current
                .iter()
                .map(|&w| {
                    let len = lengths.get_extending(w);
                    if len.is_some_and(|l| l > n) {
                        w
                    } else {
                        w + a
                    }
                })
                .collect();
            if next.iter().zip(current).all(|(x, y)| *x == y + a) {
                break;
            }
            rows.push(next);
            n += 1;
        }
        AperyTable {
            modulus: a,
            rows,
            reduction_number: n as usize,
        }
    }

    /// Default search window for [`Self::betti_degrees`]:
    /// Frobenius number plus the sum of the generators plus one.
    pub fn default_betti_bound(&self) -> i64 {
        self.frobenius() + self.generators.iter().sum::<i64>() + 1
    }

    /// Degrees of a minimal binomial generating set of the defining ideal,
    /// with multiplicities.
    ///
    /// For every `s <= bound` with at least two factorizations, the
    /// factorizations are joined when their supports intersect; `s`
    /// contributes `components - 1` generators.
    pub fn betti_degrees(&self, bound: Option<i64>) -> BTreeMap<i64, usize> {
        let bound = bound.unwrap_or_else(|| self.default_betti_bound());
        let mut buckets: BTreeMap<i64, Vec<Vec<u64>>> = BTreeMap::new();
        let mut exps = vec![0u64; self.generators.len()];
        bucket_factorizations(&self.generators, 0, 0, bound, &mut exps, &mut buckets);

        let mut out = BTreeMap::new();
        for (s, facts) in buckets {
            if facts.len() < 2 {
                continue;
            }
            let components = support_components(&facts);
            if components > 1 {
                out.insert(s, components - 1);
            }
        }
        out
    }
}

fn membership_scan(generators: &[i64], upto: usize) -> Vec<bool> {
    let mut member = vec![false; upto + 1];
    member[0] = true;
    for x in 1..=upto {
        member[x] = generators
            .iter()
            .any(|&g| (g as usize) <= x && member[x - g as usize]);
    }
    member
}

fn residue_shortest_paths(generators: &[i64], a: i64) -> Vec<i64> {
    let n = a as usize;
    let steps: Vec<(usize, i64)> = generators
        .iter()
        .filter(|&&g| g % a != 0)
        .map(|&g| ((g % a) as usize, g))
        .collect();
    let mut dist = vec![i64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((dw, r))) = heap.pop() {
        if dw > dist[r] {
            continue;
        }
        for &(step, g) in &steps {
            let mut next = r + step;
            if next >= n {
                next -= n;
            }
            let cand = dw + g;
            if cand < dist[next] {
                dist[next] = cand;
                heap.push(Reverse((cand, next)));
            }
        }
    }
    dist
}

fn enumerate_factorizations(
    generators: &[i64],
    idx: usize,
    rem: i64,
    exps: &mut Vec<u64>,
    out: &mut Vec<Factorization>,
) {
    let g = generators[idx];
    if idx == 0 {
        if rem % g == 0 {
            exps[0] = (rem / g) as u64;
            out.push(Factorization {
                exponents: exps.clone(),
            });
            exps[0] = 0;
        }
        return;
    }
    for c in (0..=rem / g).rev() {
        exps[idx] = c as u64;
        enumerate_factorizations(generators, idx - 1, rem - c * g, exps, out);
    }
    exps[idx] = 0;
}

fn bucket_factorizations(
    generators: &[i64],
    idx: usize,
    value: i64,
    bound: i64,
    exps: &mut Vec<u64>,
    buckets: &mut BTreeMap<i64, Vec<Vec<u64>>>,
) {
    if idx == generators.len() {
        buckets.entry(value).or_default().push(exps.clone());
        return;
    }
    let g = generators[idx];
    let mut c = 0;
    while value + c * g <= bound {
        exps[idx] = c as u64;
        bucket_factorizations(generators, idx + 1, value + c * g, bound, exps, buckets);
        c += 1;
    }
    exps[idx] = 0;
}

/// Number of connected components of the graph on `facts` joining two
/// factorizations that share a generator with positive exponent.
fn support_components(facts: &[Vec<u64>]) -> usize {
    let mut parent: Vec<usize> = (0..facts.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let width = facts[0].len();
    for j in 0..width {
        let mut first: Option<usize> = None;
        for (i, f) in facts.iter().enumerate() {
            if f[j] == 0 {
                continue;
            }
            match first {
                None => first = Some(i),
                Some(root) => {
                    let (x, y) = (find(&mut parent, root), find(&mut parent, i));
                    parent[x] = y;
                }
            }
        }
    }
    (0..facts.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// Maximum factorization lengths of `0..=upto`, grown on demand.
#[derive(Debug, Clone)]
pub struct LengthTable {
    generators: Vec<i64>,
    lengths: Vec<Option<u64>>,
}

impl LengthTable {
    pub fn new(s: &NumericalSemigroup, upto: i64) -> Self {
        let mut table = Self {
            generators: s.generators.clone(),
            lengths: vec![Some(0)],
        };
        table.extend_to(upto);
        table
    }

    pub fn extend_to(&mut self, upto: i64) {
        if upto < 0 {
            return;
        }
        let upto = upto as usize;
        while self.lengths.len() <= upto {
            let x = self.lengths.len();
            let best = self
                .generators
                .iter()
                .filter(|&&g| g as usize <= x)
                .filter_map(|&g| self.lengths[x - g as usize].map(|l| l + 1))
                .max();
            self.lengths.push(best);
        }
    }

    /// Length of `x`; `x` must already be covered by the table.
    pub fn get(&self, x: i64) -> Option<u64> {
        if x < 0 {
            return None;
        }
        self.lengths[x as usize]
    }

    pub fn get_extending(&mut self, x: i64) -> Option<u64> {
        self.extend_to(x);
        self.get(x)
    }

    /// Whether `x` lies in `n` copies of the maximal ideal.
    pub fn in_power(&mut self, x: i64, n: u64) -> bool {
        if n == 0 {
            return self.get_extending(x).is_some();
        }
        self.get_extending(x).is_some_and(|l| l >= n)
    }
}

/// Least element per residue class modulo `modulus`, indexed by residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    modulus: i64,
    elements: Vec<i64>,
}

impl AperySet {
    /// Wraps a residue-indexed list. `elements[r]` must be congruent to `r`.
    pub fn from_elements(modulus: i64, elements: Vec<i64>) -> Result<Self> {
        if modulus <= 0 || elements.len() != modulus as usize {
            return Err(Error::Structure(format!(
                "Apéry set of modulus {modulus} needs {modulus} entries, got {}",
                elements.len()
            )));
        }
        if let Some(r) = (0..elements.len()).find(|&r| elements[r].rem_euclid(modulus) != r as i64) {
            return Err(Error::Structure(format!(
                "entry {} is not congruent to residue {r} modulo {modulus}",
                elements[r]
            )));
        }
        Ok(Self { modulus, elements })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Residue-indexed entries.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn get(&self, residue: usize) -> i64 {
        self.elements[residue]
    }

    pub fn max(&self) -> i64 {
        *self.elements.iter().max().unwrap()
    }

    /// Entries in increasing order.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    /// Membership in the semigroup this set was computed from.
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.elements[(x % self.modulus) as usize]
    }

    /// Maximal entries under `x <= y iff y - x` is in the semigroup.
    ///
    /// The set is closed downwards under that order, so `w` is maximal
    /// exactly when `w + g` leaves the set for every generator `g`.
    pub fn maximals(&self, generators: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .elements
            .iter()
            .copied()
            .filter(|&w| generators.iter().all(|&g| self.contains(w + g - self.modulus)))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Exponent vector over the generator list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Factorization {
    pub exponents: Vec<u64>,
}

impl Factorization {
    pub fn length(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn value(&self, generators: &[i64]) -> i64 {
        self.exponents
            .iter()
            .zip(generators)
            .map(|(&c, &g)| c as i64 * g)
            .sum()
    }
}

/// Apéry sets of `nM` for `n = 0..=reduction_number`, residue-indexed.
///
/// Row 0 is the Apéry set of the semigroup itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperyTable {
    modulus: i64,
    rows: Vec<Vec<i64>>,
    reduction_number: usize,
}

impl AperyTable {
    /// Builds a table from residue-indexed rows; the reduction number is the
    /// index of the last row.
    pub fn from_rows(modulus: i64, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Structure("Apéry table needs at least one row".into()));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != modulus as usize) {
            return Err(Error::Structure(format!(
                "row of width {} in a table of modulus {modulus}",
                row.len()
            )));
        }
        let reduction_number = rows.len() - 1;
        Ok(Self {
            modulus,
            rows,
            reduction_number,
        })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn reduction_number(&self) -> usize {
        self.reduction_number
    }

    /// Ladder of values of one residue across the rows.
    pub fn column(&self, residue: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[residue]).collect()
    }

    /// Rows with columns rearranged: output column `t` is residue `order[t]`.
    pub fn rows_in_order(&self, order: &[usize]) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| order.iter().map(|&r| row[r]).collect())
            .collect()
    }

    /// Checks the structural invariants every Apéry table satisfies:
    /// row 1 differs from row 0 only at residue 0, columns climb in steps of
    /// 0 or the modulus, and the last row is not followed by a uniform shift
    /// earlier than it.
    pub fn check_invariants(&self) -> Result<()> {
        let a = self.modulus;
        if self.rows[0][0] != 0 {
            return Err(Error::Structure("row 0 must start with 0".into()));
        }
        if self.rows.len() > 1 {
            let (r0, r1) = (&self.rows[0], &self.rows[1]);
            if r1[0] != a || (1..r0.len()).any(|i| r0[i] != r1[i]) {
                return Err(Error::Structure(
                    "row 1 must equal row 0 except for the modulus at residue 0".into(),
                ));
            }
        }
        for pair in self.rows.windows(2) {
            if pair[0]
                .iter()
                .zip(&pair[1])
                .any(|(x, y)| *y != *x && *y != *x + a)
            {
                return Err(Error::Structure(
                    "column steps must be 0 or the modulus".into(),
                ));
            }
            if pair[0].iter().zip(&pair[1]).all(|(x, y)| *y == *x + a) {
                return Err(Error::Structure(
                    "table continues past a uniform shift by the modulus".into(),
                ));
            }
        }
        Ok(())
    }
}
