//! Sparse integer polynomials in `x₁, x₂, x₃, x₄`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const NVARS: usize = 4;

/// Exponent vector of `x₁^e₁ x₂^e₂ x₃^e₃ x₄^e₄`. Ordered by total degree,
/// then lexicographically by exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    /// Rejects negative exponents.
    pub fn from_signed(exponents: [i64; NVARS]) -> Result<Self> {
        let mut e = [0u32; NVARS];
        for (k, &x) in exponents.iter().enumerate() {
            e[k] = u32::try_from(x).map_err(|_| {
                Error::Consistency(format!("exponent {x} of x{} is out of range", k + 1))
            })?;
        }
        Ok(Self(e))
    }

    pub fn exponents(&self) -> [u32; NVARS] {
        self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", k + 1)?,
                _ => write!(f, "x{}^{}", k + 1, e)?,
            }
        }
        Ok(())
    }
}

/// Variable weights; the degree of `x_k` is `weights[k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightVector(pub [i64; NVARS]);

impl WeightVector {
    pub fn degree(&self, m: &Monomial) -> i64 {
        self.0.iter().zip(m.0).map(|(w, e)| w * e as i64).sum()
    }
}

pub fn weighted_degree(m: &Monomial, w: &WeightVector) -> i64 {
    w.degree(m)
}

/// Finite sum of integer multiples of monomials. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coefficient: i64, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coefficient);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> i64 {
        self.terms.get(&Monomial::ONE).copied().unwrap_or(0)
    }

    /// The common weighted degree of all terms, if there is one. `None` for
    /// zero and for inhomogeneous polynomials.
    pub fn homogeneous_degree(&self, w: &WeightVector) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|m| w.degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&m, &c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&m, &c) in &rhs.terms {
            out.add_term(m, -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(&m, &c)| (m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest degree first
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let abs = c.unsigned_abs();
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            match (abs, m.is_one()) {
                (1, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{abs}")?,
                _ => write!(f, "{abs}{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term<'a> {
    exponents: &'a [u32; NVARS],
    coefficient: i64,
}

/// A list of `{exponents, coefficient}` in increasing monomial order.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, &c) in &self.terms {
            seq.serialize_element(&Term {
                exponents: &m.0,
                coefficient: c,
            })?;
        }
        seq.end()
    }
}

/// `plus - minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self> {
        if plus == minus {
            return Err(Error::Structure(format!("binomial {plus} - {minus} is zero")));
        }
        Ok(Self { plus, minus })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms([(self.plus, 1), (self.minus, -1)])
    }

    /// Reads `m₁ - m₂` back from a polynomial.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let terms: Vec<_> = p.terms().collect();
        match terms.as_slice() {
            [(&m1, &1), (&m2, &-1)] => Self::new(m1, m2),
            [(&m1, &-1), (&m2, &1)] => Self::new(m2, m1),
            _ => Err(Error::Structure(format!("{p} is not a binomial"))),
        }
    }

    pub fn is_homogeneous(&self, w: &WeightVector) -> bool {
        w.degree(&self.plus) == w.degree(&self.minus)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

pub fn is_homogeneous(b: &Binomial, w: &WeightVector) -> bool {
    b.is_homogeneous(w)
}

/// Dense matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if let Some(r) = entries.iter().position(|row| row.len() != cols) {
            return Err(Error::Structure(format!(
                "row {r} has {} entries, expected {cols}",
                entries[r].len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Vec<&Polynomial> {
        self.entries.iter().map(|row| &row[col]).collect()
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Structure(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..rhs.cols)
                    .map(|j| {
                        (0..self.cols).fold(Polynomial::zero(), |acc, k| {
                            &acc + &(self.get(i, k) * rhs.get(k, j))
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(PolyMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }
}
