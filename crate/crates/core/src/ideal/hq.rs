//! The binomial generating sets `H_q` of the defining ideal of `Γ₄`, and the
//! quotient-dimension count used to show they generate.

use super::notation;
use super::poly::{Binomial, Monomial, NVARS};
use crate::error::{Error, Result};
use crate::gamma4::Gamma4Params;

/// Which transcription of `H_q` applies to given parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HqCase {
    Q0,
    /// `q = 1` with `m = d = 1`, where `4m + d - 6` would be negative.
    Q1Small,
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
}

impl HqCase {
    pub fn of(p: &Gamma4Params) -> Self {
        match p.q() {
            0 => Self::Q0,
            1 if p.m() == 1 && p.d() == 1 => Self::Q1Small,
            1 => Self::Q1,
            2 => Self::Q2,
            3 => Self::Q3,
            4 => Self::Q4,
            _ => Self::Q5,
        }
    }
}

const COMMON: [&str; 2] = ["x3^2 - x1^2x4", "x2^3 - x1^3x3"];

fn case_tail(case: HqCase) -> &'static [&'static str] {
    match case {
        HqCase::Q0 => &["x1^{E} - x4^{m}"],
        HqCase::Q1Small => &["x1^7 - x2x4", "x1^4x2^2 - x3x4", "x1^2x2^2x3 - x4^2"],
        HqCase::Q1 => &[
            "x1^{E-6}x2^5 - x4^{m+1}",
            "x1^{E-1}x2^2 - x3x4^{m}",
            "x1^{E+2} - x2x4^{m}",
        ],
        HqCase::Q2 => &[
            "x1^{E-4}x2^4 - x4^{m+1}",
            "x1^{E+1}x2 - x3x4^{m}",
            "x1^{E+4} - x2^2x4^{m}",
        ],
        HqCase::Q3 => &["x1^{E-2}x2^3 - x4^{m+1}", "x1^{E+3} - x3x4^{m}"],
        HqCase::Q4 => &["x1^{E}x2^2 - x4^{m+1}", "x1^{E+5} - x2x3x4^{m}"],
        HqCase::Q5 => &["x1^{E+2}x2 - x4^{m+1}", "x1^{E+7} - x2^2x3x4^{m}"],
    }
}

/// `[("E", 4m + d), ("m", m)]`.
pub(crate) fn exponent_env(p: &Gamma4Params) -> [(&'static str, i64); 2] {
    [("E", 4 * p.m() + p.d()), ("m", p.m())]
}

/// `H_q` for `q = a mod 6`, in the order `x₃² - x₁²x₄`, `x₂³ - x₁³x₃`, then
/// the case-specific binomials.
pub fn hq_generators(p: &Gamma4Params) -> Result<Vec<Binomial>> {
    let env = exponent_env(p);
    COMMON
        .iter()
        .chain(case_tail(HqCase::of(p)))
        .map(|src| Binomial::from_polynomial(&notation::parse(src, &env)?))
        .collect()
}

fn free_of_x1(m: &Monomial) -> bool {
    m.0[0] == 0
}

/// Images of the binomials modulo `x₁` as monomials in `x₂, x₃, x₄`.
///
/// A binomial with both terms free of `x₁` is accepted when one term is
/// already divisible by a surviving monomial of another binomial; the other
/// term then lies in the ideal and is kept.
pub fn set_x1_zero(h: &[Binomial]) -> Result<Vec<Monomial>> {
    let mut out = Vec::with_capacity(h.len());
    let mut pending = Vec::new();
    for b in h {
        match (free_of_x1(&b.plus), free_of_x1(&b.minus)) {
            (true, false) => out.push(b.plus),
            (false, true) => out.push(b.minus),
            (true, true) => pending.push(*b),
            (false, false) => {
                return Err(Error::Structure(format!("both terms of {b} contain x1")));
            }
        }
    }
    let single = out.clone();
    for b in pending {
        let reduced = |m: &Monomial| single.iter().any(|g| g.divides(m));
        match (reduced(&b.plus), reduced(&b.minus)) {
            (true, false) => out.push(b.minus),
            (false, true) => out.push(b.plus),
            (true, true) => {}
            (false, false) => {
                return Err(Error::Structure(format!(
                    "both terms of {b} are free of x1 and neither reduces to a monomial"
                )));
            }
        }
    }
    Ok(out)
}

/// Number of monomials in `x₂, x₃, x₄` divisible by no element of `gens`,
/// i.e. the dimension of the quotient by the monomial ideal.
pub fn standard_monomial_count(gens: &[Monomial]) -> Result<u64> {
    if let Some(g) = gens.iter().find(|g| !free_of_x1(g)) {
        return Err(Error::Domain(format!("generator {g} involves x1")));
    }
    let mut bounds = [0u32; NVARS];
    for (k, bound) in bounds.iter_mut().enumerate().skip(1) {
        *bound = gens
            .iter()
            .filter(|g| g.0.iter().enumerate().all(|(j, &e)| j == k || e == 0) && g.0[k] > 0)
            .map(|g| g.0[k])
            .min()
            .ok_or_else(|| {
                Error::Domain(format!("no pure power of x{} among generators; quotient is infinite", k + 1))
            })?;
    }
    let mut count = 0;
    for e2 in 0..bounds[1] {
        for e3 in 0..bounds[2] {
            for e4 in 0..bounds[3] {
                let m = Monomial([0, e2, e3, e4]);
                if !gens.iter().any(|g| g.divides(&m)) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
