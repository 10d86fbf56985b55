//! Defining ideals of the `Γ₄` semigroup rings `k[x₁, x₂, x₃, x₄] → k[t^S]`
//! and their free resolutions.

mod hq;
mod notation;
mod poly;
mod resolution;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub use hq::{hq_generators, set_x1_zero, standard_monomial_count, HqCase};
pub use poly::{
    is_homogeneous, weighted_degree, Binomial, Monomial, PolyMatrix, Polynomial, WeightVector, NVARS,
};
pub use resolution::{
    betti_signature, resolution_matrices, verify_complex, ComplexFailure, ComplexReport, Resolution,
};

use crate::error::Result;
use crate::gamma4::Gamma4Params;
use crate::report::{fmt_list, Discrepancy};

pub fn weight_vector(p: &Gamma4Params) -> WeightVector {
    WeightVector(p.generators())
}

/// Outcome of checking `H_q` against the semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub generators: Vec<Binomial>,
    pub homogeneous: bool,
    pub standard_monomials: u64,
    /// Weighted degree of each generator, with multiplicity.
    pub degrees: BTreeMap<i64, usize>,
    pub oracle_degrees: BTreeMap<i64, usize>,
    pub beta1: usize,
    /// Every entry of `φ₁` is `±` an element of `H_q`, and vice versa.
    pub phi1_matches: bool,
    pub discrepancies: Vec<Discrepancy>,
}

impl IdealReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn fmt_degrees(m: &BTreeMap<i64, usize>) -> String {
    fmt_list(m.iter().map(|(k, v)| format!("{k}:{v}")), '{', '}')
}

/// Checks homogeneity of `H_q`, that it generates (quotient by `x₁` has
/// dimension `a`), that its degrees match the Betti degrees of the semigroup
/// (so it is minimal), and that its size is `β₁`.
pub fn cross_check_betti(p: &Gamma4Params) -> Result<IdealReport> {
    let params = p.params();
    let w = weight_vector(p);
    let h = hq_generators(p)?;
    let mut discrepancies = Vec::new();

    let inhomogeneous: Vec<String> = h.iter().filter(|b| !b.is_homogeneous(&w)).map(ToString::to_string).collect();
    if !inhomogeneous.is_empty() {
        discrepancies.push(Discrepancy::failure(
            &params,
            "hq_homogeneous",
            inhomogeneous.join(", "),
            "every binomial weighted-homogeneous",
        ));
    }

    let standard_monomials = standard_monomial_count(&set_x1_zero(&h)?)?;
    if standard_monomials != p.a() as u64 {
        discrepancies.push(Discrepancy::failure(&params, "hq_generates", standard_monomials, p.a()));
    }

    let mut degrees = BTreeMap::new();
    for b in &h {
        *degrees.entry(w.degree(&b.plus)).or_insert(0) += 1;
    }
    let oracle_degrees = p.semigroup().betti_degrees(None);
    if degrees != oracle_degrees {
        discrepancies.push(Discrepancy::failure(
            &params,
            "hq_betti_degrees",
            fmt_degrees(&degrees),
            fmt_degrees(&oracle_degrees),
        ));
    }

    let beta1 = betti_signature(p.q())[1];
    if h.len() != beta1 {
        discrepancies.push(Discrepancy::failure(&params, "hq_size", h.len(), beta1));
    }

    let phi1 = resolution_matrices(p)?.phi1;
    let as_set = |polys: Vec<Polynomial>| -> BTreeSet<String> {
        polys
            .into_iter()
            .map(|f| {
                // normalize sign: leading (largest) term positive
                let lead = f.terms().last().map_or(1, |(_, &c)| c);
                if lead < 0 { -f } else { f }.to_string()
            })
            .collect()
    };
    let phi1_matches =
        as_set(phi1.entries()[0].clone()) == as_set(h.iter().map(Binomial::to_polynomial).collect());
    if !phi1_matches {
        discrepancies.push(Discrepancy::failure(
            &params,
            "phi1_is_hq",
            fmt_list(phi1.entries()[0].iter(), '[', ']'),
            fmt_list(h.iter(), '[', ']'),
        ));
    }

    Ok(IdealReport {
        generators: h,
        homogeneous: inhomogeneous.is_empty(),
        standard_monomials,
        degrees,
        oracle_degrees,
        beta1,
        phi1_matches,
        discrepancies,
    })
}
