//! Graded free resolutions `0 → A^β₃ → A^β₂ → A^β₁ → A` of the `Γ₄`
//! semigroup rings, instantiated at concrete `(m, d)`, and a checker for the
//! complex, minimality and gradedness conditions.

use serde::Serialize;

use super::hq::{exponent_env, hq_generators, HqCase};
use super::notation::parse_row;
use super::poly::{PolyMatrix, Polynomial, WeightVector};
use crate::error::{Error, Result};
use crate::gamma4::Gamma4Params;

/// `(β₀, β₁, β₂, β₃)` for `q = a mod 6`.
pub fn betti_signature(q: i64) -> [usize; 4] {
    match q {
        0 => [1, 3, 3, 1],
        1 | 2 => [1, 5, 6, 2],
        3 => [1, 4, 5, 2],
        _ => [1, 4, 6, 3],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub phi1: PolyMatrix,
    pub phi2: PolyMatrix,
    pub phi3: PolyMatrix,
}

impl Resolution {
    /// `(1, cols φ₁, cols φ₂, cols φ₃)`.
    pub fn ranks(&self) -> [usize; 4] {
        [self.phi1.rows(), self.phi1.cols(), self.phi2.cols(), self.phi3.cols()]
    }
}

struct Transcription {
    phi1: &'static [&'static str],
    phi2: &'static [&'static [&'static str]],
    phi3: &'static [&'static [&'static str]],
}

const Q1_SMALL: Transcription = Transcription {
    phi1: &[
        "-x2^3 + x1^3x3",
        "-x3^2 + x1^2x4",
        "x1^7 - x2x4",
        "x1^4x2^2 - x3x4",
        "x1^2x2^2x3 - x4^2",
    ],
    phi2: &[
        &["x1^4", "x4", "0", "x1^2x3", "0", "x3^2"],
        &["0", "0", "x4", "x1^5", "x1^2x2^2", "x1^3x3 - x2^3"],
        &["-x3", "-x2^2", "0", "-x4", "0", "-x1^2x2^2"],
        &["x2", "x1^3", "-x3", "0", "-x4", "x1^5"],
        &["0", "0", "x1^2", "x2", "x3", "0"],
    ],
    phi3: &[
        &["x4", "x2^2x3"],
        &["-x1^4", "-x3^2"],
        &["0", "-x1^3x3 + x2^3"],
        &["-x3", "-x1^2x2^2"],
        &["x2", "x1^5"],
        &["x1^2", "x4"],
    ],
};

const Q1: Transcription = Transcription {
    phi1: &[
        "-x2^3 + x1^3x3",
        "-x3^2 + x1^2x4",
        "x1^{E+2} - x2x4^{m}",
        "x1^{E-1}x2^2 - x3x4^{m}",
        "x1^{E-6}x2^5 - x4^{m+1}",
    ],
    phi2: &[
        &[
            "x1^2x4 - x3^2",
            "x1^{E-1}",
            "x4^{m}",
            "x1^{E-4}x2^2",
            "x1^{E-3}x3 + x1^{E-6}x2^3",
            "x1^{E-6}x2^2x3",
        ],
        &["-x1^3x3 + x2^3", "0", "0", "x4^{m}", "x1^{E}", "x1^{E-3}x2^2"],
        &["0", "-x3", "-x2^2", "0", "-x4", "0"],
        &["0", "x2", "x1^3", "-x3", "0", "-x4"],
        &["0", "0", "0", "x1^2", "x2", "x3"],
    ],
    phi3: &[
        &["x1^{E-3}", "x4^{m}"],
        &["-x4", "-x2^2x3"],
        &["0", "-x1^2x4 + x3^2"],
        &["0", "x1^3x3 - x2^3"],
        &["x3", "x1^2x2^2"],
        &["-x2", "-x1^5"],
    ],
};

const Q2: Transcription = Transcription {
    phi1: &[
        "-x2^3 + x1^3x3",
        "-x3^2 + x1^2x4",
        "x1^{E+1}x2 - x3x4^{m}",
        "x1^{E+4} - x2^2x4^{m}",
        "x1^{E-4}x2^4 - x4^{m+1}",
    ],
    phi2: &[
        &[
            "x1^2x4 - x3^2",
            "x4^{m}",
            "x1^{E-2}x2",
            "x1^{E+1}",
            "x1^{E-4}x2x3",
            "x1^{E-1}x3 + x1^{E-4}x2^3",
        ],
        &["-x1^3x3 + x2^3", "0", "x4^{m}", "0", "x1^{E-1}x2", "x1^{E+2}"],
        &["0", "x1^3", "-x3", "x2^2", "-x4", "0"],
        &["0", "-x2", "0", "-x3", "0", "-x4"],
        &["0", "0", "x1^2", "0", "x3", "x2^2"],
    ],
    phi3: &[
        &["x1^{E-1}", "x4^{m}"],
        &["0", "-x1^2x4 + x3^2"],
        &["0", "x1^3x3 - x2^3"],
        &["-x4", "-x2x3"],
        &["-x2^2", "-x1^5"],
        &["x3", "x1^2x2"],
    ],
};

const Q3: Transcription = Transcription {
    phi1: &[
        "-x2^3 + x1^3x3",
        "-x3^2 + x1^2x4",
        "x1^{E+3} - x3x4^{m}",
        "x1^{E-2}x2^3 - x4^{m+1}",
    ],
    phi2: &[
        &["x1^2x4 - x3^2", "x1^{E}", "x3x4^{m}", "x1^{E-2}x3", "x1^{E-2}x2^3 - x4^{m+1}"],
        &["-x1^3x3 + x2^3", "x4^{m}", "x1^3x4^{m}", "x1^{E+1}", "0"],
        &["0", "-x3", "-x2^3", "-x4", "0"],
        &["0", "x1^2", "x1^5", "x3", "-x1^3x3 + x2^3"],
    ],
    phi3: &[
        &["x4^{m}", "x1^{E+1}"],
        &["-x2^3", "-x1^3x4"],
        &["x3", "x4"],
        &["0", "x1^3x3 - x2^3"],
        &["x1^2", "x3"],
    ],
};

const Q4: Transcription = Transcription {
    phi1: &[
        "-x2^3 + x1^3x3",
        "-x3^2 + x1^2x4",
        "x1^{E+5} - x2x3x4^{m}",
        "x1^{E}x2^2 - x4^{m+1}",
    ],
    phi2: &[
        &["x1^2x4 - x3^2", "x1^{E+2}", "x3x4^{m}", "x1^{E}x3", "x1^{E}x2^2 - x4^{m+1}", "0"],
        &["-x1^3x3 + x2^3", "x2x4^{m}", "x1^3x4^{m}", "x1^{E+3}", "0", "x1^{E}x2^2 - x4^{m+1}"],
        &["0", "-x3", "-x2^2", "-x4", "0", "0"],
        &["0", "x1^2x2", "x1^5", "x2x3", "-x1^3x3 + x2^3", "-x1^2x4 + x3^2"],
    ],
    phi3: &[
        &["x4^{m}", "0", "x1^{E}"],
        &["-x2^2", "0", "-x4"],
        &["x3", "x4", "0"],
        &["0", "-x2^2", "x3"],
        &["x1^2", "x3", "0"],
        &["0", "x1^3", "-x2"],
    ],
};

const Q5: Transcription = Transcription {
    phi1: &[
        "-x2^3 + x1^3x3",
        "-x3^2 + x1^2x4",
        "x1^{E+2}x2 - x4^{m+1}",
        "x1^{E+7} - x2^2x3x4^{m}",
    ],
    phi2: &[
        &["x1^2x4 - x3^2", "x3x4^{m}", "x1^{E+4}", "x1^{E+2}x2 - x4^{m+1}", "0", "x1^{E+2}x3"],
        &["-x1^3x3 + x2^3", "x1^3x4^{m}", "x2^2x4^{m}", "0", "x1^{E+2}x2 - x4^{m+1}", "x1^{E+5}"],
        &["0", "x1^5", "x1^2x2^2", "-x1^3x3 + x2^3", "-x1^2x4 + x3^2", "x2^2x3"],
        &["0", "-x2", "-x3", "0", "0", "-x4"],
    ],
    phi3: &[
        &["x4^{m}", "0", "x1^{E+2}"],
        &["x3", "x4", "0"],
        &["-x2", "0", "-x4"],
        &["x1^2", "x3", "0"],
        &["0", "x1^3", "-x2^2"],
        &["0", "-x2", "x3"],
    ],
};

fn matrix(rows: &[&[&str]], env: &[(&str, i64)]) -> Result<PolyMatrix> {
    PolyMatrix::new(rows.iter().map(|r| parse_row(r, env)).collect::<Result<_>>()?)
}

/// Koszul complex on `(g₁, g₂, g₃)`.
fn koszul(g: [Polynomial; 3]) -> Result<Resolution> {
    let z = Polynomial::zero;
    let [g1, g2, g3] = g;
    Ok(Resolution {
        phi1: PolyMatrix::new(vec![vec![g1.clone(), g2.clone(), g3.clone()]])?,
        phi2: PolyMatrix::new(vec![
            vec![-&g2, -&g3, z()],
            vec![g1.clone(), z(), -&g3],
            vec![z(), g1.clone(), g2.clone()],
        ])?,
        phi3: PolyMatrix::new(vec![vec![g3], vec![-&g2], vec![g1]])?,
    })
}

/// `(φ₁, φ₂, φ₃)` for the case of `p`. For `q = 0` this is the Koszul complex
/// of the three binomials of `H₀`.
pub fn resolution_matrices(p: &Gamma4Params) -> Result<Resolution> {
    let t = match HqCase::of(p) {
        HqCase::Q0 => {
            let h = hq_generators(p)?;
            return koszul([h[0].to_polynomial(), h[1].to_polynomial(), h[2].to_polynomial()]);
        }
        HqCase::Q1Small => &Q1_SMALL,
        HqCase::Q1 => &Q1,
        HqCase::Q2 => &Q2,
        HqCase::Q3 => &Q3,
        HqCase::Q4 => &Q4,
        HqCase::Q5 => &Q5,
    };
    let env = exponent_env(p);
    Ok(Resolution {
        phi1: PolyMatrix::new(vec![parse_row(t.phi1, &env)?])?,
        phi2: matrix(t.phi2, &env)?,
        phi3: matrix(t.phi3, &env)?,
    })
}

/// One failed check, located by matrix name and entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexFailure {
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    /// Degrees of the basis elements of `F₁, F₂, F₃`, when they exist.
    pub degrees: Vec<Vec<i64>>,
    pub failures: Vec<ComplexFailure>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `φ₁φ₂ = 0`, `φ₂φ₃ = 0`, that no entry has a nonzero constant term,
/// and that every column is homogeneous with a degree consistent with the
/// degrees of the target basis (`F₀` sits in degree 0).
pub fn verify_complex(r: &Resolution, w: &WeightVector) -> Result<ComplexReport> {
    let mut failures = Vec::new();
    for (name, product) in [
        ("phi1*phi2", r.phi1.mul(&r.phi2)?),
        ("phi2*phi3", r.phi2.mul(&r.phi3)?),
    ] {
        for (i, row) in product.entries().iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    failures.push(ComplexFailure {
                        matrix: name.into(),
                        row: i,
                        col: j,
                        reason: format!("product entry is {e}"),
                    });
                }
            }
        }
    }
    if r.phi1.rows() != 1 {
        return Err(Error::Structure(format!("phi1 has {} rows", r.phi1.rows())));
    }
    let mut row_degrees = vec![0i64];
    let mut degrees = Vec::new();
    for (name, m) in [("phi1", &r.phi1), ("phi2", &r.phi2), ("phi3", &r.phi3)] {
        let mut col_degrees = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            let mut degree: Option<i64> = None;
            for i in 0..m.rows() {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let mut fail = |reason: String| {
                    failures.push(ComplexFailure {
                        matrix: name.into(),
                        row: i,
                        col: j,
                        reason,
                    })
                };
                if e.constant_term() != 0 {
                    fail(format!("entry {e} has a nonzero constant term"));
                }
                let Some(row_degree) = row_degrees.get(i).copied() else {
                    fail("row degree unknown".into());
                    continue;
                };
                match e.homogeneous_degree(w) {
                    None => fail(format!("entry {e} is not homogeneous")),
                    Some(k) => match degree {
                        None => degree = Some(row_degree + k),
                        Some(dg) if dg != row_degree + k => fail(format!(
                            "entry {e} gives column degree {} but earlier entries give {dg}",
                            row_degree + k
                        )),
                        Some(_) => {}
                    },
                }
            }
            match degree {
                Some(dg) => col_degrees.push(dg),
                None => {
                    failures.push(ComplexFailure {
                        matrix: name.into(),
                        row: 0,
                        col: j,
                        reason: "column has no usable entry".into(),
                    });
                    col_degrees.push(i64::MIN);
                }
            }
        }
        degrees.push(col_degrees.clone());
        row_degrees = col_degrees;
    }
    Ok(ComplexReport { degrees, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: i64, d: i64) -> (Resolution, ComplexReport) {
        let p = Gamma4Params::new(a, d).unwrap();
        let r = resolution_matrices(&p).unwrap();
        let report = verify_complex(&r, &WeightVector(p.generators())).unwrap();
        (r, report)
    }

    #[test]
    fn small_q1_case() {
        let (r, report) = check(7, 1);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(r.ranks(), [1, 5, 6, 2]);
        assert_eq!(r.phi1.get(0, 2).to_string(), "x1^7 - x2x4");
        assert_eq!(report.degrees[0], vec![45, 48, 49, 58, 68]);
    }

    #[test]
    fn koszul_case() {
        let (r, report) = check(12, 1);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(r.ranks(), [1, 3, 3, 1]);
    }

    #[test]
    fn every_case() {
        for (a, d, sig) in [
            (9, 2, [1, 4, 5, 2]),
            (10, 1, [1, 4, 6, 3]),
            (11, 24, [1, 4, 6, 3]),
            (8, 3, [1, 5, 6, 2]),
            (13, 2, [1, 5, 6, 2]),
            (7, 2, [1, 5, 6, 2]),
        ] {
            let (r, report) = check(a, d);
            assert!(report.passed(), "({a}, {d}): {:?}", report.failures);
            assert_eq!(r.ranks(), sig);
            assert_eq!(betti_signature(a % 6), sig);
        }
    }

    #[test]
    fn detects_a_bad_entry() {
        let p = Gamma4Params::new(9, 2).unwrap();
        let mut r = resolution_matrices(&p).unwrap();
        let mut rows = r.phi2.entries().to_vec();
        rows[2][1] = -&rows[2][1] + Polynomial::monomial(1, Default::default());
        r.phi2 = PolyMatrix::new(rows).unwrap();
        let report = verify_complex(&r, &WeightVector(p.generators())).unwrap();
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| f.matrix == "phi2" && f.row == 2 && f.col == 1));
        assert!(report.failures.iter().any(|f| f.matrix == "phi1*phi2"));
    }
}
