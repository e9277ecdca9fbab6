//! JSON interchange for torsion elements.
//!
//! A torsion file is an array of records
//! `{"alpha": 1, "beta": 0, "gamma": 0, "re": "1/2", "im": "0"}`.
//! Monomials must be distinct.

use serde::{Deserialize, Serialize};

use super::algebra::{AlgebraElement, Monomial};
use super::scalar::ComplexRational;
use crate::error::{Error, Result};
use crate::ratpoly::{parse_rational, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsionRecord {
    pub alpha: i32,
    pub beta: u32,
    pub gamma: u32,
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

fn zero_string() -> String {
    "0".to_string()
}

pub fn parse_torsion_json(text: &str) -> Result<AlgebraElement<ComplexRational>> {
    let records: Vec<TorsionRecord> =
        serde_json::from_str(text).map_err(|e| Error::MalformedTorsion(e.to_string()))?;
    torsion_from_records(&records)
}

pub fn torsion_from_records(records: &[TorsionRecord]) -> Result<AlgebraElement<ComplexRational>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut terms = Vec::with_capacity(records.len());
    for r in records {
        let m = Monomial::new(r.alpha, r.beta, r.gamma);
        if !seen.insert(m) {
            return Err(Error::DuplicateMonomial {
                alpha: r.alpha,
                beta: r.beta,
                gamma: r.gamma,
            });
        }
        let parse = |s: &str, part: &str| {
            parse_rational(s).map_err(|_| {
                Error::MalformedTorsion(format!("bad {part} coefficient {s:?} at {m}"))
            })
        };
        terms.push((
            m,
            ComplexRational::new(parse(&r.re, "real")?, parse(&r.im, "imaginary")?),
        ));
    }
    Ok(AlgebraElement::from_terms(terms))
}

pub fn torsion_to_records(phi: &AlgebraElement<ComplexRational>) -> Vec<TorsionRecord> {
    phi.terms()
        .map(|(m, c)| TorsionRecord {
            alpha: m.alpha,
            beta: m.beta,
            gamma: m.gamma,
            re: c.re.to_string(),
            im: c.im.to_string(),
        })
        .collect()
}

/// Lifts a torsion element to rational-function coefficients in `q`.
/// Symbolic `q` is real, so imaginary parts are rejected.
pub fn to_symbolic(
    phi: &AlgebraElement<ComplexRational>,
) -> Result<AlgebraElement<RationalFunction>> {
    if let Some((m, _)) = phi.terms().find(|(_, c)| !num_traits::Zero::is_zero(&c.im)) {
        return Err(Error::param(
            "torsion",
            format!("symbolic q needs real coefficients (imaginary part at {m})"),
        ));
    }
    Ok(phi.map_coefficients(|c| RationalFunction::constant(c.re.clone())))
}
