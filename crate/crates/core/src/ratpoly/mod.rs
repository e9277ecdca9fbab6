//! Exact rational arithmetic and polynomial algebra.
//!
//! Rationals are `num_rational::BigRational`, always in lowest terms with a
//! positive denominator. On top of that this module provides univariate
//! polynomials ([`UPoly`]), polynomials in an outer variable with polynomial
//! coefficients in `t` ([`BiPoly`]), rational functions ([`RationalFunction`])
//! and the shifted-basis expansion of `(n+1)(n+2)⋯(n+d-1)`.

mod bipoly;
mod lemma;
mod ratfunc;
mod upoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use bipoly::BiPoly;
pub use lemma::{
    lemma_reference_coefficients, product_ascending, rebase_shifted, reconstruct_from_shifted,
    verify_lemma, LemmaReport,
};
pub use ratfunc::RationalFunction;
pub use upoly::UPoly;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, an integer, or a decimal literal (optionally with exponent)
/// into an exact rational. Decimal input is converted exactly: `0.1` is `1/10`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::param("rational", format!("cannot parse {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::param("rational", "zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let mut value = Rational::from_integer(digits) * ten.pow(scale);
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    // Very large numerator/denominator: scale both down before dividing.
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

pub(crate) fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
