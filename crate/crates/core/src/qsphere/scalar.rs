use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{Rational, RationalFunction};

/// Complex number with exact rational parts.
pub type ComplexRational = Complex<Rational>;

/// Exact coefficient field for algebra elements.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn conj(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_real(&self) -> bool;
    /// `|c|² = c·conj(c)`.
    fn norm_sqr(&self) -> Self {
        self.clone() * self.conj()
    }
    fn render(&self) -> String;
}

impl Scalar for ComplexRational {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_rational(r: Rational) -> Self {
        Complex::new(r, Rational::zero())
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn render(&self) -> String {
        render_complex(self)
    }
}

pub fn render_complex(c: &ComplexRational) -> String {
    if c.im.is_zero() {
        return c.re.to_string();
    }
    let im = if c.im.is_one() {
        "i".to_string()
    } else if (-c.im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", c.im)
    };
    if c.re.is_zero() {
        return im;
    }
    match im.strip_prefix('-') {
        Some(mag) => format!("{} - {mag}", c.re),
        None => format!("{} + {im}", c.re),
    }
}

/// Symbolic `q` is real, so conjugation is the identity.
impl Scalar for RationalFunction {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        RationalFunction::constant(r)
    }

    fn is_real(&self) -> bool {
        true
    }

    fn render(&self) -> String {
        self.display_with("q")
    }
}

/// Source of the powers `q^k` in a chosen coefficient field.
pub trait Deformation: Sync {
    type Scalar: Scalar;

    fn q_pow(&self, k: i64) -> Self::Scalar;

    fn describe(&self) -> String;
}

/// Numeric deformation parameter, an exact rational in `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QParam {
    q: Rational,
}

impl QParam {
    pub fn new(q: Rational) -> Result<Self> {
        if q <= Rational::zero() || q >= Rational::one() {
            return Err(Error::param("q", format!("must lie in (0, 1), got {q}")));
        }
        Ok(Self { q })
    }

    pub fn value(&self) -> &Rational {
        &self.q
    }
}

impl Deformation for QParam {
    type Scalar = ComplexRational;

    fn q_pow(&self, k: i64) -> ComplexRational {
        let k = i32::try_from(k).expect("q exponent out of range");
        ComplexRational::from_rational(self.q.pow(k))
    }

    fn describe(&self) -> String {
        self.q.to_string()
    }
}

/// `q` kept as an indeterminate; coefficients are rational functions of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SymbolicQ;

impl Deformation for SymbolicQ {
    type Scalar = RationalFunction;

    fn q_pow(&self, k: i64) -> RationalFunction {
        RationalFunction::var().powi(k)
    }

    fn describe(&self) -> String {
        "q".to_string()
    }
}
