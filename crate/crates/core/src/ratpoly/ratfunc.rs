use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, UPoly};

/// Quotient of two rational-coefficient polynomials in a single variable.
///
/// Kept in canonical form: numerator and denominator coprime, denominator
/// monic, zero represented as `0/1`. Structural equality is therefore
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UPoly,
    den: UPoly,
}

impl RationalFunction {
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().cloned().expect("nonzero denominator");
        let inv = Rational::one() / lead;
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        Self {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(UPoly::var())
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Self {
        let base = if k < 0 { self.recip() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn display_with(&self, var: &str) -> String {
        let n = self.num.display_with(var);
        if self.is_polynomial() {
            return n;
        }
        format!("({n})/({})", self.den.display_with(var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            let scale = Rational::one() / (self.den.coeff(0) * rhs.den.coeff(0));
            return RationalFunction::from_poly((&self.num * &rhs.num).scale(&scale));
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;

    /// Panics on division by zero.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::var()
    }

    #[test]
    fn cancels_common_factors() {
        // (1 - q^4)/(1 - q^2) = 1 + q^2
        let one = RationalFunction::one();
        let f = &(&one - &q().powi(4)) / &(&one - &q().powi(2));
        assert!(f.is_polynomial());
        assert_eq!(f, RationalFunction::from_poly(UPoly::from_i64s(&[1, 0, 1])));
    }

    #[test]
    fn evaluation_and_poles() {
        let one = RationalFunction::one();
        let f = &RationalFunction::constant(int(4)) / &(&one - &q().powi(2));
        assert_eq!(f.eval(&rat(1, 2)), Some(rat(16, 3)));
        assert_eq!(f.eval(&int(1)), None);
        assert_eq!(f.display_with("q"), "(-4)/(q^2 - 1)");
    }

    #[test]
    fn negative_powers() {
        let f = q().powi(-2);
        assert_eq!(&f * &q().powi(2), RationalFunction::one());
        assert_eq!(f.eval(&rat(1, 2)), Some(int(4)));
    }
}
