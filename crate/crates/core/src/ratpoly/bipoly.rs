use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{Rational, UPoly};

/// Polynomial in an outer variable whose coefficients are polynomials in `t`.
///
/// Used for identities in the level index `n` (or the shifted variable `u`)
/// that hold for every value of the perturbation parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<UPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Ascending coefficients in the outer variable.
    pub fn from_coeffs(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Embeds a polynomial in the outer variable with `t`-independent coefficients.
    pub fn from_outer(p: &UPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(UPoly::constant).collect())
    }

    pub fn constant(c: UPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `outer + shift(t)`: linear in the outer variable.
    pub fn linear(shift: UPoly) -> Self {
        Self::from_coeffs(vec![shift, UPoly::one()])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> UPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(UPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, outer: &Rational, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * outer + c.eval(t))
    }

    pub fn pow(&self, k: usize) -> BiPoly {
        (0..k).fold(BiPoly::constant(UPoly::one()), |acc, _| &acc * self)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn evaluation_matches_exact_arithmetic() {
        // (n + t)^2 at n = 1/2, t = 1/3 is (5/6)^2
        let p = BiPoly::linear(UPoly::var()).pow(2);
        assert_eq!(p.eval(&rat(1, 2), &rat(1, 3)), rat(25, 36));
    }

    #[test]
    fn square_of_shift() {
        // (n + t)^2 = n^2 + 2t n + t^2
        let p = BiPoly::linear(UPoly::var()).pow(2);
        let expected = BiPoly::from_coeffs(vec![
            UPoly::from_i64s(&[0, 0, 1]),
            UPoly::from_i64s(&[0, 2]),
            UPoly::one(),
        ]);
        assert_eq!(p, expected);
        assert!((&p - &expected).is_zero());
    }
}
