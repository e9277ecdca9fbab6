//! Expansion of the sphere multiplicity polynomial around the shifted
//! eigenvalue `u = n + d/2 + t`.

use num_traits::{One, Zero};

use super::{int, rat, BiPoly, Rational, UPoly};
use crate::dimension::OddDimension;

/// Number of leading coefficients with a closed form.
pub const CLOSED_FORM_TERMS: usize = 5;

/// `(n+1)(n+2)⋯(n+d-1)`, monic of degree `d - 1`.
pub fn product_ascending(d: OddDimension) -> UPoly {
    (1..d.get() as i64).fold(UPoly::one(), |acc, j| &acc * &UPoly::from_i64s(&[j, 1]))
}

/// Rewrites `p(n)` in powers of `u = n + d/2 + t`.
///
/// Returns `c_0(t), c_1(t), …` with `p(n) = Σ_j c_j(t) u^(deg p - j)`, leading
/// power first. The zero polynomial yields an empty list.
pub fn rebase_shifted(p: &UPoly, d: OddDimension) -> Vec<UPoly> {
    // n = u - d/2 - t
    let shift = UPoly::from_coeffs(vec![-rat(d.get() as i64, 2), -Rational::one()]);
    let n_of_u = BiPoly::linear(shift);
    let in_u = p.coeffs().iter().rev().fold(BiPoly::zero(), |acc, c| {
        &(&acc * &n_of_u) + &BiPoly::constant(UPoly::constant(c.clone()))
    });
    in_u.coeffs().iter().rev().cloned().collect()
}

/// Inverse of [`rebase_shifted`]: substitutes `u = n + d/2 + t` back and
/// returns the result as a polynomial in `n` with `t`-polynomial coefficients.
pub fn reconstruct_from_shifted(coeffs: &[UPoly], d: OddDimension) -> BiPoly {
    let shift = UPoly::from_coeffs(vec![rat(d.get() as i64, 2), Rational::one()]);
    let u_of_n = BiPoly::linear(shift);
    coeffs.iter().fold(BiPoly::zero(), |acc, c| {
        &(&acc * &u_of_n) + &BiPoly::constant(c.clone())
    })
}

/// Closed forms for the coefficients of `u^(d-1)`, …, `u^(d-5)`.
pub fn lemma_reference_coefficients(d: OddDimension) -> [UPoly; CLOSED_FORM_TERMS] {
    let dd = d.get() as i64;
    let dm = |k: i64| int(dd - k);
    let dr = int(dd);
    // falling products (d-1)(d-2)…(d-k)
    let f2 = dm(1) * dm(2);
    let f3 = &f2 * dm(3);
    let f4 = &f3 * dm(4);

    let c0 = UPoly::one();
    let c1 = UPoly::monomial(-dm(1), 1);
    let c2 = UPoly::from_coeffs(vec![
        -(&dr * &f2) * rat(1, 24),
        Rational::zero(),
        &f2 * rat(1, 2),
    ]);
    let c3 = UPoly::from_coeffs(vec![
        Rational::zero(),
        &dr * &f3 * rat(1, 24),
        Rational::zero(),
        -(&f3 * rat(1, 6)),
    ]);
    let c4 = UPoly::from_coeffs(vec![
        &dr * &f4 * int(5 * dd + 2) * rat(1, 5760),
        Rational::zero(),
        -(&dr * &f4 * rat(1, 48)),
        Rational::zero(),
        &f4 * rat(1, 24),
    ]);
    [c0, c1, c2, c3, c4]
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub dimension: OddDimension,
    /// Leading five rebased coefficients, zero-padded past the degree.
    pub computed: Vec<UPoly>,
    pub reference: Vec<UPoly>,
    /// Index (0 = leading power) of the first disagreeing coefficient.
    pub first_mismatch: Option<usize>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the closed forms against the exact rebased expansion.
///
/// For `d = 3` the product has only three coefficients; the remaining closed
/// forms must then vanish identically.
pub fn verify_lemma(d: OddDimension) -> LemmaReport {
    let mut computed = rebase_shifted(&product_ascending(d), d);
    computed.resize(CLOSED_FORM_TERMS.max(computed.len()), UPoly::zero());
    computed.truncate(CLOSED_FORM_TERMS);
    let reference = lemma_reference_coefficients(d).to_vec();
    let first_mismatch = computed.iter().zip(&reference).position(|(a, b)| a != b);
    LemmaReport {
        dimension: d,
        computed,
        reference,
        first_mismatch,
    }
}
