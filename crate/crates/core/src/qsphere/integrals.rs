//! Noncommutative integral rules and spectral-action coefficients for
//! `D + Φ` over SU_q(2).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::{
    diagonal_part, from_diagonal, normal_order_product, rho_automorphism, AlgebraElement,
};
use super::binomial::a_power_expansion;
use super::scalar::{Deformation, Scalar};
use super::torsion::selfadjoint_violation;
use crate::error::{Error, Result};

/// `∫ (b b*)^j D⁻² = 4/(1 - q^{2j})` for `j ≥ 1`, and `0` for `j = 0`.
pub fn integral_bbstar_d2<D: Deformation>(j: u32, q: &D) -> D::Scalar {
    if j == 0 {
        return D::Scalar::zero();
    }
    let four = D::Scalar::one() + D::Scalar::one() + D::Scalar::one() + D::Scalar::one();
    four / (D::Scalar::one() - q.q_pow(2 * i64::from(j)))
}

/// `(∫|D_Φ|⁻³, ∫|D_Φ|⁻², ∫|D_Φ|⁻¹)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionCoefficients<S> {
    pub inverse_cubed: S,
    pub inverse_squared: S,
    pub inverse_first: S,
}

/// `(2, 0, -1/2 + Σ_α |C_{α,0,0}|²)`.
pub fn action_leading<S: Scalar>(phi: &AlgebraElement<S>) -> ActionCoefficients<S> {
    let two = S::one() + S::one();
    let half = S::one() / two.clone();
    let quadratic = phi
        .terms()
        .filter(|(m, _)| m.beta == 0 && m.gamma == 0)
        .fold(S::zero(), |acc, (_, c)| acc + c.norm_sqr());
    ActionCoefficients {
        inverse_cubed: two,
        inverse_squared: S::zero(),
        inverse_first: quadratic - half,
    }
}

fn require_hermitian<D: Deformation>(phi: &AlgebraElement<D::Scalar>, q: &D) -> Result<()> {
    match selfadjoint_violation(phi, q) {
        None => Ok(()),
        Some(m) => Err(Error::NotSelfAdjoint {
            alpha: m.alpha,
            beta: m.beta,
            gamma: m.gamma,
        }),
    }
}

/// `ζ_{D+Φ}(0) - ζ_D(0)` from the coefficient triple sum
///
/// ```text
/// -1/2 Σ_α Σ_l Σ_{m,n ≤ l} conj(C_{α,l-n,m}) C_{α,l-m,n} Σ_k e_k(α) · 4/(1 - q^{2(k+l)})
/// ```
///
/// where `e_k(α)` are the coefficients of `a^{-α} a^{α}` in powers of `b b*`.
pub fn zeta_invariant_closed<D: Deformation>(
    phi: &AlgebraElement<D::Scalar>,
    q: &D,
) -> Result<D::Scalar> {
    require_hermitian(phi, q)?;
    let mut expansions: BTreeMap<i32, BTreeMap<u32, D::Scalar>> = BTreeMap::new();
    let mut total = D::Scalar::zero();
    for (m1, c1) in phi.terms() {
        for (m2, c2) in phi.terms().filter(|(m2, _)| m2.alpha == m1.alpha) {
            // m1 = (α, l-n, m), m2 = (α, l-m, n)
            let l = m1.beta + m2.gamma;
            if m2.beta + m1.gamma != l {
                continue;
            }
            let e = expansions
                .entry(m1.alpha)
                .or_insert_with(|| a_power_expansion(m1.alpha, q));
            let inner = e.iter().fold(D::Scalar::zero(), |acc, (k, ek)| {
                acc + ek.clone() * integral_bbstar_d2(k + l, q)
            });
            total = total + c1.conj() * c2.clone() * inner;
        }
    }
    Ok(-(total / (D::Scalar::one() + D::Scalar::one())))
}

/// The four scale-invariant contributions
/// `∫ΦD⁻¹ - ½∫Φ²D⁻² + ½∫Φ[D,Φ]D⁻³ + ⅓∫Φ³D⁻³`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleInvariantTerms<S> {
    /// `∫ΦD⁻¹`: zero, the diagonal of `Φ` is ρ-invariant and `D⁻¹` is odd.
    pub linear: S,
    /// `-½∫Φ²D⁻²`.
    pub quadratic: S,
    /// `½∫Φ[D,Φ]D⁻³ = ¼∫δ(Φ²)|D|⁻³`: zero, the diagonal of `Φ²` is δ-closed.
    pub commutator: S,
    /// `⅓∫Φ³D⁻³`: zero by the same ρ-parity as the linear term.
    pub cubic: S,
    pub total: S,
}

/// `true` when the diagonal part of `x` is fixed by ρ, so integrals against
/// odd powers of `D⁻¹` vanish.
pub fn diagonal_is_rho_invariant<D: Deformation>(x: &AlgebraElement<D::Scalar>, q: &D) -> bool {
    let diag = from_diagonal(&diagonal_part(x));
    rho_automorphism(&diag, q) == diag
}

pub fn scale_invariant_terms<D: Deformation>(
    phi: &AlgebraElement<D::Scalar>,
    q: &D,
) -> Result<ScaleInvariantTerms<D::Scalar>> {
    require_hermitian(phi, q)?;
    let phi2 = normal_order_product(phi, phi, q);
    let integral = diagonal_part(&phi2)
        .into_iter()
        .fold(D::Scalar::zero(), |acc, (l, c)| {
            acc + c * integral_bbstar_d2(l, q)
        });
    let quadratic = -(integral / (D::Scalar::one() + D::Scalar::one()));
    Ok(ScaleInvariantTerms {
        linear: D::Scalar::zero(),
        commutator: D::Scalar::zero(),
        cubic: D::Scalar::zero(),
        total: quadratic.clone(),
        quadratic,
    })
}

/// `ζ_{D+Φ}(0) - ζ_D(0) = -½ Σ_l diag(Φ²)_l · ∫(b b*)^l D⁻²` with `Φ²`
/// normal-ordered by the engine.
pub fn zeta_invariant_engine<D: Deformation>(
    phi: &AlgebraElement<D::Scalar>,
    q: &D,
) -> Result<D::Scalar> {
    Ok(scale_invariant_terms(phi, q)?.total)
}

#[cfg(test)]
mod tests {
    use super::super::algebra::{power, Generator, Monomial};
    use super::super::scalar::{ComplexRational, QParam, SymbolicQ};
    use super::super::torsion::{random_hermitian, RandomShape};
    use super::*;
    use crate::ratpoly::{rat, Rational, RationalFunction, UPoly};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q_of(r: Rational) -> QParam {
        QParam::new(r).unwrap()
    }

    fn re(r: Rational) -> ComplexRational {
        ComplexRational::from_rational(r)
    }

    fn a_plus_adjoint<S: Scalar>() -> AlgebraElement<S> {
        AlgebraElement::generator(Generator::A).add(&AlgebraElement::generator(Generator::AStar))
    }

    #[test]
    fn bbstar_integrals() {
        let q = q_of(rat(1, 2));
        assert_eq!(integral_bbstar_d2(1, &q), re(rat(16, 3)));
        assert_eq!(integral_bbstar_d2(0, &q), re(rat(0, 1)));
        assert_eq!(integral_bbstar_d2(2, &q), re(rat(64, 15)));
    }

    #[test]
    fn leading_coefficients() {
        let zero = action_leading(&AlgebraElement::<ComplexRational>::zero());
        assert_eq!(zero.inverse_cubed, re(rat(2, 1)));
        assert_eq!(zero.inverse_squared, re(rat(0, 1)));
        assert_eq!(zero.inverse_first, re(rat(-1, 2)));
        assert_eq!(
            action_leading(&a_plus_adjoint::<ComplexRational>()).inverse_first,
            re(rat(3, 2))
        );
        let b_phi = AlgebraElement::<ComplexRational>::generator(Generator::B)
            .add(&AlgebraElement::generator(Generator::BStar));
        assert_eq!(action_leading(&b_phi).inverse_first, re(rat(-1, 2)));
    }

    #[test]
    fn zeta_a_plus_adjoint_numeric() {
        let q = q_of(rat(1, 2));
        let phi = a_plus_adjoint();
        assert_eq!(zeta_invariant_closed(&phi, &q).unwrap(), re(rat(10, 3)));
        assert_eq!(zeta_invariant_engine(&phi, &q).unwrap(), re(rat(10, 3)));
    }

    #[test]
    fn zeta_a_plus_adjoint_symbolic() {
        let phi = a_plus_adjoint::<RationalFunction>();
        // 2(1+q²)/(1-q²)
        let expected =
            RationalFunction::new(UPoly::from_i64s(&[2, 0, 2]), UPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(zeta_invariant_closed(&phi, &SymbolicQ).unwrap(), expected);
        assert_eq!(zeta_invariant_engine(&phi, &SymbolicQ).unwrap(), expected);
    }

    #[test]
    fn zeta_zero_and_diagonal_phi() {
        let q = q_of(rat(1, 3));
        assert_eq!(
            zeta_invariant_closed(&AlgebraElement::zero(), &q).unwrap(),
            re(rat(0, 1))
        );
        // Φ = c b b*: diag(Φ²) = c² (b b*)², ζ = -c²/2 · 4/(1-q⁴)
        let c = rat(3, 5);
        let phi = AlgebraElement::term(Monomial::diagonal(1), re(c.clone()));
        let q4 = rat(1, 81);
        let expected = re(-(&c * &c) / rat(2, 1) * rat(4, 1) / (rat(1, 1) - q4));
        assert_eq!(zeta_invariant_engine(&phi, &q).unwrap(), expected);
        assert_eq!(zeta_invariant_closed(&phi, &q).unwrap(), expected);
    }

    #[test]
    fn rejects_non_hermitian() {
        let q = q_of(rat(1, 2));
        let phi = AlgebraElement::<ComplexRational>::generator(Generator::A);
        assert_eq!(
            zeta_invariant_closed(&phi, &q),
            Err(Error::NotSelfAdjoint {
                alpha: 1,
                beta: 0,
                gamma: 0
            })
        );
        assert!(zeta_invariant_engine(&phi, &q).is_err());
    }

    #[test]
    fn closed_and_engine_agree_on_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for q in [rat(1, 3), rat(1, 2), rat(2, 3)] {
            let q = q_of(q);
            for _ in 0..10 {
                let phi = random_hermitian(&mut rng, &q, RandomShape::default());
                let closed = zeta_invariant_closed(&phi, &q).unwrap();
                let engine = zeta_invariant_engine(&phi, &q).unwrap();
                assert_eq!(closed, engine);
                assert!(closed.is_real());
            }
        }
    }

    #[test]
    fn rho_parity_of_diagonals() {
        let q = q_of(rat(1, 2));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let phi = random_hermitian(&mut rng, &q, RandomShape::default());
            assert!(diagonal_is_rho_invariant(&phi, &q));
            assert!(diagonal_is_rho_invariant(&power(&phi, 3, &q), &q));
            let terms = scale_invariant_terms(&phi, &q).unwrap();
            assert!(terms.linear.is_zero() && terms.cubic.is_zero() && terms.commutator.is_zero());
        }
    }

    #[test]
    fn square_of_hermitian_is_hermitian() {
        let q = q_of(rat(2, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let phi = random_hermitian(&mut rng, &q, RandomShape::default());
            let sq = normal_order_product(&phi, &phi, &q);
            assert_eq!(super::super::algebra::adjoint(&sq, &q), sq);
        }
    }
}
