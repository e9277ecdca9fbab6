use rand::Rng;

use super::algebra::{adjoint, AlgebraElement, Monomial};
use super::scalar::{ComplexRational, Deformation, Scalar};
use crate::ratpoly::{rat, Rational};

/// Torsion perturbation `Φ = Σ C_{α,β,γ} a^α b^β (b*)^γ` together with its
/// selfadjointness verdict for the deformation it was built with.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionElement<S> {
    element: AlgebraElement<S>,
    hermitian: bool,
}

impl<S: Scalar> TorsionElement<S> {
    pub fn new<D: Deformation<Scalar = S>>(element: AlgebraElement<S>, q: &D) -> Self {
        let hermitian = is_selfadjoint(&element, q);
        Self { element, hermitian }
    }

    pub fn element(&self) -> &AlgebraElement<S> {
        &self.element
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }
}

/// First stored monomial violating `C_{α,β,γ} = q^{α(β+γ)} conj(C_{-α,γ,β})`.
pub fn selfadjoint_violation<D: Deformation>(
    phi: &AlgebraElement<D::Scalar>,
    q: &D,
) -> Option<Monomial> {
    phi.terms().find_map(|(m, c)| {
        let partner = Monomial::new(-m.alpha, m.gamma, m.beta);
        let exponent = i64::from(m.alpha) * (i64::from(m.beta) + i64::from(m.gamma));
        let expected = q.q_pow(exponent) * phi.coeff(&partner).conj();
        (expected != *c).then_some(*m)
    })
}

/// Selfadjointness by the coefficient relation, cross-checked against the
/// engine's `Φ* = Φ`.
pub fn is_selfadjoint<D: Deformation>(phi: &AlgebraElement<D::Scalar>, q: &D) -> bool {
    let by_relation = selfadjoint_violation(phi, q).is_none();
    let by_engine = adjoint(phi, q) == *phi;
    assert_eq!(
        by_relation, by_engine,
        "coefficient relation and engine adjoint disagree on selfadjointness"
    );
    by_relation
}

/// Bounds for randomly generated torsion elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomShape {
    pub max_alpha: i32,
    pub max_b: u32,
    pub max_terms: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        Self {
            max_alpha: 3,
            max_b: 2,
            max_terms: 3,
        }
    }
}

pub fn random_coefficient<R: Rng>(rng: &mut R) -> ComplexRational {
    let part = |rng: &mut R| -> Rational { rat(rng.random_range(-9..=9), rng.random_range(1..=6)) };
    let re = part(rng);
    let im = part(rng);
    ComplexRational::new(re, im)
}

pub fn random_element<R: Rng>(rng: &mut R, shape: RandomShape) -> AlgebraElement<ComplexRational> {
    let n = rng.random_range(1..=shape.max_terms);
    AlgebraElement::from_terms((0..n).map(|_| {
        let m = Monomial::new(
            rng.random_range(-shape.max_alpha..=shape.max_alpha),
            rng.random_range(0..=shape.max_b),
            rng.random_range(0..=shape.max_b),
        );
        (m, random_coefficient(rng))
    }))
}

/// `X + X*` for a random `X`: hermitian by construction, and adjoint
/// monomials stay inside the same bounds.
pub fn random_hermitian<R: Rng, D: Deformation<Scalar = ComplexRational>>(
    rng: &mut R,
    q: &D,
    shape: RandomShape,
) -> AlgebraElement<ComplexRational> {
    let x = random_element(rng, shape);
    x.add(&adjoint(&x, q))
}

#[cfg(test)]
mod tests {
    use super::super::algebra::Generator;
    use super::super::scalar::QParam;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn half() -> QParam {
        QParam::new(rat(1, 2)).unwrap()
    }

    fn re(r: Rational) -> ComplexRational {
        ComplexRational::from_rational(r)
    }

    #[test]
    fn examples() {
        let q = half();
        let a = AlgebraElement::<ComplexRational>::generator(Generator::A);
        let a_star = AlgebraElement::generator(Generator::AStar);
        assert!(is_selfadjoint(&a.add(&a_star), &q));
        assert!(!is_selfadjoint(&a, &q));
        assert_eq!(selfadjoint_violation(&a, &q), Some(Monomial::new(1, 0, 0)));

        let c = ComplexRational::new(rat(2, 3), rat(-1, 5));
        let phi = AlgebraElement::from_terms([
            (Monomial::new(0, 1, 0), c.clone()),
            (Monomial::new(0, 0, 1), c.conj()),
        ]);
        assert!(is_selfadjoint(&phi, &q));
        assert!(TorsionElement::new(phi, &q).is_hermitian());
    }

    #[test]
    fn q_weighted_partner() {
        // C_{1,1,0} = q · conj(C_{-1,0,1})
        let q = half();
        let phi = AlgebraElement::from_terms([
            (Monomial::new(1, 1, 0), re(rat(1, 2))),
            (Monomial::new(-1, 0, 1), re(rat(1, 1))),
        ]);
        assert!(is_selfadjoint(&phi, &q));
        let wrong = AlgebraElement::from_terms([
            (Monomial::new(1, 1, 0), re(rat(1, 1))),
            (Monomial::new(-1, 0, 1), re(rat(1, 1))),
        ]);
        assert!(!is_selfadjoint(&wrong, &q));
    }

    #[test]
    fn random_hermitian_is_hermitian() {
        let q = half();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let phi = random_hermitian(&mut rng, &q, RandomShape::default());
            assert!(is_selfadjoint(&phi, &q));
            assert!(phi
                .terms()
                .all(|(m, _)| m.alpha.abs() <= 3 && m.beta <= 2 && m.gamma <= 2));
        }
    }
}
