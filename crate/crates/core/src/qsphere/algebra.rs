//! Normal-ordered elements of the SU_q(2) coordinate algebra.
//!
//! Relations: `b b* = b* b`, `b a = q a b`, `b* a = q a b*`, `a* a = 1 - b b*`,
//! `a a* = 1 - q² b b*`, and their adjoints `a* b = q b a*`, `a* b* = q b* a*`.
//! Normal form is `a^α b^β (b*)^γ` with `α ∈ ℤ` (negative `α` meaning
//! `(a*)^|α|`). The monomials of this form are a basis, so products are
//! computed by appending one generator at a time.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{Deformation, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    AStar,
    B,
    BStar,
}

impl Generator {
    pub fn adjoint(self) -> Self {
        match self {
            Generator::A => Generator::AStar,
            Generator::AStar => Generator::A,
            Generator::B => Generator::BStar,
            Generator::BStar => Generator::B,
        }
    }

    /// Image under the automorphism fixing `a, a*` and swapping `b ↔ b*`.
    pub fn rho(self) -> Self {
        match self {
            Generator::B => Generator::BStar,
            Generator::BStar => Generator::B,
            g => g,
        }
    }
}

/// `a^alpha b^beta (b*)^gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub alpha: i32,
    pub beta: u32,
    pub gamma: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial::new(0, 0, 0);

    pub const fn new(alpha: i32, beta: u32, gamma: u32) -> Self {
        Self { alpha, beta, gamma }
    }

    /// `(b b*)^l`.
    pub const fn diagonal(l: u32) -> Self {
        Self::new(0, l, l)
    }

    pub fn is_diagonal(&self) -> bool {
        self.alpha == 0 && self.beta == self.gamma
    }

    /// The generator word whose product is this monomial.
    pub fn word(&self) -> impl Iterator<Item = Generator> {
        let a = if self.alpha >= 0 {
            Generator::A
        } else {
            Generator::AStar
        };
        std::iter::repeat_n(a, self.alpha.unsigned_abs() as usize)
            .chain(std::iter::repeat_n(Generator::B, self.beta as usize))
            .chain(std::iter::repeat_n(Generator::BStar, self.gamma as usize))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.alpha {
            0 => {}
            1 => parts.push("a".to_string()),
            -1 => parts.push("a*".to_string()),
            k if k > 0 => parts.push(format!("a^{k}")),
            k => parts.push(format!("a*^{}", -k)),
        }
        for (name, k) in [("b", self.beta), ("b*", self.gamma)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                k => parts.push(format!("{name}^{k}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Finite linear combination of normal-ordered monomials. Zero coefficients
/// are never stored, so equality is mathematical equality.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for AlgebraElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(Monomial::ONE, S::one())
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, S::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(match g {
            Generator::A => Monomial::new(1, 0, 0),
            Generator::AStar => Monomial::new(-1, 0, 0),
            Generator::B => Monomial::new(0, 1, 0),
            Generator::BStar => Monomial::new(0, 0, 1),
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut x = Self::zero();
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    /// Adds `c·m`, removing the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x.clone() * c.clone())))
    }

    pub fn map_coefficients<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AlgebraElement<T> {
        AlgebraElement::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn render(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("({})·{m}", c.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `x · g` in normal form.
pub fn mul_generator<D: Deformation>(
    x: &AlgebraElement<D::Scalar>,
    g: Generator,
    q: &D,
) -> AlgebraElement<D::Scalar> {
    let mut out = AlgebraElement::zero();
    for (m, c) in x.terms() {
        let Monomial { alpha, beta, gamma } = *m;
        let charge = i64::from(beta) + i64::from(gamma);
        match g {
            Generator::B => out.add_term(Monomial::new(alpha, beta + 1, gamma), c.clone()),
            Generator::BStar => out.add_term(Monomial::new(alpha, beta, gamma + 1), c.clone()),
            Generator::A => {
                // b^β b*^γ a = q^(β+γ) a b^β b*^γ; a*^k a = a*^(k-1)(1 - b b*)
                let c = c.clone() * q.q_pow(charge);
                out.add_term(Monomial::new(alpha + 1, beta, gamma), c.clone());
                if alpha < 0 {
                    out.add_term(Monomial::new(alpha + 1, beta + 1, gamma + 1), -c);
                }
            }
            Generator::AStar => {
                // b^β b*^γ a* = q^-(β+γ) a* b^β b*^γ; a^k a* = a^(k-1)(1 - q² b b*)
                let c = c.clone() * q.q_pow(-charge);
                out.add_term(Monomial::new(alpha - 1, beta, gamma), c.clone());
                if alpha > 0 {
                    out.add_term(
                        Monomial::new(alpha - 1, beta + 1, gamma + 1),
                        -(c * q.q_pow(2)),
                    );
                }
            }
        }
    }
    out
}

/// `x · g₁ · g₂ ⋯`.
pub fn mul_word<D: Deformation>(
    x: &AlgebraElement<D::Scalar>,
    word: impl IntoIterator<Item = Generator>,
    q: &D,
) -> AlgebraElement<D::Scalar> {
    word.into_iter()
        .fold(x.clone(), |acc, g| mul_generator(&acc, g, q))
}

/// Normal form of the product `x · y`.
pub fn normal_order_product<D: Deformation>(
    x: &AlgebraElement<D::Scalar>,
    y: &AlgebraElement<D::Scalar>,
    q: &D,
) -> AlgebraElement<D::Scalar> {
    let mut out = AlgebraElement::zero();
    for (m, c) in y.terms() {
        let xm = mul_word(x, m.word(), q);
        out = out.add(&xm.scale(c));
    }
    out
}

/// `x^k` by repeated normal-ordered multiplication.
pub fn power<D: Deformation>(
    x: &AlgebraElement<D::Scalar>,
    k: u32,
    q: &D,
) -> AlgebraElement<D::Scalar> {
    (0..k).fold(AlgebraElement::one(), |acc, _| {
        normal_order_product(&acc, x, q)
    })
}

/// `x*`: each monomial's generator word is reversed and starred, then
/// re-normal-ordered; coefficients are conjugated.
pub fn adjoint<D: Deformation>(x: &AlgebraElement<D::Scalar>, q: &D) -> AlgebraElement<D::Scalar> {
    let mut out = AlgebraElement::zero();
    for (m, c) in x.terms() {
        let word: Vec<Generator> = m.word().collect();
        let image = mul_word(
            &AlgebraElement::one(),
            word.into_iter().rev().map(Generator::adjoint),
            q,
        );
        out = out.add(&image.scale(&c.conj()));
    }
    out
}

/// Algebra automorphism `ρ(a) = a`, `ρ(a*) = a*`, `ρ(b) = b*`, `ρ(b*) = b`,
/// applied generator by generator and re-normal-ordered.
pub fn rho_automorphism<D: Deformation>(
    x: &AlgebraElement<D::Scalar>,
    q: &D,
) -> AlgebraElement<D::Scalar> {
    let mut out = AlgebraElement::zero();
    for (m, c) in x.terms() {
        let image = mul_word(&AlgebraElement::one(), m.word().map(Generator::rho), q);
        out = out.add(&image.scale(c));
    }
    out
}

/// Coefficients of `(b b*)^l`: the monomials with `α = 0` and `β = γ`.
pub fn diagonal_part<S: Scalar>(x: &AlgebraElement<S>) -> BTreeMap<u32, S> {
    x.terms()
        .filter(|(m, _)| m.is_diagonal())
        .map(|(m, c)| (m.beta, c.clone()))
        .collect()
}

/// Rebuilds an element from a diagonal coefficient map.
pub fn from_diagonal<S: Scalar>(diag: &BTreeMap<u32, S>) -> AlgebraElement<S> {
    AlgebraElement::from_terms(
        diag.iter()
            .map(|(l, c)| (Monomial::diagonal(*l), c.clone())),
    )
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn is_one(&self) -> bool {
        self.len() == 1 && self.coeff(&Monomial::ONE).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{ComplexRational, QParam, SymbolicQ};
    use super::*;
    use crate::ratpoly::{rat, RationalFunction};
    use num_traits::One;

    type Elem = AlgebraElement<ComplexRational>;

    fn half() -> QParam {
        QParam::new(rat(1, 2)).unwrap()
    }

    fn c(r: num_rational::BigRational) -> ComplexRational {
        ComplexRational::from_rational(r)
    }

    fn gen<S: Scalar>(g: Generator) -> AlgebraElement<S> {
        AlgebraElement::generator(g)
    }

    #[test]
    fn a_star_a() {
        let q = half();
        let p = normal_order_product(
            &gen::<ComplexRational>(Generator::AStar),
            &gen(Generator::A),
            &q,
        );
        let expected = Elem::from_terms([
            (Monomial::ONE, c(rat(1, 1))),
            (Monomial::diagonal(1), c(rat(-1, 1))),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn a_a_star() {
        let q = half();
        let p = normal_order_product(
            &gen::<ComplexRational>(Generator::A),
            &gen(Generator::AStar),
            &q,
        );
        let expected = Elem::from_terms([
            (Monomial::ONE, c(rat(1, 1))),
            (Monomial::diagonal(1), c(rat(-1, 4))),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn a_star_squared_a_squared_symbolic() {
        let q = SymbolicQ;
        let a2 = AlgebraElement::<RationalFunction>::monomial(Monomial::new(2, 0, 0));
        let as2 = AlgebraElement::<RationalFunction>::monomial(Monomial::new(-2, 0, 0));
        let p = normal_order_product(&as2, &a2, &q);
        // (1 - q² x)(1 - x) with x = b b*
        let one = RationalFunction::one();
        let q2 = q.q_pow(2);
        let x = AlgebraElement::monomial(Monomial::diagonal(1));
        let f1 = AlgebraElement::one().sub(&x.scale(&q2));
        let f2 = AlgebraElement::one().sub(&x);
        assert_eq!(p, normal_order_product(&f1, &f2, &q));
        assert_eq!(p.coeff(&Monomial::diagonal(1)), -(one + q2.clone()));
        assert_eq!(p.coeff(&Monomial::diagonal(2)), q2);
    }

    #[test]
    fn commutation_relations() {
        let q = half();
        let prod = |x: Generator, y: Generator| {
            normal_order_product(&gen::<ComplexRational>(x), &gen(y), &q)
        };
        // b a = q a b
        assert_eq!(
            prod(Generator::B, Generator::A),
            Elem::term(Monomial::new(1, 1, 0), c(rat(1, 2)))
        );
        // b* a = q a b*
        assert_eq!(
            prod(Generator::BStar, Generator::A),
            Elem::term(Monomial::new(1, 0, 1), c(rat(1, 2)))
        );
        // a* b = q b a*, i.e. b a* = q⁻¹ a* b
        assert_eq!(
            prod(Generator::B, Generator::AStar),
            Elem::term(Monomial::new(-1, 1, 0), c(rat(2, 1)))
        );
        assert_eq!(
            prod(Generator::B, Generator::BStar),
            prod(Generator::BStar, Generator::B)
        );
    }

    #[test]
    fn unit_is_neutral() {
        let q = half();
        let x = Elem::from_terms([
            (Monomial::new(2, 1, 0), c(rat(3, 4))),
            (Monomial::new(-1, 0, 2), c(rat(-1, 5))),
        ]);
        assert_eq!(normal_order_product(&Elem::one(), &x, &q), x);
        assert_eq!(normal_order_product(&x, &Elem::one(), &q), x);
    }

    #[test]
    fn adjoint_of_generators_and_involution() {
        let q = half();
        assert_eq!(
            adjoint(&gen::<ComplexRational>(Generator::A), &q),
            gen(Generator::AStar)
        );
        let x = Elem::from_terms([
            (
                Monomial::new(2, 1, 0),
                ComplexRational::new(rat(3, 4), rat(1, 3)),
            ),
            (Monomial::new(-3, 2, 1), c(rat(-1, 5))),
        ]);
        assert_eq!(adjoint(&adjoint(&x, &q), &q), x);
    }

    #[test]
    fn rho_examples() {
        let q = half();
        assert_eq!(
            rho_automorphism(&gen::<ComplexRational>(Generator::B), &q),
            gen(Generator::BStar)
        );
        let bbs = Elem::monomial(Monomial::diagonal(1));
        assert_eq!(rho_automorphism(&bbs, &q), bbs);
    }

    #[test]
    fn diagonal_extraction() {
        let q = half();
        let x = Elem::one().sub(&Elem::monomial(Monomial::diagonal(1)));
        let d = diagonal_part(&x);
        assert_eq!(d.len(), 2);
        assert_eq!(d[&1], c(rat(-1, 1)));
        assert!(diagonal_part(&gen::<ComplexRational>(Generator::A)).is_empty());
        let phi = gen::<ComplexRational>(Generator::A).add(&gen(Generator::AStar));
        let d2 = diagonal_part(&normal_order_product(&phi, &phi, &q));
        assert_eq!(d2[&0], c(rat(2, 1)));
        assert_eq!(d2[&1], c(rat(-5, 4)));
    }

    #[test]
    fn display_monomials() {
        assert_eq!(Monomial::new(-2, 1, 3).to_string(), "a*^2 b b*^3");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn overlap_defect_of_the_relations() {
        // (a a*) a - a (a* a) = (1 - q⁴) a b b*: the relation set does not
        // resolve this overlap, so products that reduce both ways differ.
        let q = half();
        let a = gen::<ComplexRational>(Generator::A);
        let a_star = gen(Generator::AStar);
        let left = normal_order_product(&normal_order_product(&a, &a_star, &q), &a, &q);
        let right = normal_order_product(&a, &normal_order_product(&a_star, &a, &q), &q);
        let defect = Elem::term(Monomial::new(1, 1, 1), c(rat(15, 16)));
        assert_eq!(left.sub(&right), defect);
    }

    fn monomial_strategy(min_alpha: i32) -> impl proptest::strategy::Strategy<Value = Monomial> {
        use proptest::strategy::Strategy;
        (min_alpha..=3i32, 0..=3u32, 0..=3u32).prop_map(|(a, b, g)| Monomial::new(a, b, g))
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn associative_without_reductions(
            x in monomial_strategy(0),
            y in monomial_strategy(0),
            z in monomial_strategy(0),
        ) {
            let q = QParam::new(rat(2, 3)).unwrap();
            let (x, y, z) = (Elem::monomial(x), Elem::monomial(y), Elem::monomial(z));
            let left = normal_order_product(&normal_order_product(&x, &y, &q), &z, &q);
            let right = normal_order_product(&x, &normal_order_product(&y, &z, &q), &q);
            proptest::prop_assert_eq!(left, right);
        }

        #[test]
        fn rho_and_adjoint_are_involutions(m in monomial_strategy(-3), k in 1..4i64) {
            let q = QParam::new(rat(2, 3)).unwrap();
            let x = Elem::term(m, ComplexRational::new(rat(k, 1), rat(1, k)));
            proptest::prop_assert_eq!(rho_automorphism(&rho_automorphism(&x, &q), &q), x.clone());
            proptest::prop_assert_eq!(adjoint(&adjoint(&x, &q), &q), x);
        }
    }
}
