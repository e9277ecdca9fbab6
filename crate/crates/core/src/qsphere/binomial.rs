use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::{diagonal_part, normal_order_product, AlgebraElement, Monomial};
use super::scalar::Deformation;
use crate::error::{Error, Result};

/// Gaussian binomial `[n k]` in base `q²`, via the q-Pascal rule
/// `[n k] = [n-1 k-1] + q^{2k} [n-1 k]`.
pub fn quantum_binomial<D: Deformation>(n: u32, k: u32, q: &D) -> Result<D::Scalar> {
    if k > n {
        return Err(Error::param(
            "k",
            format!("quantum binomial needs k ≤ n (got n={n}, k={k})"),
        ));
    }
    let mut row: Vec<D::Scalar> = vec![D::Scalar::one()];
    for m in 1..=n as usize {
        let mut next = vec![D::Scalar::one(); m + 1];
        for j in 1..m {
            next[j] = row[j - 1].clone() + q.q_pow(2 * j as i64) * row[j].clone();
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// `∏_{i=1}^n (1-q^{2i}) / (∏_{i=1}^k (1-q^{2i}) · ∏_{i=1}^{n-k} (1-q^{2i}))`.
pub fn quantum_binomial_by_product<D: Deformation>(n: u32, k: u32, q: &D) -> Result<D::Scalar> {
    if k > n {
        return Err(Error::param(
            "k",
            format!("quantum binomial needs k ≤ n (got n={n}, k={k})"),
        ));
    }
    let prod = |m: u32| {
        (1..=m as i64).fold(D::Scalar::one(), |acc, i| {
            acc * (D::Scalar::one() - q.q_pow(2 * i))
        })
    };
    Ok(prod(n) / (prod(k) * prod(n - k)))
}

/// Coefficients of `(b b*)^k` in `a^{-α} a^{α}`.
///
/// For `α ≥ 0` this is the closed form `(-1)^k q^{k(k-1)} [α k]_{q²}`. For
/// `α < 0` the product `a^{|α|} (a*)^{|α|}` is normal-ordered by the engine.
pub fn a_power_expansion<D: Deformation>(alpha: i32, q: &D) -> BTreeMap<u32, D::Scalar> {
    if alpha < 0 {
        return a_power_expansion_engine(alpha, q);
    }
    let n = alpha as u32;
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 {
                D::Scalar::one()
            } else {
                -D::Scalar::one()
            };
            let kk = k as i64;
            let binom = quantum_binomial(n, k, q).expect("k ≤ n");
            (k, sign * q.q_pow(kk * (kk - 1)) * binom)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Normal form of `a^{-α} a^{α}` computed by the engine. The product is
/// always a polynomial in `b b*`.
pub fn a_power_expansion_engine<D: Deformation>(alpha: i32, q: &D) -> BTreeMap<u32, D::Scalar> {
    let left = AlgebraElement::monomial(Monomial::new(-alpha, 0, 0));
    let right = AlgebraElement::monomial(Monomial::new(alpha, 0, 0));
    let product = normal_order_product(&left, &right, q);
    debug_assert!(product.terms().all(|(m, _)| m.is_diagonal()));
    diagonal_part(&product)
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{ComplexRational, QParam, Scalar, SymbolicQ};
    use super::*;
    use crate::ratpoly::{rat, RationalFunction, UPoly};

    fn half() -> QParam {
        QParam::new(rat(1, 2)).unwrap()
    }

    #[test]
    fn edge_values() {
        let q = half();
        for n in 0..6 {
            assert_eq!(quantum_binomial(n, 0, &q).unwrap(), ComplexRational::one());
            assert_eq!(quantum_binomial(n, n, &q).unwrap(), ComplexRational::one());
        }
        assert!(quantum_binomial(2, 3, &q).is_err());
        assert!(quantum_binomial_by_product(2, 3, &q).is_err());
    }

    #[test]
    fn two_choose_one_symbolic() {
        let v = quantum_binomial(2, 1, &SymbolicQ).unwrap();
        assert_eq!(v, RationalFunction::from_poly(UPoly::from_i64s(&[1, 0, 1])));
    }

    #[test]
    fn pascal_matches_product_and_is_symmetric() {
        let q = half();
        for n in 0..=8 {
            for k in 0..=n {
                let a = quantum_binomial(n, k, &q).unwrap();
                assert_eq!(a, quantum_binomial_by_product(n, k, &q).unwrap());
                assert_eq!(a, quantum_binomial(n, n - k, &q).unwrap());
            }
        }
    }

    #[test]
    fn expansion_small_alpha() {
        let q = SymbolicQ;
        let e1 = a_power_expansion(1, &q);
        assert_eq!(e1[&0], RationalFunction::one());
        assert_eq!(e1[&1], -RationalFunction::one());
        let e2 = a_power_expansion(2, &q);
        let q2 = q.q_pow(2);
        assert_eq!(e2[&1], -(RationalFunction::one() + q2.clone()));
        assert_eq!(e2[&2], q2);
        let e0 = a_power_expansion(0, &q);
        assert_eq!(e0.len(), 1);
        assert_eq!(e0[&0], RationalFunction::one());
    }

    #[test]
    fn closed_form_matches_engine() {
        for alpha in 0..=6 {
            assert_eq!(
                a_power_expansion(alpha, &SymbolicQ),
                a_power_expansion_engine(alpha, &SymbolicQ)
            );
            let q = QParam::new(rat(2, 3)).unwrap();
            assert_eq!(
                a_power_expansion(alpha, &q),
                a_power_expansion_engine(alpha, &q)
            );
        }
    }

    #[test]
    fn negative_alpha_products() {
        // a a* = 1 - q² b b*
        let e = a_power_expansion(-1, &SymbolicQ);
        assert_eq!(e[&1], -SymbolicQ.q_pow(2));
        assert!(e.values().all(Scalar::is_real));
    }
}
