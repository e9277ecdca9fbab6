//! Leading heat-kernel coefficient densities for `D + φ` on odd-dimensional
//! spin manifolds, their three-dimensional collapse, the unit-sphere bracket
//! polynomials and the classical 3-manifold action terms.
//!
//! The brackets are generic over [`HeatScalar`] so the same expressions run in
//! floating point, in exact rationals, and with `φ = t` as a polynomial in `t`.
//! Transcendental prefactors (`(4π)^{-d/2}`, `π²`) stay outside the exact
//! results.

use std::f64::consts::PI;
use std::ops::{Add, Div, Mul, Sub};

use crate::dimension::OddDimension;
use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, to_f64, Rational, UPoly};
use crate::sphere_action::expansion_t_polynomials;

pub trait HeatScalar: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn from_ratio(num: i64, den: i64) -> Self;
}

impl HeatScalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl HeatScalar for Rational {
    fn from_ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }
}

impl HeatScalar for UPoly {
    fn from_ratio(num: i64, den: i64) -> Self {
        UPoly::constant(rat(num, den))
    }
}

/// Pointwise curvature scalars: `R`, `R_ij R^ij`, `R_ijkl R^ijkl`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointwiseInvariants<T> {
    pub scalar_curvature: T,
    pub ric2: T,
    pub riem2: T,
}

/// Pointwise field densities: `φ²`, `φ⁴`, `∇_iφ ∇^iφ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFieldData<T> {
    pub phi2: T,
    pub phi4: T,
    pub gradphi2: T,
}

impl<T: HeatScalar> ScalarFieldData<T> {
    /// Densities of a single field value `φ` with gradient norm `|∇φ|²`.
    pub fn at_point(phi: T, gradphi2: T) -> Self {
        let phi2 = phi.clone() * phi;
        Self {
            phi4: phi2.clone() * phi2.clone(),
            phi2,
            gradphi2,
        }
    }

    pub fn constant(phi: T) -> Self {
        Self::at_point(phi, T::from_ratio(0, 1))
    }
}

/// Spinor fibre dimension `2^((d-1)/2)`.
pub fn fiber_dim(d: OddDimension) -> u64 {
    d.fiber_dim()
}

/// `-R/12 + (d-1)φ²`.
pub fn a1_bracket<T: HeatScalar>(
    d: OddDimension,
    inv: &PointwiseInvariants<T>,
    fld: &ScalarFieldData<T>,
) -> T {
    let dm1 = T::from_ratio(d.get() as i64 - 1, 1);
    T::from_ratio(-1, 12) * inv.scalar_curvature.clone() + dm1 * fld.phi2.clone()
}

/// Curvature-only part of the second bracket: `5/2 R² - 4 Ric² - 7/2 Riem²`.
pub fn curvature_bracket<T: HeatScalar>(inv: &PointwiseInvariants<T>) -> T {
    let r = inv.scalar_curvature.clone();
    T::from_ratio(5, 2) * r.clone() * r
        - T::from_ratio(4, 1) * inv.ric2.clone()
        - T::from_ratio(7, 2) * inv.riem2.clone()
}

/// `5/2 R² - 4 Ric² - 7/2 Riem² + 120(d-1)(d-3)φ⁴ + 60(3-d)Rφ² + 120(d-1)|∇φ|²`.
pub fn a2_bracket<T: HeatScalar>(
    d: OddDimension,
    inv: &PointwiseInvariants<T>,
    fld: &ScalarFieldData<T>,
) -> T {
    let dd = d.get() as i64;
    curvature_bracket(inv)
        + T::from_ratio(120 * (dd - 1) * (dd - 3), 1) * fld.phi4.clone()
        + T::from_ratio(60 * (3 - dd), 1) * inv.scalar_curvature.clone() * fld.phi2.clone()
        + T::from_ratio(120 * (dd - 1), 1) * fld.gradphi2.clone()
}

/// An exact density `coefficient · (4π)^{-d/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeatDensity {
    pub dim: OddDimension,
    pub coefficient: Rational,
}

impl HeatDensity {
    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coefficient) * heat_prefactor(self.dim)
    }
}

/// `(4π)^{-d/2}`.
pub fn heat_prefactor(d: OddDimension) -> f64 {
    (4.0 * PI).powf(-(d.get() as f64) / 2.0)
}

pub fn a1_density_exact(
    d: OddDimension,
    inv: &PointwiseInvariants<Rational>,
    fld: &ScalarFieldData<Rational>,
) -> HeatDensity {
    HeatDensity {
        dim: d,
        coefficient: int(d.fiber_dim() as i64) * a1_bracket(d, inv, fld),
    }
}

pub fn a2_density_exact(
    d: OddDimension,
    inv: &PointwiseInvariants<Rational>,
    fld: &ScalarFieldData<Rational>,
) -> HeatDensity {
    HeatDensity {
        dim: d,
        coefficient: rat(d.fiber_dim() as i64, 180) * a2_bracket(d, inv, fld),
    }
}

pub fn a1_density(
    d: OddDimension,
    inv: &PointwiseInvariants<f64>,
    fld: &ScalarFieldData<f64>,
) -> f64 {
    heat_prefactor(d) * d.fiber_dim() as f64 * a1_bracket(d, inv, fld)
}

pub fn a2_density(
    d: OddDimension,
    inv: &PointwiseInvariants<f64>,
    fld: &ScalarFieldData<f64>,
) -> f64 {
    heat_prefactor(d) * d.fiber_dim() as f64 / 180.0 * a2_bracket(d, inv, fld)
}

/// Outcome of imposing the two three-dimensional curvature identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D3Reduction {
    pub ric2: Rational,
    pub riem2: Rational,
    /// `5/2 R² - 4 Ric² - 7/2 Riem²` after substitution; zero.
    pub curvature_bracket: Rational,
}

impl D3Reduction {
    pub fn invariants(&self, scalar_curvature: Rational) -> PointwiseInvariants<Rational> {
        PointwiseInvariants {
            scalar_curvature,
            ric2: self.ric2.clone(),
            riem2: self.riem2.clone(),
        }
    }
}

/// Solves `Riem² - 2Ric² + R²/3 = 0` (vanishing Weyl tensor) and
/// `Riem² - 4Ric² + R² = 0` (vanishing Gauss–Bonnet density) for `Ric²` and
/// `Riem²` at fixed `R`, then evaluates the curvature bracket.
pub fn d3_reduction_check(scalar_curvature: &Rational) -> D3Reduction {
    let r2 = scalar_curvature * scalar_curvature;
    // rows: [coef Ric², coef Riem²] · x = rhs
    let (a11, a12, b1) = (int(-2), int(1), -(&r2 * rat(1, 3)));
    let (a21, a22, b2) = (int(-4), int(1), -r2.clone());
    let det = &a11 * &a22 - &a12 * &a21;
    let ric2 = (&b1 * &a22 - &a12 * &b2) / &det;
    let riem2 = (&a11 * &b2 - &b1 * &a21) / &det;
    let inv = PointwiseInvariants {
        scalar_curvature: scalar_curvature.clone(),
        ric2: ric2.clone(),
        riem2: riem2.clone(),
    };
    D3Reduction {
        curvature_bracket: curvature_bracket(&inv),
        ric2,
        riem2,
    }
}

/// Curvature scalars of the unit `d`-sphere.
pub fn sphere_invariants(d: OddDimension) -> PointwiseInvariants<Rational> {
    let dd = d.get() as i64;
    PointwiseInvariants {
        scalar_curvature: int(dd * (dd - 1)),
        ric2: int(dd * (dd - 1) * (dd - 1)),
        riem2: int(2 * dd * (dd - 1)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereBrackets {
    pub a1: UPoly,
    pub a2: UPoly,
}

/// Substitutes the unit-sphere invariants and a constant field `φ = t` into
/// both brackets and checks the factored forms
/// `a1 = (d-1)(t² - d/12)` and `a2 = 120(d-1)(d-3)(t⁴ - d t²/2 + d(5d+2)/240)`.
pub fn sphere_polynomial_check(d: OddDimension) -> Result<SphereBrackets> {
    let inv = sphere_invariants(d);
    let inv = PointwiseInvariants {
        scalar_curvature: UPoly::constant(inv.scalar_curvature),
        ric2: UPoly::constant(inv.ric2),
        riem2: UPoly::constant(inv.riem2),
    };
    let fld = ScalarFieldData::constant(UPoly::var());
    let a1 = a1_bracket(d, &inv, &fld);
    let a2 = a2_bracket(d, &inv, &fld);

    let dd = d.get() as i64;
    let (quadratic, quartic) = expansion_t_polynomials(d);
    let expected_a1 = quadratic.scale(&int(dd - 1));
    let expected_a2 = quartic.scale(&int(120 * (dd - 1) * (dd - 3)));
    for (what, expected, computed) in [("a1", &expected_a1, &a1), ("a2", &expected_a2, &a2)] {
        if expected != computed {
            return Err(Error::PolynomialMismatch {
                what: format!("{what} sphere bracket, d = {d}"),
                expected: expected.display_with("t"),
                computed: computed.display_with("t"),
            });
        }
    }
    Ok(SphereBrackets { a1, a2 })
}

/// Integrated data of a closed 3-manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeManifoldData<T> {
    pub volume: T,
    /// `∫ R`.
    pub total_r: T,
    /// `∫ Φ²`.
    pub total_phi2: T,
}

/// Coefficients of `Λ³` and `Λ¹`; there are no `Λ²` or `Λ⁰` terms.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreefoldTerms<T> {
    /// `∫|D|⁻³ = Vol/π²`.
    pub lambda3: T,
    /// `(1/2π²)(-∫R/12 + 8∫Φ²)`.
    pub lambda1: T,
}

impl ThreefoldTerms<f64> {
    pub fn action_at(&self, lambda: f64) -> f64 {
        self.lambda3 * lambda.powi(3) + self.lambda1 * lambda
    }
}

/// Leading spectral-action coefficients for `D + 2Φ` on a closed 3-manifold.
///
/// `pi_squared` is the value used for `π²`: pass `π²` in floating point, or
/// `1` when the inputs are expressed in units of `π²` for exact results.
pub fn threefold_action_terms<T>(data: &ThreeManifoldData<T>, pi_squared: T) -> ThreefoldTerms<T>
where
    T: HeatScalar + Div<Output = T>,
{
    let lambda3 = data.volume.clone() / pi_squared.clone();
    let bracket = T::from_ratio(-1, 12) * data.total_r.clone()
        + T::from_ratio(8, 1) * data.total_phi2.clone();
    let lambda1 = bracket / (T::from_ratio(2, 1) * pi_squared);
    ThreefoldTerms { lambda3, lambda1 }
}

pub fn threefold_action_terms_f64(data: &ThreeManifoldData<f64>) -> ThreefoldTerms<f64> {
    threefold_action_terms(data, PI * PI)
}

/// Unit `S³` with constant `Φ`, in units of `π²`.
pub fn unit_three_sphere(phi: &Rational) -> ThreeManifoldData<Rational> {
    ThreeManifoldData {
        volume: int(2),
        total_r: int(12),
        total_phi2: int(2) * phi * phi,
    }
}
