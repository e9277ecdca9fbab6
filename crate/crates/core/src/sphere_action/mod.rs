//! Spectral action `Tr f(D_t/Λ)` on odd-dimensional unit spheres with the
//! Dirac operator shifted by a constant `t`.
//!
//! Two independent routes are provided: [`direct_action`] sums the spectrum
//! term by term, [`asymptotic_action`] evaluates the three-term expansion in
//! powers of `Λ` written with the cutoff moments `M_p = ∫ x^p f(x) dx`.
//! [`remainder_order_probe`] measures how fast their difference grows in `Λ`.

mod cutoff;
mod probe;
mod summation;
mod sweep;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use cutoff::{CutoffModel, MOMENT_TOLERANCE};
pub use probe::{remainder_order_probe, ProbeOutcome, ProbeSample, NOISE_FLOOR};
pub use summation::CompensatedSum;
pub use sweep::{sweep, SweepPoint, SweepRecord};

use crate::dimension::OddDimension;
use crate::error::{Error, Result};
use crate::ratpoly::{rat, Rational, UPoly};

pub const DEFAULT_TAIL_EPSILON: f64 = 1e-12;
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

/// Parameters of a single spectral-action evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActionRequest {
    pub dim: OddDimension,
    /// Constant scalar perturbation.
    pub t: f64,
    /// Cutoff scale Λ.
    pub lambda: f64,
    pub cutoff: CutoffModel,
    pub tail_epsilon: f64,
    /// Hard limit on the number of summed levels.
    pub max_terms: usize,
}

impl ActionRequest {
    pub fn new(dim: OddDimension, t: f64, lambda: f64, cutoff: CutoffModel) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::param(
                "lambda",
                format!("must be finite and > 0 (got {lambda})"),
            ));
        }
        if !t.is_finite() {
            return Err(Error::param("t", format!("must be finite (got {t})")));
        }
        Ok(Self {
            dim,
            t,
            lambda,
            cutoff,
            tail_epsilon: DEFAULT_TAIL_EPSILON,
            max_terms: DEFAULT_MAX_TERMS,
        })
    }

    pub fn with_tail_epsilon(mut self, eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::param(
                "tail_epsilon",
                format!("must lie in (0, 1) (got {eps})"),
            ));
        }
        self.tail_epsilon = eps;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::param("max_terms", "must be positive"));
        }
        self.max_terms = max_terms;
        Ok(self)
    }
}

/// The three `Λ`-graded terms of the expansion, each including its power of `Λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActionBreakdown {
    pub term_d: f64,
    pub term_dm2: f64,
    pub term_dm4: f64,
    pub total: f64,
}

/// Result of direct summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSum {
    pub value: f64,
    /// Last level index included.
    pub n_max: usize,
}

/// Multiplicity `2^((d-1)/2) (n+1)⋯(n+d-1) / (d-1)!` of level `n`.
///
/// The polynomial form extends to every integer `n`; it vanishes exactly for
/// `n = -1, …, -(d-1)`.
pub fn multiplicity(d: OddDimension, n: i64) -> BigInt {
    let k = d.get() as i64;
    let product = (1..k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(n + j));
    let factorial = (1..k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(j));
    let (q, r) = product.div_rem(&factorial);
    debug_assert!(r == BigInt::from(0));
    q * BigInt::from(d.fiber_dim())
}

/// Floating-point multiplicity, used inside the sums.
pub fn multiplicity_f64(d: OddDimension, n: f64) -> f64 {
    let k = d.get();
    let mut acc = d.fiber_dim() as f64;
    for j in 1..k {
        acc *= (n + j as f64) / j as f64;
    }
    acc
}

/// `(d/2 + n + t, -(d/2 + n) + t)`.
pub fn eigenvalue_pair(d: OddDimension, t: f64, n: u64) -> (f64, f64) {
    let base = d.get() as f64 / 2.0 + n as f64;
    (base + t, -base + t)
}

/// Truncation test: `f(X)·N(n)·n < ε·(|partial| + 1)` once the arguments are
/// past the cutoff's decay onset.
fn tail_negligible(req: &ActionRequest, n: usize, min_arg: f64, mult: f64, partial: f64) -> bool {
    if min_arg < req.cutoff.decay_onset() {
        return false;
    }
    let bound = req.cutoff.eval(min_arg) * mult * (n.max(1) as f64);
    bound < req.tail_epsilon * (partial.abs() + 1.0)
}

/// `Σ_{n≥0} N(n) [f(λ₊(n)/Λ) + f(λ₋(n)/Λ)]`, compensated and truncated by the
/// tail rule.
pub fn direct_action(req: &ActionRequest) -> Result<DirectSum> {
    let mut acc = CompensatedSum::new();
    for n in 0..=req.max_terms {
        let (lp, lm) = eigenvalue_pair(req.dim, req.t, n as u64);
        let mult = multiplicity_f64(req.dim, n as f64);
        acc.add(mult * req.cutoff.eval(lp / req.lambda));
        acc.add(mult * req.cutoff.eval(lm / req.lambda));
        let min_arg = lp.abs().min(lm.abs()) / req.lambda;
        if tail_negligible(req, n, min_arg, mult, acc.value()) {
            return Ok(DirectSum {
                value: acc.value(),
                n_max: n,
            });
        }
    }
    Err(Error::NonConvergence {
        limit: req.max_terms,
    })
}

/// The same action written as a single sum over all integers,
/// `Σ_{n∈ℤ} N(n) f((n + d/2 + t)/Λ)`, with the polynomial multiplicity.
pub fn lattice_action(req: &ActionRequest) -> Result<DirectSum> {
    let shift = req.dim.get() as f64 / 2.0 + req.t;
    let mut acc = CompensatedSum::new();
    for k in 0..=req.max_terms {
        let up = k as f64;
        let down = -(k as f64) - 1.0;
        let m_up = multiplicity_f64(req.dim, up);
        let m_down = multiplicity_f64(req.dim, down);
        acc.add(m_up * req.cutoff.eval((up + shift) / req.lambda));
        acc.add(m_down * req.cutoff.eval((down + shift) / req.lambda));
        let min_arg = (up + shift).abs().min((down + shift).abs()) / req.lambda;
        if tail_negligible(req, k, min_arg, m_up.max(m_down), acc.value()) {
            return Ok(DirectSum {
                value: acc.value(),
                n_max: k,
            });
        }
    }
    Err(Error::NonConvergence {
        limit: req.max_terms,
    })
}

/// The `t`-polynomials multiplying the `Λ^{d-2}` and `Λ^{d-4}` terms of the
/// expansion: `t² - d/12` and `t⁴ - d t²/2 + d(5d+2)/240`.
pub fn expansion_t_polynomials(d: OddDimension) -> (UPoly, UPoly) {
    let dd = d.get() as i64;
    let zero = Rational::zero();
    let quadratic = UPoly::from_coeffs(vec![rat(-dd, 12), zero.clone(), Rational::one()]);
    let quartic = UPoly::from_coeffs(vec![
        rat(dd * (5 * dd + 2), 240),
        zero.clone(),
        rat(-dd, 2),
        zero,
        Rational::one(),
    ]);
    (quadratic, quartic)
}

/// Three-term expansion in moment form:
///
/// ```text
/// S ≈ 2^((d-1)/2)/(d-1)! · [ Λ^d M_{d-1}
///       + Λ^{d-2} (d-1)(d-2)/2 · (t² - d/12) · M_{d-3}
///       + Λ^{d-4} (d-1)(d-2)(d-3)(d-4)/24 · (t⁴ - d t²/2 + d(5d+2)/240) · M_{d-5} ]
/// ```
///
/// The last term carries a factor `(d-3)` and vanishes for `d = 3`.
pub fn asymptotic_action(req: &ActionRequest) -> ActionBreakdown {
    let d = req.dim.get();
    let df = d as f64;
    let t = req.t;
    let t2 = t * t;
    let lambda = req.lambda;
    let prefactor = (1..d).fold(req.dim.fiber_dim() as f64, |acc, j| acc / j as f64);

    let term_d = prefactor * lambda.powi(d as i32) * req.cutoff.moment(d - 1);

    let c2 = (df - 1.0) * (df - 2.0) / 2.0 * (t2 - df / 12.0);
    let term_dm2 = prefactor * lambda.powi(d as i32 - 2) * c2 * req.cutoff.moment(d - 3);

    let term_dm4 = if d == 3 {
        0.0
    } else {
        let falling = (df - 1.0) * (df - 2.0) * (df - 3.0) * (df - 4.0) / 24.0;
        let quartic = t2 * t2 - df / 2.0 * t2 + df * (5.0 * df + 2.0) / 240.0;
        prefactor * lambda.powi(d as i32 - 4) * falling * quartic * req.cutoff.moment(d - 5)
    };

    ActionBreakdown {
        term_d,
        term_dm2,
        term_dm4,
        total: term_d + term_dm2 + term_dm4,
    }
}
