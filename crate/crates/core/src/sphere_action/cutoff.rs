use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Absolute accuracy of quadrature-based moments.
pub const MOMENT_TOLERANCE: f64 = 1e-12;

/// Even, nonnegative, rapidly decaying cutoff function `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutoffModel {
    /// `exp(-x²)`, moments `M_2m = Γ(m + 1/2)`.
    Gaussian,
    /// `exp(-x²/(1-x²))` on `|x| < 1`, zero outside. Moments by quadrature.
    Bump,
}

impl CutoffModel {
    pub fn name(self) -> &'static str {
        match self {
            CutoffModel::Gaussian => "gaussian",
            CutoffModel::Bump => "bump",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            CutoffModel::Gaussian => (-x * x).exp(),
            CutoffModel::Bump => {
                let x2 = x * x;
                if x2 >= 1.0 {
                    0.0
                } else {
                    (-x2 / (1.0 - x2)).exp()
                }
            }
        }
    }

    /// Point beyond which `f(x)·x^k` is treated as decreasing for truncation.
    pub fn decay_onset(self) -> f64 {
        1.0
    }

    /// `M_p = ∫ x^p f(x) dx` over the real line. Odd moments are exactly zero.
    pub fn moment(self, p: u32) -> f64 {
        if p % 2 == 1 {
            return 0.0;
        }
        match self {
            CutoffModel::Gaussian => {
                let m = p / 2;
                (1..=m).fold(PI.sqrt(), |acc, i| acc * (i as f64 - 0.5))
            }
            CutoffModel::Bump => {
                let g = |x: f64| x.powi(p as i32) * self.eval(x);
                2.0 * adaptive_simpson(&g, 0.0, 1.0, MOMENT_TOLERANCE / 2.0)
            }
        }
    }
}

impl fmt::Display for CutoffModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CutoffModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gaussian" => Ok(CutoffModel::Gaussian),
            "bump" => Ok(CutoffModel::Bump),
            other => Err(Error::param(
                "cutoff",
                format!("unknown cutoff {other:?} (expected gaussian or bump)"),
            )),
        }
    }
}

/// Adaptive Simpson quadrature with Richardson correction.
pub(crate) fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}
