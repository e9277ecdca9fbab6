use super::{asymptotic_action, direct_action, ActionRequest};
use crate::error::{Error, Result};
use crate::par::{map_collect, Execution};

/// Relative differences at or below this level are floating-point noise.
pub const NOISE_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeSample {
    pub lambda: f64,
    pub direct: f64,
    pub asymptotic: f64,
    /// `|direct - asymptotic|`.
    pub remainder: f64,
}

impl ProbeSample {
    pub fn relative(&self) -> f64 {
        self.remainder / self.direct.abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProbeOutcome {
    /// Least-squares fit of `log remainder = slope·log Λ + intercept`.
    Slope {
        exponent: f64,
        intercept: f64,
        r_squared: f64,
        samples: Vec<ProbeSample>,
    },
    /// Remainder at noise level for at least one scale: the expansion is exact
    /// up to rounding and no exponent can be fitted.
    ExactAgreement {
        max_relative: f64,
        samples: Vec<ProbeSample>,
    },
}

impl ProbeOutcome {
    pub fn exponent(&self) -> Option<f64> {
        match self {
            ProbeOutcome::Slope { exponent, .. } => Some(*exponent),
            ProbeOutcome::ExactAgreement { .. } => None,
        }
    }

    pub fn samples(&self) -> &[ProbeSample] {
        match self {
            ProbeOutcome::Slope { samples, .. } | ProbeOutcome::ExactAgreement { samples, .. } => {
                samples
            }
        }
    }
}

/// Measures the growth exponent of `|direct - asymptotic|` in `Λ`.
///
/// `base` supplies the dimension, shift, cutoff and truncation settings; its
/// own `lambda` is ignored.
pub fn remainder_order_probe(
    base: &ActionRequest,
    lambdas: &[f64],
    exec: Execution,
) -> Result<ProbeOutcome> {
    let mut lambdas = lambdas.to_vec();
    lambdas.sort_by(f64::total_cmp);
    lambdas.dedup();
    if lambdas.len() < 3 {
        return Err(Error::param(
            "lambdas",
            "need at least three distinct scales for an order fit",
        ));
    }
    let samples = map_collect(&lambdas, exec, |&lambda| -> Result<ProbeSample> {
        let req = ActionRequest::new(base.dim, base.t, lambda, base.cutoff)?
            .with_tail_epsilon(base.tail_epsilon)?
            .with_max_terms(base.max_terms)?;
        let direct = direct_action(&req)?.value;
        let asymptotic = asymptotic_action(&req).total;
        Ok(ProbeSample {
            lambda,
            direct,
            asymptotic,
            remainder: (direct - asymptotic).abs(),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let max_relative = samples
        .iter()
        .map(ProbeSample::relative)
        .fold(0.0, f64::max);
    if samples.iter().any(|s| s.relative() <= NOISE_FLOOR) {
        return Ok(ProbeOutcome::ExactAgreement {
            max_relative,
            samples,
        });
    }

    let xs: Vec<f64> = samples.iter().map(|s| s.lambda.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.remainder.ln()).collect();
    let (exponent, intercept, r_squared) = least_squares(&xs, &ys)?;
    Ok(ProbeOutcome::Slope {
        exponent,
        intercept,
        r_squared,
        samples,
    })
}

fn least_squares(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 || !sxy.is_finite() {
        return Err(Error::DegenerateFit("scales do not span a range".into()));
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    Ok((slope, my - slope * mx, r_squared))
}

#[cfg(test)]
mod tests {
    use super::super::CutoffModel;
    use super::*;
    use crate::OddDimension;

    fn base(d: i64, t: f64) -> ActionRequest {
        ActionRequest::new(OddDimension::new(d).unwrap(), t, 1.0, CutoffModel::Gaussian).unwrap()
    }

    #[test]
    fn fit_recovers_power_law() {
        let xs: Vec<f64> = [1.0f64, 2.0, 4.0].iter().map(|x| x.ln()).collect();
        let ys: Vec<f64> = [3.0f64, 24.0, 192.0].iter().map(|y| y.ln()).collect();
        let (s, i, r2) = least_squares(&xs, &ys).unwrap();
        assert!((s - 3.0).abs() < 1e-12);
        assert!((i - 3f64.ln()).abs() < 1e-12);
        assert!((r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn low_dimensions_are_exact() {
        for d in [3, 5] {
            let out =
                remainder_order_probe(&base(d, 0.5), &[10.0, 20.0, 40.0], Execution::Parallel)
                    .unwrap();
            assert!(
                matches!(out, ProbeOutcome::ExactAgreement { .. }),
                "d={d}: {out:?}"
            );
        }
    }

    #[test]
    fn seven_dimensional_remainder_is_linear() {
        let out = remainder_order_probe(&base(7, 0.3), &[10.0, 20.0, 40.0], Execution::Sequential)
            .unwrap();
        let slope = out.exponent().expect("fit");
        assert!((slope - 1.0).abs() <= 0.1, "slope {slope}");
    }

    #[test]
    fn seven_dimensional_half_shift_is_exact() {
        // At t = 1/2 the sixth coefficient (2t±1)(2t±3)(2t±5)/64 vanishes, so
        // nothing beyond the three-term expansion survives.
        let out = remainder_order_probe(&base(7, 0.5), &[10.0, 20.0, 40.0], Execution::Sequential)
            .unwrap();
        assert!(
            matches!(out, ProbeOutcome::ExactAgreement { .. }),
            "{out:?}"
        );
    }

    #[test]
    fn nine_dimensional_remainder_is_cubic() {
        let out =
            remainder_order_probe(&base(9, 0.5), &[10.0, 20.0, 40.0], Execution::Parallel).unwrap();
        let slope = out.exponent().expect("fit");
        assert!((slope - 3.0).abs() <= 0.2, "slope {slope}");
    }

    #[test]
    fn needs_three_scales() {
        let err = remainder_order_probe(&base(7, 0.5), &[10.0, 10.0, 20.0], Execution::Sequential);
        assert!(err.is_err());
    }
}
