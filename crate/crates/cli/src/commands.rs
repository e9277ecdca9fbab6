use std::f64::consts::PI;

use num_traits::Zero;
use serde_json::Value;
use spectral_core::heat_kernel::{
    a1_density_exact, a2_density_exact, d3_reduction_check, heat_prefactor,
    sphere_polynomial_check, threefold_action_terms, threefold_action_terms_f64,
    PointwiseInvariants, ScalarFieldData, ThreeManifoldData,
};
use spectral_core::par::Execution;
use spectral_core::qsphere::{
    action_leading, parse_torsion_json, scale_invariant_terms, selfadjoint_violation, to_symbolic,
    torsion_to_records, zeta_invariant_closed, zeta_invariant_engine, AlgebraElement,
    ComplexRational, Deformation, QParam, Scalar, SymbolicQ,
};
use spectral_core::ratpoly::{int, parse_rational, rat, to_f64, verify_lemma, Rational};
use spectral_core::sphere_action::{
    remainder_order_probe, sweep, ActionRequest, CutoffModel, ProbeOutcome, SweepPoint,
    DEFAULT_MAX_TERMS,
};
use spectral_core::verify::{run_all, REPORT_SEED};
use spectral_core::{Error, OddDimension};

use crate::args::{HeatKernelArgs, LemmaArgs, QsphereArgs, SphereActionArgs};
use crate::record::{exact, field, float, text, Record};
use crate::CliError;

/// Records to emit, plus a failure message when a check did not hold.
pub struct Outcome {
    pub records: Vec<Record>,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(records: Vec<Record>) -> Self {
        Self {
            records,
            failure: None,
        }
    }
}

fn split_list(name: &str, raw: &str) -> Result<Vec<String>, CliError> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Err(CliError::Invalid(format!(
            "`--{name}` needs at least one value"
        )));
    }
    Ok(trimmed.split(',').map(|s| s.trim().to_string()).collect())
}

fn parse_dims(raw: &str) -> Result<Vec<OddDimension>, CliError> {
    split_list("dimension", raw)?
        .iter()
        .map(|s| s.parse::<OddDimension>().map_err(CliError::from))
        .collect()
}

fn parse_floats(name: &str, raw: &str) -> Result<Vec<f64>, CliError> {
    split_list(name, raw)?
        .iter()
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| CliError::Invalid(format!("`--{name}`: not a number: {s:?}")))
        })
        .collect()
}

fn parse_exact(name: &str, raw: &str) -> Result<Rational, CliError> {
    parse_rational(raw)
        .map_err(|_| CliError::Invalid(format!("`--{name}`: not a rational number: {raw:?}")))
}

fn dim_value(d: OddDimension) -> Value {
    Value::from(d.get())
}

pub fn sphere_action(args: &SphereActionArgs, exec: Execution) -> Result<Outcome, CliError> {
    let dims = parse_dims(&args.dimension)?;
    let ts = parse_floats("t", &args.t)?;
    let lambdas = parse_floats("lambda", &args.lambda)?;
    let cutoff: CutoffModel = args.cutoff.parse()?;
    let max_terms = match &args.max_terms {
        None => DEFAULT_MAX_TERMS,
        Some(s) => s.trim().parse::<usize>().map_err(|_| {
            CliError::Invalid(format!("max terms must be a positive integer (got {s:?})"))
        })?,
    };

    let mut points = Vec::new();
    for &dim in &dims {
        for &t in &ts {
            for &lambda in &lambdas {
                points.push(SweepPoint { dim, t, lambda });
            }
        }
    }
    let mut records = Vec::new();
    for rec in sweep(&points, cutoff, args.tail_epsilon, max_terms, exec)? {
        let mut r = Record::new(
            "sphere_action",
            "direct_vs_asymptotic",
            "sum_n N(n)[f((n+d/2+t)/L) + f((n+d/2-t)/L)] against the L^d, L^(d-2), L^(d-4) moment terms",
        )
        .input("cutoff", text(cutoff.name()))
        .input("dimension", dim_value(rec.point.dim))
        .input("lambda", float(rec.point.lambda))
        .input("t", float(rec.point.t))
        .input("tail_epsilon", float(args.tail_epsilon));
        r.output("abs_diff", float(rec.abs_diff));
        r.output("asymptotic", float(rec.asymptotic.total));
        r.output("direct", float(rec.direct.value));
        r.output("n_max", Value::from(rec.direct.n_max));
        r.output("rel_diff", float(rec.rel_diff));
        r.output("term_d", float(rec.asymptotic.term_d));
        r.output("term_dm2", float(rec.asymptotic.term_dm2));
        r.output("term_dm4", float(rec.asymptotic.term_dm4));
        records.push(r);
    }

    if args.probe_order {
        let mut sorted_ts = ts.clone();
        sorted_ts.sort_by(f64::total_cmp);
        sorted_ts.dedup();
        let mut sorted_dims = dims.clone();
        sorted_dims.sort();
        sorted_dims.dedup();
        for &dim in &sorted_dims {
            for &t in &sorted_ts {
                let base = ActionRequest::new(dim, t, lambdas[0], cutoff)?
                    .with_tail_epsilon(args.tail_epsilon)?
                    .with_max_terms(max_terms)?;
                let outcome = remainder_order_probe(&base, &lambdas, exec)?;
                let mut r = Record::new(
                    "sphere_action",
                    "remainder_order_probe",
                    "least-squares slope of log|direct - expansion| against log L",
                )
                .input("cutoff", text(cutoff.name()))
                .input("dimension", dim_value(dim))
                .input(
                    "lambdas",
                    Value::Array(lambdas.iter().map(|&l| float(l)).collect()),
                )
                .input("t", float(t));
                match &outcome {
                    ProbeOutcome::Slope {
                        exponent,
                        intercept,
                        r_squared,
                        ..
                    } => {
                        r.output("kind", text("slope"));
                        r.output("exponent", float(*exponent));
                        r.output("intercept", float(*intercept));
                        r.output("r_squared", float(*r_squared));
                    }
                    ProbeOutcome::ExactAgreement { max_relative, .. } => {
                        r.output("kind", text("exact_agreement"));
                        r.output("max_relative", float(*max_relative));
                    }
                }
                let remainders = outcome
                    .samples()
                    .iter()
                    .map(|s| float(s.remainder))
                    .collect();
                r.output("remainders", Value::Array(remainders));
                records.push(r);
            }
        }
    }
    Ok(Outcome::ok(records))
}

pub fn lemma_verify(args: &LemmaArgs) -> Result<Outcome, CliError> {
    let mut dims = parse_dims(&args.dimension)?;
    dims.sort();
    dims.dedup();
    let mut failed = Vec::new();
    let records = dims
        .into_iter()
        .map(|d| {
            let report = verify_lemma(d);
            if !report.passed() {
                failed.push(d.get());
            }
            let polys = |ps: &[spectral_core::ratpoly::UPoly]| {
                Value::Array(ps.iter().map(|p| text(p.display_with("t"))).collect())
            };
            let mut r = Record::new(
                "ratpoly",
                "verify_lemma",
                "prod_{j=1}^{d-1}(n+j) rebased in u = n + d/2 + t, leading five coefficients",
            )
            .input("dimension", dim_value(d));
            r.output("computed", polys(&report.computed));
            r.output(
                "first_mismatch",
                report.first_mismatch.map_or(Value::Null, Value::from),
            );
            r.output("passed", Value::Bool(report.passed()));
            r.output("reference", polys(&report.reference));
            r
        })
        .collect();
    let failure = (!failed.is_empty()).then(|| format!("expansion mismatch for d = {failed:?}"));
    Ok(Outcome { records, failure })
}

/// `"12pi^2"` → (12, true); `"3/2"` → (3/2, false).
fn parse_pi2_quantity(name: &str, raw: &str) -> Result<(Rational, bool), CliError> {
    let s = raw.trim();
    match s.strip_suffix("pi^2") {
        Some(coef) => {
            let coef = coef.trim().trim_end_matches('*').trim();
            let value = if coef.is_empty() {
                int(1)
            } else {
                parse_exact(name, coef)?
            };
            Ok((value, true))
        }
        None => Ok((parse_exact(name, s)?, false)),
    }
}

pub fn heat_kernel(args: &HeatKernelArgs) -> Result<Outcome, CliError> {
    let modes = [
        args.d3_check,
        args.sphere.is_some(),
        args.threefold,
        args.dimension.is_some(),
    ];
    match modes.iter().filter(|m| **m).count() {
        1 => {}
        0 => {
            return Err(CliError::Usage(
                "choose one of --d3-check, --sphere <d>, --threefold or --dimension <d> with invariants".into(),
            ))
        }
        _ => return Err(CliError::Usage("heat-kernel modes are mutually exclusive".into())),
    }
    let zero = || int(0);
    let opt_exact =
        |name: &str, v: &Option<String>| v.as_deref().map(|s| parse_exact(name, s)).transpose();

    if args.d3_check {
        let r_value =
            opt_exact("scalar-curvature", &args.scalar_curvature)?.unwrap_or_else(|| int(6));
        let red = d3_reduction_check(&r_value);
        let d3 = OddDimension::new(3)?;
        let inv = red.invariants(r_value.clone());
        let coefficient_at = |phi: Rational, grad: Rational| {
            a2_density_exact(d3, &inv, &ScalarFieldData::at_point(phi, grad)).coefficient
        };
        let unit_grad = coefficient_at(zero(), int(1));
        let phi_independent = [rat(1, 3), int(2), rat(-5, 7)].into_iter().all(|phi| {
            coefficient_at(phi.clone(), int(1)) == unit_grad
                && coefficient_at(phi, zero()) == zero()
        });
        let mut r = Record::new(
            "heat_kernel",
            "d3_reduction_check",
            "d = 3: Riem^2 - 4Ric^2 + R^2 = 0 and Weyl = 0 give Ric^2 = Riem^2 = R^2/3",
        )
        .input("scalar_curvature", exact(&r_value));
        r.output("a2", text(format!("({unit_grad})(4pi)^(-3/2)*gradphi2")));
        r.output("a2_gradphi2_coefficient", exact(&unit_grad));
        r.output("a2_phi_independent", Value::Bool(phi_independent));
        r.output("curvature_bracket", exact(&red.curvature_bracket));
        r.output("ric2", exact(&red.ric2));
        r.output("riem2", exact(&red.riem2));
        let failure = (red.curvature_bracket != zero() || !phi_independent)
            .then(|| "three-dimensional collapse did not hold".to_string());
        return Ok(Outcome {
            records: vec![r],
            failure,
        });
    }

    if let Some(raw) = &args.sphere {
        let d: OddDimension = raw.parse()?;
        let brackets = sphere_polynomial_check(d)?;
        let mut r = Record::new(
            "heat_kernel",
            "sphere_polynomial_check",
            "unit S^d, phi = t: a1 = (d-1)(t^2 - d/12), a2 = 120(d-1)(d-3)(t^4 - d t^2/2 + d(5d+2)/240)",
        )
        .input("dimension", dim_value(d));
        r.output("a1_bracket", text(brackets.a1.display_with("t")));
        r.output("a2_bracket", text(brackets.a2.display_with("t")));
        r.output("a2_constant_term", exact(&brackets.a2.coeff(0)));
        r.output("matches_expansion", Value::Bool(true));
        return Ok(Outcome::ok(vec![r]));
    }

    if args.threefold {
        let volume = args
            .volume
            .as_deref()
            .ok_or_else(|| CliError::Usage("--threefold needs --volume".into()))?;
        let total_r = args
            .total_r
            .as_deref()
            .ok_or_else(|| CliError::Usage("--threefold needs --totalR".into()))?;
        let (vol, vol_pi) = parse_pi2_quantity("volume", volume)?;
        let (tr, tr_pi) = parse_pi2_quantity("totalR", total_r)?;
        let phi = opt_exact("phi", &args.phi)?.unwrap_or_else(zero);
        let mut r = Record::new(
            "heat_kernel",
            "threefold_action_terms",
            "L^3 Vol/pi^2 + L (1/2pi^2)(-int R/12 + 8 int Phi^2), constant Phi",
        )
        .input("phi", exact(&phi))
        .input("total_r", text(total_r.trim()))
        .input("volume", text(volume.trim()));
        if vol_pi && tr_pi {
            let data = ThreeManifoldData {
                total_phi2: &vol * &phi * &phi,
                volume: vol,
                total_r: tr,
            };
            let terms = threefold_action_terms(&data, int(1));
            r.output("exact", Value::Bool(true));
            r.output("lambda1", exact(&terms.lambda1));
            r.output("lambda1_float", float(to_f64(&terms.lambda1)));
            r.output("lambda3", exact(&terms.lambda3));
            r.output("lambda3_float", float(to_f64(&terms.lambda3)));
        } else {
            let scale = |x: &Rational, pi: bool| to_f64(x) * if pi { PI * PI } else { 1.0 };
            let volume = scale(&vol, vol_pi);
            let data = ThreeManifoldData {
                volume,
                total_r: scale(&tr, tr_pi),
                total_phi2: volume * to_f64(&phi) * to_f64(&phi),
            };
            let terms = threefold_action_terms_f64(&data);
            r.output("exact", Value::Bool(false));
            r.output("lambda1_float", float(terms.lambda1));
            r.output("lambda3_float", float(terms.lambda3));
        }
        return Ok(Outcome::ok(vec![r]));
    }

    let d: OddDimension = args.dimension.as_deref().unwrap_or_default().parse()?;
    let need = |name: &str, v: &Option<String>| {
        opt_exact(name, v)?
            .ok_or_else(|| CliError::Usage(format!("explicit invariants need --{name}")))
    };
    let inv = PointwiseInvariants {
        scalar_curvature: need("scalar-curvature", &args.scalar_curvature)?,
        ric2: need("ric2", &args.ric2)?,
        riem2: need("riem2", &args.riem2)?,
    };
    let phi = opt_exact("phi", &args.phi)?.unwrap_or_else(zero);
    let grad = opt_exact("gradphi2", &args.gradphi2)?.unwrap_or_else(zero);
    let fld = ScalarFieldData::at_point(phi.clone(), grad.clone());
    let a1 = a1_density_exact(d, &inv, &fld);
    let a2 = a2_density_exact(d, &inv, &fld);
    let mut r = Record::new(
        "heat_kernel",
        "densities",
        "a1 = n(4pi)^(-d/2)(-R/12 + (d-1)phi^2), a2 = (n/180)(4pi)^(-d/2)[curvature, phi^4, R phi^2, |grad phi|^2 terms]",
    )
    .input("dimension", dim_value(d))
    .input("gradphi2", exact(&grad))
    .input("phi", exact(&phi))
    .input("ric2", exact(&inv.ric2))
    .input("riem2", exact(&inv.riem2))
    .input("scalar_curvature", exact(&inv.scalar_curvature));
    r.output("a1_coefficient", exact(&a1.coefficient));
    r.output("a1_density", float(a1.to_f64()));
    r.output("a2_coefficient", exact(&a2.coefficient));
    r.output("a2_density", float(a2.to_f64()));
    r.output("prefactor", float(heat_prefactor(d)));
    Ok(Outcome::ok(vec![r]))
}

fn qsphere_outputs<D: Deformation>(
    phi: &AlgebraElement<D::Scalar>,
    q: &D,
    r: &mut Record,
) -> Result<D::Scalar, CliError> {
    if let Some(m) = selfadjoint_violation(phi, q) {
        return Err(Error::NotSelfAdjoint {
            alpha: m.alpha,
            beta: m.beta,
            gamma: m.gamma,
        }
        .into());
    }
    let leading = action_leading(phi);
    let closed = zeta_invariant_closed(phi, q)?;
    let engine = zeta_invariant_engine(phi, q)?;
    let terms = scale_invariant_terms(phi, q)?;
    let difference = closed.clone() - engine.clone();
    r.output("hermitian", Value::Bool(true));
    r.output(
        "action_leading",
        Value::Array(
            [
                &leading.inverse_cubed,
                &leading.inverse_squared,
                &leading.inverse_first,
            ]
            .into_iter()
            .map(|c| text(c.render()))
            .collect(),
        ),
    );
    r.output("zeta_closed", text(closed.render()));
    r.output("zeta_engine", text(engine.render()));
    r.output("zeta_difference", text(difference.render()));
    r.output("scale_invariant_linear", text(terms.linear.render()));
    r.output("scale_invariant_quadratic", text(terms.quadratic.render()));
    r.output(
        "scale_invariant_commutator",
        text(terms.commutator.render()),
    );
    r.output("scale_invariant_cubic", text(terms.cubic.render()));
    if !difference.is_zero() {
        return Err(CliError::Numeric(format!(
            "zeta paths disagree: closed {} vs engine {}",
            closed.render(),
            engine.render()
        )));
    }
    Ok(closed)
}

pub fn qsphere(args: &QsphereArgs) -> Result<Outcome, CliError> {
    let raw = std::fs::read_to_string(&args.torsion).map_err(|e| {
        CliError::Invalid(format!(
            "cannot read torsion file {}: {e}",
            args.torsion.display()
        ))
    })?;
    let phi = parse_torsion_json(&raw)?;
    let echo = serde_json::to_value(torsion_to_records(&phi)).expect("records serialize");
    let mut r = Record::new(
        "qsphere",
        "action_and_zeta_invariant",
        "int|D_Phi|^-3, int|D_Phi|^-2, int|D_Phi|^-1 and zeta_{D+Phi}(0) - zeta_D(0), closed sum vs normal ordering",
    )
    .input("torsion", echo);
    if args.q.trim().eq_ignore_ascii_case("symbolic") {
        r = r.input("q", text("symbolic"));
        let symbolic = to_symbolic(&phi)?;
        qsphere_outputs(&symbolic, &SymbolicQ, &mut r)?;
    } else {
        let q = QParam::new(parse_exact("q", &args.q)?)?;
        r = r.input("q", exact(q.value()));
        let zeta: ComplexRational = qsphere_outputs(&phi, &q, &mut r)?;
        r.output("zeta_float", float(to_f64(&zeta.re)));
    }
    Ok(Outcome::ok(vec![r]))
}

pub fn report(exec: Execution) -> Outcome {
    let checks = run_all(exec, REPORT_SEED);
    let failed: Vec<u8> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.criterion)
        .collect();
    let records = checks
        .iter()
        .map(|c| {
            let mut r = Record::new(
                "verify",
                "run_all",
                "cross-validation of exact identities and oracles",
            )
            .input("criterion", Value::from(c.criterion))
            .input("name", text(c.name))
            .input("seed", Value::from(REPORT_SEED));
            r.output("passed", Value::Bool(c.passed));
            for (k, v) in &c.details {
                r.output(k, field(v));
            }
            r
        })
        .collect();
    let failure = (!failed.is_empty()).then(|| format!("checks failed for criteria {failed:?}"));
    Outcome { records, failure }
}
