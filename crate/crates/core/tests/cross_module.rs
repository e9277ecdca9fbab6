use spectral_core::heat_kernel::sphere_polynomial_check;
use spectral_core::par::Execution;
use spectral_core::qsphere::{
    parse_torsion_json, to_symbolic, zeta_invariant_closed, zeta_invariant_engine, ComplexRational,
    QParam, Scalar, SymbolicQ,
};
use spectral_core::ratpoly::{int, rat, verify_lemma};
use spectral_core::sphere_action::{
    direct_action, expansion_t_polynomials, lattice_action, sweep, ActionRequest, CutoffModel,
    SweepPoint, DEFAULT_MAX_TERMS, DEFAULT_TAIL_EPSILON,
};
use spectral_core::verify::{run_all, REPORT_SEED};
use spectral_core::OddDimension;

fn odd(d: i64) -> OddDimension {
    OddDimension::new(d).unwrap()
}

#[test]
fn heat_brackets_share_t_polynomials_with_the_sphere_expansion() {
    for d in [3, 5, 7, 9, 11] {
        let brackets = sphere_polynomial_check(odd(d)).unwrap();
        let (quadratic, quartic) = expansion_t_polynomials(odd(d));
        assert_eq!(brackets.a1, quadratic.scale(&int(d - 1)));
        assert_eq!(brackets.a2, quartic.scale(&int(120 * (d - 1) * (d - 3))));
        assert!(verify_lemma(odd(d)).passed());
    }
}

#[test]
fn folded_and_lattice_sums_agree() {
    for (d, t, lambda) in [(3, 0.25, 7.0), (5, -0.5, 12.0), (9, 0.75, 15.0)] {
        let req = ActionRequest::new(odd(d), t, lambda, CutoffModel::Bump).unwrap();
        let folded = direct_action(&req).unwrap().value;
        let lattice = lattice_action(&req).unwrap().value;
        assert!(
            ((folded - lattice) / folded).abs() < 1e-12,
            "d={d}: {folded} vs {lattice}"
        );
    }
}

#[test]
fn execution_modes_are_bit_identical() {
    let points: Vec<SweepPoint> = [3, 5, 7]
        .iter()
        .flat_map(|&d| {
            [0.0, 0.3].into_iter().map(move |t| SweepPoint {
                dim: odd(d),
                t,
                lambda: 15.0,
            })
        })
        .collect();
    let run = |exec| {
        sweep(
            &points,
            CutoffModel::Gaussian,
            DEFAULT_TAIL_EPSILON,
            DEFAULT_MAX_TERMS,
            exec,
        )
        .unwrap()
    };
    assert_eq!(run(Execution::Parallel), run(Execution::Sequential));
    assert_eq!(
        run_all(Execution::Parallel, REPORT_SEED),
        run_all(Execution::Sequential, REPORT_SEED)
    );
}

#[test]
fn torsion_file_to_zeta_both_modes() {
    let text = r#"[
        {"alpha": 1, "beta": 1, "gamma": 0, "re": "1/2", "im": "0"},
        {"alpha": -1, "beta": 0, "gamma": 1, "re": "1", "im": "0"},
        {"alpha": 0, "beta": 1, "gamma": 1, "re": "-3/4"}
    ]"#;
    let phi = parse_torsion_json(text).unwrap();
    let q = QParam::new(rat(1, 2)).unwrap();
    let numeric = zeta_invariant_closed(&phi, &q).unwrap();
    assert_eq!(numeric, zeta_invariant_engine(&phi, &q).unwrap());
    assert!(numeric.is_real());

    // the q-weighted pair is hermitian at q = 1/2 only
    assert!(zeta_invariant_closed(&to_symbolic(&phi).unwrap(), &SymbolicQ).is_err());

    let flat = parse_torsion_json(
        r#"[{"alpha": 2, "beta": 0, "gamma": 0, "re": "1"}, {"alpha": -2, "beta": 0, "gamma": 0, "re": "1"},
            {"alpha": 0, "beta": 1, "gamma": 1, "re": "-3/4"}]"#,
    )
    .unwrap();
    let symbolic = to_symbolic(&flat).unwrap();
    let closed = zeta_invariant_closed(&symbolic, &SymbolicQ).unwrap();
    assert_eq!(
        closed,
        zeta_invariant_engine(&symbolic, &SymbolicQ).unwrap()
    );
    let numeric = zeta_invariant_closed(&flat, &q).unwrap();
    assert_eq!(
        closed.eval(&rat(1, 2)).map(ComplexRational::from_rational),
        Some(numeric)
    );
}
