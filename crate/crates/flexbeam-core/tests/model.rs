use approx::assert_abs_diff_eq;
use flexbeam_core::model::{
    actuator_profile, integrate, validate_system, Actuator, BeamSystem, QuadratureRule, Violation,
};
use proptest::prelude::*;

fn good_system() -> BeamSystem {
    BeamSystem {
        e: 2.0,
        i: 0.5,
        rho: 1.3,
        l: 2.0,
        l0: 0.7,
        m: 0.4,
        kappa: 3.0,
        alpha0: 0.25,
    }
}

fn good_actuator() -> Actuator {
    Actuator {
        center: 1.4,
        width: 0.3,
        height: 1.5,
        alpha: 0.4,
    }
}

#[test]
fn valid_configuration_passes() {
    let report = validate_system(&good_system(), &[good_actuator()]);
    assert!(report.is_valid(), "{}", report.describe());
}

#[test]
fn each_violation_is_detected() {
    let mut s = good_system();
    s.e = 0.0;
    assert!(validate_system(&s, &[])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::NonPositive { .. })));

    let mut s = good_system();
    s.alpha0 = -0.5;
    assert!(validate_system(&s, &[])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::NegativeGain { .. })));

    let mut s = good_system();
    s.l0 = 2.5; // beyond the right support
    assert!(validate_system(&s, &[])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::L0OutsideBeam { .. })));

    let mut s = good_system();
    s.rho = f64::NAN;
    assert!(validate_system(&s, &[])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::NotFinite { .. })));

    // actuator reaching the support
    let mut a = good_actuator();
    a.center = 1.95;
    assert!(validate_system(&good_system(), &[a])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::SupportOutsideBeam { .. })));

    // actuator patch covering the shaker position
    let mut a = good_actuator();
    a.center = 0.75;
    assert!(validate_system(&good_system(), &[a])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::SupportContainsL0 { .. })));

    let mut a = good_actuator();
    a.width = 0.0;
    assert!(validate_system(&good_system(), &[a])
        .violations
        .iter()
        .any(|v| matches!(v, Violation::ActuatorNonPositive { .. })));
}

#[test]
fn describe_is_nonempty_on_failure() {
    let mut s = good_system();
    s.kappa = -1.0;
    let report = validate_system(&s, &[]);
    assert!(!report.is_valid());
    assert!(!report.describe().is_empty());
}

#[test]
fn raised_cosine_profile_shape() {
    let a = good_actuator();
    // peak at the center, zero at and beyond the edges
    assert_abs_diff_eq!(actuator_profile(&a, a.center), a.height, epsilon = 1e-15);
    assert_eq!(actuator_profile(&a, a.lo()), 0.0);
    assert_eq!(actuator_profile(&a, a.hi()), 0.0);
    assert_eq!(actuator_profile(&a, a.lo() - 0.1), 0.0);
    assert_eq!(actuator_profile(&a, a.hi() + 0.1), 0.0);
    // C¹ roll-off: still tiny just inside the edge
    assert!(actuator_profile(&a, a.lo() + 1e-6) < 1e-9);
}

#[test]
fn profile_mass_matches_closed_form() {
    // ∫ χ dx over the support of the raised cosine is height · width / 2
    let a = good_actuator();
    let rule = QuadratureRule::from_breakpoints(&[a.lo(), a.hi()], 16, 4);
    let mass = integrate(|x| actuator_profile(&a, x), &rule);
    assert_abs_diff_eq!(mass, a.height * a.width / 2.0, epsilon = 1e-13);
}

#[test]
fn gauss_legendre_matches_reference_nodes() {
    // reference values for the 16-point rule on [-1, 1]
    let rule = QuadratureRule::from_breakpoints(&[-1.0, 1.0], 16, 1);
    assert_eq!(rule.nodes.len(), 16);
    assert_abs_diff_eq!(rule.nodes[0], -0.9894009349916499, epsilon = 1e-14);
    assert_abs_diff_eq!(rule.weights[0], 0.027152459411754037, epsilon = 1e-14);
    assert_abs_diff_eq!(rule.nodes[8], 0.09501250983763745, epsilon = 1e-14);
    assert_abs_diff_eq!(rule.weights[8], 0.18945061045506859, epsilon = 1e-14);
    let total: f64 = rule.weights.iter().sum();
    assert_abs_diff_eq!(total, 2.0, epsilon = 1e-13);
}

#[test]
fn quadrature_is_exact_for_high_degree_polynomials() {
    // a 16-point Gauss rule integrates degree ≤ 31 exactly
    let rule = QuadratureRule::from_breakpoints(&[0.0, 1.0], 16, 1);
    for k in [0usize, 1, 5, 16, 25, 31] {
        let val = integrate(|x| x.powi(k as i32), &rule);
        let exact = 1.0 / (k as f64 + 1.0);
        assert!(
            (val - exact).abs() < 1e-14 * exact.max(1.0),
            "x^{k}: {val} vs {exact}"
        );
    }
}

#[test]
fn quadrature_handles_oscillatory_integrands() {
    let pi = core::f64::consts::PI;
    let refine = QuadratureRule::refine_for(pi, 40.0);
    let rule = QuadratureRule::from_breakpoints(&[0.0, pi], 16, refine);
    // ∫₀^π sin(40x) sin(41x) dx = 0 by orthogonality
    let v = integrate(|x| (40.0 * x).sin() * (41.0 * x).sin(), &rule);
    assert!(v.abs() < 1e-12, "orthogonality defect {v:e}");
    // ∫₀^π sin²(40x) dx = π/2
    let v2 = integrate(|x| (40.0 * x).sin().powi(2), &rule);
    assert_abs_diff_eq!(v2, pi / 2.0, epsilon = 1e-12);
}

#[test]
fn refine_for_scales_with_wavenumber() {
    assert_eq!(QuadratureRule::refine_for(1.0, 40.0), 7); // ceil(40 / 2π)
    assert_eq!(QuadratureRule::refine_for(1.0, 0.1), 1);
    assert_eq!(QuadratureRule::refine_for(2.0, 40.0), 13);
}

#[test]
fn breakpoints_are_sorted_and_deduplicated() {
    let rule = QuadratureRule::from_breakpoints(&[1.0, 0.0, 0.5, 0.5, 1.0], 8, 2);
    assert_eq!(rule.breakpoints, vec![0.0, 0.5, 1.0]);
    assert_abs_diff_eq!(rule.total_span(), 1.0, epsilon = 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn profile_stays_within_bounds(
        center in 0.2f64..0.8,
        width in 0.01f64..0.2,
        height in 0.1f64..5.0,
        x in -0.5f64..1.5,
    ) {
        let a = Actuator { center, width, height, alpha: 0.0 };
        let v = actuator_profile(&a, x);
        prop_assert!(v >= 0.0);
        prop_assert!(v <= height * (1.0 + 1e-12));
    }

    #[test]
    fn profile_is_symmetric_about_center(
        center in 0.3f64..0.7,
        width in 0.01f64..0.2,
        height in 0.1f64..5.0,
        u in 0.0f64..1.0,
    ) {
        let a = Actuator { center, width, height, alpha: 0.0 };
        let off = (u - 0.5) * width;
        let left = actuator_profile(&a, center - off);
        let right = actuator_profile(&a, center + off);
        prop_assert!((left - right).abs() <= 1e-12 * height);
    }

    #[test]
    fn nonpositive_parameters_never_validate(
        which in 0usize..6,
        bad in -2.0f64..0.0,
    ) {
        let mut s = good_system();
        match which {
            0 => s.e = bad,
            1 => s.i = bad,
            2 => s.rho = bad,
            3 => s.l = bad,
            4 => s.m = bad,
            _ => s.kappa = bad,
        }
        prop_assert!(!validate_system(&s, &[]).is_valid());
    }

    #[test]
    fn quadrature_linear_functions_exact(a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let rule = QuadratureRule::from_breakpoints(&[0.0, 0.4, 1.0], 8, 3);
        let val = integrate(|x| a * x + b, &rule);
        let exact = a / 2.0 + b;
        prop_assert!((val - exact).abs() < 1e-13 * (1.0 + exact.abs()));
    }
}
