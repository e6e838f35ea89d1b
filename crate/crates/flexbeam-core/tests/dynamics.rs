use approx::assert_abs_diff_eq;
use flexbeam_core::cert::{lyapunov_v_modal, midpoint_dissipation};
use flexbeam_core::dynamics::{
    assemble, feedback, project_profile, simulate, spectral_abscissa, ClosedLoopSystem,
    ModalState, Propagator,
};
use flexbeam_core::model::{Actuator, BeamSystem};
use flexbeam_core::spectral::ModalBasis;
use flexbeam_core::Error;
use nalgebra::{DMatrix, DVector};

fn undamped(omegas: &[f64]) -> ClosedLoopSystem {
    let n = omegas.len();
    ClosedLoopSystem {
        omega: DVector::from_row_slice(omegas),
        b: DMatrix::zeros(n, 0),
        c: DVector::zeros(n),
        alphas: Vec::new(),
        alpha0: 0.0,
        d: DMatrix::zeros(n, n),
    }
}

fn damped_single(omega: f64, d: f64) -> ClosedLoopSystem {
    ClosedLoopSystem {
        omega: DVector::from_row_slice(&[omega]),
        b: DMatrix::zeros(1, 0),
        c: DVector::from_row_slice(&[1.0]),
        alphas: Vec::new(),
        alpha0: d,
        d: DMatrix::from_row_slice(1, 1, &[d]),
    }
}

fn test_system() -> BeamSystem {
    BeamSystem {
        e: 1.0,
        i: 1.0,
        rho: 1.0,
        l: 1.0,
        l0: 1.0 / 3.0,
        m: 0.1,
        kappa: 1.0,
        alpha0: 0.0,
    }
}

#[test]
fn midpoint_conserves_energy_single_mode() {
    // undamped oscillator, ω = 1, dt = 0.01, 10⁴ steps: the midpoint rule
    // conserves V exactly; the refined solve keeps the drift at a few ulps
    let sys = undamped(&[1.0]);
    let prop = Propagator::new(&sys, 0.01).unwrap();
    let mut state = ModalState::new(
        DVector::from_row_slice(&[1.0]),
        DVector::from_row_slice(&[0.0]),
        0.0,
    );
    let v0 = lyapunov_v_modal(&sys, &state);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        state = prop.step(&state).unwrap();
        let v = lyapunov_v_modal(&sys, &state);
        worst = worst.max((v / v0 - 1.0).abs());
    }
    assert!(worst < 1e-12, "energy drift {worst:e} exceeds 1e-12");
}

#[test]
fn midpoint_conserves_energy_five_modes() {
    let sys = undamped(&[1.0, 2.3, 7.7, 15.1, 33.3]);
    let prop = Propagator::new(&sys, 0.005).unwrap();
    let q = DVector::from_row_slice(&[1.0, 0.5, -0.25, 0.1, 0.05]);
    let qd = DVector::from_row_slice(&[0.0, 1.0, 0.5, -1.0, 0.2]);
    let mut state = ModalState::new(q, qd, 0.0);
    let v0 = lyapunov_v_modal(&sys, &state);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        state = prop.step(&state).unwrap();
        let v = lyapunov_v_modal(&sys, &state);
        worst = worst.max((v / v0 - 1.0).abs());
    }
    assert!(worst < 1e-12, "energy drift {worst:e} exceeds 1e-12");
}

#[test]
fn damped_mode_matches_analytic_eigenvalues() {
    // q̈ + 2ζ q̇ + q = 0 with 2ζ = 0.2: λ = -0.1 ± i√(1 - 0.01)
    let sys = damped_single(1.0, 0.2);
    let sp = spectral_abscissa(&sys).unwrap();
    assert_abs_diff_eq!(sp.abscissa, -0.1, epsilon = 1e-12);
    let nu = (1.0f64 - 0.01).sqrt();
    assert_eq!(sp.eigenvalues.len(), 2);
    assert_abs_diff_eq!(sp.eigenvalues[0].im.abs(), nu, epsilon = 1e-12);
}

#[test]
fn undamped_abscissa_is_zero_to_machine_precision() {
    let sys = undamped(&[1.0, 4.0, 9.0, 16.0]);
    let sp = spectral_abscissa(&sys).unwrap();
    assert!(
        sp.abscissa.abs() < 1e-13,
        "abscissa {:e} should vanish",
        sp.abscissa
    );
}

#[test]
fn midpoint_dissipation_identity_is_exact() {
    // V(x⁺) - V(x⁻) = -dt q̇_midᵀ D q̇_mid holds exactly for the midpoint
    // rule; check it to roundoff on a genuinely coupled system
    let sys_params = test_system();
    let basis = ModalBasis::build(&sys_params, 20.0, 0.02, Some(5)).unwrap();
    let act = Actuator {
        center: 0.62,
        width: 0.24,
        height: 1.0,
        alpha: 0.6,
    };
    let sys = assemble(&basis, &[act], 0.8, 5).unwrap();
    let prop = Propagator::new(&sys, 0.01).unwrap();
    let q = DVector::from_row_slice(&[1.0, -0.4, 0.2, 0.3, -0.1]);
    let qd = DVector::from_row_slice(&[0.0, 0.5, -0.5, 0.25, 0.75]);
    let mut state = ModalState::new(q, qd, 0.0);
    for _ in 0..50 {
        let next = prop.step(&state).unwrap();
        let dv = lyapunov_v_modal(&sys, &next) - lyapunov_v_modal(&sys, &state);
        let predicted = -midpoint_dissipation(&sys, &state, &next);
        assert_abs_diff_eq!(dv, predicted, epsilon = 1e-12);
        state = next;
    }
}

#[test]
fn energy_never_increases_under_damping() {
    let sys = damped_single(2.0, 0.3);
    let traj = simulate(
        &sys,
        &ModalState::new(
            DVector::from_row_slice(&[1.0]),
            DVector::from_row_slice(&[0.0]),
            0.0,
        ),
        50.0,
        0.01,
    )
    .unwrap();
    let v0 = lyapunov_v_modal(&sys, &traj.states[0]);
    let mut prev = v0;
    for st in &traj.states[1..] {
        let v = lyapunov_v_modal(&sys, st);
        assert!(v <= prev + 1e-10 * v0, "V increased at t = {}", st.t);
        prev = v;
    }
}

#[test]
fn midpoint_error_is_second_order() {
    // exact solution of q̈ + 0.2 q̇ + q = 0, q(0) = 1, q̇(0) = 0:
    // q(t) = e^{-0.1 t} (cos νt + (0.1/ν) sin νt), ν = √0.99
    let sys = damped_single(1.0, 0.2);
    let exact = |t: f64| {
        let nu = 0.99f64.sqrt();
        (-0.1 * t).exp() * ((nu * t).cos() + 0.1 / nu * (nu * t).sin())
    };
    let t_end = 2.0;
    let mut errors = Vec::new();
    for &dt in &[0.02, 0.01, 0.005] {
        let traj = simulate(
            &sys,
            &ModalState::new(
                DVector::from_row_slice(&[1.0]),
                DVector::from_row_slice(&[0.0]),
                0.0,
            ),
            t_end,
            dt,
        )
        .unwrap();
        let last = traj.states.last().unwrap();
        errors.push((last.q[0] - exact(last.t)).abs());
    }
    let r1 = errors[0] / errors[1];
    let r2 = errors[1] / errors[2];
    assert!(
        (r1 - 4.0).abs() < 0.8 && (r2 - 4.0).abs() < 0.8,
        "halving dt should quarter the error: ratios {r1:.3}, {r2:.3}"
    );
}

#[test]
fn assemble_validates_inputs() {
    let basis = ModalBasis::build(&test_system(), 20.0, 0.02, Some(5)).unwrap();
    assert!(matches!(
        assemble(&basis, &[], 0.5, 9),
        Err(Error::NotEnoughModes {
            requested: 9,
            available: 5
        })
    ));
    // actuator support swallowing the shaker position is rejected
    let bad = Actuator {
        center: 1.0 / 3.0,
        width: 0.2,
        height: 1.0,
        alpha: 0.5,
    };
    assert!(matches!(
        assemble(&basis, &[bad], 0.5, 3),
        Err(Error::InvalidSystem(_))
    ));
    assert!(matches!(
        assemble(&basis, &[], -1.0, 3),
        Err(Error::InvalidSystem(_))
    ));
    assert!(matches!(
        assemble(&basis, &[], 0.5, 0),
        Err(Error::InvalidSystem(_))
    ));
}

#[test]
fn feedback_signs_and_magnitudes() {
    let mut sys = undamped(&[1.0]);
    sys.c = DVector::from_row_slice(&[2.0]);
    sys.alpha0 = 0.5;
    sys.b = DMatrix::from_row_slice(1, 1, &[4.0]);
    sys.alphas = vec![0.25];
    let qdot = DVector::from_row_slice(&[3.0]);
    let u = feedback(&sys, &qdot);
    assert_eq!(u.len(), 2);
    assert_abs_diff_eq!(u[0], -0.25 * 4.0 * 3.0, epsilon = 1e-15); // moment
    assert_abs_diff_eq!(u[1], -0.5 * 2.0 * 3.0, epsilon = 1e-15); // force
}

#[test]
fn project_profile_recovers_single_mode() {
    let basis = ModalBasis::build(&test_system(), 20.0, 0.02, Some(5)).unwrap();
    let target = basis.modes[1].clone();
    let proj = project_profile(&basis, 5, &|x| target.eval(x), &|_| 0.0).unwrap();
    for i in 0..5 {
        let expect = if i == 1 { 1.0 } else { 0.0 };
        assert_abs_diff_eq!(proj.q[i], expect, epsilon = 1e-9);
        assert_abs_diff_eq!(proj.qdot[i], 0.0, epsilon = 1e-12);
    }
    assert!(proj.residual_w < 1e-6, "residual {}", proj.residual_w);
    assert!(proj.residual_v < 1e-12);
}

#[test]
fn propagator_rejects_bad_step() {
    let sys = undamped(&[1.0]);
    assert!(matches!(
        Propagator::new(&sys, 0.0),
        Err(Error::InvalidSystem(_))
    ));
    assert!(matches!(
        Propagator::new(&sys, f64::NAN),
        Err(Error::InvalidSystem(_))
    ));
}

#[test]
fn simulate_sampling_layout() {
    let sys = undamped(&[1.0]);
    let x0 = ModalState::new(
        DVector::from_row_slice(&[1.0]),
        DVector::from_row_slice(&[0.5]),
        0.0,
    );
    let traj = simulate(&sys, &x0, 0.1, 0.01).unwrap();
    assert_eq!(traj.states.len(), 11);
    assert_eq!(traj.states[0], x0); // initial sample is exact
    assert_abs_diff_eq!(traj.states[10].t, 0.1, epsilon = 1e-12);
}
