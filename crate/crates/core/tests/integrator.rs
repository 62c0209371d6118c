use giantqed::generator::{LindbladGenerator, Rhs};
use giantqed::giant::{giant_population_analytic, upsilon, GiantModel, GiantParams};
use giantqed::integrator::{
    check_linearity, convergence_order, integrate, ConvergenceOrder, IntegratorConfig, Mode, SampleGrid,
};
use giantqed::observables::Observable;
use giantqed::pair::{double_excited_state, PairModel, PairParams};
use giantqed::quantum::basis::{qubit_lowering, ATOM_LABELS};
use giantqed::quantum::{ComplexMatrix, DensityMatrix, C64};
use giantqed::Error;
use std::f64::consts::PI;

fn decay_two_level(gamma: f64) -> LindbladGenerator {
    LindbladGenerator::new(&ComplexMatrix::zeros(2)).dissipator(gamma, &qubit_lowering())
}

fn excited() -> DensityMatrix {
    DensityMatrix::basis_state(1, &ATOM_LABELS).unwrap()
}

#[test]
fn two_level_decay_hits_exponential() {
    let rhs = decay_two_level(1.0);
    for cfg in [
        IntegratorConfig::adaptive(1.0, SampleGrid::Uniform(10)),
        IntegratorConfig::fixed(1e-3, 1.0, SampleGrid::Uniform(10)),
    ] {
        let ts = integrate(&rhs, &excited(), &cfg, &[Observable::Rr]).unwrap();
        let last = *ts.column(Observable::Rr).unwrap().last().unwrap();
        assert!((last - (-1.0f64).exp()).abs() < 1e-9, "{:?}: {last}", cfg.mode);
        assert_eq!(ts.len(), 11);
    }
}

#[test]
fn decoupled_giant_atom_is_frozen() {
    let m = GiantModel::new(&GiantParams { gamma: 0.0, upsilon: C64::new(0.0, 0.0) }).unwrap();
    let cfg = IntegratorConfig::adaptive(500.0, SampleGrid::Uniform(50));
    let ts = integrate(&m, &excited(), &cfg, &[Observable::Rr]).unwrap();
    assert!(ts.column(Observable::Rr).unwrap().iter().all(|&v| v == 1.0));
}

#[test]
fn giant_atom_matches_closed_form_at_every_scenario_phase() {
    for phi in [40.0 * PI, 40.5 * PI, 41.0 * PI, 39.5 * PI] {
        let pp = PairParams::default().with_phi(phi);
        let gp = GiantParams::from_pair(&pp).unwrap();
        let m = GiantModel::new(&gp).unwrap();
        let cfg = IntegratorConfig::adaptive(2000.0, SampleGrid::Uniform(2000));
        let ts = integrate(&m, &excited(), &cfg, &[Observable::Rr]).unwrap();
        let dev = ts
            .times()
            .iter()
            .zip(ts.column(Observable::Rr).unwrap())
            .map(|(&t, &v)| (v - giant_population_analytic(&gp, t, 1.0)).abs())
            .fold(0.0, f64::max);
        assert!(dev < 1e-9, "phi/pi = {}: {dev:e}", phi / PI);
    }
}

#[test]
fn rk4_order_on_two_level_decay() {
    let rhs = decay_two_level(1.0);
    let p = convergence_order(&rhs, &excited(), 2.0, 0.1).unwrap().value().unwrap();
    assert!((p - 4.0).abs() < 0.3, "{p}");
}

#[test]
fn zero_rhs_order_is_saturated() {
    let rhs = LindbladGenerator::new(&ComplexMatrix::zeros(2));
    assert_eq!(convergence_order(&rhs, &excited(), 1.0, 0.1).unwrap(), ConvergenceOrder::Saturated);
}

#[test]
fn rk4_order_on_pair_model() {
    let m = PairModel::new(&PairParams::default()).unwrap();
    let p = convergence_order(&m, &double_excited_state(), 1.0, 0.02).unwrap().value().unwrap();
    assert!(p >= 3.7, "{p}");
}

#[test]
fn nonlinear_rhs_is_rejected() {
    let rhs = (2usize, |r: &ComplexMatrix| r.matmul(r));
    assert!(matches!(check_linearity(&rhs), Err(Error::NonLinearRhs(_))));
    let cfg = IntegratorConfig::adaptive(1.0, SampleGrid::Uniform(2));
    assert!(matches!(integrate(&rhs, &excited(), &cfg, &[]), Err(Error::NonLinearRhs(_))));
}

#[test]
fn step_limit_is_reported() {
    let rhs = decay_two_level(1.0);
    let cfg = IntegratorConfig {
        max_steps: 5,
        ..IntegratorConfig::fixed(1e-3, 1.0, SampleGrid::Uniform(1))
    };
    assert!(matches!(integrate(&rhs, &excited(), &cfg, &[]), Err(Error::StepLimit { max_steps: 5, .. })));
}

#[test]
fn step_underflow_is_reported() {
    // a stiff decay with an absurd tolerance forces steps below the floor
    let rhs = decay_two_level(1e14);
    let cfg = IntegratorConfig {
        rel_tol: 1e-300,
        abs_tol: 1e-300,
        ..IntegratorConfig::adaptive(1.0, SampleGrid::Uniform(1))
    };
    assert!(matches!(integrate(&rhs, &excited(), &cfg, &[]), Err(Error::StepUnderflow { .. })));
}

#[test]
fn physicality_breach_names_the_time() {
    // pumping the ground population out with no return channel drives ρ_gg negative
    let rhs = (2usize, |r: &ComplexMatrix| {
        let mut out = ComplexMatrix::zeros(2);
        out[(0, 0)] = -r[(1, 1)] - C64::new(1.0, 0.0) * r.trace();
        out[(1, 1)] = -out[(0, 0)];
        out
    });
    let cfg = IntegratorConfig::fixed(1e-3, 5.0, SampleGrid::Uniform(50));
    match integrate(&rhs, &DensityMatrix::basis_state(0, &ATOM_LABELS).unwrap(), &cfg, &[]) {
        Err(Error::PhysicalityBreach { t, min_eigenvalue }) => {
            assert!(t > 0.0 && t < 5.0 && min_eigenvalue < -1e-6, "{t} {min_eigenvalue}");
        }
        other => panic!("expected breach, got {other:?}"),
    }
}

#[test]
fn config_problems_are_listed_exhaustively() {
    let cfg = IntegratorConfig {
        mode: Mode::Fixed,
        dt: -1.0,
        t_end: 0.0,
        samples: SampleGrid::Explicit(vec![2.0, 1.0]),
        max_steps: 0,
        ..IntegratorConfig::default()
    };
    assert!(cfg.problems().len() >= 4, "{:?}", cfg.problems());
}

#[test]
fn states_are_kept_on_request() {
    let rhs = decay_two_level(1.0);
    let cfg = IntegratorConfig {
        keep_states: true,
        ..IntegratorConfig::adaptive(1.0, SampleGrid::Explicit(vec![0.0, 0.25, 0.8]))
    };
    let ts = integrate(&rhs, &excited(), &cfg, &[]).unwrap();
    let states = ts.states().unwrap();
    assert_eq!(states.len(), 3);
    assert!((states[1].population(1) - (-0.25f64).exp()).abs() < 1e-9);
    assert_eq!(ts.diagnostics().steps.len(), 3);
}

#[test]
fn upsilon_vanishes_at_odd_multiples() {
    let y = upsilon(&PairParams::default().with_phi(41.0 * PI)).unwrap();
    assert!(y.norm() < 1e-15);
}

#[test]
fn rhs_trait_is_object_safe() {
    let m: Box<dyn Rhs> = Box::new(decay_two_level(1.0));
    assert_eq!(m.dim(), 2);
}
