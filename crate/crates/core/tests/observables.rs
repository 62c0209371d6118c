use giantqed::integrator::{integrate, IntegratorConfig, SampleGrid, TimeSeries};
use giantqed::observables::*;
use giantqed::pair::{double_excited_state, dressed_state, ground_state, PairModel, PairParams};
use giantqed::quantum::basis::{self, GG, GR, PAIR_LABELS, RG, RR};
use giantqed::quantum::{ComplexMatrix, DensityMatrix, C64};
use giantqed::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn mix(weights: &[(usize, f64)]) -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(4);
    for &(i, w) in weights {
        m[(i, i)] = c(w);
    }
    DensityMatrix::pair(m).unwrap()
}

fn random_amplitudes(rng: &mut ChaCha8Rng) -> [C64; 4] {
    let mut a = [C64::new(0.0, 0.0); 4];
    for z in a.iter_mut() {
        *z = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    }
    let n = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    a.map(|z| z / n)
}

fn random_unitary(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    // exp of a random Hermitian generator via its eigenbasis
    let h = ComplexMatrix::from_fn(2, |_, _| C64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))).hermitian_part();
    let eig = giantqed::quantum::linalg::hermitian_eigen(&h, "unitary").unwrap();
    let phases: Vec<C64> = eig.values.iter().map(|&v| C64::from_polar(1.0, v)).collect();
    eig.vectors.matmul(&ComplexMatrix::diag(&phases)).matmul(&eig.vectors.adjoint())
}

#[test]
fn concurrence_examples() {
    let bell = dressed_state(1.0);
    assert!((concurrence(&bell).unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(concurrence(&ground_state()).unwrap(), 0.0);
    let psi = [c(0.6), c(0.0), c(0.0), c(0.8)];
    let s = DensityMatrix::pure(&psi, &PAIR_LABELS).unwrap();
    // 2|a·d − b·c| with a = 0.6, d = 0.8
    assert!((concurrence(&s).unwrap() - 0.96).abs() < 1e-12);
}

#[test]
fn pure_state_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..1000 {
        let a = random_amplitudes(&mut rng);
        // amplitudes in product order: a=gg, b=r1g2, c=g1r2, d=rr
        let want = 2.0 * (a[GG] * a[RR] - a[RG] * a[GR]).norm();
        let s = DensityMatrix::pure(&a, &PAIR_LABELS).unwrap();
        let got = concurrence(&s).unwrap();
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }
}

#[test]
fn local_unitary_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let a = random_amplitudes(&mut rng);
        let b = random_amplitudes(&mut rng);
        let mut m = ComplexMatrix::outer(&a, &a).scale_real(0.7);
        m.add_scaled(0.3, &ComplexMatrix::outer(&b, &b));
        let rho = DensityMatrix::pair(m).unwrap();
        let u1 = random_unitary(&mut rng);
        let u2 = random_unitary(&mut rng);
        // the basis index is a1 + 2·a2, so atom 2 is the outer Kronecker factor
        let u = u2.kron(&u1);
        let rotated = DensityMatrix::pair(u.matmul(rho.matrix()).matmul(&u.adjoint())).unwrap();
        let d = (concurrence(&rotated).unwrap() - concurrence(&rho).unwrap()).abs();
        assert!(d < 1e-9, "{d:e}");
    }
}

#[test]
fn spectral_route_agrees_and_clamp_is_idle() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let a = ComplexMatrix::from_fn(4, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let m = a.matmul(&a.adjoint());
        let rho = DensityMatrix::pair(m.scale_real(1.0 / m.trace().re).hermitian_part()).unwrap();
        let l = wootters_lambdas(&rho).unwrap();
        assert!(l[0] - l[1] - l[2] - l[3] <= 1.0 + 1e-9);
        let d = (concurrence(&rho).unwrap() - concurrence_spectral(&rho).unwrap()).abs();
        assert!(d < 1e-7, "{d:e}");
    }
}

#[test]
fn g2_examples() {
    assert_eq!(g2(&double_excited_state()).unwrap(), Some(1.0));
    assert_eq!(g2(&mix(&[(RG, 0.5), (GR, 0.5)])).unwrap(), Some(0.0));
    assert_eq!(g2(&mix(&[(RR, 0.5), (GG, 0.5)])).unwrap(), Some(2.0));
    assert_eq!(g2(&ground_state()).unwrap(), None);
}

#[test]
fn g2_is_symmetric_under_atom_swap() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let swap = [GG, GR, RG, RR];
    for _ in 0..200 {
        let a = random_amplitudes(&mut rng);
        let rho = DensityMatrix::pure(&a, &PAIR_LABELS).unwrap();
        let swapped = ComplexMatrix::from_fn(4, |i, j| rho.matrix()[(swap[i], swap[j])]);
        let s = DensityMatrix::pair(swapped).unwrap();
        let (x, y) = (g2(&rho).unwrap().unwrap(), g2(&s).unwrap().unwrap());
        assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
    }
}

#[test]
fn dressed_examples() {
    let d = dressed_populations(&dressed_state(1.0)).unwrap();
    assert!((d.plus - 1.0).abs() < 1e-15 && d.minus.abs() < 1e-15 && d.rho_r_plus.norm() == 0.0);
    let d = dressed_populations(&mix(&[(RG, 0.5), (GR, 0.5)])).unwrap();
    assert_eq!((d.plus, d.minus), (0.5, 0.5));
    let d = dressed_populations(&dressed_state(-1.0)).unwrap();
    assert!(d.plus.abs() < 1e-15 && (d.minus - 1.0).abs() < 1e-15);
}

#[test]
fn observable_set_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let a = random_amplitudes(&mut rng);
        let s = ObservableSet::of(&DensityMatrix::pure(&a, &PAIR_LABELS).unwrap()).unwrap();
        let p = &s.populations;
        assert!((p["gg"] + p["r1g2"] + p["g1r2"] + p["rr"] - 1.0).abs() < 1e-8);
        assert!((p["plus"] + p["minus"] - p["r1g2"] - p["g1r2"]).abs() < 1e-10);
        assert!((0.0..=1.0).contains(&s.concurrence));
    }
}

#[test]
fn observable_names_round_trip() {
    for o in Observable::ALL {
        assert_eq!(o.name().parse::<Observable>().unwrap(), o);
    }
    assert_eq!("C_at".parse::<Observable>().unwrap(), Observable::Concurrence);
    assert!(matches!("nope".parse::<Observable>(), Err(Error::UnknownObservable(_))));
}

const DRESSED: [Observable; 5] =
    [Observable::Minus, Observable::Plus, Observable::Rr, Observable::ReRhoRPlus, Observable::ImRhoRPlus];

fn fine_trajectory(p: &PairParams, rho0: &DensityMatrix, t_end: f64, dt: f64) -> TimeSeries {
    let model = PairModel::new(p).unwrap();
    let n = (t_end / dt).round() as usize;
    let cfg = IntegratorConfig::fixed(dt, t_end, SampleGrid::Uniform(n));
    integrate(&model, rho0, &cfg, &DRESSED).unwrap()
}

#[test]
fn dressed_check_on_constant_ground_state() {
    let times: Vec<f64> = (0..5).map(|k| k as f64 * 0.1).collect();
    let col = |v: f64| vec![v; 5];
    let ts = TimeSeries::from_columns(
        times,
        vec![
            (Observable::Minus, col(0.0)),
            (Observable::Plus, col(0.0)),
            (Observable::Rr, col(0.0)),
            (Observable::ReRhoRPlus, col(0.0)),
            (Observable::ImRhoRPlus, col(0.0)),
        ],
    )
    .unwrap();
    assert_eq!(dressed_rate_check(&PairParams::default(), &ts).unwrap().max(), 0.0);
}

#[test]
fn dressed_check_on_decoupled_dark_state() {
    let p = PairParams { omega_c: c(0.0), ..PairParams::default().with_phi(41.0 * PI) };
    // the central-difference error is about h²γ₋³/6, so 1e-3 sampling sits just above 1e-6
    let ts = fine_trajectory(&p, &dressed_state(-1.0), 3.0, 5e-4);
    let r = dressed_rate_check(&p, &ts).unwrap();
    assert!(r.max() < 1e-6, "{r:?}");
}

#[test]
fn dressed_check_on_driven_pair() {
    let p = PairParams::default();
    let ts = fine_trajectory(&p, &double_excited_state(), 20.0, 1e-3);
    let r = dressed_rate_check(&p, &ts).unwrap();
    assert!(r.max() < 1e-4, "{r:?}");
}

#[test]
fn dressed_check_needs_three_samples() {
    let ts = TimeSeries::from_columns(vec![0.0, 1.0], vec![(Observable::Minus, vec![0.0, 0.0])]).unwrap();
    assert!(matches!(
        dressed_rate_check(&PairParams::default(), &ts),
        Err(Error::TooFewSamples { needed: 3, got: 2 })
    ));
}

#[test]
fn bell_state_components() {
    let s = DensityMatrix::pure(&basis::dressed_state(1.0), &PAIR_LABELS).unwrap();
    assert!((Observable::Plus.evaluate(&s).unwrap() - 1.0).abs() < 1e-15);
    assert!(Observable::G2.evaluate(&ground_state()).unwrap().is_nan());
}

#[test]
fn g2_tracks_dark_state_estimate_once_double_excitation_is_small() {
    let p = PairParams::default();
    let model = PairModel::new(&p).unwrap();
    let cfg = IntegratorConfig { t_end: 2000.0, samples: SampleGrid::Uniform(2000), ..IntegratorConfig::default() };
    let obs = [Observable::G2, Observable::Rr, Observable::Minus, Observable::Plus];
    let ts = integrate(&model, &double_excited_state(), &cfg, &obs).unwrap();
    let col = |o| ts.column(o).unwrap();
    let (g, rr, minus, plus) = (col(Observable::G2), col(Observable::Rr), col(Observable::Minus), col(Observable::Plus));
    let mut checked = 0;
    for k in 0..ts.len() {
        // each single-atom marginal is about rr + minus/2, so 4rr/minus² needs rr ≪ minus
        if plus[k] < 1e-3 && minus[k] > 0.05 && rr[k] < 0.01 * minus[k] {
            let estimate = 4.0 * rr[k] / (minus[k] * minus[k]);
            assert!((g[k] - estimate).abs() < 0.05 * g[k], "t = {}: {} vs {estimate}", ts.times()[k], g[k]);
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}
