//! Quick oracle and invariant checks runnable from the command line.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::continuous::{continuous_rates, quadrature_rates};
use crate::error::Result;
use crate::giant::{excited_state, giant_population_analytic, GiantModel, GiantParams};
use crate::integrator::{convergence_order, integrate, IntegratorConfig, SampleGrid};
use crate::observables::{concurrence, Observable};
use crate::pair::{double_excited_state, expanded_rhs, pair_rhs, IntrinsicDecay, PairModel, PairParams};
use crate::quantum::basis::{GG, GR, PAIR_LABELS, RG, RR};
use crate::quantum::{ComplexMatrix, DensityMatrix, C64};

const SEED: u64 = 0x5e1f_7e57;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn bound(name: &'static str, value: Result<f64>, limit: f64) -> Self {
        match value {
            Ok(v) => Check {
                name,
                passed: v < limit,
                detail: format!("{v:.3e} (limit {limit:.0e})"),
            },
            Err(e) => Check {
                name,
                passed: false,
                detail: e.to_string(),
            },
        }
    }
}

fn random_amplitudes(rng: &mut ChaCha8Rng) -> Vec<C64> {
    (0..4).map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
}

fn random_state(rng: &mut ChaCha8Rng) -> DensityMatrix {
    let a = ComplexMatrix::from_fn(4, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let m = a.matmul(&a.adjoint());
    DensityMatrix::pair(m.scale_real(1.0 / m.trace().re).hermitian_part()).expect("4x4 state")
}

fn dual_rhs(rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0f64;
    for decay in [IntrinsicDecay::Transition, IntrinsicDecay::Atomic] {
        for k in 0..100 {
            let p = PairParams {
                phi: 40.0 * PI + 0.1 * k as f64,
                intrinsic_decay: decay,
                ..PairParams::default()
            };
            let rho = random_state(rng);
            worst = worst.max(pair_rhs(&p, &rho)?.max_abs_diff(&expanded_rhs(&p, &rho)?));
        }
    }
    Ok(worst)
}

fn pure_concurrence(rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let a = random_amplitudes(rng);
        let norm = a.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let want = 2.0 * (a[GG] * a[RR] - a[RG] * a[GR]).norm() / norm;
        let got = concurrence(&DensityMatrix::pure(&a, &PAIR_LABELS)?)?;
        worst = worst.max((got - want).abs());
    }
    Ok(worst)
}

fn giant_oracle() -> Result<f64> {
    let gp = GiantParams::from_pair(&PairParams::default())?;
    let cfg = IntegratorConfig::adaptive(300.0, SampleGrid::Uniform(300));
    let ts = integrate(&GiantModel::new(&gp)?, &excited_state(), &cfg, &[Observable::Rr])?;
    Ok(ts
        .times()
        .iter()
        .zip(ts.column(Observable::Rr)?)
        .map(|(&t, &v)| (v - giant_population_analytic(&gp, t, 1.0)).abs())
        .fold(0.0, f64::max))
}

fn rate_quadrature() -> Result<f64> {
    let exact = continuous_rates(1.0, 10.5 * PI, PI)?;
    Ok(quadrature_rates(1.0, 10.5 * PI, PI, 1e-8)?.relative_deviation(&exact))
}

fn rk4_order() -> Check {
    let order = PairModel::new(&PairParams::default())
        .and_then(|m| convergence_order(&m, &double_excited_state(), 1.0, 0.02));
    match order {
        Ok(o) => {
            let p = o.value();
            Check {
                name: "RK4 convergence order on the pair model",
                passed: p.is_some_and(|p| p >= 3.7),
                detail: p.map_or("saturated".into(), |p| format!("{p:.3} (need >= 3.7)")),
            }
        }
        Err(e) => Check {
            name: "RK4 convergence order on the pair model",
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Runs all checks; a few seconds in an optimised build.
pub fn run_selftest() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    vec![
        Check::bound("compact vs expanded pair right-hand side", dual_rhs(&mut rng), 1e-12),
        Check::bound("concurrence vs pure-state formula", pure_concurrence(&mut rng), 1e-9),
        Check::bound("giant atom numeric vs closed form", giant_oracle(), 1e-9),
        Check::bound("broadened rates closed form vs quadrature", rate_quadrature(), 1e-6),
        rk4_order(),
    ]
}
