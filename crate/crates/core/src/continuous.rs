//! Atoms coupled over an extended region: exponential coupling profiles
//! `ν(x) = (√Γ/Θ)·e^{−2|x−c|/Θ}` centred on `c = 0` and `c = φ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::Rhs;
use crate::pair::{Couplings, PairModel, PairParams};
use crate::quadrature::{self, Tolerance};
use crate::quantum::{ComplexMatrix, DensityMatrix, C64, RHS_INPUT_TOL};

/// Modified rates for coupling width `theta`; `theta = 0` is point coupling.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CouplingRates {
    /// Guided decay `Γ′`.
    pub gamma_eff: f64,
    /// Dissipative exchange `Γ′_ex`.
    pub gamma_ex_eff: f64,
    /// Coherent exchange `J′_ex`.
    pub j_ex_eff: f64,
    /// Self-interaction `J′`, an equal shift of both single-excitation levels.
    pub j_self: f64,
    pub theta: f64,
}

impl CouplingRates {
    fn as_array(&self) -> [f64; 4] {
        [self.gamma_eff, self.gamma_ex_eff, self.j_ex_eff, self.j_self]
    }

    /// Largest component difference divided by the largest rate magnitude
    /// in `reference`. Component-wise relative error is meaningless for
    /// rates that vanish, such as `Γ′_ex` at quadrature phases.
    pub fn relative_deviation(&self, reference: &CouplingRates) -> f64 {
        let r = reference.as_array();
        let scale = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let diff = self
            .as_array()
            .iter()
            .zip(r)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }
}

fn check_domain(big_gamma: f64, phi: f64, theta: f64) -> Result<()> {
    if !(theta >= 0.0 && theta.is_finite()) {
        return Err(Error::InvalidParameter(format!("theta must be finite and >= 0, got {theta}")));
    }
    if !(big_gamma >= 0.0 && big_gamma.is_finite()) {
        return Err(Error::InvalidParameter(format!("Gamma must be finite and >= 0, got {big_gamma}")));
    }
    if !phi.is_finite() {
        return Err(Error::InvalidParameter(format!("phi must be finite, got {phi}")));
    }
    if theta > 0.0 && phi <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "extended coupling needs the second region downstream (phi > 0), got phi = {phi}"
        )));
    }
    Ok(())
}

/// Closed-form modified rates.
pub fn continuous_rates(big_gamma: f64, phi: f64, theta: f64) -> Result<CouplingRates> {
    check_domain(big_gamma, phi, theta)?;
    let (s, c) = phi.sin_cos();
    if theta == 0.0 {
        return Ok(CouplingRates {
            gamma_eff: big_gamma,
            gamma_ex_eff: big_gamma * c,
            j_ex_eff: big_gamma * s,
            j_self: 0.0,
            theta,
        });
    }
    let t2 = theta * theta;
    let den = (t2 + 4.0) * (t2 + 4.0);
    let overlap = (8.0 * phi + 2.0 * t2 * phi + 12.0 * theta + t2 * theta) * (-2.0 * phi / theta).exp();
    Ok(CouplingRates {
        gamma_eff: 16.0 * big_gamma / den,
        gamma_ex_eff: 16.0 * big_gamma * c / den,
        j_ex_eff: big_gamma * (overlap + 16.0 * s) / den,
        j_self: big_gamma * theta * (t2 + 12.0) / den,
        theta,
    })
}

/// The same rates from direct two-dimensional quadrature of the coupling
/// profiles against `cos(x−x′)` and `sin|x−x′|`.
///
/// Each profile is truncated where its tail mass drops below `tol/10` of the
/// total. `tol` is the relative accuracy target, measured against the
/// largest rate.
pub fn quadrature_rates(big_gamma: f64, phi: f64, theta: f64, tol: f64) -> Result<CouplingRates> {
    check_domain(big_gamma, phi, theta)?;
    if theta == 0.0 {
        return Err(Error::InvalidParameter("quadrature needs theta > 0".into()));
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidParameter(format!("tol must lie in (0, 1), got {tol}")));
    }
    let half_width = 0.5 * theta * (10.0 / tol).ln().max(20.0);
    let norm = 1.0 / theta;
    let profile = move |x: f64, c: f64| norm * (-2.0 * (x - c).abs() / theta).exp();

    let inner_tol = Tolerance {
        abs: tol * 1e-3,
        rel: tol * 1e-3,
        max_intervals: 4000,
    };
    let outer_tol = Tolerance {
        abs: tol * 1e-2,
        rel: tol * 1e-2,
        max_intervals: 4000,
    };

    let inner = |x: f64, c: f64| -> Result<[f64; 2]> {
        let mut pts = vec![c - half_width, c, c + half_width];
        if (c - half_width..c + half_width).contains(&x) && x != c {
            pts.push(x);
            pts.sort_by(f64::total_cmp);
        }
        let est = quadrature::integrate(
            |y| {
                let w = profile(y, c);
                [w * (x - y).cos(), w * (x - y).abs().sin()]
            },
            &pts,
            inner_tol,
        )?;
        Ok(est.value)
    };

    let mut failure = None;
    let mut outer_pts = vec![-half_width, 0.0, half_width];
    if phi < half_width {
        outer_pts.push(phi);
        outer_pts.sort_by(f64::total_cmp);
    }
    let est = quadrature::integrate(
        |x| {
            let w = profile(x, 0.0);
            match (inner(x, 0.0), inner(x, phi)) {
                (Ok(a), Ok(b)) => [w * a[0], w * a[1], w * b[0], w * b[1]],
                (Err(e), _) | (_, Err(e)) => {
                    failure.get_or_insert(e);
                    [0.0; 4]
                }
            }
        },
        &outer_pts,
        outer_tol,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    let [self_cos, self_sin, ex_cos, ex_sin] = est.value.map(|v| v * big_gamma);
    Ok(CouplingRates {
        gamma_eff: self_cos,
        gamma_ex_eff: ex_cos,
        j_ex_eff: ex_sin,
        j_self: self_sin,
        theta,
    })
}

/// `Υ′ = (Γ′ + Γ′_ex + iJ′ + iJ′_ex)|Ω_c|²/Δ_c²`.
pub fn upsilon_continuous(params: &PairParams, rates: &CouplingRates) -> Result<C64> {
    if params.delta_c == 0.0 {
        return Err(Error::ZeroDetuning);
    }
    let k = params.omega_c.norm_sqr() / (params.delta_c * params.delta_c);
    Ok(C64::new(
        rates.gamma_eff + rates.gamma_ex_eff,
        rates.j_self + rates.j_ex_eff,
    ) * k)
}

fn couplings(params: &PairParams, rates: &CouplingRates) -> Result<Couplings> {
    params.validate()?;
    if rates.gamma_ex_eff.abs() > rates.gamma_eff * (1.0 + 1e-12) {
        return Err(Error::InvalidParameter(format!(
            "|Gamma'_ex| = {} exceeds Gamma' = {}",
            rates.gamma_ex_eff.abs(),
            rates.gamma_eff
        )));
    }
    Ok(Couplings {
        guided: rates.gamma_eff,
        gamma_ex: rates.gamma_ex_eff,
        j_ex: rates.j_ex_eff,
        j_self: rates.j_self,
        ..Couplings::discrete(params)
    })
}

/// Pair master equation with modified rates and the self-interaction shift.
pub fn continuous_pair_rhs(
    params: &PairParams,
    rates: &CouplingRates,
    rho: &DensityMatrix,
) -> Result<ComplexMatrix> {
    let c = couplings(params, rates)?;
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            op: "continuous_pair_rhs",
            expected: 4,
            found: rho.dim(),
        });
    }
    rho.check_trace_hermitian(RHS_INPUT_TOL)?;
    Ok(c.reference_rhs(rho.matrix()))
}

/// Hamiltonian of the extended-coupling pair.
pub fn continuous_hamiltonian(params: &PairParams, rates: &CouplingRates) -> Result<ComplexMatrix> {
    Ok(couplings(params, rates)?.hamiltonian())
}

/// Precompiled extended-coupling generator.
pub fn continuous_pair_model(params: &PairParams, rates: &CouplingRates) -> Result<impl Rhs + Clone> {
    Ok(PairModel::from_couplings(&couplings(params, rates)?))
}
