//! Effective two-level giant atom obtained by eliminating the far-detuned
//! single-excitation states. Basis `{|g>, |r>}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::Rhs;
use crate::pair::{exchange_rates, PairParams};
use crate::quantum::{ComplexMatrix, DensityMatrix, C64, RHS_INPUT_TOL};

const G: usize = 0;
const R: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GiantParams {
    /// Intrinsic decay `γ` of each atom, μs⁻¹.
    pub gamma: f64,
    /// Complex rate `Υ`: decay (real part) and Lamb shift (imaginary part).
    pub upsilon: C64,
}

impl GiantParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.gamma.is_finite() && self.upsilon.re.is_finite() && self.upsilon.im.is_finite()) {
            return Err(Error::InvalidParameter("giant-atom rates must be finite".into()));
        }
        if self.gamma < 0.0 {
            return Err(Error::InvalidParameter(format!("gamma must be non-negative, got {}", self.gamma)));
        }
        // rounding in cos(φ) near odd multiples of π can leave −1e-19
        if self.upsilon.re < -1e-15 {
            return Err(Error::InvalidParameter(format!(
                "Re(Upsilon) must be non-negative, got {}",
                self.upsilon.re
            )));
        }
        Ok(())
    }

    /// Giant-atom parameters matched to a pair configuration.
    pub fn from_pair(params: &PairParams) -> Result<Self> {
        Ok(Self {
            gamma: params.gamma,
            upsilon: upsilon(params)?,
        })
    }
}

/// `Υ = (Γ + Γ_ex + iJ_ex)|Ω_c|²/Δ_c²`.
pub fn upsilon(params: &PairParams) -> Result<C64> {
    if params.delta_c == 0.0 {
        return Err(Error::ZeroDetuning);
    }
    let ex = exchange_rates(params);
    let k = params.omega_c.norm_sqr() / (params.delta_c * params.delta_c);
    Ok(C64::new(params.big_gamma + ex.gamma_ex, ex.j_ex) * k)
}

/// Right-hand side of the giant-atom master equation.
pub fn giant_rhs(params: &GiantParams, rho: &DensityMatrix) -> Result<ComplexMatrix> {
    params.validate()?;
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            op: "giant_rhs",
            expected: 2,
            found: rho.dim(),
        });
    }
    rho.check_trace_hermitian(RHS_INPUT_TOL)?;
    Ok(GiantModel::new(params)?.eval(rho.matrix()))
}

/// `ϱ_rr(t) = rr0·exp(−(2 Re Υ + 2γ) t)`.
pub fn giant_population_analytic(params: &GiantParams, t: f64, rr0: f64) -> f64 {
    rr0 * (-(2.0 * params.upsilon.re + 2.0 * params.gamma) * t).exp()
}

#[derive(Clone, Copy, Debug)]
pub struct GiantModel {
    gamma: f64,
    upsilon: C64,
}

impl GiantModel {
    pub fn new(params: &GiantParams) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            gamma: params.gamma,
            upsilon: params.upsilon,
        })
    }
}

impl Rhs for GiantModel {
    fn dim(&self) -> usize {
        2
    }

    fn eval(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let y = self.upsilon;
        let g = C64::new(self.gamma, 0.0);
        let decay = y + y.conj() + g * 2.0;
        let mut out = ComplexMatrix::zeros(2);
        out[(G, G)] = decay * rho[(R, R)];
        out[(R, R)] = -decay * rho[(R, R)];
        out[(G, R)] = -(y.conj() + g) * rho[(G, R)];
        out[(R, G)] = -(y + g) * rho[(R, G)];
        out
    }
}

pub fn excited_state() -> DensityMatrix {
    DensityMatrix::basis_state(R, &crate::quantum::basis::ATOM_LABELS).expect("index in range")
}
