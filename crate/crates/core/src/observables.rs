//! Populations, entanglement and photon statistics of the pair.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrator::TimeSeries;
use crate::pair::{exchange_rates, PairParams};
use crate::quantum::basis::{self, GG, GR, RG, RR};
use crate::quantum::linalg;
use crate::quantum::{ComplexMatrix, DensityMatrix, C64};

/// Below this marginal product `g²` is 0/0 and reported as undefined.
pub const G2_DENOMINATOR_FLOOR: f64 = 1e-12;

/// A scalar extracted from a state at each sample time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    /// `ρ_{g1g1,g2g2}`; for the giant atom, `ϱ_gg`.
    Gg,
    R1g2,
    G1r2,
    /// `ρ_{r1r1,r2r2}`; for the giant atom, `ϱ_rr`.
    Rr,
    Plus,
    Minus,
    Concurrence,
    G2,
    /// `Re <r1r2|ρ|+>`
    ReRhoRPlus,
    /// `Im <r1r2|ρ|+>`
    ImRhoRPlus,
}

impl Observable {
    pub const ALL: [Observable; 10] = [
        Observable::Gg,
        Observable::R1g2,
        Observable::G1r2,
        Observable::Rr,
        Observable::Plus,
        Observable::Minus,
        Observable::Concurrence,
        Observable::G2,
        Observable::ReRhoRPlus,
        Observable::ImRhoRPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Gg => "gg",
            Observable::R1g2 => "r1g2",
            Observable::G1r2 => "g1r2",
            Observable::Rr => "rr",
            Observable::Plus => "plus",
            Observable::Minus => "minus",
            Observable::Concurrence => "concurrence",
            Observable::G2 => "g2",
            Observable::ReRhoRPlus => "re_rho_rplus",
            Observable::ImRhoRPlus => "im_rho_rplus",
        }
    }

    /// Whether the observable is defined on states of dimension `dim`.
    pub fn supports_dim(self, dim: usize) -> bool {
        match dim {
            4 => true,
            2 => matches!(self, Observable::Gg | Observable::Rr),
            _ => false,
        }
    }

    /// Value on `rho`; `NaN` encodes an undefined `g²`.
    pub fn evaluate(self, rho: &DensityMatrix) -> Result<f64> {
        if !self.supports_dim(rho.dim()) {
            return Err(Error::MissingObservable {
                observable: self.name().into(),
                reason: format!("not defined for {}-level states", rho.dim()),
            });
        }
        if rho.dim() == 2 {
            return Ok(match self {
                Observable::Gg => rho.population(0),
                _ => rho.population(1),
            });
        }
        Ok(match self {
            Observable::Gg => rho.population(GG),
            Observable::R1g2 => rho.population(RG),
            Observable::G1r2 => rho.population(GR),
            Observable::Rr => rho.population(RR),
            Observable::Plus => dressed_populations(rho)?.plus,
            Observable::Minus => dressed_populations(rho)?.minus,
            Observable::Concurrence => concurrence(rho)?,
            Observable::G2 => g2(rho)?.unwrap_or(f64::NAN),
            Observable::ReRhoRPlus => dressed_populations(rho)?.rho_r_plus.re,
            Observable::ImRhoRPlus => dressed_populations(rho)?.rho_r_plus.im,
        })
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "rho_gg" => "gg",
            "rho_rr" => "rr",
            "rho_pp" | "rho_++" | "++" => "plus",
            "rho_mm" | "rho_--" | "--" => "minus",
            "c_at" | "c" => "concurrence",
            "g2_ph" => "g2",
            other => other,
        };
        Observable::ALL
            .into_iter()
            .find(|o| o.name() == alias)
            .ok_or_else(|| Error::UnknownObservable(s.to_string()))
    }
}

/// Snapshot of every observable of a pair state.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObservableSet {
    /// Keyed by `gg`, `r1g2`, `g1r2`, `rr`, `plus`, `minus`.
    pub populations: BTreeMap<&'static str, f64>,
    pub concurrence: f64,
    pub g2: Option<f64>,
    pub trace_error: f64,
    pub min_eigenvalue: f64,
}

impl ObservableSet {
    pub fn of(rho: &DensityMatrix) -> Result<Self> {
        require_pair(rho, "ObservableSet")?;
        let d = dressed_populations(rho)?;
        let mut populations = BTreeMap::new();
        for (i, label) in basis::PAIR_LABELS.iter().enumerate() {
            populations.insert(*label, rho.population(i));
        }
        populations.insert("plus", d.plus);
        populations.insert("minus", d.minus);
        Ok(Self {
            populations,
            concurrence: concurrence(rho)?,
            g2: g2(rho)?,
            trace_error: rho.trace_error(),
            min_eigenvalue: rho.min_eigenvalue()?,
        })
    }
}

fn require_pair(rho: &DensityMatrix, op: &'static str) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            op,
            expected: 4,
            found: rho.dim(),
        });
    }
    Ok(())
}

/// Wootters concurrence.
///
/// With `ρ = WW†` (`W = V·diag(√d)` from the eigen-decomposition), the
/// eigenvalues of `ρρ̃` are the squared singular values of `τ = Wᵀ(σ_y⊗σ_y)W`.
/// Taking singular values of `τ` directly avoids the square root of
/// eigenvalues near zero, which would turn rounding noise of order `1e-16`
/// into errors of order `1e-8`. Conjugation is in the product basis.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    require_pair(rho, "concurrence")?;
    let lambda = wootters_lambdas(rho)?;
    Ok(wootters_combine(&lambda))
}

/// `λ₁ ≥ λ₂ ≥ λ₃ ≥ λ₄`, ties in any order.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<Vec<f64>> {
    require_pair(rho, "wootters_lambdas")?;
    let eig = linalg::hermitian_eigen(&rho.matrix().hermitian_part(), "concurrence: rho")?;
    let roots: Vec<C64> = eig.values.iter().map(|&d| C64::new(d.max(0.0).sqrt(), 0.0)).collect();
    let w = eig.vectors.matmul(&ComplexMatrix::diag(&roots));
    let tau = w.transpose().matmul(&basis::sigma_y_sigma_y()).matmul(&w);
    linalg::singular_values(&tau, "concurrence: tau")
}

/// Concurrence through the spectrum of the non-Hermitian `ρρ̃`, with
/// `λᵢ = √max(Re μᵢ, 0)`. Kept as an independent check on [`concurrence`].
pub fn concurrence_spectral(rho: &DensityMatrix) -> Result<f64> {
    require_pair(rho, "concurrence_spectral")?;
    let yy = basis::sigma_y_sigma_y();
    let m = rho.matrix();
    let tilde = yy.matmul(&m.conj()).matmul(&yy);
    let mu = linalg::eigenvalues(&m.matmul(&tilde), "concurrence: rho rho~")?;
    let mut lambda: Vec<f64> = mu.iter().map(|z| z.re.max(0.0).sqrt()).collect();
    lambda.sort_by(|a, b| b.total_cmp(a));
    Ok(wootters_combine(&lambda))
}

fn wootters_combine(lambda: &[f64]) -> f64 {
    (lambda[0] - lambda[1] - lambda[2] - lambda[3]).clamp(0.0, 1.0)
}

/// `g² = ρ_{r1r1,r2r2}/(ρ_{r1r1}·ρ_{r2r2})` with single-atom marginals;
/// `None` when the marginal product is below [`G2_DENOMINATOR_FLOOR`].
pub fn g2(rho: &DensityMatrix) -> Result<Option<f64>> {
    require_pair(rho, "g2")?;
    let r1 = rho.partial_trace(1)?.population(1);
    let r2 = rho.partial_trace(2)?.population(1);
    let den = r1 * r2;
    if den < G2_DENOMINATOR_FLOOR {
        return Ok(None);
    }
    Ok(Some(rho.population(RR) / den))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DressedPopulations {
    pub plus: f64,
    pub minus: f64,
    /// `<r1r2|ρ|+>`
    pub rho_r_plus: C64,
}

pub fn dressed_populations(rho: &DensityMatrix) -> Result<DressedPopulations> {
    require_pair(rho, "dressed_populations")?;
    let m = rho.matrix();
    let coh = m[(RG, GR)] + m[(GR, RG)];
    let sum = m[(RG, RG)] + m[(GR, GR)];
    Ok(DressedPopulations {
        plus: 0.5 * (sum + coh).re,
        minus: 0.5 * (sum - coh).re,
        rho_r_plus: (m[(RR, RG)] + m[(RR, GR)]) * std::f64::consts::FRAC_1_SQRT_2,
    })
}

/// Largest central-difference residuals of the symmetric/antisymmetric
/// population equations along a sampled pair trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DressedResidual {
    pub minus: f64,
    pub plus: f64,
}

impl DressedResidual {
    pub fn max(&self) -> f64 {
        self.minus.max(self.plus)
    }
}

/// Checks
/// `dρ₋₋/dt = −γ₋ρ₋₋ + γρ_rr` and
/// `dρ₊₊/dt = −γ₊ρ₊₊ + γρ_rr − i√2(Ω*ρ_{r+} − Ωρ_{+r})`,
/// `γ± = γ + Γ ± Γ_ex`, at interior samples of a uniform grid.
///
/// The `√2` is the overlap `<r1r2|H|+>/Ω`; the drive couples `|r1r2>` to
/// `|+>` only. Needs the columns `minus`, `plus`, `rr`, `re_rho_rplus`,
/// `im_rho_rplus`.
pub fn dressed_rate_check(params: &PairParams, series: &TimeSeries) -> Result<DressedResidual> {
    let n = series.len();
    if n < 3 {
        return Err(Error::TooFewSamples { needed: 3, got: n });
    }
    let minus = series.column(Observable::Minus)?;
    let plus = series.column(Observable::Plus)?;
    let rr = series.column(Observable::Rr)?;
    let re_rp = series.column(Observable::ReRhoRPlus)?;
    let im_rp = series.column(Observable::ImRhoRPlus)?;
    let t = series.times();
    let h = (t[n - 1] - t[0]) / (n - 1) as f64;
    let uniform = t.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.max(1.0));
    if !uniform {
        return Err(Error::InvalidParameter(
            "dressed_rate_check needs a uniform sample grid".into(),
        ));
    }

    let ex = exchange_rates(params);
    let g = params.gamma;
    let gamma_plus = g + params.big_gamma + ex.gamma_ex;
    let gamma_minus = g + params.big_gamma - ex.gamma_ex;
    let om = params.omega_c;
    let sqrt2 = std::f64::consts::SQRT_2;

    let mut res = DressedResidual { minus: 0.0, plus: 0.0 };
    for k in 1..n - 1 {
        let d_minus = (minus[k + 1] - minus[k - 1]) / (2.0 * h);
        let d_plus = (plus[k + 1] - plus[k - 1]) / (2.0 * h);
        let rhs_minus = -gamma_minus * minus[k] + g * rr[k];
        let r_plus = C64::new(re_rp[k], im_rp[k]);
        // −i√2(a − a*) = 2√2 Im a, a = Ω*ρ_{r+}
        let drive = 2.0 * sqrt2 * (om.conj() * r_plus).im;
        let rhs_plus = -gamma_plus * plus[k] + g * rr[k] + drive;
        res.minus = res.minus.max((d_minus - rhs_minus).abs());
        res.plus = res.plus.max((d_plus - rhs_plus).abs());
    }
    Ok(res)
}
