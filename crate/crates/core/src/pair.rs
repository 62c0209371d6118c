//! Two Rydberg atoms, four levels, one waveguide.
//!
//! Three right-hand sides live here:
//! - [`pair_rhs`] composes the generator from commutators and dissipators,
//! - [`PairModel`] precompiles the same generator for the integrator,
//! - [`expanded_rhs`] writes out every matrix element by hand.
//!
//! The hand-expanded form follows the per-atom labelling
//! `ρ_{a1b1,c2d2} = <a1c2|ρ|b1d2>`. Its published version differs from the
//! operator form by the sign of the drive (the local gauge `|rr> → −|rr>`,
//! which leaves every observable here unchanged) and, optionally, by how
//! intrinsic decay is attributed (see [`IntrinsicDecay`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{LindbladGenerator, Rhs};
use crate::quantum::basis::{self, GG, GR, RG, RR};
use crate::quantum::{
    cross_unchecked, lindblad_unchecked, ComplexMatrix, DensityMatrix, C64, RHS_INPUT_TOL,
};

/// How the non-guided decay `γ` acts on the four-level ladder.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntrinsicDecay {
    /// `Σ_i γ L[σ₋ⁱ]` over the four transitions, each an independent channel.
    #[default]
    Transition,
    /// `γ L[σ₋¹+σ₋⁴] + γ L[σ₋²+σ₋³]`: one channel per atom, so a decay of
    /// atom 1 from `|rr>` and from `|r1g2>` interfere.
    Atomic,
}

/// Parameters of the driven pair. Rates and detunings in μs⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairParams {
    /// Non-guided decay `γ`.
    pub gamma: f64,
    /// Guided decay `Γ`.
    pub big_gamma: f64,
    /// Drive amplitude `Ω_c` on the upper transitions.
    pub omega_c: C64,
    /// Drive detuning `Δ_c`.
    pub delta_c: f64,
    /// Propagation phase `φ` between the coupling points, radians.
    pub phi: f64,
    /// Van der Waals shift; only used for regime warnings.
    pub v6: f64,
    #[serde(default)]
    pub intrinsic_decay: IntrinsicDecay,
}

impl Default for PairParams {
    fn default() -> Self {
        Self {
            gamma: 0.001,
            big_gamma: 1.0,
            omega_c: C64::new(1.0, 0.0),
            delta_c: 30.0,
            phi: 40.0 * std::f64::consts::PI,
            v6: 1.98e4,
            intrinsic_decay: IntrinsicDecay::Transition,
        }
    }
}

impl PairParams {
    pub fn with_phi(self, phi: f64) -> Self {
        Self { phi, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        let finite = [
            ("gamma", self.gamma),
            ("Gamma", self.big_gamma),
            ("Omega_c.re", self.omega_c.re),
            ("Omega_c.im", self.omega_c.im),
            ("Delta_c", self.delta_c),
            ("phi", self.phi),
            ("V6", self.v6),
        ];
        for (name, v) in finite {
            if !v.is_finite() {
                errs.push(format!("{name} must be finite, got {v}"));
            }
        }
        if self.gamma < 0.0 {
            errs.push(format!("gamma must be non-negative, got {}", self.gamma));
        }
        if self.big_gamma < 0.0 {
            errs.push(format!("Gamma must be non-negative, got {}", self.big_gamma));
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(errs.join("; ")))
        }
    }

    /// Warnings about the validity of the rotating-frame model, empty when fine.
    pub fn regime_warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.v6 < 100.0 * self.delta_c.abs() {
            w.push(format!(
                "V6 = {:.3e} us^-1 is not much larger than |Delta_c| = {:.3e} us^-1; \
                 the blockaded four-level description may not hold",
                self.v6,
                self.delta_c.abs()
            ));
        }
        w
    }
}

/// Waveguide-mediated exchange between the atoms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExchangeRates {
    /// Coherent exchange `J_ex = Γ sin φ`.
    pub j_ex: f64,
    /// Dissipative exchange `Γ_ex = Γ cos φ`.
    pub gamma_ex: f64,
}

pub fn exchange_rates(params: &PairParams) -> ExchangeRates {
    let (s, c) = params.phi.sin_cos();
    ExchangeRates {
        j_ex: params.big_gamma * s,
        gamma_ex: params.big_gamma * c,
    }
}

/// Everything the generator needs; shared by point-like and extended couplings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Couplings {
    pub gamma: f64,
    pub guided: f64,
    pub gamma_ex: f64,
    pub j_ex: f64,
    /// Equal shift of both single-excitation levels.
    pub j_self: f64,
    pub omega: C64,
    pub delta: f64,
    pub decay: IntrinsicDecay,
}

impl Couplings {
    pub fn discrete(p: &PairParams) -> Self {
        let ex = exchange_rates(p);
        Self {
            gamma: p.gamma,
            guided: p.big_gamma,
            gamma_ex: ex.gamma_ex,
            j_ex: ex.j_ex,
            j_self: 0.0,
            omega: p.omega_c,
            delta: p.delta_c,
            decay: p.intrinsic_decay,
        }
    }

    pub fn hamiltonian(&self) -> ComplexMatrix {
        let mut h = ComplexMatrix::zeros(4);
        let single = C64::new(self.delta + self.j_self, 0.0);
        h[(RG, RG)] = single;
        h[(GR, GR)] = single;
        h[(RG, GR)] = C64::new(self.j_ex / 2.0, 0.0);
        h[(GR, RG)] = C64::new(self.j_ex / 2.0, 0.0);
        // Ω(σ₊³ + σ₊⁴) + h.c.
        h[(RR, RG)] = self.omega;
        h[(RR, GR)] = self.omega;
        h[(RG, RR)] = self.omega.conj();
        h[(GR, RR)] = self.omega.conj();
        h
    }

    fn intrinsic_channels(&self) -> Vec<ComplexMatrix> {
        let sm = |j| basis::sigma_minus(j);
        match self.decay {
            IntrinsicDecay::Transition => (1..=4).map(sm).collect(),
            IntrinsicDecay::Atomic => vec![&sm(1) + &sm(4), &sm(2) + &sm(3)],
        }
    }

    pub fn generator(&self) -> LindbladGenerator {
        let sm1 = basis::sigma_minus(1);
        let sm2 = basis::sigma_minus(2);
        let mut g = LindbladGenerator::new(&self.hamiltonian());
        for o in self.intrinsic_channels() {
            g = g.dissipator(self.gamma, &o);
        }
        g.dissipator(self.guided, &sm1)
            .dissipator(self.guided, &sm2)
            .cross_hermitian(self.gamma_ex, &sm1, &sm2)
    }

    /// Literal operator-algebra evaluation, one superoperator at a time.
    pub fn reference_rhs(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let h = self.hamiltonian();
        let mut out = h.commutator(rho).scale(C64::new(0.0, -1.0));
        for o in self.intrinsic_channels() {
            out.add_scaled(self.gamma, &lindblad_unchecked(&o, rho));
        }
        let sm1 = basis::sigma_minus(1);
        let sm2 = basis::sigma_minus(2);
        out.add_scaled(self.guided, &lindblad_unchecked(&sm1, rho));
        out.add_scaled(self.guided, &lindblad_unchecked(&sm2, rho));
        // "+ h.c." as a superoperator, so the map stays linear on non-Hermitian input
        let x = &cross_unchecked(&sm1, &sm2, rho) + &cross_unchecked(&sm2, &sm1, rho);
        out.add_scaled(self.gamma_ex, &x);
        out
    }

    /// Element-by-element form. The single-level shift `j_self` enters as a
    /// shift of the detuning, which is exactly what it is in the Hamiltonian.
    pub fn expanded(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let g = self.gamma;
        let big = self.guided;
        let d = self.delta + self.j_self;
        let gx = self.gamma_ex;
        let gt = C64::new(self.gamma_ex, self.j_ex);
        let gtc = gt.conj();
        // gauge: the hand-expanded equations carry the drive with opposite sign
        let om = -self.omega;
        let omc = om.conj();
        let i = C64::new(0.0, 1.0);
        let r = |a: usize, b: usize| rho[(a, b)];
        let re = |x: f64| C64::new(x, 0.0);

        // named by per-atom indices: ρ_{a1b1,c2d2} = <a1c2|ρ|b1d2>
        let g1g1_g2g2 = (GG, GG);
        let r1r1_g2g2 = (RG, RG);
        let g1g1_r2r2 = (GR, GR);
        let g1r1_g2g2 = (GG, RG);
        let r1g1_g2g2 = (RG, GG);
        let g1g1_g2r2 = (GG, GR);
        let g1g1_r2g2 = (GR, GG);
        let g1r1_g2r2 = (GG, RR);
        let r1g1_r2g2 = (RR, GG);
        let r1g1_g2r2 = (RG, GR);
        let g1r1_r2g2 = (GR, RG);
        let r1r1_g2r2 = (RG, RR);
        let r1r1_r2g2 = (RR, RG);
        let g1r1_r2r2 = (GR, RR);
        let r1g1_r2r2 = (RR, GR);
        let r1r1_r2r2 = (RR, RR);

        let p = |ix: (usize, usize)| r(ix.0, ix.1);
        let mut out = ComplexMatrix::zeros(4);
        let mut set = |ix: (usize, usize), v: C64| out[ix] = v;

        set(
            g1g1_g2g2,
            re(g + big) * p(r1r1_g2g2)
                + re(g + big) * p(g1g1_r2r2)
                + re(gx) * p(r1g1_g2r2)
                + re(gx) * p(g1r1_r2g2),
        );
        set(
            r1r1_g2g2,
            -re(g + big) * p(r1r1_g2g2) + re(g) * p(r1r1_r2r2)
                - gt / 2.0 * p(g1r1_r2g2)
                - gtc / 2.0 * p(r1g1_g2r2)
                - i * (om * p(r1r1_g2r2) - omc * p(r1r1_r2g2)),
        );
        set(
            g1g1_r2r2,
            -re(g + big) * p(g1g1_r2r2) + re(g) * p(r1r1_r2r2)
                - gt / 2.0 * p(r1g1_g2r2)
                - gtc / 2.0 * p(g1r1_r2g2)
                - i * (om * p(g1r1_r2r2) - omc * p(r1g1_r2r2)),
        );
        set(
            g1r1_g2g2,
            (i * d - g / 2.0 - big / 2.0) * p(g1r1_g2g2) + re(g) * p(g1r1_r2r2)
                - gtc / 2.0 * p(g1g1_g2r2)
                - i * om * p(g1r1_g2r2),
        );
        set(
            r1g1_g2g2,
            -(i * d + g / 2.0 + big / 2.0) * p(r1g1_g2g2) + re(g) * p(r1g1_r2r2)
                - gt / 2.0 * p(g1g1_r2g2)
                + i * omc * p(r1g1_r2g2),
        );
        set(
            g1g1_g2r2,
            (i * d - g / 2.0 - big / 2.0) * p(g1g1_g2r2) + re(g) * p(r1r1_g2r2)
                - gtc / 2.0 * p(g1r1_g2g2)
                - i * om * p(g1r1_g2r2),
        );
        set(
            g1g1_r2g2,
            -(i * d + g / 2.0 + big / 2.0) * p(g1g1_r2g2) + re(g) * p(r1r1_r2g2)
                - gt / 2.0 * p(r1g1_g2g2)
                + i * omc * p(r1g1_r2g2),
        );
        set(
            g1r1_g2r2,
            -re(g) * p(g1r1_g2r2) - i * omc * (p(g1r1_g2g2) + p(g1g1_g2r2)),
        );
        set(
            r1g1_r2g2,
            -re(g) * p(r1g1_r2g2) + i * om * (p(r1g1_g2g2) + p(g1g1_r2g2)),
        );
        set(
            r1g1_g2r2,
            -re(g + big) * p(r1g1_g2r2)
                - gt / 2.0 * p(g1g1_r2r2)
                - gtc / 2.0 * p(r1r1_g2g2)
                - i * (om * p(r1r1_g2r2) - omc * p(r1g1_r2r2)),
        );
        set(
            g1r1_r2g2,
            -re(g + big) * p(g1r1_r2g2)
                - gtc / 2.0 * p(g1g1_r2r2)
                - gt / 2.0 * p(r1r1_g2g2)
                + i * (omc * p(r1r1_r2g2) - om * p(g1r1_r2r2)),
        );
        set(
            r1r1_g2r2,
            -(i * d + 1.5 * g + big / 2.0) * p(r1r1_g2r2) - gt / 2.0 * p(g1r1_r2r2)
                - i * omc * (p(r1r1_g2g2) + p(r1g1_g2r2) - p(r1r1_r2r2)),
        );
        set(
            r1r1_r2g2,
            (i * d - 1.5 * g - big / 2.0) * p(r1r1_r2g2) - gtc / 2.0 * p(r1g1_r2r2)
                + i * om * (p(r1r1_g2g2) + p(g1r1_r2g2) - p(r1r1_r2r2)),
        );
        set(
            g1r1_r2r2,
            -(i * d + 1.5 * g + big / 2.0) * p(g1r1_r2r2) - gt / 2.0 * p(r1r1_g2r2)
                - i * omc * (p(g1r1_r2g2) + p(g1g1_r2r2) - p(r1r1_r2r2)),
        );
        set(
            r1g1_r2r2,
            (i * d - 1.5 * g - big / 2.0) * p(r1g1_r2r2) - gtc / 2.0 * p(r1r1_r2g2)
                + i * om * (p(r1g1_g2r2) + p(g1g1_r2r2) - p(r1r1_r2r2)),
        );

        if self.decay == IntrinsicDecay::Transition {
            // Independent channels do not feed the single-excitation
            // coherences from the doubly excited ones.
            let feed = [
                (g1r1_g2g2, g1r1_r2r2),
                (r1g1_g2g2, r1g1_r2r2),
                (g1g1_g2r2, r1r1_g2r2),
                (g1g1_r2g2, r1r1_r2g2),
            ];
            for (target, source) in feed {
                out[target] -= re(g) * p(source);
            }
        }

        let pops = out[g1g1_g2g2] + out[r1r1_g2g2] + out[g1g1_r2r2];
        out[r1r1_r2r2] = -pops;
        out
    }
}

/// `Δ_c(P_{r1g2}+P_{g1r2}) + (J_ex/2)(|r1g2><g1r2| + h.c.) + Ω_c(σ₊³+σ₊⁴) + h.c.`
pub fn atomic_hamiltonian(params: &PairParams) -> ComplexMatrix {
    Couplings::discrete(params).hamiltonian()
}

fn check_input(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            op: "pair model",
            expected: 4,
            found: rho.dim(),
        });
    }
    rho.check_trace_hermitian(RHS_INPUT_TOL)
}

/// Master-equation right-hand side built from commutators and dissipators.
pub fn pair_rhs(params: &PairParams, rho: &DensityMatrix) -> Result<ComplexMatrix> {
    params.validate()?;
    check_input(rho)?;
    Ok(Couplings::discrete(params).reference_rhs(rho.matrix()))
}

/// Hand-expanded matrix elements; must agree with [`pair_rhs`].
pub fn expanded_rhs(params: &PairParams, rho: &DensityMatrix) -> Result<ComplexMatrix> {
    params.validate()?;
    check_input(rho)?;
    Ok(Couplings::discrete(params).expanded(rho.matrix()))
}

/// Precompiled generator for repeated evaluation.
#[derive(Clone, Debug)]
pub struct PairModel {
    generator: LindbladGenerator,
}

impl PairModel {
    pub fn new(params: &PairParams) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            generator: Couplings::discrete(params).generator(),
        })
    }

    pub(crate) fn from_couplings(c: &Couplings) -> Self {
        Self {
            generator: c.generator(),
        }
    }
}

impl Rhs for PairModel {
    fn dim(&self) -> usize {
        4
    }

    fn eval(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        self.generator.apply(rho)
    }
}

/// Named pair states.
pub fn ground_state() -> DensityMatrix {
    DensityMatrix::basis_state(GG, &basis::PAIR_LABELS).expect("index in range")
}

pub fn double_excited_state() -> DensityMatrix {
    DensityMatrix::basis_state(RR, &basis::PAIR_LABELS).expect("index in range")
}

/// `|+>` for `sign = 1`, `|−>` for `sign = −1`.
pub fn dressed_state(sign: f64) -> DensityMatrix {
    DensityMatrix::pure(&basis::dressed_state(sign), &basis::PAIR_LABELS).expect("nonzero vector")
}
