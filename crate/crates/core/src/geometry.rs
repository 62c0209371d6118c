//! Laboratory quantities to model parameters.
//!
//! Inputs use lab units (rad/s, μm, nm, m/s); outputs are in μs⁻¹ and
//! radians. No other module converts units.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
const PER_SECOND_TO_PER_US: f64 = 1e-6;

/// Van der Waals shift `C₆/R⁶` in rad/s, for `c6` in rad/s·μm⁶ and `r_um` in μm.
pub fn vdw_shift(c6: f64, r_um: f64) -> Result<f64> {
    if !(r_um > 0.0) {
        return Err(Error::InvalidParameter(format!("interatomic distance must be positive, got {r_um}")));
    }
    Ok(c6 / r_um.powi(6))
}

/// Converts a rate from s⁻¹ to μs⁻¹.
pub fn per_us(rate_per_s: f64) -> f64 {
    rate_per_s * PER_SECOND_TO_PER_US
}

/// `φ = ω_e·d/v_g` with `d` in μm and `v_g` in m/s.
pub fn phase_from_separation(omega_e: f64, d_um: f64, v_g: f64) -> Result<f64> {
    if !(omega_e > 0.0 && v_g > 0.0 && d_um >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need omega_e > 0, v_g > 0, d >= 0 (got {omega_e}, {v_g}, {d_um})"
        )));
    }
    Ok(omega_e * d_um * 1e-6 / v_g)
}

/// Projection `R·cos(angle)` of a tilted pair onto the waveguide axis.
pub fn projected_separation(r_um: f64, angle: f64) -> Result<f64> {
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&angle) {
        return Err(Error::InvalidParameter(format!("misalignment angle must lie in [0, pi/2), got {angle}")));
    }
    if !(r_um > 0.0) {
        return Err(Error::InvalidParameter(format!("interatomic distance must be positive, got {r_um}")));
    }
    Ok(r_um * angle.cos())
}

/// `Θ = 2√(r̄² − h²)·ω_e/v_g` for `r̄`, `h` in nm.
pub fn coupling_width(r_bar_nm: f64, h_nm: f64, omega_e: f64, v_g: f64) -> Result<f64> {
    if !(h_nm > 0.0) {
        return Err(Error::InvalidParameter(format!("surface distance must be positive, got {h_nm}")));
    }
    if r_bar_nm <= h_nm {
        return Err(Error::InvalidParameter(format!(
            "atom does not overlap evanescent field (r_bar = {r_bar_nm} nm <= h = {h_nm} nm)"
        )));
    }
    if !(omega_e > 0.0 && v_g > 0.0) {
        return Err(Error::InvalidParameter("need omega_e > 0 and v_g > 0".into()));
    }
    let w = 2.0 * (r_bar_nm * r_bar_nm - h_nm * h_nm).sqrt() * 1e-9;
    Ok(w * omega_e / v_g)
}

/// A laboratory configuration of the pair next to the waveguide.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabGeometry {
    /// rad/s·μm⁶
    pub c6: f64,
    /// Interatomic distance, μm.
    pub r: f64,
    /// Misalignment from the waveguide axis, radians.
    pub misalign_angle: f64,
    /// Transition angular frequency, rad/s.
    pub omega_e: f64,
    /// Group velocity, m/s.
    pub v_g: f64,
    /// Rydberg orbital radius, nm.
    pub r_bar: Option<f64>,
    /// Nucleus to evanescent-surface distance, nm.
    pub h: Option<f64>,
}

impl Default for LabGeometry {
    fn default() -> Self {
        Self {
            c6: 2.0 * std::f64::consts::PI * 2.8e12,
            r: 3.1,
            misalign_angle: 0.0,
            omega_e: 2.0 * std::f64::consts::PI * 1009e12,
            v_g: 0.5 * SPEED_OF_LIGHT,
            r_bar: Some(583.0),
            h: Some(449.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeometryReport {
    pub v6_rad_per_s: f64,
    pub v6_per_us: f64,
    /// Along-waveguide separation, μm.
    pub d: f64,
    pub phi: f64,
    pub theta: Option<f64>,
}

impl LabGeometry {
    pub fn derive(&self) -> Result<GeometryReport> {
        let v6 = vdw_shift(self.c6, self.r)?;
        let d = projected_separation(self.r, self.misalign_angle)?;
        let phi = phase_from_separation(self.omega_e, d, self.v_g)?;
        let theta = match (self.r_bar, self.h) {
            (Some(rb), Some(h)) => Some(coupling_width(rb, h, self.omega_e, self.v_g)?),
            _ => None,
        };
        Ok(GeometryReport {
            v6_rad_per_s: v6,
            v6_per_us: per_us(v6),
            d,
            phi,
            theta,
        })
    }
}
