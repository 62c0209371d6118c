//! Density operators over a labelled basis.

use num_complex::Complex64 as C64;
use serde::Serialize;

use super::basis::{ATOM_LABELS, PAIR_LABELS};
use super::linalg;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Tolerances a state must meet to count as physical.
pub const TRACE_TOL: f64 = 1e-9;
pub const HERMITICITY_TOL: f64 = 1e-12;
pub const POSITIVITY_TOL: f64 = 1e-9;

/// Looser bound checked on every right-hand-side evaluation.
pub const RHS_INPUT_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    labels: &'static [&'static str],
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Validity {
    pub trace_error: f64,
    pub hermiticity_error: f64,
    pub min_eigenvalue: f64,
}

impl Validity {
    pub fn is_physical(&self) -> bool {
        self.trace_error <= TRACE_TOL
            && self.hermiticity_error <= HERMITICITY_TOL
            && self.min_eigenvalue >= -POSITIVITY_TOL
    }

    /// Human-readable list of violated bounds, empty when physical.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.trace_error > TRACE_TOL {
            v.push(format!("|trace - 1| = {:.3e}", self.trace_error));
        }
        if self.hermiticity_error > HERMITICITY_TOL {
            v.push(format!("Hermiticity defect {:.3e}", self.hermiticity_error));
        }
        if self.min_eigenvalue < -POSITIVITY_TOL {
            v.push(format!("minimum eigenvalue {:.3e}", self.min_eigenvalue));
        }
        v
    }
}

impl DensityMatrix {
    /// Wraps a matrix without validating it; use [`DensityMatrix::validity`]
    /// or [`DensityMatrix::checked`] to inspect physicality.
    pub fn new(matrix: ComplexMatrix, labels: &'static [&'static str]) -> Result<Self> {
        if matrix.dim() != labels.len() {
            return Err(Error::DimensionMismatch {
                op: "DensityMatrix::new",
                expected: labels.len(),
                found: matrix.dim(),
            });
        }
        Ok(Self { matrix, labels })
    }

    /// Like [`DensityMatrix::new`] but rejects non-physical input.
    pub fn checked(matrix: ComplexMatrix, labels: &'static [&'static str]) -> Result<Self> {
        let rho = Self::new(matrix, labels)?;
        let v = rho.validity()?;
        if !v.is_physical() {
            return Err(Error::InvalidState(v.violations().join(", ")));
        }
        Ok(rho)
    }

    pub fn pair(matrix: ComplexMatrix) -> Result<Self> {
        Self::new(matrix, &PAIR_LABELS)
    }

    pub fn qubit(matrix: ComplexMatrix) -> Result<Self> {
        Self::new(matrix, &ATOM_LABELS)
    }

    /// `|ψ><ψ|` for a (not necessarily normalised) amplitude vector.
    pub fn pure(amplitudes: &[C64], labels: &'static [&'static str]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        let psi: Vec<C64> = amplitudes.iter().map(|a| a / norm).collect();
        Self::new(ComplexMatrix::outer(&psi, &psi), labels)
    }

    /// Basis projector `|i><i|`.
    pub fn basis_state(i: usize, labels: &'static [&'static str]) -> Result<Self> {
        if i >= labels.len() {
            return Err(Error::InvalidParameter(format!(
                "basis index {i} out of range for dimension {}",
                labels.len()
            )));
        }
        Self::new(ComplexMatrix::unit(labels.len(), i, i), labels)
    }

    pub fn maximally_mixed(labels: &'static [&'static str]) -> Self {
        let n = labels.len();
        Self {
            matrix: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
            labels,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn labels(&self) -> &'static [&'static str] {
        self.labels
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Real part of the diagonal entry for `label`.
    pub fn population(&self, i: usize) -> f64 {
        self.matrix[(i, i)].re
    }

    pub fn trace_error(&self) -> f64 {
        (self.matrix.trace() - C64::new(1.0, 0.0)).norm()
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        let eig = linalg::hermitian_eigen(&self.matrix.hermitian_part(), "density matrix")?;
        Ok(eig.values[0])
    }

    pub fn validity(&self) -> Result<Validity> {
        Ok(Validity {
            trace_error: self.trace_error(),
            hermiticity_error: self.matrix.hermiticity_error(),
            min_eigenvalue: self.min_eigenvalue()?,
        })
    }

    /// Cheap trace and Hermiticity check at tolerance `tol`, skipping the
    /// eigenvalue computation.
    pub fn check_trace_hermitian(&self, tol: f64) -> Result<()> {
        let te = self.trace_error();
        let he = self.matrix.hermiticity_error();
        if te > tol || he > tol {
            return Err(Error::InvalidState(format!(
                "|trace - 1| = {te:.3e}, Hermiticity defect {he:.3e} (tolerance {tol:.1e})"
            )));
        }
        Ok(())
    }

    /// Reduced state of atom `keep` (1 or 2) from a two-atom state.
    pub fn partial_trace(&self, keep: u8) -> Result<DensityMatrix> {
        if self.dim() != 4 {
            return Err(Error::DimensionMismatch {
                op: "partial_trace",
                expected: 4,
                found: self.dim(),
            });
        }
        let m = &self.matrix;
        // product index = 2·(atom 2 state) + (atom 1 state)
        let idx = |a1: usize, a2: usize| a1 + 2 * a2;
        let reduced = match keep {
            1 => ComplexMatrix::from_fn(2, |i, j| m[(idx(i, 0), idx(j, 0))] + m[(idx(i, 1), idx(j, 1))]),
            2 => ComplexMatrix::from_fn(2, |i, j| m[(idx(0, i), idx(0, j))] + m[(idx(1, i), idx(1, j))]),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "atom index must be 1 or 2, got {keep}"
                )))
            }
        };
        DensityMatrix::qubit(reduced)
    }
}
