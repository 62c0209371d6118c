//! Dense complex-matrix algebra and density-operator primitives.

pub mod basis;
mod density;
mod dissipator;
pub mod linalg;
mod matrix;

pub use density::{DensityMatrix, Validity, HERMITICITY_TOL, POSITIVITY_TOL, RHS_INPUT_TOL, TRACE_TOL};
pub use dissipator::{cross_dissipator, lindblad_dissipator};
pub(crate) use dissipator::{cross_unchecked, lindblad_unchecked};
pub use linalg::eigenvalues;
pub use matrix::ComplexMatrix;

pub use num_complex::Complex64 as C64;
