//! Lindblad superoperators.

use super::matrix::ComplexMatrix;
use crate::error::Result;

/// `OρO† − ½{O†O, ρ}`.
pub fn lindblad_dissipator(o: &ComplexMatrix, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    o.check_same_dim(rho, "lindblad_dissipator")?;
    Ok(lindblad_unchecked(o, rho))
}

/// `AρB† − ½{B†A, ρ}`; the caller adds the adjoint to obtain a Hermitian term.
pub fn cross_dissipator(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    a.check_same_dim(b, "cross_dissipator")?;
    a.check_same_dim(rho, "cross_dissipator")?;
    Ok(cross_unchecked(a, b, rho))
}

pub(crate) fn lindblad_unchecked(o: &ComplexMatrix, rho: &ComplexMatrix) -> ComplexMatrix {
    cross_unchecked(o, o, rho)
}

pub(crate) fn cross_unchecked(a: &ComplexMatrix, b: &ComplexMatrix, rho: &ComplexMatrix) -> ComplexMatrix {
    let bd = b.adjoint();
    let mut out = a.matmul(rho).matmul(&bd);
    let bda = bd.matmul(a);
    out.add_scaled(-0.5, &bda.anticommutator(rho));
    out
}
