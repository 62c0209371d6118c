//! Small dense complex matrices.
//!
//! Storage is row-major and inline for dimensions up to 4, which covers every
//! operator in the pair and giant-atom models without touching the heap in
//! the integrator's inner loop.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64 as C64;
use smallvec::SmallVec;

use crate::error::{Error, Result};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: SmallVec<[C64; 16]>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Self {
            dim,
            data: SmallVec::from_elem(ZERO, dim * dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_row_major(entries: &[C64]) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != entries.len() {
            return Err(Error::InvalidParameter(format!(
                "{} entries do not form a square matrix",
                entries.len()
            )));
        }
        Ok(Self {
            dim,
            data: SmallVec::from_slice(entries),
        })
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| rows[i][j])
    }

    pub fn diag(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// Outer product |a⟩⟨b| of two column vectors.
    pub fn outer(a: &[C64], b: &[C64]) -> Self {
        assert_eq!(a.len(), b.len());
        Self::from_fn(a.len(), |i, j| a[i] * b[j].conj())
    }

    /// Matrix unit |i⟩⟨j|.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(dim);
        m[(i, j)] = ONE;
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// `self += a * other`
    #[inline]
    pub fn add_scaled(&mut self, a: f64, other: &ComplexMatrix) {
        debug_assert_eq!(self.dim, other.dim);
        for (x, y) in self.data.iter_mut().zip(other.data.iter()) {
            *x += y * a;
        }
    }

    /// `self += a * other` for complex `a`.
    #[inline]
    pub fn add_scaled_complex(&mut self, a: C64, other: &ComplexMatrix) {
        debug_assert_eq!(self.dim, other.dim);
        for (x, y) in self.data.iter_mut().zip(other.data.iter()) {
            *x += y * a;
        }
    }

    pub fn check_same_dim(&self, other: &ComplexMatrix, op: &'static str) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                op,
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// Matrix product; skips zero entries of the left factor, so products with
    /// the sparse ladder operators cost little.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    /// `[self, rhs]`
    pub fn commutator(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    /// `{self, rhs}`
    pub fn anticommutator(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        &self.matmul(rhs) + &rhs.matmul(self)
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let (m, n) = (self.dim, rhs.dim);
        ComplexMatrix::from_fn(m * n, |i, j| self[(i / n, j / n)] * rhs[(i % n, j % n)])
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest element-wise deviation from Hermiticity, `max |M_ij − conj(M_ji)|`.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim;
        let mut err = 0.0f64;
        for i in 0..n {
            for j in i..n {
                err = err.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        err
    }

    /// Hermitian part `(M + M†)/2`.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  [")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, " {:+.6e}{:+.6e}i", z.re, z.im)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(rhs.data.iter()).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(rhs.data.iter()).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
        self += &rhs;
        self
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
        self -= &rhs;
        self
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Mul<C64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: C64) -> ComplexMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: f64) -> ComplexMatrix {
        self.scale_real(rhs)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        assert_eq!(self.dim, rhs.dim);
        for (x, y) in self.data.iter_mut().zip(rhs.data.iter()) {
            *x += y;
        }
    }
}

impl SubAssign<&ComplexMatrix> for ComplexMatrix {
    fn sub_assign(&mut self, rhs: &ComplexMatrix) {
        assert_eq!(self.dim, rhs.dim);
        for (x, y) in self.data.iter_mut().zip(rhs.data.iter()) {
            *x -= y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn adjoint_is_an_involution() {
        let m = ComplexMatrix::from_fn(3, |i, j| c(i as f64 + 0.5, j as f64 - 1.25 * i as f64));
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn matmul_matches_hand_product() {
        let a = ComplexMatrix::from_rows([[c(1.0, 1.0), c(2.0, 0.0)], [c(0.0, -1.0), c(3.0, 0.0)]]);
        let b = ComplexMatrix::from_rows([[c(0.0, 1.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let p = a.matmul(&b);
        assert_eq!(p[(0, 0)], c(1.0, 1.0) * c(0.0, 1.0) + c(2.0, 0.0));
        assert_eq!(p[(0, 1)], c(1.0, 1.0));
        assert_eq!(p[(1, 0)], c(0.0, -1.0) * c(0.0, 1.0) + c(3.0, 0.0));
        assert_eq!(p[(1, 1)], c(0.0, -1.0));
    }

    #[test]
    fn kron_of_units() {
        let a = ComplexMatrix::unit(2, 1, 0);
        let b = ComplexMatrix::unit(2, 0, 1);
        let k = a.kron(&b);
        assert_eq!(k, ComplexMatrix::unit(4, 2, 1));
    }

    #[test]
    fn from_row_major_rejects_non_square() {
        assert!(ComplexMatrix::from_row_major(&[ONE; 3]).is_err());
        assert_eq!(ComplexMatrix::from_row_major(&[ONE; 4]).unwrap().dim(), 2);
    }
}
