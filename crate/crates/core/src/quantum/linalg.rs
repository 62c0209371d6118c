//! Eigenvalue and singular-value kernels for small complex matrices.
//!
//! - Hermitian input: cyclic complex Jacobi rotations (eigenvalues and vectors).
//! - General input: Householder reduction to Hessenberg form followed by
//!   single-shift complex QR with Wilkinson shifts and deflation.
//! - Singular values: one-sided (Hestenes) Jacobi, which keeps small singular
//!   values accurate to `ε‖A‖` instead of `√(ε)‖A‖` as squaring would.
//!
//! A matrix is routed to the Hermitian path when its element-wise Hermiticity
//! defect is at most [`HERMITIAN_TOL`] times its largest entry.

use num_complex::Complex64 as C64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Relative Hermiticity defect below which the Hermitian fast path is used.
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_JACOBI_SWEEPS: usize = 64;
const MAX_QR_ITERS_PER_EIGENVALUE: usize = 60;

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, ordered like `values`.
    pub vectors: ComplexMatrix,
}

/// Eigenvalues of an arbitrary square matrix, with algebraic multiplicity.
///
/// `context` names the matrix in the error raised on non-convergence.
pub fn eigenvalues(m: &ComplexMatrix, context: &str) -> Result<Vec<C64>> {
    let scale = m.max_abs();
    if scale == 0.0 {
        return Ok(vec![C64::new(0.0, 0.0); m.dim()]);
    }
    if m.hermiticity_error() <= HERMITIAN_TOL * scale {
        let eig = hermitian_eigen(&m.hermitian_part(), context)?;
        return Ok(eig.values.into_iter().map(|v| C64::new(v, 0.0)).collect());
    }
    general_eigenvalues(m, context)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix; only the upper
/// triangle's Hermitian part is meaningful, so pass `hermitian_part()` for
/// slightly asymmetric input.
pub fn hermitian_eigen(m: &ComplexMatrix, context: &str) -> Result<HermitianEigen> {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);
    let norm = a.frobenius_norm();
    if norm == 0.0 {
        return Ok(HermitianEigen {
            values: vec![0.0; n],
            vectors: v,
        });
    }

    let off = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = n == 1;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if off(&a) <= f64::EPSILON * norm * 0.25 {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phase = apq / mag;
                let tau = (aqq - app) / (2.0 * mag);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // J = diag(1, conj(phase)) · [[c, s], [-s, c]] on (p, q)
                let jpp = C64::new(c, 0.0);
                let jpq = C64::new(s, 0.0);
                let jqp = -phase.conj() * s;
                let jqq = phase.conj() * c;
                rotate(&mut a, &mut v, p, q, [jpp, jpq, jqp, jqq]);
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
            }
        }
    }
    if !converged && off(&a) > 1e3 * f64::EPSILON * norm {
        return Err(Error::EigenFailure {
            context: context.to_string(),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, j: [C64; 4]) {
    let n = a.dim();
    let [jpp, jpq, jqp, jqq] = j;
    // A ← A J
    for k in 0..n {
        let (x, y) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = x * jpp + y * jqp;
        a[(k, q)] = x * jpq + y * jqq;
    }
    // A ← J† A
    for k in 0..n {
        let (x, y) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = jpp.conj() * x + jqp.conj() * y;
        a[(q, k)] = jpq.conj() * x + jqq.conj() * y;
    }
    // V ← V J
    for k in 0..n {
        let (x, y) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = x * jpp + y * jqp;
        v[(k, q)] = x * jpq + y * jqq;
    }
}

/// Non-Hermitian path: Hessenberg reduction + shifted QR.
pub fn general_eigenvalues(m: &ComplexMatrix, context: &str) -> Result<Vec<C64>> {
    let n = m.dim();
    let mut h = m.clone();
    hessenberg(&mut h);
    let norm = h.frobenius_norm();
    let mut eig = vec![C64::new(0.0, 0.0); n];
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;

    loop {
        if hi == 0 {
            eig[0] = h[(0, 0)];
            break;
        }
        let mut l = hi;
        while l > 0 {
            let sub = h[(l, l - 1)].norm();
            let diag = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            if sub <= f64::EPSILON * diag || sub <= f64::EPSILON * 1e-3 * norm {
                h[(l, l - 1)] = C64::new(0.0, 0.0);
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig[hi] = h[(hi, hi)];
            hi -= 1;
            iter = 0;
            continue;
        }

        iter += 1;
        total += 1;
        if total > MAX_QR_ITERS_PER_EIGENVALUE * n {
            return Err(Error::EigenFailure {
                context: context.to_string(),
            });
        }

        let mu = if iter % 11 == 10 {
            // exceptional shift to break cycles
            h[(hi, hi)] + C64::new(h[(hi, hi - 1)].norm() * 0.75, 0.0)
        } else {
            wilkinson_shift(&h, hi)
        };

        for k in l..=hi {
            h[(k, k)] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..=hi {
                let (x, y) = (h[(k, j)], h[(k + 1, j)]);
                h[(k, j)] = x * c + s * y;
                h[(k + 1, j)] = -s.conj() * x + y * c;
            }
            rots.push((c, s));
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = l + idx;
            let top = (k + 2).min(hi);
            for i in l..=top {
                let (x, y) = (h[(i, k)], h[(i, k + 1)]);
                h[(i, k)] = x * c + y * s.conj();
                h[(i, k + 1)] = -x * s + y * c;
            }
        }
        for k in l..=hi {
            h[(k, k)] += mu;
        }
    }
    Ok(eig)
}

fn wilkinson_shift(h: &ComplexMatrix, hi: usize) -> C64 {
    let a = h[(hi - 1, hi - 1)];
    let b = h[(hi - 1, hi)];
    let c = h[(hi, hi - 1)];
    let d = h[(hi, hi)];
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m1 = (a + d) * 0.5 + disc;
    let m2 = (a + d) * 0.5 - disc;
    if (m1 - d).norm() < (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Complex Givens rotation with real cosine: `[[c, s], [-s̄, c]]·[x, y]ᵀ = [r, 0]ᵀ`.
fn givens(x: C64, y: C64) -> (C64, C64) {
    let ax = x.norm();
    let ay = y.norm();
    if ay == 0.0 {
        return (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
    }
    let norm = ax.hypot(ay);
    if ax == 0.0 {
        return (C64::new(0.0, 0.0), y.conj() / ay);
    }
    let c = ax / norm;
    let s = (x / ax) * y.conj() / norm;
    (C64::new(c, 0.0), s)
}

fn hessenberg(a: &mut ComplexMatrix) {
    let n = a.dim();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let xnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let phase = if v[0].norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            v[0] / v[0].norm()
        };
        let alpha = -phase * xnorm;
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // A ← (I − 2vv†) A on rows k+1..n
        for j in 0..n {
            let dot: C64 = (0..v.len()).map(|i| v[i].conj() * a[(k + 1 + i, j)]).sum();
            for i in 0..v.len() {
                a[(k + 1 + i, j)] -= v[i] * dot * 2.0;
            }
        }
        // A ← A (I − 2vv†) on cols k+1..n
        for i in 0..n {
            let dot: C64 = (0..v.len()).map(|j| a[(i, k + 1 + j)] * v[j]).sum();
            for j in 0..v.len() {
                a[(i, k + 1 + j)] -= dot * v[j].conj() * 2.0;
            }
        }
        for i in k + 2..n {
            a[(i, k)] = C64::new(0.0, 0.0);
        }
    }
}

/// Singular values in descending order.
pub fn singular_values(m: &ComplexMatrix, context: &str) -> Result<Vec<f64>> {
    let n = m.dim();
    // columns of A as separate vectors
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| (0..n).map(|i| m[(i, j)]).collect()).collect();
    let norm = m.frobenius_norm();
    if norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let tol = n as f64 * f64::EPSILON;
    let floor = (f64::EPSILON * norm).powi(2) * f64::EPSILON;
    let mut converged = n == 1;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                // the inner product itself carries about n·ε·‖p‖‖q‖ of rounding
                if g <= tol * (alpha * beta).sqrt() || g <= floor {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..n {
                    let x = cols[p][k];
                    let y = cols[q][k] * phase.conj();
                    cols[p][k] = x * c - y * s;
                    cols[q][k] = x * s + y * c;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::EigenFailure {
            context: format!("{context} (singular values)"),
        });
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}
