//! Time-independent Lindblad generators in effective-Hamiltonian form.
//!
//! `dρ/dt = −i(H_L ρ − ρ H_R) + Σ_k c_k A_k ρ B_k†`, where `H_L` and `H_R`
//! absorb the anticommutator parts of every dissipator. For a Hermitian
//! generator `H_R = H_L†`. Evaluation costs a handful of small products.

use crate::quantum::{ComplexMatrix, C64};

/// A linear, autonomous right-hand side `ρ ↦ dρ/dt`.
pub trait Rhs: Sync {
    fn dim(&self) -> usize;
    fn eval(&self, rho: &ComplexMatrix) -> ComplexMatrix;
}

impl<F> Rhs for (usize, F)
where
    F: Fn(&ComplexMatrix) -> ComplexMatrix + Sync,
{
    fn dim(&self) -> usize {
        self.0
    }

    fn eval(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        (self.1)(rho)
    }
}

#[derive(Clone, Debug)]
struct Jump {
    coef: C64,
    a: ComplexMatrix,
    b_adj: ComplexMatrix,
}

#[derive(Clone, Debug)]
pub struct LindbladGenerator {
    h_left: ComplexMatrix,
    h_right: ComplexMatrix,
    jumps: Vec<Jump>,
}

impl LindbladGenerator {
    pub fn new(hamiltonian: &ComplexMatrix) -> Self {
        Self {
            h_left: hamiltonian.clone(),
            h_right: hamiltonian.clone(),
            jumps: Vec::new(),
        }
    }

    /// Adds `rate · L[O]`.
    pub fn dissipator(self, rate: f64, o: &ComplexMatrix) -> Self {
        if rate != 0.0 {
            self.cross(C64::new(rate, 0.0), o, o)
        } else {
            self
        }
    }

    /// Adds `coef · (AρB† − ½{B†A, ρ})` without its adjoint.
    pub fn cross(mut self, coef: C64, a: &ComplexMatrix, b: &ComplexMatrix) -> Self {
        if coef == C64::new(0.0, 0.0) {
            return self;
        }
        let b_adj = b.adjoint();
        // For a non-Hermitian coefficient product the left and right factors
        // are not adjoints of each other, so both are stored.
        let k = b_adj.matmul(a).scale(coef * 0.5);
        self.h_left.add_scaled_complex(C64::new(0.0, -1.0), &k);
        self.h_right.add_scaled_complex(C64::new(0.0, 1.0), &k);
        self.jumps.push(Jump {
            coef,
            a: a.clone(),
            b_adj,
        });
        self
    }

    /// Adds `coef·cross(A, B) + h.c.`, the Hermitian combination.
    pub fn cross_hermitian(self, coef: f64, a: &ComplexMatrix, b: &ComplexMatrix) -> Self {
        let c = C64::new(coef, 0.0);
        self.cross(c, a, b).cross(c, b, a)
    }

    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.h_left.matmul(rho);
        out -= &rho.matmul(&self.h_right);
        out = out.scale(C64::new(0.0, -1.0));
        for j in &self.jumps {
            let term = j.a.matmul(rho).matmul(&j.b_adj);
            out.add_scaled_complex(j.coef, &term);
        }
        out
    }
}

impl Rhs for LindbladGenerator {
    fn dim(&self) -> usize {
        self.h_left.dim()
    }

    fn eval(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        self.apply(rho)
    }
}
