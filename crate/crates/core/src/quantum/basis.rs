//! Fixed two-atom basis and ladder operators.
//!
//! Index order is `|g1g2>, |r1g2>, |g1r2>, |r1r2>`. An element written with
//! per-atom indices as `ρ_{a1b1,c2d2}` is `<a1c2|ρ|b1d2>`.

use num_complex::Complex64 as C64;

use super::matrix::ComplexMatrix;

pub const GG: usize = 0;
pub const RG: usize = 1;
pub const GR: usize = 2;
pub const RR: usize = 3;

pub const PAIR_LABELS: [&str; 4] = ["gg", "r1g2", "g1r2", "rr"];
pub const ATOM_LABELS: [&str; 2] = ["g", "r"];

/// Raising operators of the four transitions:
/// `|gg>→|r1g2>`, `|gg>→|g1r2>`, `|r1g2>→|rr>`, `|g1r2>→|rr>`.
pub fn sigma_plus(j: usize) -> ComplexMatrix {
    let (to, from) = match j {
        1 => (RG, GG),
        2 => (GR, GG),
        3 => (RR, RG),
        4 => (RR, GR),
        _ => panic!("transition index {j} outside 1..=4"),
    };
    ComplexMatrix::unit(4, to, from)
}

pub fn sigma_minus(j: usize) -> ComplexMatrix {
    sigma_plus(j).adjoint()
}

/// Two-level lowering operator `|g><e|` in the basis `{g, e}`.
pub fn qubit_lowering() -> ComplexMatrix {
    ComplexMatrix::unit(2, 0, 1)
}

pub fn projector(dim: usize, i: usize) -> ComplexMatrix {
    ComplexMatrix::unit(dim, i, i)
}

/// `σ_y ⊗ σ_y` in the product basis; real, with entries ±1 on the anti-diagonal.
pub fn sigma_y_sigma_y() -> ComplexMatrix {
    let sy = ComplexMatrix::from_rows([
        [C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
        [C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
    ]);
    sy.kron(&sy)
}

/// Symmetric (`sign = +1`) or antisymmetric (`sign = -1`) single-excitation
/// state `(|r1g2> ± |g1r2>)/√2`.
pub fn dressed_state(sign: f64) -> [C64; 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [
        C64::new(0.0, 0.0),
        C64::new(s, 0.0),
        C64::new(sign * s, 0.0),
        C64::new(0.0, 0.0),
    ]
}
