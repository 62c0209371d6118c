//! Globally adaptive Gauss–Kronrod (7/15) quadrature for small vector-valued
//! integrands on finite intervals.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<const N: usize> {
    pub value: [f64; N],
    /// Largest component error estimate.
    pub error: f64,
}

struct Panel<const N: usize> {
    a: f64,
    b: f64,
    value: [f64; N],
    error: f64,
}

fn gk15<const N: usize>(f: &mut impl FnMut(f64) -> [f64; N], a: f64, b: f64) -> Panel<N> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut k = [0.0; N];
    let mut g = [0.0; N];
    let fc = f(c);
    for i in 0..N {
        k[i] = WGK[7] * fc[i];
        g[i] = WG[3] * fc[i];
    }
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        for i in 0..N {
            let s = f1[i] + f2[i];
            k[i] += WGK[j] * s;
            if j % 2 == 1 {
                g[i] += WG[j / 2] * s;
            }
        }
    }
    let mut error = 0.0f64;
    for i in 0..N {
        k[i] *= h;
        g[i] *= h;
        error = error.max((k[i] - g[i]).abs());
    }
    Panel { a, b, value: k, error }
}

/// Integrates `f` over consecutive intervals `[points[i], points[i+1]]`;
/// breakpoints should sit at kinks of the integrand.
pub fn integrate<const N: usize>(
    mut f: impl FnMut(f64) -> [f64; N],
    points: &[f64],
    tol: Tolerance,
) -> Result<Estimate<N>> {
    let mut panels: Vec<Panel<N>> = points
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| gk15(&mut f, w[0], w[1]))
        .collect();
    loop {
        let mut total = [0.0; N];
        let mut err = [0.0; N];
        for p in &panels {
            for i in 0..N {
                total[i] += p.value[i];
                err[i] += p.error;
            }
        }
        let mag = total.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let target = tol.abs.max(tol.rel * mag);
        let worst = err.iter().copied().fold(0.0, f64::max);
        if worst <= target {
            return Ok(Estimate { value: total, error: worst });
        }
        if panels.len() >= tol.max_intervals {
            return Err(Error::Quadrature {
                achieved: worst,
                requested: target,
            });
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one panel");
        let p = panels.swap_remove(idx);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            return Err(Error::Quadrature {
                achieved: worst,
                requested: target,
            });
        }
        panels.push(gk15(&mut f, p.a, mid));
        panels.push(gk15(&mut f, mid, p.b));
    }
}
