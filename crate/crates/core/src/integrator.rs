//! Explicit Runge–Kutta propagation of density matrices.
//!
//! States are never renormalised or symmetrised; trace and Hermiticity drift
//! are recorded per sample. The adaptive stepper shortens steps to land on
//! sample times. The fixed-step stepper keeps its grid and fills samples
//! that fall between grid points by cubic Hermite interpolation on the
//! step's end points and derivatives.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::Rhs;
use crate::observables::Observable;
use crate::quantum::{ComplexMatrix, DensityMatrix, C64};

/// Trace drift beyond which a run is flagged as degraded.
pub const DEGRADED_TRACE_ERROR: f64 = 1e-7;
/// Minimum eigenvalue below which integration stops.
pub const PHYSICALITY_FLOOR: f64 = -1e-6;
/// Smallest adaptive step, μs.
pub const MIN_STEP: f64 = 1e-12;

const LINEARITY_TOL: f64 = 1e-10;
const LINEARITY_SEED: u64 = 0x5eed_11a7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Classic RK4 with constant step `dt`.
    Fixed,
    /// Dormand–Prince 5(4) with step control on `rel_tol`/`abs_tol`.
    Adaptive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SampleGrid {
    /// `count` uniform intervals over `[0, t_end]`, i.e. `count + 1` samples.
    Uniform(usize),
    /// Explicit sorted sample times.
    Explicit(Vec<f64>),
}

impl SampleGrid {
    pub fn times(&self, t_end: f64) -> Vec<f64> {
        match self {
            SampleGrid::Uniform(n) => {
                let n = (*n).max(1);
                (0..=n).map(|k| t_end * k as f64 / n as f64).collect()
            }
            SampleGrid::Explicit(t) => t.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IntegratorConfig {
    pub mode: Mode,
    /// Step of the fixed-step mode, μs.
    pub dt: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Largest adaptive step, μs; `None` means unbounded.
    pub max_dt: Option<f64>,
    pub t_end: f64,
    pub samples: SampleGrid,
    pub max_steps: usize,
    /// Keep the full state at every sample.
    pub keep_states: bool,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Adaptive,
            dt: 1e-3,
            rel_tol: 1e-8,
            abs_tol: 1e-10,
            max_dt: None,
            t_end: 300.0,
            samples: SampleGrid::Uniform(300),
            max_steps: 50_000_000,
            keep_states: false,
        }
    }
}

impl IntegratorConfig {
    pub fn fixed(dt: f64, t_end: f64, samples: SampleGrid) -> Self {
        Self {
            mode: Mode::Fixed,
            dt,
            t_end,
            samples,
            ..Self::default()
        }
    }

    pub fn adaptive(t_end: f64, samples: SampleGrid) -> Self {
        Self {
            t_end,
            samples,
            ..Self::default()
        }
    }

    /// Every violated constraint, not just the first.
    pub fn problems(&self) -> Vec<String> {
        let mut p = Vec::new();
        let pos = |name: &str, v: f64, p: &mut Vec<String>| {
            if !(v > 0.0 && v.is_finite()) {
                p.push(format!("integrator.{name} must be positive and finite, got {v}"));
            }
        };
        pos("t_end", self.t_end, &mut p);
        match self.mode {
            Mode::Fixed => pos("dt", self.dt, &mut p),
            Mode::Adaptive => {
                pos("rel_tol", self.rel_tol, &mut p);
                pos("abs_tol", self.abs_tol, &mut p);
                if let Some(m) = self.max_dt {
                    pos("max_dt", m, &mut p);
                }
            }
        }
        if self.max_steps == 0 {
            p.push("integrator.max_steps must be at least 1".into());
        }
        match &self.samples {
            SampleGrid::Uniform(0) => p.push("integrator.samples must be at least 1".into()),
            SampleGrid::Uniform(_) => {}
            SampleGrid::Explicit(t) => {
                if t.is_empty() {
                    p.push("integrator.samples: explicit grid is empty".into());
                }
                if t.windows(2).any(|w| w[1] <= w[0]) {
                    p.push("integrator.samples: explicit grid must be strictly increasing".into());
                }
                if t.iter().any(|&x| !(0.0..=self.t_end).contains(&x)) {
                    p.push(format!(
                        "integrator.samples: explicit grid must lie within [0, {}]",
                        self.t_end
                    ));
                }
            }
        }
        p
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.problems();
        if p.is_empty() {
            Ok(())
        } else {
            Err(Error::Integrator(p.join("; ")))
        }
    }
}

/// Per-sample integrator diagnostics, columnar.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    pub trace_error: Vec<f64>,
    pub hermiticity_error: Vec<f64>,
    pub min_eigenvalue: Vec<f64>,
    /// Accepted steps taken up to each sample.
    pub steps: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct RunSummary {
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    pub rhs_evaluations: usize,
    pub max_trace_error: f64,
    pub max_hermiticity_error: f64,
    pub min_eigenvalue: f64,
    /// Set when the trace drifted beyond [`DEGRADED_TRACE_ERROR`].
    pub degraded: bool,
}

/// Sampled trajectory. Observables are stored as columns aligned with
/// `times`; an undefined `g²` is stored as `NaN` and read back as `None`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TimeSeries {
    times: Vec<f64>,
    observables: Vec<Observable>,
    columns: Vec<Vec<f64>>,
    states: Option<Vec<DensityMatrix>>,
    diagnostics: Diagnostics,
    summary: RunSummary,
}

impl TimeSeries {
    /// Builds a series from precomputed columns (no diagnostics).
    pub fn from_columns(times: Vec<f64>, columns: Vec<(Observable, Vec<f64>)>) -> Result<Self> {
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter("times must be strictly increasing".into()));
        }
        for (o, c) in &columns {
            if c.len() != times.len() {
                return Err(Error::DimensionMismatch {
                    op: "TimeSeries column",
                    expected: times.len(),
                    found: c.len(),
                });
            }
            let _ = o;
        }
        let (observables, columns) = columns.into_iter().unzip();
        Ok(Self {
            times,
            observables,
            columns,
            ..Self::default()
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn observables(&self) -> &[Observable] {
        &self.observables
    }

    pub fn column(&self, o: Observable) -> Result<&[f64]> {
        self.observables
            .iter()
            .position(|&x| x == o)
            .map(|i| self.columns[i].as_slice())
            .ok_or_else(|| Error::MissingObservable {
                observable: o.name().into(),
                reason: "not recorded in this series".into(),
            })
    }

    /// Value at sample `k`, `None` where undefined.
    pub fn value(&self, o: Observable, k: usize) -> Result<Option<f64>> {
        let v = self.column(o)?[k];
        Ok(if v.is_nan() { None } else { Some(v) })
    }

    pub fn states(&self) -> Option<&[DensityMatrix]> {
        self.states.as_deref()
    }

    pub fn diagnostics(&self) -> &Diagnostics {
        &self.diagnostics
    }

    pub fn summary(&self) -> &RunSummary {
        &self.summary
    }

    pub fn is_degraded(&self) -> bool {
        self.summary.degraded
    }
}

/// Integrates `rhs` from `rho0` at `t = 0`, sampling `observables`.
///
/// Physicality is checked at sample times; a minimum eigenvalue below
/// [`PHYSICALITY_FLOOR`] aborts with the sample time.
pub fn integrate<R: Rhs + ?Sized>(
    rhs: &R,
    rho0: &DensityMatrix,
    config: &IntegratorConfig,
    observables: &[Observable],
) -> Result<TimeSeries> {
    config.validate()?;
    if rhs.dim() != rho0.dim() {
        return Err(Error::DimensionMismatch {
            op: "integrate",
            expected: rhs.dim(),
            found: rho0.dim(),
        });
    }
    for &o in observables {
        if !o.supports_dim(rho0.dim()) {
            return Err(Error::MissingObservable {
                observable: o.name().into(),
                reason: format!("not defined for {}-level states", rho0.dim()),
            });
        }
    }
    let v = rho0.validity()?;
    if !v.is_physical() {
        return Err(Error::InvalidState(format!(
            "initial state: {}",
            v.violations().join(", ")
        )));
    }
    check_linearity(rhs)?;

    let sample_times = config.samples.times(config.t_end);
    let mut rec = Recorder::new(rho0.labels(), observables, config.keep_states, sample_times.len());
    let mut next = 0usize;

    let mut t = 0.0;
    let mut y = rho0.matrix().clone();
    let mut f = rhs.eval(&y);
    let mut stats = RunSummary {
        rhs_evaluations: 1,
        ..RunSummary::default()
    };

    while next < sample_times.len() && sample_times[next] <= 0.0 {
        rec.push(sample_times[next], y.clone(), stats.accepted_steps)?;
        next += 1;
    }

    let mut h = match config.mode {
        Mode::Fixed => config.dt,
        Mode::Adaptive => initial_step(rhs, &y, &f, config, &mut stats),
    };
    let mut step_index = 0usize;

    while next < sample_times.len() {
        if stats.accepted_steps >= config.max_steps {
            return Err(Error::StepLimit {
                max_steps: config.max_steps,
                t,
            });
        }
        let (t1, y1, f1) = match config.mode {
            Mode::Fixed => {
                step_index += 1;
                // step ends computed from the index so they carry no drift
                let t1 = (step_index as f64 * config.dt).min(config.t_end);
                let (y1, f1) = rk4_step(rhs, &y, &f, t1 - t);
                stats.rhs_evaluations += 4;
                (t1, y1, f1)
            }
            Mode::Adaptive => loop {
                let target = sample_times[next];
                let hmax = config.max_dt.unwrap_or(f64::INFINITY).min(target - t);
                let clipped = h >= hmax;
                let hs = h.min(hmax);
                if hs < MIN_STEP {
                    return Err(Error::StepUnderflow { t, h: hs });
                }
                let (y1, f1, err) = dopri_step(rhs, &y, &f, hs, config);
                stats.rhs_evaluations += 6;
                let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
                if err <= 1.0 {
                    // a step shortened to meet a sample says nothing about the
                    // step the controller would have chosen, so keep that one
                    h = if clipped { h.max(hs * fac) } else { hs * fac };
                    let t1 = if hs == target - t { target } else { t + hs };
                    break (t1, y1, f1);
                }
                stats.rejected_steps += 1;
                h = hs * fac.min(1.0);
            },
        };
        stats.accepted_steps += 1;

        let dt = t1 - t;
        while next < sample_times.len() && sample_times[next] <= t1 {
            let ts = sample_times[next];
            let ys = if (t1 - ts).abs() <= 1e-12 * t1.max(1.0) {
                y1.clone()
            } else {
                hermite(&y, &f, &y1, &f1, (ts - t) / dt, dt)
            };
            rec.push(ts, ys, stats.accepted_steps)?;
            next += 1;
        }
        t = t1;
        y = y1;
        f = f1;
        if t >= config.t_end && next < sample_times.len() {
            // remaining samples sit at t_end up to rounding
            while next < sample_times.len() {
                rec.push(sample_times[next], y.clone(), stats.accepted_steps)?;
                next += 1;
            }
        }
    }

    Ok(rec.finish(stats))
}

struct Recorder {
    labels: &'static [&'static str],
    observables: Vec<Observable>,
    series: TimeSeries,
}

impl Recorder {
    fn new(labels: &'static [&'static str], observables: &[Observable], keep: bool, cap: usize) -> Self {
        let series = TimeSeries {
            times: Vec::with_capacity(cap),
            observables: observables.to_vec(),
            columns: observables.iter().map(|_| Vec::with_capacity(cap)).collect(),
            states: keep.then(|| Vec::with_capacity(cap)),
            diagnostics: Diagnostics {
                trace_error: Vec::with_capacity(cap),
                hermiticity_error: Vec::with_capacity(cap),
                min_eigenvalue: Vec::with_capacity(cap),
                steps: Vec::with_capacity(cap),
            },
            summary: RunSummary::default(),
        };
        Self {
            labels,
            observables: observables.to_vec(),
            series,
        }
    }

    fn push(&mut self, t: f64, y: ComplexMatrix, steps: usize) -> Result<()> {
        let rho = DensityMatrix::new(y, self.labels)?;
        let v = rho.validity()?;
        if v.min_eigenvalue < PHYSICALITY_FLOOR {
            return Err(Error::PhysicalityBreach {
                t,
                min_eigenvalue: v.min_eigenvalue,
            });
        }
        let s = &mut self.series;
        s.times.push(t);
        for (col, o) in s.columns.iter_mut().zip(&self.observables) {
            col.push(o.evaluate(&rho)?);
        }
        s.diagnostics.trace_error.push(v.trace_error);
        s.diagnostics.hermiticity_error.push(v.hermiticity_error);
        s.diagnostics.min_eigenvalue.push(v.min_eigenvalue);
        s.diagnostics.steps.push(steps);
        if let Some(states) = s.states.as_mut() {
            states.push(rho);
        }
        Ok(())
    }

    fn finish(mut self, mut stats: RunSummary) -> TimeSeries {
        let d = &self.series.diagnostics;
        stats.max_trace_error = d.trace_error.iter().copied().fold(0.0, f64::max);
        stats.max_hermiticity_error = d.hermiticity_error.iter().copied().fold(0.0, f64::max);
        stats.min_eigenvalue = d.min_eigenvalue.iter().copied().fold(f64::INFINITY, f64::min);
        stats.degraded = stats.max_trace_error >= DEGRADED_TRACE_ERROR;
        self.series.summary = stats;
        self.series
    }
}

fn hermite(y0: &ComplexMatrix, f0: &ComplexMatrix, y1: &ComplexMatrix, f1: &ComplexMatrix, s: f64, h: f64) -> ComplexMatrix {
    let s2 = s * s;
    let s3 = s2 * s;
    let mut out = y0.scale_real(2.0 * s3 - 3.0 * s2 + 1.0);
    out.add_scaled((s3 - 2.0 * s2 + s) * h, f0);
    out.add_scaled(-2.0 * s3 + 3.0 * s2, y1);
    out.add_scaled((s3 - s2) * h, f1);
    out
}

/// One classic RK4 step; returns the new state and its derivative.
fn rk4_step<R: Rhs + ?Sized>(rhs: &R, y: &ComplexMatrix, k1: &ComplexMatrix, h: f64) -> (ComplexMatrix, ComplexMatrix) {
    let stage = |k: &ComplexMatrix, a: f64| {
        let mut s = y.clone();
        s.add_scaled(a * h, k);
        s
    };
    let k2 = rhs.eval(&stage(k1, 0.5));
    let k3 = rhs.eval(&stage(&k2, 0.5));
    let k4 = rhs.eval(&stage(&k3, 1.0));
    let mut y1 = y.clone();
    y1.add_scaled(h / 6.0, k1);
    y1.add_scaled(h / 3.0, &k2);
    y1.add_scaled(h / 3.0, &k3);
    y1.add_scaled(h / 6.0, &k4);
    let f1 = rhs.eval(&y1);
    (y1, f1)
}

// Dormand–Prince 5(4) tableau.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth-order minus embedded fourth-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// One Dormand–Prince step (FSAL). Returns the fifth-order state, its
/// derivative and the scaled RMS error estimate.
fn dopri_step<R: Rhs + ?Sized>(
    rhs: &R,
    y: &ComplexMatrix,
    k1: &ComplexMatrix,
    h: f64,
    cfg: &IntegratorConfig,
) -> (ComplexMatrix, ComplexMatrix, f64) {
    let combo = |terms: &[(f64, &ComplexMatrix)]| {
        let mut s = y.clone();
        for (a, k) in terms {
            s.add_scaled(a * h, k);
        }
        s
    };
    let k2 = rhs.eval(&combo(&[(A21, k1)]));
    let k3 = rhs.eval(&combo(&[(A31, k1), (A32, &k2)]));
    let k4 = rhs.eval(&combo(&[(A41, k1), (A42, &k2), (A43, &k3)]));
    let k5 = rhs.eval(&combo(&[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
    let k6 = rhs.eval(&combo(&[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
    let y1 = combo(&[(B1, k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
    let k7 = rhs.eval(&y1);

    let mut sum = 0.0;
    let n = y.as_slice().len();
    for i in 0..n {
        let e = (k1.as_slice()[i] * E1
            + k3.as_slice()[i] * E3
            + k4.as_slice()[i] * E4
            + k5.as_slice()[i] * E5
            + k6.as_slice()[i] * E6
            + k7.as_slice()[i] * E7)
            * h;
        let y0 = y.as_slice()[i];
        let yn = y1.as_slice()[i];
        let sc_re = cfg.abs_tol + cfg.rel_tol * y0.re.abs().max(yn.re.abs());
        let sc_im = cfg.abs_tol + cfg.rel_tol * y0.im.abs().max(yn.im.abs());
        sum += (e.re / sc_re).powi(2) + (e.im / sc_im).powi(2);
    }
    let err = (sum / (2 * n) as f64).sqrt();
    (y1, k7, err)
}

fn initial_step<R: Rhs + ?Sized>(
    rhs: &R,
    y: &ComplexMatrix,
    f: &ComplexMatrix,
    cfg: &IntegratorConfig,
    stats: &mut RunSummary,
) -> f64 {
    let scale = |m: &ComplexMatrix, base: &ComplexMatrix| {
        let n = m.as_slice().len();
        let s: f64 = m
            .as_slice()
            .iter()
            .zip(base.as_slice())
            .map(|(v, b)| v.norm_sqr() / (cfg.abs_tol + cfg.rel_tol * b.norm()).powi(2))
            .sum();
        (s / (2 * n) as f64).sqrt()
    };
    let d0 = scale(y, y);
    let d1 = scale(f, y);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    let mut y1 = y.clone();
    y1.add_scaled(h0, f);
    let f1 = rhs.eval(&y1);
    stats.rhs_evaluations += 1;
    let d2 = scale(&(&f1 - f), y) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1).min(cfg.t_end)
}

/// Rejects right-hand sides that are not linear in the state, using two
/// seeded random matrices and random complex weights.
pub fn check_linearity<R: Rhs + ?Sized>(rhs: &R) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(LINEARITY_SEED);
    let n = rhs.dim();
    let rand_c = |rng: &mut ChaCha8Rng| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let r1 = ComplexMatrix::from_fn(n, |_, _| rand_c(&mut rng));
    let r2 = ComplexMatrix::from_fn(n, |_, _| rand_c(&mut rng));
    let a = rand_c(&mut rng);
    let b = rand_c(&mut rng);
    let mut mix = r1.scale(a);
    mix.add_scaled_complex(b, &r2);
    let lhs = rhs.eval(&mix);
    let mut sep = rhs.eval(&r1).scale(a);
    sep.add_scaled_complex(b, &rhs.eval(&r2));
    let scale = lhs.max_abs().max(sep.max_abs()).max(f64::MIN_POSITIVE);
    let defect = lhs.max_abs_diff(&sep) / scale;
    if defect > LINEARITY_TOL {
        return Err(Error::NonLinearRhs(defect));
    }
    Ok(())
}

/// Final state after fixed-step RK4 with step `dt` (last step shortened to
/// land on `t_end`).
pub fn propagate_fixed<R: Rhs + ?Sized>(rhs: &R, rho0: &ComplexMatrix, t_end: f64, dt: f64) -> Result<ComplexMatrix> {
    if !(dt > 0.0 && t_end >= 0.0) {
        return Err(Error::Integrator(format!("need dt > 0 and t_end >= 0, got dt={dt}, t_end={t_end}")));
    }
    let mut y = rho0.clone();
    let mut f = rhs.eval(&y);
    let mut t = 0.0;
    let mut k = 0usize;
    while t < t_end {
        k += 1;
        let t1 = (k as f64 * dt).min(t_end);
        let (y1, f1) = rk4_step(rhs, &y, &f, t1 - t);
        y = y1;
        f = f1;
        t = t1;
    }
    Ok(y)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergenceOrder {
    Estimated(f64),
    /// Both errors sit at the rounding floor, so no order can be read off.
    Saturated,
}

impl ConvergenceOrder {
    pub fn value(self) -> Option<f64> {
        match self {
            ConvergenceOrder::Estimated(p) => Some(p),
            ConvergenceOrder::Saturated => None,
        }
    }
}

/// Observed order of fixed-step RK4: runs at `dt` and `dt/2` against a
/// `dt/8` reference and returns `log₂(e(dt)/e(dt/2))`.
pub fn convergence_order<R: Rhs + ?Sized>(rhs: &R, rho0: &DensityMatrix, t_end: f64, dt: f64) -> Result<ConvergenceOrder> {
    let y0 = rho0.matrix();
    let reference = propagate_fixed(rhs, y0, t_end, dt / 8.0)?;
    let coarse = propagate_fixed(rhs, y0, t_end, dt)?;
    let fine = propagate_fixed(rhs, y0, t_end, dt / 2.0)?;
    let e1 = coarse.max_abs_diff(&reference);
    let e2 = fine.max_abs_diff(&reference);
    let floor = 1e3 * f64::EPSILON * reference.max_abs().max(1.0);
    if e1 <= floor || e2 <= floor / 16.0 {
        return Ok(ConvergenceOrder::Saturated);
    }
    Ok(ConvergenceOrder::Estimated((e1 / e2).log2()))
}
