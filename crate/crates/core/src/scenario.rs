//! Scenario configuration, the preset catalog and sweep execution.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::continuous::{continuous_pair_model, continuous_rates, upsilon_continuous, CouplingRates};
use crate::error::{Error, Result};
use crate::export::{self, Format};
use crate::giant::{giant_population_analytic, upsilon, GiantModel, GiantParams};
use crate::integrator::{integrate, IntegratorConfig, RunSummary, SampleGrid, TimeSeries};
use crate::observables::Observable;
use crate::pair::{exchange_rates, IntrinsicDecay, PairModel, PairParams};
use crate::quantum::basis::{ATOM_LABELS, PAIR_LABELS};
use crate::quantum::{ComplexMatrix, DensityMatrix, C64};

/// Environment variable overriding the sweep worker count.
pub const WORKERS_ENV: &str = "GIANTQED_WORKERS";

pub const SWEEP_PARAMETERS: [&str; 7] = ["gamma", "big_gamma", "omega_c", "delta_c", "phi", "v6", "theta"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Pair,
    Giant,
    PairContinuous,
}

impl ModelKind {
    pub fn dim(self) -> usize {
        match self {
            ModelKind::Giant => 2,
            _ => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialState {
    Ground,
    DoubleExcited,
    /// Bright state `(|r1g2> + |g1r2>)/√2`.
    Plus,
    /// Dark state `(|r1g2> − |g1r2>)/√2`.
    Minus,
    /// Row-major `[re, im]` entries.
    Custom(Vec<Vec<[f64; 2]>>),
}

impl InitialState {
    pub fn build(&self, model: ModelKind) -> Result<DensityMatrix> {
        let labels: &'static [&'static str] = if model == ModelKind::Giant { &ATOM_LABELS } else { &PAIR_LABELS };
        let n = labels.len();
        match self {
            InitialState::Ground => DensityMatrix::basis_state(0, labels),
            InitialState::DoubleExcited => DensityMatrix::basis_state(n - 1, labels),
            InitialState::Plus | InitialState::Minus if n == 2 => Err(Error::InvalidParameter(
                "dressed initial states need the pair model".into(),
            )),
            InitialState::Plus => Ok(crate::pair::dressed_state(1.0)),
            InitialState::Minus => Ok(crate::pair::dressed_state(-1.0)),
            InitialState::Custom(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::DimensionMismatch {
                        op: "custom initial state",
                        expected: n,
                        found: rows.len(),
                    });
                }
                let m = ComplexMatrix::from_fn(n, |i, j| C64::new(rows[i][j][0], rows[i][j][1]));
                DensityMatrix::checked(m, labels)
            }
        }
    }
}

/// Model parameters as written in a scenario file.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioParams {
    pub gamma: f64,
    pub big_gamma: f64,
    pub omega_c: C64,
    pub delta_c: f64,
    pub phi: f64,
    pub v6: f64,
    pub intrinsic_decay: IntrinsicDecay,
    /// Coupling width `Θ`, only for the continuous model.
    pub theta: f64,
}

impl Default for ScenarioParams {
    fn default() -> Self {
        let p = PairParams::default();
        Self {
            gamma: p.gamma,
            big_gamma: p.big_gamma,
            omega_c: p.omega_c,
            delta_c: p.delta_c,
            phi: p.phi,
            v6: p.v6,
            intrinsic_decay: p.intrinsic_decay,
            theta: 0.0,
        }
    }
}

impl ScenarioParams {
    pub fn pair(&self) -> PairParams {
        PairParams {
            gamma: self.gamma,
            big_gamma: self.big_gamma,
            omega_c: self.omega_c,
            delta_c: self.delta_c,
            phi: self.phi,
            v6: self.v6,
            intrinsic_decay: self.intrinsic_decay,
        }
    }

    fn with(mut self, parameter: &str, value: f64) -> Result<Self> {
        match parameter {
            "gamma" => self.gamma = value,
            "big_gamma" => self.big_gamma = value,
            "omega_c" => self.omega_c = C64::new(value, 0.0),
            "delta_c" => self.delta_c = value,
            "phi" => self.phi = value,
            "v6" => self.v6 = value,
            "theta" => self.theta = value,
            other => {
                return Err(Error::Config(vec![format!(
                    "unknown sweep parameter `{other}` (expected one of {})",
                    SWEEP_PARAMETERS.join(", ")
                )]))
            }
        }
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub parameter: String,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    /// Directory receiving data files and the manifest.
    pub path: PathBuf,
    pub format: Format,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            path: PathBuf::from("out"),
            format: Format::Csv,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    /// File stem for outputs.
    #[serde(default = "default_name")]
    pub name: String,
    pub model: ModelKind,
    #[serde(default)]
    pub params: ScenarioParams,
    #[serde(default = "default_initial_state")]
    pub initial_state: InitialState,
    #[serde(default)]
    pub integrator: IntegratorConfig,
    #[serde(default = "default_observables")]
    pub observables: Vec<String>,
    #[serde(default)]
    pub sweep: Option<Sweep>,
    #[serde(default)]
    pub output: OutputConfig,
}

fn default_name() -> String {
    "scenario".into()
}

fn default_initial_state() -> InitialState {
    InitialState::DoubleExcited
}

fn default_observables() -> Vec<String> {
    vec!["rr".into()]
}

impl ScenarioConfig {
    pub fn new(name: &str, model: ModelKind, params: ScenarioParams) -> Self {
        Self {
            name: name.into(),
            model,
            params,
            initial_state: default_initial_state(),
            integrator: IntegratorConfig::default(),
            observables: default_observables(),
            sweep: None,
            output: OutputConfig::default(),
        }
    }

    /// Parses a scenario file, applying `key.path=value` overrides first.
    pub fn from_toml_str(text: &str, overrides: &[String]) -> Result<Self> {
        let mut table: toml::Table = toml::from_str(text).map_err(|e| Error::Config(vec![e.to_string()]))?;
        let mut errs = Vec::new();
        for o in overrides {
            if let Err(e) = apply_override(&mut table, o) {
                errs.push(e);
            }
        }
        normalize_numbers(&mut table, &mut errs);
        if !errs.is_empty() {
            return Err(Error::Config(errs));
        }
        let config: Self = toml::Value::Table(table)
            .try_into()
            .map_err(|e: toml::de::Error| Error::Config(vec![e.to_string()]))?;
        config.validate()?;
        Ok(config)
    }

    /// Loads a `.toml` scenario, or the configuration echoed in a run manifest
    /// when the file ends in `.json`.
    pub fn load(path: &Path, overrides: &[String]) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        if path.extension().is_some_and(|e| e == "json") {
            let manifest: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Config(vec![format!("{}: {e}", path.display())]))?;
            let config = manifest.get("config").cloned().unwrap_or(manifest);
            let config: Self = serde_json::from_value(config)
                .map_err(|e| Error::Config(vec![format!("{}: {e}", path.display())]))?;
            return config.with_overrides(overrides);
        }
        Self::from_toml_str(&text, overrides)
    }

    /// Applies `key.path=value` overrides to this configuration and validates
    /// the result.
    pub fn with_overrides(&self, overrides: &[String]) -> Result<Self> {
        let text = toml::to_string(self).map_err(|e| Error::Serialization(e.to_string()))?;
        Self::from_toml_str(&text, overrides)
    }

    pub fn observables(&self) -> Result<Vec<Observable>> {
        let mut errs = Vec::new();
        let mut out = Vec::new();
        for name in &self.observables {
            match name.parse::<Observable>() {
                Ok(o) if o.supports_dim(self.model.dim()) => out.push(o),
                Ok(o) => errs.push(format!("observable `{o}` is not defined for the {:?} model", self.model)),
                Err(e) => errs.push(e.to_string()),
            }
        }
        if self.observables.is_empty() {
            errs.push("at least one observable is required".into());
        }
        if errs.is_empty() {
            Ok(out)
        } else {
            Err(Error::Config(errs))
        }
    }

    /// Parameter sets of all sweep points, in declared order.
    pub fn points(&self) -> Result<Vec<SweepPoint>> {
        match &self.sweep {
            None => Ok(vec![SweepPoint {
                label: "base".into(),
                value: None,
                params: self.params,
            }]),
            Some(s) => s
                .values
                .iter()
                .map(|&v| {
                    Ok(SweepPoint {
                        label: format!("{}={}", s.parameter, format_value(&s.parameter, v)),
                        value: Some(v),
                        params: self.params.with(&s.parameter, v)?,
                    })
                })
                .collect(),
        }
    }

    /// Every problem with the configuration.
    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        if self.name.is_empty() || self.name.contains(['/', '\\']) {
            errs.push(format!("name `{}` is not a valid file stem", self.name));
        }
        if let Err(Error::Config(e)) = self.observables() {
            errs.extend(e);
        }
        errs.extend(self.integrator.problems().into_iter().map(|p| format!("integrator: {p}")));
        if let Err(e) = self.initial_state.build(self.model) {
            errs.push(format!("initial_state: {e}"));
        }
        if self.model != ModelKind::PairContinuous && self.params.theta != 0.0 {
            errs.push("params.theta only applies to the pair_continuous model".into());
        }
        if let Some(s) = &self.sweep {
            if !SWEEP_PARAMETERS.contains(&s.parameter.as_str()) {
                errs.push(format!(
                    "unknown sweep parameter `{}` (expected one of {})",
                    s.parameter,
                    SWEEP_PARAMETERS.join(", ")
                ));
            } else if s.parameter == "theta" && self.model != ModelKind::PairContinuous {
                errs.push("sweeping theta needs the pair_continuous model".into());
            }
            if s.values.is_empty() {
                errs.push("sweep.values is empty".into());
            }
        }
        match self.points() {
            Ok(points) => {
                let many = points.len() > 1;
                for p in &points {
                    for e in point_problems(self.model, &p.params) {
                        errs.push(if many { format!("{}: {e}", p.label) } else { e });
                    }
                }
            }
            Err(_) => errs.extend(point_problems(self.model, &self.params)),
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(errs))
        }
    }
}

fn point_problems(model: ModelKind, p: &ScenarioParams) -> Vec<String> {
    let mut errs = Vec::new();
    if let Err(Error::InvalidParameter(e)) = p.pair().validate() {
        errs.extend(e.split("; ").map(String::from));
    }
    if !(p.theta.is_finite() && p.theta >= 0.0) {
        errs.push(format!("theta must be finite and non-negative, got {}", p.theta));
    }
    match model {
        ModelKind::Giant => {
            if p.delta_c == 0.0 {
                errs.push(Error::ZeroDetuning.to_string());
            }
        }
        ModelKind::PairContinuous if errs.is_empty() => {
            if let Err(e) = continuous_rates(p.big_gamma, p.phi, p.theta) {
                errs.push(e.to_string());
            }
        }
        _ => {}
    }
    errs
}

fn format_value(parameter: &str, v: f64) -> String {
    if parameter == "phi" || parameter == "theta" {
        let k = v / PI;
        if (k * 1e6).round() == k * 1e6 {
            return format!("{k}pi");
        }
    }
    format!("{v}")
}

/// Parses literals such as `40.5pi`, `-pi/2` or `5pi/2`.
pub fn parse_pi_literal(s: &str) -> Option<f64> {
    let s: String = s.trim().to_lowercase().replace('π', "pi").replace(' ', "");
    let (head, tail) = s.split_once("pi")?;
    let head = head.strip_suffix('*').unwrap_or(head);
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().ok()?,
    };
    let den = match tail {
        "" => 1.0,
        t => t.strip_prefix('/')?.parse::<f64>().ok()?,
    };
    Some(coef * PI / den)
}

fn apply_override(table: &mut toml::Table, spec: &str) -> std::result::Result<(), String> {
    let (key, raw) = spec
        .split_once('=')
        .ok_or_else(|| format!("override `{spec}` is not of the form key=value"))?;
    let value = toml::from_str::<toml::Table>(&format!("v = {raw}"))
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(raw.trim().to_string()));
    let path: Vec<&str> = key.trim().split('.').collect();
    let (last, parents) = path.split_last().expect("split yields at least one item");
    let mut cur = table;
    for p in parents {
        cur = cur
            .entry(p.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()))
            .as_table_mut()
            .ok_or_else(|| format!("override `{key}`: `{p}` is not a table"))?;
    }
    cur.insert(last.to_string(), value);
    Ok(())
}

/// Resolves `pi` literals in parameters and sweep values, and lets a real
/// drive amplitude stand for `[re, 0]`.
fn normalize_numbers(table: &mut toml::Table, errs: &mut Vec<String>) {
    fn resolve(v: &mut toml::Value, at: &str, errs: &mut Vec<String>) {
        if let toml::Value::String(s) = v {
            match parse_pi_literal(s) {
                Some(x) => *v = toml::Value::Float(x),
                None => errs.push(format!("{at}: `{s}` is not a number")),
            }
        }
    }
    if let Some(params) = table.get_mut("params").and_then(|p| p.as_table_mut()) {
        for (k, v) in params.iter_mut() {
            if k == "intrinsic_decay" {
                continue;
            }
            if let toml::Value::Array(items) = v {
                for x in items.iter_mut() {
                    resolve(x, &format!("params.{k}"), errs);
                }
            } else {
                resolve(v, &format!("params.{k}"), errs);
            }
        }
        if let Some(w) = params.get_mut("omega_c") {
            if w.is_float() || w.is_integer() {
                *w = toml::Value::Array(vec![w.clone(), toml::Value::Float(0.0)]);
            }
        }
    }
    if let Some(values) = table
        .get_mut("sweep")
        .and_then(|s| s.as_table_mut())
        .and_then(|s| s.get_mut("values"))
        .and_then(|v| v.as_array_mut())
    {
        for v in values.iter_mut() {
            resolve(v, "sweep.values", errs);
            if let toml::Value::Integer(i) = v {
                *v = toml::Value::Float(*i as f64);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepPoint {
    pub label: String,
    pub value: Option<f64>,
    pub params: ScenarioParams,
}

/// Rates derived from a point's parameters.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Derived {
    pub gamma_ex: f64,
    pub j_ex: f64,
    pub upsilon: Option<C64>,
    pub upsilon_continuous: Option<C64>,
    pub coupling_rates: Option<CouplingRates>,
    pub warnings: Vec<String>,
}

impl Derived {
    pub fn of(model: ModelKind, p: &ScenarioParams) -> Self {
        let pair = p.pair();
        let ex = exchange_rates(&pair);
        let rates = (model == ModelKind::PairContinuous)
            .then(|| continuous_rates(p.big_gamma, p.phi, p.theta).ok())
            .flatten();
        Self {
            gamma_ex: ex.gamma_ex,
            j_ex: ex.j_ex,
            upsilon: upsilon(&pair).ok(),
            upsilon_continuous: rates.as_ref().and_then(|r| upsilon_continuous(&pair, r).ok()),
            coupling_rates: rates,
            warnings: pair.regime_warnings(),
        }
    }
}

#[derive(Debug)]
pub struct PointOutcome {
    pub point: SweepPoint,
    pub derived: Derived,
    pub result: Result<TimeSeries>,
}

#[derive(Debug)]
pub struct ScenarioRun {
    pub config: ScenarioConfig,
    pub points: Vec<PointOutcome>,
    pub wall_time_s: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointManifest {
    pub index: usize,
    pub label: String,
    pub value: Option<f64>,
    pub file: Option<String>,
    pub status: &'static str,
    pub error: Option<String>,
    pub summary: Option<RunSummary>,
    pub derived: Derived,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub version: &'static str,
    pub config: ScenarioConfig,
    pub wall_time_s: f64,
    pub workers: usize,
    pub points: Vec<PointManifest>,
}

/// Worker count from [`WORKERS_ENV`], falling back to the CPU count.
pub fn worker_count() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Error::Config(vec![format!("{WORKERS_ENV} must be a positive integer, got `{v}`")])),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Runs every sweep point. A failing point is recorded and does not stop
/// the others.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioRun> {
    config.validate()?;
    let observables = config.observables()?;
    let rho0 = config.initial_state.build(config.model)?;
    let points = config.points()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count()?)
        .build()
        .map_err(|e| Error::Integrator(e.to_string()))?;
    let start = Instant::now();
    let outcomes = pool.install(|| {
        points
            .into_par_iter()
            .map(|point| PointOutcome {
                derived: Derived::of(config.model, &point.params),
                result: run_point(config.model, &point.params, &rho0, &config.integrator, &observables),
                point,
            })
            .collect()
    });
    Ok(ScenarioRun {
        config: config.clone(),
        points: outcomes,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

pub fn run_point(
    model: ModelKind,
    params: &ScenarioParams,
    rho0: &DensityMatrix,
    integrator: &IntegratorConfig,
    observables: &[Observable],
) -> Result<TimeSeries> {
    let pair = params.pair();
    match model {
        ModelKind::Pair => integrate(&PairModel::new(&pair)?, rho0, integrator, observables),
        ModelKind::PairContinuous => {
            let rates = continuous_rates(params.big_gamma, params.phi, params.theta)?;
            integrate(&continuous_pair_model(&pair, &rates)?, rho0, integrator, observables)
        }
        ModelKind::Giant => {
            let gp = GiantParams::from_pair(&pair)?;
            let m = rho0.matrix();
            if m[(0, 1)].norm() == 0.0 {
                giant_closed_form(&gp, m[(1, 1)].re, integrator, observables)
            } else {
                integrate(&GiantModel::new(&gp)?, rho0, integrator, observables)
            }
        }
    }
}

fn giant_closed_form(
    gp: &GiantParams,
    rr0: f64,
    integrator: &IntegratorConfig,
    observables: &[Observable],
) -> Result<TimeSeries> {
    integrator.validate()?;
    gp.validate()?;
    let times = integrator.samples.times(integrator.t_end);
    let rr: Vec<f64> = times.iter().map(|&t| giant_population_analytic(gp, t, rr0)).collect();
    let columns = observables
        .iter()
        .map(|&o| match o {
            Observable::Rr => Ok((o, rr.clone())),
            Observable::Gg => Ok((o, rr.iter().map(|r| 1.0 - r).collect())),
            _ => Err(Error::MissingObservable {
                observable: o.name().into(),
                reason: "not defined for 2-level states".into(),
            }),
        })
        .collect::<Result<_>>()?;
    TimeSeries::from_columns(times, columns)
}

impl ScenarioRun {
    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| p.result.is_err()).count()
    }

    fn file_name(&self, index: usize) -> String {
        let ext = self.config.output.format.extension();
        if self.points.len() == 1 {
            format!("{}.{ext}", self.config.name)
        } else {
            format!("{}_{index:02}.{ext}", self.config.name)
        }
    }

    pub fn manifest(&self) -> RunManifest {
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| PointManifest {
                index: i,
                label: p.point.label.clone(),
                value: p.point.value,
                file: p.result.is_ok().then(|| self.file_name(i)),
                status: if p.result.is_ok() { "ok" } else { "failed" },
                error: p.result.as_ref().err().map(|e| e.to_string()),
                summary: p.result.as_ref().ok().map(|s| *s.summary()),
                derived: p.derived.clone(),
            })
            .collect();
        RunManifest {
            version: env!("CARGO_PKG_VERSION"),
            config: self.config.clone(),
            wall_time_s: self.wall_time_s,
            workers: worker_count().unwrap_or(1),
            points,
        }
    }

    /// Writes one data file per successful point and the manifest into
    /// `output.path`, returning the written paths.
    pub fn write(&self) -> Result<Vec<PathBuf>> {
        let dir = &self.config.output.path;
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let mut written = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if let Ok(series) = &p.result {
                let path = dir.join(self.file_name(i));
                export::write_series(&path, series, self.config.output.format)?;
                written.push(path);
            }
        }
        let path = dir.join(format!("{}.manifest.json", self.config.name));
        export::write_manifest(&path, &self.manifest())?;
        written.push(path);
        Ok(written)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Rising,
    Falling,
}

/// First time `observable` rises above `threshold`, linearly interpolated
/// between the bracketing samples.
pub fn detect_onset(series: &TimeSeries, observable: Observable, threshold: f64) -> Result<Option<f64>> {
    detect_crossing(series, observable, threshold, Crossing::Rising)
}

/// First crossing of `level` in the given direction, skipping undefined
/// samples. A series already past `level` at its first defined sample
/// reports that time.
pub fn detect_crossing(
    series: &TimeSeries,
    observable: Observable,
    level: f64,
    direction: Crossing,
) -> Result<Option<f64>> {
    let values = series.column(observable)?;
    let past = |v: f64| match direction {
        Crossing::Rising => v > level,
        Crossing::Falling => v < level,
    };
    let mut prev: Option<(f64, f64)> = None;
    for (&t, &v) in series.times().iter().zip(values) {
        if v.is_nan() {
            continue;
        }
        if past(v) {
            return Ok(Some(match prev {
                None => t,
                Some((t0, v0)) => t0 + (level - v0) / (v - v0) * (t - t0),
            }));
        }
        prev = Some((t, v));
    }
    Ok(None)
}

pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub scenarios: Vec<ScenarioConfig>,
}

const FIG3_OBSERVABLES: [&str; 6] = ["concurrence", "g2", "plus", "minus", "gg", "rr"];

fn phase_sweep() -> Sweep {
    Sweep {
        parameter: "phi".into(),
        values: vec![40.0 * PI, 40.5 * PI, 41.0 * PI],
    }
}

fn scenario(name: &str, model: ModelKind, params: ScenarioParams, t_end: f64, samples: usize) -> ScenarioConfig {
    ScenarioConfig {
        integrator: IntegratorConfig::adaptive(t_end, SampleGrid::Uniform(samples)),
        ..ScenarioConfig::new(name, model, params)
    }
}

/// The catalog of reference scenarios.
pub fn presets() -> Vec<Preset> {
    let base = ScenarioParams::default();
    let detunings = Sweep {
        parameter: "delta_c".into(),
        values: vec![10.0, 20.0, 30.0, 60.0],
    };
    let quadrature = ScenarioParams { phi: 40.5 * PI, ..base };

    let mut fig2a_pair = scenario("fig2a_pair", ModelKind::Pair, quadrature, 300.0, 300);
    fig2a_pair.sweep = Some(detunings.clone());
    let mut fig2a_giant = scenario("fig2a_giant", ModelKind::Giant, quadrature, 300.0, 300);
    fig2a_giant.sweep = Some(detunings);

    let mut fig2b_pair = scenario("fig2b_pair", ModelKind::Pair, base, 300.0, 300);
    fig2b_pair.sweep = Some(phase_sweep());
    let reference = ScenarioParams { gamma: 0.0, phi: 41.0 * PI, ..base };
    let fig2b_giant = scenario("fig2b_giant_reference", ModelKind::Giant, reference, 300.0, 300);

    let mut fig3 = scenario("fig3", ModelKind::Pair, base, 2000.0, 2000);
    fig3.sweep = Some(phase_sweep());
    fig3.observables = FIG3_OBSERVABLES.map(String::from).to_vec();

    let broad = ScenarioParams { theta: 2.5 * PI, ..base };
    let mut fig4 = scenario("fig4", ModelKind::PairContinuous, broad, 2000.0, 2000);
    fig4.sweep = Some(phase_sweep());
    fig4.observables = FIG3_OBSERVABLES.map(String::from).to_vec();

    vec![
        Preset {
            name: "fig2a",
            description: "pair vs giant-atom double excitation at phi = 40.5pi for Delta_c = 10, 20, 30, 60",
            scenarios: vec![fig2a_pair, fig2a_giant],
        },
        Preset {
            name: "fig2b",
            description: "double excitation at phi = 40pi, 40.5pi, 41pi with the gamma = 0 decoupled reference",
            scenarios: vec![fig2b_pair, fig2b_giant],
        },
        Preset {
            name: "fig3",
            description: "concurrence, g2 and dressed populations over 2000 us at phi = 40pi, 40.5pi, 41pi",
            scenarios: vec![fig3],
        },
        Preset {
            name: "fig4",
            description: "fig3 observables with a broadened coupling, Theta = 5pi/2",
            scenarios: vec![fig4],
        },
    ]
}

pub fn preset(name: &str) -> Option<Preset> {
    presets().into_iter().find(|p| p.name == name)
}
