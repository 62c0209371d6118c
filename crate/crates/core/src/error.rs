use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("drive detuning is zero; adiabatic elimination is undefined")]
    ZeroDetuning,

    #[error("eigenvalue iteration did not converge for {context}")]
    EigenFailure { context: String },

    #[error(
        "quadrature did not converge: estimated error {achieved:.3e} exceeds target {requested:.3e}"
    )]
    Quadrature { achieved: f64, requested: f64 },

    #[error("step limit of {max_steps} exceeded at t = {t} us")]
    StepLimit { max_steps: usize, t: f64 },

    #[error("adaptive step underflow at t = {t} us (h = {h:.3e} us)")]
    StepUnderflow { t: f64, h: f64 },

    #[error("physicality breach at t = {t} us: minimum eigenvalue {min_eigenvalue:.3e}")]
    PhysicalityBreach { t: f64, min_eigenvalue: f64 },

    #[error("right-hand side failed the linearity spot-check (relative defect {0:.3e})")]
    NonLinearRhs(f64),

    #[error("invalid integrator configuration: {0}")]
    Integrator(String),

    #[error("unknown observable `{0}`")]
    UnknownObservable(String),

    #[error("observable `{observable}` is not available: {reason}")]
    MissingObservable { observable: String, reason: String },

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("configuration errors:\n  - {}", .0.join("\n  - "))]
    Config(Vec<String>),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Serialization(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
