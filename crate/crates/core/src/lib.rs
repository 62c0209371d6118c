pub mod continuous;
pub mod error;
pub mod export;
pub mod generator;
pub mod geometry;
pub mod giant;
pub mod integrator;
pub mod observables;
pub mod pair;
pub mod quadrature;
pub mod quantum;
pub mod scenario;
pub mod selftest;

pub use error::{Error, Result};
