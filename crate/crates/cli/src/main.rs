use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use giantqed::continuous::{continuous_rates, quadrature_rates, upsilon_continuous};
use giantqed::geometry::LabGeometry;
use giantqed::giant::upsilon;
use giantqed::pair::{exchange_rates, PairParams};
use giantqed::quantum::C64;
use giantqed::scenario::{parse_pi_literal, preset, presets, run_scenario, ScenarioConfig};
use giantqed::selftest::run_selftest;
use giantqed::Error;

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_SELFTEST: u8 = 4;

#[derive(Parser)]
#[command(version, about = "Driven Rydberg pair coupled to a waveguide")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file (or re-run the config stored in a manifest).
    Run {
        config: PathBuf,
        /// Override a config key, e.g. `--set params.phi=40.5pi`.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Run a named preset; `--list` shows the catalog.
    Preset {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Output directory (default `out/<preset>`).
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Exchange rates for point-like and broadened coupling.
    Rates {
        #[arg(long, value_parser = number, default_value = "40pi")]
        phi: f64,
        #[arg(long, value_parser = number, default_value = "0")]
        theta: f64,
        #[arg(long = "big-gamma", value_parser = number, default_value = "1")]
        big_gamma: f64,
        #[arg(long, value_parser = number, default_value = "1")]
        omega: f64,
        #[arg(long, value_parser = number, default_value = "30")]
        delta: f64,
        /// Relative tolerance of the quadrature cross-check.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Interaction shift, phase and coupling width from lab geometry.
    Geometry {
        /// C6 in rad/s·μm⁶.
        #[arg(long, value_parser = number)]
        c6: Option<f64>,
        /// Interatomic distance, μm.
        #[arg(long, value_parser = number)]
        r: Option<f64>,
        /// Misalignment angle, radians.
        #[arg(long, value_parser = number)]
        angle: Option<f64>,
        /// Transition angular frequency, rad/s.
        #[arg(long = "omega-e", value_parser = number)]
        omega_e: Option<f64>,
        /// Group velocity, m/s.
        #[arg(long = "v-g", value_parser = number)]
        v_g: Option<f64>,
        /// Orbital radius, nm.
        #[arg(long = "r-bar", value_parser = number)]
        r_bar: Option<f64>,
        /// Distance to the evanescent surface, nm.
        #[arg(long, value_parser = number)]
        h: Option<f64>,
    },
    /// Run the built-in oracle checks.
    Selftest,
}

fn number(s: &str) -> Result<f64, String> {
    s.parse::<f64>()
        .ok()
        .or_else(|| parse_pi_literal(s))
        .ok_or_else(|| format!("`{s}` is not a number or multiple of pi"))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config(_)
        | Error::InvalidParameter(_)
        | Error::ZeroDetuning
        | Error::UnknownObservable(_)
        | Error::MissingObservable { .. }
        | Error::Integrator(_)
        | Error::InvalidState(_)
        | Error::DimensionMismatch { .. }
        | Error::Io { .. } => EXIT_CONFIG,
        _ => EXIT_NUMERICAL,
    }
}

fn run_configs(configs: Vec<ScenarioConfig>) -> Result<u8, Error> {
    let mut code = 0;
    for config in configs {
        let run = run_scenario(&config)?;
        let files = run.write()?;
        for p in &run.points {
            match &p.result {
                Ok(s) => {
                    let tag = if s.is_degraded() { " (degraded)" } else { "" };
                    println!("{} [{}] ok{tag}", config.name, p.point.label);
                }
                Err(e) => {
                    eprintln!("{} [{}] failed: {e}", config.name, p.point.label);
                    code = code.max(exit_code(e));
                }
            }
            for w in &p.derived.warnings {
                eprintln!("warning: {w}");
            }
        }
        for f in files {
            println!("wrote {}", f.display());
        }
    }
    Ok(code)
}

fn c64(z: C64) -> String {
    format!("{:.6e} {:+.6e}i", z.re, z.im)
}

fn rates(phi: f64, theta: f64, big_gamma: f64, omega: f64, delta: f64, tol: f64, json: bool) -> Result<u8, Error> {
    let params = PairParams {
        big_gamma,
        omega_c: C64::new(omega, 0.0),
        delta_c: delta,
        phi,
        ..PairParams::default()
    };
    params.validate()?;
    let ex = exchange_rates(&params);
    let closed = continuous_rates(big_gamma, phi, theta)?;
    let quad = if theta > 0.0 {
        Some(quadrature_rates(big_gamma, phi, theta, tol)?)
    } else {
        None
    };
    let ups = upsilon(&params)?;
    let ups_c = upsilon_continuous(&params, &closed)?;
    if json {
        let v = serde_json::json!({
            "phi": phi,
            "theta": theta,
            "exchange": ex,
            "upsilon": ups,
            "continuous": closed,
            "quadrature": quad,
            "quadrature_relative_deviation": quad.map(|q| q.relative_deviation(&closed)),
            "upsilon_continuous": ups_c,
        });
        println!("{}", serde_json::to_string_pretty(&v).map_err(|e| Error::Serialization(e.to_string()))?);
        return Ok(0);
    }
    println!("phi = {:.6}pi, Theta = {:.6}pi", phi / std::f64::consts::PI, theta / std::f64::consts::PI);
    println!("point coupling:  Gamma_ex = {:.6e}  J_ex = {:.6e}", ex.gamma_ex, ex.j_ex);
    println!("                 Upsilon  = {}", c64(ups));
    println!("{:<12} {:>16} {:>16}", "rate", "closed form", "quadrature");
    let rows = [
        ("Gamma'", closed.gamma_eff, quad.map(|q| q.gamma_eff)),
        ("Gamma'_ex", closed.gamma_ex_eff, quad.map(|q| q.gamma_ex_eff)),
        ("J'_ex", closed.j_ex_eff, quad.map(|q| q.j_ex_eff)),
        ("J'", closed.j_self, quad.map(|q| q.j_self)),
    ];
    for (name, c, q) in rows {
        let q = q.map_or("-".to_string(), |q| format!("{q:.9e}"));
        println!("{name:<12} {c:>16.9e} {q:>16}");
    }
    if let Some(q) = quad {
        println!("relative deviation = {:.3e}", q.relative_deviation(&closed));
    }
    println!("Upsilon' = {}", c64(ups_c));
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Run { config, overrides } => run_configs(vec![ScenarioConfig::load(&config, &overrides)?]),
        Command::Preset {
            name,
            list,
            output,
            overrides,
        } => {
            let name = match (list, name) {
                (false, Some(n)) => n,
                _ => {
                    for p in presets() {
                        let names: Vec<&str> = p.scenarios.iter().map(|s| s.name.as_str()).collect();
                        println!("{:<6} {} [{}]", p.name, p.description, names.join(", "));
                    }
                    return Ok(0);
                }
            };
            let p = preset(&name).ok_or_else(|| {
                let known: Vec<&str> = presets().iter().map(|p| p.name).collect();
                Error::Config(vec![format!("unknown preset `{name}` (known: {})", known.join(", "))])
            })?;
            let dir = output.unwrap_or_else(|| PathBuf::from("out").join(p.name));
            let mut configs = Vec::new();
            let mut errs = Vec::new();
            for mut s in p.scenarios {
                s.output.path = dir.clone();
                match s.with_overrides(&overrides) {
                    Ok(c) => configs.push(c),
                    Err(Error::Config(e)) => errs.extend(e.into_iter().map(|e| format!("{}: {e}", s.name))),
                    Err(e) => return Err(e),
                }
            }
            if !errs.is_empty() {
                return Err(Error::Config(errs));
            }
            run_configs(configs)
        }
        Command::Rates {
            phi,
            theta,
            big_gamma,
            omega,
            delta,
            tol,
            json,
        } => rates(phi, theta, big_gamma, omega, delta, tol, json),
        Command::Geometry {
            c6,
            r,
            angle,
            omega_e,
            v_g,
            r_bar,
            h,
        } => {
            let d = LabGeometry::default();
            let g = LabGeometry {
                c6: c6.unwrap_or(d.c6),
                r: r.unwrap_or(d.r),
                misalign_angle: angle.unwrap_or(d.misalign_angle),
                omega_e: omega_e.unwrap_or(d.omega_e),
                v_g: v_g.unwrap_or(d.v_g),
                r_bar: r_bar.or(d.r_bar),
                h: h.or(d.h),
            };
            let rep = g.derive()?;
            println!("V6    = {:.6e} rad/s = {:.6e} us^-1", rep.v6_rad_per_s, rep.v6_per_us);
            println!("d     = {:.6} um", rep.d);
            println!("phi   = {:.6}pi", rep.phi / std::f64::consts::PI);
            if let Some(t) = rep.theta {
                println!("Theta = {:.6} rad = {:.6}pi", t, t / std::f64::consts::PI);
            }
            Ok(0)
        }
        Command::Selftest => {
            let checks = run_selftest();
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            Ok(if checks.iter().all(|c| c.passed) { 0 } else { EXIT_SELFTEST })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
