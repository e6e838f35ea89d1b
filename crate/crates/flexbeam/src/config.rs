//! Run configuration: TOML schema, defaults, effective-config echo, hashing.
//!
//! Every run is described by one TOML file. Optional values are materialized
//! into the *effective* configuration, which is what gets echoed, hashed,
//! and recorded in output headers — so a data file always names the exact
//! parameters that produced it.

use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use flexbeam_core::model::{Actuator, BeamSystem};
use flexbeam_core::spectral::period_phi0;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub beam: BeamSection,
    pub shaker: ShakerSection,
    #[serde(default)]
    pub actuators: Vec<ActuatorSection>,
    pub spectral: SpectralSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sim: Option<SimSection>,
    #[serde(default)]
    pub output: OutputSection,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamSection {
    #[serde(rename = "E")]
    pub e: f64,
    #[serde(rename = "I")]
    pub i: f64,
    pub rho: f64,
    pub l: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShakerSection {
    pub m: f64,
    pub kappa: f64,
    pub l0: f64,
    pub alpha0: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActuatorSection {
    pub center: f64,
    pub width: f64,
    pub height: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralSection {
    pub mu_max: f64,
    /// Scan grid step; default P/50 when the Φ₀ period is available
    /// (rational l0/l via p1/p2), otherwise π/(10·l).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_step: Option<f64>,
    pub n_modes: usize,
    /// Bisection tolerance for root polishing (default 1e-12).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_tol: Option<f64>,
    /// Optional rational shaker position l0/l = p1/p2 (enables the period
    /// diagnostics of the spectrum command).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p1: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p2: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimSection {
    pub t_end: f64,
    pub dt: f64,
    /// Either a list of modal displacement amplitudes (padded with zeros up
    /// to n_modes) or the named profile "first_mode_displacement".
    pub initial: InitialSpec,
    /// Optional modal velocity amplitudes (default all zero).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial_velocity: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InitialSpec {
    Named(String),
    Amplitudes(Vec<f64>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default = "default_directory")]
    pub directory: String,
    /// Significant digits in data files; 17 (the default) selects the
    /// shortest round-trip representation.
    #[serde(default = "default_precision")]
    pub precision: u32,
}

fn default_directory() -> String {
    String::from("out")
}

fn default_precision() -> u32 {
    17
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection {
            directory: default_directory(),
            precision: default_precision(),
        }
    }
}

impl RunConfig {
    /// Fills every optional numeric knob with its documented default, in
    /// place. Call before hashing or echoing.
    pub fn materialize(&mut self) {
        if self.spectral.grid_step.is_none() {
            let period = match (self.spectral.p1, self.spectral.p2) {
                (Some(p1), Some(p2)) => {
                    period_phi0(self.beam.l, self.shaker.l0, p1, p2).ok()
                }
                _ => None,
            };
            let step = match period {
                Some(p) => p / 50.0,
                None => PI / (10.0 * self.beam.l),
            };
            self.spectral.grid_step = Some(step);
        }
        if self.spectral.root_tol.is_none() {
            self.spectral.root_tol = Some(1e-12);
        }
    }

    pub fn grid_step(&self) -> f64 {
        self.spectral.grid_step.expect("materialized")
    }

    pub fn root_tol(&self) -> f64 {
        self.spectral.root_tol.expect("materialized")
    }

    pub fn beam_system(&self) -> BeamSystem {
        BeamSystem {
            e: self.beam.e,
            i: self.beam.i,
            rho: self.beam.rho,
            l: self.beam.l,
            l0: self.shaker.l0,
            m: self.shaker.m,
            kappa: self.shaker.kappa,
            alpha0: self.shaker.alpha0,
        }
    }

    pub fn actuators(&self) -> Vec<Actuator> {
        self.actuators
            .iter()
            .map(|a| Actuator {
                center: a.center,
                width: a.width,
                height: a.height,
                alpha: a.alpha,
            })
            .collect()
    }

    /// Serializes the (materialized) effective configuration.
    pub fn effective_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).context("serializing effective config")
    }
}

/// SHA-256 of the effective configuration text, lowercase hex.
pub fn config_hash(effective_toml: &str) -> String {
    let digest = Sha256::digest(effective_toml.as_bytes());
    let mut s = String::with_capacity(64);
    for byte in digest {
        use std::fmt::Write;
        let _ = write!(s, "{byte:02x}");
    }
    s
}

/// Loads, parses, and materializes a config file.
pub fn load(path: &Path) -> Result<RunConfig> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading config file {}", path.display()))?;
    let mut cfg: RunConfig =
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if matches!(&cfg.sim, Some(s) if matches!(&s.initial, InitialSpec::Named(n) if n != "first_mode_displacement"))
    {
        bail!("unknown named initial profile (supported: \"first_mode_displacement\")");
    }
    cfg.materialize();
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const MINIMAL: &str = r#"
[beam]
E = 2.0
I = 0.5
rho = 1.5
l = 2.0

[shaker]
m = 0.2
kappa = 5.0
l0 = 0.5
alpha0 = 0.8

[spectral]
mu_max = 10.0
n_modes = 3
"#;

    fn parse(text: &str) -> RunConfig {
        let mut cfg: RunConfig = toml::from_str(text).expect("parse");
        cfg.materialize();
        cfg
    }

    #[test]
    fn defaults_materialize_without_period_hint() {
        let cfg = parse(MINIMAL);
        assert_eq!(cfg.grid_step(), PI / (10.0 * 2.0));
        assert_eq!(cfg.root_tol(), 1e-12);
        assert_eq!(cfg.output.directory, "out");
        assert_eq!(cfg.output.precision, 17);
        assert!(cfg.actuators.is_empty());
    }

    #[test]
    fn grid_step_default_uses_phi0_period_when_rational() {
        let text = MINIMAL.replace(
            "mu_max = 10.0",
            "mu_max = 10.0\np1 = 1\np2 = 4",
        );
        let cfg = parse(&text);
        // l = 2, l0 = l/4: P = 2π/|2l0−l| · |2p1−p2|/gcd(p2, 2p1−p2) = 2π·2/2 = 2π.
        assert!((cfg.grid_step() - 2.0 * PI / 50.0).abs() < 1e-15);
    }

    #[test]
    fn effective_toml_is_a_fixpoint() {
        let cfg = parse(MINIMAL);
        let text1 = cfg.effective_toml().unwrap();
        let reparsed = parse(&text1);
        let text2 = reparsed.effective_toml().unwrap();
        assert_eq!(text1, text2);
    }

    #[test]
    fn hash_is_sha256_of_text() {
        assert_eq!(
            config_hash("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = MINIMAL.replace("alpha0 = 0.8", "alpha0 = 0.8\nbogus = 1.0");
        assert!(toml::from_str::<RunConfig>(&text).is_err());
    }

    #[test]
    fn initial_spec_accepts_name_or_amplitudes() {
        let named = MINIMAL.to_string()
            + "\n[sim]\nt_end = 1.0\ndt = 0.1\ninitial = \"first_mode_displacement\"\n";
        let cfg = parse(&named);
        assert!(matches!(
            cfg.sim.unwrap().initial,
            InitialSpec::Named(ref n) if n == "first_mode_displacement"
        ));
        let listed = MINIMAL.to_string() + "\n[sim]\nt_end = 1.0\ndt = 0.1\ninitial = [1.0, 0.5]\n";
        let cfg = parse(&listed);
        assert!(matches!(
            cfg.sim.unwrap().initial,
            InitialSpec::Amplitudes(ref v) if v == &vec![1.0, 0.5]
        ));
    }
}
