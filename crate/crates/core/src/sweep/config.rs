//! JSON configuration documents.
//!
//! Every section and field is optional and falls back to
//! [`SystemParams::reference`]. Two unit conventions are accepted:
//!
//! * `si`: rad/s, W, K, m, kg throughout.
//! * `normalized`: cavity detunings and damping rates (`cavity.detuning`,
//!   `bec.damping`) in units of κ; oscillator frequencies (`bec.s_wave`,
//!   `bec.recoil`) in units of ω_m; the condensate coupling `bec.coupling`
//!   in units of ξ. Lengths, masses, temperatures, powers, `mirror.frequency`
//!   and `xi` stay SI.
//!
//! Sweep ranges follow the unit of the swept quantity: `delta_c` like
//! `cavity.detuning`, `Delta_effective` and `omega_sw` like `bec.s_wave`,
//! `power` in W and `xi` in rad/s.
//!
//! When `bec.coupling` is omitted, ζ = ξ as computed from the mirror mass.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::model::{
    derive_quantities, effective_from_microscopic, MicroscopicBecParams, SystemParams,
};

use super::{BecSelection, Series, SweepMode, SweepSpec, SweepVariable, DEFAULT_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnitMode {
    #[default]
    Si,
    Normalized,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawCavity {
    length: Option<f64>,
    wavelength: Option<f64>,
    finesse: Option<f64>,
    detuning: Option<f64>,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawMirror {
    mass: Option<f64>,
    frequency: Option<f64>,
    quality: Option<f64>,
    temperature: Option<f64>,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawBec {
    present: Option<bool>,
    coupling: Option<f64>,
    s_wave: Option<f64>,
    recoil: Option<f64>,
    damping: Option<f64>,
    temperature: Option<f64>,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawDrive {
    power: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeries {
    label: String,
    s_wave: Option<f64>,
    xi: Option<f64>,
    coupling: Option<f64>,
    bec_present: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    variable: SweepVariable,
    lo: f64,
    hi: f64,
    points: Option<usize>,
    mode: Option<SweepMode>,
    bec: Option<BecSelection>,
    #[serde(default)]
    series: Vec<RawSeries>,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    units: UnitMode,
    #[serde(default)]
    cavity: RawCavity,
    #[serde(default)]
    mirror: RawMirror,
    #[serde(default)]
    bec: RawBec,
    #[serde(default)]
    drive: RawDrive,
    xi: Option<f64>,
    #[serde(default)]
    bec_thermal: bool,
    microscopic: Option<MicroscopicBecParams>,
    sweep: Option<RawSweep>,
}

/// A resolved configuration: SI parameters plus an optional sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub params: SystemParams,
    pub sweep: Option<SweepSpec>,
}

/// Conversion factors from config units to SI.
struct Scales {
    kappa: f64,
    omega_m: f64,
    xi: f64,
}

impl Scales {
    fn detuning(&self, mode: UnitMode, v: f64) -> f64 {
        match mode {
            UnitMode::Si => v,
            UnitMode::Normalized => v * self.kappa,
        }
    }

    fn frequency(&self, mode: UnitMode, v: f64) -> f64 {
        match mode {
            UnitMode::Si => v,
            UnitMode::Normalized => v * self.omega_m,
        }
    }

    fn coupling(&self, mode: UnitMode, v: f64) -> f64 {
        match mode {
            UnitMode::Si => v,
            UnitMode::Normalized => v * self.xi,
        }
    }
}

pub fn parse_config(text: &str) -> Result<Config> {
    let raw: RawConfig = serde_json::from_str(text)?;
    resolve(raw)
}

pub fn load_config(path: impl AsRef<Path>) -> Result<Config> {
    parse_config(&std::fs::read_to_string(path)?)
}

fn resolve(raw: RawConfig) -> Result<Config> {
    let mode = raw.units;
    let mut p = SystemParams::reference();

    let c = &raw.cavity;
    p.cavity.length = c.length.unwrap_or(p.cavity.length);
    p.cavity.wavelength = c.wavelength.unwrap_or(p.cavity.wavelength);
    p.cavity.finesse = c.finesse.unwrap_or(p.cavity.finesse);
    let m = &raw.mirror;
    p.mirror.mass = m.mass.unwrap_or(p.mirror.mass);
    p.mirror.frequency = m.frequency.unwrap_or(p.mirror.frequency);
    p.mirror.quality = m.quality.unwrap_or(p.mirror.quality);
    p.mirror.temperature = m.temperature.unwrap_or(p.mirror.temperature);
    p.drive.power = raw.drive.power.unwrap_or(p.drive.power);
    p.xi_override = raw.xi;
    p.bec_thermal = raw.bec_thermal;

    // Geometry fixes κ, ω_m and the mass-derived ξ used for unit scaling.
    let mut geometry = p;
    geometry.xi_override = None;
    geometry.bec.present = false;
    let g = derive_quantities(&geometry)?;
    let scales = Scales {
        kappa: g.kappa,
        omega_m: g.omega_m,
        xi: g.xi,
    };

    p.cavity.detuning = c.detuning.map_or(0.0, |v| scales.detuning(mode, v));
    let b = &raw.bec;
    p.bec.present = b.present.unwrap_or(true);
    p.bec.coupling = b.coupling.map_or(scales.xi, |v| scales.coupling(mode, v));
    p.bec.s_wave = b.s_wave.map_or(0.0, |v| scales.frequency(mode, v));
    p.bec.recoil = b.recoil.map_or(0.1 * scales.omega_m, |v| scales.frequency(mode, v));
    p.bec.damping = b.damping.map_or(1e-3 * scales.kappa, |v| scales.detuning(mode, v));
    p.bec.temperature = b.temperature.unwrap_or(p.bec.temperature);

    if let Some(micro) = &raw.microscopic {
        let (zeta, omega_sw, delta_c) = effective_from_microscopic(micro, &p.cavity)?;
        p.bec.coupling = zeta;
        p.bec.s_wave = omega_sw;
        p.cavity.detuning = delta_c;
    }
    p.validate()?;

    let sweep = raw
        .sweep
        .map(|s| resolve_sweep(s, p, mode, &scales))
        .transpose()?;
    Ok(Config { params: p, sweep })
}

fn resolve_sweep(s: RawSweep, params: SystemParams, mode: UnitMode, scales: &Scales) -> Result<SweepSpec> {
    let convert = |v: f64| match s.variable {
        SweepVariable::DeltaC => scales.detuning(mode, v),
        SweepVariable::DeltaEffective | SweepVariable::OmegaSw => scales.frequency(mode, v),
        SweepVariable::Power | SweepVariable::Xi => v,
    };
    let series = if s.series.is_empty() {
        vec![Series::named("base")]
    } else {
        s.series
            .into_iter()
            .map(|r| Series {
                label: r.label,
                s_wave: r.s_wave.map(|v| scales.frequency(mode, v)),
                xi: r.xi,
                coupling: r.coupling.map(|v| scales.coupling(mode, v)),
                bec_present: r.bec_present,
            })
            .collect()
    };
    let spec = SweepSpec {
        variable: s.variable,
        lo: convert(s.lo),
        hi: convert(s.hi),
        points: s.points.unwrap_or(DEFAULT_POINTS),
        mode: s.mode.unwrap_or(SweepMode::Full),
        bec: s.bec.unwrap_or(BecSelection::Present),
        params,
        series,
    };
    spec.validate()?;
    Ok(spec)
}

impl Config {
    /// The sweep, or an error naming the missing section.
    pub fn require_sweep(&self) -> Result<&SweepSpec> {
        self.sweep
            .as_ref()
            .ok_or_else(|| Error::InvalidSweep("config has no `sweep` section".into()))
    }
}
