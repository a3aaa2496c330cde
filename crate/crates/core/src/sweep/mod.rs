//! One-dimensional parameter sweeps over the full pipeline.
//!
//! A sweep evaluates every grid value for every series (a named set of
//! parameter overrides) and every requested condensate setting. Points are
//! independent, so they may be evaluated in parallel; rows always come out
//! in grid order.

mod config;
mod emit;
mod presets;

pub use config::{load_config, parse_config, Config, UnitMode};
pub use emit::{emit, emit_csv, emit_json, report, Format, Report};
pub use presets::{figure_preset, PRESET_IDS};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian_measures::{bogoliubov_excitations, entanglement, mirror_phonons, Bipartition};
use crate::linear_dynamics::{classify, covariance, Stability};
use crate::model::{derive_quantities, DerivedQuantities, SystemParams};
use crate::steady_state::{branches, BranchLabel, MeanFieldBranch};

/// Default number of grid points per sweep.
pub const DEFAULT_POINTS: usize = 600;

/// Environment variable capping the parallel fan-out; `0` runs serially.
pub const THREADS_ENV: &str = "OPTOMECH_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepVariable {
    /// Cavity-pump detuning δ_c (rad/s).
    #[serde(rename = "delta_c")]
    DeltaC,
    /// Pump power (W).
    #[serde(rename = "power")]
    Power,
    /// Effective detuning Δ (rad/s), taken as the independent input.
    #[serde(rename = "Delta_effective")]
    DeltaEffective,
    /// s-wave scattering frequency (rad/s).
    #[serde(rename = "omega_sw")]
    OmegaSw,
    /// Radiation-pressure coupling ξ (rad/s).
    #[serde(rename = "xi")]
    Xi,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::DeltaC => "delta_c",
            SweepVariable::Power => "power",
            SweepVariable::DeltaEffective => "Delta_effective",
            SweepVariable::OmegaSw => "omega_sw",
            SweepVariable::Xi => "xi",
        }
    }

    /// Value in the unit the reference figures use on their axes:
    /// δ_c/κ, mW, Δ/ω_m, ω_sw/ω_m, and ξ unchanged.
    pub fn scaled(self, value: f64, d: &DerivedQuantities) -> f64 {
        match self {
            SweepVariable::DeltaC => value / d.kappa,
            SweepVariable::Power => value * 1e3,
            SweepVariable::DeltaEffective | SweepVariable::OmegaSw => value / d.omega_m,
            SweepVariable::Xi => value,
        }
    }

    fn apply(self, params: &mut SystemParams, value: f64) {
        match self {
            SweepVariable::DeltaC => params.cavity.detuning = value,
            SweepVariable::Power => params.drive.power = value,
            SweepVariable::DeltaEffective => {}
            SweepVariable::OmegaSw => params.bec.s_wave = value,
            SweepVariable::Xi => params.xi_override = Some(value),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    /// Branches and stability only.
    MeanField,
    /// Adds occupations and entanglement for stable points.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BecSelection {
    Present,
    Absent,
    Both,
}

impl BecSelection {
    fn settings(self) -> &'static [bool] {
        match self {
            BecSelection::Present => &[true],
            BecSelection::Absent => &[false],
            BecSelection::Both => &[true, false],
        }
    }
}

/// A named set of overrides applied on top of the sweep's base parameters.
/// All values are SI.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Series {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_wave: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coupling: Option<f64>,
    /// Overrides the sweep-level condensate selection for this series.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bec_present: Option<bool>,
}

impl Series {
    pub fn named(label: impl Into<String>) -> Self {
        Series {
            label: label.into(),
            ..Default::default()
        }
    }

    fn apply(&self, params: &mut SystemParams) {
        if let Some(sw) = self.s_wave {
            params.bec.s_wave = sw;
        }
        if let Some(xi) = self.xi {
            params.xi_override = Some(xi);
        }
        if let Some(z) = self.coupling {
            params.bec.coupling = z;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    /// Range of the swept variable, SI.
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub mode: SweepMode,
    pub bec: BecSelection,
    pub params: SystemParams,
    pub series: Vec<Series>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidSweep(format!(
                "`points` must be >= 2, got {}",
                self.points
            )));
        }
        if !(self.lo.is_finite() && self.hi.is_finite()) || self.lo >= self.hi {
            return Err(Error::InvalidSweep(format!(
                "`lo` must be below `hi`, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.series.is_empty() {
            return Err(Error::InvalidSweep("`series` must not be empty".into()));
        }
        for (params, _, _) in self.configurations() {
            params.validate()?;
        }
        Ok(())
    }

    /// Grid values, endpoints included exactly.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * i as f64 / last
                }
            })
            .collect()
    }

    /// Every (parameters, series label, condensate present) combination.
    pub fn configurations(&self) -> Vec<(SystemParams, &str, bool)> {
        let mut out = Vec::new();
        for series in &self.series {
            let settings: &[bool] = match series.bec_present {
                Some(true) => &[true],
                Some(false) => &[false],
                None => self.bec.settings(),
            };
            for &present in settings {
                let mut p = self.params;
                series.apply(&mut p);
                p.bec.present = present;
                out.push((p, series.label.as_str(), present));
            }
        }
        out
    }
}

/// Occupations and entanglement at one stable point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Measures {
    pub mirror_phonons: f64,
    pub bogoliubov_excitations: f64,
    pub en_mirror_field: f64,
    pub en_atom_field: f64,
    pub en_mirror_atom: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub series: String,
    pub bec: bool,
    /// Swept value, SI.
    pub x: f64,
    /// Swept value in figure units (see [`SweepVariable::scaled`]).
    pub x_scaled: f64,
    pub branch: usize,
    pub label: BranchLabel,
    pub degenerate: bool,
    pub n: f64,
    pub detuning: f64,
    pub delta_c: f64,
    pub stability: Stability,
    /// Present only for stable points of a full-mode sweep.
    pub measures: Option<Measures>,
}

/// Evaluates the full pipeline for one branch.
pub fn measure_branch(
    branch: &MeanFieldBranch,
    d: &DerivedQuantities,
    bec_thermal: bool,
) -> Result<Measures> {
    let v = covariance(branch, d, bec_thermal)?;
    Ok(Measures {
        mirror_phonons: mirror_phonons(&v),
        bogoliubov_excitations: bogoliubov_excitations(&v),
        en_mirror_field: entanglement(&v, Bipartition::MirrorField)?.log_negativity,
        en_atom_field: entanglement(&v, Bipartition::AtomField)?.log_negativity,
        en_mirror_atom: entanglement(&v, Bipartition::MirrorAtom)?.log_negativity,
    })
}

/// Mean-field branches at one configuration, each classified.
pub fn classified_branches(
    d: &DerivedQuantities,
    variable: SweepVariable,
    x: f64,
) -> Result<Vec<MeanFieldBranch>> {
    let mut list = if variable == SweepVariable::DeltaEffective {
        vec![MeanFieldBranch::at_effective_detuning(d, x)]
    } else {
        branches(d)
    };
    for b in list.iter_mut() {
        classify(b, d)?;
    }
    Ok(list)
}

fn evaluate_point(spec: &SweepSpec, x: f64) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for (mut params, label, present) in spec.configurations() {
        spec.variable.apply(&mut params, x);
        let d = derive_quantities(&params)?;
        for (i, b) in classified_branches(&d, spec.variable, x)?.iter().enumerate() {
            let mut stability = b.stability.expect("classified");
            let mut measures = None;
            if spec.mode == SweepMode::Full && stability == Stability::Stable {
                match measure_branch(b, &d, params.bec_thermal) {
                    Ok(m) => measures = Some(m),
                    Err(e) if e.is_numerical() => stability = Stability::Marginal,
                    Err(e) => return Err(e),
                }
            }
            rows.push(SweepRow {
                series: label.to_string(),
                bec: present,
                x,
                x_scaled: spec.variable.scaled(x, &d),
                branch: i,
                label: b.label,
                degenerate: b.degenerate,
                n: b.n,
                detuning: b.detuning,
                delta_c: b.delta_c,
                stability,
                measures,
            });
        }
    }
    Ok(rows)
}

/// Thread cap from [`THREADS_ENV`]; `None` means rayon's default.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok()
}

/// Runs a sweep, fanning out according to [`THREADS_ENV`].
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    run_sweep_with_threads(spec, threads_from_env())
}

/// Runs a sweep with an explicit thread cap (`Some(0)` for serial).
pub fn run_sweep_with_threads(spec: &SweepSpec, threads: Option<usize>) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.grid();
    let per_point: Vec<Result<Vec<SweepRow>>> = match threads {
        Some(0) => grid.iter().map(|&x| evaluate_point(spec, x)).collect(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidSweep(format!("thread pool: {e}")))?;
            pool.install(|| grid.par_iter().map(|&x| evaluate_point(spec, x)).collect())
        }
        None => grid.par_iter().map(|&x| evaluate_point(spec, x)).collect(),
    };
    let mut rows = Vec::new();
    for r in per_point {
        rows.extend(r?);
    }
    Ok(rows)
}
