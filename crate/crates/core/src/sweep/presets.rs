//! Sweeps reproducing the reference datasets.
//!
//! Shared parameters come from [`SystemParams::reference`]. Per-figure
//! values:
//!
//! | id | swept | fixed | series |
//! |----|-------|-------|--------|
//! | fig2a/b/c | δ_c/κ ∈ [0, 10] | P = 10 / 50 / 250 mW | no BEC; ω_sw = 0, 0.5, 1 ω_m |
//! | fig2d | P ∈ [0, 300] mW | δ_c = 4κ | as fig2a |
//! | fig3 | P ∈ [0, 200] mW | δ_c = 3κ | ω_sw = 0.01, 1 ω_m |
//! | fig4 | P ∈ [0, 300] mW | δ_c = 5κ, ζ = 330 rad/s, ω_sw = 0.1ω_m | ξ = 0, 330, 660 rad/s |
//! | fig5a/b/c, fig6a/b/c | Δ/ω_m ∈ [0, 3] | P = 50 mW, T = 0.4 K, γ_c = 0.001κ | ω_sw = 2 / 1 / 0.5 ω_m, with and without BEC |
//! | fig7 | Δ/ω_m ∈ [0, 3] | as fig5 | no BEC; ω_sw = 0, 0.5, 1 ω_m |
//!
//! Sweep ranges are not printed with the figures; the ranges above cover
//! the features the figures discuss.

use crate::error::{Error, Result};
use crate::model::{derive_quantities, SystemParams};

use super::{BecSelection, Series, SweepMode, SweepSpec, SweepVariable, DEFAULT_POINTS};

pub const PRESET_IDS: [&str; 13] = [
    "fig2a", "fig2b", "fig2c", "fig2d", "fig3", "fig4", "fig5a", "fig5b", "fig5c", "fig6a",
    "fig6b", "fig6c", "fig7",
];

/// Coupling ξ_0 quoted with the optomechanical-coupling figure, taken as rad/s.
pub const XI_0: f64 = 330.0;

fn s_wave_series(omega_m: f64, ratios: &[(&str, f64)], with_absent: bool) -> Vec<Series> {
    let mut out = Vec::new();
    if with_absent {
        out.push(Series {
            bec_present: Some(false),
            ..Series::named("no-bec")
        });
    }
    for &(label, r) in ratios {
        out.push(Series {
            s_wave: Some(r * omega_m),
            bec_present: Some(true),
            ..Series::named(label)
        });
    }
    out
}

const FIG2_SERIES: [(&str, f64); 3] = [("sw=0", 0.0), ("sw=0.5", 0.5), ("sw=1", 1.0)];

pub fn figure_preset(id: &str) -> Result<SweepSpec> {
    let params = SystemParams::reference();
    let d = derive_quantities(&params)?;
    let (kappa, omega_m) = (d.kappa, d.omega_m);

    let mean_field = |variable, lo, hi, params, series| SweepSpec {
        variable,
        lo,
        hi,
        points: DEFAULT_POINTS,
        mode: SweepMode::MeanField,
        bec: BecSelection::Present,
        params,
        series,
    };
    let cooling = |s_wave_ratio: f64| {
        let mut p = params;
        p.bec.s_wave = s_wave_ratio * omega_m;
        SweepSpec {
            variable: SweepVariable::DeltaEffective,
            lo: 0.0,
            hi: 3.0 * omega_m,
            points: DEFAULT_POINTS,
            mode: SweepMode::Full,
            bec: BecSelection::Both,
            params: p,
            series: vec![Series::named(format!("sw={s_wave_ratio}"))],
        }
    };
    let fig2 = |power: f64| {
        let mut p = params;
        p.drive.power = power;
        mean_field(
            SweepVariable::DeltaC,
            0.0,
            10.0 * kappa,
            p,
            s_wave_series(omega_m, &FIG2_SERIES, true),
        )
    };

    let spec = match id {
        "fig2a" => fig2(0.010),
        "fig2b" => fig2(0.050),
        "fig2c" => fig2(0.250),
        "fig2d" => {
            let mut p = params;
            p.cavity.detuning = 4.0 * kappa;
            mean_field(
                SweepVariable::Power,
                0.0,
                0.300,
                p,
                s_wave_series(omega_m, &FIG2_SERIES, true),
            )
        }
        "fig3" => {
            let mut p = params;
            p.cavity.detuning = 3.0 * kappa;
            mean_field(
                SweepVariable::Power,
                0.0,
                0.200,
                p,
                s_wave_series(omega_m, &[("sw=0.01", 0.01), ("sw=1", 1.0)], false),
            )
        }
        "fig4" => {
            let mut p = params;
            p.cavity.detuning = 5.0 * kappa;
            p.bec.coupling = XI_0;
            p.bec.s_wave = 0.1 * omega_m;
            let series = [("xi=0", 0.0), ("xi=xi0", XI_0), ("xi=2xi0", 2.0 * XI_0)]
                .iter()
                .map(|&(label, xi)| Series {
                    xi: Some(xi),
                    ..Series::named(label)
                })
                .collect();
            mean_field(SweepVariable::Power, 0.0, 0.300, p, series)
        }
        "fig5a" | "fig6a" => cooling(2.0),
        "fig5b" | "fig6b" => cooling(1.0),
        "fig5c" | "fig6c" => cooling(0.5),
        "fig7" => {
            let mut spec = cooling(0.0);
            spec.bec = BecSelection::Present;
            spec.series = s_wave_series(
                omega_m,
                &[("sw=0", 0.0), ("sw=0.5", 0.5), ("sw=1", 1.0)],
                true,
            );
            spec
        }
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(spec)
}
