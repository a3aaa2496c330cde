//! Physical inputs of the cavity/mirror/condensate system and the derived
//! rates every other module consumes.
//!
//! All frequencies are angular (rad/s). Quadratures use the convention
//! `X = (a + a†)/√2`, so the vacuum variance is 1/2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K.
pub const K_B: f64 = 1.380_649e-23;
/// Speed of light, m/s.
pub const C: f64 = 2.997_924_58e8;

/// Largest `ħω/k_BT` for which the Bose factor is evaluated; colder baths
/// report zero occupation.
pub const BOSE_EXPONENT_CEILING: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityParams {
    /// Cavity length L (m).
    pub length: f64,
    /// Pump wavelength λ (m).
    pub wavelength: f64,
    pub finesse: f64,
    /// Effective Stark-shifted cavity-pump detuning δ_c (rad/s).
    pub detuning: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MirrorParams {
    /// Effective mass m (kg).
    pub mass: f64,
    /// Mechanical frequency ω_m (rad/s).
    pub frequency: f64,
    /// Quality factor; sets γ_m = ω_m/Q.
    pub quality: f64,
    /// Bath temperature T (K).
    pub temperature: f64,
}

/// Bogoliubov side mode of the condensate, described by its effective
/// parameters. `present = false` is equivalent to `coupling = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BecParams {
    pub present: bool,
    /// Field-condensate coupling ζ (rad/s).
    pub coupling: f64,
    /// s-wave scattering frequency ω_sw (rad/s).
    pub s_wave: f64,
    /// Recoil frequency ω_R (rad/s).
    pub recoil: f64,
    /// Damping γ_c of the collective density excitation (rad/s).
    pub damping: f64,
    /// Effective condensate temperature T_c (K). Only used with the
    /// thermal condensate-noise option.
    pub temperature: f64,
}

/// Microscopic description of the condensate, convertible into the
/// effective (ζ, ω_sw, δ_c) via [`effective_from_microscopic`].
///
/// The dispersive-regime symbols (atomic linewidth, pump frequency) are
/// not needed numerically and are not stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MicroscopicBecParams {
    pub atom_number: f64,
    /// Vacuum Rabi frequency g_0 (rad/s).
    pub rabi: f64,
    /// Atom-pump detuning Δ_a (rad/s).
    pub atomic_detuning: f64,
    /// s-wave scattering length a_s (m).
    pub scattering_length: f64,
    /// Atomic mass m_0 (kg).
    pub atom_mass: f64,
    /// Waist w of the optical potential (m).
    pub waist: f64,
    /// Bare cavity-pump detuning Δ_c (rad/s).
    pub bare_detuning: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveParams {
    /// Pump power P (W).
    pub power: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    pub cavity: CavityParams,
    pub mirror: MirrorParams,
    pub bec: BecParams,
    pub drive: DriveParams,
    /// Replaces the radiation-pressure coupling ξ computed from the mirror
    /// mass. `Some(0.0)` models an infinitely heavy mirror.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi_override: Option<f64>,
    /// Add thermal occupation at T_c to the condensate noise entries.
    #[serde(default)]
    pub bec_thermal: bool,
}

/// Rates derived once per configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedQuantities {
    /// Cavity frequency ω_c = 2πc/λ.
    pub omega_c: f64,
    /// Cavity half-linewidth κ = πc/(LF).
    pub kappa: f64,
    /// Amplitude drive rate η = √(2Pκ/ħω_c).
    pub eta: f64,
    /// Radiation-pressure coupling ξ.
    pub xi: f64,
    /// Field-condensate coupling actually used (0 when the BEC is absent).
    pub zeta: f64,
    pub omega_m: f64,
    pub gamma_m: f64,
    pub gamma_c: f64,
    pub omega_sw: f64,
    /// Ω_c = 4ω_R + ω_sw/2.
    pub omega_cap: f64,
    /// Bogoliubov frequency ω_B = √(Ω_c(Ω_c + ω_sw)).
    pub omega_b: f64,
    /// ω_B − ω_m (signed).
    pub frequency_gap: f64,
    /// Thermal phonon number of the mirror bath.
    pub nbar: f64,
    /// Thermal occupation of the Bogoliubov mode at T_c.
    pub nbar_bec: f64,
    /// Nonlinear detuning pull per photon: Δ = δ_c − β n.
    pub beta: f64,
    pub delta_c: f64,
}

impl DerivedQuantities {
    /// Denominator Ω_c + ω_sw + γ_c²/Ω_c of the static condensate response.
    pub fn bec_stiffness(&self) -> f64 {
        self.omega_cap + self.omega_sw + self.gamma_c * self.gamma_c / self.omega_cap
    }

    /// Pump power that produces drive rate `eta`.
    pub fn power_for_eta(&self, eta: f64) -> f64 {
        eta * eta * HBAR * self.omega_c / (2.0 * self.kappa)
    }

    /// Drive rate produced by pump power `power`.
    pub fn eta_for_power(&self, power: f64) -> f64 {
        (2.0 * power * self.kappa / (HBAR * self.omega_c)).sqrt()
    }
}

/// Mean thermal occupation `1/(exp(ħω/k_BT) − 1)`.
///
/// Returns 0 at `T = 0` and whenever `ħω/k_BT` exceeds
/// [`BOSE_EXPONENT_CEILING`].
pub fn bose_occupation(omega: f64, temperature: f64) -> f64 {
    if temperature <= 0.0 || omega <= 0.0 {
        return 0.0;
    }
    let x = HBAR * omega / (K_B * temperature);
    if x > BOSE_EXPONENT_CEILING {
        0.0
    } else {
        1.0 / x.exp_m1()
    }
}

fn require(cond: bool, field: &'static str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(field, reason))
    }
}

impl SystemParams {
    /// Cavity, mirror and condensate values used throughout the reference
    /// figures: 1 mm cavity at 1064 nm with finesse 3e4, 50 ng mirror at
    /// 2π×10 MHz with Q = 1e5, ω_R = 0.1ω_m, γ_c = 0.001κ, ζ = ξ,
    /// T = 0.4 K, T_c = 0.1 μK, P = 50 mW.
    pub fn reference() -> Self {
        let omega_m = 2.0 * std::f64::consts::PI * 1e7;
        let cavity = CavityParams {
            length: 1e-3,
            wavelength: 1064e-9,
            finesse: 3e4,
            detuning: 0.0,
        };
        let mirror = MirrorParams {
            mass: 50e-12,
            frequency: omega_m,
            quality: 1e5,
            temperature: 0.4,
        };
        let kappa = cavity_decay(&cavity);
        let xi = mirror_coupling(&cavity, &mirror);
        SystemParams {
            cavity,
            mirror,
            bec: BecParams {
                present: true,
                coupling: xi,
                s_wave: 0.0,
                recoil: 0.1 * omega_m,
                damping: 1e-3 * kappa,
                temperature: 0.1e-6,
            },
            drive: DriveParams { power: 0.05 },
            xi_override: None,
            bec_thermal: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.cavity;
        let m = &self.mirror;
        let b = &self.bec;
        let finite = |x: f64| x.is_finite();
        require(finite(c.length) && c.length > 0.0, "cavity.length", "must be > 0")?;
        require(
            finite(c.wavelength) && c.wavelength > 0.0,
            "cavity.wavelength",
            "must be > 0",
        )?;
        require(finite(c.finesse) && c.finesse > 0.0, "cavity.finesse", "must be > 0")?;
        require(finite(c.detuning), "cavity.detuning", "must be finite")?;
        require(finite(m.mass) && m.mass > 0.0, "mirror.mass", "must be > 0")?;
        require(
            finite(m.frequency) && m.frequency > 0.0,
            "mirror.frequency",
            "must be > 0",
        )?;
        require(finite(m.quality) && m.quality > 0.0, "mirror.quality", "must be > 0")?;
        require(
            finite(m.temperature) && m.temperature >= 0.0,
            "mirror.temperature",
            "must be >= 0",
        )?;
        require(finite(b.coupling) && b.coupling >= 0.0, "bec.coupling", "must be >= 0")?;
        require(finite(b.s_wave) && b.s_wave >= 0.0, "bec.s_wave", "must be >= 0")?;
        require(finite(b.damping) && b.damping >= 0.0, "bec.damping", "must be >= 0")?;
        require(finite(b.recoil) && b.recoil >= 0.0, "bec.recoil", "must be >= 0")?;
        require(
            !b.present || b.recoil > 0.0,
            "bec.recoil",
            "must be > 0 when the condensate is present",
        )?;
        require(
            finite(b.temperature) && b.temperature >= 0.0,
            "bec.temperature",
            "must be >= 0",
        )?;
        require(
            finite(self.drive.power) && self.drive.power >= 0.0,
            "drive.power",
            "must be >= 0",
        )?;
        if let Some(xi) = self.xi_override {
            require(finite(xi) && xi >= 0.0, "xi", "must be >= 0")?;
        }
        Ok(())
    }

    /// Same configuration with the condensate removed.
    pub fn without_bec(mut self) -> Self {
        self.bec.present = false;
        self
    }
}

fn cavity_decay(c: &CavityParams) -> f64 {
    std::f64::consts::PI * C / (c.length * c.finesse)
}

fn cavity_frequency(c: &CavityParams) -> f64 {
    2.0 * std::f64::consts::PI * C / c.wavelength
}

fn mirror_coupling(c: &CavityParams, m: &MirrorParams) -> f64 {
    cavity_frequency(c) / c.length * (HBAR / (m.mass * m.frequency)).sqrt()
}

/// Computes every derived rate for a validated configuration.
pub fn derive_quantities(params: &SystemParams) -> Result<DerivedQuantities> {
    params.validate()?;
    let c = &params.cavity;
    let m = &params.mirror;
    let b = &params.bec;

    let omega_c = cavity_frequency(c);
    let kappa = cavity_decay(c);
    let xi = params.xi_override.unwrap_or_else(|| mirror_coupling(c, m));
    let eta = (2.0 * params.drive.power * kappa / (HBAR * omega_c)).sqrt();
    let gamma_m = m.frequency / m.quality;
    let omega_cap = 4.0 * b.recoil + 0.5 * b.s_wave;
    let omega_b = (omega_cap * (omega_cap + b.s_wave)).sqrt();
    let zeta = if b.present { b.coupling } else { 0.0 };

    let mut beta = xi * xi / m.frequency;
    if zeta != 0.0 {
        let stiffness = omega_cap + b.s_wave + b.damping * b.damping / omega_cap;
        beta += zeta * zeta / stiffness;
    }

    Ok(DerivedQuantities {
        omega_c,
        kappa,
        eta,
        xi,
        zeta,
        omega_m: m.frequency,
        gamma_m,
        gamma_c: b.damping,
        omega_sw: b.s_wave,
        omega_cap,
        omega_b,
        frequency_gap: omega_b - m.frequency,
        nbar: bose_occupation(m.frequency, m.temperature),
        nbar_bec: bose_occupation(omega_b, b.temperature),
        beta,
        delta_c: c.detuning,
    })
}

/// Effective condensate parameters `(ζ, ω_sw, δ_c)` from the microscopic
/// description, with `U_0 = g_0²/Δ_a`.
pub fn effective_from_microscopic(
    micro: &MicroscopicBecParams,
    cavity: &CavityParams,
) -> Result<(f64, f64, f64)> {
    require(
        micro.atom_number.is_finite() && micro.atom_number >= 0.0,
        "atom_number",
        "must be >= 0",
    )?;
    require(
        micro.atomic_detuning.is_finite() && micro.atomic_detuning != 0.0,
        "atomic_detuning",
        "must be nonzero (dispersive regime)",
    )?;
    require(micro.waist.is_finite() && micro.waist > 0.0, "waist", "must be > 0")?;
    require(
        micro.atom_mass.is_finite() && micro.atom_mass > 0.0,
        "atom_mass",
        "must be > 0",
    )?;
    require(cavity.length > 0.0, "cavity.length", "must be > 0")?;

    let n = micro.atom_number;
    let u0 = micro.rabi * micro.rabi / micro.atomic_detuning;
    let zeta = 0.5 * n.sqrt() * u0;
    let omega_sw = 8.0 * std::f64::consts::PI * HBAR * micro.scattering_length * n
        / (micro.atom_mass * cavity.length * micro.waist * micro.waist);
    let delta_c = micro.bare_detuning + 0.5 * n * u0;
    Ok((zeta, omega_sw, delta_c))
}
