//! Mean-field fixed points of the driven cavity.
//!
//! Eliminating the mechanical and condensate displacements leaves a single
//! self-consistency condition for the intracavity photon number `n = α²`:
//!
//! ```text
//! n ((δ_c − β n)² + κ²) = η²
//! ```
//!
//! which is cubic in `n`. It is solved in the scaled variable
//! `x = β n / κ`, where it reads `x ((x − d)² + 1) = p` with `d = δ_c/κ`
//! and `p = β η² / κ³`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linear_dynamics::Stability;
use crate::model::{derive_quantities, DerivedQuantities, SystemParams};

/// Relative distance in drive strength from a turning point below which
/// the two coalescing roots are reported as a single degenerate branch.
pub const KNEE_TOLERANCE: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchLabel {
    Lower,
    Middle,
    Upper,
    Unique,
}

impl BranchLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            BranchLabel::Lower => "lower",
            BranchLabel::Middle => "middle",
            BranchLabel::Upper => "upper",
            BranchLabel::Unique => "unique",
        }
    }
}

/// One self-consistent mean-field solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanFieldBranch {
    /// Mean photon number α².
    pub n: f64,
    /// Real field amplitude α ≥ 0.
    pub alpha: f64,
    /// Effective detuning Δ (rad/s).
    pub detuning: f64,
    /// Cavity-pump detuning δ_c this branch belongs to (rad/s).
    pub delta_c: f64,
    /// Mirror position and momentum quadratures.
    pub q: f64,
    pub p: f64,
    /// Bogoliubov-mode quadratures.
    pub bec_q: f64,
    pub bec_p: f64,
    pub label: BranchLabel,
    /// Set on a double root sitting exactly at a turning point.
    pub degenerate: bool,
    /// Filled in by [`crate::linear_dynamics::classify`].
    pub stability: Option<Stability>,
}

impl MeanFieldBranch {
    /// Builds the full mean-field state for a given photon number.
    pub fn from_photon_number(d: &DerivedQuantities, n: f64, label: BranchLabel) -> Self {
        let (bec_q, bec_p) = if d.zeta != 0.0 {
            let q = -d.zeta * n / d.bec_stiffness();
            (q, d.gamma_c / d.omega_cap * q)
        } else {
            (0.0, 0.0)
        };
        MeanFieldBranch {
            n,
            alpha: n.sqrt(),
            detuning: d.delta_c - d.beta * n,
            delta_c: d.delta_c,
            q: d.xi / d.omega_m * n,
            p: 0.0,
            bec_q,
            bec_p,
            label,
            degenerate: false,
            stability: None,
        }
    }

    /// Mean-field state at a prescribed effective detuning Δ, bypassing the
    /// cubic. The implied δ_c is `Δ + β n`.
    pub fn at_effective_detuning(d: &DerivedQuantities, detuning: f64) -> Self {
        let n = d.eta * d.eta / (detuning * detuning + d.kappa * d.kappa);
        let mut b = Self::from_photon_number(d, n, BranchLabel::Unique);
        b.detuning = detuning;
        b.delta_c = detuning + d.beta * n;
        b
    }

    /// `|n((δ_c − βn)² + κ²) − η²| / η²` for this branch.
    pub fn substitution_residual(&self, d: &DerivedQuantities) -> f64 {
        let eta2 = d.eta * d.eta;
        let delta = self.delta_c - d.beta * self.n;
        let lhs = self.n * (delta * delta + d.kappa * d.kappa);
        if eta2 == 0.0 {
            lhs.abs()
        } else {
            (lhs - eta2).abs() / eta2
        }
    }
}

/// Turning points of the photon-number response at fixed δ_c.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BistabilityWindow {
    /// Power at which the upper branch appears (W).
    pub p_low: f64,
    /// Power at which the lower branch disappears (W).
    pub p_high: f64,
    /// Photon number at the `p_low` knee (the larger-n turning point).
    pub n_knee_low: f64,
    /// Photon number at the `p_high` knee.
    pub n_knee_high: f64,
}

/// Coefficients `[c3, c2, c1, c0]` of `c3 n³ + c2 n² + c1 n + c0 = 0`.
pub fn mean_field_cubic(d: &DerivedQuantities, delta_c: f64) -> [f64; 4] {
    [
        d.beta * d.beta,
        -2.0 * delta_c * d.beta,
        delta_c * delta_c + d.kappa * d.kappa,
        -d.eta * d.eta,
    ]
}

/// `x ((x − d)² + 1)`, the scaled drive strength reached at root `x`.
fn drive_at(x: f64, d: f64) -> f64 {
    x * ((x - d) * (x - d) + 1.0)
}

/// Scaled turning points `(x_max, x_min)` of `drive_at`: the local
/// maximum at smaller `x`, the local minimum at larger `x`.
fn turning_points(d: f64) -> Option<(f64, f64)> {
    let disc = d * d - 3.0;
    if disc <= 0.0 {
        return None;
    }
    let r = disc.sqrt();
    Some(((2.0 * d - r) / 3.0, (2.0 * d + r) / 3.0))
}

fn newton_polish(x: f64, d: f64, p: f64) -> f64 {
    let f = drive_at(x, d) - p;
    let df = 3.0 * x * x - 4.0 * d * x + d * d + 1.0;
    if df == 0.0 {
        return x;
    }
    let next = x - f / df;
    if (drive_at(next, d) - p).abs() <= f.abs() {
        next
    } else {
        x
    }
}

/// Real roots of `x³ − 2d x² + (d² + 1) x − p`, ascending, each with a
/// degeneracy flag.
fn scaled_roots(d: f64, p: f64) -> Vec<(f64, bool)> {
    // Depressed form t³ + a t + b with x = t + 2d/3.
    let shift = 2.0 * d / 3.0;
    let a = 1.0 - d * d / 3.0;
    let b = (2.0 * d * d * d + 18.0 * d) / 27.0 - p;

    let mut roots: Vec<f64> = if a < 0.0 && 4.0 * a * a * a + 27.0 * b * b < 0.0 {
        let m = 2.0 * (-a / 3.0).sqrt();
        let arg = (3.0 * b / (a * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
            .collect()
    } else {
        let half = b / 2.0;
        let disc = (half * half + a * a * a / 27.0).max(0.0);
        let u = -half.signum() * (half.abs() + disc.sqrt()).cbrt();
        let t = if u == 0.0 { 0.0 } else { u - a / (3.0 * u) };
        vec![t + shift]
    };
    for x in roots.iter_mut() {
        *x = newton_polish(*x, d, p);
    }
    roots.sort_by(|l, r| l.total_cmp(r));

    if let Some((x_max, x_min)) = turning_points(d) {
        let near = |x_knee: f64| (drive_at(x_knee, d) - p).abs() <= KNEE_TOLERANCE * p;
        if near(x_min) {
            let lower = *roots.first().expect("cubic has a real root");
            return vec![(lower, false), (x_min, true)];
        }
        if near(x_max) {
            let upper = *roots.last().expect("cubic has a real root");
            return vec![(x_max, true), (upper, false)];
        }
    }
    roots.into_iter().map(|x| (x, false)).collect()
}

/// All mean-field branches for already-derived quantities, ascending in n.
pub fn branches(d: &DerivedQuantities) -> Vec<MeanFieldBranch> {
    let eta2 = d.eta * d.eta;
    if eta2 == 0.0 {
        return vec![MeanFieldBranch::from_photon_number(d, 0.0, BranchLabel::Unique)];
    }
    if d.beta == 0.0 {
        let n = eta2 / (d.delta_c * d.delta_c + d.kappa * d.kappa);
        return vec![MeanFieldBranch::from_photon_number(d, n, BranchLabel::Unique)];
    }

    let kappa = d.kappa;
    let scaled_detuning = d.delta_c / kappa;
    let scaled_drive = d.beta * eta2 / (kappa * kappa * kappa);
    let roots = scaled_roots(scaled_detuning, scaled_drive);
    let labels: &[BranchLabel] = match roots.len() {
        3 => &[BranchLabel::Lower, BranchLabel::Middle, BranchLabel::Upper],
        2 => &[BranchLabel::Lower, BranchLabel::Upper],
        _ => &[BranchLabel::Unique],
    };
    roots
        .iter()
        .zip(labels)
        .map(|(&(x, degenerate), &label)| {
            let mut b = MeanFieldBranch::from_photon_number(d, x * kappa / d.beta, label);
            b.degenerate = degenerate;
            b
        })
        .collect()
}

/// Solves the mean-field equations for `params` at the given δ_c and pump
/// power, returning one to three branches in ascending photon number.
pub fn solve_mean_field(
    params: &SystemParams,
    delta_c: f64,
    power: f64,
) -> Result<Vec<MeanFieldBranch>> {
    let mut p = *params;
    p.cavity.detuning = delta_c;
    p.drive.power = power;
    Ok(branches(&derive_quantities(&p)?))
}

/// Window of pump powers with three coexisting branches at `delta_c`.
pub fn window_for(d: &DerivedQuantities, delta_c: f64) -> Option<BistabilityWindow> {
    if d.beta <= 0.0 {
        return None;
    }
    let kappa = d.kappa;
    let scaled = delta_c / kappa;
    let (x_max, x_min) = turning_points(scaled)?;
    let power = |x: f64| {
        let eta2 = drive_at(x, scaled) * kappa * kappa * kappa / d.beta;
        d.power_for_eta(eta2.sqrt())
    };
    Some(BistabilityWindow {
        p_low: power(x_min),
        p_high: power(x_max),
        n_knee_low: x_min * kappa / d.beta,
        n_knee_high: x_max * kappa / d.beta,
    })
}

/// Bistable window at `delta_c`, or `None` when δ_c ≤ √3 κ or β = 0.
pub fn bistability_window(params: &SystemParams, delta_c: f64) -> Result<Option<BistabilityWindow>> {
    let d = derive_quantities(params)?;
    Ok(window_for(&d, delta_c))
}

/// Lowest pump power at which the system becomes bistable.
pub fn threshold_power(params: &SystemParams, delta_c: f64) -> Result<Option<f64>> {
    Ok(bistability_window(params, delta_c)?.map(|w| w.p_low))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference() -> SystemParams {
        SystemParams::reference()
    }

    fn kappa() -> f64 {
        derive_quantities(&reference()).unwrap().kappa
    }

    #[test]
    fn cubic_degrades_to_lorentzian() {
        let mut p = reference().without_bec();
        p.xi_override = Some(0.0);
        let d = derive_quantities(&p).unwrap();
        let c = mean_field_cubic(&d, 0.0);
        assert_eq!(c[0], 0.0);
        assert_eq!(c[1], 0.0);
        assert_eq!(c[2], d.kappa * d.kappa);

        for delta_c in [0.0, 1.3 * d.kappa, -4.0 * d.kappa] {
            let b = solve_mean_field(&p, delta_c, 0.05).unwrap();
            assert_eq!(b.len(), 1);
            let expected = d.eta * d.eta / (delta_c * delta_c + d.kappa * d.kappa);
            assert!(((b[0].n - expected) / expected).abs() < 1e-15);
            assert_eq!(b[0].q, 0.0);
            assert_eq!(b[0].bec_q, 0.0);
            assert_eq!(b[0].label, BranchLabel::Unique);
        }
    }

    #[test]
    fn no_bec_nonlinearity() {
        let d = derive_quantities(&reference().without_bec()).unwrap();
        assert!((d.beta / 1.675e-3 - 1.0).abs() < 1e-3, "beta = {}", d.beta);
    }

    #[test]
    fn root_count_around_the_knee() {
        let p = reference().without_bec();
        let dc = 4.0 * kappa();
        assert_eq!(solve_mean_field(&p, dc, 0.100).unwrap().len(), 1);
        let three = solve_mean_field(&p, dc, 0.250).unwrap();
        assert_eq!(three.len(), 3);
        let labels: Vec<_> = three.iter().map(|b| b.label).collect();
        assert_eq!(
            labels,
            [BranchLabel::Lower, BranchLabel::Middle, BranchLabel::Upper]
        );
        assert!(three.windows(2).all(|w| w[0].n < w[1].n));
        assert_eq!(solve_mean_field(&p, dc, 0.700).unwrap().len(), 1);
    }

    #[test]
    fn mean_field_equations_hold() {
        let mut p = reference();
        p.bec.s_wave = 0.5 * p.mirror.frequency;
        let dc = 4.0 * kappa();
        for b in solve_mean_field(&p, dc, 0.2).unwrap() {
            let mut q = p;
            q.cavity.detuning = dc;
            q.drive.power = 0.2;
            let d = derive_quantities(&q).unwrap();
            assert!(b.substitution_residual(&d) < 1e-10);
            assert_eq!(b.p, 0.0);
            assert!((b.alpha * b.alpha - b.n).abs() <= 1e-15 * b.n);
            let delta = d.delta_c - d.xi * b.q + d.zeta * b.bec_q;
            assert!((delta - b.detuning).abs() <= 1e-9 * d.kappa);
            assert!((b.bec_p - d.gamma_c / d.omega_cap * b.bec_q).abs() <= 1e-15 * b.bec_q.abs());
        }
    }

    #[test]
    fn window_absent_below_critical_detuning() {
        let p = reference();
        assert!(bistability_window(&p, kappa()).unwrap().is_none());
        assert!(bistability_window(&p, 3f64.sqrt() * kappa()).unwrap().is_none());
        let mut flat = p.without_bec();
        flat.xi_override = Some(0.0);
        assert!(bistability_window(&flat, 4.0 * kappa()).unwrap().is_none());
    }

    #[test]
    fn window_values_no_bec() {
        let w = bistability_window(&reference().without_bec(), 4.0 * kappa())
            .unwrap()
            .unwrap();
        assert!((w.p_low * 1e3 - 216.5).abs() < 1.0, "{w:?}");
        assert!((w.p_high * 1e3 - 598.5).abs() < 2.0, "{w:?}");
        assert!(w.n_knee_low > w.n_knee_high);
    }

    #[test]
    fn degenerate_knee_reports_two_branches() {
        let p = reference().without_bec();
        let dc = 4.0 * kappa();
        let w = bistability_window(&p, dc).unwrap().unwrap();
        let at_low = solve_mean_field(&p, dc, w.p_low).unwrap();
        assert_eq!(at_low.len(), 2);
        assert!(at_low[1].degenerate && !at_low[0].degenerate);
        let at_high = solve_mean_field(&p, dc, w.p_high).unwrap();
        assert_eq!(at_high.len(), 2);
        assert!(at_high[0].degenerate && !at_high[1].degenerate);
    }

    #[test]
    fn zero_drive_is_empty_cavity() {
        let b = solve_mean_field(&reference(), 4.0 * kappa(), 0.0).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].n, 0.0);
    }

    #[test]
    fn effective_detuning_mode() {
        let d = derive_quantities(&reference()).unwrap();
        let b = MeanFieldBranch::at_effective_detuning(&d, d.omega_m);
        assert_eq!(b.detuning, d.omega_m);
        assert!(b.substitution_residual(&d) < 1e-12);
    }
}
