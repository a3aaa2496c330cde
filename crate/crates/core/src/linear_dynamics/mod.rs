//! Linearized fluctuation dynamics around a mean-field branch.
//!
//! Fluctuations are ordered `[δX, δY, δq, δp, δQ, δP]`: cavity field,
//! mirror, Bogoliubov mode.

mod charpoly;
mod lyapunov;
mod routh;

pub use charpoly::characteristic_polynomial;
pub use lyapunov::{lyapunov_residual, solve_lyapunov, solve_lyapunov_dense, LYAPUNOV_RESIDUAL_TOLERANCE};
pub use routh::{is_stable, Stability};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::DerivedQuantities;
use crate::steady_state::MeanFieldBranch;

pub type Matrix6 = [[f64; 6]; 6];

pub const IDX_X: usize = 0;
pub const IDX_Y: usize = 1;
pub const IDX_Q: usize = 2;
pub const IDX_P: usize = 3;
pub const IDX_BEC_Q: usize = 4;
pub const IDX_BEC_P: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftMatrix(pub Matrix6);

/// Diagonal noise matrix; only the diagonal is stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffusionMatrix(pub [f64; 6]);

impl DiffusionMatrix {
    pub fn to_dense(&self) -> Matrix6 {
        let mut m = [[0.0; 6]; 6];
        for (i, v) in self.0.iter().enumerate() {
            m[i][i] = *v;
        }
        m
    }
}

/// Symmetrized steady-state second moments `V_ij = ⟨δu_i δu_j + δu_j δu_i⟩/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovarianceMatrix(pub Matrix6);

impl CovarianceMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    /// Determinant of the 2×2 block of mode `first..first+2`.
    pub fn mode_determinant(&self, first: usize) -> f64 {
        let m = &self.0;
        m[first][first] * m[first + 1][first + 1] - m[first][first + 1] * m[first + 1][first]
    }
}

/// Drift matrix of the linearized Langevin equations for `branch`.
pub fn drift_matrix(branch: &MeanFieldBranch, d: &DerivedQuantities) -> DriftMatrix {
    let g_mirror = std::f64::consts::SQRT_2 * d.xi * branch.alpha;
    let g_bec = std::f64::consts::SQRT_2 * d.zeta * branch.alpha;
    let delta = branch.detuning;

    let mut a = [[0.0; 6]; 6];
    a[IDX_X][IDX_X] = -d.kappa;
    a[IDX_X][IDX_Y] = delta;
    a[IDX_Y][IDX_X] = -delta;
    a[IDX_Y][IDX_Y] = -d.kappa;
    a[IDX_Y][IDX_Q] = g_mirror;
    a[IDX_Y][IDX_BEC_Q] = -g_bec;
    a[IDX_Q][IDX_P] = d.omega_m;
    a[IDX_P][IDX_X] = g_mirror;
    a[IDX_P][IDX_Q] = -d.omega_m;
    a[IDX_P][IDX_P] = -d.gamma_m;
    a[IDX_BEC_Q][IDX_BEC_Q] = -d.gamma_c;
    a[IDX_BEC_Q][IDX_BEC_P] = d.omega_cap;
    a[IDX_BEC_P][IDX_X] = -g_bec;
    a[IDX_BEC_P][IDX_BEC_Q] = -(d.omega_cap + d.omega_sw);
    a[IDX_BEC_P][IDX_BEC_P] = -d.gamma_c;
    DriftMatrix(a)
}

/// `diag[κ, κ, 0, γ_m(2n̄+1), γ_c, γ_c]`; with the thermal condensate
/// option the last two entries become `γ_c(2n̄_c+1)`.
pub fn diffusion_matrix(d: &DerivedQuantities, bec_thermal: bool) -> DiffusionMatrix {
    let bec = if bec_thermal {
        d.gamma_c * (2.0 * d.nbar_bec + 1.0)
    } else {
        d.gamma_c
    };
    DiffusionMatrix([
        d.kappa,
        d.kappa,
        0.0,
        d.gamma_m * (2.0 * d.nbar + 1.0),
        bec,
        bec,
    ])
}

/// Routh-Hurwitz verdict for a drift matrix. The matrix is rescaled by its
/// largest entry first so the polynomial coefficients stay O(1).
pub fn drift_stability(a: &DriftMatrix) -> Result<Stability> {
    let scale = a.0.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return is_stable(&characteristic_polynomial(&a.0));
    }
    let mut scaled = a.0;
    for v in scaled.iter_mut().flatten() {
        *v /= scale;
    }
    is_stable(&characteristic_polynomial(&scaled))
}

/// Fills in the stability verdict of `branch`.
pub fn classify(branch: &mut MeanFieldBranch, d: &DerivedQuantities) -> Result<Stability> {
    let verdict = drift_stability(&drift_matrix(branch, d))?;
    branch.stability = Some(verdict);
    Ok(verdict)
}

/// Steady-state covariance for a branch that is already known to be stable.
pub fn covariance(
    branch: &MeanFieldBranch,
    d: &DerivedQuantities,
    bec_thermal: bool,
) -> Result<CovarianceMatrix> {
    solve_lyapunov(&drift_matrix(branch, d), &diffusion_matrix(d, bec_thermal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{derive_quantities, SystemParams};
    use crate::steady_state::BranchLabel;

    fn fig5_params() -> (SystemParams, DerivedQuantities) {
        let mut p = SystemParams::reference();
        p.bec.s_wave = 2.0 * p.mirror.frequency;
        let d = derive_quantities(&p).unwrap();
        (p, d)
    }

    #[test]
    fn zero_field_is_block_diagonal() {
        let (_, d) = fig5_params();
        let b = MeanFieldBranch::from_photon_number(&d, 0.0, BranchLabel::Unique);
        let a = drift_matrix(&b, &d).0;
        let blocks = [(0usize, 2usize), (2, 4), (4, 6)];
        for (i, row) in a.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let same = blocks.iter().any(|&(lo, hi)| (lo..hi).contains(&i) && (lo..hi).contains(&j));
                if !same {
                    assert_eq!(*v, 0.0, "({i},{j})");
                }
            }
        }
        assert_eq!(a[0][0], -d.kappa);
        assert_eq!(a[0][1], d.delta_c);
        assert_eq!(a[2][3], d.omega_m);
        assert_eq!(a[3][3], -d.gamma_m);
        assert_eq!(a[4][5], d.omega_cap);
        assert_eq!(a[5][4], -(d.omega_cap + d.omega_sw));
    }

    #[test]
    fn coupling_at_reference_cooling_point() {
        let (_, d) = fig5_params();
        let b = MeanFieldBranch::at_effective_detuning(&d, d.omega_m);
        let a = drift_matrix(&b, &d).0;
        let g = a[IDX_Y][IDX_Q];
        assert!((g / 2.68e7 - 1.0).abs() < 0.01, "g = {g}");
        assert!((g / d.omega_m - 0.43).abs() < 0.01);
        assert_eq!(a[IDX_P][IDX_X], g);
        assert_eq!(a[IDX_Y][IDX_BEC_Q], -std::f64::consts::SQRT_2 * d.zeta * b.alpha);
        assert_eq!(a[IDX_BEC_P][IDX_X], a[IDX_Y][IDX_BEC_Q]);
        assert_eq!(a[IDX_Q][IDX_Q], 0.0);
    }

    #[test]
    fn absent_condensate_decouples() {
        let (p, _) = fig5_params();
        let d = derive_quantities(&p.without_bec()).unwrap();
        let b = MeanFieldBranch::at_effective_detuning(&d, d.omega_m);
        let a = drift_matrix(&b, &d).0;
        for i in 0..4 {
            for j in 4..6 {
                assert_eq!(a[i][j], 0.0);
                assert_eq!(a[j][i], 0.0);
            }
        }
    }

    #[test]
    fn diffusion_entries() {
        let (p, d) = fig5_params();
        let diag = diffusion_matrix(&d, false).0;
        assert_eq!(diag[0], d.kappa);
        assert_eq!(diag[2], 0.0);
        assert_eq!(diag[4], d.gamma_c);
        assert_eq!(diag[5], d.gamma_c);
        assert!((diag[3] / d.gamma_m - 1666.8).abs() < 0.2);

        let mut cold = p;
        cold.mirror.temperature = 0.0;
        let dc = derive_quantities(&cold).unwrap();
        assert_eq!(diffusion_matrix(&dc, false).0[3], dc.gamma_m);

        let thermal = diffusion_matrix(&d, true).0;
        assert_eq!(thermal[4], d.gamma_c * (2.0 * d.nbar_bec + 1.0));
        assert!(thermal[4] >= diag[4]);
    }

    #[test]
    fn reference_cooling_point_is_stable() {
        let (_, d) = fig5_params();
        let mut b = MeanFieldBranch::at_effective_detuning(&d, d.omega_m);
        assert_eq!(classify(&mut b, &d).unwrap(), Stability::Stable);
        assert_eq!(b.stability, Some(Stability::Stable));
        let v = covariance(&b, &d, false).unwrap();
        for first in [0, 2, 4] {
            assert!(v.mode_determinant(first) >= 0.25 - 1e-9);
        }
    }
}
