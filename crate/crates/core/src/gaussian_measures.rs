//! Occupation numbers and bipartite entanglement read off the steady-state
//! covariance matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear_dynamics::{CovarianceMatrix, IDX_BEC_P, IDX_BEC_Q, IDX_P, IDX_Q, IDX_X, IDX_Y};

pub type Matrix4 = [[f64; 4]; 4];

/// Relative slack allowed on `Σ² − 4 det V` before it is treated as
/// non-physical.
pub const DISCRIMINANT_GUARD: f64 = 1e-12;

/// Incoherent mirror phonon number `(V_qq + V_pp − 1)/2`.
pub fn mirror_phonons(v: &CovarianceMatrix) -> f64 {
    (v.get(IDX_Q, IDX_Q) + v.get(IDX_P, IDX_P) - 1.0) / 2.0
}

/// Incoherent Bogoliubov excitation number `(V_QQ + V_PP − 1)/2`.
pub fn bogoliubov_excitations(v: &CovarianceMatrix) -> f64 {
    (v.get(IDX_BEC_Q, IDX_BEC_Q) + v.get(IDX_BEC_P, IDX_BEC_P) - 1.0) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bipartition {
    MirrorField,
    AtomField,
    MirrorAtom,
}

impl Bipartition {
    pub const ALL: [Bipartition; 3] = [
        Bipartition::MirrorField,
        Bipartition::AtomField,
        Bipartition::MirrorAtom,
    ];

    /// Quadrature indices of the two modes, first-listed mode first.
    pub fn indices(self) -> ([usize; 2], [usize; 2]) {
        let mirror = [IDX_Q, IDX_P];
        let field = [IDX_X, IDX_Y];
        let atom = [IDX_BEC_Q, IDX_BEC_P];
        match self {
            Bipartition::MirrorField => (mirror, field),
            Bipartition::AtomField => (atom, field),
            Bipartition::MirrorAtom => (mirror, atom),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Bipartition::MirrorField => "mirror-field",
            Bipartition::AtomField => "atom-field",
            Bipartition::MirrorAtom => "mirror-atom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntanglementResult {
    /// Logarithmic negativity.
    pub log_negativity: f64,
    /// Smallest symplectic eigenvalue of the partial transpose.
    pub eta_minus: f64,
}

/// Drops the uninvolved mode and returns `[[B, C], [Cᵀ, B′]]`.
pub fn reduce_bipartition(v: &CovarianceMatrix, bp: Bipartition) -> Matrix4 {
    let (first, second) = bp.indices();
    let idx = [first[0], first[1], second[0], second[1]];
    let mut out = [[0.0; 4]; 4];
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            out[r][c] = v.get(i, j);
        }
    }
    out
}

fn det2(m: &Matrix4, r: usize, c: usize) -> f64 {
    m[r][c] * m[r + 1][c + 1] - m[r][c + 1] * m[r + 1][c]
}

/// Determinant of a 4×4 by LU factorization with partial pivoting. Laplace
/// expansion loses the sign of det V for strongly squeezed states.
pub fn det4(m: &Matrix4) -> f64 {
    let mut a = *m;
    let mut det = 1.0;
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap_or(col);
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for r in (col + 1)..4 {
            let f = a[r][col] / a[col][col];
            for k in col..4 {
                a[r][k] -= f * a[col][k];
            }
        }
    }
    det
}

/// Logarithmic negativity of a two-mode covariance matrix.
pub fn log_negativity(v4: &Matrix4) -> Result<EntanglementResult> {
    let det_b = det2(v4, 0, 0);
    let det_b2 = det2(v4, 2, 2);
    let det_c = det2(v4, 0, 2);
    let sigma = det_b + det_b2 - 2.0 * det_c;
    let det = det4(v4);

    let mut disc = sigma * sigma - 4.0 * det;
    if disc < 0.0 {
        if disc >= -DISCRIMINANT_GUARD * (sigma * sigma).max(1.0) {
            disc = 0.0;
        } else {
            return Err(Error::NonPhysical(format!(
                "Σ² − 4 det V = {disc:e} is negative"
            )));
        }
    }
    // η−² = (Σ − √disc)/2, rewritten as 2 det/(Σ + √disc) to avoid
    // cancellation for strongly squeezed states.
    let larger = sigma + disc.sqrt();
    if larger <= 0.0 || det < 0.0 {
        return Err(Error::NonPhysical(format!(
            "Σ = {sigma:e}, det V = {det:e}"
        )));
    }
    let eta_minus = (2.0 * det / larger).sqrt();
    let log_negativity = (-(2.0 * eta_minus).ln()).max(0.0);
    Ok(EntanglementResult {
        log_negativity,
        eta_minus,
    })
}

/// Logarithmic negativity of the selected bipartition of `v`.
pub fn entanglement(v: &CovarianceMatrix, bp: Bipartition) -> Result<EntanglementResult> {
    log_negativity(&reduce_bipartition(v, bp))
}
