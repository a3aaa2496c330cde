use crate::error::{Error, Result};

use super::{CovarianceMatrix, DiffusionMatrix, DriftMatrix};

/// Largest accepted `‖AV + VAᵀ + D‖_max / ‖D‖_max`.
pub const LYAPUNOV_RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Pivots smaller than this fraction of the system's largest entry mark
/// the Kronecker system as singular.
const PIVOT_FLOOR: f64 = 1e-14;

/// Solves `AV + VAᵀ = −D` for the 6×6 fluctuation covariance.
///
/// The caller is expected to have checked stability; a marginal drift
/// matrix surfaces as [`Error::SingularLyapunov`].
pub fn solve_lyapunov(a: &DriftMatrix, d: &DiffusionMatrix) -> Result<CovarianceMatrix> {
    solve_lyapunov_dense(&a.0, &d.to_dense()).map(CovarianceMatrix)
}

/// Solves `AV + VAᵀ = −D` for any fixed size by Kronecker vectorization,
/// `(I⊗A + A⊗I) vec(V) = −vec(D)`, and Gaussian elimination with partial
/// pivoting on the `N²` unknowns.
pub fn solve_lyapunov_dense<const N: usize>(
    a: &[[f64; N]; N],
    d: &[[f64; N]; N],
) -> Result<[[f64; N]; N]> {
    let size = N * N;
    // Column-major vec: V_ij ↦ i + N j.
    let mut system = vec![0.0; size * size];
    let mut rhs = vec![0.0; size];
    for j in 0..N {
        for i in 0..N {
            let row = i + N * j;
            for k in 0..N {
                system[row * size + k + N * j] += a[i][k];
                system[row * size + i + N * k] += a[j][k];
            }
            rhs[row] = -d[i][j];
        }
    }

    let x = gaussian_solve(&mut system, &mut rhs, size)?;

    let mut v = [[0.0; N]; N];
    for j in 0..N {
        for i in 0..N {
            v[i][j] = x[i + N * j];
        }
    }
    for i in 0..N {
        for j in (i + 1)..N {
            let s = 0.5 * (v[i][j] + v[j][i]);
            v[i][j] = s;
            v[j][i] = s;
        }
    }

    let d_max = d.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    let residual = lyapunov_residual(a, &v, d);
    if residual > LYAPUNOV_RESIDUAL_TOLERANCE * d_max || !residual.is_finite() {
        return Err(Error::SingularLyapunov);
    }
    Ok(v)
}

/// `‖AV + VAᵀ + D‖_max`.
pub fn lyapunov_residual<const N: usize>(
    a: &[[f64; N]; N],
    v: &[[f64; N]; N],
    d: &[[f64; N]; N],
) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..N {
        for j in 0..N {
            let mut r = d[i][j];
            for k in 0..N {
                r += a[i][k] * v[k][j] + v[i][k] * a[j][k];
            }
            worst = worst.max(r.abs());
        }
    }
    worst
}

fn gaussian_solve(m: &mut [f64], rhs: &mut [f64], n: usize) -> Result<Vec<f64>> {
    let scale = m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 {
        return Err(Error::SingularLyapunov);
    }
    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, m[r * n + col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("non-empty column");
        if pivot <= PIVOT_FLOOR * scale {
            return Err(Error::SingularLyapunov);
        }
        if pivot_row != col {
            for k in 0..n {
                m.swap(col * n + k, pivot_row * n + k);
            }
            rhs.swap(col, pivot_row);
        }
        let p = m[col * n + col];
        for r in (col + 1)..n {
            let factor = m[r * n + col] / p;
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                m[r * n + k] -= factor * m[col * n + k];
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let mut s = rhs[r];
        for k in (r + 1)..n {
            s -= m[r * n + k] * x[k];
        }
        x[r] = s / m[r * n + r];
    }
    Ok(x)
}
