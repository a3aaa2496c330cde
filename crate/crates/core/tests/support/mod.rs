//! Independent oracles used by the integration suites. Nothing here calls
//! into the code paths it validates.

#![allow(dead_code)]

use rand::Rng;

pub type Mat = Vec<Vec<f64>>;

pub fn to_mat<const N: usize>(a: &[[f64; N]; N]) -> Mat {
    a.iter().map(|r| r.to_vec()).collect()
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn max_abs(a: &Mat) -> f64 {
    a.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Growth rate of `du/dt = A u`, i.e. the largest real part of the
/// spectrum, estimated from a fixed-step RK4 integration.
///
/// The RK4 step map for a linear system is the matrix polynomial
/// `I + hA + (hA)²/2 + (hA)³/6 + (hA)⁴/24`; applying it 2^k times is done by
/// repeated squaring with renormalization, so horizons of many thousands of
/// decay times stay cheap. The rate is fitted from the log-norm growth of a
/// random unit initial vector between horizons T and 2T.
pub fn stability_oracle(a: &Mat, rng: &mut impl Rng) -> f64 {
    let n = a.len();
    let scale = max_abs(a).max(1e-300);
    let h = 1e-3 / scale;
    let ha: Mat = a.iter().map(|r| r.iter().map(|x| x * h).collect()).collect();
    let mut step = vec![vec![0.0; n]; n];
    let mut power = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect::<Mat>();
    let mut factorial = 1.0;
    for k in 0..=4 {
        if k > 0 {
            power = matmul(&power, &ha);
            factorial *= k as f64;
        }
        for i in 0..n {
            for j in 0..n {
                step[i][j] += power[i][j] / factorial;
            }
        }
    }

    let mut u: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    u.iter_mut().for_each(|x| *x /= norm);

    // propagator = exp(log_scale) * m, representing step^(2^k).
    let mut m = step;
    let mut log_scale = 0.0;
    let mut time = h;
    let doublings = 36;
    for _ in 0..doublings {
        m = matmul(&m, &m);
        log_scale *= 2.0;
        time *= 2.0;
        let s = max_abs(&m);
        if s == 0.0 {
            return f64::NEG_INFINITY;
        }
        m.iter_mut().flatten().for_each(|x| *x /= s);
        log_scale += s.ln();
    }
    let apply = |v: &[f64]| -> (Vec<f64>, f64) {
        let w: Vec<f64> = (0..n).map(|i| (0..n).map(|j| m[i][j] * v[j]).sum()).collect();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        (w.iter().map(|x| x / norm).collect(), norm.ln() + log_scale)
    };
    let (u1, _) = apply(&u);
    let (_, growth) = apply(&u1);
    growth / time
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(a: &Mat) -> f64 {
    let n = a.len();
    let mut m = a.clone();
    let mut det = 1.0;
    for col in 0..n {
        let p = (col..n)
            .max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))
            .unwrap();
        if m[p][col] == 0.0 {
            return 0.0;
        }
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= m[col][col];
        for r in (col + 1)..n {
            let f = m[r][col] / m[col][col];
            for k in col..n {
                m[r][k] -= f * m[col][k];
            }
        }
    }
    det
}

/// `det(λI − A)`.
pub fn char_poly_at(a: &Mat, lambda: f64) -> f64 {
    let n = a.len();
    let m: Mat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { lambda - a[i][j] } else { -a[i][j] })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// Scaled drive `x((x − d)² + 1)` reached at scaled photon number `x`.
pub fn drive_curve(x: f64, d: f64) -> f64 {
    x * ((x - d) * (x - d) + 1.0)
}

/// Local extrema of the pump-power curve P(n) at fixed δ_c found by a dense
/// scan of `samples` points over `[0, n_max]`, refined by golden-section
/// search around each sign change of the discrete slope.
/// Returns `(P at local minimum, P at local maximum)` when both exist.
pub fn scan_knees(power_of_n: impl Fn(f64) -> f64, n_max: f64, samples: usize) -> Option<(f64, f64)> {
    let step = n_max / samples as f64;
    let mut prev = power_of_n(0.0);
    let mut rising = None;
    let mut max = None;
    let mut min = None;
    for i in 1..=samples {
        let cur = power_of_n(i as f64 * step);
        let now_rising = cur > prev;
        if let Some(was) = rising {
            let bracket = ((i as f64 - 2.0) * step, i as f64 * step);
            if was && !now_rising && max.is_none() {
                max = Some(golden(&power_of_n, bracket, true));
            } else if !was && now_rising && min.is_none() {
                min = Some(golden(&power_of_n, bracket, false));
            }
        }
        rising = Some(now_rising);
        prev = cur;
    }
    Some((min?, max?))
}

fn golden(f: &impl Fn(f64) -> f64, (mut lo, mut hi): (f64, f64), maximize: bool) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let val = |x: f64| if maximize { -f(x) } else { f(x) };
    for _ in 0..200 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if val(a) < val(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    f(0.5 * (lo + hi))
}

pub fn random_matrix(rng: &mut impl Rng, n: usize) -> Mat {
    (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect()
}

pub fn to_array6(m: &Mat) -> [[f64; 6]; 6] {
    let mut out = [[0.0; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            out[i][j] = m[i][j];
        }
    }
    out
}

/// Relative comparison with an absolute floor.
pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
