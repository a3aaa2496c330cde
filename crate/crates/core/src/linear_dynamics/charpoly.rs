/// Coefficients `[a_0, …, a_N]` (ascending, `a_N = 1`) of
/// `det(λI − A)`, by the Faddeev-LeVerrier recurrence
///
/// ```text
/// M_0 = 0,  M_k = A M_{k−1} + a_{N−k+1} I,  a_{N−k} = −tr(A M_k)/k
/// ```
pub fn characteristic_polynomial<const N: usize>(a: &[[f64; N]; N]) -> Vec<f64> {
    let mut coeffs = vec![0.0; N + 1];
    coeffs[N] = 1.0;
    let mut m = [[0.0; N]; N];
    for k in 1..=N {
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[N - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let trace: f64 = (0..N).map(|i| am[i][i]).sum();
        coeffs[N - k] = -trace / k as f64;
    }
    coeffs
}

fn matmul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}
