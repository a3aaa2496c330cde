//! Builds the linearized drift matrix at one operating point, checks it
//! with Routh-Hurwitz and solves for the steady-state covariance.

use optomech::linear_dynamics::{
    characteristic_polynomial, diffusion_matrix, drift_matrix, drift_stability, lyapunov_residual,
    solve_lyapunov,
};
use optomech::model::{derive_quantities, SystemParams};
use optomech::steady_state::MeanFieldBranch;

fn main() -> optomech::Result<()> {
    let mut params = SystemParams::reference();
    params.bec.s_wave = 2.0 * params.mirror.frequency;
    let d = derive_quantities(&params)?;

    let branch = MeanFieldBranch::at_effective_detuning(&d, d.omega_m);
    let a = drift_matrix(&branch, &d);
    let noise = diffusion_matrix(&d, params.bec_thermal);

    let coeffs = characteristic_polynomial(&a.0);
    println!("photons n = {:.4e}", branch.n);
    println!("characteristic polynomial (ascending):");
    for (k, c) in coeffs.iter().enumerate() {
        println!("  λ^{k}: {c:.6e}");
    }
    println!("verdict: {}", drift_stability(&a)?.as_str());

    let v = solve_lyapunov(&a, &noise)?;
    let residual = lyapunov_residual(&a.0, &v.0, &noise.to_dense());
    println!("Lyapunov residual / κ: {:.3e}", residual / d.kappa);
    println!("covariance:");
    for row in v.0 {
        let line: Vec<String> = row.iter().map(|x| format!("{x:>12.4e}")).collect();
        println!("  {}", line.join(" "));
    }
    Ok(())
}
