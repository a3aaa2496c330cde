//! Walks the pump power through the bistable window at δ_c = 4κ and lists
//! the mean-field branches with their stability.

use optomech::linear_dynamics::classify;
use optomech::model::{derive_quantities, SystemParams};
use optomech::steady_state::solve_mean_field;

fn main() -> optomech::Result<()> {
    let params = SystemParams::reference().without_bec();
    let d0 = derive_quantities(&params)?;
    let delta_c = 4.0 * d0.kappa;

    for power_mw in [100.0, 216.0, 250.0, 400.0, 600.0, 700.0] {
        let mut p = params;
        p.cavity.detuning = delta_c;
        p.drive.power = power_mw * 1e-3;
        let d = derive_quantities(&p)?;
        println!("P = {power_mw} mW");
        for mut b in solve_mean_field(&params, delta_c, power_mw * 1e-3)? {
            let verdict = classify(&mut b, &d)?;
            println!(
                "  {:<7} n = {:.4e}  Δ/κ = {:+.4}  {}{}",
                b.label.as_str(),
                b.n,
                b.detuning / d.kappa,
                verdict.as_str(),
                if b.degenerate { "  (turning point)" } else { "" }
            );
        }
    }
    Ok(())
}
