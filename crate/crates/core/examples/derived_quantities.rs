//! Prints the rates and frequencies derived from the reference parameters.

use optomech::model::{derive_quantities, SystemParams};

fn main() -> optomech::Result<()> {
    let params = SystemParams::reference();
    let d = derive_quantities(&params)?;

    println!("cavity decay        κ    = {:.4e} rad/s  (κ/ω_m = {:.4})", d.kappa, d.kappa / d.omega_m);
    println!("mirror coupling     ξ    = {:.2} rad/s", d.xi);
    println!("condensate coupling ζ    = {:.2} rad/s", d.zeta);
    println!("mirror damping      γ_m  = {:.4e} rad/s  (γ_m/κ = {:.4e})", d.gamma_m, d.gamma_m / d.kappa);
    println!("thermal phonons     n̄    = {:.2}", d.nbar);
    println!("drive amplitude     η    = {:.4e} s^-1 at {} mW", d.eta, params.drive.power * 1e3);

    println!();
    println!("Bogoliubov mode vs mirror, ω_R = 0.1 ω_m:");
    for ratio in [0.0, 0.5, 1.0, 2.0] {
        let mut p = params;
        p.bec.s_wave = ratio * p.mirror.frequency;
        let d = derive_quantities(&p)?;
        println!(
            "  ω_sw = {ratio:>3} ω_m   ω_B = {:.4} ω_m   Δω = {:+.4} ω_m",
            d.omega_b / d.omega_m,
            d.frequency_gap / d.omega_m
        );
    }
    Ok(())
}
