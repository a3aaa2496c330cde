//! Effective condensate couplings from atom number, light shift and
//! collisions.

use optomech::model::{derive_quantities, effective_from_microscopic, MicroscopicBecParams, SystemParams};

fn main() -> optomech::Result<()> {
    let mut params = SystemParams::reference();
    let two_pi = 2.0 * std::f64::consts::PI;

    for atoms in [1e4, 1e5, 1e6] {
        let micro = MicroscopicBecParams {
            atom_number: atoms,
            rabi: two_pi * 1e5,
            atomic_detuning: two_pi * 3e10,
            scattering_length: 5.3e-9,
            atom_mass: 1.443e-25,
            waist: 25e-6,
            bare_detuning: two_pi * 2e7,
        };
        let (zeta, omega_sw, delta_c) = effective_from_microscopic(&micro, &params.cavity)?;
        params.bec.coupling = zeta;
        params.bec.s_wave = omega_sw;
        params.cavity.detuning = delta_c;
        let d = derive_quantities(&params)?;
        println!(
            "N = {atoms:.0e}: ζ = {zeta:+.3e} rad/s, ω_sw = {:.3e} ω_m, δ_c = {:.3} κ, β = {:.3e}",
            omega_sw / d.omega_m,
            delta_c / d.kappa,
            d.beta
        );
    }
    Ok(())
}
