//! Mirror phonons and Bogoliubov excitations against the effective
//! detuning, with and without the condensate.

use optomech::model::{derive_quantities, SystemParams};
use optomech::sweep::{run_sweep, BecSelection, Series, SweepMode, SweepSpec, SweepVariable};

fn main() -> optomech::Result<()> {
    let mut params = SystemParams::reference();
    params.bec.s_wave = 2.0 * params.mirror.frequency;
    let d = derive_quantities(&params)?;

    let spec = SweepSpec {
        variable: SweepVariable::DeltaEffective,
        lo: 0.25 * d.omega_m,
        hi: 3.0 * d.omega_m,
        points: 12,
        mode: SweepMode::Full,
        bec: BecSelection::Both,
        params,
        series: vec![Series::named("sw=2")],
    };
    let rows = run_sweep(&spec)?;

    println!("{:>8} {:>8} {:>12} {:>12}", "Δ/ω_m", "BEC", "δn_m", "δn_c");
    for r in &rows {
        match r.measures {
            Some(m) => println!(
                "{:8.3} {:>8} {:12.4} {:12.4e}",
                r.x_scaled,
                if r.bec { "yes" } else { "no" },
                m.mirror_phonons,
                m.bogoliubov_excitations
            ),
            None => println!("{:8.3} {:>8} {:>12}", r.x_scaled, r.bec, r.stability.as_str()),
        }
    }
    Ok(())
}
