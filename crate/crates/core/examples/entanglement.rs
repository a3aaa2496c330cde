//! Logarithmic negativity of the three bipartitions along the detuning.

use optomech::gaussian_measures::{entanglement, Bipartition};
use optomech::linear_dynamics::{classify, covariance, Stability};
use optomech::model::{derive_quantities, SystemParams};
use optomech::steady_state::MeanFieldBranch;

fn main() -> optomech::Result<()> {
    let mut params = SystemParams::reference();
    params.bec.s_wave = 2.0 * params.mirror.frequency;
    let d = derive_quantities(&params)?;
    println!("ω_B = {:.3} ω_m", d.omega_b / d.omega_m);

    print!("{:>8}", "Δ/ω_m");
    for bp in Bipartition::ALL {
        print!(" {:>13}", bp.as_str());
    }
    println!();
    for i in 1..=15 {
        let delta = 0.2 * i as f64 * d.omega_m;
        let mut b = MeanFieldBranch::at_effective_detuning(&d, delta);
        print!("{:8.2}", delta / d.omega_m);
        if classify(&mut b, &d)? != Stability::Stable {
            println!(" unstable");
            continue;
        }
        let v = covariance(&b, &d, false)?;
        for bp in Bipartition::ALL {
            print!(" {:13.5}", entanglement(&v, bp)?.log_negativity);
        }
        println!();
    }
    Ok(())
}
