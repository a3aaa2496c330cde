//! Bistability windows at δ_c = 4κ, with and without the condensate.

use optomech::model::{derive_quantities, SystemParams};
use optomech::steady_state::bistability_window;

fn main() -> optomech::Result<()> {
    let reference = SystemParams::reference();
    let kappa = derive_quantities(&reference)?.kappa;

    let mut cases = vec![("no condensate".to_string(), reference.without_bec())];
    for ratio in [0.0, 0.5, 1.0] {
        let mut p = reference;
        p.bec.s_wave = ratio * p.mirror.frequency;
        cases.push((format!("ω_sw = {ratio} ω_m"), p));
    }

    for delta_c in [3.0, 4.0] {
        println!("δ_c = {delta_c} κ");
        for (name, p) in &cases {
            match bistability_window(p, delta_c * kappa)? {
                Some(w) => println!(
                    "  {name:<16} {:8.2} .. {:8.2} mW",
                    w.p_low * 1e3,
                    w.p_high * 1e3
                ),
                None => println!("  {name:<16} not bistable"),
            }
        }
    }
    Ok(())
}
