//! Parses an inline JSON configuration in normalized units and prints the
//! resulting sweep as JSON.

use optomech::sweep::{emit, parse_config, run_sweep, Format};

const CONFIG: &str = r#"{
    "units": "normalized",
    "cavity": { "detuning": 4.0 },
    "bec": { "s_wave": 0.5 },
    "sweep": {
        "variable": "power",
        "lo": 0.10,
        "hi": 0.14,
        "points": 3,
        "mode": "mean_field",
        "bec": "both"
    }
}"#;

fn main() -> optomech::Result<()> {
    let cfg = parse_config(CONFIG)?;
    let spec = cfg.require_sweep()?;
    let rows = run_sweep(spec)?;
    emit(spec, &rows, Format::Json, std::io::stdout().lock())?;
    Ok(())
}
