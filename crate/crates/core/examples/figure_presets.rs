//! Writes every preset dataset as CSV into a directory (default `figures/`).

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::time::Instant;

use optomech::sweep::{emit, figure_preset, run_sweep, Format, PRESET_IDS};

fn main() -> optomech::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    for id in PRESET_IDS {
        let start = Instant::now();
        let spec = figure_preset(id)?;
        let rows = run_sweep(&spec)?;
        let path = dir.join(format!("{id}.csv"));
        let bytes = emit(&spec, &rows, Format::Csv, BufWriter::new(File::create(&path)?))?;
        println!(
            "{id:<6} {:>5} rows {:>8} bytes  {:6.1} ms  -> {}",
            rows.len(),
            bytes,
            start.elapsed().as_secs_f64() * 1e3,
            path.display()
        );
    }
    Ok(())
}
