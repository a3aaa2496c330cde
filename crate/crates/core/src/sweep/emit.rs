use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::model::{derive_quantities, DerivedQuantities};

use super::{SweepMode, SweepRow, SweepSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

const MEAN_FIELD_COLUMNS: [&str; 11] = [
    "series",
    "bec",
    "x",
    "x_scaled",
    "branch",
    "label",
    "degenerate",
    "n",
    "Delta",
    "delta_c",
    "stability",
];

const MEASURE_COLUMNS: [&str; 5] = ["dn_m", "dn_c", "en_mf", "en_af", "en_ma"];

/// 12 significant digits.
fn num(x: f64) -> String {
    format!("{x:.11e}")
}

/// Writes one CSV line per row. Measure columns appear only for full-mode
/// sweeps and are left empty at points that are not stable.
pub fn emit_csv<W: Write>(rows: &[SweepRow], mode: SweepMode, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let full = mode == SweepMode::Full;
    let mut header: Vec<&str> = MEAN_FIELD_COLUMNS.to_vec();
    if full {
        header.extend(MEASURE_COLUMNS);
    }
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.series.clone(),
            if r.bec { "present" } else { "absent" }.to_string(),
            num(r.x),
            num(r.x_scaled),
            r.branch.to_string(),
            r.label.as_str().to_string(),
            r.degenerate.to_string(),
            num(r.n),
            num(r.detuning),
            num(r.delta_c),
            r.stability.as_str().to_string(),
        ];
        if full {
            match &r.measures {
                Some(m) => rec.extend(
                    [
                        m.mirror_phonons,
                        m.bogoliubov_excitations,
                        m.en_mirror_field,
                        m.en_atom_field,
                        m.en_mirror_atom,
                    ]
                    .map(num),
                ),
                None => rec.extend(std::iter::repeat_n(String::new(), MEASURE_COLUMNS.len())),
            }
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesQuantities {
    pub series: String,
    pub bec: bool,
    pub derived: DerivedQuantities,
}

/// JSON report of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct Report<'a> {
    pub spec: &'a SweepSpec,
    /// Derived quantities of each configuration at its base parameters.
    pub derived_quantities: Vec<SeriesQuantities>,
    pub rows: &'a [SweepRow],
}

pub fn report<'a>(spec: &'a SweepSpec, rows: &'a [SweepRow]) -> Result<Report<'a>> {
    let derived_quantities = spec
        .configurations()
        .into_iter()
        .map(|(p, label, bec)| {
            Ok(SeriesQuantities {
                series: label.to_string(),
                bec,
                derived: derive_quantities(&p)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Report {
        spec,
        derived_quantities,
        rows,
    })
}

pub fn emit_json<W: Write>(spec: &SweepSpec, rows: &[SweepRow], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, &report(spec, rows)?)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

/// Emits `rows` in `format` and returns the number of bytes written.
pub fn emit<W: Write>(spec: &SweepSpec, rows: &[SweepRow], format: Format, out: W) -> Result<usize> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => emit_csv(rows, spec.mode, &mut buf)?,
        Format::Json => emit_json(spec, rows, &mut buf)?,
    }
    let mut out = out;
    out.write_all(&buf)?;
    out.flush()?;
    Ok(buf.len())
}
