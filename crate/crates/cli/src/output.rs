use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;
use tempfile::NamedTempFile;

use crate::CliError;

/// Renders with 17 significant digits; round-trips every finite `f64`.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV with a header line, `,` separators and `\n` terminators.
pub fn csv_table(header: [&str; 4], rows: impl Iterator<Item = (f64, Complex64, f64)>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for (x, v, abs2) in rows {
        w.write_record([num(x), num(v.re), num(v.im), num(abs2)])?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

/// The same table as a JSON array of objects.
pub fn json_table(header: [&str; 4], rows: impl Iterator<Item = (f64, Complex64, f64)>) -> Result<Vec<u8>, CliError> {
    let rows: Vec<serde_json::Value> = rows
        .map(|(x, v, abs2)| {
            let mut m = serde_json::Map::new();
            for (k, val) in header.iter().zip([x, v.re, v.im, abs2]) {
                m.insert((*k).to_owned(), val.into());
            }
            serde_json::Value::Object(m)
        })
        .collect();
    json(&rows)
}

/// Pretty JSON with object keys sorted at every level.
pub fn json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    // serde_json's default map is ordered by key, so a round trip through
    // `Value` sorts struct fields too.
    let v = serde_json::to_value(value)?;
    let mut out = serde_json::to_vec_pretty(&v)?;
    out.push(b'\n');
    Ok(out)
}

/// Writes to `path` through a sibling temporary file and an atomic rename,
/// or to stdout when no path is given.
pub fn emit(bytes: &[u8], path: Option<&Path>) -> Result<(), CliError> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = NamedTempFile::new_in(dir)?;
            tmp.write_all(bytes)?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
        }
    }
    Ok(())
}
