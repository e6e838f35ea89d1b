//! Deterministic data-file output: fixed float formatting, `#` header
//! comments carrying the config hash, stable row ordering. No timestamps.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};

/// Formats one value at the configured precision. `precision >= 17` selects
/// the shortest representation that round-trips to the same f64; smaller
/// values give scientific notation with that many significant digits.
pub fn fmt_float(v: f64, precision: u32) -> String {
    if precision >= 17 {
        format!("{v}")
    } else {
        format!("{:.*e}", precision.saturating_sub(1) as usize, v)
    }
}

/// Writes one CSV data file: `#` comment lines naming the subcommand and the
/// effective config hash, a column-header line, then the rows.
pub fn write_data_file(
    path: &Path,
    subcommand: &str,
    hash: &str,
    columns: &[String],
    rows: &[Vec<String>],
) -> Result<()> {
    let mut text = String::new();
    text.push_str(&format!("# flexbeam {subcommand}\n"));
    text.push_str(&format!("# config_hash = {hash}\n"));
    text.push_str(&columns.join(","));
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    let mut f =
        fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    f.write_all(text.as_bytes())
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Creates the output directory if needed.
pub fn ensure_dir(path: &Path) -> Result<()> {
    fs::create_dir_all(path).with_context(|| format!("creating directory {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_formatting_is_exact() {
        for &v in &[
            0.1,
            -3.044580672402226,
            1e-300,
            6.022e23,
            core::f64::consts::PI,
            -0.0,
        ] {
            let s = fmt_float(v, 17);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "value {v} via {s}");
        }
    }

    #[test]
    fn reduced_precision_is_scientific() {
        assert_eq!(fmt_float(1234.5678, 4), "1.235e3");
        assert_eq!(fmt_float(-0.00125, 2), "-1.3e-3");
    }
}
