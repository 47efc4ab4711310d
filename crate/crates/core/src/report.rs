//! CSV emission helpers. All floating-point fields are written in scientific
//! notation with 17 significant digits so that runs diff cleanly and
//! round-trip through f64 exactly.

use std::io::Write;
use std::path::Path;

use crate::error::Result;

/// 17-significant-digit scientific form, e.g. `4.5849072368354944e0`.
pub fn fmt_sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// Render a CSV body: header row plus one line per row.
pub fn csv_body(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(csv_body(header, rows).as_bytes())?;
    Ok(())
}
