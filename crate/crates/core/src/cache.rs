//! On-disk cache for prime coefficient tables, so expensive a_p runs happen
//! once per (descriptor, cutoff).
//!
//! Record layout, little-endian throughout:
//!
//! ```text
//! magic   4 bytes  "SVC1"
//! name    u32 length + UTF-8 bytes
//! cutoff  u64
//! quad    u8 (1 if good primes carry quadratic local factors)
//! count   u64
//! records count * (prime u64, value f64, flag u8)
//! ```

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::coeffs::{PrimeCoefficient, PrimeCoefficientTable};
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"SVC1";

pub fn write_prime_table(path: &Path, table: &PrimeCoefficientTable) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    let name = table.desc_name.as_bytes();
    w.write_all(&(name.len() as u32).to_le_bytes())?;
    w.write_all(name)?;
    w.write_all(&table.cutoff.to_le_bytes())?;
    w.write_all(&[table.quadratic as u8])?;
    w.write_all(&(table.entries.len() as u64).to_le_bytes())?;
    for e in &table.entries {
        w.write_all(&e.p.to_le_bytes())?;
        w.write_all(&e.a.to_le_bytes())?;
        w.write_all(&[e.bad as u8])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_prime_table(path: &Path) -> Result<PrimeCoefficientTable> {
    let bad = |msg: &str| Error::Cache {
        path: path.into(),
        msg: msg.into(),
    };
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)
        .map_err(|_| bad("truncated header"))?;
    if &magic != MAGIC {
        return Err(bad("wrong magic"));
    }
    let mut b4 = [0u8; 4];
    r.read_exact(&mut b4)
        .map_err(|_| bad("truncated name length"))?;
    let name_len = u32::from_le_bytes(b4) as usize;
    if name_len > 4096 {
        return Err(bad("implausible name length"));
    }
    let mut name = vec![0u8; name_len];
    r.read_exact(&mut name).map_err(|_| bad("truncated name"))?;
    let name = String::from_utf8(name).map_err(|_| bad("name not UTF-8"))?;
    let mut b8 = [0u8; 8];
    r.read_exact(&mut b8).map_err(|_| bad("truncated cutoff"))?;
    let cutoff = u64::from_le_bytes(b8);
    let mut b1 = [0u8; 1];
    r.read_exact(&mut b1).map_err(|_| bad("truncated flags"))?;
    let quadratic = b1[0] != 0;
    r.read_exact(&mut b8).map_err(|_| bad("truncated count"))?;
    let count = u64::from_le_bytes(b8) as usize;
    let mut entries = Vec::with_capacity(count.min(1 << 24));
    let mut prev = 0u64;
    for i in 0..count {
        r.read_exact(&mut b8)
            .map_err(|_| bad(&format!("truncated record {i}")))?;
        let p = u64::from_le_bytes(b8);
        r.read_exact(&mut b8)
            .map_err(|_| bad(&format!("truncated record {i}")))?;
        let a = f64::from_le_bytes(b8);
        r.read_exact(&mut b1)
            .map_err(|_| bad(&format!("truncated record {i}")))?;
        if p <= prev {
            return Err(bad(&format!("primes not ascending at record {i}")));
        }
        prev = p;
        entries.push(PrimeCoefficient {
            p,
            a,
            bad: b1[0] != 0,
        });
    }
    Ok(PrimeCoefficientTable {
        desc_name: name,
        cutoff,
        quadratic,
        entries,
    })
}

fn cache_file(dir: &Path, name: &str, cutoff: u64) -> PathBuf {
    dir.join(format!("{name}_p{cutoff}.svcf"))
}

/// Load a cached table covering `cutoff`, or build one with `build` and
/// persist it. Any cached file for the same descriptor with a cutoff >= the
/// requested one is accepted and truncated in memory.
pub fn load_or_build<F>(
    dir: &Path,
    name: &str,
    cutoff: u64,
    build: F,
) -> Result<PrimeCoefficientTable>
where
    F: FnOnce() -> Result<PrimeCoefficientTable>,
{
    let exact = cache_file(dir, name, cutoff);
    let mut candidate: Option<(u64, PathBuf)> = if exact.exists() {
        Some((cutoff, exact.clone()))
    } else {
        None
    };
    if candidate.is_none() && dir.is_dir() {
        let prefix = format!("{name}_p");
        for entry in std::fs::read_dir(dir)? {
            let entry = entry?;
            let fname = entry.file_name().to_string_lossy().into_owned();
            if let Some(rest) = fname
                .strip_prefix(&prefix)
                .and_then(|r| r.strip_suffix(".svcf"))
            {
                if let Ok(c) = rest.parse::<u64>() {
                    if c >= cutoff && candidate.as_ref().map_or(true, |(best, _)| c < *best) {
                        candidate = Some((c, entry.path()));
                    }
                }
            }
        }
    }
    if let Some((_, path)) = candidate {
        let mut t = read_prime_table(&path)?;
        t.entries.retain(|e| e.p <= cutoff);
        t.cutoff = cutoff;
        return Ok(t);
    }
    let t = build()?;
    write_prime_table(&cache_file(dir, name, t.cutoff), &t)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::prime_coefficients;
    use crate::registry::LFunctionDescriptor;

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let t = prime_coefficients(&LFunctionDescriptor::curve_37a(), 500).unwrap();
        let path = dir.path().join("ec37_p500.svcf");
        write_prime_table(&path, &t).unwrap();
        let back = read_prime_table(&path).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn wider_cache_is_reused_and_truncated() {
        let dir = tempfile::tempdir().unwrap();
        let mut built = 0;
        let t = load_or_build(dir.path(), "ec37", 500, || {
            built += 1;
            prime_coefficients(&LFunctionDescriptor::curve_37a(), 500)
        })
        .unwrap();
        assert_eq!(built, 1);
        assert_eq!(t.cutoff, 500);
        // narrower request must reuse the wider file
        let t2 = load_or_build(dir.path(), "ec37", 100, || {
            panic!("should not rebuild");
        })
        .unwrap();
        assert_eq!(t2.cutoff, 100);
        assert!(t2.entries.iter().all(|e| e.p <= 100));
        assert_eq!(t2.entries.len(), 25);
    }

    #[test]
    fn rejects_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.svcf");
        std::fs::write(&path, b"not a cache").unwrap();
        assert!(matches!(read_prime_table(&path), Err(Error::Cache { .. })));
    }

    #[test]
    fn external_descriptor_reads_cache() {
        let dir = tempfile::tempdir().unwrap();
        let t = prime_coefficients(&LFunctionDescriptor::ramanujan_delta(), 300).unwrap();
        let path = dir.path().join("ext.svcf");
        write_prime_table(&path, &t).unwrap();
        let ext = LFunctionDescriptor::external("ext", path, 2.0, 1.0, 0).unwrap();
        let loaded = prime_coefficients(&ext, 200).unwrap();
        assert_eq!(loaded.cutoff, 200);
        assert!(loaded.quadratic);
        assert_eq!(loaded.get(199).unwrap().a, t.get(199).unwrap().a);
        // asking beyond the file's cutoff fails
        assert!(prime_coefficients(&ext, 1000).is_err());
    }
}
