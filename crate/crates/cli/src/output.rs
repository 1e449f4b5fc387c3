//! JSON/CSV helpers and atomic file output.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use riderlab_core::exact::rat;
use riderlab_core::{Config, Point, Rat};
use serde_json::{json, Value};

pub fn rat_str(r: &Rat) -> String {
    rat::to_string(r)
}

pub fn point_json(p: &Point) -> Value {
    json!([rat_str(&p.x), rat_str(&p.y)])
}

pub fn config_json(cfg: &Config) -> Value {
    Value::Array(cfg.points.iter().map(point_json).collect())
}

/// Integral points as plain integer pairs.
pub fn integral_json(cfg: &Config) -> Value {
    Value::Array(
        cfg.points
            .iter()
            .map(|p| json!([p.x.to_integer().to_string(), p.y.to_integer().to_string()]))
            .collect(),
    )
}

/// A number when it fits in 64 bits, otherwise a decimal string.
pub fn int_json(v: &BigInt) -> Value {
    match v.to_u64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

/// Writes `contents` to `path` through a temporary sibling and a rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

/// Minimal CSV quoting.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}
