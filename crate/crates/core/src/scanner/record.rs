//! Violation records: one JSON object per line.

use std::io::{BufRead, Write};

use crate::analysis::Violation;
use crate::error::{Error, Result};

pub fn write_record<W: Write>(mut out: W, v: &Violation) -> Result<()> {
    serde_json::to_writer(&mut out, v).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Reads every record; blank lines are skipped, anything else that does not
/// parse is an error.
pub fn read_records<R: BufRead>(input: R) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let v = parse_record(&line).map_err(|reason| Error::MalformedRecord {
            line: i + 1,
            reason,
        })?;
        out.push(v);
    }
    Ok(out)
}

pub fn parse_record(line: &str) -> std::result::Result<Violation, String> {
    let v: Violation = serde_json::from_str(line).map_err(|e| e.to_string())?;
    if v.k != v.set.k() {
        return Err(format!("k = {} but the set has {} elements", v.k, v.set.k()));
    }
    if v.h2 >= v.h0 && v.delta.len() != (v.h2 - v.h0 + 1) as usize {
        return Err(format!(
            "delta has {} entries, expected h2 - h0 + 1 = {}",
            v.delta.len(),
            v.h2 - v.h0 + 1
        ));
    }
    Ok(v)
}
