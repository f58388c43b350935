//! Plain-text checkpoint: a header naming the job, then one line per
//! completed work unit carrying that unit's summary.
//!
//! ```text
//! stamp-gaps checkpoint v1 k=9 h0=3 a2=* a3=*
//! unit 2 3 {"sets":1204,...}
//! ```
//!
//! The file is always replaced whole through a rename, so a reader sees
//! either the old or the new list.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::summary::ScanSummary;
use super::Unit;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct Checkpoint {
    path: PathBuf,
    header: String,
    pub done: BTreeMap<Unit, ScanSummary>,
}

impl Checkpoint {
    pub fn fresh(path: &Path, header: String) -> Self {
        Checkpoint {
            path: path.to_owned(),
            header,
            done: BTreeMap::new(),
        }
    }

    /// Loads an existing checkpoint, or `None` if there is no file.
    pub fn load(path: &Path, header: &str) -> Result<Option<Self>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| Error::CorruptCheckpoint {
            path: path.to_owned(),
            reason,
        };
        let mut lines = text.lines();
        match lines.next() {
            Some(h) if h == header => {}
            Some(h) => {
                return Err(corrupt(format!(
                    "header {h:?} does not match this job ({header:?})"
                )))
            }
            None => return Err(corrupt("empty file".into())),
        }
        let mut done = BTreeMap::new();
        for (i, line) in lines.enumerate() {
            let bad = |what: &str| corrupt(format!("line {}: {what}", i + 2));
            let mut parts = line.splitn(4, ' ');
            if parts.next() != Some("unit") {
                return Err(bad("expected `unit`"));
            }
            let mut num = || -> Result<u64> {
                parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("bad prefix value"))
            };
            let unit = (num()?, num()?);
            let summary: ScanSummary = parts
                .next()
                .and_then(|t| serde_json::from_str(t).ok())
                .ok_or_else(|| bad("bad summary"))?;
            if done.insert(unit, summary).is_some() {
                return Err(bad("duplicate unit"));
            }
        }
        Ok(Some(Checkpoint {
            path: path.to_owned(),
            header: header.to_owned(),
            done,
        }))
    }

    pub fn record(&mut self, unit: Unit, summary: ScanSummary) -> Result<()> {
        self.done.insert(unit, summary);
        self.save()
    }

    pub fn save(&self) -> Result<()> {
        let mut body = String::new();
        body.push_str(&self.header);
        body.push('\n');
        for (unit, summary) in &self.done {
            let json = serde_json::to_string(summary).map_err(std::io::Error::from)?;
            body.push_str(&format!("unit {} {} {json}\n", unit.0, unit.1));
        }
        let tmp = self.path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}
