//! Exhaustive scans for sets whose `d(h)` vector increases somewhere.
//!
//! A scan is cut into work units, one per `(a_2, a_3)` prefix. Workers
//! classify units independently; a single writer takes finished units back
//! in prefix order, appends their violation records to the output file and
//! then marks the unit done in the checkpoint. Interrupting a scan therefore
//! leaves the output consistent with the checkpoint up to the last write.

mod checkpoint;
pub mod record;
mod summary;

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;

use crate::analysis::{classify_a_with, compute_h0, GapAnalysis, Violation};
use crate::enumeration::{admissible_max, enumerate_bounded, PrefixBounds};
use crate::error::{Error, Result};
use crate::propagation::{classify_b_instrumented, PropagationStats};
use crate::set::{Level, StampSet};

use checkpoint::Checkpoint;
pub use summary::{Extreme, ScanSummary, Witness, MAX_WITNESSES};

/// A work unit: fixed `(a_2, a_3)`.
pub type Unit = (u64, u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    A,
    B,
    /// Run both and fail on any difference.
    Both,
}

impl Algorithm {
    /// B for small `h0` with many denominations, A otherwise. The two give
    /// identical results and run at similar speed.
    pub fn default_for(k: usize, h0: Level) -> Self {
        if h0 <= 4 && k >= 6 {
            Algorithm::B
        } else {
            Algorithm::A
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanJob {
    pub k: usize,
    pub h0: Level,
    pub a2: Option<RangeInclusive<u64>>,
    pub a3: Option<RangeInclusive<u64>>,
    pub algorithm: Algorithm,
    /// Violation records, one JSON object per line.
    pub output: Option<PathBuf>,
    pub checkpoint: Option<PathBuf>,
}

impl ScanJob {
    pub fn new(k: usize, h0: Level) -> Self {
        ScanJob {
            k,
            h0,
            a2: None,
            a3: None,
            algorithm: Algorithm::default_for(k, h0),
            output: None,
            checkpoint: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.k < 4 {
            return Err(Error::UnsupportedJob(format!(
                "k = {} is too small: with three denominations d(h) has at most one term",
                self.k
            )));
        }
        if self.h0 < 2 {
            return Err(Error::UnsupportedJob(format!("h0 = {} is too small", self.h0)));
        }
        if self.checkpoint.is_some() && self.output.is_none() {
            return Err(Error::UnsupportedJob(
                "a checkpoint needs an output file to go with it".into(),
            ));
        }
        Ok(())
    }

    fn checkpoint_header(&self) -> String {
        let range = |r: &Option<RangeInclusive<u64>>| match r {
            Some(r) => format!("{}..{}", r.start(), r.end()),
            None => "*".into(),
        };
        format!(
            "stamp-gaps checkpoint v1 k={} h0={} a2={} a3={}",
            self.k,
            self.h0,
            range(&self.a2),
            range(&self.a3)
        )
    }

    /// Every `(a_2, a_3)` prefix admitted by the job, ascending.
    pub fn units(&self) -> Vec<Unit> {
        let h0 = self.h0;
        let mut out = Vec::new();
        for a2 in 2..=admissible_max(&[1], h0) {
            if self.a2.as_ref().is_some_and(|r| !r.contains(&a2)) {
                continue;
            }
            for a3 in a2 + 1..=admissible_max(&[1, a2], h0) {
                if self.a3.as_ref().is_some_and(|r| !r.contains(&a3)) {
                    continue;
                }
                out.push((a2, a3));
            }
        }
        out
    }
}

/// Splits `job` into `workers` jobs over disjoint, contiguous `a_2` ranges.
/// Some may be empty when there are fewer `a_2` values than workers.
pub fn partition(job: &ScanJob, workers: usize) -> Vec<ScanJob> {
    assert!(workers >= 1);
    if workers == 1 {
        return vec![job.clone()];
    }
    let lo = job.a2.as_ref().map_or(2, |r| *r.start()).max(2);
    let hi = job
        .a2
        .as_ref()
        .map_or(u64::MAX, |r| *r.end())
        .min(admissible_max(&[1], job.h0));
    let count = if hi >= lo { hi - lo + 1 } else { 0 };
    let w = workers as u64;
    (0..w)
        .map(|i| {
            let start = lo + count * i / w;
            let end = lo + count * (i + 1) / w;
            let mut part = job.clone();
            part.a2 = Some(start..=end - 1);
            part
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; 0 means one.
    pub workers: usize,
    /// Continue from the checkpoint instead of starting over.
    pub resume: bool,
    /// Stop after this many newly completed units, as if interrupted.
    pub max_units: Option<usize>,
    /// Recompute `h0` and `n0` for every enumerated set.
    pub check_enumeration: bool,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    /// All violations in set order, including those recovered on resume.
    pub violations: Vec<Violation>,
    pub summary: ScanSummary,
    pub units_total: usize,
    pub units_done: usize,
    /// Units classified by this call, as opposed to recovered on resume.
    pub units_run: usize,
}

impl ScanReport {
    pub fn complete(&self) -> bool {
        self.units_done == self.units_total
    }
}

struct UnitResult {
    violations: Vec<Violation>,
    summary: ScanSummary,
}

/// Classifies `set` with the chosen algorithm.
pub fn classify(
    algorithm: Algorithm,
    set: &StampSet,
    h0: Level,
    n0: u64,
) -> Result<(GapAnalysis, Option<PropagationStats>)> {
    match algorithm {
        Algorithm::A => Ok((classify_a_with(set, h0, n0), None)),
        Algorithm::B => {
            let (b, stats) = classify_b_instrumented(set, h0, n0);
            Ok((b, Some(stats)))
        }
        Algorithm::Both => {
            let a = classify_a_with(set, h0, n0);
            let (b, stats) = classify_b_instrumented(set, h0, n0);
            if a != b {
                return Err(Error::Disagreement {
                    set: set.to_string(),
                    detail: describe_difference(&a, &b),
                });
            }
            Ok((a, Some(stats)))
        }
    }
}

/// Human-readable account of where two analyses of one set differ.
pub fn describe_difference(a: &GapAnalysis, b: &GapAnalysis) -> String {
    let mut parts = Vec::new();
    for (name, x, y) in [("h1", a.h1, b.h1), ("h2", a.h2, b.h2), ("H", a.horizon, b.horizon)] {
        if x != y {
            parts.push(format!("{name}: A={x} B={y}"));
        }
    }
    if a.delta() != b.delta() {
        parts.push(format!("delta: A={:?} B={:?}", a.delta(), b.delta()));
    }
    let diffs: Vec<String> = a
        .iter()
        .zip(b.iter())
        .filter(|(p, q)| p.1 != q.1)
        .take(5)
        .map(|(p, q)| format!("x={}: A={:?} B={:?}", p.0, p.1, q.1))
        .collect();
    parts.extend(diffs);
    if parts.is_empty() {
        "no difference".into()
    } else {
        parts.join("; ")
    }
}

fn scan_unit(job: &ScanJob, unit: Unit, check: bool) -> Result<UnitResult> {
    let bounds = PrefixBounds::exact(unit.0, unit.1);
    let mut violations = Vec::new();
    let mut summary = ScanSummary::default();
    let mut failure = None;
    enumerate_bounded(job.k, job.h0, &bounds, |a, n0| {
        if failure.is_some() {
            return;
        }
        let set = StampSet::new(a.to_vec()).expect("enumerated sets are valid");
        if check {
            let direct = compute_h0(&set);
            assert_eq!(direct, (job.h0, n0), "enumerator visited {set} with wrong h0/n0");
        }
        match classify(job.algorithm, &set, job.h0, n0) {
            Ok((analysis, stats)) => {
                let v = analysis.violation();
                summary.observe(&analysis, v.as_ref());
                if let Some(stats) = stats {
                    summary.add_propagation(stats);
                }
                violations.extend(v);
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(UnitResult {
            violations,
            summary,
        }),
    }
}

/// Runs `job`, writing records and checkpoints as units complete.
pub fn scan(job: &ScanJob, opts: &ScanOptions) -> Result<ScanReport> {
    job.validate()?;
    let units = job.units();
    let header = job.checkpoint_header();

    let mut checkpoint = match &job.checkpoint {
        Some(path) if opts.resume => {
            Checkpoint::load(path, &header)?.unwrap_or_else(|| Checkpoint::fresh(path, header.clone()))
        }
        Some(path) => Checkpoint::fresh(path, header.clone()),
        None => Checkpoint::fresh(&PathBuf::new(), header.clone()),
    };
    if let Some(bad) = checkpoint.done.keys().find(|u| !units.contains(u)) {
        return Err(Error::CorruptCheckpoint {
            path: job.checkpoint.clone().unwrap_or_default(),
            reason: format!("unit {bad:?} is not part of this job"),
        });
    }

    let mut violations = Vec::new();

    let mut out = match &job.output {
        Some(path) => {
            let kept = if opts.resume && !checkpoint.done.is_empty() {
                recover_output(path, &checkpoint)?
            } else {
                Vec::new()
            };
            let mut file = BufWriter::new(File::create(path)?);
            for v in &kept {
                record::write_record(&mut file, v)?;
            }
            file.flush()?;
            violations = kept;
            Some(file)
        }
        None => None,
    };
    if job.checkpoint.is_some() {
        checkpoint.save()?;
    }

    let pending: Vec<(usize, Unit)> = units
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, u)| !checkpoint.done.contains_key(u))
        .take(opts.max_units.unwrap_or(usize::MAX))
        .collect();

    let workers = opts.workers.max(1).min(pending.len().max(1));
    let next = AtomicUsize::new(0);
    let abort = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<(usize, Result<UnitResult>)>();

    let units_run = std::thread::scope(|s| -> Result<usize> {
        for _ in 0..workers {
            let tx = tx.clone();
            let (next, abort, pending) = (&next, &abort, &pending);
            s.spawn(move || loop {
                if abort.load(Ordering::Relaxed) {
                    break;
                }
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(_, unit)) = pending.get(i) else { break };
                let r = scan_unit(job, unit, opts.check_enumeration);
                if tx.send((i, r)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // Reorder finished units and commit them strictly in sequence.
        let mut parked: BTreeMap<usize, UnitResult> = BTreeMap::new();
        let mut committed = 0;
        for (i, r) in rx {
            let r = match r {
                Ok(r) => r,
                Err(e) => {
                    abort.store(true, Ordering::Relaxed);
                    return Err(e);
                }
            };
            parked.insert(i, r);
            while let Some(r) = parked.remove(&committed) {
                let unit = pending[committed].1;
                if let Some(file) = out.as_mut() {
                    for v in &r.violations {
                        record::write_record(&mut *file, v)?;
                    }
                    file.flush()?;
                    file.get_ref().sync_data()?;
                }
                if job.checkpoint.is_some() {
                    checkpoint.record(unit, r.summary.clone())?;
                } else {
                    checkpoint.done.insert(unit, r.summary.clone());
                }
                violations.extend(r.violations);
                committed += 1;
            }
        }
        Ok(committed)
    })?;

    // Merged in unit order so that witness lists are deterministic.
    let mut summary = ScanSummary::default();
    for s in checkpoint.done.values() {
        summary.merge(s);
    }

    Ok(ScanReport {
        violations,
        summary,
        units_total: units.len(),
        units_done: checkpoint.done.len(),
        units_run,
    })
}

/// Keeps the records of completed units from a previous run's output,
/// dropping anything written after the last checkpoint (including a torn
/// final line) and duplicate sets.
fn recover_output(path: &PathBuf, checkpoint: &Checkpoint) -> Result<Vec<Violation>> {
    let file = match OpenOptions::new().read(true).open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::CorruptCheckpoint {
                path: path.clone(),
                reason: "checkpoint lists completed units but the output file is missing".into(),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let mut seen = HashSet::new();
    let mut kept = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        let Ok(v) = record::parse_record(&line) else { continue };
        let unit = (v.set.a(2), v.set.a(3));
        if checkpoint.done.contains_key(&unit) && seen.insert(v.set.clone()) {
            kept.push(v);
        }
    }
    kept.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(kept)
}
