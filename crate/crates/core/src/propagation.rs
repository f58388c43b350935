//! Gap classification by a level-`h0` scan plus backward propagation
//! (algorithm B).
//!
//! If `x` is an h-gap whose representation uses `a_i`, then
//! `x + (a_k - a_i)` is an (h-1)-gap. Running that relation backwards from
//! every h0-gap reaches every m-gap, and the order recorded for a value can
//! only ever decrease towards its true order.

use crate::analysis::{compute_h0, compute_horizon, window, GapAnalysis, GapClass};
use crate::represent::{can, max_ck_weight};
use crate::set::{Level, StampSet};

/// Counters describing how much work propagation did for one set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PropagationStats {
    /// Cells written by propagation.
    pub fills: u64,
    /// Writes that lowered an already-finite bound.
    pub improvements: u64,
}

impl std::ops::AddAssign for PropagationStats {
    fn add_assign(&mut self, rhs: Self) {
        self.fills += rhs.fills;
        self.improvements += rhs.improvements;
    }
}

/// Classifies every window value of `set` by algorithm B.
pub fn classify_b(set: &StampSet) -> GapAnalysis {
    let (h0, n0) = compute_h0(set);
    classify_b_with(set, h0, n0)
}

/// Algorithm B with `h0` and `n0` already known.
pub fn classify_b_with(set: &StampSet, h0: Level, n0: u64) -> GapAnalysis {
    classify_b_instrumented(set, h0, n0).0
}

pub fn classify_b_instrumented(
    set: &StampSet,
    h0: Level,
    n0: u64,
) -> (GapAnalysis, PropagationStats) {
    run(set, h0, n0, false)
}

/// Like [`classify_b`], but checks after every write that the recorded bound
/// `v` really is an upper bound: `x_v` has a `v`-representation. Panics if
/// not. Slow; meant for tests.
pub fn classify_b_audited(set: &StampSet) -> GapAnalysis {
    let (h0, n0) = compute_h0(set);
    run(set, h0, n0, true).0
}

fn run(set: &StampSet, h0: Level, n0: u64, audit: bool) -> (GapAnalysis, PropagationStats) {
    let horizon = compute_horizon(set, h0, n0);
    let range = window(set, h0, n0);
    let mut gaps = Gaps {
        set,
        h0,
        n0,
        start: range.start,
        prefilled: h0.saturating_sub(1),
        unknown: horizon + 1,
        cells: vec![horizon + 1; (range.end - range.start) as usize],
        stats: PropagationStats::default(),
        audit,
    };
    gaps.scan();
    let classes = gaps
        .cells
        .iter()
        .map(|&v| {
            if v == gaps.prefilled {
                GapClass::PreFilled
            } else if v == gaps.unknown {
                GapClass::Permanent
            } else {
                GapClass::MGap(v)
            }
        })
        .collect();
    let stats = gaps.stats;
    (
        GapAnalysis::from_classes(set.clone(), h0, n0, horizon, classes),
        stats,
    )
}

/// Per-value bounds on gap order over the window.
struct Gaps<'a> {
    set: &'a StampSet,
    h0: Level,
    n0: u64,
    start: u64,
    /// `h0 - 1`: representable before level `h0`.
    prefilled: Level,
    /// Larger than any possible gap order.
    unknown: Level,
    cells: Vec<Level>,
    stats: PropagationStats,
    audit: bool,
}

impl Gaps<'_> {
    fn scan(&mut self) {
        let a = self.set.as_slice();
        let top = self.set.top();
        let len = self.cells.len();
        let mut idx = 0;
        while idx < len {
            if self.cells[idx] == self.prefilled {
                idx += 1;
                continue;
            }
            let x = self.start + idx as u64;
            match max_ck_weight(a, x + top, self.h0) {
                None => {}
                Some((ck, weight)) if ck > 0 => {
                    // Spare stamps can be spent on 1s.
                    let spare = (self.h0 - weight) as usize;
                    let last = (idx + spare).min(len - 1);
                    self.cells[idx..=last].fill(self.prefilled);
                }
                Some(_) => {
                    self.cells[idx] = self.h0;
                    self.propagate(x, self.h0);
                }
            }
            idx += 1;
        }
    }

    /// `x` is known to be an h-gap for some `h <= hx`.
    fn propagate(&mut self, x: u64, hx: Level) {
        let a = self.set.as_slice();
        let k = a.len();
        let top = a[k - 1];
        let next = hx + 1;
        for &ai in a[..k - 1].iter().rev() {
            let shift = top - ai;
            if x <= self.n0 + shift {
                return;
            }
            let y = x - shift;
            let idx = (y - self.start) as usize;
            let cell = self.cells[idx];
            if cell > next {
                self.stats.fills += 1;
                if cell != self.unknown {
                    self.stats.improvements += 1;
                }
                self.cells[idx] = next;
                if self.audit {
                    let yh = y + u64::from(next + 1 - self.h0) * top;
                    assert!(
                        can(a, yh, next),
                        "bound {next} for {y} in {} is not realised",
                        self.set
                    );
                }
                self.propagate(y, next);
            }
        }
    }
}
