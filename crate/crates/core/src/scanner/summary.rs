use serde::{Deserialize, Serialize};

use crate::analysis::{GapAnalysis, Violation};
use crate::propagation::PropagationStats;
use crate::set::{Level, StampSet};

/// Witness lists keep at most this many sets per extreme.
pub const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: StampSet,
    pub h1: Level,
    pub h2: Level,
}

/// Largest value of some statistic and the first sets attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extreme {
    pub value: Level,
    /// Number of sets attaining `value`, which may exceed `witnesses.len()`.
    pub count: u64,
    pub witnesses: Vec<Witness>,
}

impl Extreme {
    fn offer(slot: &mut Option<Extreme>, value: Level, witness: impl FnOnce() -> Witness) {
        match slot {
            Some(e) if value < e.value => {}
            Some(e) if value == e.value => {
                e.count += 1;
                if e.witnesses.len() < MAX_WITNESSES {
                    e.witnesses.push(witness());
                }
            }
            _ => {
                *slot = Some(Extreme {
                    value,
                    count: 1,
                    witnesses: vec![witness()],
                })
            }
        }
    }

    fn merge(slot: &mut Option<Extreme>, other: &Option<Extreme>) {
        let Some(other) = other else { return };
        match slot {
            Some(e) if other.value < e.value => {}
            Some(e) if other.value == e.value => {
                e.count += other.count;
                let room = MAX_WITNESSES.saturating_sub(e.witnesses.len());
                e.witnesses.extend(other.witnesses.iter().take(room).cloned());
            }
            _ => *slot = Some(other.clone()),
        }
    }
}

/// Aggregate statistics over every set a scan examined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub sets: u64,
    pub violations: u64,
    pub max_h2: Option<Extreme>,
    /// Largest `h2 - h1`.
    pub max_spread: Option<Extreme>,
    /// Violations with more than one rise index.
    pub multi_rise: u64,
    /// Violations where some `d(h) - d(h-1)` exceeds one.
    pub steep_rise: u64,
    /// Violations with `h1 != h2`.
    pub split_h1_h2: u64,
    /// Propagation counters, when algorithm B ran.
    pub fills: u64,
    pub improvements: u64,
}

impl ScanSummary {
    pub fn observe(&mut self, analysis: &GapAnalysis, violation: Option<&Violation>) {
        self.sets += 1;
        let witness = || Witness {
            set: analysis.set.clone(),
            h1: analysis.h1,
            h2: analysis.h2,
        };
        Extreme::offer(&mut self.max_h2, analysis.h2, witness);
        Extreme::offer(&mut self.max_spread, analysis.h2 - analysis.h1, witness);
        if let Some(v) = violation {
            self.violations += 1;
            if v.rises.len() > 1 {
                self.multi_rise += 1;
            }
            if v.max_rise() > 1 {
                self.steep_rise += 1;
            }
            if v.h1 != v.h2 {
                self.split_h1_h2 += 1;
            }
        }
    }

    pub fn add_propagation(&mut self, stats: PropagationStats) {
        self.fills += stats.fills;
        self.improvements += stats.improvements;
    }

    /// Folds in the summary of a later part of the same search.
    pub fn merge(&mut self, other: &ScanSummary) {
        self.sets += other.sets;
        self.violations += other.violations;
        Extreme::merge(&mut self.max_h2, &other.max_h2);
        Extreme::merge(&mut self.max_spread, &other.max_spread);
        self.multi_rise += other.multi_rise;
        self.steep_rise += other.steep_rise;
        self.split_h1_h2 += other.split_h1_h2;
        self.fills += other.fills;
        self.improvements += other.improvements;
    }

    /// Summary over violation records alone (no access to the other sets).
    pub fn from_violations<'a>(records: impl IntoIterator<Item = &'a Violation>) -> Self {
        let mut s = ScanSummary::default();
        for v in records {
            s.sets += 1;
            let witness = || Witness {
                set: v.set.clone(),
                h1: v.h1,
                h2: v.h2,
            };
            Extreme::offer(&mut s.max_h2, v.h2, witness);
            Extreme::offer(&mut s.max_spread, v.h2 - v.h1, witness);
            s.violations += 1;
            s.multi_rise += u64::from(v.rises.len() > 1);
            s.steep_rise += u64::from(v.max_rise() > 1);
            s.split_h1_h2 += u64::from(v.h1 != v.h2);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::classify_a;

    fn analyse(v: &[u64]) -> GapAnalysis {
        classify_a(&StampSet::new(v.to_vec()).unwrap())
    }

    #[test]
    fn extremes_track_ties_in_order() {
        let mut s = ScanSummary::default();
        for set in [[1, 7, 39, 44], [1, 6, 41, 42], [1, 4, 26, 35]] {
            let a = analyse(&set);
            s.observe(&a, a.violation().as_ref());
        }
        let h2 = s.max_h2.as_ref().unwrap();
        assert_eq!(h2.value, 35);
        assert_eq!(h2.witnesses[0].set.as_slice(), &[1, 6, 41, 42]);
        let spread = s.max_spread.as_ref().unwrap();
        assert_eq!(spread.value, 4);
        assert_eq!(spread.witnesses[0].set.as_slice(), &[1, 7, 39, 44]);
        assert_eq!((s.sets, s.violations), (3, 0));
    }

    #[test]
    fn merge_is_concatenation() {
        let sets: Vec<GapAnalysis> = [
            vec![1, 4, 26, 35],
            vec![1, 5, 18, 19],
            vec![1, 3, 4, 9, 12, 13, 19, 44, 47, 62],
            vec![1, 6, 41, 42],
        ]
        .iter()
        .map(|v| analyse(v))
        .collect();
        let mut whole = ScanSummary::default();
        for a in &sets {
            whole.observe(a, a.violation().as_ref());
        }
        let mut left = ScanSummary::default();
        let mut right = ScanSummary::default();
        for a in &sets[..2] {
            left.observe(a, a.violation().as_ref());
        }
        for a in &sets[2..] {
            right.observe(a, a.violation().as_ref());
        }
        left.merge(&right);
        assert_eq!(left, whole);
        assert_eq!(whole.violations, 1);
    }
}
