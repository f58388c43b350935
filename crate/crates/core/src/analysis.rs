//! Gap classification by working down from a horizon level (algorithm A).
//!
//! Every value `x` in the window `n0 < x < (h0-1)·a_k` is shifted up to
//! level `H >= h2` as `x_H = x + (H - (h0-1))·a_k`. If `x_H` has no
//! `H`-representation, `x` is a permanent gap; otherwise the representation
//! with the most top stamps determines the level `m = H - c_k` at which `x`
//! is first filled.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::represent::{can, h_range, max_top_count, min_weights};
use crate::set::{Level, StampSet};

/// Fate of one window value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GapClass {
    /// Already representable at level `h0 - 1`.
    PreFilled,
    /// First representable (after shifting) at level `m > h0 - 1`.
    MGap(Level),
    /// Never representable at any level.
    Permanent,
}

/// Complete gap structure of one stamp set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapAnalysis {
    pub set: StampSet,
    pub h0: Level,
    /// `n(h0 - 1)`.
    pub n0: u64,
    pub h1: Level,
    pub h2: Level,
    /// Level at which the classification is final; at least `h0` and `h2`.
    pub horizon: Level,
    classes: Vec<GapClass>,
    delta: Vec<u32>,
}

impl GapAnalysis {
    /// Assembles an analysis from per-value classes over the window,
    /// deriving `h1`, `h2` and `d(h)`.
    pub fn from_classes(
        set: StampSet,
        h0: Level,
        n0: u64,
        horizon: Level,
        classes: Vec<GapClass>,
    ) -> Self {
        debug_assert_eq!(classes.len() as u64, window_len(&set, h0, n0));
        let (h1, h2) = derive_h1_h2(&classes, h0);
        let mut delta = Vec::with_capacity(64);
        for class in &classes {
            if let GapClass::MGap(m) = *class {
                let idx = (m - h0) as usize;
                if idx >= delta.len() {
                    delta.resize(idx + 1, 0);
                }
                delta[idx] += 1;
            }
        }
        GapAnalysis {
            set,
            h0,
            n0,
            h1,
            h2,
            horizon,
            classes,
            delta,
        }
    }

    /// The open window `n0 < x < (h0-1)·a_k` as a half-open range.
    pub fn window(&self) -> Range<u64> {
        window(&self.set, self.h0, self.n0)
    }

    /// Class of `x`, or `None` outside the window.
    pub fn class(&self, x: u64) -> Option<GapClass> {
        let w = self.window();
        w.contains(&x)
            .then(|| self.classes[(x - w.start) as usize])
    }

    /// Classes in window order.
    pub fn classes(&self) -> &[GapClass] {
        &self.classes
    }

    /// `(x, class)` pairs in ascending `x`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, GapClass)> + '_ {
        let start = self.window().start;
        self.classes
            .iter()
            .enumerate()
            .map(move |(i, &c)| (start + i as u64, c))
    }

    /// `(x, m)` for every m-gap, ascending in `x`.
    pub fn m_gaps(&self) -> impl Iterator<Item = (u64, Level)> + '_ {
        self.iter().filter_map(|(x, c)| match c {
            GapClass::MGap(m) => Some((x, m)),
            _ => None,
        })
    }

    /// `d(h)` for `h0 <= h <= h2`, first entry is `d(h0)`.
    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    /// `d(h)`, zero outside `h0..=h2`.
    pub fn d(&self, h: Level) -> u32 {
        if h < self.h0 {
            return 0;
        }
        self.delta.get((h - self.h0) as usize).copied().unwrap_or(0)
    }

    /// `x_h = x + (h - (h0-1))·a_k`.
    pub fn shifted(&self, x: u64, h: Level) -> u64 {
        shift(&self.set, self.h0, x, h)
    }

    /// Levels where `d(h) > d(h-1)`.
    pub fn rises(&self) -> Vec<Level> {
        check_conjecture(&self.delta, self.h0)
    }

    /// The violation record for this set, if `d(h)` ever increases.
    pub fn violation(&self) -> Option<Violation> {
        let rises = self.rises();
        (!rises.is_empty()).then(|| Violation {
            k: self.set.k(),
            set: self.set.clone(),
            h0: self.h0,
            h1: self.h1,
            h2: self.h2,
            n0: self.n0,
            delta: self.delta.clone(),
            rises,
        })
    }

    /// A copy with the class of `x` replaced and `h1`, `h2`, `d(h)`
    /// re-derived; `None` if `x` is outside the window. Used to feed
    /// deliberately wrong analyses to the verifier.
    pub fn with_class(&self, x: u64, class: GapClass) -> Option<GapAnalysis> {
        let w = self.window();
        if !w.contains(&x) {
            return None;
        }
        let mut classes = self.classes.clone();
        classes[(x - w.start) as usize] = class;
        Some(GapAnalysis::from_classes(
            self.set.clone(),
            self.h0,
            self.n0,
            self.horizon,
            classes,
        ))
    }
}

/// A set whose `d(h)` vector is not non-increasing on `h0..=h2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub set: StampSet,
    pub k: usize,
    pub h0: Level,
    pub h1: Level,
    pub h2: Level,
    pub n0: u64,
    /// `d(h0), d(h0+1), ..., d(h2)`.
    pub delta: Vec<u32>,
    pub rises: Vec<Level>,
}

impl Violation {
    /// Largest single increase `d(h) - d(h-1)` over all rises.
    pub fn max_rise(&self) -> u32 {
        self.rises
            .iter()
            .map(|&h| {
                let i = (h - self.h0) as usize;
                self.delta[i] - self.delta[i - 1]
            })
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn window(set: &StampSet, h0: Level, n0: u64) -> Range<u64> {
    let end = u64::from(h0.saturating_sub(1)) * set.top();
    let start = n0 + 1;
    start..end.max(start)
}

pub(crate) fn window_len(set: &StampSet, h0: Level, n0: u64) -> u64 {
    let w = window(set, h0, n0);
    w.end - w.start
}

pub(crate) fn shift(set: &StampSet, h0: Level, x: u64, h: Level) -> u64 {
    debug_assert!(h + 1 >= h0);
    x + u64::from(h + 1 - h0) * set.top()
}

/// `h0`, the least `h` with `n(h) >= a_k`, together with `n0 = n(h0 - 1)`.
pub fn compute_h0(set: &StampSet) -> (Level, u64) {
    let top = set.top();
    let w = min_weights(set.as_slice(), top, top as Level);
    let h0 = w.iter().copied().max().unwrap_or(0).max(1);
    let n0 = match w.iter().position(|&m| m >= h0) {
        Some(p) if h0 > 1 => p as u64 - 1,
        _ => 0,
    };
    (h0, n0)
}

/// Level `H` from which no gap is ever filled again: the least `h` with
/// `h·(a_k - a_{k-1}) >= (h0-2)·a_k + a_{k-1} - n0`, but never below `h0`.
pub fn compute_horizon(set: &StampSet, h0: Level, n0: u64) -> Level {
    let top = set.top() as i128;
    let second = set.second() as i128;
    let rhs = (i128::from(h0) - 2) * top + second - n0 as i128;
    let bound = if rhs <= 0 {
        0
    } else {
        let diff = top - second;
        (rhs + diff - 1) / diff
    };
    (bound as Level).max(h0)
}

/// The cruder horizon `floor(((h0-1)·a_k - n0 - 1) / (a_k - a_{k-1})) + 1`.
pub fn basic_horizon(set: &StampSet, h0: Level, n0: u64) -> Level {
    let top = set.top() as i128;
    let diff = top - set.second() as i128;
    let num = (i128::from(h0) - 1) * top - n0 as i128 - 1;
    (num.div_euclid(diff) + 1) as Level
}

/// Classifies every window value of `set` by algorithm A.
pub fn classify_a(set: &StampSet) -> GapAnalysis {
    let (h0, n0) = compute_h0(set);
    classify_a_with(set, h0, n0)
}

/// Algorithm A with `h0` and `n0` already known (e.g. from enumeration).
pub fn classify_a_with(set: &StampSet, h0: Level, n0: u64) -> GapAnalysis {
    let horizon = compute_horizon(set, h0, n0);
    let a = set.as_slice();
    let classes = window(set, h0, n0)
        .map(|x| {
            let xh = shift(set, h0, x, horizon);
            match max_top_count(a, xh, horizon) {
                None => GapClass::Permanent,
                Some(ck) => {
                    let m = horizon - ck;
                    if m < h0 {
                        GapClass::PreFilled
                    } else {
                        GapClass::MGap(m)
                    }
                }
            }
        })
        .collect();
    GapAnalysis::from_classes(set.clone(), h0, n0, horizon, classes)
}

/// `(h1, h2)` from classes listed in ascending `x`.
///
/// `h2` is the largest m-gap order anywhere, `h1` the largest below the
/// first permanent gap (or `h2` when there is none); both default to
/// `h0 - 1`.
pub fn derive_h1_h2(classes: &[GapClass], h0: Level) -> (Level, Level) {
    let floor = h0.saturating_sub(1);
    let mut running = floor;
    let mut h1 = None;
    for class in classes {
        match *class {
            GapClass::MGap(m) => running = running.max(m),
            GapClass::Permanent if h1.is_none() => h1 = Some(running),
            _ => {}
        }
    }
    (h1.unwrap_or(running), running)
}

/// Number of gaps at level `h`: values `n(h) < x < h·a_k` with no
/// `h`-representation, counted by testing each value directly.
pub fn gaps_at_level(set: &StampSet, h: Level) -> u64 {
    let a = set.as_slice();
    let lo = h_range(a, h) + 1;
    let hi = u64::from(h) * set.top();
    (lo..hi).filter(|&x| !can(a, x, h)).count() as u64
}

/// Levels `h` in `h0+1..=h2` where `d(h) > d(h-1)`; `delta[0]` is `d(h0)`.
pub fn check_conjecture(delta: &[u32], h0: Level) -> Vec<Level> {
    delta
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0])
        .map(|(i, _)| h0 + 1 + i as Level)
        .collect()
}
