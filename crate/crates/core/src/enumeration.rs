//! Enumeration of every stamp set with a given `h0`.
//!
//! Sets are built one denomination at a time. With `a_1..a_{i-1}` fixed,
//! `a_i` runs upwards from `a_{i-1} + 1` for as long as `a_i - 1` still has a
//! representation with at most `h0` stamps over the prefix; the first value
//! needing exactly `h0` stamps pins down `n(h0 - 1)`.

use std::ops::RangeInclusive;

use crate::represent::{find_minimal, h_range};
use crate::set::{Level, StampSet};

/// Upper limit for the next denomination after `prefix`: the smallest value
/// with no representation of at most `h0` stamps, `n(h0, prefix) + 1`.
pub fn admissible_max(prefix: &[u64], h0: Level) -> u64 {
    h_range(prefix, h0) + 1
}

/// Restrictions on the second and third denominations, used to split a
/// search into disjoint pieces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrefixBounds {
    pub a2: Option<RangeInclusive<u64>>,
    pub a3: Option<RangeInclusive<u64>>,
}

impl PrefixBounds {
    pub fn exact(a2: u64, a3: u64) -> Self {
        PrefixBounds {
            a2: Some(a2..=a2),
            a3: Some(a3..=a3),
        }
    }

    fn at(&self, level: usize) -> Option<&RangeInclusive<u64>> {
        match level {
            1 => self.a2.as_ref(),
            2 => self.a3.as_ref(),
            _ => None,
        }
    }
}

/// Calls `visit(set, n0)` for every set of `k` denominations whose `h0` is
/// exactly `h0`, in lexicographic order.
pub fn enumerate_sets<F>(k: usize, h0: Level, visit: F)
where
    F: FnMut(&[u64], u64),
{
    enumerate_bounded(k, h0, &PrefixBounds::default(), visit)
}

/// [`enumerate_sets`] restricted to sets whose prefix lies within `bounds`.
pub fn enumerate_bounded<F>(k: usize, h0: Level, bounds: &PrefixBounds, mut visit: F)
where
    F: FnMut(&[u64], u64),
{
    assert!(k >= 2, "need at least two denominations");
    assert!(h0 >= 1, "h0 must be positive");
    let mut walk = Walk {
        k,
        h0,
        bounds,
        a: vec![0; k],
        visit: &mut visit,
    };
    walk.a[0] = 1;
    walk.level(1, 0);
}

struct Walk<'b, F> {
    k: usize,
    h0: Level,
    bounds: &'b PrefixBounds,
    a: Vec<u64>,
    visit: &'b mut F,
}

impl<F: FnMut(&[u64], u64)> Walk<'_, F> {
    /// `a[..i]` is fixed; `v` is 0 or one more than `n(h0 - 1)` of that
    /// prefix.
    fn level(&mut self, i: usize, mut v: u64) {
        let bounds = self.bounds.at(i).cloned();
        self.a[i] = self.a[i - 1] + 1;
        loop {
            let Some(mut h) = find_minimal(&self.a[..i], self.a[i] - 1, self.h0) else {
                return;
            };
            if h == self.h0 && v == 0 {
                v = self.a[i] - 1;
            }
            // a_i - 1 needed h stamps, so a_i needs at most h + 1: no need to
            // search again until that bound reaches h0.
            loop {
                if let Some(r) = &bounds {
                    if self.a[i] > *r.end() {
                        return;
                    }
                }
                if bounds.as_ref().is_none_or(|r| r.contains(&self.a[i])) {
                    if i + 1 == self.k {
                        if v > 0 {
                            (self.visit)(&self.a, v - 1);
                        }
                    } else {
                        self.level(i + 1, v);
                    }
                }
                self.a[i] += 1;
                h += 1;
                if h >= self.h0 {
                    break;
                }
            }
        }
    }
}

/// Reference enumerator without the skip-ahead: each candidate is checked
/// with a fresh minimal-representation search.
pub fn enumerate_sets_plain<F>(k: usize, h0: Level, mut visit: F)
where
    F: FnMut(&[u64], u64),
{
    fn go<F: FnMut(&[u64], u64)>(a: &mut Vec<u64>, k: usize, h0: Level, v: u64, visit: &mut F) {
        let i = a.len();
        let mut next = a[i - 1] + 1;
        let mut v = v;
        while let Some(h) = find_minimal(a, next - 1, h0) {
            if h == h0 && v == 0 {
                v = next - 1;
            }
            a.push(next);
            if i + 1 == k {
                if v > 0 {
                    visit(a, v - 1);
                }
            } else {
                go(a, k, h0, v, visit);
            }
            a.pop();
            next += 1;
        }
    }
    let mut a = vec![1];
    go(&mut a, k, h0, 0, &mut visit);
}

/// Collects [`enumerate_sets`] into owned sets with their `n0`.
pub fn collect_sets(k: usize, h0: Level) -> Vec<(StampSet, u64)> {
    let mut out = Vec::new();
    enumerate_sets(k, h0, |a, n0| {
        out.push((StampSet::new(a.to_vec()).expect("enumerated sets are valid"), n0))
    });
    out
}
