//! Representability of integers as sums of a bounded number of stamps.
//!
//! Every function takes the denominations as a slice `a` with `a[0] == 1`,
//! strictly increasing, and considers representations over all of `a`.
//! Restricting to the first `i` denominations is done by passing `&a[..i]`.
//! Searches run depth-first from the largest denomination downwards, trying
//! the largest multiplicity first.

use crate::set::{Level, Representation};

/// Whether `x` is a sum of at most `s` elements of `a`.
pub fn can(a: &[u64], x: u64, s: Level) -> bool {
    debug_assert!(!a.is_empty() && a[0] == 1);
    can_rec(a, x, u64::from(s))
}

fn can_rec(a: &[u64], x: u64, s: u64) -> bool {
    if x == 0 {
        return true;
    }
    let n = a.len();
    if n == 1 {
        return x <= s;
    }
    let top = a[n - 1];
    if x > s * top {
        return false;
    }
    let next = a[n - 2];
    // After taking c of the top stamp the rest must fit in (s - c) * next.
    let lo = if x > s * next {
        (x - s * next).div_ceil(top - next)
    } else {
        0
    };
    let hi = (x / top).min(s);
    (lo..=hi)
        .rev()
        .any(|c| can_rec(&a[..n - 1], x - c * top, s - c))
}

/// Minimum number of stamps from `a` summing to `x`, if that minimum is at
/// most `s`. `find_minimal(a, 0, s) == Some(0)`.
pub fn find_minimal(a: &[u64], x: u64, s: Level) -> Option<Level> {
    debug_assert!(!a.is_empty() && a[0] == 1);
    min_weight_rec(a, x, u64::from(s)).map(|w| w as Level)
}

fn min_weight_rec(a: &[u64], x: u64, budget: u64) -> Option<u64> {
    if x == 0 {
        return Some(0);
    }
    let n = a.len();
    if n == 1 {
        return (x <= budget).then_some(x);
    }
    let top = a[n - 1];
    let next = a[n - 2];
    let mut budget = budget;
    let mut best = None;
    let hi = (x / top).min(budget);
    for c in (0..=hi).rev() {
        let rem = x - c * top;
        // The remainder needs at least ceil(rem / next) stamps, and that
        // bound only grows as c shrinks.
        if c + rem.div_ceil(next) > budget {
            break;
        }
        if let Some(w) = min_weight_rec(&a[..n - 1], rem, budget - c) {
            best = Some(c + w);
            if c + w == 0 {
                break;
            }
            budget = c + w - 1;
        }
    }
    best
}

/// Largest multiplicity of the top denomination over all representations of
/// `x` with at most `h` stamps.
pub fn max_top_count(a: &[u64], x: u64, h: Level) -> Option<u32> {
    let n = a.len();
    let h = u64::from(h);
    if n == 1 {
        return (x <= h).then_some(x as u32);
    }
    let top = a[n - 1];
    let next = a[n - 2];
    if x > h * top {
        return None;
    }
    let lo = if x > h * next {
        (x - h * next).div_ceil(top - next)
    } else {
        0
    };
    let hi = (x / top).min(h);
    (lo..=hi)
        .rev()
        .find(|&c| can_rec(&a[..n - 1], x - c * top, h - c))
        .map(|c| c as u32)
}

/// A representation of `x` with at most `h` stamps whose top coefficient is
/// maximal. Ties are broken by maximising each lower coefficient in turn.
pub fn max_ck_rep(a: &[u64], x: u64, h: Level) -> Option<Representation> {
    let n = a.len();
    let mut coeffs = vec![0u32; n];
    let mut rem = x;
    let mut budget = h;
    for j in (0..n).rev() {
        let c = max_top_count(&a[..=j], rem, budget)?;
        coeffs[j] = c;
        rem -= u64::from(c) * a[j];
        budget -= c;
    }
    debug_assert_eq!(rem, 0);
    Some(Representation(coeffs))
}

/// Top coefficient and weight of [`max_ck_rep`], without building it.
pub fn max_ck_weight(a: &[u64], x: u64, h: Level) -> Option<(u32, Level)> {
    let n = a.len();
    let h = u64::from(h);
    if n == 1 {
        return (x <= h).then_some((x as u32, x as Level));
    }
    let top = a[n - 1];
    let hi = (x / top).min(h);
    (0..=hi).rev().find_map(|c| {
        first_weight(&a[..n - 1], x - c * top, h - c).map(|w| (c as u32, (c + w) as Level))
    })
}

/// Weight of the lexicographically largest representation of `x` with at
/// most `s` stamps.
fn first_weight(a: &[u64], x: u64, s: u64) -> Option<u64> {
    if x == 0 {
        return Some(0);
    }
    let n = a.len();
    if n == 1 {
        return (x <= s).then_some(x);
    }
    let top = a[n - 1];
    if x > s * top {
        return None;
    }
    let next = a[n - 2];
    let lo = if x > s * next {
        (x - s * next).div_ceil(top - next)
    } else {
        0
    };
    let hi = (x / top).min(s);
    (lo..=hi)
        .rev()
        .find_map(|c| first_weight(&a[..n - 1], x - c * top, s - c).map(|w| c + w))
}

/// Every representation of `x` with at most `h` stamps, in descending
/// lexicographic order of `(c_k, ..., c_1)`.
pub fn all_reps(a: &[u64], x: u64, h: Level) -> Vec<Representation> {
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; a.len()];
    collect_reps(a, x, u64::from(h), &mut coeffs, &mut out);
    out
}

fn collect_reps(
    a: &[u64],
    x: u64,
    s: u64,
    coeffs: &mut Vec<u32>,
    out: &mut Vec<Representation>,
) {
    let n = a.len();
    if n == 1 {
        if x <= s {
            coeffs[0] = x as u32;
            out.push(Representation(coeffs.clone()));
            coeffs[0] = 0;
        }
        return;
    }
    let top = a[n - 1];
    let hi = (x / top).min(s);
    for c in (0..=hi).rev() {
        coeffs[n - 1] = c as u32;
        let rem = x - c * top;
        if can_rec(&a[..n - 1], rem, s - c) {
            collect_reps(&a[..n - 1], rem, s - c, coeffs, out);
        }
    }
    coeffs[n - 1] = 0;
}

/// Minimum stamp counts for `0..=limit`, computed by dynamic programming.
/// Entries above `cap` are clamped to `cap + 1`.
pub fn min_weights(a: &[u64], limit: u64, cap: Level) -> Vec<Level> {
    let len = limit as usize + 1;
    let mut w = vec![cap + 1; len];
    w[0] = 0;
    for x in 1..len {
        let mut best = cap + 1;
        for &d in a {
            let d = d as usize;
            if d > x {
                break;
            }
            best = best.min(w[x - d] + 1);
        }
        w[x] = best.min(cap + 1);
    }
    w
}

/// The h-range `n(h)`: the largest `n` such that every `0 <= x <= n` is a
/// sum of at most `h` elements of `a`.
pub fn h_range(a: &[u64], h: Level) -> u64 {
    if h == 0 {
        return 0;
    }
    let top = a[a.len() - 1];
    let limit = u64::from(h) * top + 1;
    let w = min_weights(a, limit, h);
    w.iter()
        .position(|&m| m > h)
        .map_or(limit, |p| p as u64 - 1)
}
