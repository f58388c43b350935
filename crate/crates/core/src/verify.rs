//! Independent checks of an analysis against direct computation and the
//! structural theorems relating `n(h)`, `h1`, `h2` and the m-gaps.

use crate::analysis::{
    classify_a, compute_h0, gaps_at_level, GapAnalysis, GapClass,
};
use crate::derivation::build_graph;
use crate::propagation::classify_b;
use crate::represent::{all_reps, can, h_range};
use crate::scanner::describe_difference;
use crate::set::{Level, StampSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Why it failed; empty on success.
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        Check {
            name,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Analyses `set` and checks the result.
pub fn verify_set(set: &StampSet) -> Vec<Check> {
    verify_analysis(&classify_a(set))
}

/// Runs every check against `a`, which need not have come from either
/// classifier.
pub fn verify_analysis(a: &GapAnalysis) -> Vec<Check> {
    let set = &a.set;
    let s = set.as_slice();
    let top = set.top();
    let h0 = a.h0;
    // n(h) for h0-1 ..= H+1, indexed from h0-1
    let base = h0.saturating_sub(1);
    let ranges: Vec<u64> = (base..=a.horizon + 1).map(|h| h_range(s, h)).collect();
    let n = |h: Level| ranges[(h - base) as usize];

    let mut checks = Vec::new();

    checks.push(Check::new("n(h0-1) by direct scan", {
        let direct = (0..).find(|&x| !can(s, x, base)).unwrap() - 1;
        (direct != a.n0).then(|| format!("direct scan gives {direct}, analysis has {}", a.n0))
    }));

    checks.push(Check::new("h0 by direct scan", {
        let enough = (a.n0 + 1..=top).all(|x| can(s, x, h0));
        let needed = h0 <= 1 || a.n0 < top;
        if !enough {
            Some(format!("some value up to a_k = {top} needs more than {h0} stamps"))
        } else if !needed {
            Some(format!("n(h0-1) = {} already reaches a_k", a.n0))
        } else {
            let (dh0, _) = compute_h0(set);
            (dh0 != h0).then(|| format!("dynamic programming gives h0 = {dh0}"))
        }
    }));

    checks.push(Check::new("d(h) by direct gap counts", {
        let mut bad = None;
        if h0 >= 1 {
            let mut prev = gaps_at_level(set, base);
            for h in h0..=a.h2.max(h0) + 1 {
                let m = gaps_at_level(set, h);
                let d = prev - m;
                if u64::from(a.d(h)) != d {
                    bad = Some(format!("d({h}): m(h-1) - m(h) = {d}, analysis has {}", a.d(h)));
                    break;
                }
                prev = m;
            }
        }
        bad
    }));

    checks.push(Check::new("algorithms A and B agree with the analysis", {
        let ra = classify_a(set);
        let rb = classify_b(set);
        if ra != *a {
            Some(format!("A: {}", describe_difference(&ra, a)))
        } else if rb != *a {
            Some(format!("B: {}", describe_difference(a, &rb)))
        } else {
            None
        }
    }));

    checks.push(Check::new("n(h+1) >= n(h) + a_k for h >= h0-1", {
        (base..=a.horizon)
            .find(|&h| n(h + 1) < n(h) + top)
            .map(|h| format!("n({}) = {} < n({h}) + a_k = {}", h + 1, n(h + 1), n(h) + top))
    }));

    checks.push(Check::new("h-range stabilises exactly from h1", {
        let bad = (a.h1.max(base)..=a.horizon).find(|&h| n(h + 1) != n(h) + top);
        if let Some(h) = bad {
            Some(format!("n({}) - n({h}) = {} != a_k", h + 1, n(h + 1) - n(h)))
        } else if a.h1 >= h0 && n(a.h1) == n(a.h1 - 1) + top {
            Some(format!("already stable at h = {}", a.h1 - 1))
        } else {
            None
        }
    }));

    checks.push(Check::new("gap pattern is final from h2", {
        let persists = |h: Level| {
            let hi = u64::from(h) * top;
            (n(h) + 1..hi).all(|x| can(s, x, h) || !can(s, x + top, h + 1))
        };
        let last = a.horizon.min(a.h2.max(base) + 3);
        if let Some(h) = (a.h2.max(base)..=last).find(|&h| !persists(h)) {
            Some(format!("a gap at level {h} is filled at level {}", h + 1))
        } else if a.h2 >= h0 && persists(a.h2 - 1) {
            Some(format!("pattern already final at h = {}", a.h2 - 1))
        } else {
            None
        }
    }));

    checks.push(Check::new("h2 >= h1", {
        (a.h2 < a.h1).then(|| format!("h1 = {} > h2 = {}", a.h1, a.h2))
    }));

    checks.push(Check::new("classes match their definitions", {
        let mut bad = None;
        for (x, class) in a.iter() {
            let ok = match class {
                GapClass::PreFilled => can(s, x, base),
                GapClass::Permanent => !can(s, a.shifted(x, a.horizon), a.horizon),
                GapClass::MGap(m) => {
                    m >= h0
                        && m <= a.h2
                        && m <= a.horizon
                        && x < u64::from(base) * top
                        && can(s, a.shifted(x, m), m)
                        && !can(s, a.shifted(x, m - 1), m - 1)
                }
            };
            if !ok {
                bad = Some(format!("{x} is not {class:?}"));
                break;
            }
        }
        bad
    }));

    checks.push(Check::new("m-gap representations avoid a_k", {
        a.m_gaps().find_map(|(x, m)| {
            all_reps(s, a.shifted(x, m), m)
                .into_iter()
                .find(|r| r.top() > 0)
                .map(|r| format!("{m}-gap {x} has representation {r}"))
        })
    }));

    checks.push(Check::new("derived gaps have order one less", {
        let classes_ok = a.m_gaps().all(|(x, m)| a.class(x) == Some(GapClass::MGap(m)));
        if !classes_ok {
            Some("inconsistent m-gap listing".into())
        } else if a.m_gaps().any(|(x, m)| m > h0 && crate::derivation::parents_of(x, m, a).is_err()) {
            Some("an m-gap could not be expanded".into())
        } else {
            let g = build_graph(a);
            let bad_edge = g
                .edges
                .iter()
                .find(|e| a.class(e.to.x) != Some(GapClass::MGap(e.from.m - 1)));
            let orphan = g
                .nodes
                .iter()
                .find(|v| v.m > h0 && !g.edges.iter().any(|e| e.from == **v));
            match (bad_edge, orphan) {
                (Some(e), _) => Some(format!(
                    "{} -> {} via {} lands on {:?}",
                    e.from.x,
                    e.to.x,
                    e.via,
                    a.class(e.to.x)
                )),
                (None, Some(v)) => Some(format!("{}-gap {} determines nothing", v.m, v.x)),
                _ => None,
            }
        }
    }));

    checks
}
