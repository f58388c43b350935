mod common;

use proptest::prelude::*;

use common::oracle::{min_stamps, Oracle};
use stamp_gaps::analysis::{classify_a, gaps_at_level};
use stamp_gaps::derivation::build_graph;
use stamp_gaps::propagation::{classify_b, classify_b_audited};
use stamp_gaps::represent::{all_reps, can, find_minimal, h_range, max_ck_rep, max_top_count};
use stamp_gaps::verify::verify_set;
use stamp_gaps::{GapClass, StampSet};

/// Sorted sets starting at 1 with `k` elements and `a_k <= max_top`.
fn stamp_set(k: std::ops::RangeInclusive<usize>, max_top: u64) -> impl Strategy<Value = Vec<u64>> {
    k.prop_flat_map(move |k| {
        proptest::sample::subsequence((2..=max_top).collect::<Vec<_>>(), k - 1).prop_map(|rest| {
            let mut a = vec![1];
            a.extend(rest);
            a
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn can_matches_table(a in stamp_set(2..=6, 40), x in 0u64..300, s in 0u32..12) {
        let w = min_stamps(&a, x);
        prop_assert_eq!(can(&a, x, s), w[x as usize] <= s);
        let expected = (w[x as usize] <= s).then_some(w[x as usize]);
        prop_assert_eq!(find_minimal(&a, x, s), expected);
    }

    #[test]
    fn representability_is_monotone_in_stamps(a in stamp_set(2..=5, 30), x in 0u64..200, s in 0u32..10) {
        if can(&a, x, s) {
            prop_assert!(can(&a, x, s + 1));
        }
    }

    #[test]
    fn h_range_matches_table(a in stamp_set(2..=6, 40), h in 0u32..8) {
        let top = *a.last().unwrap();
        let w = min_stamps(&a, u64::from(h) * top + 1);
        let direct = w.iter().position(|&m| m > h).unwrap() as u64 - 1;
        prop_assert_eq!(h_range(&a, h), direct);
    }

    #[test]
    fn max_ck_rep_has_the_largest_top(a in stamp_set(2..=5, 30), x in 0u64..200, h in 0u32..10) {
        let reps = all_reps(&a, x, h);
        match max_ck_rep(&a, x, h) {
            None => prop_assert!(reps.is_empty()),
            Some(r) => {
                prop_assert_eq!(r.value(&a), x);
                prop_assert!(r.weight() <= h);
                let best = reps.iter().map(|q| q.top()).max().unwrap();
                prop_assert_eq!(r.top(), best);
                prop_assert_eq!(max_top_count(&a, x, h), Some(best));
                // descending lexicographic: the first one listed
                prop_assert_eq!(&reps[0], &r);
            }
        }
        for r in &reps {
            prop_assert_eq!(r.value(&a), x);
            prop_assert!(r.weight() <= h);
        }
    }

    #[test]
    fn algorithms_agree_with_oracle(a in stamp_set(3..=5, 30)) {
        let set = StampSet::new(a.clone()).unwrap();
        let ra = classify_a(&set);
        let rb = classify_b_audited(&set);
        prop_assert_eq!(&ra, &rb);
        let r = Oracle::new(&a).reference();
        prop_assert_eq!((ra.h0, ra.n0, ra.h1, ra.h2), (r.h0, r.n0, r.h1, r.h2));
        prop_assert_eq!(ra.classes(), &r.classes[..]);
        prop_assert_eq!(ra.delta(), &r.delta[..]);
    }

    #[test]
    fn verification_passes(a in stamp_set(3..=6, 45)) {
        let set = StampSet::new(a).unwrap();
        let failed: Vec<_> = verify_set(&set).into_iter().filter(|c| !c.passed).collect();
        prop_assert!(failed.is_empty(), "{}: {:?}", set, failed);
    }

    #[test]
    fn every_m_gap_reaches_level_h0(a in stamp_set(3..=6, 45)) {
        let set = StampSet::new(a).unwrap();
        let an = classify_a(&set);
        let g = build_graph(&an);
        for node in &g.nodes {
            // follow any edge down; each step lowers m by one
            let mut cur = *node;
            while cur.m > an.h0 {
                let e = g.edges.iter().find(|e| e.from == cur);
                prop_assert!(e.is_some(), "{}-gap {} is a dead end", cur.m, cur.x);
                cur = e.unwrap().to;
            }
            prop_assert_eq!(an.class(cur.x), Some(GapClass::MGap(an.h0)));
        }
    }

    #[test]
    fn delta_is_difference_of_gap_counts(a in stamp_set(3..=6, 45)) {
        let set = StampSet::new(a).unwrap();
        let an = classify_a(&set);
        for h in an.h0..=an.h2 {
            let d = gaps_at_level(&set, h - 1) - gaps_at_level(&set, h);
            prop_assert_eq!(u64::from(an.d(h)), d);
        }
        prop_assert_eq!(an.delta().iter().map(|&d| u64::from(d)).sum::<u64>(),
            an.iter().filter(|(_, c)| matches!(c, GapClass::MGap(_))).count() as u64);
    }

    #[test]
    fn b_equals_a_on_wider_sets(a in stamp_set(4..=8, 80)) {
        let set = StampSet::new(a).unwrap();
        prop_assert_eq!(classify_a(&set), classify_b(&set));
    }
}
