//! Reference computations written straight from the definitions: a
//! minimum-stamp table, gap counts per level and brute-force enumeration.
//! Nothing here calls into the library's search code.

use stamp_gaps::GapClass;

/// Minimum number of stamps for each of `0..=limit`; `u32::MAX` if
/// unreachable (never, since 1 is a stamp).
pub fn min_stamps(a: &[u64], limit: u64) -> Vec<u32> {
    let mut w = vec![u32::MAX; limit as usize + 1];
    w[0] = 0;
    for x in 1..=limit as usize {
        w[x] = a
            .iter()
            .filter(|&&d| d as usize <= x)
            .map(|&d| w[x - d as usize] + 1)
            .min()
            .unwrap();
    }
    w
}

pub struct Oracle {
    pub a: Vec<u64>,
    pub w: Vec<u32>,
    /// Levels examined: everything settles well before this.
    pub levels: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reference {
    pub h0: u32,
    pub n0: u64,
    pub h1: u32,
    pub h2: u32,
    pub classes: Vec<GapClass>,
    pub delta: Vec<u32>,
}

impl Oracle {
    pub fn new(a: &[u64]) -> Self {
        let top = *a.last().unwrap();
        let second = a[a.len() - 2];
        // h0 <= a_k since a_k - 1 ones always suffice.
        let w0 = min_stamps(a, top);
        let h0 = *w0.iter().max().unwrap();
        // A crude level past which nothing changes: the window shifts by
        // a_k per level while its h-range grows by at least a_k - a_{k-1}.
        let span = u64::from(h0) * top;
        let levels = (span / (top - second)) as u32 + h0 + 3;
        let w = min_stamps(a, u64::from(levels + 1) * top);
        Oracle {
            a: a.to_vec(),
            w,
            levels,
        }
    }

    fn range_of(w: &[u32], h: u32) -> u64 {
        w.iter().position(|&m| m > h).map_or(w.len() as u64 - 1, |p| p as u64 - 1)
    }

    pub fn top(&self) -> u64 {
        *self.a.last().unwrap()
    }

    pub fn n(&self, h: u32) -> u64 {
        Self::range_of(&self.w[..=(u64::from(h) * self.top() + 1) as usize], h)
    }

    pub fn representable(&self, x: u64, h: u32) -> bool {
        self.w[x as usize] <= h
    }

    /// Values `n(h) < x < h·a_k` with no h-representation.
    pub fn gaps(&self, h: u32) -> Vec<u64> {
        (self.n(h) + 1..u64::from(h) * self.top())
            .filter(|&x| !self.representable(x, h))
            .collect()
    }

    pub fn h0(&self) -> u32 {
        (1..).find(|&h| self.n(h) >= self.top()).unwrap()
    }

    pub fn reference(&self) -> Reference {
        let top = self.top();
        let h0 = self.h0();
        let n0 = self.n(h0 - 1);
        let end = u64::from(h0 - 1) * top;
        let classes: Vec<GapClass> = (n0 + 1..end)
            .map(|x| {
                if self.representable(x, h0 - 1) {
                    return GapClass::PreFilled;
                }
                (h0..=self.levels)
                    .find(|&m| self.representable(x + u64::from(m + 1 - h0) * top, m))
                    .map_or(GapClass::Permanent, GapClass::MGap)
            })
            .collect();

        // d(h) = m(h-1) - m(h) straight from gap counts.
        let counts: Vec<i64> = (0..=self.levels).map(|h| self.gaps(h).len() as i64).collect();
        let persists: Vec<bool> = (0..self.levels)
            .map(|g| {
                self.gaps(g)
                    .iter()
                    .all(|&x| !self.representable(x + top, g + 1))
            })
            .collect();
        let steps: Vec<bool> = (0..self.levels)
            .map(|g| self.n(g + 1) == self.n(g) + top)
            .collect();
        let floor = h0 - 1;
        let settled_from = |flags: &[bool]| {
            (floor..self.levels)
                .find(|&h| flags[h as usize..].iter().all(|&f| f))
                .unwrap()
        };
        let h1 = settled_from(&steps);
        let h2 = settled_from(&persists);
        let delta = if h2 < h0 {
            Vec::new()
        } else {
            (h0..=h2)
                .map(|h| (counts[h as usize - 1] - counts[h as usize]) as u32)
                .collect()
        };
        Reference {
            h0,
            n0,
            h1,
            h2,
            classes,
            delta,
        }
    }
}

/// Every set `1 < a_2 < ... < a_k` whose least `h` with `n(h) >= a_k` is
/// `h0`, listed with `n(h0-1)`, in lexicographic order. Candidates are
/// bounded by `a_{i+1} <= h0·a_i + 1`, which any such set must satisfy.
pub fn brute_force_sets(k: usize, h0: u32) -> Vec<(Vec<u64>, u64)> {
    fn go(a: &mut Vec<u64>, k: usize, h0: u32, out: &mut Vec<(Vec<u64>, u64)>) {
        if a.len() == k {
            let top = *a.last().unwrap();
            let w = min_stamps(a, top);
            if *w.iter().max().unwrap() == h0 {
                let n0 = w.iter().position(|&m| m >= h0).unwrap() as u64 - 1;
                out.push((a.clone(), n0));
            }
            return;
        }
        let last = *a.last().unwrap();
        for next in last + 1..=u64::from(h0) * last + 1 {
            a.push(next);
            go(a, k, h0, out);
            a.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut vec![1], k, h0, &mut out);
    out
}
