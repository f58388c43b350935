//! Published values for the worked examples and scan results.

pub struct Published {
    pub set: &'static [u64],
    pub h0: u32,
    pub h1: u32,
    pub h2: u32,
    pub n0: u64,
    /// `d(h0..=h2)`.
    pub delta: &'static [u32],
}

const fn p(
    set: &'static [u64],
    h0: u32,
    h1: u32,
    h2: u32,
    n0: u64,
    delta: &'static [u32],
) -> Published {
    Published {
        set,
        h0,
        h1,
        h2,
        n0,
        delta,
    }
}

pub const FIRST: Published = p(&[1, 4, 26, 35], 8, 9, 10, 22, &[4, 2, 1]);
pub const SECOND: Published = p(&[1, 5, 8, 25, 37, 56], 4, 5, 6, 3, &[15, 3, 1]);
pub const EQUALITY: Published = p(&[1, 5, 18, 19], 6, 13, 13, 13, &[5, 2, 2, 2, 1, 1, 1, 1]);
pub const STRUCTURE: Published = p(&[1, 3, 8, 21, 28, 29], 4, 8, 8, 12, &[12, 5, 4, 2, 1]);
pub const COUNTER: Published = p(&[1, 3, 4, 9, 12, 13, 19, 44, 47, 62], 3, 5, 5, 10, &[14, 5, 6]);

pub const K9_EXCEPTIONS: [Published; 7] = [
    p(&[1, 2, 4, 6, 9, 10, 31, 32, 36], 3, 7, 7, 16, &[9, 10, 6, 2, 1]),
    p(&[1, 2, 5, 8, 9, 10, 31, 33, 36], 3, 6, 6, 20, &[9, 10, 5, 2]),
    p(&[1, 2, 5, 8, 9, 10, 31, 34, 36], 3, 7, 7, 20, &[9, 10, 5, 3, 1]),
    p(&[1, 3, 4, 6, 9, 10, 31, 32, 36], 3, 6, 6, 16, &[9, 10, 6, 2]),
    p(&[1, 3, 5, 6, 9, 10, 31, 32, 36], 3, 6, 6, 16, &[9, 10, 6, 2]),
    p(&[1, 3, 5, 7, 9, 10, 31, 32, 36], 3, 6, 6, 20, &[9, 10, 5, 1]),
    p(&[1, 3, 5, 7, 9, 10, 31, 35, 36], 3, 8, 8, 20, &[9, 10, 6, 3, 2, 1]),
];

/// k = 10 exceptions with `h1 != h2`.
pub const K10_SPLIT: [Published; 4] = [
    p(&[1, 3, 5, 12, 13, 15, 34, 53, 70, 75], 3, 8, 11, 6, &[26, 9, 10, 6, 4, 3, 1, 1, 1]),
    p(&[1, 3, 7, 8, 12, 15, 18, 43, 54, 58], 3, 6, 9, 4, &[17, 8, 9, 4, 2, 1, 1]),
    p(&[1, 3, 7, 8, 12, 18, 19, 43, 54, 58], 3, 6, 9, 4, &[20, 7, 8, 3, 1, 1, 1]),
    p(&[1, 3, 7, 12, 15, 18, 19, 43, 54, 58], 3, 6, 9, 10, &[18, 7, 8, 3, 1, 1, 1]),
];

/// k = 10 exceptions where `d(h) - d(h-1) > 1`.
pub const K10_STEEP: [Published; 4] = [
    p(
        &[1, 3, 4, 6, 7, 21, 35, 50, 64, 67],
        3,
        16,
        16,
        14,
        &[17, 19, 10, 5, 3, 2, 2, 2, 2, 1, 1, 1, 1],
    ),
    p(&[1, 3, 4, 9, 10, 24, 38, 53, 67, 73], 3, 10, 10, 14, &[18, 20, 8, 4, 3, 3, 2, 1]),
    p(&[1, 3, 5, 7, 8, 24, 38, 57, 71, 73], 3, 10, 10, 16, &[20, 22, 13, 7, 6, 4, 2, 1]),
    p(&[1, 4, 7, 8, 14, 15, 18, 48, 52, 55], 3, 9, 9, 2, &[15, 17, 11, 8, 4, 2, 1]),
];

pub const K10_HIGHEST: Published = p(
    &[1, 3, 5, 7, 8, 17, 36, 50, 67, 69],
    3,
    18,
    18,
    18,
    &[18, 19, 11, 6, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1],
);

/// `(set, h0, h1, h2)` from the tables of extreme sets.
pub const EXTREMES: [(&[u64], u32, u32, u32); 15] = [
    (&[1, 6, 41, 42], 10, 35, 35),
    (&[1, 6, 7, 36, 37], 5, 29, 29),
    (&[1, 8, 11, 69, 70], 7, 58, 58),
    (&[1, 5, 9, 10, 41, 42], 4, 31, 31),
    (&[1, 3, 8, 10, 11, 34, 35], 3, 23, 23),
    (&[1, 4, 7, 10, 11, 34, 35], 3, 23, 23),
    (&[1, 7, 39, 44], 10, 11, 15),
    (&[1, 6, 7, 34, 39], 5, 8, 12),
    (&[1, 6, 8, 35, 55], 5, 5, 9),
    (&[1, 7, 12, 64, 69], 7, 15, 24),
    (&[1, 2, 5, 13, 32, 43], 4, 4, 9),
    (&[1, 4, 9, 21, 37, 40], 4, 6, 11),
    (&[1, 4, 10, 11, 38, 43], 4, 7, 12),
    (&[1, 3, 7, 12, 22, 32, 43], 3, 2, 7),
    (&[1, 3, 10, 18, 22, 70, 73], 4, 6, 16),
];

/// `(h, x, x_h, representations)` with representations as `[c_k, ..., c_1]`.
pub type TableRow = (u32, u64, u64, &'static [&'static str]);

pub const FIRST_TABLE: [TableRow; 7] = [
    (10, 155, 260, &["[0, 10, 0, 0]"]),
    (9, 120, 190, &["[0, 7, 2, 0]"]),
    (9, 164, 234, &["[0, 9, 0, 0]"]),
    (8, 23, 58, &["[0, 2, 0, 6]", "[0, 2, 1, 2]"]),
    (8, 129, 164, &["[0, 6, 2, 0]"]),
    (8, 151, 186, &["[0, 7, 1, 0]"]),
    (8, 173, 208, &["[0, 8, 0, 0]"]),
];

pub const SECOND_TABLE: [TableRow; 19] = [
    (6, 54, 222, &["[0, 6, 0, 0, 0, 0]"]),
    (5, 29, 141, &["[0, 3, 1, 0, 1, 0]"]),
    (5, 49, 161, &["[0, 3, 2, 0, 0, 0]"]),
    (5, 73, 185, &["[0, 5, 0, 0, 0, 0]"]),
    (4, 4, 60, &["[0, 0, 2, 0, 2, 0]"]),
    (4, 12, 68, &["[0, 1, 1, 0, 1, 1]"]),
    (4, 19, 75, &["[0, 1, 1, 1, 1, 0]", "[0, 2, 0, 0, 0, 1]", "[0, 0, 3, 0, 0, 0]"]),
    (4, 20, 76, &["[0, 2, 0, 0, 0, 2]", "[0, 0, 3, 0, 0, 1]"]),
    (4, 22, 78, &["[0, 1, 1, 2, 0, 0]"]),
    (4, 23, 79, &["[0, 2, 0, 0, 1, 0]"]),
    (4, 28, 84, &["[0, 2, 0, 0, 2, 0]"]),
    (4, 32, 88, &["[0, 1, 2, 0, 0, 1]"]),
    (4, 36, 92, &["[0, 1, 2, 0, 1, 0]"]),
    (4, 44, 100, &["[0, 2, 1, 0, 0, 1]", "[0, 0, 4, 0, 0, 0]"]),
    (4, 48, 104, &["[0, 2, 1, 0, 1, 0]"]),
    (4, 60, 116, &["[0, 3, 0, 0, 1, 0]"]),
    (4, 68, 124, &["[0, 2, 2, 0, 0, 0]"]),
    (4, 80, 136, &["[0, 3, 1, 0, 0, 0]"]),
    (4, 92, 148, &["[0, 4, 0, 0, 0, 0]"]),
];

/// Legible gap-map rows, as `(set, rows)`. Runs of `*` in the published
/// text are unreliable, so comparisons collapse them.
pub const GAP_MAPS: [(&[u64], &[&str]); 3] = [
    (
        &[1, 3, 4, 9, 12, 13, 19, 44, 47, 62],
        &["*3*****3*33**35335*35335**5**5**4*-4**4**4**4**---3*-3**3--3"],
    ),
    (&[1, 5, 18, 19], &["*6*****6*****6*****9876*****", "**32109876*****"]),
    (
        &[1, 3, 8, 21, 28, 29],
        &[
            "*4*4**4*4*****4*****4*****654*****54*****4*****654**87654***",
            "7654****",
        ],
    ),
];

/// Whether the published map is complete, rather than a leading fragment.
pub const GAP_MAP_COMPLETE: [bool; 3] = [false, true, true];

pub fn collapse_stars(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars().filter(|c| !c.is_whitespace()) {
        if !(c == '*' && out.ends_with('*')) {
            out.push(c);
        }
    }
    out
}
