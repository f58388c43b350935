//! Text renderings of an analysis: the gap map, the h-gap table and the
//! parameter line.
//!
//! The gap map lays out values `n0 ..= (h0-1)·a_k` in rows of
//! [`ROW_WIDTH`] columns, each row labelled with its first value. Glyphs:
//! `*` pre-filled (both window endpoints are drawn as `*`), `-` permanent
//! gap, and the last digit of `m` for an m-gap. Values outside that span are
//! blank.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::analysis::{GapAnalysis, GapClass};
use crate::error::{Error, Result};
use crate::represent::all_reps;
use crate::set::{Level, Representation};

pub const ROW_WIDTH: u64 = 70;
const LABEL_WIDTH: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Glyph {
    PreFilled,
    Permanent,
    Digit(u8),
}

impl Glyph {
    pub fn of(class: GapClass) -> Self {
        match class {
            GapClass::PreFilled => Glyph::PreFilled,
            GapClass::Permanent => Glyph::Permanent,
            GapClass::MGap(m) => Glyph::Digit((m % 10) as u8),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Glyph::PreFilled => '*',
            Glyph::Permanent => '-',
            Glyph::Digit(d) => char::from(b'0' + d),
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '*' => Some(Glyph::PreFilled),
            '-' => Some(Glyph::Permanent),
            '0'..='9' => Some(Glyph::Digit(c as u8 - b'0')),
            _ => None,
        }
    }

    /// Undoes the mod-10 folding: the smallest `m >= h0` with the digit's
    /// residue. Exact whenever `h2 - h0 < 10`.
    pub fn to_class(self, h0: Level) -> GapClass {
        match self {
            Glyph::PreFilled => GapClass::PreFilled,
            Glyph::Permanent => GapClass::Permanent,
            Glyph::Digit(d) => {
                let d = Level::from(d);
                GapClass::MGap(h0 + (d + 10 - h0 % 10) % 10)
            }
        }
    }
}

/// `k=4 h0=8 h1=9 h2=10 n0=22 (h0-1)a_k=245`
pub fn parameter_line(a: &GapAnalysis) -> String {
    format!(
        "k={} h0={} h1={} h2={} n0={} (h0-1)a_k={}",
        a.set.k(),
        a.h0,
        a.h1,
        a.h2,
        a.n0,
        u64::from(a.h0.saturating_sub(1)) * a.set.top()
    )
}

pub fn render_gap_map(a: &GapAnalysis) -> String {
    let first = a.n0;
    let last = u64::from(a.h0.saturating_sub(1)) * a.set.top();
    let mut out = String::new();
    let pad = " ".repeat(LABEL_WIDTH + 1);
    out.push_str(&pad);
    for j in 0..ROW_WIDTH / 10 {
        let _ = write!(out, "{:<10}", j * 10);
    }
    let header_end = out.trim_end().len();
    out.truncate(header_end);
    out.push('\n');
    out.push_str(&pad);
    for j in 0..ROW_WIDTH {
        out.push(char::from(b'0' + (j % 10) as u8));
    }
    out.push('\n');
    if last <= first {
        return out;
    }
    let mut row = first / ROW_WIDTH * ROW_WIDTH;
    while row <= last {
        let mut line = format!("{row:>LABEL_WIDTH$} ");
        for v in row..row + ROW_WIDTH {
            let c = if v < first || v > last {
                ' '
            } else if v == first || v == last {
                '*'
            } else {
                Glyph::of(a.class(v).expect("inside window")).to_char()
            };
            line.push(c);
        }
        out.push_str(line.trim_end());
        out.push('\n');
        row += ROW_WIDTH;
    }
    out
}

/// Reads a gap map back into `value -> glyph`. Header lines (blank label
/// column) and blank cells are skipped.
pub fn parse_gap_map(text: &str) -> Result<BTreeMap<u64, Glyph>> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with(&" ".repeat(LABEL_WIDTH + 1)) {
            continue;
        }
        let bad = |reason: String| Error::MalformedRecord { line: n + 1, reason };
        let trimmed = line.trim_start();
        let label_len = trimmed
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(trimmed.len());
        let row: u64 = trimmed[..label_len]
            .parse()
            .map_err(|_| bad("missing row label".into()))?;
        let rest = &trimmed[label_len..];
        let Some(cells) = rest.strip_prefix(' ') else {
            if rest.is_empty() {
                continue;
            }
            return Err(bad("expected a space after the row label".into()));
        };
        for (i, c) in cells.chars().enumerate() {
            if c == ' ' {
                continue;
            }
            let g = Glyph::from_char(c).ok_or_else(|| bad(format!("unknown glyph {c:?}")))?;
            out.insert(row + i as u64, g);
        }
    }
    Ok(out)
}

/// Class array over the open window recovered from a parsed map, or an
/// error naming the first window value missing from the map.
pub fn classes_from_map(
    map: &BTreeMap<u64, Glyph>,
    n0: u64,
    window_end: u64,
    h0: Level,
) -> Result<Vec<GapClass>> {
    (n0 + 1..window_end)
        .map(|x| {
            map.get(&x)
                .map(|g| g.to_class(h0))
                .ok_or_else(|| Error::MalformedRecord {
                    line: 0,
                    reason: format!("no glyph for {x}"),
                })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGapRow {
    pub h: Level,
    pub x: u64,
    pub xh: u64,
    pub reps: Vec<Representation>,
}

/// One row per m-gap, highest `h` first, then ascending `x`.
pub fn hgap_table(a: &GapAnalysis) -> Vec<HGapRow> {
    let mut rows: Vec<HGapRow> = a
        .m_gaps()
        .map(|(x, h)| {
            let xh = a.shifted(x, h);
            HGapRow {
                h,
                x,
                xh,
                reps: all_reps(a.set.as_slice(), xh, h),
            }
        })
        .collect();
    rows.sort_by(|p, q| q.h.cmp(&p.h).then(p.x.cmp(&q.x)));
    rows
}

pub fn render_hgap_table(rows: &[HGapRow]) -> String {
    let mut out = String::from("h\tx\tx_h\th-representation\n");
    for r in rows {
        let reps: Vec<String> = r.reps.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "{}\t{}\t{}\t{}", r.h, r.x, r.xh, reps.join(", "));
    }
    out
}
