use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of stamps allowed in a representation.
pub type Level = u32;

/// A stamp base `{1, a_2, ..., a_k}`: strictly increasing, first element 1,
/// at least two denominations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct StampSet(Vec<u64>);

impl StampSet {
    pub fn new(denominations: Vec<u64>) -> Result<Self> {
        if denominations.len() < 2 {
            return Err(Error::InvalidSet(format!(
                "need at least two denominations, got {}",
                denominations.len()
            )));
        }
        if denominations[0] != 1 {
            return Err(Error::InvalidSet(format!(
                "first denomination must be 1, got {}",
                denominations[0]
            )));
        }
        if let Some(w) = denominations.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet(format!(
                "denominations must be strictly increasing ({} is followed by {})",
                w[0], w[1]
            )));
        }
        Ok(StampSet(denominations))
    }

    /// Number of denominations `k`.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Largest denomination `a_k`.
    pub fn top(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    /// Second-largest denomination `a_{k-1}`.
    pub fn second(&self) -> u64 {
        self.0[self.0.len() - 2]
    }

    /// Denomination `a_i` with 1-based `i`.
    pub fn a(&self, i: usize) -> u64 {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl TryFrom<Vec<u64>> for StampSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        StampSet::new(v)
    }
}

impl From<StampSet> for Vec<u64> {
    fn from(s: StampSet) -> Self {
        s.0
    }
}

/// Parses `"1,4,26,35"`; whitespace and surrounding braces are tolerated.
impl FromStr for StampSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let values = body
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u64>()
                    .map_err(|_| Error::InvalidSet(format!("not a positive integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        StampSet::new(values)
    }
}

impl fmt::Display for StampSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Stamp multiplicities `c_1..c_k`, stored with `c_1` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation(pub Vec<u32>);

impl Representation {
    pub fn coefficients(&self) -> &[u32] {
        &self.0
    }

    /// Multiplicity of `a_i`, 1-based.
    pub fn c(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Multiplicity of the largest denomination.
    pub fn top(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn value(&self, denominations: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(denominations)
            .map(|(&c, &a)| u64::from(c) * a)
            .sum()
    }
}

/// Written highest denomination first, `[c_k, ..., c_1]`.
impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}
