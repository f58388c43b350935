#![allow(dead_code)]

pub mod oracle;
pub mod published;

use stamp_gaps::StampSet;

pub fn set(v: &[u64]) -> StampSet {
    StampSet::new(v.to_vec()).unwrap()
}
