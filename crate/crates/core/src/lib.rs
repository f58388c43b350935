//! Gap structure of postage stamp bases.
//!
//! For a base `A_k = {1, a_2, ..., a_k}` this crate computes the h-range
//! `n(h)`, the admissibility level `h0`, the stabilisation levels `h1` and
//! `h2`, the classification of every value in the window
//! `n(h0-1) < x < (h0-1)·a_k` into pre-filled values, m-gaps and permanent
//! gaps, and the vector `d(h)` of gaps filled at each level.
//!
//! Two independent classifiers are provided: [`analysis::classify_a`] works
//! from a horizon level `H >= h2` downwards, [`propagation::classify_b`]
//! scans level `h0` and propagates gap orders backwards. The
//! [`enumeration`] and [`scanner`] modules walk every base with a given
//! `h0` looking for sets where `d(h)` increases.

pub mod analysis;
pub mod derivation;
pub mod enumeration;
mod error;
pub mod propagation;
pub mod render;
pub mod represent;
pub mod scanner;
mod set;
pub mod verify;

pub use analysis::{GapAnalysis, GapClass, Violation};
pub use error::{Error, Result};
pub use set::{Level, Representation, StampSet};
