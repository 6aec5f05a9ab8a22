//! Finite matroids on ground sets of at most 64 elements.
//!
//! A matroid is stored as its canonical circuit family; rank, closure,
//! flats and duality are all derived from the independence test "contains
//! no circuit". On top of that sit constructors for the usual sources
//! (uniform, linear over prime fields, graphic, a small named catalog),
//! duality and minors, and [`analyze`], which enumerates circuit-cocircuit
//! intersections and replays, step by checked step, the reduction of a
//! size-`k` intersection to a size-`k - 2` one for `k <= 6`.
//!
//! Minors keep the parent's element indices: a minor's ground set is a
//! sub-mask of the label table it shares with its parent, so sets never
//! need translating when they are lifted back.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analyze;
pub mod construct;
pub mod error;
pub mod matroid;
pub mod set;
pub mod transform;

pub use error::{Error, Result};
pub use matroid::{AxiomViolation, CircuitFamily, Matroid};
pub use set::{ElemSet, GroundSet};
pub use transform::MinorSpec;

/// Largest ground set for which exhaustive subset scans are attempted.
pub const SCAN_LIMIT: usize = 20;
