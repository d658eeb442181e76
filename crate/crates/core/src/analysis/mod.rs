//! Desk-scale experiments over families of graphs.

mod distinctness;
mod ranking;
mod sweep;
mod trees;

pub use distinctness::{distinctness_experiment, DistinctnessReport, TreeRecord};
pub use ranking::{rank_structures, RankingEntry};
pub use sweep::{bn_sweep, BnSweep, SweepRow};
pub use trees::{enumerate_trees, free_tree_code, MAX_TREE_VERTICES};

pub use crate::canon::{canonical_form, CanonicalForm};

/// Default absolute tolerance for treating two estimations as equal.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
