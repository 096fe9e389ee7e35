//! Finite partition calculus: partitions `[m]^n -> r`, homogeneous and
//! relatively large sets, the arrow relations `m -> (k)^n_r` and
//! `m ->* (k)^n_r`, reductions between partitions, partition codes and the
//! fast-growing hierarchy.
//!
//! The ground set of a partition with parameter `m` is `{0, .., m-1}`.

mod coding;
mod fast_growing;
mod homog;
mod reductions;
mod partition;
mod search;

pub use coding::{decode_partition, encode_partition, PartitionCode, DEFAULT_MAX_CODE_BITS};
pub use fast_growing::{fast_growing, FastGrowingBudget};
pub use homog::{
    check_subset_criterion, find_homogeneous, homog_report, is_homogeneous, is_relatively_large,
    HomogReport,
};
pub use reductions::{ceil_sqrt, combine, product_color_bound, product_partition, raise_arity};
pub use partition::{binom, Partition, Subsets};
pub use search::{
    arrow, decide, min_witness, ph_arrow, ArrowOutcome, Relation, SearchConfig, DEFAULT_ENUM_CAP,
    ENUM_CAP_ENV,
};

use crate::BigNat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RamseyError {
    #[error("InvalidParameters: {0}")]
    InvalidParameters(String),
    #[error("BadSubset: {0}")]
    BadSubset(String),
    #[error("EmptySet: a relatively large set must be nonempty")]
    EmptySet,
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("SearchSpaceTooLarge: {required} colorings exceed the cap of {cap}")]
    SearchSpaceTooLarge { cap: u64, required: BigNat },
    #[error("NotACode: {0}")]
    NotACode(String),
    #[error("CodeTooLarge: the code needs about {bits} bits, over the limit of {limit}")]
    CodeTooLarge { bits: u64, limit: u64 },
    #[error("BudgetExceeded: {reason} after {iterations} iterations")]
    BudgetExceeded { iterations: u64, reason: String },
    #[error("BadPartitionFile: line {line}: {message}")]
    BadPartitionFile { line: usize, message: String },
}
