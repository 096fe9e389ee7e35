//! Partial and primitive recursive functions as definition trees.

mod bezout;
mod def;
mod dsl;
mod eval;
mod stdlib;

pub use bezout::bezout_inverse;
pub use def::{PRDef, PrError};
pub use dsl::parse_def;
pub use eval::{eval, eval_u64, EvalOutcome};
pub use stdlib::{stdlib, STDLIB_NAMES};
