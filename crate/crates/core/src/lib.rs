//! Workbench for first-order arithmetic: formulas of the language of
//! arithmetic, Gödel numbering, primitive recursive functions, and finite
//! Ramsey / Paris–Harrington partition calculus.
//!
//! With the default `parallel` feature the Ramsey search splits its
//! enumeration over a rayon pool; without it every search runs sequentially
//! and produces the same results.

pub mod formula;
pub mod godel;
pub mod ramsey;
pub mod recursive;

/// Arbitrary-precision natural number; the carrier of every code.
pub type BigNat = num_bigint::BigUint;
