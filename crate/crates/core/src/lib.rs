//! Finite involutory virtual biracks, their good involutions, and the
//! counting invariant of virtual links together with its symmetric
//! enhancement.
//!
//! Elements of a birack of order `n` are `0..n` internally and `1..=n` in every
//! textual format.

pub mod algebra;
pub mod census;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod labeling;
pub mod library;
pub mod perm;

pub use algebra::{Birack, BirackTable, Op};
pub use diagram::Diagram;
pub use error::{Error, Result};
pub use perm::Permutation;
