//! Crystal-like operators on shifted semistandard tableaux.

pub mod axioms;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod ops;
pub mod tableaux;

pub use error::{Error, Result};
pub use tableaux::{Letter, RawWord, ShiftedTableau, SkewShape, StandardWord, StrictPartition, Weight, Word};
