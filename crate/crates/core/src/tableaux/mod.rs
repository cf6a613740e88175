//! Shifted shapes, semistandard shifted tableaux and words over the marked alphabet.

mod letter;
mod shape;
mod tableau;
mod word;

pub use letter::Letter;
pub use shape::{Cell, SkewShape, StrictPartition};
pub use tableau::ShiftedTableau;
pub use word::{parse_letters, RawWord, StandardWord, Weight, Word};

pub(crate) use word::{first_occurrences, standard_ranks, toggle_all};
