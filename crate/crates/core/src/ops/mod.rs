//! Lattice walks, critical substrings and the operators `F_i`, `E_i`, `F'_i`, `E'_i`.

mod critical;
mod operators;
mod walk;

pub use critical::{critical_substrings, final_critical_substring, CriticalKind, CriticalMatch, Side};
pub use operators::{
    alternate_e2prime, alternate_e2prime_with, apply, apply_to_tableau, LoneTwo, primed_by_standardization, Family, OpKind,
};
pub use walk::{lattice_walk, Dir, Point, Step, Walk};
