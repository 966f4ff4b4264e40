//! Coxeter systems: type specs, Coxeter matrices, and element arithmetic.
//!
//! Crystallographic finite types act on integer root coordinates; dihedral
//! types use alternating-word arithmetic. Generator indices are 1-based
//! everywhere in the public API.

mod dihedral;
mod matrix;
mod roots;
mod system;

pub use matrix::{CoxeterMatrix, CoxeterType};
pub use system::{ConjugacyClass, CoxeterSystem, Element, MAX_ENUMERATED};
