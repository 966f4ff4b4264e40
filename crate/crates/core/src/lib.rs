//! Exact computations in Coxeter groups and their Iwahori-Hecke algebras.
//!
//! * [`poly`]: integer polynomials in `q`.
//! * [`coxeter`]: Coxeter systems, normal forms, Bruhat order.
//! * [`hecke`]: the Hecke algebra over `Z[q]` in its standard basis, structure
//!   constants `N(w, w', w'')` and regular traces.
//! * [`eset`]: the sets `E(w) = { z : N(w, z, z) != 0 }` with `d(w)` and `E'(w)`.
//! * [`flag`]: complete flags over prime fields, relative position, and brute
//!   force point counts checked against the Hecke side.
//! * [`cli`]: the `coxhecke` command-line front end.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod eset;
pub mod flag;
pub mod hecke;
pub mod poly;

pub use coxeter::{CoxeterSystem, CoxeterType, Element};
pub use error::{Error, Result};
pub use hecke::HeckeElt;
pub use poly::IntPoly;
