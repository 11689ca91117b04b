//! Exact arithmetic for Majorana-fermion stabilizer codes.
//!
//! The crate is layered bottom-up: [`gf2`] linear algebra, the
//! [`majorana`] operator group with Jordan–Wigner conversion, the exact
//! sparse [`fock`] engine, qubit [`embed`]dings into Fock space, generic
//! stabilizer-code analysis in [`stab`], the concrete [`codes`], and the
//! [`e8`] root-system invariants.

pub mod codes;
pub mod e8;
pub mod embed;
pub mod error;
pub mod fock;
pub mod gf2;
pub mod majorana;
pub mod stab;

pub use error::*;
