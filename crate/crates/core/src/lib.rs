//! Permutation and local permutation polynomials over small finite fields.
//!
//! The crate builds F_q, the reduced multivariate ring over it, every
//! (local) permutation polynomial family of maximum degree that has a known
//! explicit construction, and exhaustive checkers for the permutation,
//! local permutation, and degree properties.
//!
//! A polynomial `f` in n variables is a *permutation polynomial* (PP) when
//! every value of F_q has exactly q^(n−1) preimages in F_q^n, and a *local
//! permutation polynomial* (LPP) when fixing any n−1 of its variables leaves
//! a bijection in the remaining one.

pub mod combinat;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod gf;
pub mod limits;
pub mod mvpoly;
pub mod univ;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use gf::{make_field, Elem, FieldDesc, FieldSpec};
pub use mvpoly::{Degrees, FuncTable, MultiPoly, PolyJson};
