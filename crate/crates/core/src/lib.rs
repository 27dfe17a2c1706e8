//! Exact noncommutative Gröbner-basis machinery for the Kostant form of
//! `U(sl3+)` and the first steps of its minimal resolution.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`] — exact coefficient fields (`F_p` residues and rationals).
//! * [`free_algebra`] — words, monomial orders and polynomials over a
//!   windowed generator alphabet, plus a small text grammar.
//! * [`rewriting`] — rewriting systems, normal forms, critical pairs,
//!   completeness/reducedness certificates and bounded completion.
//! * [`kostant`] — divided-power (PBW) arithmetic used as a ground-truth
//!   oracle, the small Gröbner basis `G_m`, and the big straightening system.
//! * [`anick`] — Anick chains up to level two, the free modules they index,
//!   the differentials and contracting maps, and graded rank checks.
//! * [`minimal`] — radical tests and the surgery that turns the Anick
//!   complex into the first steps of the minimal resolution.
//!
//! Everything is `no_std` + `alloc`; the `sl3res` crate layers IO on top.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod anick;
pub mod field;
pub mod free_algebra;
pub mod kostant;
pub mod linalg;
pub mod minimal;
pub mod rewriting;

pub use field::{Field, FieldSpec, Fp, Rationals};
pub use free_algebra::{
    Alphabet, Degree, GenKind, Generator, OrderSpec, Polynomial, Ranking, Word,
};
pub use rewriting::{CriticalPair, RewriteRule, RewriteSystem};
