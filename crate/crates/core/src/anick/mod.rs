//! The Anick resolution of the trivial module, up to `P₂`.
//!
//! [`ChainSets`] holds the chains `T₀, T₁, T₂`; [`AnickComplex`] computes the
//! maps `δ_n`, `j_n`, `d_n`, `i_n`; [`graded`](self::graded_matrices) turns the
//! differentials into per-degree matrices for rank-based exactness
//! certificates.

mod chains;
mod complex;
mod graded;
mod module;

use alloc::string::String;

pub use chains::{degree_table, matches_w, t1_set, t2_set, two_chains, Chain, ChainSets, Level, TwoChain};
pub use complex::AnickComplex;
pub use graded::{
    complex_check, exactness_check, graded_matrices, words_by_degree, ComplexCheck, ExactnessReport, ExactnessRow,
    GradedBasis, GradedMatrix,
};
pub use module::{cmp_basis, BasisElem, ModuleElement};

use crate::field::Fp;
use crate::free_algebra::Word;
use crate::kostant::{small_groebner_basis, KostantError, Window};

/// Errors from chain enumeration and the resolution maps.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AnickError {
    #[error("leading words do not form an anti-chain: {inner} is a factor of {outer}")]
    NotAntichain { inner: Word, outer: Word },
    #[error("minimal overlap tip {tip} has more than one witness pair")]
    AmbiguousOverlap { tip: Word },
    #[error("the rewriting system is not reduced")]
    NotReduced,
    #[error("the rewriting system is not complete ({failures} critical pairs fail)")]
    Incomplete { failures: usize },
    #[error("{word} is not a chain of level {level}")]
    NotAChain { level: i8, word: Word },
    #[error("module coefficient {word} is reducible")]
    ReducibleCoefficient { word: Word },
    #[error("expected an element of level {expected}, found level {found}")]
    LevelMismatch { expected: i8, found: i8 },
    #[error("element of P_{level} is not a cycle")]
    NotACycle { level: i8 },
    #[error("i_{level}: leading term {term} has no lift")]
    NoLift { level: i8, term: String },
    #[error("i_{level}: leading term {term} did not decrease")]
    NotDecreasing { level: i8, term: String },
    #[error("i_{level}: step budget {steps} exhausted")]
    BudgetExceeded { level: i8, steps: usize },
    #[error("{term} factors against more than one chain")]
    AmbiguousFactorization { term: String },
    #[error("term {term} of degree {degree} is outside the enumerated basis")]
    OutsideBasis { term: String, degree: String },
    #[error(transparent)]
    Kostant(#[from] KostantError),
}

/// The Anick complex of `G_m` on a generator window.
pub fn window_complex(win: &Window) -> Result<AnickComplex<Fp>, AnickError> {
    AnickComplex::new(small_groebner_basis(win)?)
}
