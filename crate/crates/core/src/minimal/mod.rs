//! From the Anick complex to the first steps of the minimal resolution.
//!
//! A graded resolution is minimal when every differential lands in the
//! radical (no scalar coordinates). The Anick complex of `G_m` fails this in
//! exactly one way: `d₂(.a_{k+1} b_k^p)` has a unit coefficient on
//! `.(b_k a_k)^p`. [`MinimalComplex`] cancels such pairs, and
//! [`minimality_report`] certifies smallness and exactness of the result and
//! reads off the `Ext` dimensions.

mod radical;
mod report;
mod surgery;

pub use radical::{radical_membership, scalar_coordinates, FreeGradedModule};
pub use report::{
    cancelled_lhs, cancelled_overlap, coefficient_lemma_checks, kostant_cancel_pairs, minimality_report,
    partner_overlap, reduced_chain_sets, report_on, window_minimal_complex, within, CoefficientCheck,
    CoefficientReport, GeneratorCheck, MinimalComplexReport, ReducedChainSets,
};
pub use surgery::{CancelPair, MinimalComplex, PrimeExactnessRow};

use crate::anick::AnickError;
use crate::free_algebra::Word;
use crate::kostant::KostantError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MinimalError {
    #[error("({u}, {w}) is not a level-one/level-two pair of equal degree")]
    NotAPair { u: Word, w: Word },
    #[error("a chain of ({u}, {w}) already occurs in another cancelled pair")]
    DuplicatePair { u: Word, w: Word },
    #[error("the coefficient of .{u} in d2(.{w}) is zero")]
    ZeroCoefficient { u: Word, w: Word },
    #[error("substitutes for the cancelled generators do not close up")]
    CyclicSubstitution,
    #[error("{word} is not a generator of the reduced module at level {level}")]
    NotInPrime { level: i8, word: Word },
    #[error(transparent)]
    Anick(#[from] AnickError),
    #[error(transparent)]
    Kostant(#[from] KostantError),
}
