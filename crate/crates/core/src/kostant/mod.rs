//! The Kostant form `𝔘₃⁺(K)`: divided-power arithmetic, the small generators
//! `a_k = e_α^(p^k)`, `b_k = e_β^(p^k)`, the Gröbner basis `G_m` and the
//! straightening system on divided-power letters.
//!
//! [`KostantElement`] multiplication is the ground truth every rewriting
//! result is checked against.

mod big;
mod divided;
mod small;
mod suite;

use alloc::string::String;

pub use big::{big_rewrite_system, truncated_big_system, verify_big_rules, BigRule};
pub use divided::{multiply_divided, straighten_pair, DLetter, DividedMonomial, KostantElement, Root};
pub use small::{
    evaluate_poly, evaluate_word, families, small_generator, small_groebner_basis, small_relations, Family,
    NamedRelation, Window,
};
pub use suite::{
    dimension_check, express_alphabeta_power, oracle_agreement, relation_suite, DimensionReport, GenerationCheck,
    OracleAgreement, RelationCheck, RelationReport, SignVariantCheck,
};

use crate::field::NotPrime;
use crate::rewriting::RewriteError;

/// Lucas' theorem: `C(k + l, k) mod p`.
pub fn lucas_binomial(k: u64, l: u64, p: u32) -> u32 {
    crate::field::lucas(k + l, k, p)
}

/// Errors from Kostant-form constructions.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KostantError {
    #[error(transparent)]
    NotPrime(#[from] NotPrime),
    #[error("empty window: need j < m, got j={j}, m={m}")]
    EmptyWindow { j: u32, m: u32 },
    #[error("window p={p}, m={m} overflows the degree range")]
    WindowTooLarge { p: u32, m: u32 },
    #[error("relation {relation} does not vanish in the Kostant form: {poly}")]
    OracleViolation { relation: String, poly: String },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
