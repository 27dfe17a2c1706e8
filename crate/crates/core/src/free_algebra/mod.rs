//! Words, monomial orders and polynomials over a windowed generator alphabet.
//!
//! Two alphabets coexist in one [`Generator`] type: the "small" generators
//! `a_k`, `b_k` (degrees `p^k α` and `p^k β`) and the divided-power
//! generators `e_α^(k)`, `e_{α+β}^(k)`, `e_β^(k)`. Converting between them is
//! always explicit, see [`Word::expand_small`].

mod degree;
mod generator;
mod order;
mod parse;
mod poly;
mod word;

use alloc::string::String;

pub use degree::Degree;
pub use generator::{Alphabet, GenKind, Generator};
pub use order::{phi_map, OrderSpec, Ranking};
pub use parse::{format_poly, format_word, parse_poly, parse_syntax, parse_word, ParsedTerm, Token};
pub use poly::Polynomial;
pub use word::Word;

use crate::field::FieldSpec;

/// Errors raised by free-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("polynomials carry different monomial orders")]
    OrderMismatch,
    #[error("the zero polynomial has no leading term")]
    EmptyPolynomial,
    #[error("generator {0} is not ranked by the order")]
    OrderDomain(String),
    #[error("generator {0} is outside the alphabet window")]
    UnknownGenerator(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator degree overflows u32")]
    DegreeOverflow,
}
