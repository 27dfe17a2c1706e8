//! Text grammar for polynomials:
//!
//! ```text
//! poly := term (('+'|'-') term)*
//! term := [coef '*'] word | coef
//! coef := nat ['/' nat]
//! word := gen ('*' gen)*
//! gen  := 'a' nat | 'b' nat | 'ea(' nat ')' | 'eab(' nat ')' | 'eb(' nat ')'
//! ```
//!
//! A leading sign is allowed on the first term. Whitespace is ignored.
//! Parsing happens in two stages: [`parse_syntax`] produces generator tokens
//! without knowing the alphabet, and [`parse_poly`] resolves them against a
//! window (which fixes degrees of `a_k`/`b_k`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraError, Alphabet, GenKind, Generator, OrderSpec, Polynomial, Word};
use crate::field::Field;

/// A generator as written, before resolution against an alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub kind: GenKind,
    pub index: u32,
    /// Byte offset of the token in the source text.
    pub pos: usize,
}

impl Token {
    fn render(&self) -> String {
        match self.kind {
            GenKind::A => format!("a{}", self.index),
            GenKind::B => format!("b{}", self.index),
            GenKind::EAlpha => format!("ea({})", self.index),
            GenKind::EAlphaBeta => format!("eab({})", self.index),
            GenKind::EBeta => format!("eb({})", self.index),
        }
    }
}

/// One parsed term: a signed rational coefficient `num/den` and its word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedTerm {
    pub num: BigInt,
    pub den: BigInt,
    pub word: Vec<Token>,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), AlgebraError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn nat(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a decimal number");
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse::<BigInt>().expect("digits parse"))
    }

    fn small_nat(&mut self) -> Result<u32, AlgebraError> {
        let start = self.pos;
        let n = self.nat()?;
        u32::try_from(n).or_else(|_| Err(AlgebraError::Parse { pos: start, msg: "index too large".to_string() }))
    }

    fn gen(&mut self) -> Result<Token, AlgebraError> {
        let c = self.peek();
        let pos = self.pos;
        match c {
            Some(b'a') => {
                self.pos += 1;
                Ok(Token { kind: GenKind::A, index: self.small_nat()?, pos })
            }
            Some(b'b') => {
                self.pos += 1;
                Ok(Token { kind: GenKind::B, index: self.small_nat()?, pos })
            }
            Some(b'e') => {
                self.pos += 1;
                let kind = match self.src.get(self.pos) {
                    Some(b'a') if self.src.get(self.pos + 1) == Some(&b'b') => {
                        self.pos += 2;
                        GenKind::EAlphaBeta
                    }
                    Some(b'a') => {
                        self.pos += 1;
                        GenKind::EAlpha
                    }
                    Some(b'b') => {
                        self.pos += 1;
                        GenKind::EBeta
                    }
                    _ => return self.err("expected 'ea(', 'eab(' or 'eb('"),
                };
                self.expect(b'(')?;
                let index = self.small_nat()?;
                self.expect(b')')?;
                if index == 0 {
                    return Err(AlgebraError::Parse { pos, msg: "divided powers start at 1".to_string() });
                }
                Ok(Token { kind, index, pos })
            }
            _ => self.err("expected a generator"),
        }
    }

    fn word_after_first(&mut self, first: Token) -> Result<Vec<Token>, AlgebraError> {
        let mut word = alloc::vec![first];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            word.push(self.gen()?);
        }
        Ok(word)
    }

    fn term(&mut self, sign: BigInt) -> Result<ParsedTerm, AlgebraError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.nat()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.nat()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                let word = if self.peek() == Some(b'*') {
                    self.pos += 1;
                    let g = self.gen()?;
                    self.word_after_first(g)?
                } else {
                    Vec::new()
                };
                Ok(ParsedTerm { num: sign * num, den, word })
            }
            Some(_) => {
                let g = self.gen()?;
                Ok(ParsedTerm { num: sign, den: BigInt::one(), word: self.word_after_first(g)? })
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse text into terms without resolving generators.
pub fn parse_syntax(text: &str) -> Result<Vec<ParsedTerm>, AlgebraError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut sign = BigInt::one();
    match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            sign = -sign;
        }
        Some(b'+') => cur.pos += 1,
        _ => {}
    }
    terms.push(cur.term(sign)?);
    loop {
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                terms.push(cur.term(BigInt::one())?);
            }
            Some(b'-') => {
                cur.pos += 1;
                terms.push(cur.term(-BigInt::one())?);
            }
            Some(_) => return cur.err("expected '+', '-' or end of input"),
        }
    }
    Ok(terms)
}

fn resolve(tokens: &[Token], alphabet: &Alphabet) -> Result<Word, AlgebraError> {
    tokens
        .iter()
        .map(|t| alphabet.lookup(t.kind, t.index).ok_or_else(|| AlgebraError::UnknownGenerator(t.render())))
        .collect::<Result<Vec<Generator>, _>>()
        .map(Word::new)
}

/// Parse a polynomial over `field`, resolving generators in `alphabet`.
pub fn parse_poly<F: Field>(
    text: &str,
    field: &F,
    alphabet: &Alphabet,
    order: &OrderSpec,
) -> Result<Polynomial<F>, AlgebraError> {
    let mut terms = Vec::new();
    for t in parse_syntax(text)? {
        let word = resolve(&t.word, alphabet)?;
        order.validate_word(&word)?;
        let den = field.from_bigint(&t.den);
        let inv = field.inv(&den).ok_or_else(|| AlgebraError::Parse {
            pos: t.word.first().map_or(0, |g| g.pos),
            msg: "denominator vanishes in this characteristic".to_string(),
        })?;
        terms.push((word, field.mul(&field.from_bigint(&t.num), &inv)));
    }
    Ok(Polynomial::from_terms(field.clone(), order.clone(), terms))
}

/// Parse a single word such as `a0*b1`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, AlgebraError> {
    let terms = parse_syntax(text)?;
    match terms.as_slice() {
        [t] if t.num.is_one() && t.den.is_one() => resolve(&t.word, alphabet),
        _ => Err(AlgebraError::Parse { pos: 0, msg: "expected a single word".to_string() }),
    }
}

/// Render a word as `a0*b1`; the empty word renders as `1`.
pub fn format_word(w: &Word) -> String {
    w.to_string()
}

/// Render a polynomial with terms in descending order, e.g. `b0*a1 - a0*b0*a0`.
pub fn format_poly<F: Field>(f: &Polynomial<F>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let field = f.field();
    let mut out = String::new();
    for (i, (w, c)) in f.terms().iter().enumerate() {
        let (neg, mag) = field.signed_parts(c);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if w.is_empty() {
            out.push_str(&mag);
        } else {
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&w.to_string());
        }
    }
    out
}
