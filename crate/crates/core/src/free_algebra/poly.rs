use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Degree, Generator, OrderSpec, Word};
use crate::field::Field;

/// A polynomial in the free associative algebra `K⟨X⟩`.
///
/// Terms are stored strictly descending in the polynomial's monomial order
/// with no zero coefficients, so the leading term is `terms[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    order: OrderSpec,
    terms: Vec<(Word, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, order: OrderSpec) -> Self {
        Polynomial { field, order, terms: Vec::new() }
    }

    pub fn monomial(field: F, order: OrderSpec, word: Word, coeff: F::Elem) -> Self {
        let terms = if field.is_zero(&coeff) { Vec::new() } else { alloc::vec![(word, coeff)] };
        Polynomial { field, order, terms }
    }

    /// `1·w`.
    pub fn word(field: F, order: OrderSpec, word: Word) -> Self {
        let one = field.one();
        Self::monomial(field, order, word, one)
    }

    /// The constant polynomial `c·e`.
    pub fn constant(field: F, order: OrderSpec, c: F::Elem) -> Self {
        Self::monomial(field, order, Word::empty(), c)
    }

    /// Collect arbitrary terms: sort, combine equal words, drop zeros.
    ///
    /// Panics if a word uses letters outside the order's domain; use
    /// [`Polynomial::try_from_terms`] for unvalidated input.
    pub fn from_terms<I>(field: F, order: OrderSpec, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, F::Elem)>,
    {
        let mut v: Vec<(Word, F::Elem)> = terms.into_iter().collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Word, F::Elem)> = Vec::with_capacity(v.len());
        for (w, c) in v {
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((w, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if field.is_zero(lc) {
                out.pop();
            }
        }
        Polynomial { field, order, terms: out }
    }

    pub fn try_from_terms<I>(field: F, order: OrderSpec, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Word, F::Elem)>,
    {
        let v: Vec<(Word, F::Elem)> = terms.into_iter().collect();
        for (w, _) in &v {
            order.validate_word(w)?;
        }
        Ok(Self::from_terms(field, order, v))
    }

    /// Build from terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(field: F, order: OrderSpec, terms: Vec<(Word, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !field.is_zero(c)));
        Polynomial { field, order, terms }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[(Word, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Word, F::Elem)> {
        self.terms
    }

    /// The support `supp(f)` in descending order.
    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.iter().map(|(w, _)| w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `lt(f)`: the order-maximal word and its coefficient.
    pub fn leading_term(&self) -> Result<(&Word, &F::Elem), AlgebraError> {
        self.terms.first().map(|(w, c)| (w, c)).ok_or(AlgebraError::EmptyPolynomial)
    }

    /// `lm(f)`, if `f != 0`.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    pub fn coefficient(&self, w: &Word) -> F::Elem {
        self.terms
            .binary_search_by(|(v, _)| self.order.cmp(w, v))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    /// The common degree of all terms, or `None` if `f` is zero or inhomogeneous.
    pub fn degree(&self) -> Option<Degree> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(w, _)| w.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field.spec(), other.field.spec()));
        }
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch);
        }
        Ok(())
    }

    /// `self + c·other`, merging two descending term lists.
    pub fn checked_add_scaled(&self, c: &F::Elem, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.add_scaled_terms(c, &other.terms))
    }

    /// `self + c·Σ terms` where `terms` is strictly descending.
    pub(crate) fn add_scaled_terms(&self, c: &F::Elem, terms: &[(Word, F::Elem)]) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < terms.len() {
            match self.order.cmp(&self.terms[i].0, &terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((terms[j].0.clone(), f.mul(c, &terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&self.terms[i].1, &f.mul(c, &terms[j].1));
                    if !f.is_zero(&s) {
                        out.push((self.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(terms[j..].iter().map(|(w, d)| (w.clone(), f.mul(c, d))));
        Polynomial { field: self.field.clone(), order: self.order.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add_scaled(&self.field.one(), other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add_scaled(&self.field.neg(&self.field.one()), other)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.order.clone());
        }
        let terms = self.terms.iter().map(|(w, d)| (w.clone(), self.field.mul(c, d))).collect();
        Polynomial { field: self.field.clone(), order: self.order.clone(), terms }
    }

    /// `u · f · v`; monoidality keeps the terms sorted.
    pub fn sandwich(&self, u: &[Generator], v: &[Generator]) -> Self {
        let terms = self.terms.iter().map(|(w, c)| (w.sandwich(u, v), c.clone())).collect();
        Polynomial { field: self.field.clone(), order: self.order.clone(), terms }
    }

    /// Free multiplication: concatenate words, multiply coefficients.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let f = &self.field;
        let terms = self.terms.iter().flat_map(|(u, c)| {
            other.terms.iter().map(move |(v, d)| (u.concat(v), f.mul(c, d)))
        });
        Ok(Self::from_terms(self.field.clone(), self.order.clone(), terms.collect::<Vec<_>>()))
    }

    /// The same polynomial re-sorted under another order.
    pub fn with_order(&self, order: OrderSpec) -> Self {
        Self::from_terms(self.field.clone(), order, self.terms.clone())
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&self.field.neg(&self.field.one()))
    }
}
