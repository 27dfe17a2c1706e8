//! Elements of the free modules `P_n` in the basis `N_n = {m.t}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};

use super::Level;
use crate::field::Field;
use crate::free_algebra::{Degree, OrderSpec, Polynomial, Word};

/// The basis element `m.t` of `P_n`: an irreducible word `m` acting on the
/// generator `.t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElem {
    pub m: Word,
    pub t: Word,
}

impl BasisElem {
    pub fn new(m: Word, t: Word) -> Self {
        BasisElem { m, t }
    }

    pub fn generator(t: Word) -> Self {
        BasisElem { m: Word::empty(), t }
    }

    pub fn degree(&self) -> Degree {
        self.m.degree() + self.t.degree()
    }

    pub fn deg(&self) -> u32 {
        self.m.deg() + self.t.deg()
    }

    /// Render as `m.t`, with `e` for the unit chain and no `m` when `m = 1`.
    pub fn render(&self, level: Level) -> String {
        let mut s = String::new();
        if !self.m.is_empty() {
            let _ = write!(s, "{}", self.m);
        }
        s.push('.');
        if level == Level::Unit {
            s.push('e');
        } else {
            let _ = write!(s, "{}", self.t);
        }
        s
    }
}

/// The order on `N_n`: compare `mt`, then `t`, then `m`.
pub fn cmp_basis(order: &OrderSpec, x: &BasisElem, y: &BasisElem) -> Ordering {
    order
        .cmp_concat(&[&x.m, &x.t], &[&y.m, &y.t])
        .then_with(|| order.cmp(&x.t, &y.t))
        .then_with(|| order.cmp(&x.m, &y.m))
}

/// A finite combination `Σ c · m.t` in `P_n`, kept in descending basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement<F: Field> {
    field: F,
    order: OrderSpec,
    level: Level,
    terms: Vec<(BasisElem, F::Elem)>,
}

impl<F: Field> ModuleElement<F> {
    pub fn zero(field: F, order: OrderSpec, level: Level) -> Self {
        ModuleElement { field, order, level, terms: Vec::new() }
    }

    pub fn basis(field: F, order: OrderSpec, level: Level, b: BasisElem) -> Self {
        let one = field.one();
        ModuleElement { field, order, level, terms: alloc::vec![(b, one)] }
    }

    /// Sort, combine and drop zero coefficients.
    pub fn from_terms<I>(field: F, order: OrderSpec, level: Level, terms: I) -> Self
    where
        I: IntoIterator<Item = (BasisElem, F::Elem)>,
    {
        let mut v: Vec<(BasisElem, F::Elem)> = terms.into_iter().collect();
        v.sort_by(|a, b| cmp_basis(&order, &b.0, &a.0));
        let mut out: Vec<(BasisElem, F::Elem)> = Vec::with_capacity(v.len());
        for (b, c) in v {
            match out.last_mut() {
                Some((lb, lc)) if *lb == b => *lc = field.add(lc, &c),
                _ => out.push((b, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        ModuleElement { field, order, level, terms: out }
    }

    /// `c · r.t` for a polynomial coefficient `r` in normal form.
    pub fn from_coefficient(r: &Polynomial<F>, t: &Word, level: Level) -> Self {
        // Right multiplication by a fixed word is monotone, so `r`'s
        // descending terms stay descending; ties are impossible.
        let terms = r.terms().iter().map(|(m, c)| (BasisElem::new(m.clone(), t.clone()), c.clone())).collect();
        ModuleElement { field: r.field().clone(), order: r.order().clone(), level, terms }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn terms(&self) -> &[(BasisElem, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The greatest term.
    pub fn leading_term(&self) -> Option<&(BasisElem, F::Elem)> {
        self.terms.first()
    }

    pub fn coefficient(&self, b: &BasisElem) -> F::Elem {
        self.terms
            .binary_search_by(|(x, _)| cmp_basis(&self.order, b, x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    /// The algebra coefficient `r_t` with `self = Σ_t r_t.t`.
    pub fn coordinate(&self, t: &Word) -> Polynomial<F> {
        Polynomial::from_terms(
            self.field.clone(),
            self.order.clone(),
            self.terms.iter().filter(|(b, _)| b.t == *t).map(|(b, c)| (b.m.clone(), c.clone())).collect::<Vec<_>>(),
        )
    }

    /// The chains with a nonzero coordinate, without repetition.
    pub fn support_chains(&self) -> Vec<Word> {
        let mut ts: Vec<Word> = self.terms.iter().map(|(b, _)| b.t.clone()).collect();
        ts.sort();
        ts.dedup();
        ts
    }

    /// Distinct degrees in the support, ascending.
    pub fn degrees(&self) -> Vec<Degree> {
        let mut d: Vec<Degree> = self.terms.iter().map(|(b, _)| b.degree()).collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Largest `Deg` in the support (0 for the zero element).
    pub fn max_deg(&self) -> u32 {
        self.terms.iter().map(|(b, _)| b.deg()).max().unwrap_or(0)
    }

    /// `self + c·other`, merging two descending lists.
    pub fn add_scaled(&self, c: &F::Elem, other: &Self) -> Self {
        assert_eq!(self.level, other.level, "module elements at different levels");
        let f = &self.field;
        if f.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match cmp_basis(&self.order, &a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), f.mul(c, &b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&a[i].1, &f.mul(c, &b[j].1));
                    if !f.is_zero(&s) {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(x, d)| (x.clone(), f.mul(c, d))));
        ModuleElement { field: self.field.clone(), order: self.order.clone(), level: self.level, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&self.field.one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&self.field.neg(&self.field.one()), other)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f.clone(), self.order.clone(), self.level);
        }
        let terms = self.terms.iter().map(|(b, d)| (b.clone(), f.mul(c, d))).collect();
        ModuleElement { field: f.clone(), order: self.order.clone(), level: self.level, terms }
    }

    /// The part of `self` with scalar coordinates, i.e. terms `c · 1.t`.
    pub fn scalar_part(&self) -> Vec<(Word, F::Elem)> {
        self.terms.iter().filter(|(b, _)| b.m.is_empty()).map(|(b, c)| (b.t.clone(), c.clone())).collect()
    }

    /// Relabel the level (used when a submodule is re-read as another free module).
    pub fn with_level(mut self, level: Level) -> Self {
        self.level = level;
        self
    }
}

impl<F: Field> fmt::Display for ModuleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = self.field.signed_parts(c);
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != "1" {
                write!(f, "{mag}")?;
                if !b.m.is_empty() {
                    f.write_str("*")?;
                }
            }
            f.write_str(&b.render(self.level))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::free_algebra::Generator;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn sorted_and_combined() {
        let (a, b) = (Generator::a(0, 3), Generator::b(0, 3));
        let o = OrderSpec::deglex();
        let x = BasisElem::new(Word::letter(a), Word::letter(b));
        let y = BasisElem::new(Word::letter(b), Word::letter(a));
        let e = ModuleElement::from_terms(f3(), o.clone(), Level::Letter, [(x.clone(), 1), (y.clone(), 2), (x.clone(), 2)]);
        // a·b = ab < ba, and the two copies of x cancel mod 3.
        assert_eq!(e.len(), 1);
        assert_eq!(e.leading_term().unwrap().0, y);
        assert_eq!(e.to_string(), "-b0.a0");
        let z = e.add_scaled(&1, &e);
        assert_eq!(z.coefficient(&y), 1);
    }

    #[test]
    fn tie_break_on_chain() {
        // Same product `a0 b0`, different splittings.
        let (a, b) = (Generator::a(0, 3), Generator::b(0, 3));
        let o = OrderSpec::deglex();
        let x = BasisElem::new(Word::letter(a), Word::letter(b));
        let y = BasisElem::new(Word::empty(), Word::from_slice(&[a, b]));
        assert_eq!(cmp_basis(&o, &y, &x), Ordering::Greater);
    }

    #[test]
    fn unit_rendering() {
        let a = Generator::a(0, 3);
        let e = ModuleElement::basis(f3(), OrderSpec::deglex(), Level::Unit, BasisElem::new(Word::letter(a), Word::empty()));
        assert_eq!(e.to_string(), "a0.e");
    }
}
