//! Memoised multiplication in the quotient algebra `K⟨X⟩/(G)`.
//!
//! For a complete system every element has a unique normal form, so the
//! product of irreducible words can be built one letter at a time from the
//! table `R(m, x) = NF(m·x)`. When `m·x` is reducible its only redexes end at
//! the last letter: `m·x = u·lhs`, and `R(m, x) = NF(u·rhs)`, which recurses
//! on words strictly below `m·x`. Each table entry is computed once, which is
//! far cheaper than rewriting long products from scratch.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::RewriteSystem;
use crate::field::Field;
use crate::free_algebra::{Generator, Polynomial, Word};

type Terms<F> = Vec<(Word, <F as Field>::Elem)>;

/// Right-multiplication table over the irreducible words of a complete system.
#[derive(Debug)]
pub struct ProductTable<F: Field> {
    sys: RewriteSystem<F>,
    right: RefCell<BTreeMap<(Word, Generator), Terms<F>>>,
}

impl<F: Field> ProductTable<F> {
    /// Every entry is reached by genuine reductions, so results lie in the
    /// same ideal class as their input. For a complete system they are the
    /// normal forms; otherwise they are one irreducible representative.
    pub fn new(sys: RewriteSystem<F>) -> Self {
        ProductTable { sys, right: RefCell::new(BTreeMap::new()) }
    }

    pub fn system(&self) -> &RewriteSystem<F> {
        &self.sys
    }

    /// Number of memoised entries.
    pub fn len(&self) -> usize {
        self.right.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `NF(m·x)` for an irreducible word `m`, as descending terms.
    fn right_terms(&self, m: &Word, x: Generator) -> Terms<F> {
        let key = (m.clone(), x);
        if let Some(t) = self.right.borrow().get(&key) {
            return t.clone();
        }
        let w = m.concat(&Word::letter(x));
        let terms = match self.sys.suffix_rules(&w).first() {
            None => alloc::vec![(w, self.sys.field().one())],
            Some(&r) => {
                let rule = &self.sys.rules()[r];
                let u = w.prefix(w.len() - rule.lhs.len());
                let mut acc = BTreeMap::new();
                for (rw, c) in rule.rhs.terms() {
                    let start = alloc::vec![(u.clone(), c.clone())];
                    for (t, d) in self.fold(start, rw.letters()) {
                        self.accumulate(&mut acc, t, d);
                    }
                }
                self.sorted(acc)
            }
        };
        self.right.borrow_mut().insert(key, terms.clone());
        terms
    }

    fn accumulate(&self, acc: &mut BTreeMap<Word, F::Elem>, w: Word, c: F::Elem) {
        let f = self.sys.field();
        let e = acc.entry(w).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
    }

    fn sorted(&self, acc: BTreeMap<Word, F::Elem>) -> Terms<F> {
        let f = self.sys.field();
        let mut v: Terms<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        v.sort_by(|a, b| self.sys.order().cmp(&b.0, &a.0));
        v
    }

    /// Multiply a combination of irreducible words by `letters` on the right.
    fn fold(&self, mut cur: Terms<F>, letters: &[Generator]) -> Terms<F> {
        let f = self.sys.field();
        for &y in letters {
            let mut acc = BTreeMap::new();
            for (w, c) in &cur {
                for (t, d) in self.right_terms(w, y) {
                    self.accumulate(&mut acc, t, f.mul(c, &d));
                }
            }
            cur = self.sorted(acc);
        }
        cur
    }

    fn poly(&self, terms: Terms<F>) -> Polynomial<F> {
        // `sorted` already yields strictly descending, nonzero terms.
        Polynomial::from_terms(self.sys.field().clone(), self.sys.order().clone(), terms)
    }

    /// `NF(w)` for any word.
    pub fn normal_form_word(&self, w: &Word) -> Polynomial<F> {
        let start = alloc::vec![(Word::empty(), self.sys.field().one())];
        self.poly(self.fold(start, w.letters()))
    }

    /// `NF(f)` for any polynomial. Each word is split after its longest
    /// irreducible prefix and the rest folded in letter by letter.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = BTreeMap::new();
        for (w, c) in f.terms() {
            let mut l = 0;
            while l < w.len() && self.sys.is_irreducible(&w.prefix(l + 1)) {
                l += 1;
            }
            let start = alloc::vec![(w.prefix(l), c.clone())];
            for (t, d) in self.fold(start, &w.letters()[l..]) {
                self.accumulate(&mut acc, t, d);
            }
        }
        self.poly(self.sorted(acc))
    }

    /// `NF(u·v)` for an irreducible `u`.
    pub fn mul_words(&self, u: &Word, v: &Word) -> Polynomial<F> {
        debug_assert!(self.sys.is_irreducible(u), "left factor must be irreducible");
        let start = alloc::vec![(u.clone(), self.sys.field().one())];
        self.poly(self.fold(start, v.letters()))
    }

    /// `NF(f·g)` for polynomials in normal form.
    pub fn mul(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
        let field = self.sys.field();
        let mut acc = BTreeMap::new();
        for (u, c) in f.terms() {
            for (v, d) in g.terms() {
                let cd = field.mul(c, d);
                for (t, e) in self.fold(alloc::vec![(u.clone(), cd)], v.letters()) {
                    self.accumulate(&mut acc, t, e);
                }
            }
        }
        self.poly(self.sorted(acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::{small_groebner_basis, Window};
    use crate::rewriting::irreducible_words;

    #[test]
    fn agrees_with_rewriting() {
        let sys = small_groebner_basis(&Window::full(3, 1).unwrap()).unwrap();
        let table = ProductTable::new(sys.clone());
        let words = irreducible_words(&sys, 8);
        for u in words.iter().step_by(3) {
            for v in words.iter().step_by(5) {
                let w = u.concat(v);
                assert_eq!(table.mul_words(u, v), sys.normal_form_word(&w), "{u} · {v}");
            }
        }
        assert!(!table.is_empty());
        let w = words[7].concat(&words[11]).concat(&words[5]);
        let f = Polynomial::from_terms(sys.field().clone(), sys.order().clone(), alloc::vec![(w.clone(), 1)]);
        assert_eq!(table.normal_form(&f), sys.normal_form_word(&w));
    }
}
