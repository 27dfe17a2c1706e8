//! Rewriting systems over the free algebra.
//!
//! A [`RewriteSystem`] is a finite set of rules `lhs → rhs` with every rhs
//! monomial strictly below its lhs in the system's monomial order. Reduction
//! always rewrites the order-greatest reducible monomial at its leftmost
//! redex, using the longest matching lhs (ties by insertion index), so results
//! of incomplete systems are deterministic too.

mod completion;
mod critical;
mod enumerate;
pub(crate) mod index;
mod product;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

pub use completion::{complete, interreduce};
pub use critical::{
    critical_pairs, find_overlaps, is_complete, is_complete_up_to, is_reduced, pair_is_reducible, s_polynomial, CompletenessCertificate,
    CriticalPair, OverlapKind, OverlapSkeleton,
};
pub use enumerate::{count_irreducible_words, irreducible_words};
pub use product::ProductTable;

use crate::field::Field;
use crate::free_algebra::{format_poly, AlgebraError, Alphabet, Generator, OrderSpec, Polynomial, Word};
use index::LhsIndex;

/// Errors raised while building or transforming rewriting systems.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("cannot build a rule from the zero polynomial")]
    ZeroPolynomial,
    #[error("rule {0} has an empty left-hand side")]
    EmptyLhs(String),
    #[error("rule {0} is not decreasing: some rhs monomial is not below the lhs")]
    NotDecreasing(String),
    #[error("two rules share the left-hand side {0}")]
    DuplicateLhs(String),
    #[error("letter {letter} of rule {rule} is outside the alphabet")]
    LetterOutsideAlphabet { rule: String, letter: String },
    #[error("rule {rule} leaves the subalphabet: rhs uses {letter}")]
    HypothesisViolation { rule: String, letter: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A rewriting rule `lhs → rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<F: Field> {
    pub lhs: Word,
    pub rhs: Polynomial<F>,
}

impl<F: Field> RewriteRule<F> {
    /// `r(p) = (lm(p), (lt(p) − p)/λ)` where `λ` is the leading coefficient.
    pub fn from_poly(p: &Polynomial<F>) -> Result<Self, RewriteError> {
        let (lm, lc) = p.leading_term().map_err(|_| RewriteError::ZeroPolynomial)?;
        let field = p.field();
        let inv = field.inv(lc).expect("leading coefficient is nonzero");
        let minus_inv = field.neg(&inv);
        let rhs = Polynomial::from_sorted_unchecked(
            field.clone(),
            p.order().clone(),
            p.terms()[1..].iter().map(|(w, c)| (w.clone(), field.mul(&minus_inv, c))).collect(),
        );
        Ok(RewriteRule { lhs: lm.clone(), rhs })
    }

    /// The polynomial `lhs − rhs` that the rule encodes.
    pub fn as_poly(&self) -> Polynomial<F> {
        let f = self.rhs.field().clone();
        let lhs = Polynomial::word(f, self.rhs.order().clone(), self.lhs.clone());
        &lhs - &self.rhs
    }

    fn describe(&self) -> String {
        format!("{} -> {}", self.lhs, format_poly(&self.rhs))
    }
}

/// A finite rewriting system with a monomial order and an alphabet window.
#[derive(Clone, Debug)]
pub struct RewriteSystem<F: Field> {
    field: F,
    order: OrderSpec,
    alphabet: Alphabet,
    rules: Vec<RewriteRule<F>>,
    index: LhsIndex,
}

impl<F: Field> RewriteSystem<F> {
    /// Validate and index a rule list.
    pub fn new(field: F, order: OrderSpec, alphabet: Alphabet, rules: Vec<RewriteRule<F>>) -> Result<Self, RewriteError> {
        for g in alphabet.letters() {
            order.validate_letter(g)?;
        }
        for r in &rules {
            if r.lhs.is_empty() {
                return Err(RewriteError::EmptyLhs(r.describe()));
            }
            if *r.rhs.field() != field {
                return Err(AlgebraError::FieldMismatch(r.rhs.field().spec(), field.spec()).into());
            }
            if *r.rhs.order() != order {
                return Err(AlgebraError::OrderMismatch.into());
            }
            for w in core::iter::once(&r.lhs).chain(r.rhs.support()) {
                if let Some(g) = w.letters().iter().find(|g| !alphabet.contains(g)) {
                    return Err(RewriteError::LetterOutsideAlphabet { rule: r.describe(), letter: g.to_string() });
                }
            }
            if r.rhs.leading_word().is_some_and(|w| order.cmp(w, &r.lhs) != Ordering::Less) {
                return Err(RewriteError::NotDecreasing(r.describe()));
            }
        }
        let mut lhs: Vec<&Word> = rules.iter().map(|r| &r.lhs).collect();
        lhs.sort();
        if let Some(w) = lhs.windows(2).find(|w| w[0] == w[1]) {
            return Err(RewriteError::DuplicateLhs(w[0].to_string()));
        }
        let patterns: Vec<&[Generator]> = rules.iter().map(|r| r.lhs.letters()).collect();
        let index = LhsIndex::build(&patterns);
        Ok(RewriteSystem { field, order, alphabet, rules, index })
    }

    /// Build a system from polynomials via [`RewriteRule::from_poly`].
    pub fn from_polys(
        field: F,
        order: OrderSpec,
        alphabet: Alphabet,
        polys: &[Polynomial<F>],
    ) -> Result<Self, RewriteError> {
        let rules = polys.iter().map(RewriteRule::from_poly).collect::<Result<Vec<_>, _>>()?;
        Self::new(field, order, alphabet, rules)
    }

    pub fn empty(field: F, order: OrderSpec, alphabet: Alphabet) -> Self {
        Self::new(field, order, alphabet, Vec::new()).expect("empty system is valid")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule<F>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Index of the rule with the given lhs.
    pub fn rule_index(&self, lhs: &Word) -> Option<usize> {
        self.rules.iter().position(|r| r.lhs == *lhs)
    }

    /// The same rules sorted ascending by lhs under the system order.
    pub fn sorted(&self) -> Self {
        let mut rules = self.rules.clone();
        rules.sort_by(|a, b| self.order.cmp(&a.lhs, &b.lhs));
        Self::new(self.field.clone(), self.order.clone(), self.alphabet.clone(), rules).expect("same rules")
    }

    /// A copy without the rule at `i`.
    pub fn without_rule(&self, i: usize) -> Self {
        let mut rules = self.rules.clone();
        rules.remove(i);
        Self::new(self.field.clone(), self.order.clone(), self.alphabet.clone(), rules).expect("subset of rules")
    }

    pub fn zero_poly(&self) -> Polynomial<F> {
        Polynomial::zero(self.field.clone(), self.order.clone())
    }

    pub fn word_poly(&self, w: Word) -> Polynomial<F> {
        Polynomial::word(self.field.clone(), self.order.clone(), w)
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.index.is_irreducible(w.letters())
    }

    /// The preferred redex `(rule, start)` in `w`, if any.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        self.index.find(w.letters())
    }

    /// Every redex `(rule, start)` in `w`.
    pub fn redexes(&self, w: &Word) -> Vec<(usize, usize)> {
        self.index.find_all(w.letters())
    }

    /// Rules whose lhs is a suffix of `w`.
    pub fn suffix_rules(&self, w: &Word) -> Vec<usize> {
        let mut state = index::ROOT;
        for g in w.letters() {
            state = self.index.step(state, g);
        }
        self.index.outputs(state).iter().map(|&r| r as usize).collect()
    }

    /// `c · u · rhs · v` for a redex of `rule` at `start` in `w`, descending.
    fn replacement(&self, w: &Word, c: &F::Elem, rule: usize, start: usize) -> Vec<(Word, F::Elem)> {
        let r = &self.rules[rule];
        let u = &w.letters()[..start];
        let v = &w.letters()[start + r.lhs.len()..];
        r.rhs.terms().iter().map(|(m, d)| (m.sandwich(u, v), self.field.mul(c, d))).collect()
    }

    /// Apply one rewrite at an explicit redex of the monomial `w` in `g`.
    pub fn reduce_at(&self, g: &Polynomial<F>, w: &Word, rule: usize, start: usize) -> Polynomial<F> {
        let c = g.coefficient(w);
        let repl = self.replacement(w, &c, rule, start);
        let minus_c = self.field.neg(&c);
        let removed = g.add_scaled_terms(&minus_c, &[(w.clone(), self.field.one())]);
        removed.add_scaled_terms(&self.field.one(), &repl)
    }

    /// One reduction step on the order-greatest reducible monomial, or `None`
    /// when `g` is irreducible.
    pub fn reduce_once(&self, g: &Polynomial<F>) -> Option<Polynomial<F>> {
        g.terms().iter().find_map(|(w, _)| {
            let (rule, start) = self.find_redex(w)?;
            Some(self.reduce_at(g, w, rule, start))
        })
    }

    /// `NF(f)`: reduce until irreducible.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let terms = f.terms().iter().rev().cloned().collect();
        Polynomial::from_sorted_unchecked(self.field.clone(), self.order.clone(), self.nf_ascending(terms))
    }

    /// `NF(c · w)` for a single word.
    pub fn normal_form_word(&self, w: &Word) -> Polynomial<F> {
        let terms = alloc::vec![(w.clone(), self.field.one())];
        Polynomial::from_sorted_unchecked(self.field.clone(), self.order.clone(), self.nf_ascending(terms))
    }

    /// Core loop: `work` is strictly ascending; its last entry is the current
    /// maximum. Irreducible maxima are final; reducible ones are replaced by
    /// strictly smaller terms. Returns strictly descending terms.
    fn nf_ascending(&self, mut work: Vec<(Word, F::Elem)>) -> Vec<(Word, F::Elem)> {
        let mut out = Vec::new();
        while let Some((w, c)) = work.pop() {
            match self.find_redex(&w) {
                None => out.push((w, c)),
                Some((rule, start)) => {
                    let mut repl = self.replacement(&w, &c, rule, start);
                    repl.reverse();
                    work = merge_ascending(&self.field, &self.order, work, repl);
                }
            }
        }
        out
    }

    /// `R(Y)`: rules whose lhs lies in `Y*`; errors if such a rule's rhs leaves `K⟨Y*⟩`.
    pub fn restrict_to_subalphabet(&self, y: &[Generator]) -> Result<Self, RewriteError> {
        let mut rules = Vec::new();
        for r in &self.rules {
            if r.lhs.letters().iter().all(|g| y.contains(g)) {
                if let Some(g) = r.rhs.support().flat_map(|w| w.letters()).find(|g| !y.contains(g)) {
                    return Err(RewriteError::HypothesisViolation { rule: r.describe(), letter: g.to_string() });
                }
                rules.push(r.clone());
            }
        }
        Self::new(self.field.clone(), self.order.clone(), self.alphabet.intersect(y), rules)
    }
}

/// Merge two strictly ascending term lists, summing equal words.
fn merge_ascending<F: Field>(
    field: &F,
    order: &OrderSpec,
    a: Vec<(Word, F::Elem)>,
    b: Vec<(Word, F::Elem)>,
) -> Vec<(Word, F::Elem)> {
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(ai.next().expect("peeked")),
            Ordering::Greater => out.push(bi.next().expect("peeked")),
            Ordering::Equal => {
                let (w, c) = ai.next().expect("peeked");
                let (_, d) = bi.next().expect("peeked");
                let s = field.add(&c, &d);
                if !field.is_zero(&s) {
                    out.push((w, s));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::free_algebra::parse_poly;

    fn toy() -> RewriteSystem<Fp> {
        // {ab → 0, ba → a} over the letters a0, b0.
        let f = Fp::new(5).unwrap();
        let al = Alphabet::small(5, 0, 1).unwrap();
        let o = OrderSpec::deglex();
        let p1 = parse_poly("a0*b0", &f, &al, &o).unwrap();
        let p2 = parse_poly("b0*a0 - a0", &f, &al, &o).unwrap();
        RewriteSystem::from_polys(f, o, al, &[p1, p2]).unwrap()
    }

    #[test]
    fn rule_from_poly_normalizes() {
        let f = Fp::new(3).unwrap();
        let al = Alphabet::small(3, 0, 1).unwrap();
        let o = OrderSpec::deglex();
        let p = parse_poly("2*b0*a0 + a0*b0", &f, &al, &o).unwrap();
        let r = RewriteRule::from_poly(&p).unwrap();
        assert_eq!(r.lhs.to_string(), "b0*a0");
        assert_eq!(format_poly(&r.rhs), "a0*b0");
        assert!(RewriteRule::from_poly(&Polynomial::zero(f, o)).is_err());
    }

    #[test]
    fn normal_forms() {
        let s = toy();
        let al = s.alphabet().clone();
        let g = parse_poly("b0*a0*a0", s.field(), &al, s.order()).unwrap();
        assert_eq!(format_poly(&s.normal_form(&g)), "a0*a0");
        let h = parse_poly("b0*b0*a0", s.field(), &al, s.order()).unwrap();
        assert_eq!(format_poly(&s.normal_form(&h)), "a0");
        let irr = parse_poly("a0*a0", s.field(), &al, s.order()).unwrap();
        assert!(s.reduce_once(&irr).is_none());
    }

    #[test]
    fn rejects_bad_systems() {
        let f = Fp::new(2).unwrap();
        let al = Alphabet::small(2, 0, 1).unwrap();
        let o = OrderSpec::deglex();
        let a0 = Generator::a(0, 2);
        let bad = RewriteRule { lhs: Word::letter(a0), rhs: Polynomial::word(f, o.clone(), Word::power(a0, 2)) };
        assert!(matches!(
            RewriteSystem::new(f, o.clone(), al.clone(), alloc::vec![bad]),
            Err(RewriteError::NotDecreasing(_))
        ));
        let r = RewriteRule { lhs: Word::power(a0, 2), rhs: Polynomial::zero(f, o.clone()) };
        assert!(matches!(
            RewriteSystem::new(f, o, al, alloc::vec![r.clone(), r]),
            Err(RewriteError::DuplicateLhs(_))
        ));
    }

    #[test]
    fn restriction() {
        let f = Fp::new(2).unwrap();
        let al = Alphabet::small(2, 0, 1).unwrap();
        let o = OrderSpec::deglex();
        let (a0, b0) = (Generator::a(0, 2), Generator::b(0, 2));
        let p = parse_poly("a0*a0 - b0", &f, &al, &o).unwrap();
        let s = RewriteSystem::from_polys(f, o, al, &[p]).unwrap();
        assert!(matches!(s.restrict_to_subalphabet(&[a0]), Err(RewriteError::HypothesisViolation { .. })));
        assert!(s.restrict_to_subalphabet(&[]).unwrap().is_empty());
        assert_eq!(s.restrict_to_subalphabet(&[a0, b0]).unwrap().len(), 1);
    }
}
