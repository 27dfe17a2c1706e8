//! The first terms of the Anick resolution
//! `P₂ → P₁ → P₀ → P₋₁ → K → 0` of the trivial module.
//!
//! `P_n` is the free left module over `A = K⟨X⟩/(G)` on `T_n`; its
//! `K`-basis is `N_n = {m.t | m ∈ M, t ∈ T_n}` with `M` the irreducible
//! words. The algebra acts on the left by concatenation followed by `NF`.
//!
//! The differentials follow Anick's recursion
//!
//! ```text
//! d₀(.x)     = δ₀(.x)
//! d_{n+1}(.t) = δ_{n+1}(.t) − i_n(d_n(δ_{n+1}(.t)))
//! i_n(f)     = j_n(lt f) + i_n(f − d_n(j_n(lt f)))
//! ```
//!
//! where `δ` maps a chain to its "highest term" and `j` is the
//! combinatorial lift that splits off the longest chain suffix.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;

use super::chains::{ChainSets, Level, TwoChain};
use super::module::{cmp_basis, BasisElem, ModuleElement};
use super::AnickError;
use crate::field::Field;
use crate::free_algebra::{Polynomial, Word};
use crate::rewriting::{count_irreducible_words, is_complete, is_reduced, ProductTable, RewriteSystem};

/// The Anick complex of a reduced, complete rewriting system.
///
/// Products `NF(u·m)` and the images `d_n(.t)` are memoised, so repeated
/// queries are cheap; the caches use interior mutability and make the complex
/// `!Sync`.
#[derive(Debug)]
pub struct AnickComplex<F: Field> {
    sys: RewriteSystem<F>,
    chains: ChainSets,
    t1: BTreeSet<Word>,
    t2: BTreeMap<Word, usize>,
    products: ProductTable<F>,
    images: RefCell<BTreeMap<(Level, Word), ModuleElement<F>>>,
    budgets: RefCell<BTreeMap<u32, usize>>,
}

impl<F: Field> AnickComplex<F> {
    /// Build the complex, checking that the system is reduced and complete.
    pub fn new(sys: RewriteSystem<F>) -> Result<Self, AnickError> {
        if !is_reduced(&sys) {
            return Err(AnickError::NotReduced);
        }
        let cert = is_complete(&sys);
        if !cert.complete {
            return Err(AnickError::Incomplete { failures: cert.failures.len() });
        }
        let chains = ChainSets::compute(&sys)?;
        let t1 = chains.t1.iter().cloned().collect();
        let t2 = chains.t2.iter().enumerate().map(|(i, c)| (c.word.clone(), i)).collect();
        let products = ProductTable::new(sys.clone());
        Ok(AnickComplex {
            sys,
            chains,
            t1,
            t2,
            products,
            images: RefCell::new(BTreeMap::new()),
            budgets: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn system(&self) -> &RewriteSystem<F> {
        &self.sys
    }

    pub fn chains(&self) -> &ChainSets {
        &self.chains
    }

    pub fn two_chain(&self, w: &Word) -> Option<&TwoChain> {
        self.t2.get(w).map(|&i| &self.chains.t2[i])
    }

    pub fn is_chain(&self, level: Level, w: &Word) -> bool {
        match level {
            Level::Unit => w.is_empty(),
            Level::Letter => w.len() == 1 && self.chains.t0.contains(&w.letters()[0]),
            Level::Lhs => self.t1.contains(w),
            Level::Overlap => self.t2.contains_key(w),
        }
    }

    pub fn zero(&self, level: Level) -> ModuleElement<F> {
        ModuleElement::zero(self.sys.field().clone(), self.sys.order().clone(), level)
    }

    /// The basis element `m.t` as a module element.
    pub fn basis(&self, level: Level, b: BasisElem) -> ModuleElement<F> {
        ModuleElement::basis(self.sys.field().clone(), self.sys.order().clone(), level, b)
    }

    /// `NF(u·m)` for irreducible `u`, through the memoised product table.
    pub fn nf_product(&self, u: &Word, m: &Word) -> Polynomial<F> {
        self.products.mul_words(u, m)
    }

    pub fn product_table(&self) -> &ProductTable<F> {
        &self.products
    }

    /// `u · x` for an irreducible word `u`; use [`AnickComplex::act`] otherwise.
    pub fn act_word(&self, u: &Word, x: &ModuleElement<F>) -> ModuleElement<F> {
        if u.is_empty() {
            return x.clone();
        }
        let f = self.sys.field();
        let mut terms = Vec::new();
        for (b, c) in x.terms() {
            for (w, d) in self.nf_product(u, &b.m).terms() {
                terms.push((BasisElem::new(w.clone(), b.t.clone()), f.mul(c, d)));
            }
        }
        ModuleElement::from_terms(f.clone(), self.sys.order().clone(), x.level(), terms)
    }

    /// `r · x` for an algebra element `r`.
    pub fn act(&self, r: &Polynomial<F>, x: &ModuleElement<F>) -> ModuleElement<F> {
        let f = self.sys.field();
        let mut terms = Vec::new();
        for (u, c) in r.terms() {
            for (b, d) in x.terms() {
                let cd = f.mul(c, d);
                for (w, e) in self.nf_product(u, &b.m).terms() {
                    terms.push((BasisElem::new(w.clone(), b.t.clone()), f.mul(&cd, e)));
                }
            }
        }
        ModuleElement::from_terms(f.clone(), self.sys.order().clone(), x.level(), terms)
    }

    /// `ε: P₋₁ → K`, the coefficient of `1.e`.
    pub fn augmentation(&self, x: &ModuleElement<F>) -> F::Elem {
        x.coefficient(&BasisElem::generator(Word::empty()))
    }

    fn check_basis(&self, level: Level, b: &BasisElem) -> Result<(), AnickError> {
        if !self.is_chain(level, &b.t) {
            return Err(AnickError::NotAChain { level: level.as_i8(), word: b.t.clone() });
        }
        if !self.sys.is_irreducible(&b.m) {
            return Err(AnickError::ReducibleCoefficient { word: b.m.clone() });
        }
        Ok(())
    }

    fn check_level(expected: Level, found: Level) -> Result<(), AnickError> {
        if expected == found {
            Ok(())
        } else {
            Err(AnickError::LevelMismatch { expected: expected.as_i8(), found: found.as_i8() })
        }
    }

    /// `δ_n(m.t)` for `n = level ∈ {0, 1, 2}`:
    /// `δ₀(m.x) = NF(mx).e`, `δ₁(m.t′x) = NF(mt′).x`, `δ₂(m.w) = NF(mu).m₂`.
    pub fn delta(&self, level: Level, b: &BasisElem) -> Result<ModuleElement<F>, AnickError> {
        self.check_basis(level, b)?;
        let (prefix, t, below) = match level {
            Level::Unit => return Err(AnickError::LevelMismatch { expected: 0, found: -1 }),
            Level::Letter => (b.t.clone(), Word::empty(), Level::Unit),
            Level::Lhs => {
                let n = b.t.len();
                (b.t.prefix(n - 1), b.t.suffix_from(n - 1), Level::Letter)
            }
            Level::Overlap => {
                let c = self.two_chain(&b.t).expect("checked chain");
                (c.u.clone(), c.right.clone(), Level::Lhs)
            }
        };
        Ok(ModuleElement::from_coefficient(&self.nf_product(&b.m, &prefix), &t, below))
    }

    /// The basis element `j_n(b)` for `b ∈ N_{n−1}`, or `None` when `j_n(b) = 0`.
    fn j_basis(&self, level: Level, b: &BasisElem) -> Result<Option<BasisElem>, AnickError> {
        let m = b.m.letters();
        match level {
            Level::Unit => Err(AnickError::LevelMismatch { expected: 0, found: -1 }),
            // j₀(ux.e) = u.x
            Level::Letter => Ok(m.split_last().map(|(x, u)| BasisElem::new(Word::from_slice(u), Word::letter(*x)))),
            // j₁(uv.x) = u.vx with vx ∈ T₁
            Level::Lhs => {
                let w = b.m.concat(&b.t);
                let hits = self.sys.suffix_rules(&w);
                match hits.as_slice() {
                    [] => Ok(None),
                    [r] => {
                        let lhs = &self.sys.rules()[*r].lhs;
                        Ok(Some(BasisElem::new(w.prefix(w.len() - lhs.len()), lhs.clone())))
                    }
                    _ => Err(AnickError::AmbiguousFactorization { term: b.render(Level::Letter) }),
                }
            }
            // j₂(uv.t) = u.vt with vt ∈ T₂
            Level::Overlap => {
                let mut found = None;
                for s in 1..=m.len() {
                    let vt = Word::from_slice(&m[m.len() - s..]).concat(&b.t);
                    if self.t2.contains_key(&vt) {
                        if found.is_some() {
                            return Err(AnickError::AmbiguousFactorization { term: b.render(Level::Lhs) });
                        }
                        found = Some(BasisElem::new(Word::from_slice(&m[..m.len() - s]), vt));
                    }
                }
                Ok(found)
            }
        }
    }

    /// `j_n(b)` for `b ∈ N_{n−1}` and `n = level`; zero when no factorisation exists.
    pub fn jmap(&self, level: Level, b: &BasisElem) -> Result<ModuleElement<F>, AnickError> {
        let below = level.below().ok_or(AnickError::LevelMismatch { expected: 0, found: -1 })?;
        self.check_basis(below, b)?;
        Ok(match self.j_basis(level, b)? {
            Some(jb) => self.basis(level, jb),
            None => self.zero(level),
        })
    }

    /// `d_n(.t)` for a chain `t ∈ T_n`, `n = level`.
    pub fn differential_of_chain(&self, level: Level, t: &Word) -> Result<ModuleElement<F>, AnickError> {
        let key = (level, t.clone());
        if let Some(x) = self.images.borrow().get(&key) {
            return Ok(x.clone());
        }
        let gen = BasisElem::generator(t.clone());
        let delta = self.delta(level, &gen)?;
        let d = match level {
            Level::Letter => delta,
            _ => {
                let below = level.below().expect("level >= 1");
                let correction = self.split_unchecked(below, &self.differential(&delta)?)?;
                delta.sub(&correction.with_level(below))
            }
        };
        self.images.borrow_mut().insert(key, d.clone());
        Ok(d)
    }

    /// `d_n(m.t)`.
    fn differential_basis(&self, level: Level, b: &BasisElem) -> Result<ModuleElement<F>, AnickError> {
        Ok(self.act_word(&b.m, &self.differential_of_chain(level, &b.t)?))
    }

    /// `d_n(x)` for `x ∈ P_n`, extended module-linearly; `n = x.level()`.
    pub fn differential(&self, x: &ModuleElement<F>) -> Result<ModuleElement<F>, AnickError> {
        let level = x.level();
        let below = level.below().ok_or(AnickError::LevelMismatch { expected: 0, found: -1 })?;
        let f = self.sys.field();
        let mut terms = Vec::new();
        for (b, c) in x.terms() {
            self.check_basis(level, b)?;
            for (b2, d) in self.differential_basis(level, b)?.terms() {
                terms.push((b2.clone(), f.mul(c, d)));
            }
        }
        Ok(ModuleElement::from_terms(f.clone(), self.sys.order().clone(), below, terms))
    }

    /// `i_n(f)` for `f ∈ ker d_{n−1}` (for `n = 0`, `f ∈ ker ε`), `n = level`.
    ///
    /// Fails if `f` is not a cycle, or if the recursion meets a leading term
    /// with no lift.
    pub fn splitting(&self, level: Level, f: &ModuleElement<F>) -> Result<ModuleElement<F>, AnickError> {
        let below = level.below().ok_or(AnickError::LevelMismatch { expected: 0, found: -1 })?;
        Self::check_level(below, f.level())?;
        let is_cycle = match below {
            Level::Unit => self.sys.field().is_zero(&self.augmentation(f)),
            _ => self.differential(f)?.is_zero(),
        };
        if !is_cycle {
            return Err(AnickError::NotACycle { level: below.as_i8() });
        }
        self.split_unchecked(level, f)
    }

    fn step_budget(&self, level: Level, deg: u32) -> usize {
        let below = level.below().expect("level >= 0");
        let words = *self.budgets.borrow_mut().entry(deg).or_insert_with(|| count_irreducible_words(&self.sys, deg));
        (words + 1) * (self.chains.len(below) + 1)
    }

    fn split_unchecked(&self, level: Level, f: &ModuleElement<F>) -> Result<ModuleElement<F>, AnickError> {
        let field = self.sys.field();
        let budget = self.step_budget(level, f.max_deg());
        let mut acc = self.zero(level);
        let mut rest = f.clone();
        let mut steps = 0usize;
        while let Some((b, c)) = rest.leading_term().cloned() {
            steps += 1;
            if steps > budget {
                return Err(AnickError::BudgetExceeded { level: level.as_i8(), steps: budget });
            }
            let below = rest.level();
            let Some(jb) = self.j_basis(level, &b)? else {
                return Err(AnickError::NoLift { level: level.as_i8(), term: b.render(below) });
            };
            let dj = self.differential_basis(level, &jb)?;
            acc = acc.add_scaled(&c, &self.basis(level, jb));
            rest = rest.add_scaled(&field.neg(&c), &dj);
            if let Some((nb, _)) = rest.leading_term() {
                if cmp_basis(self.sys.order(), nb, &b) != Ordering::Less {
                    return Err(AnickError::NotDecreasing { level: level.as_i8(), term: b.render(below) });
                }
            }
        }
        Ok(acc)
    }
}
