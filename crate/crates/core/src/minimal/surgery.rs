//! Cancelling scalar couplings between `P₂` and `P₁`.
//!
//! If `d₂(.w) = c·.u + (terms in Rad)` with `c` a unit and `deg u = deg w`,
//! the generators `.u` and `.w` span a contractible summand. Dropping both
//! and replacing `.u` by
//!
//! ```text
//! ψ(.u) = .u − c⁻¹ · d₂(.w)
//! ```
//!
//! wherever it occurs gives a smaller complex `P′₂ → P′₁ → P₀` with
//! `d′₂ = ψ∘d₂` and `d′₁ = d₁|P′₁`. Because `d₁(ψ(.u)) = d₁(.u)`, the new
//! differentials still compose to zero.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::radical::FreeGradedModule;
use super::MinimalError;
use crate::anick::{words_by_degree, AnickComplex, BasisElem, GradedBasis, GradedMatrix, Level, ModuleElement};
use crate::field::Field;
use crate::free_algebra::{Degree, Word};

/// A cancelled pair: `u ∈ T₁`, `w ∈ T₂` and the coefficient of `.u` in `d₂(.w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancelPair<F: Field> {
    pub u: Word,
    pub w: Word,
    pub coefficient: F::Elem,
}

/// The complex `P′₂ → P′₁ → P₀ → P₋₁` obtained from an Anick complex by
/// cancelling a set of unit couplings.
#[derive(Debug)]
pub struct MinimalComplex<F: Field> {
    cx: AnickComplex<F>,
    pairs: Vec<CancelPair<F>>,
    t1_prime: Vec<Word>,
    t2_prime: Vec<Word>,
    substitutes: BTreeMap<Word, ModuleElement<F>>,
    images: RefCell<BTreeMap<Word, ModuleElement<F>>>,
}

/// Dimensions and ranks around `P′₁` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeExactnessRow {
    pub degree: Degree,
    /// `dim` of `P₀`, `P′₁`, `P′₂` in this degree.
    pub dims: [usize; 3],
    /// `rank` of `d′₁`, `d′₂`.
    pub ranks: [usize; 2],
    /// `dim ker d′₁ = rank d′₂`.
    pub exact: bool,
}

impl<F: Field> MinimalComplex<F> {
    /// Cancel the pairs `(u, w)`. Each `w` must be a level-two chain, each `u`
    /// a level-one chain of the same degree, and the coefficient of `.u` in
    /// `d₂(.w)` must be nonzero. No chain may occur in two pairs.
    pub fn new(cx: AnickComplex<F>, pairs: &[(Word, Word)]) -> Result<Self, MinimalError> {
        let field = cx.system().field().clone();
        let mut seen_u = BTreeSet::new();
        let mut seen_w = BTreeSet::new();
        let mut checked = Vec::with_capacity(pairs.len());
        for (u, w) in pairs {
            if !cx.is_chain(Level::Lhs, u) || !cx.is_chain(Level::Overlap, w) || u.degree() != w.degree() {
                return Err(MinimalError::NotAPair { u: u.clone(), w: w.clone() });
            }
            if !seen_u.insert(u.clone()) || !seen_w.insert(w.clone()) {
                return Err(MinimalError::DuplicatePair { u: u.clone(), w: w.clone() });
            }
            let d = cx.differential_of_chain(Level::Overlap, w)?;
            let c = d.coefficient(&BasisElem::generator(u.clone()));
            if field.is_zero(&c) {
                return Err(MinimalError::ZeroCoefficient { u: u.clone(), w: w.clone() });
            }
            checked.push(CancelPair { u: u.clone(), w: w.clone(), coefficient: c });
        }
        checked.sort_by(|a, b| cx.system().order().cmp(&a.u, &b.u));
        let t1_prime = cx.chains().t1.iter().filter(|t| !seen_u.contains(*t)).cloned().collect();
        let t2_prime = cx.chains().words(Level::Overlap).into_iter().filter(|t| !seen_w.contains(t)).collect();
        let substitutes = Self::substitutes(&cx, &checked)?;
        Ok(MinimalComplex { cx, pairs: checked, t1_prime, t2_prime, substitutes, images: RefCell::new(BTreeMap::new()) })
    }

    /// `ψ(.u)` for every cancelled `u`, free of cancelled generators.
    ///
    /// The raw substitute `.u − c⁻¹ d₂(.w)` only involves `.u′` of smaller
    /// degree or non-scalar multiples; substituting in ascending order closes
    /// the recursion. A round limit guards against cyclic input.
    fn substitutes(cx: &AnickComplex<F>, pairs: &[CancelPair<F>]) -> Result<BTreeMap<Word, ModuleElement<F>>, MinimalError> {
        let f = cx.system().field();
        let mut subs: BTreeMap<Word, ModuleElement<F>> = BTreeMap::new();
        for pair in pairs {
            let inv = f.inv(&pair.coefficient).expect("nonzero coefficient");
            let d = cx.differential_of_chain(Level::Overlap, &pair.w)?;
            let raw = cx.basis(Level::Lhs, BasisElem::generator(pair.u.clone())).add_scaled(&f.neg(&inv), &d);
            subs.insert(pair.u.clone(), raw);
        }
        for _ in 0..=pairs.len() {
            let dirty: Vec<Word> = subs
                .iter()
                .filter(|(_, x)| x.terms().iter().any(|(b, _)| subs.contains_key(&b.t)))
                .map(|(u, _)| u.clone())
                .collect();
            if dirty.is_empty() {
                return Ok(subs);
            }
            for u in dirty {
                let x = apply(cx, &subs, &subs[&u]);
                subs.insert(u, x);
            }
        }
        Err(MinimalError::CyclicSubstitution)
    }

    pub fn complex(&self) -> &AnickComplex<F> {
        &self.cx
    }

    pub fn pairs(&self) -> &[CancelPair<F>] {
        &self.pairs
    }

    pub fn t1_prime(&self) -> &[Word] {
        &self.t1_prime
    }

    pub fn t2_prime(&self) -> &[Word] {
        &self.t2_prime
    }

    pub fn p1_prime(&self) -> FreeGradedModule {
        FreeGradedModule::new(Level::Lhs, self.t1_prime.iter().cloned())
    }

    pub fn p2_prime(&self) -> FreeGradedModule {
        FreeGradedModule::new(Level::Overlap, self.t2_prime.iter().cloned())
    }

    pub fn is_cancelled(&self, u: &Word) -> bool {
        self.substitutes.contains_key(u)
    }

    /// `ψ(.u)` for a cancelled `u`.
    pub fn substitute_of(&self, u: &Word) -> Option<&ModuleElement<F>> {
        self.substitutes.get(u)
    }

    /// Apply `ψ: P₁ → P′₁`.
    pub fn substitute(&self, x: &ModuleElement<F>) -> ModuleElement<F> {
        apply(&self.cx, &self.substitutes, x)
    }

    /// `d′₁(.t) = d₁(.t)` for `t ∈ T′₁`.
    pub fn d1_prime(&self, t: &Word) -> Result<ModuleElement<F>, MinimalError> {
        if self.is_cancelled(t) {
            return Err(MinimalError::NotInPrime { level: 1, word: t.clone() });
        }
        Ok(self.cx.differential_of_chain(Level::Lhs, t)?)
    }

    /// `d′₂(.w) = ψ(d₂(.w))` for `w ∈ T′₂`.
    pub fn d2_prime(&self, w: &Word) -> Result<ModuleElement<F>, MinimalError> {
        if let Some(x) = self.images.borrow().get(w) {
            return Ok(x.clone());
        }
        if self.pairs.iter().any(|p| p.w == *w) {
            return Err(MinimalError::NotInPrime { level: 2, word: w.clone() });
        }
        let x = self.substitute(&self.cx.differential_of_chain(Level::Overlap, w)?);
        self.images.borrow_mut().insert(w.clone(), x.clone());
        Ok(x)
    }

    /// `d′₂` extended module-linearly to `P′₂`.
    pub fn d2_prime_elem(&self, x: &ModuleElement<F>) -> Result<ModuleElement<F>, MinimalError> {
        let mut out = self.cx.zero(Level::Lhs);
        for (b, c) in x.terms() {
            let img = self.cx.act_word(&b.m, &self.d2_prime(&b.t)?);
            out = out.add_scaled(c, &img);
        }
        Ok(out)
    }

    /// `d′₁` extended module-linearly to `P′₁`.
    pub fn d1_prime_elem(&self, x: &ModuleElement<F>) -> Result<ModuleElement<F>, MinimalError> {
        if let Some((b, _)) = x.terms().iter().find(|(b, _)| self.is_cancelled(&b.t)) {
            return Err(MinimalError::NotInPrime { level: 1, word: b.t.clone() });
        }
        Ok(self.cx.differential(x)?)
    }

    fn matrices(
        &self,
        level: Level,
        bound: u32,
    ) -> Result<Vec<GradedMatrix<F>>, MinimalError> {
        let words = words_by_degree(&self.cx, bound);
        let (src_chains, dst_chains) = match level {
            Level::Lhs => (self.t1_prime.clone(), self.cx.chains().words(Level::Letter)),
            _ => (self.t2_prime.clone(), self.t1_prime.clone()),
        };
        let src = GradedBasis::new(&words, &src_chains, bound);
        let dst = GradedBasis::new(&words, &dst_chains, bound);
        let degrees: BTreeSet<Degree> = src.degrees().chain(dst.degrees()).copied().collect();
        let mut out = Vec::with_capacity(degrees.len());
        for d in degrees {
            let cols = src.piece(&d).to_vec();
            let images = cols
                .iter()
                .map(|b| {
                    let x = self.cx.basis(level, b.clone());
                    match level {
                        Level::Lhs => self.d1_prime_elem(&x),
                        _ => self.d2_prime_elem(&x),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push(GradedMatrix::from_columns(self.cx.system().field(), d, dst.piece(&d).to_vec(), cols, &images)?);
        }
        Ok(out)
    }

    /// Matrices of `d′₁: P′₁ → P₀` in each degree with `Deg <= bound`.
    pub fn d1_prime_matrices(&self, bound: u32) -> Result<Vec<GradedMatrix<F>>, MinimalError> {
        self.matrices(Level::Lhs, bound)
    }

    /// Matrices of `d′₂: P′₂ → P′₁` in each degree with `Deg <= bound`.
    pub fn d2_prime_matrices(&self, bound: u32) -> Result<Vec<GradedMatrix<F>>, MinimalError> {
        self.matrices(Level::Overlap, bound)
    }

    /// Rank certificate of exactness at `P′₁` in every degree with `Deg <= bound`.
    pub fn exactness_at_p1_prime(&self, bound: u32) -> Result<Vec<PrimeExactnessRow>, MinimalError> {
        let mut rows: BTreeMap<Degree, PrimeExactnessRow> = BTreeMap::new();
        let blank = |degree| PrimeExactnessRow { degree, dims: [0; 3], ranks: [0; 2], exact: false };
        for (n, mats) in [self.d1_prime_matrices(bound)?, self.d2_prime_matrices(bound)?].into_iter().enumerate() {
            for mat in mats {
                let row = rows.entry(mat.degree).or_insert_with(|| blank(mat.degree));
                row.dims[n] = mat.rows.len();
                row.dims[n + 1] = mat.cols.len();
                row.ranks[n] = mat.rank();
            }
        }
        Ok(rows
            .into_values()
            .map(|mut r| {
                r.exact = r.dims[1] - r.ranks[0] == r.ranks[1];
                r
            })
            .collect())
    }

    /// One line per cancelled pair, e.g. `(b0*a0*b0*a0, a1*b0*b0): 1`.
    pub fn describe_pairs(&self) -> Vec<String> {
        let f = self.cx.system().field();
        self.pairs.iter().map(|p| format!("({}, {}): {}", p.u, p.w, f.format(&p.coefficient))).collect()
    }
}

/// Replace every `r.u` with cancelled `u` by `r·ψ(.u)`.
fn apply<F: Field>(
    cx: &AnickComplex<F>,
    subs: &BTreeMap<Word, ModuleElement<F>>,
    x: &ModuleElement<F>,
) -> ModuleElement<F> {
    let f = cx.system().field();
    let keep: Vec<_> = x.terms().iter().filter(|(b, _)| !subs.contains_key(&b.t)).cloned().collect();
    let mut out = ModuleElement::from_terms(f.clone(), cx.system().order().clone(), x.level(), keep);
    for (b, c) in x.terms() {
        if let Some(s) = subs.get(&b.t) {
            out = out.add_scaled(c, &cx.act_word(&b.m, s));
        }
    }
    out
}
