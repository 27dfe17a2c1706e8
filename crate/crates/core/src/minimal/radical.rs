//! Graded free modules and their radicals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::anick::{Level, ModuleElement};
use crate::field::Field;
use crate::free_algebra::{Degree, Word};

/// A free module `⊕ A[−s_i]` on chain generators, each shifted by the
/// degree of its chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGradedModule {
    level: Level,
    shifts: BTreeMap<Word, Degree>,
}

impl FreeGradedModule {
    /// Generators are the given chain words at `level`; shifts are their degrees.
    pub fn new<I: IntoIterator<Item = Word>>(level: Level, generators: I) -> Self {
        let shifts = generators.into_iter().map(|w| {
            let d = w.degree();
            (w, d)
        }).collect();
        FreeGradedModule { level, shifts }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn contains(&self, t: &Word) -> bool {
        self.shifts.contains_key(t)
    }

    pub fn shift(&self, t: &Word) -> Option<Degree> {
        self.shifts.get(t).copied()
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Word, &Degree)> {
        self.shifts.iter()
    }

    /// Generator counts per shift degree.
    pub fn counts_by_degree(&self) -> BTreeMap<Degree, usize> {
        let mut out = BTreeMap::new();
        for d in self.shifts.values() {
            *out.entry(*d).or_insert(0) += 1;
        }
        out
    }
}

/// Whether `x` lies in `Rad(P)`: it is an element of `P` and none of its
/// coordinates has a degree-zero (scalar) component.
///
/// Every nonempty word has positive degree, so a scalar component is exactly
/// a term `c · 1.t`.
pub fn radical_membership<F: Field>(x: &ModuleElement<F>, module: &FreeGradedModule) -> bool {
    x.level() == module.level && x.terms().iter().all(|(b, _)| module.contains(&b.t) && !b.m.is_empty())
}

/// The generators of `P` whose coordinate in `x` has a scalar part.
pub fn scalar_coordinates<F: Field>(x: &ModuleElement<F>) -> Vec<Word> {
    x.scalar_part().into_iter().map(|(t, _)| t).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anick::BasisElem;
    use crate::field::Fp;
    use crate::free_algebra::{Generator, OrderSpec};

    #[test]
    fn scalar_coordinates_leave_the_radical() {
        let f = Fp::new(2).unwrap();
        let o = OrderSpec::deglex();
        let a0 = Word::letter(Generator::a(0, 2));
        let unit = FreeGradedModule::new(Level::Unit, [Word::empty()]);
        let x = ModuleElement::basis(f.clone(), o.clone(), Level::Unit, BasisElem::new(a0.clone(), Word::empty()));
        assert!(radical_membership(&x, &unit));

        let p0 = FreeGradedModule::new(Level::Letter, [a0.clone()]);
        let y = ModuleElement::basis(f.clone(), o.clone(), Level::Letter, BasisElem::generator(a0.clone()));
        assert!(!radical_membership(&y, &p0));
        assert_eq!(scalar_coordinates(&y), alloc::vec![a0.clone()]);
        // Right chain, wrong module.
        assert!(!radical_membership(&x.clone().with_level(Level::Letter), &p0));
        assert_eq!(p0.shift(&a0), Some(a0.degree()));
        assert_eq!(p0.counts_by_degree().len(), 1);
    }
}
