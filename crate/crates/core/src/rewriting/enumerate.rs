//! Enumeration of irreducible words (the monomial basis of the quotient).

use alloc::vec::Vec;

use super::{index, RewriteSystem};
use crate::field::Field;
use crate::free_algebra::{Generator, Word};

/// All words with `Deg <= deg_bound` containing no lhs as a factor, sorted
/// ascending in the system order.
pub fn irreducible_words<F: Field>(sys: &RewriteSystem<F>, deg_bound: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack: Vec<Generator> = Vec::new();
    walk(sys, deg_bound, index::ROOT, 0, &mut stack, &mut |w| out.push(Word::from_slice(w)));
    out.sort_by(|a, b| sys.order().cmp(a, b));
    out
}

/// Number of irreducible words with `Deg <= deg_bound`, without materializing them.
pub fn count_irreducible_words<F: Field>(sys: &RewriteSystem<F>, deg_bound: u32) -> usize {
    let mut n = 0usize;
    let mut stack: Vec<Generator> = Vec::new();
    walk(sys, deg_bound, index::ROOT, 0, &mut stack, &mut |_| n += 1);
    n
}

fn walk<F: Field>(
    sys: &RewriteSystem<F>,
    bound: u32,
    state: u32,
    deg: u32,
    stack: &mut Vec<Generator>,
    visit: &mut dyn FnMut(&[Generator]),
) {
    visit(stack);
    for g in sys.alphabet().letters() {
        let d = deg + g.deg();
        if d > bound {
            continue;
        }
        let next = sys.index.step(state, g);
        if sys.index.accepting(next) {
            continue;
        }
        stack.push(*g);
        walk(sys, bound, next, d, stack, visit);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::free_algebra::{Alphabet, OrderSpec};

    #[test]
    fn free_words_over_one_letter() {
        let f = Fp::new(2).unwrap();
        let a0 = Generator::a(0, 2);
        let al = Alphabet::from_letters(alloc::vec![a0], Some(2));
        let s = RewriteSystem::empty(f, OrderSpec::deglex(), al);
        let ws = irreducible_words(&s, 2);
        assert_eq!(ws, alloc::vec![Word::empty(), Word::letter(a0), Word::power(a0, 2)]);
        assert_eq!(count_irreducible_words(&s, 2), 3);
    }
}
