//! PBW arithmetic in the Kostant form by straightening divided-power words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;
use crate::free_algebra::{Degree, GenKind, Generator, Word};

/// The three positive roots, in PBW order `α < α+β < β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Alpha,
    AlphaBeta,
    Beta,
}

impl Root {
    pub fn kind(self) -> GenKind {
        match self {
            Root::Alpha => GenKind::EAlpha,
            Root::AlphaBeta => GenKind::EAlphaBeta,
            Root::Beta => GenKind::EBeta,
        }
    }

    pub fn of_kind(kind: GenKind) -> Option<Root> {
        match kind {
            GenKind::EAlpha => Some(Root::Alpha),
            GenKind::EAlphaBeta => Some(Root::AlphaBeta),
            GenKind::EBeta => Some(Root::Beta),
            _ => None,
        }
    }
}

/// A divided-power letter `e_ω^(k)`, `k >= 1`.
pub type DLetter = (Root, u32);

/// The PBW basis monomial `e_α^(k_α) e_{α+β}^(k_{α+β}) e_β^(k_β)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DividedMonomial {
    pub k_alpha: u32,
    pub k_alphabeta: u32,
    pub k_beta: u32,
}

impl DividedMonomial {
    pub const ONE: DividedMonomial = DividedMonomial { k_alpha: 0, k_alphabeta: 0, k_beta: 0 };

    pub const fn new(k_alpha: u32, k_alphabeta: u32, k_beta: u32) -> Self {
        DividedMonomial { k_alpha, k_alphabeta, k_beta }
    }

    pub fn degree(&self) -> Degree {
        Degree::new(self.k_alpha + self.k_alphabeta, self.k_alphabeta + self.k_beta)
    }

    /// The monomial as a word in divided letters (zero powers omitted).
    pub fn letters(&self) -> Vec<DLetter> {
        [(Root::Alpha, self.k_alpha), (Root::AlphaBeta, self.k_alphabeta), (Root::Beta, self.k_beta)]
            .into_iter()
            .filter(|(_, k)| *k > 0)
            .collect()
    }

    /// The monomial as a word over the divided alphabet.
    pub fn to_word(&self) -> Word {
        self.letters().into_iter().map(|(r, k)| Generator::divided(r.kind(), k)).collect()
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.k_alpha, self.k_alphabeta, self.k_beta]
    }
}

impl fmt::Display for DividedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.k_alpha, self.k_alphabeta, self.k_beta)
    }
}

/// A linear combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantElement<F: Field> {
    field: F,
    terms: BTreeMap<DividedMonomial, F::Elem>,
}

impl<F: Field> KostantElement<F> {
    pub fn zero(field: F) -> Self {
        KostantElement { field, terms: BTreeMap::new() }
    }

    pub fn one(field: F) -> Self {
        Self::basis(field, DividedMonomial::ONE)
    }

    pub fn basis(field: F, m: DividedMonomial) -> Self {
        let mut e = Self::zero(field);
        let one = e.field.one();
        e.add_term(m, one);
        e
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DividedMonomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &DividedMonomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: DividedMonomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        let f = &self.field;
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = f.add(v, &c);
                if f.is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &F::Elem, other: &Self) {
        for (m, v) in &other.terms {
            let cv = self.field.mul(c, v);
            self.add_term(*m, cv);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&self.field.neg(&self.field.one()), other);
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone());
        out.add_scaled(c, self);
        out
    }

    /// Degrees present in the support.
    pub fn degrees(&self) -> Vec<Degree> {
        let mut d: Vec<Degree> = self.terms.keys().map(DividedMonomial::degree).collect();
        d.sort();
        d.dedup();
        d
    }

    /// `self · other` by straightening.
    pub fn mul(&self, other: &Self) -> Self {
        multiply_divided(self, other)
    }

    /// `self · e_ω^(k)`.
    pub fn mul_letter(&self, letter: DLetter) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone());
        for (m, c) in &self.terms {
            let mut w = m.letters();
            w.push(letter);
            straighten_into(f, c.clone(), w, &mut out);
        }
        out
    }
}

/// The right-hand side of the straightening rule for an out-of-order adjacent
/// pair, or `None` if the pair is already in PBW order.
///
/// Rules: `e_ω^(k) e_ω^(l) → C(k+l,k) e_ω^(k+l)`;
/// `e_{α+β}^(k) e_α^(l) → e_α^(l) e_{α+β}^(k)`;
/// `e_β^(k) e_α^(l) → Σ_j (−1)^j e_α^(l−j) e_{α+β}^(j) e_β^(k−j)`;
/// `e_β^(k) e_{α+β}^(l) → e_{α+β}^(l) e_β^(k)`.
pub fn straighten_pair<F: Field>(field: &F, x: DLetter, y: DLetter) -> Option<Vec<(F::Elem, Vec<DLetter>)>> {
    let ((rx, k), (ry, l)) = (x, y);
    if rx < ry {
        return None;
    }
    let out = if rx == ry {
        let c = field.binomial(u64::from(k) + u64::from(l), u64::from(k));
        alloc::vec![(c, alloc::vec![(rx, k + l)])]
    } else {
        match (rx, ry) {
            (Root::AlphaBeta, Root::Alpha) | (Root::Beta, Root::AlphaBeta) => alloc::vec![(field.one(), alloc::vec![y, x])],
            (Root::Beta, Root::Alpha) => (0..=k.min(l))
                .map(|j| {
                    let c = if j % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                    let w = [(Root::Alpha, l - j), (Root::AlphaBeta, j), (Root::Beta, k - j)]
                        .into_iter()
                        .filter(|(_, e)| *e > 0)
                        .collect();
                    (c, w)
                })
                .collect(),
            _ => unreachable!("pairs with rx > ry are covered"),
        }
    };
    Some(out)
}

/// Straighten `c · word` into PBW form and accumulate into `acc`.
pub(crate) fn straighten_into<F: Field>(field: &F, c: F::Elem, word: Vec<DLetter>, acc: &mut KostantElement<F>) {
    let mut stack = alloc::vec![(c, word)];
    while let Some((c, w)) = stack.pop() {
        if field.is_zero(&c) {
            continue;
        }
        let bad = (0..w.len().saturating_sub(1)).find(|&i| w[i].0 >= w[i + 1].0);
        match bad {
            None => {
                let mut m = DividedMonomial::ONE;
                for (r, k) in w {
                    match r {
                        Root::Alpha => m.k_alpha = k,
                        Root::AlphaBeta => m.k_alphabeta = k,
                        Root::Beta => m.k_beta = k,
                    }
                }
                acc.add_term(m, c);
            }
            Some(i) => {
                for (d, mid) in straighten_pair(field, w[i], w[i + 1]).expect("out of order") {
                    let cd = field.mul(&c, &d);
                    if field.is_zero(&cd) {
                        continue;
                    }
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.extend_from_slice(&w[..i]);
                    nw.extend(mid);
                    nw.extend_from_slice(&w[i + 2..]);
                    stack.push((cd, nw));
                }
            }
        }
    }
}

/// Product of two Kostant elements in the PBW basis.
pub fn multiply_divided<F: Field>(u: &KostantElement<F>, v: &KostantElement<F>) -> KostantElement<F> {
    assert_eq!(u.field, v.field, "multiply_divided: field mismatch");
    let f = &u.field;
    let mut out = KostantElement::zero(f.clone());
    for (mu, cu) in &u.terms {
        for (mv, cv) in &v.terms {
            let mut w = mu.letters();
            w.extend(mv.letters());
            straighten_into(f, f.mul(cu, cv), w, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};

    fn b(f: Rationals, a: u32, ab: u32, bb: u32) -> KostantElement<Rationals> {
        KostantElement::basis(f, DividedMonomial::new(a, ab, bb))
    }

    #[test]
    fn beta_alpha_commutator() {
        let q = Rationals;
        let p = b(q, 0, 0, 1).mul(&b(q, 1, 0, 0));
        let expect = b(q, 1, 0, 1).sub(&b(q, 0, 1, 0));
        assert_eq!(p, expect);
    }

    #[test]
    fn same_root_binomials() {
        let q = Rationals;
        let p = b(q, 2, 0, 0).mul(&b(q, 3, 0, 0));
        assert_eq!(p, b(q, 5, 0, 0).scale(&q.from_i64(10)));
        let f = Fp::new(2).unwrap();
        let x = KostantElement::basis(f, DividedMonomial::new(1, 0, 0));
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn unit() {
        let q = Rationals;
        let v = b(q, 1, 2, 3);
        assert_eq!(KostantElement::one(q).mul(&v), v);
        assert_eq!(v.mul(&KostantElement::one(q)), v);
    }
}
