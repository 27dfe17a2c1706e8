use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{AlgebraError, GenKind, Generator, Word};

/// A total order on generators used by the lexicographic stage of deg-lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ranking {
    /// The intrinsic `(index, kind)` order: `a_0 < b_0 < a_1 < b_1 < …`.
    Natural,
    /// An explicit list, smallest first. Stored sorted by generator together
    /// with each letter's rank so lookups are a binary search.
    Explicit(Arc<[(Generator, u32)]>),
}

impl Ranking {
    /// Build an explicit ranking from letters listed smallest first.
    pub fn explicit(order: &[Generator]) -> Result<Self, AlgebraError> {
        let mut table: Vec<(Generator, u32)> =
            order.iter().enumerate().map(|(i, g)| (*g, i as u32)).collect();
        table.sort();
        if table.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(AlgebraError::OrderDomain("duplicate generator in ranking".to_string()));
        }
        Ok(Ranking::Explicit(table.into()))
    }

    fn rank(&self, g: &Generator) -> Option<u32> {
        match self {
            Ranking::Natural => Some(0),
            Ranking::Explicit(t) => t.binary_search_by(|(h, _)| h.cmp(g)).ok().map(|i| t[i].1),
        }
    }

    fn cmp_letters(&self, x: &Generator, y: &Generator) -> Ordering {
        match self {
            Ranking::Natural => x.cmp(y),
            Ranking::Explicit(_) => {
                let rx = self.rank(x).expect("letter not ranked");
                let ry = self.rank(y).expect("letter not ranked");
                rx.cmp(&ry)
            }
        }
    }
}

/// A monomial order on words.
///
/// * `DegLex(r)`: compare `Deg` first, then letters left to right by `r`.
/// * `BigLl`: the order `≪` on divided-power words — compare the images
///   under [`phi_map`] by `Deg` then lexicographically with
///   `e_α < e_{α+β} < e_β`, then compare lengths, then compare letters left to
///   right by the intrinsic `(index, kind)` ranking.
///
/// Both are total, monoidal, artinian, and refine the factor order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderSpec {
    DegLex(Ranking),
    BigLl,
}

impl OrderSpec {
    /// Deg-lex with `a_0 < b_0 < a_1 < b_1 < …`.
    pub fn deglex() -> Self {
        OrderSpec::DegLex(Ranking::Natural)
    }

    /// Check that the order ranks `g`.
    pub fn validate_letter(&self, g: &Generator) -> Result<(), AlgebraError> {
        let ok = match self {
            OrderSpec::DegLex(r) => r.rank(g).is_some(),
            OrderSpec::BigLl => g.is_divided(),
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::OrderDomain(g.to_string()))
        }
    }

    pub fn validate_word(&self, w: &Word) -> Result<(), AlgebraError> {
        w.letters().iter().try_for_each(|g| self.validate_letter(g))
    }

    /// Checked comparison: errors if either word uses a letter the order does not rank.
    pub fn compare_words(&self, u: &Word, v: &Word) -> Result<Ordering, AlgebraError> {
        self.validate_word(u)?;
        self.validate_word(v)?;
        Ok(self.cmp(u, v))
    }

    /// Unchecked comparison. Panics on letters outside the order's domain;
    /// callers validate alphabets once up front.
    pub fn cmp(&self, u: &Word, v: &Word) -> Ordering {
        if u.deg() != v.deg() {
            return u.deg().cmp(&v.deg());
        }
        self.cmp_same_deg(u.letters().iter(), v.letters().iter(), u.len(), v.len())
    }

    /// Compare the concatenations `u[0]·u[1]·…` and `v[0]·v[1]·…` without
    /// building them.
    pub fn cmp_concat(&self, u: &[&Word], v: &[&Word]) -> Ordering {
        let du: u32 = u.iter().map(|w| w.deg()).sum();
        let dv: u32 = v.iter().map(|w| w.deg()).sum();
        if du != dv {
            return du.cmp(&dv);
        }
        let lu = u.iter().map(|w| w.len()).sum();
        let lv = v.iter().map(|w| w.len()).sum();
        self.cmp_same_deg(flatten(u), flatten(v), lu, lv)
    }

    fn cmp_same_deg<'a, I, J>(&self, u: I, v: J, lu: usize, lv: usize) -> Ordering
    where
        I: Iterator<Item = &'a Generator> + Clone,
        J: Iterator<Item = &'a Generator> + Clone,
    {
        let flat_u = || u.clone();
        let flat_v = || v.clone();
        match self {
            OrderSpec::DegLex(r) => {
                for (x, y) in flat_u().zip(flat_v()) {
                    match r.cmp_letters(x, y) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                lu.cmp(&lv)
            }
            OrderSpec::BigLl => {
                let phi_u = flat_u().flat_map(|g| core::iter::repeat_n(phi_rank(g), g.index() as usize));
                let phi_v = flat_v().flat_map(|g| core::iter::repeat_n(phi_rank(g), g.index() as usize));
                match phi_u.cmp(phi_v) {
                    Ordering::Equal => {}
                    o => return o,
                }
                match lu.cmp(&lv) {
                    Ordering::Equal => {}
                    o => return o,
                }
                flat_u().cmp(flat_v())
            }
        }
    }
}

fn flatten<'a>(ws: &'a [&'a Word]) -> impl Iterator<Item = &'a Generator> + Clone {
    ws.iter().flat_map(|w| w.letters().iter())
}

fn phi_rank(g: &Generator) -> u8 {
    match g.kind() {
        GenKind::EAlpha => 0,
        GenKind::EAlphaBeta => 1,
        GenKind::EBeta => 2,
        k => panic!("big_ll order applied to non-divided letter {k:?}"),
    }
}

/// `φ: e_ω^(k) ↦ e_ω^k`, expressed with the first divided powers as the
/// letters of `Y = {e_α, e_{α+β}, e_β}`.
pub fn phi_map(w: &Word) -> Result<Word, AlgebraError> {
    let mut out = Vec::new();
    for g in w.letters() {
        if !g.is_divided() {
            return Err(AlgebraError::OrderDomain(g.to_string()));
        }
        let y = Generator::divided(g.kind(), 1);
        out.extend(core::iter::repeat_n(y, g.index() as usize));
    }
    Ok(Word::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(gs: &[Generator]) -> Word {
        Word::from_slice(gs)
    }

    #[test]
    fn deglex_examples() {
        let o = OrderSpec::deglex();
        let (a0, b0, a1) = (Generator::a(0, 2), Generator::b(0, 2), Generator::a(1, 2));
        assert_eq!(o.compare_words(&Word::empty(), &w(&[a0])).unwrap(), Ordering::Less);
        assert_eq!(o.compare_words(&w(&[a1, b0]), &w(&[b0, a1])).unwrap(), Ordering::Greater);
        assert_eq!(o.cmp(&w(&[b0, a0]), &w(&[a0, b0])), Ordering::Greater);
    }

    #[test]
    fn big_ll_uses_weighted_phi_lex() {
        let o = OrderSpec::BigLl;
        let (x1, y1, z1) = (Generator::e_alpha(1), Generator::e_alphabeta(1), Generator::e_beta(1));
        // e_β e_α versus e_α e_β: same Deg, φ-lex decides.
        assert_eq!(o.cmp(&w(&[z1, x1]), &w(&[x1, z1])), Ordering::Greater);
        // e_{α+β} has Deg 2 and sits between e_α and e_β lexicographically.
        assert_eq!(o.cmp(&w(&[z1, x1]), &w(&[y1])), Ordering::Greater);
        assert_eq!(o.cmp(&w(&[x1, z1]), &w(&[y1])), Ordering::Less);
        // Same φ-image, shorter word is smaller.
        let x2 = Generator::e_alpha(2);
        assert_eq!(o.cmp(&w(&[x2]), &w(&[x1, x1])), Ordering::Less);
    }

    #[test]
    fn explicit_rankings() {
        let (a0, b0) = (Generator::a(0, 2), Generator::b(0, 2));
        let o = OrderSpec::DegLex(Ranking::explicit(&[b0, a0]).unwrap());
        assert_eq!(o.cmp(&w(&[a0]), &w(&[b0])), Ordering::Greater);
        let a1 = Generator::a(1, 2);
        assert!(o.compare_words(&w(&[a1]), &w(&[a0])).is_err());
        assert!(Ranking::explicit(&[a0, a0]).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_map(&Word::empty()).unwrap(), Word::empty());
        let e = phi_map(&w(&[Generator::e_alpha(2)])).unwrap();
        assert_eq!(e, w(&[Generator::e_alpha(1), Generator::e_alpha(1)]));
        let f = phi_map(&w(&[Generator::e_beta(1), Generator::e_alphabeta(2)])).unwrap();
        let y = Generator::e_alphabeta(1);
        assert_eq!(f, w(&[Generator::e_beta(1), y, y]));
        assert_eq!(f.degree(), Degree::new(2, 3));
        assert!(phi_map(&w(&[Generator::a(0, 2)])).is_err());
    }

    use super::super::Degree;
}
