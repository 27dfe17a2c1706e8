//! The straightening rules as a rewriting system on divided-power letters,
//! ordered by `≪`.

use alloc::string::String;
use alloc::vec::Vec;

use super::divided::{straighten_pair, DLetter, KostantElement, Root};
use super::KostantError;
use crate::field::{Field, Fp};
use crate::free_algebra::{format_poly, Alphabet, Generator, OrderSpec, Polynomial, Word};
use crate::rewriting::{RewriteRule, RewriteSystem};

/// Which of the six straightening rules a lhs instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BigRule {
    /// `e_α^(k) e_α^(l)`
    AlphaAlpha,
    /// `e_{α+β}^(k) e_{α+β}^(l)`
    SumSum,
    /// `e_β^(k) e_β^(l)`
    BetaBeta,
    /// `e_{α+β}^(k) e_α^(l)`
    SumAlpha,
    /// `e_β^(k) e_α^(l)`
    BetaAlpha,
    /// `e_β^(k) e_{α+β}^(l)`
    BetaSum,
}

impl BigRule {
    pub const ALL: [BigRule; 6] =
        [BigRule::AlphaAlpha, BigRule::SumSum, BigRule::BetaBeta, BigRule::SumAlpha, BigRule::BetaAlpha, BigRule::BetaSum];

    pub fn roots(self) -> (Root, Root) {
        match self {
            BigRule::AlphaAlpha => (Root::Alpha, Root::Alpha),
            BigRule::SumSum => (Root::AlphaBeta, Root::AlphaBeta),
            BigRule::BetaBeta => (Root::Beta, Root::Beta),
            BigRule::SumAlpha => (Root::AlphaBeta, Root::Alpha),
            BigRule::BetaAlpha => (Root::Beta, Root::Alpha),
            BigRule::BetaSum => (Root::Beta, Root::AlphaBeta),
        }
    }
}

fn letter(d: DLetter) -> Generator {
    Generator::divided(d.0.kind(), d.1)
}

/// Rules (1)–(6) for all divided powers `1 <= k, l <= bound`.
///
/// The alphabet holds letters up to `2·bound` so that the rhs of the
/// same-root rules stays inside it.
pub fn big_rewrite_system<F: Field>(field: &F, bound: u32) -> RewriteSystem<F> {
    let order = OrderSpec::BigLl;
    let mut rules = Vec::new();
    for rule in BigRule::ALL {
        let (rx, ry) = rule.roots();
        for k in 1..=bound {
            for l in 1..=bound {
                let (x, y) = ((rx, k), (ry, l));
                let rhs_words = straighten_pair(field, x, y).expect("rule pairs are out of order");
                let rhs = Polynomial::from_terms(
                    field.clone(),
                    order.clone(),
                    rhs_words.into_iter().map(|(c, w)| (w.into_iter().map(letter).collect::<Word>(), c)),
                );
                rules.push(RewriteRule { lhs: Word::new(alloc::vec![letter(x), letter(y)]), rhs });
            }
        }
    }
    RewriteSystem::new(field.clone(), order, Alphabet::divided(2 * bound.max(1)), rules)
        .expect("straightening rules are decreasing in ≪")
}

/// The subsystem on divided powers `<= p^m − 1` over `F_p`. Same-root rules
/// whose power would overflow carry a vanishing binomial, so the restriction
/// is closed.
pub fn truncated_big_system(p: u32, m: u32) -> Result<RewriteSystem<Fp>, KostantError> {
    let f = Fp::new(p)?;
    let bound = p.checked_pow(m).ok_or(KostantError::WindowTooLarge { p, m })? - 1;
    let full = big_rewrite_system(&f, bound);
    let letters = Alphabet::divided(bound);
    Ok(full.restrict_to_subalphabet(letters.letters())?)
}

/// Check every rule `lhs → rhs` by evaluating both sides in the Kostant form.
/// Returns descriptions of failing rules.
pub fn verify_big_rules<F: Field>(sys: &RewriteSystem<F>) -> Vec<String> {
    let f = sys.field();
    sys.rules()
        .iter()
        .filter(|r| {
            let lhs = super::evaluate_word(f, &r.lhs);
            let mut rhs = KostantElement::zero(f.clone());
            for (w, c) in r.rhs.terms() {
                rhs.add_scaled(c, &super::evaluate_word(f, w));
            }
            lhs != rhs
        })
        .map(|r| alloc::format!("{} -> {}", r.lhs, format_poly(&r.rhs)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::free_algebra::parse_poly;
    use crate::rewriting::is_complete;

    #[test]
    fn rule_four_instance() {
        let s = big_rewrite_system(&Rationals, 3);
        let lhs = Word::new(alloc::vec![Generator::e_alphabeta(2), Generator::e_alpha(3)]);
        let r = &s.rules()[s.rule_index(&lhs).unwrap()];
        assert_eq!(format_poly(&r.rhs), "ea(3)*eab(2)");
        assert!(verify_big_rules(&s).is_empty());
    }

    #[test]
    fn beta_alpha_reduces() {
        let s = big_rewrite_system(&Rationals, 2);
        let g = parse_poly("eb(1)*ea(1)", &Rationals, s.alphabet(), s.order()).unwrap();
        let r = s.reduce_once(&g).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.coefficient(&Word::letter(Generator::e_alphabeta(1))), Rationals.from_i64(-1));
    }

    #[test]
    fn truncation() {
        let t = truncated_big_system(2, 1).unwrap();
        let aa = Word::power(Generator::e_alpha(1), 2);
        assert!(t.rules()[t.rule_index(&aa).unwrap()].rhs.is_zero());
        assert!(is_complete(&t).complete);
        // Over Q the overflow rules keep nonzero binomials, so restriction fails.
        let q = big_rewrite_system(&Rationals, 1);
        assert!(q.restrict_to_subalphabet(Alphabet::divided(1).letters()).is_err());
    }
}
