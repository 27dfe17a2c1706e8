//! Bounded Buchberger/Knuth–Bendix completion with interreduction.

use alloc::vec::Vec;

use super::critical::{critical_pairs, s_polynomial};
use super::{RewriteError, RewriteRule, RewriteSystem};
use crate::field::Field;
use crate::free_algebra::Polynomial;

/// Add rules until every critical pair whose tip has `Deg <= deg_bound`
/// reduces to zero, interreducing after each batch.
///
/// The loop is bounded: every round either adds a rule with a new lhs of
/// `Deg <= deg_bound` (finitely many exist) or terminates.
pub fn complete<F: Field>(sys: &RewriteSystem<F>, deg_bound: u32) -> Result<RewriteSystem<F>, RewriteError> {
    let mut current = interreduce(sys)?;
    loop {
        let residuals: Vec<Polynomial<F>> = critical_pairs(&current)
            .iter()
            .filter(|cp| cp.tip.deg() <= deg_bound)
            .map(|cp| current.normal_form(&s_polynomial(cp, &current)))
            .filter(|r| !r.is_zero())
            .collect();
        if residuals.is_empty() {
            return Ok(current);
        }
        let mut rules = current.rules().to_vec();
        for r in residuals {
            let tmp = RewriteSystem::new(current.field().clone(), current.order().clone(), current.alphabet().clone(), rules.clone())?;
            let r = tmp.normal_form(&r);
            if !r.is_zero() {
                rules.push(RewriteRule::from_poly(&r)?);
            }
        }
        let grown = RewriteSystem::new(current.field().clone(), current.order().clone(), current.alphabet().clone(), rules)?;
        current = interreduce(&grown)?;
    }
}

/// Make the lhs set an anti-chain and every rhs irreducible, without changing
/// the generated ideal.
pub fn interreduce<F: Field>(sys: &RewriteSystem<F>) -> Result<RewriteSystem<F>, RewriteError> {
    let (field, order, alphabet) = (sys.field().clone(), sys.order().clone(), sys.alphabet().clone());
    let mut rules = sys.rules().to_vec();
    'outer: loop {
        for i in 0..rules.len() {
            let li = rules[i].lhs.clone();
            let covered = rules.iter().enumerate().any(|(j, r)| j != i && r.lhs.is_factor_of(&li));
            if covered {
                let removed = rules.remove(i);
                let rest = RewriteSystem::new(field.clone(), order.clone(), alphabet.clone(), rules.clone())?;
                let p = rest.normal_form(&removed.as_poly());
                if !p.is_zero() {
                    rules.push(RewriteRule::from_poly(&p)?);
                }
                continue 'outer;
            }
        }
        break;
    }
    let base = RewriteSystem::new(field.clone(), order.clone(), alphabet.clone(), rules.clone())?;
    let rules = rules
        .into_iter()
        .map(|r| RewriteRule { rhs: base.normal_form(&r.rhs), lhs: r.lhs })
        .collect();
    RewriteSystem::new(field, order, alphabet, rules)
}
