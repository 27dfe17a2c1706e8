//! Overlaps, critical pairs and the completeness/reducedness certificates.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::RewriteSystem;
use crate::field::Field;
use crate::free_algebra::{Polynomial, Word};

/// How two left-hand sides meet in a tip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// `tip = m1·v = u·m2` with a nonempty proper suffix of `m1` equal to a
    /// prefix of `m2`.
    Overlap,
    /// `tip = u·m1·v = m2`: `m1` is a proper factor of `m2`.
    Containment,
}

/// A tip with its witnesses, independent of any rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OverlapSkeleton {
    pub tip: Word,
    pub u: Word,
    pub v: Word,
    pub kind: OverlapKind,
}

/// All ways `m1` and `m2` combine into a critical tip.
///
/// Overlaps are recorded as `tip = m1·v = u·m2`; containments as
/// `tip = u·m1·v = m2`.
pub fn find_overlaps(m1: &Word, m2: &Word) -> Vec<OverlapSkeleton> {
    let (a, b) = (m1.letters(), m2.letters());
    let mut out = Vec::new();
    for s in 1..a.len().min(b.len()) {
        if a[a.len() - s..] == b[..s] {
            let v = Word::from_slice(&b[s..]);
            let u = Word::from_slice(&a[..a.len() - s]);
            out.push(OverlapSkeleton { tip: m1.concat(&v), u, v, kind: OverlapKind::Overlap });
        }
    }
    if a.len() < b.len() {
        for start in m2.occurrences(m1) {
            out.push(OverlapSkeleton {
                tip: m2.clone(),
                u: Word::from_slice(&b[..start]),
                v: Word::from_slice(&b[start + a.len()..]),
                kind: OverlapKind::Containment,
            });
        }
    }
    out
}

/// A critical pair `(tip, r1, r2)` with witnesses in the orientation
/// `tip = lhs1·v = u·lhs2` (overlap) or `tip = u·lhs1·v = lhs2` (containment).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalPair {
    pub tip: Word,
    pub rule1: usize,
    pub rule2: usize,
    pub u: Word,
    pub v: Word,
    pub kind: OverlapKind,
}

impl CriticalPair {
    /// Does the witness identity hold letter for letter?
    pub fn witness_holds<F: Field>(&self, sys: &RewriteSystem<F>) -> bool {
        let l1 = &sys.rules()[self.rule1].lhs;
        let l2 = &sys.rules()[self.rule2].lhs;
        match self.kind {
            OverlapKind::Overlap => l1.concat(&self.v) == self.tip && self.u.concat(l2) == self.tip,
            OverlapKind::Containment => l1.sandwich(self.u.letters(), self.v.letters()) == self.tip && *l2 == self.tip,
        }
    }
}

/// All critical pairs of the system, deduplicated by (tip, unordered rule pair).
pub fn critical_pairs<F: Field>(sys: &RewriteSystem<F>) -> Vec<CriticalPair> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let rules = sys.rules();
    for (i, r1) in rules.iter().enumerate() {
        for (j, r2) in rules.iter().enumerate() {
            for sk in find_overlaps(&r1.lhs, &r2.lhs) {
                let key = (sk.tip.clone(), i.min(j), i.max(j));
                if seen.insert(key) {
                    out.push(CriticalPair { tip: sk.tip, rule1: i, rule2: j, u: sk.u, v: sk.v, kind: sk.kind });
                }
            }
        }
    }
    out
}

/// The difference of the two one-step reductions of the tip:
/// `rhs1·v − u·rhs2` for overlaps, `u·rhs1·v − rhs2` for containments.
pub fn s_polynomial<F: Field>(cp: &CriticalPair, sys: &RewriteSystem<F>) -> Polynomial<F> {
    let r1 = &sys.rules()[cp.rule1].rhs;
    let r2 = &sys.rules()[cp.rule2].rhs;
    match cp.kind {
        OverlapKind::Overlap => &r1.sandwich(&[], cp.v.letters()) - &r2.sandwich(cp.u.letters(), &[]),
        OverlapKind::Containment => &r1.sandwich(cp.u.letters(), cp.v.letters()) - r2,
    }
}

/// True iff the S-polynomial of `cp` reduces to zero.
pub fn pair_is_reducible<F: Field>(cp: &CriticalPair, sys: &RewriteSystem<F>) -> bool {
    sys.normal_form(&s_polynomial(cp, sys)).is_zero()
}

/// Result of checking every critical pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessCertificate<F: Field> {
    pub complete: bool,
    pub pair_count: usize,
    /// Tips whose S-polynomial has a nonzero normal form, with that residual.
    pub failures: Vec<(Word, Polynomial<F>)>,
}

pub fn is_complete<F: Field>(sys: &RewriteSystem<F>) -> CompletenessCertificate<F> {
    certify(sys, None)
}

/// The degree-truncated certificate: only critical pairs whose tip has
/// `Deg <= deg_bound` are checked. A pass means the system is a Gröbner basis
/// of the ideal up to that degree.
pub fn is_complete_up_to<F: Field>(sys: &RewriteSystem<F>, deg_bound: u32) -> CompletenessCertificate<F> {
    certify(sys, Some(deg_bound))
}

fn certify<F: Field>(sys: &RewriteSystem<F>, deg_bound: Option<u32>) -> CompletenessCertificate<F> {
    // Reducing through the product table is a valid certificate either way:
    // zero means the pair resolves, and a nonzero irreducible residue lies
    // in the ideal, so the system cannot be complete.
    let table = super::ProductTable::new(sys.clone());
    let mut pairs = critical_pairs(sys);
    if let Some(d) = deg_bound {
        pairs.retain(|cp| cp.tip.deg() <= d);
    }
    let failures: Vec<_> = pairs
        .iter()
        .filter_map(|cp| {
            let r = table.normal_form(&s_polynomial(cp, sys));
            (!r.is_zero()).then(|| (cp.tip.clone(), r))
        })
        .collect();
    CompletenessCertificate { complete: failures.is_empty(), pair_count: pairs.len(), failures }
}

/// No lhs contains another lhs as a factor, and every rhs monomial is irreducible.
pub fn is_reduced<F: Field>(sys: &RewriteSystem<F>) -> bool {
    let rules = sys.rules();
    let antichain = rules.iter().enumerate().all(|(i, r)| {
        rules.iter().enumerate().all(|(j, s)| i == j || !s.lhs.is_factor_of(&r.lhs))
    });
    antichain && rules.iter().all(|r| r.rhs.support().all(|w| sys.is_irreducible(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::free_algebra::{format_poly, parse_poly, Alphabet, Generator, OrderSpec};

    fn sys(polys: &[&str]) -> RewriteSystem<Fp> {
        let f = Fp::new(5).unwrap();
        let al = Alphabet::small(5, 0, 2).unwrap();
        let o = OrderSpec::deglex();
        let ps: Vec<_> = polys.iter().map(|t| parse_poly(t, &f, &al, &o).unwrap()).collect();
        RewriteSystem::from_polys(f, o, al, &ps).unwrap()
    }

    #[test]
    fn overlap_examples() {
        let (a0, b0, a1, b1) = (Generator::a(0, 2), Generator::b(0, 2), Generator::a(1, 2), Generator::b(1, 2));
        let aa = Word::power(a0, 2);
        let tips: Vec<_> = find_overlaps(&aa, &aa).into_iter().map(|s| s.tip).collect();
        assert_eq!(tips, alloc::vec![Word::power(a0, 3)]);
        let t = find_overlaps(&Word::new(alloc::vec![a1, b0]), &Word::power(b0, 2));
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].tip, Word::new(alloc::vec![a1, b0, b0]));
        assert!(find_overlaps(&Word::new(alloc::vec![a0, b0]), &Word::new(alloc::vec![b1, a0])).is_empty());
        let c = find_overlaps(&Word::letter(b0), &Word::new(alloc::vec![a0, b0, a0]));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, OverlapKind::Containment);
    }

    #[test]
    fn toy_system_is_incomplete() {
        let s = sys(&["a0*b0", "b0*a0 - a0"]);
        let cert = is_complete(&s);
        assert!(!cert.complete);
        assert_eq!(cert.failures.len(), 1);
        assert_eq!(cert.failures[0].0.to_string(), "a0*b0*a0");
        assert_eq!(format_poly(&cert.failures[0].1), "-a0*a0");
        for cp in critical_pairs(&s) {
            assert!(cp.witness_holds(&s));
        }
    }

    #[test]
    fn empty_and_single_rule() {
        let s = sys(&[]);
        assert!(is_complete(&s).complete);
        assert!(is_reduced(&s));
        let single = sys(&["a0*a0"]);
        let cps = critical_pairs(&single);
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].tip, Word::power(Generator::a(0, 5), 3));
    }

    #[test]
    fn reducedness() {
        assert!(!is_reduced(&sys(&["a0*a0", "a0*a0*a0 - b0"])));
        assert!(is_reduced(&sys(&["a0*a0", "b0*b0"])));
    }
}
