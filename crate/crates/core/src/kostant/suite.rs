//! Oracle checks: relation suite, dimension count, NF/oracle agreement and
//! the generation of `e_{α+β}^(p^l)` by the small generators.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::divided::{DividedMonomial, KostantElement};
use super::small::{evaluate_poly, evaluate_word, families, family_poly, small_groebner_basis, Family, Variant, Window};
use super::KostantError;
use crate::field::Fp;
use crate::free_algebra::{Degree, Generator, Polynomial, Word};
use crate::linalg::Echelon;
use crate::rewriting::{irreducible_words, RewriteSystem};

/// One relation evaluated in the Kostant form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: Family,
    pub name: String,
    pub poly: Polynomial<Fp>,
    pub passed: bool,
    /// The nonzero value, when the relation fails.
    pub residual: Option<KostantElement<Fp>>,
}

/// An alternative sign convention and whether it also vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVariantCheck {
    pub family: Family,
    pub variant: String,
    pub holds: bool,
}

/// `e_{α+β}^(p^l)` written in the small generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCheck {
    pub l: u32,
    pub expression: Option<Polynomial<Fp>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub window: Window,
    pub relations: Vec<RelationCheck>,
    pub sign_variants: Vec<SignVariantCheck>,
    pub generation: Vec<GenerationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.passed) && self.generation.iter().all(|g| g.expression.is_some())
    }
}

fn check(win: &Window, family: Family, var: Variant) -> (Polynomial<Fp>, KostantElement<Fp>) {
    let poly = family_poly(win, family, var);
    let v = evaluate_poly(&poly);
    (poly, v)
}

/// Evaluate every relation family on the window, probe the alternative sign
/// conventions, and express each `e_{α+β}^(p^l)` through the generators.
pub fn relation_suite(win: &Window) -> Result<RelationReport, KostantError> {
    let mut relations = Vec::new();
    let mut sign_variants = Vec::new();
    for family in families(win) {
        let (poly, v) = check(win, family, Variant::CANONICAL);
        let passed = v.is_zero();
        relations.push(RelationCheck {
            family,
            name: alloc::format!("{family}"),
            poly,
            passed,
            residual: (!passed).then_some(v),
        });
        let flipped = match family {
            Family::SkewOne { .. } | Family::SkewTwo { .. } => {
                Some(("tail sign flipped", Variant { skew_sign: -1, ..Variant::CANONICAL }))
            }
            Family::CommuteA { .. } | Family::CommuteB { .. } => {
                Some(("anticommutator", Variant { commute_sign: 1, ..Variant::CANONICAL }))
            }
            Family::SerreA { .. } | Family::SerreB { .. } => {
                Some(("last term subtracted", Variant { serre_sign: -1, ..Variant::CANONICAL }))
            }
            _ => None,
        };
        if let Some((name, var)) = flipped {
            let (_, v) = check(win, family, var);
            sign_variants.push(SignVariantCheck { family, variant: name.into(), holds: v.is_zero() });
        }
    }
    let generation = (win.j..win.m).map(|l| express_alphabeta_power(win.p, l)).collect::<Result<_, _>>()?;
    Ok(RelationReport { window: *win, relations, sign_variants, generation })
}

/// Find a polynomial in `a_s`, `b_s` (`s <= l`) whose value is `e_{α+β}^(p^l)`.
pub fn express_alphabeta_power(p: u32, l: u32) -> Result<GenerationCheck, KostantError> {
    let win = Window::full(p, l + 1)?;
    let sys = small_groebner_basis(&win)?;
    let f = win.field();
    let pl = p.pow(l);
    let target_deg = Degree::new(pl, pl);
    let words: Vec<Word> =
        irreducible_words(&sys, target_deg.norm()).into_iter().filter(|w| w.degree() == target_deg).collect();
    let mut cols: BTreeMap<DividedMonomial, usize> = BTreeMap::new();
    let mut row_of = |e: &KostantElement<Fp>| -> Vec<(usize, u32)> {
        let mut r: Vec<(usize, u32)> = e
            .terms()
            .map(|(m, c)| {
                let n = cols.len();
                (*cols.entry(*m).or_insert(n), *c)
            })
            .collect();
        r.sort_by_key(|(c, _)| *c);
        r
    };
    let mut ech = Echelon::tracking(f);
    for w in &words {
        let row = row_of(&evaluate_word(&f, w));
        ech.insert(row);
    }
    let target = row_of(&KostantElement::basis(f, DividedMonomial::new(0, pl, 0)));
    let expression = ech.express(target).map(|combo| {
        Polynomial::from_terms(f, sys.order().clone(), combo.into_iter().map(|(i, c)| (words[i].clone(), c)))
    });
    Ok(GenerationCheck { l, expression })
}

/// Irreducible-word count against the expected dimension and the rank of
/// their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub expected: u64,
    /// Number of PBW triples with all powers below `p^m` (full windows only).
    pub pbw_count: Option<u64>,
    pub irreducible_count: u64,
    pub oracle_rank: u64,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.irreducible_count == self.expected
            && self.oracle_rank == self.expected
            && self.pbw_count.is_none_or(|c| c == self.expected)
    }
}

pub fn dimension_check(win: &Window) -> Result<DimensionReport, KostantError> {
    let sys = small_groebner_basis(win)?;
    let words = irreducible_words(&sys, win.top_deg());
    let f = win.field();
    let rank = images_rank(&f, &words);
    let pbw_count = (win.j == 0).then(|| u64::from(win.p.pow(win.m)).pow(3));
    Ok(DimensionReport {
        expected: win.expected_dimension(),
        pbw_count,
        irreducible_count: words.len() as u64,
        oracle_rank: rank as u64,
    })
}

/// Rank of the images of `words`, computed degree by degree.
fn images_rank(f: &Fp, words: &[Word]) -> usize {
    let mut by_degree: BTreeMap<Degree, Vec<&Word>> = BTreeMap::new();
    for w in words {
        by_degree.entry(w.degree()).or_default().push(w);
    }
    let mut total = 0;
    for ws in by_degree.values() {
        let mut cols: BTreeMap<DividedMonomial, usize> = BTreeMap::new();
        let mut ech = Echelon::new(*f);
        for w in ws {
            let e = evaluate_word(f, w);
            let mut row: Vec<(usize, u32)> = e
                .terms()
                .map(|(m, c)| {
                    let n = cols.len();
                    (*cols.entry(*m).or_insert(n), *c)
                })
                .collect();
            row.sort_by_key(|(c, _)| *c);
            ech.insert(row);
        }
        total += ech.rank();
    }
    total
}

/// Outcome of checking `ev(NF(x·m)) = ev(x)·ev(m)` for every letter `x` and
/// irreducible word `m`. For a complete system this implies
/// `ev(NF(w)) = ev(w)` for every word `w`, by induction on length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAgreement {
    pub checked: usize,
    pub failures: Vec<Word>,
}

pub fn oracle_agreement(sys: &RewriteSystem<Fp>, deg_bound: u32) -> OracleAgreement {
    let f = *sys.field();
    let words = irreducible_words(sys, deg_bound);
    let letters: Vec<Generator> = sys.alphabet().letters().to_vec();
    let mut checked = 0;
    let mut failures = Vec::new();
    for m in &words {
        let em = evaluate_word(&f, m);
        for x in &letters {
            if m.deg() + x.deg() > deg_bound {
                continue;
            }
            let xm = Word::letter(*x).concat(m);
            let direct = evaluate_word(&f, &Word::letter(*x)).mul(&em);
            let via_nf = evaluate_poly(&sys.normal_form_word(&xm));
            checked += 1;
            if direct != via_nf {
                failures.push(xm);
            }
        }
    }
    OracleAgreement { checked, failures }
}
