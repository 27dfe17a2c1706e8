//! The small generators `a_k`, `b_k`, the evaluation map into the Kostant
//! form, and the Gröbner basis `G_m` of its kernel.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::divided::{DividedMonomial, KostantElement, Root};
use super::KostantError;
use crate::field::{Field, Fp};
use crate::free_algebra::{format_poly, Alphabet, GenKind, Generator, OrderSpec, Polynomial, Word};
use crate::rewriting::RewriteSystem;

/// Generator window `{a_k, b_k | j <= k < m}` over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub p: u32,
    pub j: u32,
    pub m: u32,
}

impl Window {
    pub fn new(p: u32, j: u32, m: u32) -> Result<Self, KostantError> {
        Fp::new(p)?;
        if j >= m {
            return Err(KostantError::EmptyWindow { j, m });
        }
        // The top PBW monomial has Deg 4(p^m − 1); keep that representable.
        let top = p.checked_pow(m).and_then(|q| q.checked_mul(4));
        if top.is_none() {
            return Err(KostantError::WindowTooLarge { p, m });
        }
        Ok(Window { p, j, m })
    }

    /// `j = 0`.
    pub fn full(p: u32, m: u32) -> Result<Self, KostantError> {
        Self::new(p, 0, m)
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p).expect("validated prime")
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::small(self.p, self.j, self.m).expect("validated window")
    }

    pub fn a(&self, k: u32) -> Generator {
        Generator::a(k, self.p)
    }

    pub fn b(&self, k: u32) -> Generator {
        Generator::b(k, self.p)
    }

    pub fn indices(&self) -> core::ops::Range<u32> {
        self.j..self.m
    }

    /// `p^{3(m−j)}`, the dimension of the windowed algebra.
    pub fn expected_dimension(&self) -> u64 {
        u64::from(self.p).pow(3 * (self.m - self.j))
    }

    /// Largest `Deg` of a nonzero homogeneous component: the top PBW
    /// monomial of the window has degree `(p^m − p^j)(2α + 2β)`.
    pub fn top_deg(&self) -> u32 {
        4 * (self.p.pow(self.m) - self.p.pow(self.j))
    }

    /// The same window extended by one index on the right.
    pub fn extended(&self) -> Result<Self, KostantError> {
        Self::new(self.p, self.j, self.m + 1)
    }
}

/// `a_k ↦ e_α^(p^k)`, `b_k ↦ e_β^(p^k)` as Kostant elements.
pub fn small_generator<F: Field>(field: &F, kind: GenKind, k: u32, p: u32) -> KostantElement<F> {
    let g = match kind {
        GenKind::A => Generator::a(k, p),
        GenKind::B => Generator::b(k, p),
        _ => panic!("small_generator expects a or b"),
    };
    KostantElement::basis(field.clone(), letter_monomial(&g.to_divided()))
}

fn letter_monomial(g: &Generator) -> DividedMonomial {
    let k = g.index();
    match g.kind() {
        GenKind::EAlpha => DividedMonomial::new(k, 0, 0),
        GenKind::EAlphaBeta => DividedMonomial::new(0, k, 0),
        GenKind::EBeta => DividedMonomial::new(0, 0, k),
        _ => unreachable!("divided letter expected"),
    }
}

/// The evaluation map from the free algebra: the product of letter images.
/// Small letters are first rewritten as the divided letters they name.
pub fn evaluate_word<F: Field>(field: &F, w: &Word) -> KostantElement<F> {
    let mut acc = KostantElement::one(field.clone());
    for g in w.letters() {
        let d = g.to_divided();
        let root = Root::of_kind(d.kind()).expect("divided letter");
        acc = acc.mul_letter((root, d.index()));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Linear extension of [`evaluate_word`].
pub fn evaluate_poly<F: Field>(f: &Polynomial<F>) -> KostantElement<F> {
    let field = f.field();
    let mut acc = KostantElement::zero(field.clone());
    for (w, c) in f.terms() {
        acc.add_scaled(c, &evaluate_word(field, w));
    }
    acc
}

/// The relation families of `G_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `a_l b_k − b_k a_l + (−1)^{l−k} a_k^{p−1} b_k a_k a_{k+1}^{p−1}…a_{l−1}^{p−1}`
    SkewOne { k: u32, l: u32 },
    /// `b_l a_k − a_k b_l − (−1)^{l−k} b_k a_k b_k^{p−1} b_{k+1}^{p−1}…b_{l−1}^{p−1}`
    SkewTwo { k: u32, l: u32 },
    /// `a_l a_k − a_k a_l`
    CommuteA { k: u32, l: u32 },
    /// `b_l b_k − b_k b_l`
    CommuteB { k: u32, l: u32 },
    /// `(b_k a_k)^p − (a_k b_k)^p`
    Braid { k: u32 },
    /// `a_k^p`
    PowerA { k: u32 },
    /// `b_k^p`
    PowerB { k: u32 },
    /// `b_k² a_k − 2 b_k a_k b_k + a_k b_k²` (p ≥ 3)
    SerreB { k: u32 },
    /// `b_k a_k² − 2 a_k b_k a_k + a_k² b_k` (p ≥ 3)
    SerreA { k: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::SkewOne { k, l } => write!(f, "skew_ab(k={k},l={l})"),
            Family::SkewTwo { k, l } => write!(f, "skew_ba(k={k},l={l})"),
            Family::CommuteA { k, l } => write!(f, "commute_a(k={k},l={l})"),
            Family::CommuteB { k, l } => write!(f, "commute_b(k={k},l={l})"),
            Family::Braid { k } => write!(f, "braid(k={k})"),
            Family::PowerA { k } => write!(f, "power_a(k={k})"),
            Family::PowerB { k } => write!(f, "power_b(k={k})"),
            Family::SerreB { k } => write!(f, "serre_bba(k={k})"),
            Family::SerreA { k } => write!(f, "serre_baa(k={k})"),
        }
    }
}

/// A relation polynomial tagged with its family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRelation {
    pub family: Family,
    pub poly: Polynomial<Fp>,
}

impl NamedRelation {
    pub fn name(&self) -> String {
        format!("{}", self.family)
    }
}

/// Sign convention for the tails of the skew relations: `+1` uses the
/// displayed signs, `-1` flips them. Only used to probe alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Variant {
    pub skew_sign: i64,
    pub commute_sign: i64,
    pub serre_sign: i64,
}

impl Variant {
    pub(crate) const CANONICAL: Variant = Variant { skew_sign: 1, commute_sign: -1, serre_sign: 1 };
}

pub(crate) fn family_poly(win: &Window, fam: Family, var: Variant) -> Polynomial<Fp> {
    let f = win.field();
    let p = win.p as usize;
    let o = OrderSpec::deglex();
    let a = |k: u32| win.a(k);
    let b = |k: u32| win.b(k);
    let w = |gs: Vec<Generator>| Word::new(gs);
    let sign = |e: u32| if e % 2 == 0 { 1i64 } else { -1 };
    let terms: Vec<(Word, i64)> = match fam {
        Family::SkewOne { k, l } => {
            let mut tail = alloc::vec![a(k); p - 1];
            tail.extend([b(k), a(k)]);
            for s in k + 1..l {
                tail.extend(core::iter::repeat_n(a(s), p - 1));
            }
            alloc::vec![
                (w(alloc::vec![a(l), b(k)]), 1),
                (w(alloc::vec![b(k), a(l)]), -1),
                (w(tail), var.skew_sign * sign(l - k)),
            ]
        }
        Family::SkewTwo { k, l } => {
            let mut tail = alloc::vec![b(k), a(k)];
            tail.extend(core::iter::repeat_n(b(k), p - 1));
            for s in k + 1..l {
                tail.extend(core::iter::repeat_n(b(s), p - 1));
            }
            alloc::vec![
                (w(alloc::vec![b(l), a(k)]), 1),
                (w(alloc::vec![a(k), b(l)]), -1),
                (w(tail), -var.skew_sign * sign(l - k)),
            ]
        }
        Family::CommuteA { k, l } => {
            alloc::vec![(w(alloc::vec![a(l), a(k)]), 1), (w(alloc::vec![a(k), a(l)]), var.commute_sign)]
        }
        Family::CommuteB { k, l } => {
            alloc::vec![(w(alloc::vec![b(l), b(k)]), 1), (w(alloc::vec![b(k), b(l)]), var.commute_sign)]
        }
        Family::Braid { k } => alloc::vec![
            (Word::new(alloc::vec![b(k), a(k)]).repeat(p), 1),
            (Word::new(alloc::vec![a(k), b(k)]).repeat(p), -1),
        ],
        Family::PowerA { k } => alloc::vec![(Word::power(a(k), p), 1)],
        Family::PowerB { k } => alloc::vec![(Word::power(b(k), p), 1)],
        Family::SerreB { k } => alloc::vec![
            (w(alloc::vec![b(k), b(k), a(k)]), 1),
            (w(alloc::vec![b(k), a(k), b(k)]), -2),
            (w(alloc::vec![a(k), b(k), b(k)]), var.serre_sign),
        ],
        Family::SerreA { k } => alloc::vec![
            (w(alloc::vec![b(k), a(k), a(k)]), 1),
            (w(alloc::vec![a(k), b(k), a(k)]), -2),
            (w(alloc::vec![a(k), a(k), b(k)]), var.serre_sign),
        ],
    };
    Polynomial::from_terms(f, o, terms.into_iter().map(|(w, c)| (w, f.from_i64(c))))
}

/// The families instantiated on a window, in presentation order.
pub fn families(win: &Window) -> Vec<Family> {
    let mut out = Vec::new();
    for k in win.indices() {
        for l in k + 1..win.m {
            out.push(Family::SkewOne { k, l });
        }
    }
    for k in win.indices() {
        for l in k + 1..win.m {
            out.push(Family::SkewTwo { k, l });
        }
    }
    for k in win.indices() {
        for l in k + 1..win.m {
            out.push(Family::CommuteA { k, l });
        }
    }
    for k in win.indices() {
        for l in k + 1..win.m {
            out.push(Family::CommuteB { k, l });
        }
    }
    for k in win.indices() {
        out.push(Family::Braid { k });
    }
    for k in win.indices() {
        out.push(Family::PowerA { k });
    }
    for k in win.indices() {
        out.push(Family::PowerB { k });
    }
    if win.p >= 3 {
        for k in win.indices() {
            out.push(Family::SerreB { k });
        }
        for k in win.indices() {
            out.push(Family::SerreA { k });
        }
    }
    out
}

/// The relation polynomials of `G_m` on the window.
pub fn small_relations(win: &Window) -> Vec<NamedRelation> {
    families(win)
        .into_iter()
        .map(|family| NamedRelation { family, poly: family_poly(win, family, Variant::CANONICAL) })
        .collect()
}

/// `G_m` as a rewriting system under deg-lex with `a_0 < b_0 < a_1 < …`.
///
/// Every relation is evaluated in the Kostant form first; a nonzero value
/// aborts construction and names the relation.
pub fn small_groebner_basis(win: &Window) -> Result<RewriteSystem<Fp>, KostantError> {
    let rels = small_relations(win);
    for r in &rels {
        let v = evaluate_poly(&r.poly);
        if !v.is_zero() {
            return Err(KostantError::OracleViolation { relation: r.name(), poly: format_poly(&r.poly) });
        }
    }
    let polys: Vec<_> = rels.into_iter().map(|r| r.poly).collect();
    Ok(RewriteSystem::from_polys(win.field(), OrderSpec::deglex(), win.alphabet(), &polys)?)
}
