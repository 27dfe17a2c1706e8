use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{AlgebraError, Degree};

/// The five generator families.
///
/// `A`/`B` are the small generators `a_k = e_α^(p^k)`, `b_k = e_β^(p^k)`; the
/// `E*` kinds are divided powers of the three positive root vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    A,
    B,
    EAlpha,
    EAlphaBeta,
    EBeta,
}

impl GenKind {
    pub fn is_small(self) -> bool {
        matches!(self, GenKind::A | GenKind::B)
    }

    pub fn is_divided(self) -> bool {
        !self.is_small()
    }
}

/// A letter of the free monoid. The degree is determined by kind and index
/// (and by `p` for small generators), and is cached here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    kind: GenKind,
    index: u32,
    degree: Degree,
}

impl Generator {
    /// `a_k` for the prime `p`; `None` if `p^k` overflows.
    pub fn try_a(k: u32, p: u32) -> Option<Self> {
        let d = p.checked_pow(k)?;
        Some(Generator { kind: GenKind::A, index: k, degree: Degree::new(d, 0) })
    }

    /// `b_k` for the prime `p`; `None` if `p^k` overflows.
    pub fn try_b(k: u32, p: u32) -> Option<Self> {
        let d = p.checked_pow(k)?;
        Some(Generator { kind: GenKind::B, index: k, degree: Degree::new(0, d) })
    }

    /// `a_k`; panics if `p^k` does not fit in `u32`.
    pub fn a(k: u32, p: u32) -> Self {
        Self::try_a(k, p).expect("generator degree overflow")
    }

    /// `b_k`; panics if `p^k` does not fit in `u32`.
    pub fn b(k: u32, p: u32) -> Self {
        Self::try_b(k, p).expect("generator degree overflow")
    }

    /// `e_α^(k)`, `k >= 1`.
    pub fn e_alpha(k: u32) -> Self {
        assert!(k >= 1, "divided powers start at 1");
        Generator { kind: GenKind::EAlpha, index: k, degree: Degree::new(k, 0) }
    }

    /// `e_{α+β}^(k)`, `k >= 1`.
    pub fn e_alphabeta(k: u32) -> Self {
        assert!(k >= 1, "divided powers start at 1");
        Generator { kind: GenKind::EAlphaBeta, index: k, degree: Degree::new(k, k) }
    }

    /// `e_β^(k)`, `k >= 1`.
    pub fn e_beta(k: u32) -> Self {
        assert!(k >= 1, "divided powers start at 1");
        Generator { kind: GenKind::EBeta, index: k, degree: Degree::new(0, k) }
    }

    /// Divided generator of the given kind; panics on a small kind.
    pub fn divided(kind: GenKind, k: u32) -> Self {
        match kind {
            GenKind::EAlpha => Self::e_alpha(k),
            GenKind::EAlphaBeta => Self::e_alphabeta(k),
            GenKind::EBeta => Self::e_beta(k),
            _ => panic!("{kind:?} is not a divided-power kind"),
        }
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    /// Subscript `k` of `a_k`/`b_k`, or the divided power of `e_*^(k)`.
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// `Deg`, the norm of the degree.
    pub fn deg(&self) -> u32 {
        self.degree.norm()
    }

    pub fn is_small(&self) -> bool {
        self.kind.is_small()
    }

    pub fn is_divided(&self) -> bool {
        self.kind.is_divided()
    }

    /// The divided-power letter naming the same algebra element:
    /// `a_k ↦ e_α^(p^k)`, `b_k ↦ e_β^(p^k)`; divided letters map to themselves.
    pub fn to_divided(&self) -> Generator {
        match self.kind {
            GenKind::A => Generator::e_alpha(self.degree.alpha),
            GenKind::B => Generator::e_beta(self.degree.beta),
            _ => *self,
        }
    }
}

/// Intrinsic ordering by `(index, kind)`: `a_0 < b_0 < a_1 < …` and
/// `e_α^(1) < e_{α+β}^(1) < e_β^(1) < e_α^(2) < …`. This is the generator
/// ranking used by both monomial orders.
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index, self.kind, self.degree).cmp(&(other.index, other.kind, other.degree))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::A => write!(f, "a{}", self.index),
            GenKind::B => write!(f, "b{}", self.index),
            GenKind::EAlpha => write!(f, "ea({})", self.index),
            GenKind::EAlphaBeta => write!(f, "eab({})", self.index),
            GenKind::EBeta => write!(f, "eb({})", self.index),
        }
    }
}

/// A finite window of generators, sorted by the intrinsic generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<Generator>,
    p: Option<u32>,
}

impl Alphabet {
    /// `{a_k, b_k | j <= k < m}` for the prime `p`.
    pub fn small(p: u32, j: u32, m: u32) -> Result<Self, AlgebraError> {
        let mut letters = Vec::new();
        for k in j..m {
            letters.push(Generator::try_a(k, p).ok_or(AlgebraError::DegreeOverflow)?);
            letters.push(Generator::try_b(k, p).ok_or(AlgebraError::DegreeOverflow)?);
        }
        Ok(Alphabet { letters, p: Some(p) })
    }

    /// All divided generators `e_*^(k)` with `1 <= k <= max_power`.
    pub fn divided(max_power: u32) -> Self {
        let mut letters = Vec::new();
        for k in 1..=max_power {
            for kind in [GenKind::EAlpha, GenKind::EAlphaBeta, GenKind::EBeta] {
                letters.push(Generator::divided(kind, k));
            }
        }
        Alphabet { letters, p: None }
    }

    /// An alphabet with exactly the given letters.
    pub fn from_letters(mut letters: Vec<Generator>, p: Option<u32>) -> Self {
        letters.sort();
        letters.dedup();
        Alphabet { letters, p }
    }

    pub fn empty() -> Self {
        Alphabet { letters: Vec::new(), p: None }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The prime used to assign degrees to small generators, if any.
    pub fn p(&self) -> Option<u32> {
        self.p
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.letters.binary_search(g).is_ok()
    }

    /// Position of `g` in the sorted letter list.
    pub fn position(&self, g: &Generator) -> Option<usize> {
        self.letters.binary_search(g).ok()
    }

    /// Find the letter with the given kind and index.
    pub fn lookup(&self, kind: GenKind, index: u32) -> Option<Generator> {
        self.letters.iter().copied().find(|g| g.kind() == kind && g.index() == index)
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Alphabet::from_letters(letters, self.p.or(other.p))
    }

    /// Letters of `self` that also lie in `other`.
    pub fn intersect(&self, other: &[Generator]) -> Alphabet {
        let letters = self.letters.iter().copied().filter(|g| other.contains(g)).collect();
        Alphabet { letters, p: self.p }
    }
}
