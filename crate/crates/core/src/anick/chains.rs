//! Anick chains up to level two.
//!
//! For a reduced basis the level-one chains are the leading words and the
//! level-two chains are the tips `w = m₁·v = u·m₂` of overlaps of two leading
//! words that contain no shorter overlap tip as a factor.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use super::AnickError;
use crate::field::Field;
use crate::free_algebra::{Degree, Generator, OrderSpec, Word};
use crate::rewriting::{find_overlaps, OverlapKind, RewriteSystem};

/// The homological level of a chain: `-1` (the unit `e`), `0` (letters),
/// `1` (leading words), `2` (minimal overlap tips).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Unit,
    Letter,
    Lhs,
    Overlap,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::Unit, Level::Letter, Level::Lhs, Level::Overlap];

    pub fn as_i8(self) -> i8 {
        match self {
            Level::Unit => -1,
            Level::Letter => 0,
            Level::Lhs => 1,
            Level::Overlap => 2,
        }
    }

    pub fn from_i8(n: i8) -> Option<Level> {
        Level::ALL.into_iter().find(|l| l.as_i8() == n)
    }

    /// The level a differential out of `self` lands in.
    pub fn below(self) -> Option<Level> {
        Level::from_i8(self.as_i8() - 1)
    }

    pub fn above(self) -> Option<Level> {
        Level::from_i8(self.as_i8() + 1)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// An Anick chain: a level and a word (`1` for the unit chain).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub level: Level,
    pub word: Word,
}

impl Chain {
    pub fn unit() -> Self {
        Chain { level: Level::Unit, word: Word::empty() }
    }

    pub fn degree(&self) -> Degree {
        self.word.degree()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            Level::Unit => f.write_str("e"),
            _ => write!(f, "{}", self.word),
        }
    }
}

/// A level-two chain with its unique decomposition `word = left·v = u·right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoChain {
    pub word: Word,
    /// `m₁`, the leading word that is a prefix of `word`.
    pub left: Word,
    /// `m₂`, the leading word that is a suffix of `word`.
    pub right: Word,
    pub u: Word,
    pub v: Word,
    /// Rule indices of `left` and `right`.
    pub rules: (usize, usize),
}

/// The chain sets `T₀`, `T₁`, `T₂` of a reduced system, each sorted ascending
/// in the system's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSets {
    pub t0: Vec<Generator>,
    pub t1: Vec<Word>,
    pub t2: Vec<TwoChain>,
}

impl ChainSets {
    pub fn compute<F: Field>(sys: &RewriteSystem<F>) -> Result<Self, AnickError> {
        let t0 = sys.alphabet().letters().to_vec();
        let t1 = lhs_antichain(sys)?;
        let t2 = two_chains(sys)?;
        Ok(ChainSets { t0, t1, t2 })
    }

    /// The words of `T_n` at `level` (the unit chain is the empty word).
    pub fn words(&self, level: Level) -> Vec<Word> {
        match level {
            Level::Unit => alloc::vec![Word::empty()],
            Level::Letter => self.t0.iter().map(|g| Word::letter(*g)).collect(),
            Level::Lhs => self.t1.clone(),
            Level::Overlap => self.t2.iter().map(|c| c.word.clone()).collect(),
        }
    }

    pub fn chains(&self, level: Level) -> Vec<Chain> {
        self.words(level).into_iter().map(|word| Chain { level, word }).collect()
    }

    pub fn len(&self, level: Level) -> usize {
        match level {
            Level::Unit => 1,
            Level::Letter => self.t0.len(),
            Level::Lhs => self.t1.len(),
            Level::Overlap => self.t2.len(),
        }
    }
}

fn sorted_by(order: &OrderSpec, mut words: Vec<Word>) -> Vec<Word> {
    words.sort_by(|a, b| order.cmp(a, b));
    words
}

/// The leading words, checked to form an anti-chain under the factor order.
fn lhs_antichain<F: Field>(sys: &RewriteSystem<F>) -> Result<Vec<Word>, AnickError> {
    let lhs: Vec<Word> = sys.rules().iter().map(|r| r.lhs.clone()).collect();
    for (i, x) in lhs.iter().enumerate() {
        for (j, y) in lhs.iter().enumerate() {
            if i != j && x.is_factor_of(y) {
                return Err(AnickError::NotAntichain { inner: x.clone(), outer: y.clone() });
            }
        }
    }
    Ok(sorted_by(sys.order(), lhs))
}

/// `T₁` as chains.
pub fn t1_set<F: Field>(sys: &RewriteSystem<F>) -> Result<Vec<Chain>, AnickError> {
    Ok(lhs_antichain(sys)?.into_iter().map(|word| Chain { level: Level::Lhs, word }).collect())
}

/// `T₂` as chains.
pub fn t2_set<F: Field>(sys: &RewriteSystem<F>) -> Result<Vec<Chain>, AnickError> {
    Ok(two_chains(sys)?.into_iter().map(|c| Chain { level: Level::Overlap, word: c.word }).collect())
}

/// All minimal overlaps with their decompositions.
pub fn two_chains<F: Field>(sys: &RewriteSystem<F>) -> Result<Vec<TwoChain>, AnickError> {
    lhs_antichain(sys)?;
    let rules = sys.rules();
    let mut by_tip: BTreeMap<Word, Vec<TwoChain>> = BTreeMap::new();
    for (i, r1) in rules.iter().enumerate() {
        for (j, r2) in rules.iter().enumerate() {
            for sk in find_overlaps(&r1.lhs, &r2.lhs) {
                if sk.kind != OverlapKind::Overlap {
                    continue;
                }
                by_tip.entry(sk.tip.clone()).or_default().push(TwoChain {
                    word: sk.tip,
                    left: r1.lhs.clone(),
                    right: r2.lhs.clone(),
                    u: sk.u,
                    v: sk.v,
                    rules: (i, j),
                });
            }
        }
    }
    let tips: BTreeSet<&Word> = by_tip.keys().collect();
    let mut out = Vec::new();
    for (w, witnesses) in &by_tip {
        let has_smaller = tips.iter().any(|t| t.len() < w.len() && t.is_factor_of(w));
        if has_smaller {
            continue;
        }
        if witnesses.len() != 1 {
            return Err(AnickError::AmbiguousOverlap { tip: w.clone() });
        }
        out.push(witnesses[0].clone());
    }
    out.sort_by(|a, b| sys.order().cmp(&a.word, &b.word));
    Ok(out)
}

/// `deg(w)` for every chain of `level`.
pub fn degree_table(chains: &ChainSets, level: Level) -> Vec<(Word, Degree)> {
    chains.words(level).into_iter().map(|w| {
        let d = w.degree();
        (w, d)
    }).collect()
}

/// Pairs `(w₁, w₂) ∈ T₁ × T₂` with `deg(w₁) = deg(w₂)`: the only places a
/// level-two differential can have a scalar coordinate.
pub fn matches_w(chains: &ChainSets) -> Vec<(Word, Word)> {
    let mut by_degree: BTreeMap<Degree, Vec<&Word>> = BTreeMap::new();
    for w in &chains.t1 {
        by_degree.entry(w.degree()).or_default().push(w);
    }
    let mut out = Vec::new();
    for c in &chains.t2 {
        if let Some(us) = by_degree.get(&c.word.degree()) {
            out.extend(us.iter().map(|u| ((*u).clone(), c.word.clone())));
        }
    }
    out
}
