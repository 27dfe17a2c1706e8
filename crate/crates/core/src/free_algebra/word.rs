use alloc::vec::Vec;
use core::fmt;

use super::{Degree, Generator};

/// A word in the free monoid. The total degree is cached.
///
/// The derived `Ord` is a structural order for use as a map key; monomial
/// comparisons always go through [`super::OrderSpec`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Generator>,
    degree: Degree,
}

impl Word {
    /// The empty word `e`.
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        let degree = letters.iter().map(Generator::degree).sum();
        Word { letters, degree }
    }

    pub fn from_slice(letters: &[Generator]) -> Self {
        Word::new(letters.to_vec())
    }

    pub fn letter(g: Generator) -> Self {
        Word { degree: g.degree(), letters: alloc::vec![g] }
    }

    /// `g^n`.
    pub fn power(g: Generator, n: usize) -> Self {
        Word::new(alloc::vec![g; n])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// `Deg`, the norm of the degree.
    pub fn deg(&self) -> u32 {
        self.degree.norm()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters, degree: self.degree + other.degree }
    }

    /// `u · self · v`.
    pub fn sandwich(&self, u: &[Generator], v: &[Generator]) -> Word {
        let mut letters = Vec::with_capacity(u.len() + self.len() + v.len());
        letters.extend_from_slice(u);
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(v);
        Word::new(letters)
    }

    /// `self^n`.
    pub fn repeat(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word::new(letters)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word::from_slice(&self.letters[..len])
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word::from_slice(&self.letters[start..])
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word::from_slice(&self.letters[start..end])
    }

    /// Positions at which `pattern` occurs as a factor.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        if pattern.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - pattern.len())
            .filter(|&i| self.letters[i..i + pattern.len()] == pattern.letters[..])
            .collect()
    }

    /// The factor order `≺`: `self` occurs in `other`.
    pub fn is_factor_of(&self, other: &Word) -> bool {
        self.is_empty() || !other.occurrences(self).is_empty()
    }

    /// Replace each small letter by the divided letter naming the same element.
    pub fn expand_small(&self) -> Word {
        Word { letters: self.letters.iter().map(Generator::to_divided).collect(), degree: self.degree }
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
