use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign};

/// An element `k_α α + k_β β` of the grading monoid `S = ℕα ⊕ ℕβ`.
///
/// The derived ordering is lexicographic on `(alpha, beta)`; it is only used
/// to list degrees deterministically, never as a monomial order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    pub alpha: u32,
    pub beta: u32,
}

impl Degree {
    pub const ZERO: Degree = Degree { alpha: 0, beta: 0 };

    pub const fn new(alpha: u32, beta: u32) -> Self {
        Degree { alpha, beta }
    }

    /// The norm `N(k_α α + k_β β) = k_α + k_β`; `Deg` of a word is the norm of its degree.
    pub const fn norm(self) -> u32 {
        self.alpha + self.beta
    }

    pub const fn is_zero(self) -> bool {
        self.alpha == 0 && self.beta == 0
    }

    /// Componentwise difference, if `other <= self` componentwise.
    pub fn checked_sub(self, other: Degree) -> Option<Degree> {
        Some(Degree {
            alpha: self.alpha.checked_sub(other.alpha)?,
            beta: self.beta.checked_sub(other.beta)?,
        })
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(self, other: Degree) -> bool {
        self.alpha <= other.alpha && self.beta <= other.beta
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree { alpha: self.alpha + rhs.alpha, beta: self.beta + rhs.beta }
    }
}

impl AddAssign for Degree {
    fn add_assign(&mut self, rhs: Degree) {
        *self = *self + rhs;
    }
}

impl Sum for Degree {
    fn sum<I: Iterator<Item = Degree>>(iter: I) -> Degree {
        iter.fold(Degree::ZERO, Add::add)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}α+{}β", self.alpha, self.beta)
    }
}
