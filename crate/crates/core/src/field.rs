//! Exact coefficient fields.
//!
//! Two implementations are provided: [`Fp`], residues modulo a prime, and
//! [`Rationals`], arbitrary-precision fractions. Elements are plain values and
//! the field object carries the arithmetic, so a `Polynomial` can hold its
//! field by value and compare fields for compatibility.

use alloc::format;
use alloc::string::String;
use core::fmt::Debug;
use core::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Characteristic of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// Exact rational arithmetic.
    Rational,
    /// Residues modulo the given prime.
    Prime(u32),
}

impl FieldSpec {
    /// The characteristic: `0` for the rationals, `p` otherwise.
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

/// Arithmetic of an exact field. All operations are total except `inv(0)`.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// The binomial coefficient `C(n, k)` as a field element.
    fn binomial(&self, n: u64, k: u64) -> Self::Elem;
    /// Sign and magnitude for printing: residues above `p/2` print as
    /// negatives so that `p - 1` reads as `-1`.
    fn signed_parts(&self, a: &Self::Elem) -> (bool, String);

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Render a single element, e.g. `-1` or `3/2`.
    fn format(&self, a: &Self::Elem) -> String {
        let (neg, mag) = self.signed_parts(a);
        if neg {
            format!("-{mag}")
        } else {
            mag
        }
    }
}

/// Residues modulo a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

/// Error returned when constructing `F_p` with a non-prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not a prime below 2^31")]
pub struct NotPrime(pub u32);

impl Fp {
    pub fn new(p: u32) -> Result<Self, NotPrime> {
        if p < (1 << 31) && is_prime(p) {
            Ok(Fp { p })
        } else {
            Err(NotPrime(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn pow(&self, base: u32, mut exp: u64) -> u32 {
        let p = u64::from(self.p);
        let mut acc = 1u64 % p;
        let mut b = u64::from(base) % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `C(n, k) mod p` by Lucas' theorem: the product of digit binomials in base `p`.
pub fn lucas(n: u64, k: u64, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let pp = u64::from(p);
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % pp, k % pp);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial_mod(ni, ki, pp) % pp;
        n /= pp;
        k /= pp;
    }
    acc as u32
}

/// `C(n, k) mod p` for `k <= n < p` via `n! / (k! (n-k)!)`; all factors are units.
fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * mod_pow(den, p - 2, p) % p
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Exact `C(n, k)` as a big integer.
pub fn binomial_exact(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

impl Field for Fp {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(i64::from(self.p)) as u32
    }
    fn from_bigint(&self, n: &BigInt) -> u32 {
        let r = n % BigInt::from(self.p);
        let r = if r.is_negative() { r + BigInt::from(self.p) } else { r };
        r.to_u32().expect("residue fits in u32")
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) + u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) * u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, u64::from(self.p) - 2))
        }
    }
    fn binomial(&self, n: u64, k: u64) -> u32 {
        lucas(n, k, self.p)
    }
    fn signed_parts(&self, a: &u32) -> (bool, String) {
        if self.p > 2 && *a > self.p / 2 {
            (true, format!("{}", self.p - *a))
        } else {
            (false, format!("{a}"))
        }
    }
}

/// The field of rational numbers with arbitrary-precision numerator and
/// denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn binomial(&self, n: u64, k: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(binomial_exact(n, k)))
    }
    fn signed_parts(&self, a: &BigRational) -> (bool, String) {
        let mag = a.abs();
        let text = if mag.is_integer() {
            format!("{}", mag.numer())
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        (a.is_negative(), text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial_binomial_mod(n: u64, k: u64, p: u32) -> u32 {
        let mut f = BigUint::one();
        for i in 1..=n {
            f *= BigUint::from(i);
        }
        let mut g = BigUint::one();
        for i in 1..=k {
            g *= BigUint::from(i);
        }
        let mut h = BigUint::one();
        for i in 1..=(n - k) {
            h *= BigUint::from(i);
        }
        ((f / (g * h)) % BigUint::from(p)).to_u32().unwrap()
    }

    #[test]
    fn lucas_matches_factorials() {
        for p in [2u32, 3, 5, 7] {
            for n in 0..=60u64 {
                for k in 0..=n {
                    assert_eq!(lucas(n, k, p), factorial_binomial_mod(n, k, p), "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn wilson() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let f = Fp::new(p).unwrap();
            let mut acc = f.one();
            for i in 1..p {
                acc = f.mul(&acc, &i);
            }
            assert_eq!(acc, f.from_i64(-1));
        }
    }

    #[test]
    fn fp_rejects_composites() {
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(7).is_ok());
    }

    #[test]
    fn signed_printing() {
        let f = Fp::new(5).unwrap();
        assert_eq!(f.format(&4), "-1");
        assert_eq!(f.format(&2), "2");
        assert_eq!(f.format(&3), "-2");
        let f2 = Fp::new(2).unwrap();
        assert_eq!(f2.format(&1), "1");
        let q = Rationals;
        let half = q.inv(&q.from_i64(-2)).unwrap();
        assert_eq!(q.format(&half), "-1/2");
    }

    #[test]
    fn inverses() {
        let f = Fp::new(7).unwrap();
        for a in 1..7u32 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), None);
    }
}
