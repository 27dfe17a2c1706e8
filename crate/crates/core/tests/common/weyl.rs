//! A faithful realisation of `U(n⁺)` for `sl3` in characteristic zero.
//!
//! `e_α`, `e_β` and `e_{α+β} = e_α e_β − e_β e_α` act on `Q[x, y, z]` as the
//! left-invariant vector fields of the Heisenberg group,
//!
//! ```text
//! e_α = ∂x,   e_β = ∂y + x ∂z,   e_{α+β} = ∂z,
//! ```
//!
//! and divided powers are `e^k / k!`. Operators are kept in normal order
//! `x^i ∂x^a ∂y^b ∂z^c`, composed with the Weyl-algebra rule
//! `∂x^a x^i = Σ_r C(a, r) i!/(i−r)! x^{i−r} ∂x^{a−r}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sl3res_core::{GenKind, Generator, Word};

use super::factorial_binomial;

/// Normal-ordered differential operator: `[i, a, b, c] ↦ coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Op(BTreeMap<[u32; 4], BigRational>);

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn big(n: num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn factorial(n: u64) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, i| acc * int(i))
}

impl Op {
    pub fn one() -> Self {
        Op(BTreeMap::from([([0; 4], BigRational::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, key: [u32; 4], c: BigRational) {
        let e = self.0.entry(key).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, c: &BigRational, other: &Op) {
        for (k, v) in &other.0 {
            self.add_term(*k, c * v);
        }
    }

    pub fn compose(&self, other: &Op) -> Op {
        let mut out = Op::default();
        for (&[i, a, b, c], u) in &self.0 {
            for (&[i2, a2, b2, c2], v) in &other.0 {
                for r in 0..=a.min(i2) {
                    let falling = factorial(u64::from(i2)) / factorial(u64::from(i2 - r));
                    let coeff = u * v * big(factorial_binomial(a.into(), r.into())) * falling;
                    out.add_term([i + i2 - r, a + a2 - r, b + b2, c + c2], coeff);
                }
            }
        }
        out
    }

    /// `e_α^(k)`.
    pub fn alpha(k: u32) -> Op {
        Op(BTreeMap::from([([0, k, 0, 0], factorial(k.into()).recip())]))
    }

    /// `e_{α+β}^(k)`.
    pub fn alphabeta(k: u32) -> Op {
        Op(BTreeMap::from([([0, 0, 0, k], factorial(k.into()).recip())]))
    }

    /// `e_β^(k) = (∂y + x∂z)^k / k!`; the three symbols commute.
    pub fn beta(k: u32) -> Op {
        let mut out = Op::default();
        let kf = factorial(k.into());
        for j in 0..=k {
            out.add_term([j, 0, k - j, j], big(factorial_binomial(k.into(), j.into())) / &kf);
        }
        out
    }

    /// The PBW monomial `e_α^(ka) e_{α+β}^(kab) e_β^(kb)`.
    pub fn pbw(ka: u32, kab: u32, kb: u32) -> Op {
        Op::alpha(ka).compose(&Op::alphabeta(kab)).compose(&Op::beta(kb))
    }

    /// A small or divided generator; `a_k = e_α^(p^k)`, `b_k = e_β^(p^k)`.
    pub fn letter(g: &Generator, p: Option<u32>) -> Op {
        match g.kind() {
            GenKind::EAlpha => Op::alpha(g.index()),
            GenKind::EAlphaBeta => Op::alphabeta(g.index()),
            GenKind::EBeta => Op::beta(g.index()),
            GenKind::A => Op::alpha(p.expect("small letters need p").pow(g.index())),
            GenKind::B => Op::beta(p.expect("small letters need p").pow(g.index())),
        }
    }

    pub fn word(w: &Word, p: Option<u32>) -> Op {
        w.letters().iter().fold(Op::one(), |acc, g| acc.compose(&Op::letter(g, p)))
    }
}
