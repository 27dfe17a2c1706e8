//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's arithmetic: each oracle is an independent computation that the
//! crate's answers are compared against.

#![allow(dead_code)]

pub mod displays;
pub mod weyl;

use num_bigint::BigUint;
use sl3res_core::{Generator, Word};

/// `C(n, k)` from factorials.
pub fn factorial_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let fact = |x: u64| (1..=x).fold(BigUint::from(1u32), |acc, i| acc * i);
    fact(n) / (fact(k) * fact(n - k))
}

/// Rank of a dense matrix over `F_p` by plain Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let k = m[r][c];
                for cc in 0..cols {
                    m[r][cc] = (m[r][cc] + p * p - k * m[rank][cc] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
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

/// Word builder for the small alphabet at a fixed prime.
#[derive(Clone, Copy, Debug)]
pub struct Letters {
    pub p: u32,
}

impl Letters {
    pub fn a(self, k: u32) -> Word {
        Word::letter(Generator::a(k, self.p))
    }

    pub fn b(self, k: u32) -> Word {
        Word::letter(Generator::b(k, self.p))
    }

    /// `p^k`.
    pub fn q(self, k: u32) -> u32 {
        self.p.pow(k)
    }
}

/// Concatenate words.
pub fn cat(parts: &[Word]) -> Word {
    parts.iter().fold(Word::empty(), |acc, w| acc.concat(w))
}
