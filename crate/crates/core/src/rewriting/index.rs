//! Aho–Corasick automaton over rule left-hand sides.
//!
//! Normal-form computation spends nearly all of its time asking "which lhs
//! occurs in this word, and where". The automaton answers that in one pass
//! over the word regardless of the number of rules.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::free_algebra::Generator;

#[derive(Clone, Debug)]
pub(crate) struct LhsIndex {
    columns: Vec<Generator>,
    goto_table: Vec<u32>,
    /// Rules whose lhs ends at this state, including via suffix links.
    outputs: Vec<Vec<u32>>,
    lens: Vec<usize>,
    max_len: usize,
}

pub(crate) const ROOT: u32 = 0;

impl LhsIndex {
    pub(crate) fn build(patterns: &[&[Generator]]) -> Self {
        let mut columns: Vec<Generator> = patterns.iter().flat_map(|p| p.iter().copied()).collect();
        columns.sort();
        columns.dedup();
        let n = columns.len();
        let col = |g: &Generator| columns.binary_search(g).expect("pattern letter");

        // Trie with explicit children; u32::MAX marks a missing edge.
        let mut trie: Vec<u32> = alloc::vec![u32::MAX; n];
        let mut outputs: Vec<Vec<u32>> = alloc::vec![Vec::new()];
        for (id, pat) in patterns.iter().enumerate() {
            let mut s = 0usize;
            for g in pat.iter() {
                let c = col(g);
                if trie[s * n + c] == u32::MAX {
                    let new = outputs.len();
                    trie[s * n + c] = new as u32;
                    trie.extend(core::iter::repeat_n(u32::MAX, n));
                    outputs.push(Vec::new());
                }
                s = trie[s * n + c] as usize;
            }
            outputs[s].push(id as u32);
        }

        // BFS to fill failure transitions and merge outputs.
        let states = outputs.len();
        let mut fail = alloc::vec![0u32; states];
        let mut queue = VecDeque::new();
        for c in 0..n {
            let t = trie[c];
            if t == u32::MAX {
                trie[c] = ROOT;
            } else {
                fail[t as usize] = ROOT;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            let s = s as usize;
            let inherited = outputs[fail[s] as usize].clone();
            outputs[s].extend(inherited);
            for c in 0..n {
                let t = trie[s * n + c];
                let via_fail = trie[fail[s] as usize * n + c];
                if t == u32::MAX {
                    trie[s * n + c] = via_fail;
                } else {
                    fail[t as usize] = via_fail;
                    queue.push_back(t);
                }
            }
        }
        for out in &mut outputs {
            out.sort_unstable();
            out.dedup();
        }
        let lens = patterns.iter().map(|p| p.len()).collect();
        let max_len = patterns.iter().map(|p| p.len()).max().unwrap_or(0);
        LhsIndex { columns, goto_table: trie, outputs, lens, max_len }
    }

    #[inline]
    pub(crate) fn step(&self, state: u32, g: &Generator) -> u32 {
        match self.columns.binary_search(g) {
            Ok(c) => self.goto_table[state as usize * self.columns.len() + c],
            Err(_) => ROOT,
        }
    }

    /// Does some lhs end at this state?
    #[inline]
    pub(crate) fn accepting(&self, state: u32) -> bool {
        !self.outputs[state as usize].is_empty()
    }

    pub(crate) fn outputs(&self, state: u32) -> &[u32] {
        &self.outputs[state as usize]
    }

    /// The preferred redex: leftmost start, then longest lhs, then lowest rule index.
    pub(crate) fn find(&self, word: &[Generator]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None; // (start, rule, len)
        let mut state = ROOT;
        for (i, g) in word.iter().enumerate() {
            if let Some((s, _, _)) = best {
                if i + 1 >= s + self.max_len + 1 {
                    break;
                }
            }
            state = self.step(state, g);
            for &r in self.outputs(state) {
                let len = self.lens[r as usize];
                let start = i + 1 - len;
                let better = match best {
                    None => true,
                    Some((bs, br, bl)) => (start, core::cmp::Reverse(len), r as usize) < (bs, core::cmp::Reverse(bl), br),
                };
                if better {
                    best = Some((start, r as usize, len));
                }
            }
        }
        best.map(|(s, r, _)| (r, s))
    }

    /// All occurrences `(rule, start)` in the word.
    pub(crate) fn find_all(&self, word: &[Generator]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut state = ROOT;
        for (i, g) in word.iter().enumerate() {
            state = self.step(state, g);
            for &r in self.outputs(state) {
                out.push((r as usize, i + 1 - self.lens[r as usize]));
            }
        }
        out
    }

    pub(crate) fn is_irreducible(&self, word: &[Generator]) -> bool {
        let mut state = ROOT;
        for g in word {
            state = self.step(state, g);
            if self.accepting(state) {
                return false;
            }
        }
        true
    }
}
