//! The closed-form descriptions of the chain sets of `G_{jm}`, their degree
//! tables and the equal-degree pairs, instantiated by hand on a window.
//! Degrees come from the tabulated formulas, not from the words.

use sl3res_core::{Degree, Word};

use super::{cat, Letters};

fn d(alpha: u32, beta: u32) -> Degree {
    Degree::new(alpha, beta)
}

/// Index pairs `j <= k < l <= m − 1`.
fn pairs(j: u32, m: u32) -> Vec<(u32, u32)> {
    (j..m).flat_map(|k| (k + 1..m).map(move |l| (k, l))).collect()
}

/// Index triples `j <= k < l < r <= m − 1`.
fn triples(j: u32, m: u32) -> Vec<(u32, u32, u32)> {
    pairs(j, m).into_iter().flat_map(|(k, l)| (l + 1..m).map(move |r| (k, l, r))).collect()
}

/// `T₁` with the tabulated degrees.
pub fn t1(p: u32, j: u32, m: u32) -> Vec<(Word, Degree)> {
    let x = Letters { p };
    let q = |k| x.q(k);
    let pu = p as usize;
    let mut out = Vec::new();
    for (k, l) in pairs(j, m) {
        out.push((cat(&[x.a(l), x.b(k)]), d(q(l), q(k))));
        out.push((cat(&[x.b(l), x.a(k)]), d(q(k), q(l))));
        out.push((cat(&[x.a(l), x.a(k)]), d(q(l) + q(k), 0)));
        out.push((cat(&[x.b(l), x.b(k)]), d(0, q(l) + q(k))));
    }
    for k in j..m {
        out.push((x.a(k).repeat(pu), d(q(k + 1), 0)));
        out.push((x.b(k).repeat(pu), d(0, q(k + 1))));
        out.push((cat(&[x.b(k), x.a(k)]).repeat(pu), d(q(k + 1), q(k + 1))));
        if p >= 3 {
            out.push((cat(&[x.b(k), x.b(k), x.a(k)]), d(q(k), 2 * q(k))));
            out.push((cat(&[x.b(k), x.a(k), x.a(k)]), d(2 * q(k), q(k))));
        }
    }
    out
}

/// `T₂` with the tabulated degrees. The table entry for `a_r b_l b_k`
/// reads `p^l α + …`; the word has `α`-degree `p^r`, which is used here.
pub fn t2(p: u32, j: u32, m: u32) -> Vec<(Word, Degree)> {
    let x = Letters { p };
    let q = |k| x.q(k);
    let pu = p as usize;
    let mut out = Vec::new();
    for (k, l, r) in triples(j, m) {
        out.push((cat(&[x.a(r), x.a(l), x.a(k)]), d(q(r) + q(l) + q(k), 0)));
        out.push((cat(&[x.a(r), x.a(l), x.b(k)]), d(q(r) + q(l), q(k))));
        out.push((cat(&[x.a(r), x.b(l), x.a(k)]), d(q(r) + q(k), q(l))));
        out.push((cat(&[x.a(r), x.b(l), x.b(k)]), d(q(r), q(l) + q(k))));
        out.push((cat(&[x.b(r), x.a(l), x.a(k)]), d(q(l) + q(k), q(r))));
        out.push((cat(&[x.b(r), x.a(l), x.b(k)]), d(q(l), q(r) + q(k))));
        out.push((cat(&[x.b(r), x.b(l), x.a(k)]), d(q(k), q(r) + q(l))));
        out.push((cat(&[x.b(r), x.b(l), x.b(k)]), d(0, q(r) + q(l) + q(k))));
    }
    for (k, l) in pairs(j, m) {
        let ak_p = x.a(k).repeat(pu);
        let bk_p = x.b(k).repeat(pu);
        let bkak_p = cat(&[x.b(k), x.a(k)]).repeat(pu);
        let blal_p = cat(&[x.b(l), x.a(l)]).repeat(pu);
        out.push((cat(&[x.a(l), ak_p.clone()]), d(q(l) + q(k + 1), 0)));
        out.push((cat(&[x.a(l), bk_p.clone()]), d(q(l), q(k + 1))));
        out.push((cat(&[x.a(l), bkak_p.clone()]), d(q(l) + q(k + 1), q(k + 1))));
        out.push((cat(&[x.b(l), ak_p]), d(q(k + 1), q(l))));
        out.push((cat(&[x.b(l), bk_p]), d(0, q(l) + q(k + 1))));
        out.push((cat(&[x.b(l), bkak_p]), d(q(k + 1), q(k + 1) + q(l))));
        out.push((cat(&[x.a(l).repeat(pu), x.a(k)]), d(q(l + 1) + q(k), 0)));
        out.push((cat(&[x.a(l).repeat(pu), x.b(k)]), d(q(l + 1), q(k))));
        out.push((cat(&[x.b(l).repeat(pu), x.a(k)]), d(q(k), q(l + 1))));
        out.push((cat(&[x.b(l).repeat(pu), x.b(k)]), d(0, q(l + 1) + q(k))));
        out.push((cat(&[blal_p.clone(), x.a(k)]), d(q(l + 1) + q(k), q(l + 1))));
        out.push((cat(&[blal_p, x.b(k)]), d(q(l + 1), q(l + 1) + q(k))));
        if p >= 3 {
            let (ak, bk, al, bl) = (x.a(k), x.b(k), x.a(l), x.b(l));
            out.push((cat(&[al.clone(), bk.clone(), bk.clone(), ak.clone()]), d(q(l) + q(k), 2 * q(k))));
            out.push((cat(&[al.clone(), bk.clone(), ak.clone(), ak.clone()]), d(q(l) + 2 * q(k), q(k))));
            out.push((cat(&[bl.clone(), bk.clone(), bk.clone(), ak.clone()]), d(q(k), 2 * q(k) + q(l))));
            out.push((cat(&[bl.clone(), bk.clone(), ak.clone(), ak.clone()]), d(2 * q(k), q(l) + q(k))));
            out.push((cat(&[bl.clone(), bl.clone(), al.clone(), ak.clone()]), d(q(l) + q(k), 2 * q(l))));
            out.push((cat(&[bl.clone(), bl.clone(), al.clone(), bk.clone()]), d(q(l), 2 * q(l) + q(k))));
            out.push((cat(&[bl.clone(), al.clone(), al.clone(), ak]), d(2 * q(l) + q(k), q(l))));
            out.push((cat(&[bl, al.clone(), al, bk]), d(2 * q(l), q(l) + q(k))));
        }
    }
    for k in j..m {
        let bkak_p = cat(&[x.b(k), x.a(k)]).repeat(pu);
        out.push((x.a(k).repeat(pu + 1), d(q(k + 1) + q(k), 0)));
        out.push((x.b(k).repeat(pu + 1), d(0, q(k + 1) + q(k))));
        out.push((cat(&[x.b(k), bkak_p.clone()]), d(q(k + 1), q(k + 1) + q(k))));
        out.push((cat(&[bkak_p, x.a(k)]), d(q(k + 1) + q(k), q(k + 1))));
        out.push((cat(&[x.b(k), x.a(k)]).repeat(pu + 1), d(q(k + 1) + q(k), q(k + 1) + q(k))));
        if p >= 3 {
            out.push((cat(&[x.b(k), x.b(k), x.a(k), x.a(k)]), d(2 * q(k), 2 * q(k))));
        }
    }
    out
}

/// The equal-degree pairs `(w₁, w₂) ∈ T₁ × T₂`, as listed in closed form.
///
/// Two entries of the list are read with their evident corrections: the
/// pair `((b_k a_k)^p, a_{k+1} b_k)` is `((b_k a_k)^p, a_{k+1} b_k^p)` (and
/// likewise for `b_{k+1} a_k^p`), since `a_{k+1} b_k` has a different degree
/// and lies in `T₁`, not `T₂`; and `(a_l b_k, a_l b_{k−1}^p)`, which is
/// listed twice, stands once for `(a_l a_k, a_l a_{k−1}^p)`.
pub fn w(p: u32, j: u32, m: u32) -> Vec<(Word, Word)> {
    let x = Letters { p };
    let pu = p as usize;
    let mut out = Vec::new();
    for (k, l) in pairs(j, m) {
        if k > j {
            out.push((cat(&[x.a(l), x.b(k)]), cat(&[x.a(l), x.b(k - 1).repeat(pu)])));
            out.push((cat(&[x.a(l), x.a(k)]), cat(&[x.a(l), x.a(k - 1).repeat(pu)])));
            out.push((cat(&[x.b(l), x.a(k)]), cat(&[x.b(l), x.a(k - 1).repeat(pu)])));
            out.push((cat(&[x.b(l), x.b(k)]), cat(&[x.b(l), x.b(k - 1).repeat(pu)])));
        }
        if l + 1 < m {
            out.push((cat(&[x.a(l + 1), x.a(k)]), cat(&[x.a(l).repeat(pu), x.a(k)])));
            out.push((cat(&[x.a(l + 1), x.b(k)]), cat(&[x.a(l).repeat(pu), x.b(k)])));
            out.push((cat(&[x.b(l + 1), x.a(k)]), cat(&[x.b(l).repeat(pu), x.a(k)])));
            out.push((cat(&[x.b(l + 1), x.b(k)]), cat(&[x.b(l).repeat(pu), x.b(k)])));
        }
    }
    for k in j..m.saturating_sub(1) {
        let bkak_p = cat(&[x.b(k), x.a(k)]).repeat(pu);
        out.push((bkak_p.clone(), cat(&[x.a(k + 1), x.b(k).repeat(pu)])));
        out.push((bkak_p, cat(&[x.b(k + 1), x.a(k).repeat(pu)])));
        out.push((cat(&[x.a(k + 1), x.a(k)]), x.a(k).repeat(pu + 1)));
        out.push((cat(&[x.b(k + 1), x.b(k)]), x.b(k).repeat(pu + 1)));
    }
    if p == 2 {
        for k in j + 1..m {
            out.push((x.a(k).repeat(2), cat(&[x.a(k), x.a(k - 1).repeat(2)])));
            out.push((x.b(k).repeat(2), cat(&[x.b(k), x.b(k - 1).repeat(2)])));
        }
        for l in j + 1..m.saturating_sub(1) {
            let prev = cat(&[x.b(l - 1), x.a(l - 1)]).repeat(2);
            out.push((cat(&[x.a(l + 1), x.b(l)]), cat(&[x.a(l), prev.clone()])));
            out.push((cat(&[x.b(l + 1), x.a(l)]), cat(&[x.b(l), prev])));
        }
    }
    out
}
