//! The surgery specialised to `G_m`: which pairs cancel, the coefficient
//! checks behind it, and the minimality certificate with `Ext` dimensions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::radical::{radical_membership, FreeGradedModule};
use super::surgery::{MinimalComplex, PrimeExactnessRow};
use super::MinimalError;
use crate::anick::{matches_w, window_complex, BasisElem, ChainSets, Level};
use crate::field::{Field, Fp};
use crate::free_algebra::{Degree, Word};
use crate::kostant::{small_groebner_basis, Window};

fn ba_power(win: &Window, k: u32, n: usize) -> Word {
    Word::from_slice(&[win.b(k), win.a(k)]).repeat(n)
}

/// `(b_k a_k)^p`.
pub fn cancelled_lhs(win: &Window, k: u32) -> Word {
    ba_power(win, k, win.p as usize)
}

/// `a_{k+1} b_k^p`.
pub fn cancelled_overlap(win: &Window, k: u32) -> Word {
    Word::letter(win.a(k + 1)).concat(&Word::power(win.b(k), win.p as usize))
}

/// `b_{k+1} a_k^p`, the other level-two chain coupled to `(b_k a_k)^p`.
pub fn partner_overlap(win: &Window, k: u32) -> Word {
    Word::letter(win.b(k + 1)).concat(&Word::power(win.a(k), win.p as usize))
}

/// The pairs `((b_k a_k)^p, a_{k+1} b_k^p)` for every `k` with `k, k+1` in the window.
pub fn kostant_cancel_pairs(win: &Window) -> Vec<(Word, Word)> {
    win.indices().filter(|k| k + 1 < win.m).map(|k| (cancelled_lhs(win, k), cancelled_overlap(win, k))).collect()
}

/// Whether every letter of `w` has its index in the window.
pub fn within(win: &Window, w: &Word) -> bool {
    w.letters().iter().all(|g| win.indices().contains(&g.index()))
}

/// `T′₁` and `T′₂` of a window as plain set differences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedChainSets {
    pub t1_prime: Vec<Word>,
    pub t2_prime: Vec<Word>,
}

/// `T′₁ = T₁ ∖ {(b_k a_k)^p}` over all `k` in the window, and
/// `T′₂ = T₂ ∖ {a_{k+1} b_k^p}` over adjacent `k, k+1` in the window.
pub fn reduced_chain_sets(win: &Window) -> Result<ReducedChainSets, MinimalError> {
    let sys = small_groebner_basis(win)?;
    let chains = ChainSets::compute(&sys)?;
    let drop1: Vec<Word> = win.indices().map(|k| cancelled_lhs(win, k)).collect();
    let drop2: Vec<Word> = kostant_cancel_pairs(win).into_iter().map(|(_, w)| w).collect();
    Ok(ReducedChainSets {
        t1_prime: chains.t1.iter().filter(|w| !drop1.contains(w)).cloned().collect(),
        t2_prime: chains.words(Level::Overlap).into_iter().filter(|w| !drop2.contains(w)).collect(),
    })
}

/// The modified complex for `win`, computed on the window extended by one
/// index so that every `(b_k a_k)^p` of the window has its partner
/// `a_{k+1} b_k^p`.
pub fn window_minimal_complex(win: &Window) -> Result<(Window, MinimalComplex<Fp>), MinimalError> {
    let ext = win.extended()?;
    let pairs: Vec<_> = win.indices().map(|k| (cancelled_lhs(&ext, k), cancelled_overlap(&ext, k))).collect();
    Ok((ext, MinimalComplex::new(window_complex(&ext)?, &pairs)?))
}

/// One numeric check: a computed coefficient against its expected value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientCheck {
    pub name: String,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub window: Window,
    pub checks: Vec<CoefficientCheck>,
}

impl CoefficientReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CoefficientCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CoefficientCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// The coefficients behind the surgery, for every `k` in the window:
///
/// * `lemma_one[k]`: coefficient of `(b_k a_k)^{p−1}` in `NF(b_k^{p−1} a_k^{p−1})`, expected 1;
/// * `lemma_two[k]`: coefficient of `(b_k a_k)^{p−1} b_k` in `NF(b_{k+1} a_k^{p−1})`, expected 1;
/// * `pivot(w)`: coefficient of `.(b_k a_k)^p` in `d₂(.w)` for
///   `w = a_{k+1} b_k^p` and `w = b_{k+1} a_k^p`, expected −1;
/// * `cross(w)`: coefficient of `.a_{k+1} b_{k+1}` in the same, expected 0;
/// * `rad_sum[k]`: whether `d₂(.a_{k+1} b_k^p) + .(b_k a_k)^p` has no scalar part;
/// * `lemma_zero(u, w)`: for every degree match `u ∈ T₁`, `w ∈ T₂` with
///   `w < u`, the coefficient of `.u` in `d₂(.w)` is 0 (the leading term of
///   `d₂(.w)` is `δ₂(.w)`, whose concatenation is `w`).
///
/// Everything is computed on the window extended by one index.
pub fn coefficient_lemma_checks(win: &Window) -> Result<CoefficientReport, MinimalError> {
    let ext = win.extended()?;
    let cx = window_complex(&ext)?;
    let f = cx.system().field().clone();
    let p = win.p as usize;
    let table = cx.product_table();
    let mut checks = Vec::new();
    let mut push = |name: String, expected: u32, found: u32| {
        checks.push(CoefficientCheck { name, expected: f.format(&expected), found: f.format(&found), passed: expected == found });
    };
    let minus_one = f.neg(&f.one());
    for k in win.indices() {
        let lhs = Word::power(ext.b(k), p - 1).concat(&Word::power(ext.a(k), p - 1));
        let nf = table.normal_form_word(&lhs);
        push(format!("lemma_one[{k}]"), 1, nf.coefficient(&ba_power(&ext, k, p - 1)));

        let lhs = Word::letter(ext.b(k + 1)).concat(&Word::power(ext.a(k), p - 1));
        let nf = table.normal_form_word(&lhs);
        push(format!("lemma_two[{k}]"), 1, nf.coefficient(&ba_power(&ext, k, p - 1).concat(&Word::letter(ext.b(k)))));

        let u = BasisElem::generator(cancelled_lhs(&ext, k));
        let cross = BasisElem::generator(Word::from_slice(&[ext.a(k + 1), ext.b(k + 1)]));
        for w in [cancelled_overlap(&ext, k), partner_overlap(&ext, k)] {
            let d = cx.differential_of_chain(Level::Overlap, &w)?;
            push(format!("pivot({w})"), minus_one, d.coefficient(&u));
            push(format!("cross({w})"), 0, d.coefficient(&cross));
        }

        let d = cx.differential_of_chain(Level::Overlap, &cancelled_overlap(&ext, k))?;
        let sum = d.add(&cx.basis(Level::Lhs, u));
        push(format!("rad_sum[{k}]"), 0, sum.scalar_part().len() as u32);
    }
    for (u, w) in matches_w(cx.chains()) {
        if cx.system().order().cmp(&w, &u) != Ordering::Less {
            continue;
        }
        let d = cx.differential_of_chain(Level::Overlap, &w)?;
        push(format!("lemma_zero({u}, {w})"), 0, d.coefficient(&BasisElem::generator(u.clone())));
    }
    Ok(CoefficientReport { window: *win, checks })
}

/// Outcome of a check run over a set of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl GeneratorCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Certificate that `P′₂ → P′₁ → P₀ → P₋₁` are the first steps of the minimal
/// resolution in degrees `Deg <= deg_bound`, with `Ext` dimensions read off
/// the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalComplexReport {
    pub window: Window,
    /// The extended window the maps were computed on.
    pub computed_on: Window,
    pub deg_bound: u32,
    /// Cancelled `(u, w, coefficient of .u in d₂(.w))`.
    pub pairs: Vec<(Word, Word, String)>,
    /// `T′₁`, `T′₂` restricted to the window.
    pub t1_prime: Vec<Word>,
    pub t2_prime: Vec<Word>,
    /// `im d₀ ⊂ Rad P₋₁`, `im d′₁ ⊂ Rad P₀`, `im d′₂ ⊂ Rad P′₁`.
    pub smallness: [GeneratorCheck; 3],
    /// `d′₁∘d′₂ = 0` on the generators of `P′₂`.
    pub composition: GeneratorCheck,
    pub exactness: Vec<PrimeExactnessRow>,
    /// Generator counts of `P₋₁, P₀, P′₁, P′₂` per degree (restricted to the
    /// window): the dimensions of `Ext⁰ … Ext³` in that degree.
    pub ext_dims: BTreeMap<Degree, [usize; 4]>,
}

impl MinimalComplexReport {
    pub fn smallness_passed(&self) -> bool {
        self.smallness.iter().all(GeneratorCheck::passed)
    }

    pub fn exactness_passed(&self) -> bool {
        self.exactness.iter().all(|r| r.exact)
    }

    pub fn passed(&self) -> bool {
        self.smallness_passed() && self.composition.passed() && self.exactness_passed()
    }

    /// `Ext^i` generator count summed over degrees.
    pub fn ext_total(&self, i: usize) -> usize {
        self.ext_dims.values().map(|c| c[i]).sum()
    }
}

/// Smallness, `d′∘d′ = 0` and exactness at `P′₁` for `win`, on generators and
/// degrees with `Deg <= deg_bound`.
pub fn minimality_report(win: &Window, deg_bound: u32) -> Result<MinimalComplexReport, MinimalError> {
    let (ext, mc) = window_minimal_complex(win)?;
    report_on(win, ext, &mc, deg_bound)
}

/// [`minimality_report`] for an already constructed complex on `ext`.
pub fn report_on(
    win: &Window,
    ext: Window,
    mc: &MinimalComplex<Fp>,
    deg_bound: u32,
) -> Result<MinimalComplexReport, MinimalError> {
    let cx = mc.complex();
    let f = cx.system().field();
    let p_unit = FreeGradedModule::new(Level::Unit, [Word::empty()]);
    let p0 = FreeGradedModule::new(Level::Letter, cx.chains().words(Level::Letter));
    let p1 = mc.p1_prime();

    let mut smallness: [GeneratorCheck; 3] = Default::default();
    for t in cx.chains().words(Level::Letter) {
        if t.deg() <= deg_bound {
            check(&mut smallness[0], &t, &cx.differential_of_chain(Level::Letter, &t)?, &p_unit);
        }
    }
    for t in mc.t1_prime() {
        if t.deg() <= deg_bound {
            check(&mut smallness[1], t, &mc.d1_prime(t)?, &p0);
        }
    }
    let mut composition = GeneratorCheck::default();
    for w in mc.t2_prime() {
        if w.deg() > deg_bound {
            continue;
        }
        let img = mc.d2_prime(w)?;
        check(&mut smallness[2], w, &img, &p1);
        composition.checked += 1;
        let dd = mc.d1_prime_elem(&img)?;
        if !dd.is_zero() {
            composition.failures.push(format!("d1'(d2'(.{w})) = {dd}"));
        }
    }

    let t1_prime: Vec<Word> = mc.t1_prime().iter().filter(|w| within(win, w)).cloned().collect();
    let t2_prime: Vec<Word> = mc.t2_prime().iter().filter(|w| within(win, w)).cloned().collect();
    let mut ext_dims: BTreeMap<Degree, [usize; 4]> = BTreeMap::new();
    ext_dims.entry(Degree::default()).or_default()[0] = 1;
    let letters = cx.chains().words(Level::Letter).into_iter().filter(|w| within(win, w));
    for (i, ws) in [letters.collect::<Vec<_>>(), t1_prime.clone(), t2_prime.clone()].iter().enumerate() {
        for w in ws {
            ext_dims.entry(w.degree()).or_default()[i + 1] += 1;
        }
    }

    Ok(MinimalComplexReport {
        window: *win,
        computed_on: ext,
        deg_bound,
        pairs: mc.pairs().iter().map(|p| (p.u.clone(), p.w.clone(), f.format(&p.coefficient))).collect(),
        t1_prime,
        t2_prime,
        smallness,
        composition,
        exactness: mc.exactness_at_p1_prime(deg_bound)?,
        ext_dims,
    })
}

fn check<F: Field>(out: &mut GeneratorCheck, t: &Word, img: &crate::anick::ModuleElement<F>, module: &FreeGradedModule) {
    out.checked += 1;
    if !radical_membership(img, module) {
        out.failures.push(format!("d(.{t}) = {img}"));
    }
}
