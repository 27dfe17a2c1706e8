//! Serialisable shapes for the reports. Words are arrays of generator tokens
//! (`["a0", "b1"]`), polynomials are text in the input grammar, degrees are
//! `[k_alpha, k_beta]` and field elements are signed representatives.

use serde::{Deserialize, Serialize};

use sl3res_core::anick::{BasisElem, GradedMatrix, Level};
use sl3res_core::field::{Field, Fp};
use sl3res_core::free_algebra::format_poly;
use sl3res_core::rewriting::{CompletenessCertificate, RewriteSystem};
use sl3res_core::{Degree, Word};

pub fn word(w: &Word) -> Vec<String> {
    w.letters().iter().map(ToString::to_string).collect()
}

pub fn words(ws: &[Word]) -> Vec<Vec<String>> {
    ws.iter().map(word).collect()
}

pub fn degree(d: &Degree) -> [u32; 2] {
    [d.alpha, d.beta]
}

/// The representative of `c` in `(−p/2, p/2]`.
pub fn coeff(f: &Fp, c: &u32) -> i64 {
    let (neg, mag) = f.signed_parts(c);
    let mag: i64 = mag.parse().expect("prime field magnitudes are integers");
    if neg {
        -mag
    } else {
        mag
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    pub degree: [u32; 2],
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    /// `[row, col, coefficient]`.
    pub entries: Vec<(usize, usize, i64)>,
    pub rank: usize,
}

fn render(bs: &[BasisElem], level: Level) -> Vec<String> {
    bs.iter().map(|b| b.render(level)).collect()
}

pub fn matrix(f: &Fp, m: &GradedMatrix<Fp>, col_level: Level) -> Matrix {
    let row_level = col_level.below().expect("differentials start at level 0");
    Matrix {
        degree: degree(&m.degree),
        rows: render(&m.rows, row_level),
        cols: render(&m.cols, col_level),
        entries: m.entries.iter().map(|(i, j, c)| (*i, *j, coeff(f, c))).collect(),
        rank: m.rank(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub lhs: Vec<String>,
    pub rhs: String,
}

pub fn rules(sys: &RewriteSystem<Fp>) -> Vec<Rule> {
    sys.rules().iter().map(|r| Rule { lhs: word(&r.lhs), rhs: format_poly(&r.rhs) }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub tip: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub complete: bool,
    pub pair_count: usize,
    pub failures: Vec<Failure>,
}

pub fn certificate(c: &CompletenessCertificate<Fp>) -> Certificate {
    Certificate {
        complete: c.complete,
        pair_count: c.pair_count,
        failures: c.failures.iter().map(|(t, r)| Failure { tip: word(t), residual: format_poly(r) }).collect(),
    }
}

/// Which presentation a basis belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    /// `G_m` on `a_k`, `b_k` with deg-lex.
    Small,
    /// The straightening rules on divided powers with `≪`.
    Big,
}

/// Output of `gb`; also the input format of `gb --rules`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    pub p: u32,
    pub j: u32,
    pub m: u32,
    pub system: SystemKind,
    /// Critical pairs are only certified up to this `Deg`, when set.
    pub deg_bound: Option<u32>,
    pub alphabet: Vec<String>,
    pub rules: Vec<Rule>,
    pub reduced: bool,
    pub certificate: Certificate,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCheck {
    pub checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl From<&sl3res_core::minimal::GeneratorCheck> for GeneratorCheck {
    fn from(c: &sl3res_core::minimal::GeneratorCheck) -> Self {
        GeneratorCheck { checked: c.checked, failures: c.failures.clone(), passed: c.passed() }
    }
}

impl From<&sl3res_core::anick::ComplexCheck> for GeneratorCheck {
    fn from(c: &sl3res_core::anick::ComplexCheck) -> Self {
        GeneratorCheck { checked: c.checked.iter().sum(), failures: c.failures.clone(), passed: c.passed() }
    }
}

/// `(word, degree)` listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graded {
    pub word: Vec<String>,
    pub degree: [u32; 2],
}

pub fn graded(ws: &[(Word, Degree)]) -> Vec<Graded> {
    ws.iter().map(|(w, d)| Graded { word: word(w), degree: degree(d) }).collect()
}
