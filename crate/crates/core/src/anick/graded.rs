//! Graded components of the free modules, matrices of the differentials,
//! and the complex/exactness certificates derived from them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::chains::Level;
use super::complex::AnickComplex;
use super::module::{BasisElem, ModuleElement};
use super::AnickError;
use crate::field::Field;
use crate::free_algebra::{Degree, Word};
use crate::linalg::{normalize_row, Echelon, SparseRow};
use crate::rewriting::irreducible_words;

/// The graded pieces `(N_n)_d` of a family of free modules, for `Deg(d) <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub deg_bound: u32,
    pieces: BTreeMap<Degree, Vec<BasisElem>>,
}

impl GradedBasis {
    /// `{m.t | m ∈ M, t ∈ chains, Deg(mt) <= bound}` grouped by degree, each
    /// piece listed in the system order (ascending).
    pub fn new(words_by_degree: &BTreeMap<Degree, Vec<Word>>, chains: &[Word], bound: u32) -> Self {
        let mut pieces: BTreeMap<Degree, Vec<BasisElem>> = BTreeMap::new();
        for t in chains {
            let dt = t.degree();
            if dt.norm() > bound {
                continue;
            }
            for (dm, ms) in words_by_degree {
                let d = *dm + dt;
                if d.norm() > bound {
                    continue;
                }
                let piece = pieces.entry(d).or_default();
                piece.extend(ms.iter().map(|m| BasisElem::new(m.clone(), t.clone())));
            }
        }
        GradedBasis { deg_bound: bound, pieces }
    }

    pub fn degrees(&self) -> impl Iterator<Item = &Degree> {
        self.pieces.keys()
    }

    pub fn piece(&self, d: &Degree) -> &[BasisElem] {
        self.pieces.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self, d: &Degree) -> usize {
        self.piece(d).len()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }
}

/// Irreducible words up to `bound`, grouped by degree.
pub fn words_by_degree<F: Field>(cx: &AnickComplex<F>, bound: u32) -> BTreeMap<Degree, Vec<Word>> {
    let mut out: BTreeMap<Degree, Vec<Word>> = BTreeMap::new();
    for w in irreducible_words(cx.system(), bound) {
        out.entry(w.degree()).or_default().push(w);
    }
    out
}

/// The matrix of a degree-preserving map in one degree. Column `j` is the
/// image of `cols[j]`, expanded in `rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix<F: Field> {
    pub degree: Degree,
    pub rows: Vec<BasisElem>,
    pub cols: Vec<BasisElem>,
    /// `(row, col, value)` with nonzero values, sorted by column then row.
    pub entries: Vec<(usize, usize, F::Elem)>,
    rank: usize,
}

impl<F: Field> GradedMatrix<F> {
    /// Assemble from column images, computing the rank once.
    pub fn from_columns(
        field: &F,
        degree: Degree,
        rows: Vec<BasisElem>,
        cols: Vec<BasisElem>,
        images: &[ModuleElement<F>],
    ) -> Result<Self, AnickError> {
        let index: BTreeMap<&BasisElem, usize> = rows.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut entries = Vec::new();
        let mut ech = Echelon::new(field.clone());
        for (j, img) in images.iter().enumerate() {
            let mut col: Vec<(usize, F::Elem)> = Vec::with_capacity(img.len());
            for (b, c) in img.terms() {
                let i = *index.get(b).ok_or_else(|| AnickError::OutsideBasis {
                    term: b.render(img.level()),
                    degree: format!("{degree}"),
                })?;
                col.push((i, c.clone()));
            }
            let col: SparseRow<F> = normalize_row(field, col);
            entries.extend(col.iter().map(|(i, c)| (*i, j, c.clone())));
            ech.insert(col);
        }
        Ok(GradedMatrix { degree, rows, cols, entries, rank: ech.rank() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nullity(&self) -> usize {
        self.cols.len() - self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Images of every basis element of `P_n` in the degree pieces of `source`.
fn column_images<F: Field>(
    cx: &AnickComplex<F>,
    level: Level,
    cols: &[BasisElem],
) -> Result<Vec<ModuleElement<F>>, AnickError> {
    cols.iter().map(|b| cx.differential(&cx.basis(level, b.clone()))).collect()
}

/// The matrices of `d_n` (`n = level`) in every degree with `Deg <= bound`
/// where the source or target is nonzero.
pub fn graded_matrices<F: Field>(
    cx: &AnickComplex<F>,
    level: Level,
    bound: u32,
) -> Result<Vec<GradedMatrix<F>>, AnickError> {
    let below = level.below().ok_or(AnickError::LevelMismatch { expected: 0, found: -1 })?;
    let words = words_by_degree(cx, bound);
    let src = GradedBasis::new(&words, &cx.chains().words(level), bound);
    let dst = GradedBasis::new(&words, &cx.chains().words(below), bound);
    let degrees: BTreeSet<Degree> = src.degrees().chain(dst.degrees()).copied().collect();
    degrees
        .into_iter()
        .map(|d| {
            let cols = src.piece(&d).to_vec();
            let images = column_images(cx, level, &cols)?;
            GradedMatrix::from_columns(cx.system().field(), d, dst.piece(&d).to_vec(), cols, &images)
        })
        .collect()
}

/// Result of checking `ε∘d₀ = 0`, `d₀∘d₁ = 0`, `d₁∘d₂ = 0` on chains.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexCheck {
    /// Number of chain generators checked at each of the three compositions.
    pub checked: [usize; 3],
    /// Descriptions of failures.
    pub failures: Vec<String>,
}

impl ComplexCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check `d∘d = 0` on all chain generators with `Deg <= bound`. By
/// module-linearity this covers all of `P_n` in those degrees.
pub fn complex_check<F: Field>(cx: &AnickComplex<F>, bound: u32) -> Result<ComplexCheck, AnickError> {
    let field = cx.system().field();
    let mut out = ComplexCheck::default();
    for t in cx.chains().words(Level::Letter) {
        if t.deg() > bound {
            continue;
        }
        out.checked[0] += 1;
        let e = cx.augmentation(&cx.differential_of_chain(Level::Letter, &t)?);
        if !field.is_zero(&e) {
            out.failures.push(format!("ε(d0(.{t})) = {}", field.format(&e)));
        }
    }
    for (i, level) in [Level::Lhs, Level::Overlap].into_iter().enumerate() {
        for t in cx.chains().words(level) {
            if t.deg() > bound {
                continue;
            }
            out.checked[i + 1] += 1;
            let dd = cx.differential(&cx.differential_of_chain(level, &t)?)?;
            if !dd.is_zero() {
                out.failures.push(format!("d{}(d{}(.{t})) = {dd}", level.as_i8() - 1, level.as_i8()));
            }
        }
    }
    Ok(out)
}

/// Dimensions and ranks in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessRow {
    pub degree: Degree,
    /// `dim (P_n)_d` for `n = -1, 0, 1, 2`.
    pub dims: [usize; 4],
    /// `rank (d_n)_d` for `n = 0, 1, 2`.
    pub ranks: [usize; 3],
    /// Exactness at `P₋₁` (with `ε`), `P₀` and `P₁`.
    pub exact: [bool; 3],
}

impl ExactnessRow {
    pub fn passed(&self) -> bool {
        self.exact.iter().all(|e| *e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub deg_bound: u32,
    pub rows: Vec<ExactnessRow>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ExactnessRow::passed)
    }

    pub fn failing_degrees(&self) -> Vec<Degree> {
        self.rows.iter().filter(|r| !r.passed()).map(|r| r.degree).collect()
    }
}

/// Rank–nullity certificate of exactness in each degree with `Deg <= bound`:
/// `dim ker(d_{n−1}) = rank(d_n)` at `P₋₁`, `P₀`, `P₁`.
pub fn exactness_check<F: Field>(cx: &AnickComplex<F>, bound: u32) -> Result<ExactnessReport, AnickError> {
    let mut ranks: BTreeMap<Degree, [usize; 3]> = BTreeMap::new();
    let mut dims: BTreeMap<Degree, [usize; 4]> = BTreeMap::new();
    for (n, level) in [Level::Letter, Level::Lhs, Level::Overlap].into_iter().enumerate() {
        for mat in graded_matrices(cx, level, bound)? {
            ranks.entry(mat.degree).or_default()[n] = mat.rank();
            let dm = dims.entry(mat.degree).or_default();
            dm[n] = mat.rows.len();
            dm[n + 1] = mat.cols.len();
        }
    }
    let rows = dims
        .into_iter()
        .map(|(degree, dims)| {
            let r = ranks.get(&degree).copied().unwrap_or_default();
            let eps_rank = usize::from(degree.is_zero() && dims[0] > 0);
            let exact = [dims[0] - eps_rank == r[0], dims[1] - r[0] == r[1], dims[2] - r[1] == r[2]];
            ExactnessRow { degree, dims, ranks: r, exact }
        })
        .collect();
    Ok(ExactnessReport { deg_bound: bound, rows })
}
