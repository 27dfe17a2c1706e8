//! Sparse Gaussian elimination over an exact field.
//!
//! Rows are sparse vectors sorted by column. [`Echelon`] keeps an incremental
//! row-echelon basis keyed by pivot column, optionally tracking how each pivot
//! row was formed from the inserted rows so that membership queries can also
//! return an explicit linear combination.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;

/// A sparse vector: `(column, value)` pairs, strictly ascending columns, no zeros.
pub type SparseRow<F> = Vec<(usize, <F as Field>::Elem)>;

/// `a + c·b` for sparse rows.
pub fn axpy<F: Field>(field: &F, a: &[(usize, F::Elem)], c: &F::Elem, b: &[(usize, F::Elem)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let v = field.mul(c, &b[j].1);
                if !field.is_zero(&v) {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            Ordering::Equal => {
                let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Sort a row by column, summing duplicates and dropping zeros.
pub fn normalize_row<F: Field>(field: &F, mut row: Vec<(usize, F::Elem)>) -> SparseRow<F> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow<F> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = field.add(lv, &v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

#[derive(Clone, Debug)]
struct Pivot<F: Field> {
    row: SparseRow<F>,
    combo: SparseRow<F>,
}

/// Incremental echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    pivots: BTreeMap<usize, Pivot<F>>,
    inserted: usize,
    track: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon { field, pivots: BTreeMap::new(), inserted: 0, track: false }
    }

    /// Like [`Echelon::new`], but remember combinations of inserted rows.
    pub fn tracking(field: F) -> Self {
        Echelon { field, pivots: BTreeMap::new(), inserted: 0, track: true }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the pivots. Returns the residual and, when
    /// tracking, the combination `Σ c_i · inserted_i` that was subtracted.
    pub fn reduce(&self, mut row: SparseRow<F>) -> (SparseRow<F>, SparseRow<F>) {
        let f = &self.field;
        let mut used: SparseRow<F> = Vec::new();
        let mut k = 0;
        while k < row.len() {
            let (col, val) = row[k].clone();
            match self.pivots.get(&col) {
                Some(p) => {
                    // Pivot rows are monic at their pivot column.
                    let c = f.neg(&val);
                    row = axpy(f, &row, &c, &p.row);
                    if self.track {
                        used = axpy(f, &used, &val, &p.combo);
                    }
                }
                None => k += 1,
            }
        }
        (row, used)
    }

    /// Insert a row; returns `true` if it was independent of earlier rows.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (res, used) = self.reduce(row);
        let Some((col, lead)) = res.first().cloned() else {
            return false;
        };
        let f = &self.field;
        let inv = f.inv(&lead).expect("nonzero lead");
        let scale = |r: &SparseRow<F>| r.iter().map(|(c, v)| (*c, f.mul(&inv, v))).collect::<SparseRow<F>>();
        let combo = if self.track {
            // res = inserted_id − used
            let minus_one = f.neg(&f.one());
            let mut c = axpy(f, &alloc::vec![(id, f.one())], &minus_one, &used);
            c = normalize_row(f, c);
            scale(&c)
        } else {
            Vec::new()
        };
        self.pivots.insert(col, Pivot { row: scale(&res), combo });
        true
    }

    /// If `target` lies in the span of the inserted rows, the coefficients
    /// `c_i` with `target = Σ c_i · inserted_i`.
    pub fn express(&self, target: SparseRow<F>) -> Option<SparseRow<F>> {
        assert!(self.track, "express requires a tracking echelon");
        let (res, used) = self.reduce(target);
        res.is_empty().then_some(used)
    }
}

/// Rank of a list of sparse rows.
pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut e = Echelon::new(field.clone());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
