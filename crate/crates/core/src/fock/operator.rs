use num_complex::Complex64;

use super::space::TensorSpace;
use super::vector::Vector;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Sparse complex matrix in compressed-column form, indexed by the canonical
/// bases of its domain and codomain. Exact zeros are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    domain: TensorSpace,
    codomain: TensorSpace,
    col_ptr: Vec<usize>,
    rows: Vec<usize>,
    vals: Vec<Complex64>,
}

/// Incremental builder that receives whole columns in order.
pub struct ColumnBuilder {
    op: Operator,
    scratch: Vec<Complex64>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl ColumnBuilder {
    pub fn new(domain: TensorSpace, codomain: TensorSpace) -> Self {
        let rows = codomain.dim();
        let mut col_ptr = Vec::with_capacity(domain.dim() + 1);
        col_ptr.push(0);
        ColumnBuilder {
            op: Operator { domain, codomain, col_ptr, rows: Vec::new(), vals: Vec::new() },
            scratch: vec![ZERO; rows],
            touched: Vec::new(),
            seen: vec![false; rows],
        }
    }

    /// Accumulates `value` at `row` of the current column.
    pub fn add(&mut self, row: usize, value: Complex64) {
        if !self.seen[row] {
            self.seen[row] = true;
            self.touched.push(row);
        }
        self.scratch[row] += value;
    }

    /// Seals the current column and moves to the next.
    pub fn finish_column(&mut self) {
        self.touched.sort_unstable();
        for &r in &self.touched {
            let v = self.scratch[r];
            if v != ZERO {
                self.op.rows.push(r);
                self.op.vals.push(v);
            }
            self.scratch[r] = ZERO;
            self.seen[r] = false;
        }
        self.touched.clear();
        self.op.col_ptr.push(self.op.rows.len());
    }

    pub fn build(mut self) -> Operator {
        while self.op.col_ptr.len() < self.op.domain.dim() + 1 {
            self.op.col_ptr.push(self.op.rows.len());
        }
        self.op
    }
}

impl Operator {
    pub fn zero(domain: TensorSpace, codomain: TensorSpace) -> Self {
        ColumnBuilder::new(domain, codomain).build()
    }

    pub fn identity(space: impl Into<TensorSpace>) -> Self {
        let space = space.into();
        Self::diagonal(space.clone(), (0..space.dim()).map(|i| (i, ONE)))
    }

    /// Diagonal operator with the given `(index, value)` entries.
    pub fn diagonal(space: TensorSpace, entries: impl IntoIterator<Item = (usize, Complex64)>) -> Self {
        let mut triplets: Vec<_> = entries.into_iter().map(|(i, v)| (i, i, v)).collect();
        triplets.sort_by_key(|t| t.1);
        Self::from_triplets(space.clone(), space, triplets)
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        domain: TensorSpace,
        codomain: TensorSpace,
        mut triplets: Vec<(usize, usize, Complex64)>,
    ) -> Self {
        triplets.sort_by_key(|&(r, c, _)| (c, r));
        let mut b = ColumnBuilder::new(domain, codomain);
        let started = !triplets.is_empty();
        let mut col = 0;
        for (r, c, v) in triplets {
            while col < c {
                b.finish_column();
                col += 1;
            }
            b.add(r, v);
        }
        if started {
            b.finish_column();
        }
        b.build()
    }

    /// Dense row-major matrix, for small oracle computations.
    pub fn from_dense(domain: TensorSpace, codomain: TensorSpace, dense: &[Vec<Complex64>]) -> Self {
        let mut triplets = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != ZERO {
                    triplets.push((r, c, v));
                }
            }
        }
        Self::from_triplets(domain, codomain, triplets)
    }

    /// Re-tags the domain and codomain with spaces of the same dimensions.
    pub fn reshape(mut self, domain: TensorSpace, codomain: TensorSpace) -> Result<Operator> {
        if domain.dim() != self.domain.dim() || codomain.dim() != self.codomain.dim() {
            return Err(Error::ShapeMismatch("reshape must preserve dimensions".into()));
        }
        self.domain = domain;
        self.codomain = codomain;
        Ok(self)
    }

    pub fn domain(&self) -> &TensorSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &TensorSpace {
        &self.codomain
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn column(&self, c: usize) -> (&[usize], &[Complex64]) {
        let (a, b) = (self.col_ptr[c], self.col_ptr[c + 1]);
        (&self.rows[a..b], &self.vals[a..b])
    }

    pub fn column_entries(&self, c: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        let (rows, vals) = self.column(c);
        rows.iter().copied().zip(vals.iter().copied())
    }

    /// All stored entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.domain.dim()).flat_map(move |c| self.column_entries(c).map(move |(r, v)| (r, c, v)))
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        let (rows, vals) = self.column(col);
        match rows.binary_search(&row) {
            Ok(k) => vals[k],
            Err(_) => ZERO,
        }
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.space() != &self.domain {
            return Err(Error::ShapeMismatch(format!(
                "operator domain {} applied to vector of dimension {}",
                self.domain.dim(),
                x.dim()
            )));
        }
        let mut y = Vector::zeros(self.codomain.clone());
        let out = y.entries_mut();
        for (c, &xc) in x.entries().iter().enumerate() {
            if xc == ZERO {
                continue;
            }
            for (r, v) in self.column_entries(c) {
                out[r] += v * xc;
            }
        }
        Ok(y)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Operator) -> Result<Operator> {
        if rhs.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.codomain.dim(),
                self.domain.dim(),
                rhs.codomain.dim(),
                rhs.domain.dim()
            )));
        }
        let mut b = ColumnBuilder::new(rhs.domain.clone(), self.codomain.clone());
        for c in 0..rhs.domain.dim() {
            for (k, x) in rhs.column_entries(c) {
                for (r, v) in self.column_entries(k) {
                    b.add(r, v * x);
                }
            }
            b.finish_column();
        }
        Ok(b.build())
    }

    pub fn add(&self, other: &Operator) -> Result<Operator> {
        self.combine(other, ONE)
    }

    pub fn sub(&self, other: &Operator) -> Result<Operator> {
        self.combine(other, -ONE)
    }

    /// `self + c·other`.
    pub fn combine(&self, other: &Operator, c: Complex64) -> Result<Operator> {
        self.check_same_shape(other)?;
        let mut b = ColumnBuilder::new(self.domain.clone(), self.codomain.clone());
        for col in 0..self.domain.dim() {
            for (r, v) in self.column_entries(col) {
                b.add(r, v);
            }
            for (r, v) in other.column_entries(col) {
                b.add(r, c * v);
            }
            b.finish_column();
        }
        Ok(b.build())
    }

    pub fn scale(&self, c: Complex64) -> Operator {
        if c == ZERO {
            return Operator::zero(self.domain.clone(), self.codomain.clone());
        }
        let mut out = self.clone();
        out.vals.iter_mut().for_each(|v| *v *= c);
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Operator {
        let rows = self.codomain.dim();
        let mut counts = vec![0usize; rows + 1];
        for &r in &self.rows {
            counts[r + 1] += 1;
        }
        for i in 0..rows {
            counts[i + 1] += counts[i];
        }
        let col_ptr = counts.clone();
        let mut next = counts;
        let mut new_rows = vec![0; self.nnz()];
        let mut new_vals = vec![ZERO; self.nnz()];
        for c in 0..self.domain.dim() {
            for (r, v) in self.column_entries(c) {
                let slot = next[r];
                new_rows[slot] = c;
                new_vals[slot] = v.conj();
                next[r] += 1;
            }
        }
        Operator {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            col_ptr,
            rows: new_rows,
            vals: new_vals,
        }
    }

    /// Keeps only the listed columns; the rest become zero.
    pub fn restrict_columns(&self, cols: &[usize]) -> Operator {
        let mut keep = vec![false; self.domain.dim()];
        cols.iter().for_each(|&c| keep[c] = true);
        let mut b = ColumnBuilder::new(self.domain.clone(), self.codomain.clone());
        for (c, &k) in keep.iter().enumerate() {
            if k {
                for (r, v) in self.column_entries(c) {
                    b.add(r, v);
                }
            }
            b.finish_column();
        }
        b.build()
    }

    /// Largest entrywise `|self - other|` over the listed columns (all columns
    /// when `cols` is `None`).
    pub fn max_abs_diff_on(&self, other: &Operator, cols: Option<&[usize]>) -> Result<f64> {
        self.check_same_shape(other)?;
        let col_diff = |c: usize| -> f64 {
            let (ra, va) = self.column(c);
            let (rb, vb) = other.column(c);
            let (mut i, mut j) = (0, 0);
            let mut worst = 0.0f64;
            while i < ra.len() || j < rb.len() {
                let d = match (ra.get(i), rb.get(j)) {
                    (Some(&a), Some(&b)) if a == b => {
                        i += 1;
                        j += 1;
                        va[i - 1] - vb[j - 1]
                    }
                    (Some(&a), Some(&b)) if a < b => {
                        i += 1;
                        va[i - 1]
                    }
                    (Some(_), None) => {
                        i += 1;
                        va[i - 1]
                    }
                    _ => {
                        j += 1;
                        -vb[j - 1]
                    }
                };
                worst = worst.max(d.norm());
            }
            worst
        };
        Ok(match cols {
            Some(cols) => cols.iter().map(|&c| col_diff(c)).fold(0.0, f64::max),
            None => (0..self.domain.dim()).map(col_diff).fold(0.0, f64::max),
        })
    }

    pub fn max_abs_diff(&self, other: &Operator) -> Result<f64> {
        self.max_abs_diff_on(other, None)
    }

    pub fn max_abs(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> Vec<Vec<Complex64>> {
        let mut dense = vec![vec![ZERO; self.domain.dim()]; self.codomain.dim()];
        for (r, c, v) in self.entries() {
            dense[r][c] = v;
        }
        dense
    }

    /// Power-iteration estimate of the operator norm.
    pub fn norm_estimate(&self, iterations: usize) -> f64 {
        let gram = self.adjoint();
        let dim = self.domain.dim();
        if dim == 0 || self.nnz() == 0 {
            return 0.0;
        }
        let mut x = Vector::from_entries(self.domain.clone(), vec![ONE; dim]).expect("dimension");
        let mut estimate = 0.0;
        for _ in 0..iterations {
            let norm = x.norm();
            if norm == 0.0 {
                return 0.0;
            }
            x = x.scale(Complex64::new(1.0 / norm, 0.0));
            let y = self.apply(&x).expect("domain");
            estimate = y.norm();
            x = gram.apply(&y).expect("codomain");
        }
        estimate
    }

    fn check_same_shape(&self, other: &Operator) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.codomain.dim(),
                self.domain.dim(),
                other.codomain.dim(),
                other.domain.dim()
            )));
        }
        Ok(())
    }
}
