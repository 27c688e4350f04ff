//! Dense matrices of exact scalars and the elimination routines built on them.
//!
//! Reduced row echelon form uses a fixed pivot rule (leftmost nonzero column,
//! topmost available row), so kernel bases and solutions are reproducible.
//! Ranks of the large, sparse coboundary matrices go through
//! [`SparseEchelon`], which never densifies.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOfScalars {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixOfScalars {
    pub fn new(field: FieldDescriptor, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
        }
        Ok(MatrixOfScalars { field, rows, cols, entries })
    }

    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        MatrixOfScalars { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from its rows; every row must have the same length.
    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldDescriptor, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!("column {j} has length {}", col.len())));
            }
            for (i, x) in col.iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
                }
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(field: FieldDescriptor, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect(),
        )
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        self.check_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape("operands differ in shape".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| op(a, b)).collect();
        Ok(MatrixOfScalars { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let entries = self.entries.iter().map(|x| x * c).collect();
        MatrixOfScalars { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product with `(a⊗b)[i·rows_b+k, j·cols_b+l] = a[i,j]·b[k,l]`.
    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if !pv.is_zero() {
                        let v = m.get(i, j) - &(&factor * pv);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = SparseEchelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(sparse_row(self.row(i)));
        }
        ech.rank()
    }

    /// Basis of the right null space. One vector per free column `f`, with a
    /// 1 in position `f` and zeros at the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// One solution of `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for MatrixOfScalars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn sparse_row(row: &[Scalar]) -> Vec<(usize, Scalar)> {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

/// Incremental row echelon basis over sparse rows. Each stored row is
/// normalized to a leading 1 and indexed by its leading column.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: FieldDescriptor,
    width: usize,
    pivots: BTreeMap<usize, Vec<(usize, Scalar)>>,
}

impl SparseEchelon {
    pub fn new(field: FieldDescriptor, width: usize) -> Self {
        SparseEchelon { field, width, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// Reduces `row` against the stored basis. Returns `true` when it was
    /// independent (and has been added).
    pub fn insert(&mut self, row: Vec<(usize, Scalar)>) -> bool {
        let reduced = self.reduce(row);
        match reduced.first() {
            None => false,
            Some((lead, c)) => {
                let inv = c.inverse().expect("leading entry is nonzero");
                let lead = *lead;
                let normalized = reduced.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
                self.pivots.insert(lead, normalized);
                true
            }
        }
    }

    /// True when `row` lies in the span of the stored rows.
    pub fn contains(&self, row: Vec<(usize, Scalar)>) -> bool {
        self.reduce(row).is_empty()
    }

    fn reduce(&self, mut row: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
        let mut start = 0;
        while start < row.len() {
            let (lead, c) = &row[start];
            match self.pivots.get(lead) {
                None => start += 1,
                Some(p) => {
                    let c = c.clone();
                    // entries before `start` are untouched by the update
                    row = axpy_sparse(&row, &(-&c), p);
                }
            }
        }
        row
    }
}

/// `x + a·y` for sorted sparse rows.
fn axpy_sparse(
    x: &[(usize, Scalar)],
    a: &Scalar,
    y: &[(usize, Scalar)],
) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(a * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
