//! Dense exact linear algebra: matrices, reduced echelon bases, rank and
//! linear-system solving.
//!
//! Row vectors are plain `Vec<K>` / `&[K]`. Elimination always pivots on the
//! first non-zero column, so results are deterministic.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// A dense row-major matrix. `0 x k` and `k x 0` matrices are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries given for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = K::one();
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows<R: AsRef<[K]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns<C: AsRef<[K]>>(rows: usize, columns: &[C]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns)?.transpose())
    }

    pub fn row_vector(v: &[K]) -> Self {
        Self {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    pub fn column_vector(v: &[K]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[K]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn set(&mut self, i: usize, j: usize, value: K) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map(&self, f: impl Fn(&K) -> K) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        mat_mul(self, other)
    }

    /// `v * self` for a row vector `v`.
    pub fn left_apply(&self, v: &[K]) -> Result<Vec<K>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "row vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![K::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                *o = o.clone() + vi.clone() * m.clone();
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn right_apply(&self, v: &[K]) -> Result<Vec<K>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times column vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self.row_iter().map(|row| dot(row, v)).collect())
    }

    /// Block-diagonal matrix `[[self, 0], [0, other]]`.
    pub fn block_diagonal(&self, other: &Self) -> Self {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut m = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self[(i, j)].clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other[(i, j)].clone());
            }
        }
        m
    }

    /// Sub-matrix made of the listed rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Self {
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            data.extend_from_slice(self.row(i));
        }
        Self {
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }
}

impl<K> Index<(usize, usize)> for Matrix<K> {
    type Output = K;

    fn index(&self, (i, j): (usize, usize)) -> &K {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<K: fmt::Display> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<K: fmt::Display> fmt::Display for Matrix<K> {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn dot<K: Field>(a: &[K], b: &[K]) -> K {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(K::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn is_zero_vector<K: Field>(v: &[K]) -> bool {
    v.iter().all(K::is_zero)
}

/// Exact product `a * b`.
pub fn mat_mul<K: Field>(a: &Matrix<K>, b: &Matrix<K>) -> Result<Matrix<K>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        data.extend(b.left_apply(a.row(i))?);
    }
    Ok(Matrix {
        rows: a.rows,
        cols: b.cols,
        data,
    })
}

/// Kronecker product: the `(a.rows*b.rows) x (a.cols*b.cols)` matrix with
/// blocks `a[i][j] * b`.
pub fn kronecker<K: Field>(a: &Matrix<K>, b: &Matrix<K>) -> Matrix<K> {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..a.rows {
        for k in 0..b.rows {
            for j in 0..a.cols {
                let aij = &a[(i, j)];
                data.extend(b.row(k).iter().map(|x| aij.clone() * x.clone()));
            }
        }
    }
    Matrix { rows, cols, data }
}

/// Kronecker product of two vectors.
pub fn kronecker_vec<K: Field>(a: &[K], b: &[K]) -> Vec<K> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x.clone() * y.clone()))
        .collect()
}

/// A spanning set kept in reduced row-echelon form.
///
/// Every stored row has a leading 1 at its pivot column and that column is
/// zero in every other stored row. Rows are ordered by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis<K> {
    ambient_dim: usize,
    rows: Vec<Vec<K>>,
    pivots: Vec<usize>,
}

impl<K: Field> EchelonBasis<K> {
    pub fn new(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[K]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        Ok(())
    }

    /// What remains of `v` after eliminating every pivot column. Zero exactly
    /// when `v` lies in the span.
    pub fn residue(&self, v: &[K]) -> Result<Vec<K>> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row).skip(p) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[K]) -> Result<bool> {
        Ok(is_zero_vector(&self.residue(v)?))
    }

    /// Adds `v` to the span. Returns `true` iff `v` was independent of the
    /// stored rows; otherwise the basis is left unchanged.
    pub fn insert(&mut self, v: &[K]) -> Result<bool> {
        let mut r = self.residue(v)?;
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let lead = r[p].clone();
        for x in r.iter_mut().skip(p) {
            *x = x.clone() / lead.clone();
        }
        for row in &mut self.rows {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }
}

/// Exact rank.
pub fn rank<K: Field>(a: &Matrix<K>) -> usize {
    let mut basis = EchelonBasis::new(a.cols);
    for row in a.row_iter() {
        // lengths always match
        let _ = basis.insert(row);
        if basis.dim() == a.cols {
            break;
        }
    }
    basis.dim()
}

/// Solves `a * x = b` for the unique `x`.
///
/// Fails with [`Error::Inconsistent`] when no solution exists and with
/// [`Error::NotUnique`] when `a` has dependent columns.
pub fn solve_right<K: Field>(a: &Matrix<K>, b: &Matrix<K>) -> Result<Matrix<K>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "system matrix has {} rows, right-hand side has {}",
            a.rows, b.rows
        )));
    }
    let (n, q) = (a.cols, b.cols);
    let width = n + q;
    let mut aug: Vec<Vec<K>> = (0..a.rows)
        .map(|i| a.row(i).iter().chain(b.row(i)).cloned().collect())
        .collect();

    // Gauss-Jordan on the coefficient columns.
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let Some(found) = (pivot_row..aug.len()).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, found);
        let lead = aug[pivot_row][col].clone();
        for x in aug[pivot_row].iter_mut().skip(col) {
            *x = x.clone() / lead.clone();
        }
        let pivot = aug[pivot_row].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == pivot_row || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if aug[pivot_row..]
        .iter()
        .any(|row| row[n..width].iter().any(|x| !x.is_zero()))
    {
        return Err(Error::Inconsistent);
    }
    if pivot_cols.len() < n {
        return Err(Error::NotUnique);
    }
    let mut data = Vec::with_capacity(n * q);
    for row in aug.iter().take(n) {
        data.extend_from_slice(&row[n..width]);
    }
    Matrix::new(n, q, data)
}

/// Solves `x * a = b` for the unique `x`.
pub fn solve_left<K: Field>(a: &Matrix<K>, b: &Matrix<K>) -> Result<Matrix<K>> {
    Ok(solve_right(&a.transpose(), &b.transpose())?.transpose())
}

/// Coefficients `c` with `c * basis = v`, where `basis` has independent rows.
pub fn coordinates<K: Field>(basis: &Matrix<K>, v: &[K]) -> Result<Vec<K>> {
    let x = solve_left(basis, &Matrix::row_vector(v))?;
    Ok(x.row(0).to_vec())
}

/// Exact inverse of a square non-singular matrix.
pub fn invert<K: Field>(a: &Matrix<K>) -> Result<Matrix<K>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot invert a {}x{} matrix",
            a.rows, a.cols
        )));
    }
    solve_right(a, &Matrix::identity(a.rows)).map_err(|e| match e {
        Error::Inconsistent | Error::NotUnique => Error::Singular,
        other => other,
    })
}
