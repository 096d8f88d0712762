//! Dense exact linear algebra: echelon forms, kernels, solving, and quotient
//! spaces with canonical projection/section pairs.
//!
//! A [`Mat`] with `rows × cols` entries is a linear map from a `cols`-dimensional
//! space to a `rows`-dimensional one acting on column vectors; column `j` is
//! the image of the basis vector `e_j`. Echelon forms always pick the
//! lowest-index pivot column, so every derived basis is deterministic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows·cols");
        debug_assert!(data.iter().all(|s| field.contains(s)));
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        Mat::from_fn(field, n, n, |i, j| {
            if i == j {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat::new(field, rows, cols, data)
    }

    /// Builds a matrix from integer rows, reducing into the field.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Mat::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        Mat::new(field, r, cols, data)
    }

    /// A single column vector.
    pub fn column(field: Field, entries: Vec<Scalar>) -> Mat {
        let n = entries.len();
        Mat::new(field, n, 1, entries)
    }

    /// The `i`-th standard basis vector of a `n`-dimensional space as a column.
    pub fn unit_column(field: Field, n: usize, i: usize) -> Mat {
        Mat::from_fn(field, n, 1, |r, _| if r == i { field.one() } else { field.zero() })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Mat {
        Mat::column(self.field, self.col_vec(j))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::new(self.field, self.rows, self.cols, self.data.iter().map(|x| x * s).collect())
    }

    /// Matrix product, checking that the inner dimensions agree.
    pub fn try_mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Mat) -> Mat {
        let zero = self.field.zero();
        let mut data = vec![zero; self.rows * rhs.cols];
        for i in 0..self.rows {
            let out = &mut data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out[j] = &out[j] + &(a * b);
                    }
                }
            }
        }
        Mat::new(self.field, self.rows, rhs.cols, data)
    }

    /// Kronecker product with row-major index pairing `(i, j) ↦ i·n + j`.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = vec![self.field.zero(); rows * cols];
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
                            data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        Mat::new(self.field, rows, cols, data)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows);
        Mat::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// `self` on top of `rhs`.
    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat::new(self.field, self.rows + rhs.rows, self.cols, data)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Flattens row-major into a single column.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn reshape(&self, rows: usize, cols: usize) -> Mat {
        Mat::new(self.field, rows, cols, self.data.clone())
    }

    /// Index of the first column on which two equally shaped matrices differ.
    pub fn first_diff_col(&self, other: &Mat) -> Option<usize> {
        assert_eq!(self.shape(), other.shape());
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inverse();
            for j in c..cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            let pivot_row: Vec<Scalar> = self.row(r).to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        let v = self.get(i, j) - &(&factor * &pivot_row[j]);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows of the returned matrix form a basis of `{v : self·v = 0}`, in
    /// reduced echelon form.
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f);
            }
            basis.push(v);
        }
        let k = Mat::from_rows(self.field, self.cols, basis);
        let (k, _) = k.rref();
        k
    }

    /// Some `x` with `self·x = target`, free variables set to zero; `None`
    /// when the system is inconsistent.
    pub fn solve(&self, target: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if target.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve",
                expected: self.rows,
                found: target.len(),
            });
        }
        let aug = self.hstack(&Mat::column(self.field, target.to_vec()));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `self·X = rhs` column by column.
    pub fn solve_mat(&self, rhs: &Mat) -> Result<Option<Mat>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve",
                expected: self.rows,
                found: rhs.rows,
            });
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Mat::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} · {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        self.mul_unchecked(rhs)
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape());
        Mat::new(
            self.field,
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape());
        Mat::new(
            self.field,
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::new(self.field, self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }
}

/// A quotient `k^n / R` with the canonical choice of coordinates: the
/// quotient basis is the image of the non-pivot ("free") columns of the
/// reduced echelon form of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientSpace {
    ambient_dim: usize,
    free: Vec<usize>,
    projection: Mat,
}

impl QuotientSpace {
    /// Kills the row space of `relations`.
    pub fn new(ambient_dim: usize, relations: &Mat) -> Result<QuotientSpace> {
        if relations.cols() != ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "quotient relations",
                expected: ambient_dim,
                found: relations.cols(),
            });
        }
        let field = relations.field();
        let (r, pivots) = relations.rref();
        let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
        let mut projection = Mat::zeros(field, free.len(), ambient_dim);
        for (q, &f) in free.iter().enumerate() {
            projection.set(q, f, field.one());
        }
        for (row, &p) in pivots.iter().enumerate() {
            for (q, &f) in free.iter().enumerate() {
                projection.set(q, p, -r.get(row, f));
            }
        }
        Ok(QuotientSpace {
            ambient_dim,
            free,
            projection,
        })
    }

    /// The trivial quotient of `k^n` by nothing.
    pub fn trivial(field: Field, n: usize) -> QuotientSpace {
        QuotientSpace {
            ambient_dim: n,
            free: (0..n).collect(),
            projection: Mat::identity(field, n),
        }
    }

    /// Canonical quotient by the kernel of a surjection `p`. Produces the
    /// same coordinates as [`QuotientSpace::new`] on any relation matrix
    /// spanning `ker p`.
    pub fn from_projection(p: &Mat) -> Result<QuotientSpace> {
        let q = p.rows();
        // A column is free exactly when it is independent of the columns to
        // its right.
        let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
        let mut free = Vec::new();
        for j in (0..p.cols()).rev() {
            if basis.len() == q {
                break;
            }
            let mut v = p.col_vec(j);
            for (pivot, b) in &basis {
                let f = v[*pivot].clone();
                if !f.is_zero() {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            if let Some(pivot) = v.iter().position(|s| !s.is_zero()) {
                let inv = v[pivot].inverse();
                let v: Vec<Scalar> = v.iter().map(|x| x * &inv).collect();
                for (_, b) in basis.iter_mut() {
                    let f = b[pivot].clone();
                    if !f.is_zero() {
                        for (x, y) in b.iter_mut().zip(&v) {
                            *x = &*x - &(&f * y);
                        }
                    }
                }
                basis.push((pivot, v));
                free.push(j);
            }
        }
        if free.len() != q {
            return Err(Error::NotWellDefined {
                context: "projection (not surjective)",
            });
        }
        free.reverse();
        let pf = p.select_cols(&free);
        let inv = pf.inverse().expect("selected columns are independent");
        let projection = &inv * p;
        Ok(QuotientSpace {
            ambient_dim: p.cols(),
            free,
            projection,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quo_dim(&self) -> usize {
        self.free.len()
    }

    pub fn field(&self) -> Field {
        self.projection.field()
    }

    /// Ambient indices whose images form the quotient basis.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// `ambient_dim → quo_dim`.
    pub fn projection(&self) -> &Mat {
        &self.projection
    }

    /// `quo_dim → ambient_dim`, sending each quotient basis vector to its
    /// free ambient basis vector.
    pub fn section(&self) -> Mat {
        let field = self.field();
        let mut s = Mat::zeros(field, self.ambient_dim, self.quo_dim());
        for (q, &f) in self.free.iter().enumerate() {
            s.set(f, q, field.one());
        }
        s
    }

    /// Reduced echelon basis of the killed subspace.
    pub fn relations(&self) -> Mat {
        let field = self.field();
        let rows: Vec<Vec<Scalar>> = (0..self.ambient_dim)
            .filter(|j| !self.free.contains(j))
            .map(|j| {
                let mut v = vec![field.zero(); self.ambient_dim];
                v[j] = field.one();
                for (q, &f) in self.free.iter().enumerate() {
                    v[f] = -self.projection.get(q, j);
                }
                v
            })
            .collect();
        Mat::from_rows(field, self.ambient_dim, rows)
    }

    pub fn is_trivial(&self) -> bool {
        self.quo_dim() == self.ambient_dim
    }

    /// `section · projection`: the canonical representative of each class.
    pub fn canonicalize(&self, lift: &Mat) -> Mat {
        let p = &self.projection * lift;
        let mut out = Mat::zeros(lift.field(), self.ambient_dim, lift.cols());
        for (q, &f) in self.free.iter().enumerate() {
            for j in 0..lift.cols() {
                out.set(f, j, p.get(q, j).clone());
            }
        }
        out
    }

    /// The map induced by `m` on the quotient, if `m` kills every relation.
    pub fn descends(&self, m: &Mat) -> Result<Option<Mat>> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "descends",
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        let induced = m.select_cols(&self.free);
        if &induced * &self.projection == *m {
            Ok(Some(induced))
        } else {
            Ok(None)
        }
    }
}

/// Free-function form of [`Mat::kernel`].
pub fn kernel(m: &Mat) -> Mat {
    m.kernel()
}

/// Free-function form of [`Mat::solve`].
pub fn solve(m: &Mat, target: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    m.solve(target)
}

/// Free-function form of [`QuotientSpace::new`].
pub fn quotient(ambient_dim: usize, relations: &Mat) -> Result<QuotientSpace> {
    QuotientSpace::new(ambient_dim, relations)
}

/// Free-function form of [`QuotientSpace::descends`].
pub fn descends(m: &Mat, q: &QuotientSpace) -> Result<Option<Mat>> {
    q.descends(m)
}

/// Decodes a flat row-major index into a multi-index over `dims`.
pub fn unravel(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in dims.iter().enumerate().rev() {
        if d == 0 {
            continue;
        }
        out[slot] = index % d;
        index /= d;
    }
    out
}
