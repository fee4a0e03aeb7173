use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A column vector.
pub type Vector = Vec<Scalar>;

/// Dense row-major matrix over an exact field. Shapes `0 x n` and `n x 0`
/// are valid and stand for maps to and from the zero space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Result of [`Matrix::solve`]: a particular solution when the system is
/// consistent, and a basis of the kernel of the coefficient matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Option<Vector>,
    pub kernel: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows. `cols` is needed so that a matrix with no
    /// rows still knows its width.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers; panics on ragged input.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn scalar(x: Scalar) -> Matrix {
        Matrix {
            field: x.field(),
            rows: 1,
            cols: 1,
            data: vec![x],
        }
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "cannot add matrices of different shapes");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "cannot subtract matrices of different shapes");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, rhs);
        out
    }

    /// `[self ; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut out = Matrix::zeros(self.field, self.rows + rhs.rows, self.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, 0, rhs);
        out
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, rhs);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out[(ii, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Gauss-Jordan elimination to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &factor * &m[(r, j)];
                    m[(i, j)] -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space, one vector per free column of the RREF.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&matrix[(r, f)];
                }
                v
            })
            .collect()
    }

    /// The null space basis as the columns of a `cols x nullity` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        let Rref { matrix, pivots, .. } = self.hstack(&rhs).rref();
        let particular = if pivots.last() == Some(&self.cols) {
            None
        } else {
            let mut x = vec![self.field.zero(); self.cols];
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = matrix[(r, self.cols)].clone();
            }
            Some(x)
        };
        Ok(Solution {
            particular,
            kernel: self.kernel_basis(),
        })
    }

    /// Solves `self * X = rhs` column by column; `None` if any column is
    /// inconsistent.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve_matrix shape mismatch");
        let Rref { matrix, pivots, .. } = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = matrix[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.field, self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    /// Kronecker product; row index `(i, k) -> i * rhs.rows + k` and column
    /// index `(j, l) -> j * rhs.cols + l`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * &rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Columns forming a basis of the column space (pivot columns of self).
    pub fn column_space(&self) -> Matrix {
        self.select_columns(&self.rref().pivots)
    }

    /// True if every column of `other` lies in the column span of `self`.
    pub fn spans(&self, other: &Matrix) -> bool {
        assert_eq!(self.rows, other.rows, "span test shape mismatch");
        self.hstack(other).rank() == self.rank()
    }

    /// Extends the (independent) columns of `self` to a basis of the ambient
    /// space with standard basis vectors, returning only the added columns.
    pub fn complement(&self) -> Matrix {
        let ambient = self.hstack(&Matrix::identity(self.field, self.rows));
        let extra: Vec<usize> = ambient
            .rref()
            .pivots
            .into_iter()
            .filter(|&p| p >= self.cols)
            .collect();
        ambient.select_columns(&extra)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_identity_and_proportional_rows() {
        let id = Matrix::identity(Q, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_edge_cases() {
        assert!(Matrix::identity(Q, 4).kernel_basis().is_empty());
        let z = Matrix::zeros(Q, 3, 3);
        assert_eq!(z.kernel_basis().len(), 3);
        assert_eq!(Matrix::from_columns(Q, 3, &z.kernel_basis()).rank(), 3);

        let m = Matrix::from_i64(Q, &[&[1, 1, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v[0] == -&v[1]);
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn zero_shaped_matrices() {
        let a = Matrix::zeros(Q, 0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().len(), 3);
        let b = Matrix::zeros(Q, 3, 0);
        assert_eq!(b.mul(&Matrix::zeros(Q, 0, 2)), Matrix::zeros(Q, 3, 2));
        assert!(b.kernel_basis().is_empty());
        let e = Matrix::zeros(Q, 0, 0);
        assert_eq!(Matrix::identity(Q, 2).kronecker(&e).shape(), (0, 0));
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::identity(Q, 3);
        let b: Vector = [4, -1, 7].iter().map(|&x| Q.from_i64(x)).collect();
        assert_eq!(id.solve(&b).unwrap().particular, Some(b.clone()));

        let a = Matrix::from_i64(Q, &[&[1, 1]]);
        let s = a.solve(&[Q.from_i64(2)]).unwrap();
        let x = s.particular.unwrap();
        assert_eq!(a.mul_vec(&x), vec![Q.from_i64(2)]);
        assert_eq!(s.kernel.len(), 1);

        let inconsistent = Matrix::from_i64(Q, &[&[1, 1], &[2, 2]]);
        let s = inconsistent.solve(&[Q.one(), Q.one()]).unwrap();
        assert!(s.particular.is_none());

        assert!(matches!(
            id.solve(&[Q.one()]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn kronecker_identity() {
        assert_eq!(
            Matrix::identity(Q, 2).kronecker(&Matrix::identity(Q, 3)),
            Matrix::identity(Q, 6)
        );
    }

    #[test]
    fn kronecker_basis_vectors() {
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4], &[5, 6]]);
        let b = Matrix::from_i64(Q, &[&[0, 1, -1], &[2, 0, 1]]);
        let ab = a.kronecker(&b);
        for j in 0..2 {
            for l in 0..3 {
                let mut x = vec![Q.zero(); 6];
                x[j * 3 + l] = Q.one();
                let lhs = ab.mul_vec(&x);
                let ax = a.column(j);
                let by = b.column(l);
                for i in 0..3 {
                    for k in 0..2 {
                        assert_eq!(lhs[i * 2 + k], &ax[i] * &by[k]);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_and_complement() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());

        let s = Matrix::from_i64(Q, &[&[1], &[1], &[0]]);
        let c = s.complement();
        assert_eq!(c.cols(), 2);
        assert_eq!(s.hstack(&c).rank(), 3);
    }

    #[test]
    fn prime_field_rref() {
        let f = Field::prime(5).unwrap();
        // 2x + 4y over F_5 is proportional to x + 2y
        let m = Matrix::from_i64(f, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rank(), 1);
    }
}
