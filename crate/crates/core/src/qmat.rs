//! Dense quaternion matrices and the ordered products `·L` / `·R`.
//!
//! `A ·L B` multiplies the entries of `A` from the left:
//! `[A ·L B]_{mn} = Σ_k A_{mk} B_{kn}`, while `A ·R B` swaps the scalar order:
//! `[A ·R B]_{mn} = Σ_k B_{kn} A_{mk}`. Every product sums over `k` in
//! increasing order starting from zero, so results are bitwise reproducible.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::{PureUnitQuaternion, Quaternion};

/// Which operand's entries multiply from the left inside each inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOrder {
    Left,
    Right,
}

/// The six scalar orderings of a three-matrix product `a_{mk} b_{kl} c_{ln}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleOrder {
    /// `a b c` = `(A ·L B) ·L C`
    LL,
    /// `c b a` = `(A ·R B) ·R C`
    RR,
    /// `a c b` = `A ·L (B ·R C)`
    LOfR,
    /// `c a b` = `(A ·L B) ·R C`
    LBThenR,
    /// `b a c` = `(A ·R B) ·L C`
    RBThenL,
    /// `b c a` = `A ·R (B ·L C)`
    ROfL,
}

impl TripleOrder {
    pub const ALL: [TripleOrder; 6] = [
        TripleOrder::LL,
        TripleOrder::RR,
        TripleOrder::LOfR,
        TripleOrder::LBThenR,
        TripleOrder::RBThenL,
        TripleOrder::ROfL,
    ];
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QuatMatrix {
    /// Builds a matrix from row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape(format!("empty matrix {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(QuatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        QuatMatrix {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QuatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QuatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Quaternion>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("ragged rows"));
        }
        QuatMatrix::new(r, c, rows.concat())
    }

    /// Column vector from entries.
    pub fn column(entries: &[Quaternion]) -> Result<Self> {
        QuatMatrix::new(entries.len(), 1, entries.to_vec())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_column(&self) -> bool {
        self.cols == 1
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn col(&self, n: usize) -> QuatMatrix {
        QuatMatrix::from_fn(self.rows, 1, |r, _| self[(r, n)])
    }

    pub fn transpose(&self) -> QuatMatrix {
        QuatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Elementwise conjugate.
    pub fn conj(&self) -> QuatMatrix {
        self.map(|q| q.conj())
    }

    /// Conjugate transpose.
    pub fn herm(&self) -> QuatMatrix {
        QuatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> QuatMatrix {
        QuatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| f(*q)).collect(),
        }
    }

    fn check_inner(&self, other: &QuatMatrix, op: &str) -> Result<()> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "{op}: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `A ·L B`.
    pub fn mul_left(&self, b: &QuatMatrix) -> Result<QuatMatrix> {
        self.check_inner(b, "left product")?;
        let mut out = QuatMatrix::zeros(self.rows, b.cols);
        for m in 0..self.rows {
            for n in 0..b.cols {
                let mut acc = Quaternion::ZERO;
                for k in 0..self.cols {
                    acc += self[(m, k)] * b[(k, n)];
                }
                out[(m, n)] = acc;
            }
        }
        Ok(out)
    }

    /// `A ·R B`.
    pub fn mul_right(&self, b: &QuatMatrix) -> Result<QuatMatrix> {
        self.check_inner(b, "right product")?;
        let mut out = QuatMatrix::zeros(self.rows, b.cols);
        for m in 0..self.rows {
            for n in 0..b.cols {
                let mut acc = Quaternion::ZERO;
                for k in 0..self.cols {
                    acc += b[(k, n)] * self[(m, k)];
                }
                out[(m, n)] = acc;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, b: &QuatMatrix, order: ProductOrder) -> Result<QuatMatrix> {
        match order {
            ProductOrder::Left => self.mul_left(b),
            ProductOrder::Right => self.mul_right(b),
        }
    }

    /// Three-matrix product with the requested scalar ordering.
    pub fn triple_product(
        &self,
        b: &QuatMatrix,
        c: &QuatMatrix,
        order: TripleOrder,
    ) -> Result<QuatMatrix> {
        self.check_inner(b, "triple product")?;
        b.check_inner(c, "triple product")?;
        match order {
            TripleOrder::LL => self.mul_left(b)?.mul_left(c),
            TripleOrder::RR => self.mul_right(b)?.mul_right(c),
            TripleOrder::LOfR => self.mul_left(&b.mul_right(c)?),
            TripleOrder::LBThenR => self.mul_left(b)?.mul_right(c),
            TripleOrder::RBThenL => self.mul_right(b)?.mul_left(c),
            TripleOrder::ROfL => self.mul_right(&b.mul_left(c)?),
        }
    }

    /// Scalar multiple: `s a` for [`ProductOrder::Left`], `a s` for [`ProductOrder::Right`].
    pub fn scalar_mul(&self, side: ProductOrder, s: Quaternion) -> QuatMatrix {
        match side {
            ProductOrder::Left => self.map(|q| s * q),
            ProductOrder::Right => self.map(|q| q * s),
        }
    }

    pub fn scale(&self, s: f64) -> QuatMatrix {
        self.map(|q| q * s)
    }

    /// Column-major vectorization.
    pub fn vec(&self) -> QuatMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)]);
            }
        }
        QuatMatrix {
            rows: self.data.len(),
            cols: 1,
            data,
        }
    }

    /// Inverse of [`QuatMatrix::vec`].
    pub fn unvec(v: &QuatMatrix, rows: usize, cols: usize) -> Result<QuatMatrix> {
        if !v.is_column() || v.rows != rows * cols || rows == 0 || cols == 0 {
            return Err(Error::shape(format!(
                "cannot reshape {}x{} into {rows}x{cols}",
                v.rows, v.cols
            )));
        }
        Ok(QuatMatrix::from_fn(rows, cols, |r, c| v.data[c * rows + r]))
    }

    /// Square matrix with the entries of a column vector on its diagonal.
    pub fn diag(v: &QuatMatrix) -> Result<QuatMatrix> {
        if !v.is_column() {
            return Err(Error::shape(format!(
                "diag expects a column vector, got {}x{}",
                v.rows, v.cols
            )));
        }
        Ok(QuatMatrix::from_fn(v.rows, v.rows, |r, c| {
            if r == c {
                v.data[r]
            } else {
                Quaternion::ZERO
            }
        }))
    }

    pub fn diag_from(values: &[Quaternion]) -> Result<QuatMatrix> {
        QuatMatrix::diag(&QuatMatrix::column(values)?)
    }

    /// `[self, other]`.
    pub fn hstack(&self, other: &QuatMatrix) -> Result<QuatMatrix> {
        if self.rows != other.rows {
            return Err(Error::shape("hstack: row counts differ"));
        }
        Ok(QuatMatrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)]
            } else {
                other[(r, c - self.cols)]
            }
        }))
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &QuatMatrix) -> Result<QuatMatrix> {
        if self.cols != other.cols {
            return Err(Error::shape("vstack: column counts differ"));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        QuatMatrix::new(self.rows + other.rows, self.cols, data)
    }

    /// Rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Result<QuatMatrix> {
        if nr == 0 || nc == 0 || r0 + nr > self.rows || c0 + nc > self.cols {
            return Err(Error::shape("block out of range"));
        }
        Ok(QuatMatrix::from_fn(nr, nc, |r, c| self[(r0 + r, c0 + c)]))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(Quaternion::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Quaternion::max_abs).fold(0.0, f64::max)
    }

    /// True if every entry lies in the subfield of `mu`.
    pub fn in_complex_subfield(&self, mu: PureUnitQuaternion, tol: f64) -> bool {
        self.first_outside_subfield(mu, tol).is_none()
    }

    pub(crate) fn first_outside_subfield(
        &self,
        mu: PureUnitQuaternion,
        tol: f64,
    ) -> Option<(usize, usize)> {
        (0..self.data.len())
            .find(|&i| !self.data[i].in_complex_subfield(mu, tol))
            .map(|i| (i / self.cols, i % self.cols))
    }

    fn zip(&self, other: &QuatMatrix, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> QuatMatrix {
        assert_eq!(self.shape(), other.shape(), "elementwise op on different shapes");
        QuatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }
}

impl Index<(usize, usize)> for QuatMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QuatMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Panics on shape mismatch; use only on matrices known to conform.
impl Add for &QuatMatrix {
    type Output = QuatMatrix;
    fn add(self, o: &QuatMatrix) -> QuatMatrix {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub for &QuatMatrix {
    type Output = QuatMatrix;
    fn sub(self, o: &QuatMatrix) -> QuatMatrix {
        self.zip(o, |a, b| a - b)
    }
}

impl Neg for &QuatMatrix {
    type Output = QuatMatrix;
    fn neg(self) -> QuatMatrix {
        self.map(|q| -q)
    }
}
