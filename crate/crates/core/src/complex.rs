//! Dense complex linear algebra used behind the adjoint embeddings.
//!
//! Everything here is self-contained: partial-pivot LU, complete-pivot
//! elimination for rank and null space, Gram-Schmidt range tests and a
//! Hessenberg + Wilkinson-shifted QR eigensolver with inverse iteration for
//! eigenvectors.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Relative pivot threshold of [`Lu`] (times `‖M‖_F`).
pub const DEFAULT_PIVOT_TOL: f64 = 1e-13;
/// Default matrix size limit of [`eigen`].
pub const DEFAULT_EIGEN_LIMIT: usize = 128;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn col(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Complex64>]) -> Self {
        ComplexMatrix::from_fn(rows, columns.len(), |r, c| columns[c][r])
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn herm(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn matmul(&self, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != b.rows {
            return Err(Error::shape(format!(
                "complex product {}x{} times {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let mut out = ComplexMatrix::zeros(self.rows, b.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..b.cols {
                    out.data[i * b.cols + j] += a * b.data[k * b.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)] * v[c]).sum())
            .collect()
    }

    pub fn add(&self, o: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), o.shape());
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), o.shape());
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Assembles `[[a, b], [c, d]]` from equally shaped blocks.
    pub fn from_blocks(
        a: &ComplexMatrix,
        b: &ComplexMatrix,
        c: &ComplexMatrix,
        d: &ComplexMatrix,
    ) -> ComplexMatrix {
        let (m, n) = a.shape();
        assert!(b.shape() == (m, n) && c.shape() == (m, n) && d.shape() == (m, n));
        ComplexMatrix::from_fn(2 * m, 2 * n, |r, col| {
            let blk = match (r < m, col < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk[(r % m, col % n)]
        })
    }

    /// Block `(bi, bj)` of a 2x2 block partition.
    pub fn quadrant(&self, bi: usize, bj: usize) -> ComplexMatrix {
        let (m, n) = (self.rows / 2, self.cols / 2);
        ComplexMatrix::from_fn(m, n, |r, c| self[(bi * m + r, bj * n + c)])
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn dot_h(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// LU factorization with partial pivoting by largest modulus.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: ComplexMatrix,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    /// Fails with [`Error::SingularMatrix`] when a pivot modulus drops below
    /// `pivot_tol * ‖M‖_F`.
    pub fn factor(m: &ComplexMatrix, pivot_tol: f64) -> Result<Lu> {
        if m.rows != m.cols {
            return Err(Error::shape(format!("LU of non-square {}x{}", m.rows, m.cols)));
        }
        let n = m.rows;
        let threshold = pivot_tol * m.frobenius_norm();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let (p, best) = (k..n)
                .map(|r| (r, lu[(r, k)].norm()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best <= threshold || best == 0.0 {
                return Err(Error::SingularMatrix);
            }
            if p != k {
                for c in 0..n {
                    lu.data.swap(k * n + c, p * n + c);
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = lu[(k, k)];
            for r in k + 1..n {
                let f = lu[(r, k)] / pivot;
                lu[(r, k)] = f;
                if f != ZERO {
                    for c in k + 1..n {
                        let t = lu[(k, c)];
                        lu[(r, c)] -= f * t;
                    }
                }
            }
        }
        Ok(Lu { lu, perm, swaps })
    }

    pub fn solve(&self, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.lu.rows;
        if b.rows != n {
            return Err(Error::shape(format!(
                "right-hand side has {} rows, system has {n}",
                b.rows
            )));
        }
        let mut x = ComplexMatrix::from_fn(n, b.cols, |r, c| b[(self.perm[r], c)]);
        for c in 0..b.cols {
            for r in 0..n {
                let mut s = x[(r, c)];
                for k in 0..r {
                    s -= self.lu[(r, k)] * x[(k, c)];
                }
                x[(r, c)] = s;
            }
            for r in (0..n).rev() {
                let mut s = x[(r, c)];
                for k in r + 1..n {
                    s -= self.lu[(r, k)] * x[(k, c)];
                }
                x[(r, c)] = s / self.lu[(r, r)];
            }
        }
        Ok(x)
    }

    pub fn det(&self) -> Complex64 {
        let mut d: Complex64 = (0..self.lu.rows).map(|i| self.lu[(i, i)]).product();
        if self.swaps % 2 == 1 {
            d = -d;
        }
        d
    }
}

/// Solves `M X = B`.
pub fn lu_solve(m: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    Lu::factor(m, DEFAULT_PIVOT_TOL)?.solve(b)
}

pub fn inverse(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    inverse_with_tol(m, DEFAULT_PIVOT_TOL)
}

pub fn inverse_with_tol(m: &ComplexMatrix, pivot_tol: f64) -> Result<ComplexMatrix> {
    Lu::factor(m, pivot_tol)?.solve(&ComplexMatrix::identity(m.rows))
}

/// Default rank tolerance: `1e-10 · max(rows, cols) · ‖M‖_max`.
pub fn default_rank_tol(m: &ComplexMatrix) -> f64 {
    1e-10 * m.rows.max(m.cols) as f64 * m.max_abs()
}

struct Elimination {
    rank: usize,
    /// Upper-trapezoidal factor in permuted column order.
    u: ComplexMatrix,
    /// `col_perm[j]` is the original column at position `j`.
    col_perm: Vec<usize>,
}

fn eliminate(m: &ComplexMatrix, tol: f64) -> Elimination {
    let (rows, cols) = m.shape();
    let mut u = m.clone();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    let mut rank = 0;
    for s in 0..rows.min(cols) {
        let mut best = (s, s, -1.0);
        for r in s..rows {
            for c in s..cols {
                let v = u[(r, c)].norm();
                if v > best.2 {
                    best = (r, c, v);
                }
            }
        }
        let (pr, pc, pv) = best;
        if pv <= tol || pv == 0.0 {
            break;
        }
        if pr != s {
            for c in 0..cols {
                u.data.swap(s * cols + c, pr * cols + c);
            }
        }
        if pc != s {
            for r in 0..rows {
                u.data.swap(r * cols + s, r * cols + pc);
            }
            col_perm.swap(s, pc);
        }
        let pivot = u[(s, s)];
        for r in s + 1..rows {
            let f = u[(r, s)] / pivot;
            u[(r, s)] = ZERO;
            if f != ZERO {
                for c in s + 1..cols {
                    let t = u[(s, c)];
                    u[(r, c)] -= f * t;
                }
            }
        }
        rank += 1;
    }
    Elimination { rank, u, col_perm }
}

/// Rank under complete-pivot elimination and a basis of the right null space.
///
/// `tol` defaults to [`default_rank_tol`]. Null vectors have unit 2-norm.
pub fn rank_and_nullbasis(m: &ComplexMatrix, tol: Option<f64>) -> (usize, ComplexMatrix) {
    let tol = tol.unwrap_or_else(|| default_rank_tol(m));
    let cols = m.cols;
    let el = eliminate(m, tol);
    let r = el.rank;
    let mut basis = Vec::with_capacity(cols - r);
    for f in r..cols {
        let mut y = vec![ZERO; cols];
        y[f] = ONE;
        for i in (0..r).rev() {
            let mut s = -el.u[(i, f)];
            for (k, yk) in y.iter().enumerate().take(r).skip(i + 1) {
                s -= el.u[(i, k)] * yk;
            }
            y[i] = s / el.u[(i, i)];
        }
        let mut v = vec![ZERO; cols];
        for (pos, &orig) in el.col_perm.iter().enumerate() {
            v[orig] = y[pos];
        }
        let n = vec_norm(&v);
        v.iter_mut().for_each(|z| *z /= n);
        basis.push(v);
    }
    (r, ComplexMatrix::from_columns(cols, &basis))
}

pub fn rank(m: &ComplexMatrix, tol: Option<f64>) -> usize {
    let tol = tol.unwrap_or_else(|| default_rank_tol(m));
    eliminate(m, tol).rank
}

/// Indices of linearly independent columns spanning the column space.
pub fn column_basis_indices(m: &ComplexMatrix, tol: Option<f64>) -> Vec<usize> {
    let tol = tol.unwrap_or_else(|| default_rank_tol(m));
    let el = eliminate(m, tol);
    let mut idx = el.col_perm[..el.rank].to_vec();
    idx.sort_unstable();
    idx
}

/// Orthonormal basis of the column space (Gram-Schmidt with one
/// reorthogonalization pass).
pub fn orthonormal_column_basis(m: &ComplexMatrix, tol: Option<f64>) -> Vec<Vec<Complex64>> {
    let mut q: Vec<Vec<Complex64>> = Vec::new();
    for c in column_basis_indices(m, tol) {
        let mut v = m.col(c);
        for _ in 0..2 {
            for b in &q {
                let p = dot_h(b, &v);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= p * y);
            }
        }
        let n = vec_norm(&v);
        if n > 0.0 {
            v.iter_mut().for_each(|z| *z /= n);
            q.push(v);
        }
    }
    q
}

/// Distance from `b` to the column space of `m`.
pub fn range_residual(m: &ComplexMatrix, b: &[Complex64], tol: Option<f64>) -> f64 {
    let basis = orthonormal_column_basis(m, tol);
    let mut r = b.to_vec();
    for _ in 0..2 {
        for q in &basis {
            let p = dot_h(q, &r);
            r.iter_mut().zip(q).for_each(|(x, y)| *x -= p * y);
        }
    }
    vec_norm(&r)
}

/// Eigenvalues and unit eigenvectors of a square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub values: Vec<Complex64>,
    /// Columns are eigenvectors.
    pub vectors: ComplexMatrix,
    pub converged: Vec<bool>,
}

#[derive(Debug, Clone, Copy)]
pub struct EigenOptions {
    pub max_size: usize,
    /// Subdiagonal deflation factor.
    pub deflation: f64,
    /// Residual contract `‖Mv - λv‖ ≤ residual_tol · ‖M‖_F`.
    pub residual_tol: f64,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            max_size: DEFAULT_EIGEN_LIMIT,
            deflation: 1e-14,
            residual_tol: 1e-8,
        }
    }
}

pub fn eigen(m: &ComplexMatrix) -> Result<EigenResult> {
    eigen_with(m, &EigenOptions::default())
}

pub fn eigen_with(m: &ComplexMatrix, opts: &EigenOptions) -> Result<EigenResult> {
    if m.rows != m.cols {
        return Err(Error::shape(format!("eigen of non-square {}x{}", m.rows, m.cols)));
    }
    let n = m.rows;
    if n > opts.max_size {
        return Err(Error::SizeLimit {
            size: n,
            limit: opts.max_size,
        });
    }
    if n == 0 {
        return Ok(EigenResult {
            values: vec![],
            vectors: ComplexMatrix::zeros(0, 0),
            converged: vec![],
        });
    }
    let mut h = m.clone();
    hessenberg_in_place(&mut h);
    let (values, qr_done) = shifted_qr(&mut h, opts.deflation);

    let norm = m.frobenius_norm();
    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut converged = Vec::with_capacity(n);
    for (idx, &lambda) in values.iter().enumerate() {
        let cluster: Vec<usize> = (0..idx)
            .filter(|&p| (values[p] - lambda).norm() <= 1e-8 * norm.max(f64::MIN_POSITIVE))
            .collect();
        let v = inverse_iteration(m, lambda, idx, &cluster, &vectors);
        let mv = m.matvec(&v);
        let res = vec_norm(
            &mv.iter()
                .zip(&v)
                .map(|(a, b)| a - lambda * b)
                .collect::<Vec<_>>(),
        );
        converged.push(qr_done[idx] && res <= opts.residual_tol * norm.max(f64::MIN_POSITIVE));
        vectors.push(v);
    }
    let result = EigenResult {
        values,
        vectors: ComplexMatrix::from_columns(n, &vectors),
        converged,
    };
    if result.converged.iter().all(|c| *c) {
        Ok(result)
    } else {
        Err(Error::NoConvergence(Box::new(result)))
    }
}

/// Householder reduction to upper Hessenberg form (similarity transform).
fn hessenberg_in_place(h: &mut ComplexMatrix) {
    let n = h.rows;
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = (k + 1..n).map(|r| h[(r, k)]).collect();
        let alpha = vec_norm(&x);
        if alpha == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 {
            ONE
        } else {
            x[0] / x[0].norm()
        };
        let mut v = x;
        v[0] += phase * alpha;
        let vn = vec_norm(&v);
        if vn == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= vn);
        // H <- (I - 2vv^H) H
        for c in 0..n {
            let s: Complex64 = (0..v.len()).map(|i| v[i].conj() * h[(k + 1 + i, c)]).sum();
            for i in 0..v.len() {
                h[(k + 1 + i, c)] -= 2.0 * v[i] * s;
            }
        }
        // H <- H (I - 2vv^H)
        for r in 0..n {
            let s: Complex64 = (0..v.len()).map(|i| h[(r, k + 1 + i)] * v[i]).sum();
            for i in 0..v.len() {
                h[(r, k + 1 + i)] -= 2.0 * s * v[i].conj();
            }
        }
        for r in k + 2..n {
            h[(r, k)] = ZERO;
        }
    }
}

/// Rotation `[[c, s], [-conj(s), c]]` with real `c` mapping `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let na = a.norm();
    let nb = b.norm();
    if nb == 0.0 {
        return (1.0, ZERO);
    }
    if na == 0.0 {
        return (0.0, b.conj() / nb);
    }
    let norm = na.hypot(nb);
    (na / norm, (a / na) * b.conj() / norm)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    // eigenvalue of [[a, b], [c, d]] closer to d
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr / 4.0 - det).sqrt();
    let l1 = tr / 2.0 + disc;
    let l2 = tr / 2.0 - disc;
    if (l1 - d).norm() < (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Shifted QR on an upper Hessenberg matrix. Returns the diagonal after
/// deflation and a per-value flag telling whether it deflated.
fn shifted_qr(h: &mut ComplexMatrix, deflation: f64) -> (Vec<Complex64>, Vec<bool>) {
    let n = h.rows;
    let scale = h.frobenius_norm();
    let max_iter = 100 * n;
    let mut done = vec![false; n];
    let mut hi = n - 1;
    let mut iter = 0;
    let mut since_deflation = 0;
    loop {
        if hi == 0 {
            done[0] = true;
            break;
        }
        // locate the active window [lo, hi]
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let mut diag = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if diag == 0.0 {
                diag = scale;
            }
            if sub <= deflation * diag {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            done[hi] = true;
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if iter >= max_iter {
            break;
        }
        iter += 1;
        since_deflation += 1;

        let mut shift = wilkinson_shift(
            h[(hi - 1, hi - 1)],
            h[(hi - 1, hi)],
            h[(hi, hi - 1)],
            h[(hi, hi)],
        );
        if since_deflation % 11 == 10 {
            // exceptional shift to break cycles
            shift = h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0);
        }
        for i in lo..=hi {
            h[(i, i)] -= shift;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            for col in i..=hi {
                let x = h[(i, col)];
                let y = h[(i + 1, col)];
                h[(i, col)] = c * x + s * y;
                h[(i + 1, col)] = -s.conj() * x + c * y;
            }
            h[(i + 1, i)] = ZERO;
            rots.push((c, s));
        }
        for (off, &(c, s)) in rots.iter().enumerate() {
            let i = lo + off;
            for r in lo..=(i + 1).min(hi) {
                let x = h[(r, i)];
                let y = h[(r, i + 1)];
                h[(r, i)] = x * c + y * s.conj();
                h[(r, i + 1)] = -x * s + y * c;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += shift;
        }
    }
    ((0..n).map(|i| h[(i, i)]).collect(), done)
}

fn start_vector(n: usize, idx: usize) -> Vec<Complex64> {
    // splitmix-style hash, deterministic per eigenvalue index
    let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ (idx as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let mut next = || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    (0..n).map(|_| Complex64::new(next(), next())).collect()
}

/// Inverse iteration on `M - λI`, orthogonalizing against eigenvectors of
/// clustered eigenvalues.
fn inverse_iteration(
    m: &ComplexMatrix,
    lambda: Complex64,
    idx: usize,
    cluster: &[usize],
    previous: &[Vec<Complex64>],
) -> Vec<Complex64> {
    let n = m.rows;
    let norm = m.frobenius_norm().max(f64::MIN_POSITIVE);
    let floor = f64::EPSILON * norm;
    let mut shifted = m.clone();
    for i in 0..n {
        shifted[(i, i)] -= lambda;
    }
    // partial-pivot LU that replaces tiny pivots instead of failing
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| shifted[(a, k)].norm().total_cmp(&shifted[(b, k)].norm()))
            .unwrap_or(k);
        if p != k {
            for c in 0..n {
                shifted.data.swap(k * n + c, p * n + c);
            }
            perm.swap(k, p);
        }
        if shifted[(k, k)].norm() < floor {
            shifted[(k, k)] = Complex64::new(floor, 0.0);
        }
        let pivot = shifted[(k, k)];
        for r in k + 1..n {
            let f = shifted[(r, k)] / pivot;
            shifted[(r, k)] = f;
            for c in k + 1..n {
                let t = shifted[(k, c)];
                shifted[(r, c)] -= f * t;
            }
        }
    }
    let solve = |b: &[Complex64]| -> Vec<Complex64> {
        let mut x: Vec<Complex64> = (0..n).map(|r| b[perm[r]]).collect();
        for r in 0..n {
            for k in 0..r {
                let t = shifted[(r, k)] * x[k];
                x[r] -= t;
            }
        }
        for r in (0..n).rev() {
            for k in r + 1..n {
                let t = shifted[(r, k)] * x[k];
                x[r] -= t;
            }
            x[r] /= shifted[(r, r)];
        }
        x
    };
    let project = |v: &mut Vec<Complex64>| {
        for &p in cluster {
            let b = &previous[p];
            let d = dot_h(b, v);
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
        }
    };
    let mut v = start_vector(n, idx);
    project(&mut v);
    for _ in 0..3 {
        let mut next = solve(&v);
        project(&mut next);
        let nn = vec_norm(&next);
        if nn == 0.0 || !nn.is_finite() {
            break;
        }
        v = next.into_iter().map(|z| z / nn).collect();
    }
    let nn = vec_norm(&v);
    v.into_iter().map(|z| z / nn).collect()
}
