//! Complex adjoint embeddings and the left/right quaternion inverses.
//!
//! With `A = A0 + A1 μ⊥` (both blocks in the subfield of `μ`, stored as
//! ordinary complex matrices) the left adjoint is
//! `[[A0, A1], [-conj(A1), conj(A0)]]` and the right adjoint is
//! `[[A0, -conj(A1)], [A1, conj(A0)]]`. The left adjoint turns `·L` into the
//! complex product, the right adjoint does the same for `·R`.

use num_complex::Complex64;

use crate::complex::{self, ComplexMatrix};
use crate::error::{Error, Result};
use crate::qmat::QuatMatrix;
use crate::quat::{are_orthogonal, from_symplectic_coords, symplectic_coords, PureUnitQuaternion, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjointSide {
    LeftAdjoint,
    RightAdjoint,
}

/// A validated pair of orthogonal pure unit quaternions `(μ, μ⊥)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axes {
    mu: PureUnitQuaternion,
    mu_perp: PureUnitQuaternion,
}

impl Default for Axes {
    /// `μ = i`, `μ⊥ = j`.
    fn default() -> Self {
        Axes {
            mu: PureUnitQuaternion::I,
            mu_perp: PureUnitQuaternion::J,
        }
    }
}

impl Axes {
    pub fn new(mu: PureUnitQuaternion, mu_perp: PureUnitQuaternion) -> Result<Self> {
        if !are_orthogonal(mu, mu_perp, DEFAULT_TOL) {
            return Err(Error::InvalidAxes);
        }
        Ok(Axes { mu, mu_perp })
    }

    /// Pairs `mu` with its deterministic orthogonal complement.
    pub fn from_mu(mu: PureUnitQuaternion) -> Self {
        Axes {
            mu,
            mu_perp: mu.orthogonal_complement(),
        }
    }

    pub fn mu(&self) -> PureUnitQuaternion {
        self.mu
    }

    pub fn mu_perp(&self) -> PureUnitQuaternion {
        self.mu_perp
    }
}

/// `A = A0 + A1 μ⊥`, with `a + bμ` entries stored as `a + bi`.
pub fn matrix_symplectic_split(a: &QuatMatrix, axes: &Axes) -> (ComplexMatrix, ComplexMatrix) {
    let (rows, cols) = a.shape();
    let mut a0 = ComplexMatrix::zeros(rows, cols);
    let mut a1 = ComplexMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let (z0, z1) = symplectic_coords(&a[(r, c)], axes.mu, axes.mu_perp);
            a0[(r, c)] = z0;
            a1[(r, c)] = z1;
        }
    }
    (a0, a1)
}

/// Inverse of [`matrix_symplectic_split`].
pub fn from_symplectic_blocks(a0: &ComplexMatrix, a1: &ComplexMatrix, axes: &Axes) -> Result<QuatMatrix> {
    if a0.shape() != a1.shape() {
        return Err(Error::shape("symplectic blocks differ in shape"));
    }
    let (rows, cols) = a0.shape();
    let data = (0..rows * cols)
        .map(|i| {
            let (r, c) = (i / cols, i % cols);
            from_symplectic_coords(a0[(r, c)], a1[(r, c)], axes.mu, axes.mu_perp)
        })
        .collect();
    QuatMatrix::new(rows, cols, data)
}

/// The `2M x 2N` complex adjoint of `a`.
pub fn adjoint(a: &QuatMatrix, side: AdjointSide, axes: &Axes) -> ComplexMatrix {
    let (a0, a1) = matrix_symplectic_split(a, axes);
    match side {
        AdjointSide::LeftAdjoint => {
            ComplexMatrix::from_blocks(&a0, &a1, &a1.conj().scale(Complex64::new(-1.0, 0.0)), &a0.conj())
        }
        AdjointSide::RightAdjoint => {
            ComplexMatrix::from_blocks(&a0, &a1.conj().scale(Complex64::new(-1.0, 0.0)), &a1, &a0.conj())
        }
    }
}

fn adjoint_blocks(x: &ComplexMatrix, side: AdjointSide) -> Result<(ComplexMatrix, ComplexMatrix, f64)> {
    let (rows, cols) = x.shape();
    if rows % 2 != 0 || cols % 2 != 0 || rows == 0 || cols == 0 {
        return Err(Error::shape(format!(
            "adjoint matrices have even positive dimensions, got {rows}x{cols}"
        )));
    }
    let (a0, a1, a1_alt, a0_alt) = match side {
        AdjointSide::LeftAdjoint => (
            x.quadrant(0, 0),
            x.quadrant(0, 1),
            x.quadrant(1, 0).conj().scale(Complex64::new(-1.0, 0.0)),
            x.quadrant(1, 1).conj(),
        ),
        AdjointSide::RightAdjoint => (
            x.quadrant(0, 0),
            x.quadrant(1, 0),
            x.quadrant(0, 1).conj().scale(Complex64::new(-1.0, 0.0)),
            x.quadrant(1, 1).conj(),
        ),
    };
    let mismatch = a0.sub(&a0_alt).max_abs().max(a1.sub(&a1_alt).max_abs());
    // average the two redundant copies of each block
    let half = Complex64::new(0.5, 0.0);
    let b0 = ComplexMatrix::from_fn(a0.rows(), a0.cols(), |r, c| (a0[(r, c)] + a0_alt[(r, c)]) * half);
    let b1 = ComplexMatrix::from_fn(a1.rows(), a1.cols(), |r, c| (a1[(r, c)] + a1_alt[(r, c)]) * half);
    Ok((b0, b1, mismatch))
}

/// Recovers the quaternion matrix from an adjoint, checking the block
/// structure to `1e-9 · max(1, ‖X‖_max)`.
pub fn from_adjoint(x: &ComplexMatrix, side: AdjointSide, axes: &Axes) -> Result<QuatMatrix> {
    let (a0, a1, mismatch) = adjoint_blocks(x, side)?;
    if mismatch > 1e-9 * x.max_abs().max(1.0) {
        return Err(Error::NotInEmbeddingImage);
    }
    from_symplectic_blocks(&a0, &a1, axes)
}

/// Like [`from_adjoint`] without the structure check; the redundant blocks are averaged.
pub(crate) fn project_from_adjoint(x: &ComplexMatrix, side: AdjointSide, axes: &Axes) -> Result<QuatMatrix> {
    let (a0, a1, _) = adjoint_blocks(x, side)?;
    from_symplectic_blocks(&a0, &a1, axes)
}

fn inverse_via(a: &QuatMatrix, side: AdjointSide, axes: &Axes, pivot_tol: f64) -> Result<QuatMatrix> {
    if !a.is_square() {
        return Err(Error::shape(format!(
            "inverse of non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let inv = complex::inverse_with_tol(&adjoint(a, side, axes), pivot_tol)?;
    project_from_adjoint(&inv, side, axes)
}

/// `A^{-L}` with `A^{-L} ·L A = A ·L A^{-L} = I`.
pub fn inv_left(a: &QuatMatrix) -> Result<QuatMatrix> {
    inv_left_with(a, &Axes::default(), complex::DEFAULT_PIVOT_TOL)
}

pub fn inv_left_with(a: &QuatMatrix, axes: &Axes, pivot_tol: f64) -> Result<QuatMatrix> {
    inverse_via(a, AdjointSide::LeftAdjoint, axes, pivot_tol)
}

/// `A^{-R}` with `A^{-R} ·R A = A ·R A^{-R} = I`.
pub fn inv_right(a: &QuatMatrix) -> Result<QuatMatrix> {
    inv_right_with(a, &Axes::default(), complex::DEFAULT_PIVOT_TOL)
}

pub fn inv_right_with(a: &QuatMatrix, axes: &Axes, pivot_tol: f64) -> Result<QuatMatrix> {
    inverse_via(a, AdjointSide::RightAdjoint, axes, pivot_tol)
}

/// Reads a subfield matrix `a + bμ` as the complex matrix `a + bi`.
pub fn subfield_to_complex(a: &QuatMatrix, mu: PureUnitQuaternion, tol: f64) -> Result<ComplexMatrix> {
    if let Some((row, col)) = a.first_outside_subfield(mu, tol) {
        return Err(Error::EntriesOutsideSubfield { row, col });
    }
    Ok(ComplexMatrix::from_fn(a.rows(), a.cols(), |r, c| a[(r, c)].subfield_coords(mu)))
}

/// Lifts a complex matrix into the subfield of `mu` via `a + bi ↦ a + bμ`.
pub fn complex_to_subfield(c: &ComplexMatrix, mu: PureUnitQuaternion) -> Result<QuatMatrix> {
    use crate::quat::Quaternion;
    QuatMatrix::new(
        c.rows(),
        c.cols(),
        c.data().iter().map(|z| Quaternion::from_subfield(*z, mu)).collect(),
    )
}
