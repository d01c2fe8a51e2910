//! Complex widely-linear systems `A X + B X* = C` solved by lifting into ℍ.
//!
//! With entries in `ℂ_μ` and `μ⊥ ⊥ μ`, conjugation is the sandwich
//! `X* = -μ⊥ X μ⊥`. Writing `G = [I; μ⊥ I]` so that `G ·R X = [X; X μ⊥]`,
//! the system and its conjugate stack into `F ·L (G ·R X) = [C; C*]` with
//!
//! ```text
//! F = [ A   -B μ⊥ ]
//!     [ B*  -A* μ⊥ ]
//! ```
//!
//! and `X = ½ Gᴴ ·R (F^{-L} ·L [C; C*])`.

use crate::adjoint::{complex_to_subfield, inv_left, Axes};
use crate::complex::ComplexMatrix;
use crate::error::{Error, Result};
use crate::qmat::{ProductOrder, QuatMatrix};
use crate::quat::{Quaternion, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct WidelyLinearSystem {
    a: QuatMatrix,
    b: QuatMatrix,
    c: QuatMatrix,
    axes: Axes,
}

/// The lifted matrices of a system.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedParts {
    /// `[A, -B μ⊥]`
    pub f1: QuatMatrix,
    /// `[B*, -A* μ⊥]`
    pub f2: QuatMatrix,
    /// `[F1; F2]`
    pub f: QuatMatrix,
    /// `[I; μ⊥ I]`
    pub g: QuatMatrix,
    /// `[C; C*]`
    pub c_a: QuatMatrix,
}

fn check_subfield(m: &QuatMatrix, axes: &Axes) -> Result<()> {
    match m.first_outside_subfield(axes.mu(), DEFAULT_TOL) {
        Some((row, col)) => Err(Error::EntriesOutsideSubfield { row, col }),
        None => Ok(()),
    }
}

impl WidelyLinearSystem {
    /// `a`, `b` are `M x M`, `c` is `M x P`, all with entries in `ℂ_μ`.
    pub fn new(a: QuatMatrix, b: QuatMatrix, c: QuatMatrix, axes: Axes) -> Result<Self> {
        let m = a.rows();
        if !a.is_square() || b.shape() != (m, m) || c.rows() != m {
            return Err(Error::shape(format!(
                "widely-linear system needs A, B square of equal size and C with matching rows, got A {}x{}, B {}x{}, C {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                c.rows(),
                c.cols()
            )));
        }
        for x in [&a, &b, &c] {
            check_subfield(x, &axes)?;
        }
        Ok(WidelyLinearSystem { a, b, c, axes })
    }

    /// Lifts ordinary complex matrices via `a + bi ↦ a + bμ`.
    pub fn from_complex(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix, axes: Axes) -> Result<Self> {
        let mu = axes.mu();
        WidelyLinearSystem::new(
            complex_to_subfield(a, mu)?,
            complex_to_subfield(b, mu)?,
            complex_to_subfield(c, mu)?,
            axes,
        )
    }

    pub fn a(&self) -> &QuatMatrix {
        &self.a
    }

    pub fn b(&self) -> &QuatMatrix {
        &self.b
    }

    pub fn c(&self) -> &QuatMatrix {
        &self.c
    }

    pub fn axes(&self) -> Axes {
        self.axes
    }

    pub fn lifted(&self) -> LiftedParts {
        let m = self.a.rows();
        let p = self.axes.mu_perp().as_quaternion();
        let neg_right = |x: &QuatMatrix| x.scalar_mul(ProductOrder::Right, -p);
        let f1 = self.a.hstack(&neg_right(&self.b)).expect("square blocks");
        let f2 = self.b.conj().hstack(&neg_right(&self.a.conj())).expect("square blocks");
        let f = f1.vstack(&f2).expect("equal widths");
        let eye = QuatMatrix::identity(m);
        let g = eye.vstack(&eye.scalar_mul(ProductOrder::Left, p)).expect("equal widths");
        let c_a = self.c.vstack(&self.c.conj()).expect("equal widths");
        LiftedParts { f1, f2, f, g, c_a }
    }

    /// Solves for `X`; fails with [`Error::SingularMatrix`] when `F` is not invertible.
    pub fn solve(&self) -> Result<QuatMatrix> {
        let parts = self.lifted();
        let y = inv_left(&parts.f)?.mul_left(&parts.c_a)?;
        Ok(parts.g.herm().mul_right(&y)?.scale(0.5))
    }

    /// `‖A X + B X* − C‖_F`, with `X*` the elementwise conjugate.
    pub fn residual(&self, x: &QuatMatrix) -> Result<f64> {
        let lhs = &self.a.mul_left(x)? + &self.b.mul_left(&x.conj())?;
        if lhs.shape() != self.c.shape() {
            return Err(Error::shape("solution shape does not match C"));
        }
        Ok((&lhs - &self.c).frobenius_norm())
    }
}

/// `-μ⊥ X μ⊥`, which equals the elementwise conjugate for `ℂ_μ` entries.
pub fn conj_via_sandwich(x: &QuatMatrix, axes: &Axes) -> Result<QuatMatrix> {
    check_subfield(x, axes)?;
    let p: Quaternion = axes.mu_perp().as_quaternion();
    Ok(x.map(|q| -(p * q * p)))
}
