//! The eight fundamental subspaces of a quaternion matrix.
//!
//! | kind  | set                          | closed under    |
//! |-------|------------------------------|-----------------|
//! | `LR`  | `{A ·L x}`                   | right scalars   |
//! | `RR`  | `{A ·R x}`                   | left scalars    |
//! | `LC`  | `{y : yᵀ = xᵀ ·L A}`         | left scalars    |
//! | `RC`  | `{y : yᵀ = xᵀ ·R A}`         | right scalars   |
//! | `LRN` | `{x : A ·L x = 0}`           | right scalars   |
//! | `RRN` | `{x : A ·R x = 0}`           | left scalars    |
//! | `LCN` | `{x : xᵀ ·L A = 0}`          | left scalars    |
//! | `RCN` | `{x : xᵀ ·R A = 0}`          | right scalars   |
//!
//! Everything is computed through the complex adjoints. A column `x` is
//! embedded as `[x0; -conj(x1)]` for the left adjoint and `[x0; x1]` for the
//! right adjoint, so that `χ{A}·emb(x) = emb(A ·L x)` and
//! `χ'{A}·emb(x) = emb(A ·R x)`. Both embeddings are real-linear bijections
//! onto `ℂ^{2N}`, which is why adjoint ranks are always even.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::adjoint::{adjoint, matrix_symplectic_split, AdjointSide, Axes};
use crate::complex::{self, ComplexMatrix};
use crate::error::{Error, Result};
use crate::qmat::{ProductOrder, QuatMatrix};
use crate::quat::from_symplectic_coords;

/// Relative rank tolerance used by [`basis`], matching the complex engine default.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubspaceKind {
    LR,
    RR,
    LC,
    RC,
    LRN,
    RRN,
    LCN,
    RCN,
}

/// Which scalar multiplication keeps a subspace closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarSide {
    /// `v ↦ v q`
    RightScalars,
    /// `v ↦ q v`
    LeftScalars,
}

impl ScalarSide {
    pub fn as_order(self) -> ProductOrder {
        match self {
            ScalarSide::RightScalars => ProductOrder::Right,
            ScalarSide::LeftScalars => ProductOrder::Left,
        }
    }
}

impl SubspaceKind {
    pub const ALL: [SubspaceKind; 8] = [
        SubspaceKind::LR,
        SubspaceKind::RR,
        SubspaceKind::LC,
        SubspaceKind::RC,
        SubspaceKind::LRN,
        SubspaceKind::RRN,
        SubspaceKind::LCN,
        SubspaceKind::RCN,
    ];

    pub fn scalar_side(self) -> ScalarSide {
        use SubspaceKind::*;
        match self {
            LR | LRN | RC | RCN => ScalarSide::RightScalars,
            RR | RRN | LC | LCN => ScalarSide::LeftScalars,
        }
    }

    pub fn is_null_space(self) -> bool {
        use SubspaceKind::*;
        matches!(self, LRN | RRN | LCN | RCN)
    }

    /// Length of the member vectors for an `M x N` matrix.
    pub fn vector_len(self, a: &QuatMatrix) -> usize {
        use SubspaceKind::*;
        match self {
            LR | RR | LCN | RCN => a.rows(),
            LC | RC | LRN | RRN => a.cols(),
        }
    }

    pub fn name(self) -> &'static str {
        use SubspaceKind::*;
        match self {
            LR => "LR",
            RR => "RR",
            LC => "LC",
            RC => "RC",
            LRN => "LRN",
            RRN => "RRN",
            LCN => "LCN",
            RCN => "RCN",
        }
    }
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubspaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubspaceKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::DegenerateInput(format!("unknown subspace kind '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    pub kind: SubspaceKind,
    /// Column vectors, independent over the declared scalar side.
    pub vectors: Vec<QuatMatrix>,
    pub scalar_side: ScalarSide,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// The basis vectors side by side, or `None` for the zero subspace.
    pub fn to_matrix(&self) -> Option<QuatMatrix> {
        let mut it = self.vectors.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |m, v| m.hstack(v).expect("basis vectors share a length")))
    }
}

fn embed(x: &QuatMatrix, side: AdjointSide, axes: &Axes) -> Vec<Complex64> {
    let (x0, x1) = matrix_symplectic_split(x, axes);
    let (x0, x1) = (x0.col(0), x1.col(0));
    let bottom: Vec<Complex64> = match side {
        AdjointSide::LeftAdjoint => x1.iter().map(|z| -z.conj()).collect(),
        AdjointSide::RightAdjoint => x1,
    };
    x0.into_iter().chain(bottom).collect()
}

fn unembed(z: &[Complex64], side: AdjointSide, axes: &Axes) -> QuatMatrix {
    let n = z.len() / 2;
    QuatMatrix::from_fn(n, 1, |r, _| {
        let x1 = match side {
            AdjointSide::LeftAdjoint => -z[n + r].conj(),
            AdjointSide::RightAdjoint => z[n + r],
        };
        from_symplectic_coords(z[r], x1, axes.mu(), axes.mu_perp())
    })
}

/// `x μ⊥` for the left family, `μ⊥ x` for the right family; together with
/// `x` its embedding spans the quaternion line through `x` over `ℂ`.
fn partner(x: &QuatMatrix, side: AdjointSide, axes: &Axes) -> QuatMatrix {
    let p = axes.mu_perp().as_quaternion();
    match side {
        AdjointSide::LeftAdjoint => x.scalar_mul(ProductOrder::Right, p),
        AdjointSide::RightAdjoint => x.scalar_mul(ProductOrder::Left, p),
    }
}

/// Greedily keeps candidates whose quaternion line is independent of those already kept.
fn select(
    candidates: impl IntoIterator<Item = QuatMatrix>,
    side: AdjointSide,
    axes: &Axes,
    threshold: f64,
    target: usize,
) -> Vec<QuatMatrix> {
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    let mut kept = Vec::new();
    for v in candidates {
        if kept.len() == target {
            break;
        }
        let mut trial = cols.clone();
        trial.push(embed(&v, side, axes));
        trial.push(embed(&partner(&v, side, axes), side, axes));
        let m = ComplexMatrix::from_columns(trial[0].len(), &trial);
        if complex::rank(&m, Some(threshold)) == trial.len() {
            cols = trial;
            kept.push(v);
        }
    }
    debug_assert_eq!(kept.len(), target, "greedy basis fell short");
    kept
}

fn abs_threshold(m: &ComplexMatrix, tol: f64) -> f64 {
    tol * m.rows().max(m.cols()) as f64 * m.max_abs()
}

fn even_half(rank: usize) -> usize {
    debug_assert!(rank.is_multiple_of(2), "adjoint rank {rank} is odd");
    rank / 2
}

fn range_basis(a: &QuatMatrix, side: AdjointSide, tol: f64, axes: &Axes) -> Vec<QuatMatrix> {
    let chi = adjoint(a, side, axes);
    let threshold = abs_threshold(&chi, tol);
    let target = even_half(complex::rank(&chi, Some(threshold)));
    let mut candidates: Vec<QuatMatrix> = (0..a.cols()).map(|k| a.col(k)).collect();
    // fallback candidates in case tolerance effects reject a column
    candidates.extend(
        complex::orthonormal_column_basis(&chi, Some(threshold))
            .iter()
            .map(|z| unembed(z, side, axes)),
    );
    select(candidates, side, axes, threshold, target)
}

fn null_basis(a: &QuatMatrix, side: AdjointSide, tol: f64, axes: &Axes) -> Vec<QuatMatrix> {
    let chi = adjoint(a, side, axes);
    let threshold = abs_threshold(&chi, tol);
    let (rank, nb) = complex::rank_and_nullbasis(&chi, Some(threshold));
    even_half(rank);
    let target = (chi.cols() - rank) / 2;
    let candidates: Vec<QuatMatrix> = (0..nb.cols()).map(|c| unembed(&nb.col(c), side, axes)).collect();
    // null vectors are unit length
    select(candidates, side, axes, tol * chi.cols() as f64, target)
}

/// Basis of `kind(A)` with the default axes `(i, j)`.
///
/// `tol` is a relative rank tolerance; [`DEFAULT_RANK_TOL`] is a good default.
pub fn basis(a: &QuatMatrix, kind: SubspaceKind, tol: f64) -> SubspaceBasis {
    basis_with(a, kind, tol, &Axes::default())
}

pub fn basis_with(a: &QuatMatrix, kind: SubspaceKind, tol: f64, axes: &Axes) -> SubspaceBasis {
    use AdjointSide::{LeftAdjoint as L, RightAdjoint as R};
    use SubspaceKind::*;
    let vectors = match kind {
        LR => range_basis(a, L, tol, axes),
        RR => range_basis(a, R, tol, axes),
        LC => range_basis(&a.transpose(), R, tol, axes),
        RC => range_basis(&a.transpose(), L, tol, axes),
        LRN => null_basis(a, L, tol, axes),
        RRN => null_basis(a, R, tol, axes),
        LCN => null_basis(&a.transpose(), R, tol, axes),
        RCN => null_basis(&a.transpose(), L, tol, axes),
    };
    SubspaceBasis {
        kind,
        vectors,
        scalar_side: kind.scalar_side(),
    }
}

/// Membership test with the default axes.
///
/// Range kinds: distance from the embedded `v` to the adjoint's column
/// space is at most `tol·‖v‖`. Null kinds: the defining product has norm at
/// most `tol·‖A‖_F·‖v‖`.
pub fn contains(a: &QuatMatrix, kind: SubspaceKind, v: &QuatMatrix, tol: f64) -> Result<bool> {
    contains_with(a, kind, v, tol, &Axes::default())
}

pub fn contains_with(
    a: &QuatMatrix,
    kind: SubspaceKind,
    v: &QuatMatrix,
    tol: f64,
    axes: &Axes,
) -> Result<bool> {
    use AdjointSide::{LeftAdjoint as L, RightAdjoint as R};
    use SubspaceKind::*;
    let len = kind.vector_len(a);
    if !v.is_column() || v.rows() != len {
        return Err(Error::shape(format!(
            "{kind} of a {}x{} matrix holds {len}x1 vectors, got {}x{}",
            a.rows(),
            a.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let nv = v.frobenius_norm();
    let in_range = |m: ComplexMatrix, z: Vec<Complex64>| complex::range_residual(&m, &z, None) <= tol * nv;
    let null_residual = |p: Result<QuatMatrix>| -> Result<bool> {
        Ok(p?.frobenius_norm() <= tol * a.frobenius_norm() * nv)
    };
    match kind {
        LR => Ok(in_range(adjoint(a, L, axes), embed(v, L, axes))),
        RR => Ok(in_range(adjoint(a, R, axes), embed(v, R, axes))),
        // yᵀ = xᵀ ·L A  ⇔  [y0; y1] = χ{A}ᵀ [x0; x1]
        LC => Ok(in_range(adjoint(a, L, axes).transpose(), embed(v, R, axes))),
        // yᵀ = xᵀ ·R A  ⇔  [y0; -conj(y1)] = χ'{A}ᵀ [x0; -conj(x1)]
        RC => Ok(in_range(adjoint(a, R, axes).transpose(), embed(v, L, axes))),
        LRN => null_residual(a.mul_left(v)),
        RRN => null_residual(a.mul_right(v)),
        LCN => null_residual(v.transpose().mul_left(a)),
        RCN => null_residual(v.transpose().mul_right(a)),
    }
}

/// `dim LR(A)`, half the rank of the left adjoint.
pub fn rank_left(a: &QuatMatrix) -> usize {
    even_half(complex::rank(&adjoint(a, AdjointSide::LeftAdjoint, &Axes::default()), None))
}

/// `dim RR(A)`, half the rank of the right adjoint.
pub fn rank_right(a: &QuatMatrix) -> usize {
    even_half(complex::rank(&adjoint(a, AdjointSide::RightAdjoint, &Axes::default()), None))
}
