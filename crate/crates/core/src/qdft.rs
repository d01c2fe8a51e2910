//! Two-side, left-side and right-side discrete quaternion Fourier transforms
//! in matrix form.
//!
//! With `F1 = F(M, μ1)` and `F2 = F(N, μ2)` for an `M x N` input `A`:
//!
//! | kind        | forward               | inverse                  |
//! |-------------|-----------------------|--------------------------|
//! | `TwoSide`   | `F1 ·L A ·L F2`       | `F1ᴴ ·L A ·L F2ᴴ`        |
//! | `LeftSide`  | `F1 ·L (A ·R F2)`     | `(F1ᴴ ·L A) ·R F2ᴴ`      |
//! | `RightSide` | `(F1 ·R A) ·L F2`     | `F1ᴴ ·R (A ·L F2ᴴ)`      |

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qmat::QuatMatrix;
use crate::quat::{PureUnitQuaternion, Quaternion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QdftKind {
    /// Kernels on both sides of the data.
    TwoSide,
    /// Both kernels to the left of the data.
    LeftSide,
    /// Both kernels to the right of the data.
    RightSide,
}

impl QdftKind {
    pub const ALL: [QdftKind; 3] = [QdftKind::TwoSide, QdftKind::LeftSide, QdftKind::RightSide];
}

impl FromStr for QdftKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "two-side" | "twoside" => Ok(QdftKind::TwoSide),
            "2" | "left-side" | "leftside" => Ok(QdftKind::LeftSide),
            "3" | "right-side" | "rightside" => Ok(QdftKind::RightSide),
            _ => Err(Error::DegenerateInput(format!("unknown transform kind '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FourierMatrix {
    pub f: QuatMatrix,
    pub mu: PureUnitQuaternion,
    pub size: usize,
}

/// `[F]_{m,u} = exp(-μ 2π u m / size) / √size`.
pub fn fourier_matrix(size: usize, mu: PureUnitQuaternion) -> Result<FourierMatrix> {
    if size == 0 {
        return Err(Error::DegenerateInput("Fourier matrix of size 0".into()));
    }
    let scale = 1.0 / (size as f64).sqrt();
    let axis = mu.as_quaternion();
    let f = QuatMatrix::from_fn(size, size, |m, u| {
        // reduce the index product first so large sizes keep full accuracy
        let phase = ((u * m) % size) as f64 / size as f64;
        (axis * (-2.0 * PI * phase)).exp() * scale
    });
    Ok(FourierMatrix { f, mu, size })
}

fn factors(a: &QuatMatrix, mu1: PureUnitQuaternion, mu2: PureUnitQuaternion) -> Result<(QuatMatrix, QuatMatrix)> {
    Ok((fourier_matrix(a.rows(), mu1)?.f, fourier_matrix(a.cols(), mu2)?.f))
}

pub fn dqft(a: &QuatMatrix, kind: QdftKind, mu1: PureUnitQuaternion, mu2: PureUnitQuaternion) -> Result<QuatMatrix> {
    let (f1, f2) = factors(a, mu1, mu2)?;
    match kind {
        QdftKind::TwoSide => f1.mul_left(a)?.mul_left(&f2),
        QdftKind::LeftSide => f1.mul_left(&a.mul_right(&f2)?),
        QdftKind::RightSide => f1.mul_right(a)?.mul_left(&f2),
    }
}

pub fn idqft(a: &QuatMatrix, kind: QdftKind, mu1: PureUnitQuaternion, mu2: PureUnitQuaternion) -> Result<QuatMatrix> {
    let (f1, f2) = factors(a, mu1, mu2)?;
    let (g1, g2) = (f1.herm(), f2.herm());
    match kind {
        QdftKind::TwoSide => g1.mul_left(a)?.mul_left(&g2),
        QdftKind::LeftSide => g1.mul_left(a)?.mul_right(&g2),
        QdftKind::RightSide => g1.mul_right(&a.mul_left(&g2)?),
    }
}

/// The kernel value `exp(-μ 2π k / size) / √size` used by the componentwise sums.
pub fn kernel(mu: PureUnitQuaternion, k: usize, size: usize) -> Quaternion {
    let phase = (k % size) as f64 / size as f64;
    (mu.as_quaternion() * (-2.0 * PI * phase)).exp() * (1.0 / (size as f64).sqrt())
}
