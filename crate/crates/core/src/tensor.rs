//! Left/right Kronecker and Khatri-Rao products and the vectorization
//! identities they satisfy under the mixed products.

use crate::error::{Error, Result};
use crate::qmat::{ProductOrder, QuatMatrix};

/// `A ⊗L B` has blocks `a_pq B`; `A ⊗R B` has blocks `B a_pq`.
pub fn kron(a: &QuatMatrix, b: &QuatMatrix, side: ProductOrder) -> QuatMatrix {
    let (mb, nb) = b.shape();
    QuatMatrix::from_fn(a.rows() * mb, a.cols() * nb, |r, c| {
        let s = a[(r / mb, c / nb)];
        let e = b[(r % mb, c % nb)];
        match side {
            ProductOrder::Left => s * e,
            ProductOrder::Right => e * s,
        }
    })
}

/// Column-wise Kronecker product: column `n` is `kron(c_n, d_n, side)`.
pub fn khatri_rao(c: &QuatMatrix, d: &QuatMatrix, side: ProductOrder) -> Result<QuatMatrix> {
    if c.cols() != d.cols() {
        return Err(Error::shape(format!(
            "khatri-rao needs equal column counts, got {} and {}",
            c.cols(),
            d.cols()
        )));
    }
    let cols: Vec<QuatMatrix> = (0..c.cols()).map(|n| kron(&c.col(n), &d.col(n), side)).collect();
    let rows = c.rows() * d.rows();
    Ok(QuatMatrix::from_fn(rows, c.cols(), |r, n| cols[n][(r, 0)]))
}

/// The four mixed-product shapes that admit a vectorization identity.
///
/// | form    | left side             | right side            |
/// |---------|-----------------------|-----------------------|
/// | `L_R`   | `vec(A ·L (B ·R C))`  | `(Cᵀ ⊗R A) ·L vec B`  |
/// | `R_L`   | `vec(A ·R (B ·L C))`  | `(Cᵀ ⊗L A) ·R vec B`  |
/// | `LB_R`  | `vec((A ·L B) ·R C)`  | `(Cᵀ ⊗L A) ·L vec B`  |
/// | `RB_L`  | `vec((A ·R B) ·L C)`  | `(Cᵀ ⊗R A) ·R vec B`  |
///
/// The Khatri-Rao variants replace `B` by `Diag(b)`, `⊗` by `⋄` and `vec B` by `b`.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VecForm {
    L_R,
    R_L,
    LB_R,
    RB_L,
}

impl VecForm {
    pub const ALL: [VecForm; 4] = [VecForm::L_R, VecForm::R_L, VecForm::LB_R, VecForm::RB_L];

    /// The matrix that gets vectorized on the left-hand side.
    fn lhs(self, a: &QuatMatrix, b: &QuatMatrix, c: &QuatMatrix) -> Result<QuatMatrix> {
        match self {
            VecForm::L_R => a.mul_left(&b.mul_right(c)?),
            VecForm::R_L => a.mul_right(&b.mul_left(c)?),
            VecForm::LB_R => a.mul_left(b)?.mul_right(c),
            VecForm::RB_L => a.mul_right(b)?.mul_left(c),
        }
    }

    /// (Kronecker side, outer product order) of the right-hand side.
    fn rhs_sides(self) -> (ProductOrder, ProductOrder) {
        match self {
            VecForm::L_R => (ProductOrder::Right, ProductOrder::Left),
            VecForm::R_L => (ProductOrder::Left, ProductOrder::Right),
            VecForm::LB_R => (ProductOrder::Left, ProductOrder::Left),
            VecForm::RB_L => (ProductOrder::Right, ProductOrder::Right),
        }
    }
}

impl std::str::FromStr for VecForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L_R" => Ok(VecForm::L_R),
            "R_L" => Ok(VecForm::R_L),
            "LB_R" => Ok(VecForm::LB_R),
            "RB_L" => Ok(VecForm::RB_L),
            _ => Err(Error::DegenerateInput(format!("unknown vec form '{s}'"))),
        }
    }
}

fn check_chain(a: &QuatMatrix, b: &QuatMatrix, c: &QuatMatrix) -> Result<()> {
    if a.cols() != b.rows() || b.cols() != c.rows() {
        return Err(Error::shape(format!(
            "chain {}x{} · {}x{} · {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols()
        )));
    }
    Ok(())
}

/// Both sides of the Kronecker vectorization identity `form`, evaluated independently.
pub fn vec_identity_kron(
    a: &QuatMatrix,
    b: &QuatMatrix,
    c: &QuatMatrix,
    form: VecForm,
) -> Result<(QuatMatrix, QuatMatrix)> {
    check_chain(a, b, c)?;
    let lhs = form.lhs(a, b, c)?.vec();
    let (kside, order) = form.rhs_sides();
    let rhs = kron(&c.transpose(), a, kside).mul(&b.vec(), order)?;
    Ok((lhs, rhs))
}

/// Both sides of the Khatri-Rao identity `form` with `B = Diag(b)`.
pub fn vec_identity_kr(
    a: &QuatMatrix,
    b: &QuatMatrix,
    c: &QuatMatrix,
    form: VecForm,
) -> Result<(QuatMatrix, QuatMatrix)> {
    if !b.is_column() {
        return Err(Error::shape("khatri-rao identity expects b as a column vector"));
    }
    let diag = QuatMatrix::diag(b)?;
    check_chain(a, &diag, c)?;
    let lhs = form.lhs(a, &diag, c)?.vec();
    let (kside, order) = form.rhs_sides();
    let rhs = khatri_rao(&c.transpose(), a, kside)?.mul(b, order)?;
    Ok((lhs, rhs))
}
