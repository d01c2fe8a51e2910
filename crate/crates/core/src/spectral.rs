//! Right eigendecomposition through the left adjoint, plus verification and
//! reconstruction helpers for left and right eigenpairs.
//!
//! The `2M` eigenvalues of `χ_i{A}` come in pairs `{λ, conj(λ)}`. Keeping
//! the member of each pair with nonnegative imaginary part gives the `M`
//! standard eigenvalues. A complex eigenvector `[z0; z1]` of `χ_i{A}` maps
//! back to the quaternion vector `q = z0 - conj(z1) j`, which satisfies
//! `A ·L q = q λ`.

use num_complex::Complex64;

use crate::adjoint::{adjoint, inv_left, subfield_to_complex, AdjointSide, Axes};
use crate::complex::{self, ComplexMatrix};
use crate::error::{Error, Result};
use crate::qmat::{ProductOrder, QuatMatrix};
use crate::quat::{from_symplectic_coords, PureUnitQuaternion, Quaternion, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct RightEigenDecomposition {
    /// Right eigenvectors as columns, each of unit norm.
    pub q: QuatMatrix,
    /// Standard eigenvalues `a + b i` with `b ≥ 0`, sorted by `(a, b)`.
    pub lambda: Vec<Quaternion>,
}

impl RightEigenDecomposition {
    pub fn eigenvector(&self, m: usize) -> QuatMatrix {
        self.q.col(m)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeftEigenPair {
    pub lambda: Quaternion,
    pub q: QuatMatrix,
}

fn check_square(a: &QuatMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::shape(format!(
            "eigenproblem needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

fn check_pair_shapes(a: &QuatMatrix, q: &QuatMatrix) -> Result<()> {
    check_square(a)?;
    if !q.is_column() || q.rows() != a.rows() {
        return Err(Error::shape(format!(
            "eigenvector must be {}x1, got {}x{}",
            a.rows(),
            q.rows(),
            q.cols()
        )));
    }
    Ok(())
}

fn unembed(z: &[Complex64], axes: &Axes) -> QuatMatrix {
    let n = z.len() / 2;
    QuatMatrix::from_fn(n, 1, |r, _| from_symplectic_coords(z[r], -z[n + r].conj(), axes.mu(), axes.mu_perp()))
}

fn embed_pair(q: &QuatMatrix, out: &mut Vec<Vec<Complex64>>) {
    // columns for q and q j, which span q's right ℍ-line over ℂ
    let n = q.rows();
    let mut a = vec![Complex64::new(0.0, 0.0); 2 * n];
    let mut b = a.clone();
    for r in 0..n {
        let p = q[(r, 0)].to_pair();
        a[r] = p.z1;
        a[n + r] = -p.z2.conj();
        let pj = (q[(r, 0)] * Quaternion::J).to_pair();
        b[r] = pj.z1;
        b[n + r] = -pj.z2.conj();
    }
    out.push(a);
    out.push(b);
}

/// Rotates the column so its largest entry has a positive real `ℂ_i`
/// component, then scales it to unit norm. Both are right multiplications
/// by elements of `ℂ_i`, which commute with a standard eigenvalue.
fn canonical_phase(q: &QuatMatrix) -> QuatMatrix {
    let mut best = 0;
    for r in 1..q.rows() {
        if q[(r, 0)].modulus() > q[(best, 0)].modulus() {
            best = r;
        }
    }
    let z1 = q[(best, 0)].to_pair().z1;
    let norm = q.frobenius_norm();
    let phase = if z1.norm() > 1e-12 * norm {
        let u = z1.conj() / z1.norm();
        Quaternion::new(u.re, u.im, 0.0, 0.0)
    } else {
        Quaternion::ONE
    };
    q.scalar_mul(ProductOrder::Right, phase).scale(1.0 / norm)
}

/// Right eigendecomposition `A = Q ·L Diag(Λ) ·L Q^{-L}` with standard eigenvalues.
pub fn right_eig(a: &QuatMatrix) -> Result<RightEigenDecomposition> {
    check_square(a)?;
    let m = a.rows();
    let axes = Axes::default();
    let chi = adjoint(a, AdjointSide::LeftAdjoint, &axes);
    let eig = complex::eigen(&chi)?;
    let tol = 1e-7 * a.frobenius_norm();
    let values = &eig.values;

    // greedy nearest-conjugate pairing
    let mut used = vec![false; values.len()];
    let mut standard: Vec<Complex64> = Vec::with_capacity(m);
    for i in 0..values.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let target = values[i].conj();
        let partner = (0..values.len())
            .filter(|&j| !used[j])
            .min_by(|&x, &y| (values[x] - target).norm().total_cmp(&(values[y] - target).norm()))
            .ok_or_else(|| Error::DefectiveOrAmbiguous("odd adjoint spectrum".into()))?;
        let dist = (values[partner] - target).norm();
        if dist > tol {
            return Err(Error::DefectiveOrAmbiguous(format!(
                "eigenvalue {} has no conjugate partner (closest at distance {dist:e})",
                values[i]
            )));
        }
        used[partner] = true;
        let keep = if values[i].im >= values[partner].im { values[i] } else { values[partner] };
        standard.push(Complex64::new(keep.re, keep.im.abs()));
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&x, &y| {
        standard[x]
            .re
            .total_cmp(&standard[y].re)
            .then(standard[x].im.total_cmp(&standard[y].im))
    });

    // eigenvectors: for each standard value take the first candidate whose
    // quaternion line is independent of the columns already chosen
    let mut columns: Vec<QuatMatrix> = Vec::with_capacity(m);
    let mut embedded: Vec<Vec<Complex64>> = Vec::new();
    let mut taken = vec![false; values.len()];
    let mut lambda = Vec::with_capacity(m);
    for &s in &order {
        let lam = standard[s];
        let mut chosen = None;
        for (idx, v) in values.iter().enumerate() {
            if taken[idx] {
                continue;
            }
            let q = if (v - lam).norm() <= tol {
                unembed(&eig.vectors.col(idx), &axes)
            } else if (v - lam.conj()).norm() <= tol {
                // A q = q conj(λ)  ⇒  A (q j) = (q j) λ
                unembed(&eig.vectors.col(idx), &axes).scalar_mul(ProductOrder::Right, Quaternion::J)
            } else {
                continue;
            };
            let mut trial = embedded.clone();
            embed_pair(&q, &mut trial);
            let mat = ComplexMatrix::from_columns(2 * m, &trial);
            if complex::rank(&mat, Some(1e-10 * (2 * m) as f64 * mat.max_abs())) == trial.len() {
                embedded = trial;
                taken[idx] = true;
                chosen = Some(q);
                break;
            }
        }
        let q = chosen.ok_or_else(|| {
            Error::DefectiveOrAmbiguous(format!("no independent eigenvector for eigenvalue {lam}"))
        })?;
        columns.push(canonical_phase(&q));
        lambda.push(Quaternion::new(lam.re, lam.im, 0.0, 0.0));
    }

    let q = QuatMatrix::from_fn(m, m, |r, c| columns[c][(r, 0)]);
    match inv_left(&q) {
        Ok(_) => Ok(RightEigenDecomposition { q, lambda }),
        Err(Error::SingularMatrix) => Err(Error::DefectiveOrAmbiguous("eigenvector matrix is singular".into())),
        Err(e) => Err(e),
    }
}

/// `Q ·L Diag(Λ) ·L Q^{-L}`.
pub fn reconstruct_right(dec: &RightEigenDecomposition) -> Result<QuatMatrix> {
    let d = QuatMatrix::diag_from(&dec.lambda)?;
    dec.q.mul_left(&d)?.mul_left(&inv_left(&dec.q)?)
}

fn pair_holds(a: &QuatMatrix, q: &QuatMatrix, lambda_q: QuatMatrix, tol: f64) -> Result<bool> {
    let r = &a.mul_left(q)? - &lambda_q;
    Ok(r.frobenius_norm() <= tol * a.frobenius_norm() * q.frobenius_norm())
}

/// `‖A ·L q − q λ‖ ≤ tol·‖A‖_F·‖q‖`.
pub fn verify_right_pair(a: &QuatMatrix, q: &QuatMatrix, lambda: Quaternion, tol: f64) -> Result<bool> {
    check_pair_shapes(a, q)?;
    pair_holds(a, q, q.scalar_mul(ProductOrder::Right, lambda), tol)
}

/// `‖A ·L q − λ q‖ ≤ tol·‖A‖_F·‖q‖`.
pub fn verify_left_pair(a: &QuatMatrix, q: &QuatMatrix, lambda: Quaternion, tol: f64) -> Result<bool> {
    check_pair_shapes(a, q)?;
    pair_holds(a, q, q.scalar_mul(ProductOrder::Left, lambda), tol)
}

/// `(Q ·R Diag(Λ)) ·L Q^{-L}`, the matrix whose left eigenpairs are the columns of `Q` with `Λ`.
pub fn reconstruct_left(q: &QuatMatrix, lambda: &[Quaternion]) -> Result<QuatMatrix> {
    check_square(q)?;
    if lambda.len() != q.cols() {
        return Err(Error::shape(format!("{} eigenvalues for {} eigenvectors", lambda.len(), q.cols())));
    }
    q.mul_right(&QuatMatrix::diag_from(lambda)?)?.mul_left(&inv_left(q)?)
}

/// The similar element `w + |v| i`.
pub fn standardize_right_eigenvalue(lambda: Quaternion) -> Quaternion {
    lambda.canonical_representative()
}

/// Eigenpairs of a matrix with all entries in `ℂ_μ`, where left and right
/// eigenpairs coincide. Sorted by `(re, im)` of the eigenvalue coordinates.
pub fn left_eig_in_subfield(a: &QuatMatrix, mu: PureUnitQuaternion) -> Result<Vec<LeftEigenPair>> {
    check_square(a)?;
    let c = subfield_to_complex(a, mu, DEFAULT_TOL)?;
    let eig = complex::eigen(&c)?;
    let mut idx: Vec<usize> = (0..eig.values.len()).collect();
    idx.sort_by(|&x, &y| {
        let (p, q) = (eig.values[x], eig.values[y]);
        p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im))
    });
    Ok(idx
        .into_iter()
        .map(|i| LeftEigenPair {
            lambda: Quaternion::from_subfield(eig.values[i], mu),
            q: QuatMatrix::from_fn(c.rows(), 1, |r, _| Quaternion::from_subfield(eig.vectors[(r, i)], mu)),
        })
        .collect())
}
