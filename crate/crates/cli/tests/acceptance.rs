//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p quatlinalg-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::{Complex, DMatrix};
use quatlinalg::adjoint::{complex_to_subfield, subfield_to_complex};
use quatlinalg::spectral::{reconstruct_right, verify_right_pair};
use quatlinalg::subspace::{basis, contains, rank_left, rank_right, DEFAULT_RANK_TOL};
use quatlinalg::tensor::{vec_identity_kr, vec_identity_kron};
use quatlinalg::{
    adjoint, dqft, fourier_matrix, idqft, inv_left, inv_right, khatri_rao, kron, read_qmat, right_eig, write_qmat,
    AdjointSide, Axes, ComplexMatrix, Error, ProductOrder, PureUnitQuaternion, QdftKind, QuatMatrix, Quaternion,
    SubspaceKind, TripleOrder, VecForm, WidelyLinearSystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Rng8 = ChaCha8Rng;
type Check = Result<String, String>;

fn rng(seed: u64) -> Rng8 {
    Rng8::seed_from_u64(seed)
}

fn quat(r: &mut Rng8) -> Quaternion {
    Quaternion::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

fn unit_quat(r: &mut Rng8) -> Quaternion {
    loop {
        let q = quat(r);
        if q.modulus() > 1e-3 {
            return q * (1.0 / q.modulus());
        }
    }
}

fn axis(r: &mut Rng8) -> PureUnitQuaternion {
    loop {
        let q = quat(r);
        if let Ok(mu) = PureUnitQuaternion::new(q.x, q.y, q.z) {
            return mu;
        }
    }
}

fn mat(r: &mut Rng8, m: usize, n: usize) -> QuatMatrix {
    QuatMatrix::from_fn(m, n, |_, _| quat(r))
}

fn cplx(r: &mut Rng8) -> Complex<f64> {
    Complex::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

fn subfield_mat(r: &mut Rng8, m: usize, n: usize, mu: PureUnitQuaternion) -> QuatMatrix {
    QuatMatrix::from_fn(m, n, |_, _| Quaternion::from_subfield(cplx(r), mu))
}

fn dims(r: &mut Rng8, hi: usize, count: usize) -> Vec<usize> {
    (0..count).map(|_| r.gen_range(1..=hi)).collect()
}

fn dist(a: &QuatMatrix, b: &QuatMatrix) -> f64 {
    (a - b).frobenius_norm()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(d: f64, tol: f64, what: &str) -> Result<(), String> {
    ensure(d <= tol, || format!("{what}: {d:e} > {tol:e}"))
}

fn lib<T>(r: quatlinalg::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- criterion 1

fn oracle_prod(a: &QuatMatrix, b: &QuatMatrix, order: ProductOrder) -> QuatMatrix {
    QuatMatrix::from_fn(a.rows(), b.cols(), |m, n| {
        let mut s = Quaternion::ZERO;
        for k in 0..a.cols() {
            s += match order {
                ProductOrder::Left => a[(m, k)] * b[(k, n)],
                ProductOrder::Right => b[(k, n)] * a[(m, k)],
            };
        }
        s
    })
}

/// Per-entry nested loops: the inner bracket is summed first, then the outer
/// sum, each with the scalar order of the ordering.
fn oracle_triple(a: &QuatMatrix, b: &QuatMatrix, c: &QuatMatrix, order: TripleOrder) -> QuatMatrix {
    let (kk, ll) = (a.cols(), b.cols());
    QuatMatrix::from_fn(a.rows(), c.cols(), |m, n| {
        let mut s = Quaternion::ZERO;
        match order {
            // outer sum over l of the bracket (A ? B)_{ml}
            TripleOrder::LL | TripleOrder::RR | TripleOrder::LBThenR | TripleOrder::RBThenL => {
                for l in 0..ll {
                    let mut t = Quaternion::ZERO;
                    for k in 0..kk {
                        t += match order {
                            TripleOrder::LL | TripleOrder::LBThenR => a[(m, k)] * b[(k, l)],
                            _ => b[(k, l)] * a[(m, k)],
                        };
                    }
                    s += match order {
                        TripleOrder::LL | TripleOrder::RBThenL => t * c[(l, n)],
                        _ => c[(l, n)] * t,
                    };
                }
            }
            // outer sum over k of a_{mk} and the bracket (B ? C)_{kn}
            TripleOrder::LOfR | TripleOrder::ROfL => {
                for k in 0..kk {
                    let mut t = Quaternion::ZERO;
                    for l in 0..ll {
                        t += match order {
                            TripleOrder::LOfR => c[(l, n)] * b[(k, l)],
                            _ => b[(k, l)] * c[(l, n)],
                        };
                    }
                    s += match order {
                        TripleOrder::LOfR => a[(m, k)] * t,
                        _ => t * a[(m, k)],
                    };
                }
            }
        }
        s
    })
}

fn criterion_1() -> Check {
    let mut r = rng(1);
    for trial in 0..200 {
        let d = dims(&mut r, 6, 4);
        let (a, b, c) = (mat(&mut r, d[0], d[1]), mat(&mut r, d[1], d[2]), mat(&mut r, d[2], d[3]));
        for order in [ProductOrder::Left, ProductOrder::Right] {
            ensure(lib(a.mul(&b, order))? == oracle_prod(&a, &b, order), || {
                format!("trial {trial}: {order:?} product differs from oracle")
            })?;
        }
        for order in TripleOrder::ALL {
            ensure(lib(a.triple_product(&b, &c, order))? == oracle_triple(&a, &b, &c, order), || {
                format!("trial {trial}: triple {order:?} differs from oracle")
            })?;
        }
    }
    Ok("200 instances, 8 products each, bitwise equal".into())
}

// ---------------------------------------------------------------- criterion 2

fn criterion_2() -> Check {
    let mut r = rng(2);
    let tol = 1e-12;
    for _ in 0..100 {
        let d = dims(&mut r, 5, 4);
        let (a, b, c) = (mat(&mut r, d[0], d[1]), mat(&mut r, d[1], d[2]), mat(&mut r, d[2], d[3]));
        let (l, rr) = (lib(a.mul_left(&b))?, lib(a.mul_right(&b))?);
        within(dist(&l.transpose(), &lib(b.transpose().mul_right(&a.transpose()))?), tol, "(A·L B)ᵀ")?;
        within(dist(&rr.transpose(), &lib(b.transpose().mul_left(&a.transpose()))?), tol, "(A·R B)ᵀ")?;
        within(dist(&l.conj(), &lib(a.conj().mul_right(&b.conj()))?), tol, "(A·L B)*")?;
        within(dist(&rr.conj(), &lib(a.conj().mul_left(&b.conj()))?), tol, "(A·R B)*")?;
        within(dist(&l.herm(), &lib(b.herm().mul_left(&a.herm()))?), tol, "(A·L B)ᴴ")?;
        within(dist(&rr.herm(), &lib(b.herm().mul_right(&a.herm()))?), tol, "(A·R B)ᴴ")?;
        within(dist(&lib(l.mul_left(&c))?, &lib(a.mul_left(&lib(b.mul_left(&c))?))?), tol, "·L associativity")?;
        within(dist(&lib(rr.mul_right(&c))?, &lib(a.mul_right(&lib(b.mul_right(&c))?))?), tol, "·R associativity")?;

        // mixed associativity with A and C in a common ℂ_μ, B generic
        let mu = axis(&mut r);
        let (sa, sc) = (subfield_mat(&mut r, d[0], d[1], mu), subfield_mat(&mut r, d[2], d[3], mu));
        let lhs = lib(lib(sa.mul_left(&b))?.mul_right(&sc))?;
        within(dist(&lhs, &lib(sa.mul_left(&lib(b.mul_right(&sc))?))?), tol, "(A·L B)·R C")?;
        let lhs = lib(lib(sa.mul_right(&b))?.mul_left(&sc))?;
        within(dist(&lhs, &lib(sa.mul_right(&lib(b.mul_left(&sc))?))?), tol, "(A·R B)·L C")?;
    }
    let (a, b, c) = (mat(&mut r, 3, 3), mat(&mut r, 3, 3), mat(&mut r, 3, 3));
    let generic = dist(&lib(lib(a.mul_left(&b))?.mul_right(&c))?, &lib(a.mul_left(&lib(b.mul_right(&c))?))?);
    ensure(generic > 1e-3, || format!("generic mixed associativity unexpectedly holds ({generic:e})"))?;
    Ok(format!("100 trials at {tol:e}; generic counterexample residual {generic:.3}"))
}

// ---------------------------------------------------------------- criterion 3

fn well_conditioned(r: &mut Rng8, n: usize) -> QuatMatrix {
    &mat(r, n, n).scale(0.5 / n as f64) + &QuatMatrix::identity(n)
}

fn complex_inverse(c: &ComplexMatrix) -> Option<DMatrix<Complex<f64>>> {
    DMatrix::from_fn(c.rows(), c.cols(), |i, j| c[(i, j)]).try_inverse()
}

fn criterion_3() -> Check {
    let mut r = rng(3);
    let tol = 1e-10;
    let mut hom = 0f64;
    for _ in 0..100 {
        let n = r.gen_range(1..=8);
        let a = well_conditioned(&mut r, n);
        let (il, ir) = (lib(inv_left(&a))?, lib(inv_right(&a))?);
        let eye = QuatMatrix::identity(n);
        let p = r.gen_range(1..=4);
        let (x, xt) = (mat(&mut r, n, p), mat(&mut r, p, n));
        within(dist(&lib(lib(il.mul_left(&a))?.mul_left(&x))?, &x), tol, "(A^-L ·L A) ·L X")?;
        within(dist(&lib(il.mul_left(&lib(a.mul_left(&x))?))?, &x), tol, "A^-L ·L (A ·L X)")?;
        within(dist(&lib(lib(ir.mul_right(&a))?.mul_right(&x))?, &x), tol, "(A^-R ·R A) ·R X")?;
        within(dist(&lib(ir.mul_right(&lib(a.mul_right(&x))?))?, &x), tol, "A^-R ·R (A ·R X)")?;
        within(dist(&lib(lib(xt.mul_left(&a))?.mul_left(&il))?, &xt), tol, "(X ·L A) ·L A^-L")?;
        within(dist(&lib(lib(xt.mul_right(&a))?.mul_right(&ir))?, &xt), tol, "(X ·R A) ·R A^-R")?;
        within(dist(&lib(il.mul_left(&a))?, &eye), tol, "A^-L ·L A")?;
        within(dist(&lib(a.mul_left(&il))?, &eye), tol, "A ·L A^-L")?;
        within(dist(&lib(ir.mul_right(&a))?, &eye), tol, "A^-R ·R A")?;
        within(dist(&lib(a.mul_right(&ir))?, &eye), tol, "A ·R A^-R")?;
        within(dist(&il.transpose(), &lib(inv_right(&a.transpose()))?), tol, "(A^-L)ᵀ = (Aᵀ)^-R")?;
        within(dist(&ir.transpose(), &lib(inv_left(&a.transpose()))?), tol, "(A^-R)ᵀ = (Aᵀ)^-L")?;

        // subfield reduction against an independent complex inverse
        let mu = axis(&mut r);
        let s = &subfield_mat(&mut r, n, n, mu).scale(0.5 / n as f64) + &QuatMatrix::identity(n);
        let (sl, sr) = (lib(inv_left(&s))?, lib(inv_right(&s))?);
        within(dist(&sl, &sr), tol, "ℂ_μ inv_left = inv_right")?;
        let ci = complex_inverse(&lib(subfield_to_complex(&s, mu, 1e-12))?).ok_or("oracle inverse failed")?;
        let expect = QuatMatrix::from_fn(n, n, |i, j| Quaternion::from_subfield(ci[(i, j)], mu));
        within(dist(&sl, &expect), tol, "ℂ_μ inverse vs complex inverse")?;

        // homomorphism on conformant shapes with random axes
        let axes = Axes::from_mu(axis(&mut r));
        let d = dims(&mut r, 4, 3);
        let (b, c) = (mat(&mut r, d[0], d[1]), mat(&mut r, d[1], d[2]));
        for (side, order) in [(AdjointSide::LeftAdjoint, ProductOrder::Left), (AdjointSide::RightAdjoint, ProductOrder::Right)] {
            let lhs = adjoint(&lib(b.mul(&c, order))?, side, &axes);
            let rhs = lib(adjoint(&b, side, &axes).matmul(&adjoint(&c, side, &axes)))?;
            hom = hom.max(lhs.sub(&rhs).max_abs());
        }
    }
    within(hom, 1e-12, "adjoint homomorphism")?;
    Ok(format!("100 matrices, residuals ≤ {tol:e}; homomorphism max {hom:.1e}"))
}

// ---------------------------------------------------------------- criterion 4

fn deficient(r: &mut Rng8, m: usize, n: usize, k: usize, order: ProductOrder) -> QuatMatrix {
    mat(r, m, k).mul(&mat(r, k, n), order).unwrap()
}

fn mutual(a: &QuatMatrix, ka: SubspaceKind, b: &QuatMatrix, kb: SubspaceKind) -> Result<(), String> {
    let (ba, bb) = (basis(a, ka, DEFAULT_RANK_TOL), basis(b, kb, DEFAULT_RANK_TOL));
    ensure(ba.dim() == bb.dim(), || format!("{ka}(A) dim {} vs {kb}(Aᵀ) dim {}", ba.dim(), bb.dim()))?;
    for v in &ba.vectors {
        ensure(lib(contains(b, kb, v, 1e-9))?, || format!("{ka}(A) vector outside {kb}(Aᵀ)"))?;
    }
    for v in &bb.vectors {
        ensure(lib(contains(a, ka, v, 1e-9))?, || format!("{kb}(Aᵀ) vector outside {ka}(A)"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    use SubspaceKind::*;
    let mut r = rng(4);
    let mut cases = 0;
    for _ in 0..25 {
        let (m, n) = (r.gen_range(2..=6), r.gen_range(2..=6));
        let k = r.gen_range(1..=m.min(n));
        for order in [ProductOrder::Left, ProductOrder::Right] {
            let a = deficient(&mut r, m, n, k, order);
            let at = a.transpose();
            mutual(&a, LR, &at, RC)?;
            mutual(&a, RR, &at, LC)?;
            mutual(&a, LRN, &at, RCN)?;
            mutual(&a, RRN, &at, LCN)?;

            let dim = |kind| basis(&a, kind, DEFAULT_RANK_TOL).dim();
            let rank = match order {
                ProductOrder::Left => rank_left(&a),
                ProductOrder::Right => rank_right(&a),
            };
            ensure(rank == k, || format!("{order:?} rank {rank}, constructed {k}"))?;
            ensure(dim(LR) + dim(LRN) == n && dim(RR) + dim(RRN) == n, || "row rank-nullity".into())?;
            ensure(dim(LC) + dim(LCN) == m && dim(RC) + dim(RCN) == m, || "column rank-nullity".into())?;

            for kind in SubspaceKind::ALL {
                let b = basis(&a, kind, DEFAULT_RANK_TOL);
                if b.dim() == 0 {
                    continue;
                }
                let side = b.scalar_side.as_order();
                let (v, w) = (&b.vectors[0], &b.vectors[b.dim() - 1]);
                let combo = &v.scalar_mul(side, quat(&mut r)) + &w.scalar_mul(side, quat(&mut r));
                ensure(lib(contains(&a, kind, &combo, 1e-9))?, || format!("{kind} not closed"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} rank-deficient matrices"))
}

// ---------------------------------------------------------------- criterion 5

fn oracle_kron(a: &QuatMatrix, b: &QuatMatrix, side: ProductOrder) -> QuatMatrix {
    let mut out = QuatMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = match side {
                        ProductOrder::Left => a[(i, j)] * b[(k, l)],
                        ProductOrder::Right => b[(k, l)] * a[(i, j)],
                    };
                }
            }
        }
    }
    out
}

fn oracle_khatri_rao(c: &QuatMatrix, d: &QuatMatrix, side: ProductOrder) -> QuatMatrix {
    let cols: Vec<QuatMatrix> = (0..c.cols()).map(|n| oracle_kron(&c.col(n), &d.col(n), side)).collect();
    QuatMatrix::from_fn(c.rows() * d.rows(), c.cols(), |r, n| cols[n][(r, 0)])
}

/// `vec(M)` and the right-hand side, both built without the library's identity helpers.
fn vec_sides(a: &QuatMatrix, b: &QuatMatrix, c: &QuatMatrix, form: VecForm, kr: Option<&QuatMatrix>) -> (QuatMatrix, QuatMatrix) {
    use ProductOrder::{Left, Right};
    let lhs = match form {
        VecForm::L_R => a.mul_left(&b.mul_right(c).unwrap()),
        VecForm::R_L => a.mul_right(&b.mul_left(c).unwrap()),
        VecForm::LB_R => a.mul_left(b).unwrap().mul_right(c),
        VecForm::RB_L => a.mul_right(b).unwrap().mul_left(c),
    }
    .unwrap();
    let (kside, order) = match form {
        VecForm::L_R => (Right, Left),
        VecForm::R_L => (Left, Right),
        VecForm::LB_R => (Left, Left),
        VecForm::RB_L => (Right, Right),
    };
    let rhs = match kr {
        None => oracle_kron(&c.transpose(), a, kside).mul(&b.vec(), order),
        Some(bv) => oracle_khatri_rao(&c.transpose(), a, kside).mul(bv, order),
    }
    .unwrap();
    (lhs.vec(), rhs)
}

fn criterion_5() -> Check {
    let tol = 1e-12;
    let mut worst = 0f64;
    let mut failures_of_control = 0;
    for seed in 0..100 {
        let mut r = rng(5000 + seed);
        let d = dims(&mut r, 4, 4);
        let (a, b, c) = (mat(&mut r, d[0], d[1]), mat(&mut r, d[1], d[2]), mat(&mut r, d[2], d[3]));
        let bv = mat(&mut r, d[1], 1);
        let c2 = mat(&mut r, d[1], d[3]);
        let diag = lib(QuatMatrix::diag(&bv))?;
        for form in VecForm::ALL {
            let (lhs, rhs) = vec_sides(&a, &b, &c, form, None);
            let (l2, r2) = lib(vec_identity_kron(&a, &b, &c, form))?;
            worst = worst.max(dist(&lhs, &rhs)).max(dist(&l2, &r2)).max(dist(&lhs, &l2));
            let (lhs, rhs) = vec_sides(&a, &diag, &c2, form, Some(&bv));
            let (l2, r2) = lib(vec_identity_kr(&a, &bv, &c2, form))?;
            worst = worst.max(dist(&lhs, &rhs)).max(dist(&l2, &r2)).max(dist(&lhs, &l2));
        }
        within(worst, tol, &format!("seed {seed} vec identity"))?;

        let e = mat(&mut r, 2, d[3]);
        for side in [ProductOrder::Left, ProductOrder::Right] {
            ensure(kron(&a, &b, side) == oracle_kron(&a, &b, side), || "kron differs from oracle".into())?;
            ensure(kron(&a, &b, side).transpose() == kron(&a.transpose(), &b.transpose(), side), || {
                format!("{side:?} Kronecker transpose rule")
            })?;
            ensure(lib(khatri_rao(&c2, &e, side))? == oracle_khatri_rao(&c2, &e, side), || {
                "khatri-rao differs from oracle".into()
            })?;
        }

        // vec(A ·L B ·L C) has no Kronecker form
        let (e3, e4) = (mat(&mut r, 3, 3), mat(&mut r, 3, 3));
        let e2 = mat(&mut r, 3, 3);
        let lhs = e2.mul_left(&e3).unwrap().mul_left(&e4).unwrap().vec();
        let rhs = oracle_kron(&e4.transpose(), &e2, ProductOrder::Left).mul_left(&e3.vec()).unwrap();
        if dist(&lhs, &rhs) > 1e-3 {
            failures_of_control += 1;
        }
    }
    ensure(failures_of_control >= 95, || format!("negative control separated only {failures_of_control}/100"))?;
    Ok(format!("8 identities x 100 seeds, max residual {worst:.1e}; negative control {failures_of_control}/100"))
}

// ---------------------------------------------------------------- criterion 6

fn cmat(r: &mut Rng8, m: usize, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(m, n, |_, _| cplx(r))
}

/// Solves `A X + B conj(X) = C` as the real system in `[Re X; Im X]`.
fn realified_solve(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix) -> Option<ComplexMatrix> {
    let m = a.rows();
    let big = DMatrix::<f64>::from_fn(2 * m, 2 * m, |i, j| {
        let (x, y) = (a[(i % m, j % m)], b[(i % m, j % m)]);
        match (i < m, j < m) {
            (true, true) => x.re + y.re,
            (true, false) => y.im - x.im,
            (false, true) => x.im + y.im,
            (false, false) => x.re - y.re,
        }
    });
    let rhs = DMatrix::<f64>::from_fn(2 * m, c.cols(), |i, n| if i < m { c[(i, n)].re } else { c[(i - m, n)].im });
    let sol = big.lu().solve(&rhs)?;
    Some(ComplexMatrix::from_fn(m, c.cols(), |i, n| Complex::new(sol[(i, n)], sol[(m + i, n)])))
}

fn criterion_6() -> Check {
    let mut r = rng(6);
    let (mut res, mut agree, mut gram) = (0f64, 0f64, 0f64);
    for _ in 0..100 {
        let mu = axis(&mut r);
        let (a, b, c) = (cmat(&mut r, 3, 3), cmat(&mut r, 3, 3), cmat(&mut r, 3, 2));
        let sys = lib(WidelyLinearSystem::from_complex(&a, &b, &c, Axes::from_mu(mu)))?;
        let x = lib(sys.solve())?;
        let resid = &(&lib(sys.a().mul_left(&x))? + &lib(sys.b().mul_left(&x.conj()))?) - sys.c();
        res = res.max(resid.frobenius_norm());
        let expect = realified_solve(&a, &b, &c).ok_or("realified system singular")?;
        agree = agree.max(dist(&x, &lib(complex_to_subfield(&expect, mu))?));
        let g = sys.lifted().g;
        gram = gram.max(dist(&lib(g.herm().mul_left(&g))?, &QuatMatrix::identity(3).scale(2.0)));
    }
    within(res, 1e-10, "substitution residual")?;
    within(agree, 1e-9, "realified agreement")?;
    within(gram, 1e-13, "Gᴴ·G = 2I")?;
    Ok(format!("100 systems; residual {res:.1e}, agreement {agree:.1e}, Gram {gram:.1e}"))
}

// ---------------------------------------------------------------- criterion 7

fn classical_folded_spectrum(c: &ComplexMatrix) -> Vec<Complex<f64>> {
    let n = c.rows();
    // [[Re, -Im], [Im, Re]] has spectrum eig(c) ∪ conj(eig(c))
    let real = DMatrix::<f64>::from_fn(2 * n, 2 * n, |i, j| {
        let z = c[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    real.complex_eigenvalues().iter().map(|z| Complex::new(z.re, z.im.abs())).collect()
}

fn criterion_7() -> Check {
    let mut r = rng(7);
    let mut convergent = 0;
    for _ in 0..100 {
        let a = mat(&mut r, 5, 5);
        let dec = match right_eig(&a) {
            Ok(d) => d,
            Err(Error::NoConvergence(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        convergent += 1;
        let norm = a.frobenius_norm();
        within(dist(&lib(reconstruct_right(&dec))?, &a), 1e-7 * norm, "reconstruction")?;
        ensure(dec.lambda.len() == 5, || format!("{} standard eigenvalues", dec.lambda.len()))?;
        for (m, l) in dec.lambda.iter().enumerate() {
            ensure(l.y == 0.0 && l.z == 0.0 && l.x >= 0.0, || format!("eigenvalue {l} is not standard"))?;
            let q = dec.eigenvector(m);
            ensure(lib(verify_right_pair(&a, &q, *l, 1e-8))?, || format!("pair {m} fails"))?;
            for _ in 0..20 {
                let s = unit_quat(&mut r);
                let ok = lib(verify_right_pair(&a, &q.scalar_mul(ProductOrder::Right, s), s.conj() * *l * s, 1e-8))?;
                ensure(ok, || format!("orbit of pair {m} fails"))?;
            }
        }
    }
    ensure(convergent >= 95, || format!("only {convergent}/100 decompositions converged"))?;

    let mut sub_cases = 0;
    for _ in 0..100 {
        let c = cmat(&mut r, 5, 5);
        let a = lib(complex_to_subfield(&c, PureUnitQuaternion::I))?;
        let dec = match right_eig(&a) {
            Ok(d) => d,
            Err(Error::NoConvergence(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        sub_cases += 1;
        let mut folded = classical_folded_spectrum(&c);
        for l in &dec.lambda {
            let target = Complex::new(l.w, l.x);
            for _ in 0..2 {
                let (idx, d) = folded
                    .iter()
                    .enumerate()
                    .map(|(i, z)| (i, (z - target).norm()))
                    .min_by(|x, y| x.1.total_cmp(&y.1))
                    .ok_or("oracle spectrum exhausted")?;
                within(d, 1e-8, "ℂ_i spectrum vs classical spectrum")?;
                folded.swap_remove(idx);
            }
        }
    }
    ensure(sub_cases >= 95, || format!("only {sub_cases}/100 ℂ_i decompositions converged"))?;
    Ok(format!("{convergent}/100 general and {sub_cases}/100 ℂ_i matrices"))
}

// ---------------------------------------------------------------- criterion 8

/// `exp(-μ θ) = cos θ - μ sin θ` with `θ = 2π k / size`, scaled by `1/√size`.
fn kernel(mu: PureUnitQuaternion, k: usize, size: usize) -> Quaternion {
    let theta = 2.0 * std::f64::consts::PI * k as f64 / size as f64;
    let m = mu.as_quaternion();
    let s = 1.0 / (size as f64).sqrt();
    Quaternion::new(theta.cos() * s, -m.x * theta.sin() * s, -m.y * theta.sin() * s, -m.z * theta.sin() * s)
}

fn component_qdft(a: &QuatMatrix, kind: QdftKind, mu1: PureUnitQuaternion, mu2: PureUnitQuaternion) -> QuatMatrix {
    let (rows, cols) = a.shape();
    QuatMatrix::from_fn(rows, cols, |u, v| {
        let mut acc = Quaternion::ZERO;
        for m in 0..rows {
            for n in 0..cols {
                let (e1, e2) = (kernel(mu1, u * m, rows), kernel(mu2, v * n, cols));
                acc += match kind {
                    QdftKind::TwoSide => e1 * a[(m, n)] * e2,
                    QdftKind::LeftSide => e1 * e2 * a[(m, n)],
                    QdftKind::RightSide => a[(m, n)] * e1 * e2,
                };
            }
        }
        acc
    })
}

fn criterion_8() -> Check {
    let mut r = rng(8);
    let (mut fwd, mut back, mut bracket) = (0f64, 0f64, 0f64);
    let (i, j) = (PureUnitQuaternion::I, PureUnitQuaternion::J);
    for (rows, cols) in [(3, 4), (8, 8)] {
        let a = mat(&mut r, rows, cols);
        let (m1, m2) = (axis(&mut r), axis(&mut r));
        for (mu1, mu2) in [(i, i), (i, j), (m1, m2)] {
            for kind in QdftKind::ALL {
                let y = lib(dqft(&a, kind, mu1, mu2))?;
                fwd = fwd.max(dist(&y, &component_qdft(&a, kind, mu1, mu2)));
                back = back.max(dist(&lib(idqft(&y, kind, mu1, mu2))?, &a));
            }
        }
        // with equal axes the bracketing of the one-sided transforms is free
        let mu = axis(&mut r);
        let (f1, f2) = (lib(fourier_matrix(rows, mu))?.f, lib(fourier_matrix(cols, mu))?.f);
        let alt_left = lib(lib(f1.mul_left(&a))?.mul_right(&f2))?;
        let alt_right = lib(f1.mul_right(&lib(a.mul_left(&f2))?))?;
        bracket = bracket.max(dist(&alt_left, &lib(dqft(&a, QdftKind::LeftSide, mu, mu))?));
        bracket = bracket.max(dist(&alt_right, &lib(dqft(&a, QdftKind::RightSide, mu, mu))?));
    }
    within(fwd, 1e-11, "matrix vs component form")?;
    within(back, 1e-10, "round trip")?;
    within(bracket, 1e-11, "equal-axes bracketing")?;
    let a = mat(&mut r, 3, 4);
    let (f1, f2) = (lib(fourier_matrix(3, i))?.f, lib(fourier_matrix(4, j))?.f);
    let alt = lib(lib(f1.mul_left(&a))?.mul_right(&f2))?;
    let gap = dist(&alt, &lib(dqft(&a, QdftKind::LeftSide, i, j))?);
    ensure(gap > 1e-3, || format!("orthogonal-axes bracketing gap only {gap:e}"))?;
    Ok(format!("forward {fwd:.1e}, round trip {back:.1e}, bracketing {bracket:.1e}, counterexample {gap:.3}"))
}

// ---------------------------------------------------------------- criterion 9

fn qla(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qla")).args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("qla {args:?}: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn criterion_9() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let mut r = rng(9);
    let put = |name: &str, m: &QuatMatrix| -> Result<String, String> {
        let p = path(name);
        std::fs::write(&p, write_qmat(m)).map_err(|e| e.to_string())?;
        Ok(p)
    };
    let a = put("a.qm", &well_conditioned(&mut r, 4))?;
    let b = put("b.qm", &mat(&mut r, 4, 4))?;
    let c = put("c.qm", &mat(&mut r, 4, 4))?;
    let runs: Vec<Vec<&str>> = vec![
        vec!["mul", "--order", "right", &a, &b],
        vec!["triple", "--order", "r-of-l", &a, &b, &c],
        vec!["inv", "--side", "left", &a],
        vec!["adjoint", "--side", "right", &a],
        vec!["subspace", "--kind", "RR", &b],
        vec!["kron", "--side", "left", &a, &b],
        vec!["vec-check", "--identity", "kron-LB_R", &a, &b, &c],
        vec!["eig", &b],
        vec!["qdft", "--kind", "2", "--mu1", "j", "--mu2", "k", &b],
    ];
    for args in &runs {
        let (first, second) = (qla(args)?, qla(args)?);
        ensure(first == second, || format!("qla {args:?} output differs between runs"))?;
    }

    for n in 0..50 {
        let (rows, cols) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let scale = 10f64.powi(r.gen_range(-300..300));
        let m = mat(&mut r, rows, cols).scale(scale);
        let p = put(&format!("m{n}.qm"), &m)?;
        let text = String::from_utf8(qla(&["convert", &p])?).map_err(|e| e.to_string())?;
        let back = lib(read_qmat(&text))?;
        ensure(back.shape() == m.shape(), || "round-trip shape".into())?;
        for (x, y) in m.data().iter().zip(back.data()) {
            for (u, v) in [(x.w, y.w), (x.x, y.x), (x.y, y.y), (x.z, y.z)] {
                ensure(sig17(u) == sig17(v), || format!("{u:e} read back as {v:e}"))?;
            }
        }
    }
    Ok(format!("{} commands rerun byte-identically; 50 matrices round-tripped", runs.len()))
}

#[test]
fn acceptance() {
    type Criterion = (usize, &'static str, fn() -> Check, Duration);
    let secs = Duration::from_secs;
    let criteria: [Criterion; 9] = [
        (1, "ordered-product oracle equivalence", criterion_1, secs(5)),
        (2, "identity suite", criterion_2, secs(5)),
        (3, "inverse suite", criterion_3, secs(10)),
        (4, "subspace suite", criterion_4, secs(10)),
        (5, "tensor suite", criterion_5, secs(10)),
        (6, "widely-linear solver", criterion_6, secs(5)),
        (7, "right eigendecomposition", criterion_7, secs(30)),
        (8, "discrete quaternion Fourier transforms", criterion_8, secs(10)),
        (9, "CLI determinism and QMAT round trip", criterion_9, secs(5)),
    ];
    let mut failed = Vec::new();
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > budget => Err(format!("{detail}; took {took:.2?} > {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {id}  {name}  [{took:.2?}]  {detail}"),
            Err(why) => {
                println!("FAIL  {id}  {name}  [{took:.2?}]  {why}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
