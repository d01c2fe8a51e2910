#![allow(dead_code)]

use num_complex::Complex64;
use quatlinalg::{PureUnitQuaternion, QuatMatrix, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn quat(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

pub fn unit_quat(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = quat(rng);
        let m = q.modulus();
        if m > 1e-3 {
            return q * (1.0 / m);
        }
    }
}

pub fn axis(rng: &mut ChaCha8Rng) -> PureUnitQuaternion {
    loop {
        let q = quat(rng);
        if let Ok(mu) = PureUnitQuaternion::new(q.x, q.y, q.z) {
            return mu;
        }
    }
}

pub fn mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> QuatMatrix {
    QuatMatrix::from_fn(rows, cols, |_, _| quat(rng))
}

pub fn subfield_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize, mu: PureUnitQuaternion) -> QuatMatrix {
    QuatMatrix::from_fn(rows, cols, |_, _| {
        Quaternion::from_subfield(Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), mu)
    })
}

/// Diagonally dominated, hence well conditioned.
pub fn well_conditioned(rng: &mut ChaCha8Rng, n: usize) -> QuatMatrix {
    let a = mat(rng, n, n).scale(0.5 / n as f64);
    &a + &QuatMatrix::identity(n)
}

pub fn dist(a: &QuatMatrix, b: &QuatMatrix) -> f64 {
    (a - b).frobenius_norm()
}
