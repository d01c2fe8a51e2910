//! Quaternion scalars.
//!
//! A quaternion is stored as four reals `w + x i + y j + z k`. The pair view
//! `z1 + z2 j` with `z1 = w + x i`, `z2 = y + z i` is available through
//! [`ComplexPair`].

use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default tolerance of the scalar predicates.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    #[inline]
    pub const fn real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    /// `re + im * mu`, the image of a complex number in the subfield of `mu`.
    pub fn from_subfield(c: Complex64, mu: PureUnitQuaternion) -> Self {
        Quaternion::real(c.re) + mu.as_quaternion() * c.im
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn conj(&self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn scalar_part(&self) -> f64 {
        self.w
    }

    #[inline]
    pub fn vector_part(&self) -> Self {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Modulus `|q|`.
    #[inline]
    pub fn modulus(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean norm of the vector part.
    #[inline]
    pub fn vector_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.w.abs().max(self.x.abs()).max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj() / n)
    }

    /// Dot product of the vector parts.
    #[inline]
    pub fn vector_dot(&self, other: &Quaternion) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Pure unit quaternion along the vector part.
    ///
    /// Normalizes by the length of the vector part so the result always
    /// squares to -1.
    pub fn puq(&self) -> Result<PureUnitQuaternion> {
        PureUnitQuaternion::new(self.x, self.y, self.z)
    }

    /// True if `self = a + b mu` for reals `a`, `b`.
    pub fn in_complex_subfield(&self, mu: PureUnitQuaternion, tol: f64) -> bool {
        let v = self.vector_part();
        let along = v.vector_dot(&mu.as_quaternion());
        let off = v - mu.as_quaternion() * along;
        off.modulus() <= tol * self.modulus().max(1.0)
    }

    /// Coordinates `(a, b)` of the projection onto `a + b mu`.
    pub fn subfield_coords(&self, mu: PureUnitQuaternion) -> Complex64 {
        Complex64::new(self.w, self.vector_dot(&mu.as_quaternion()))
    }

    /// Splits `self` into `q0 + q1 mu_perp` with `q0`, `q1` in the subfield of `mu`.
    pub fn symplectic_decompose(
        &self,
        mu: PureUnitQuaternion,
        mu_perp: PureUnitQuaternion,
    ) -> Result<SymplecticParts> {
        if !are_orthogonal(mu, mu_perp, DEFAULT_TOL) {
            return Err(Error::InvalidAxes);
        }
        let (c0, c1) = symplectic_coords(self, mu, mu_perp);
        Ok(SymplecticParts {
            q0p: Quaternion::from_subfield(c0, mu),
            q1p: Quaternion::from_subfield(c1, mu),
            mu,
            mu_perp,
        })
    }

    /// Polar form `|q| (cos a + mu sin a)`.
    ///
    /// Among `(mu, a)` and `(-mu, -a)` the axis whose first nonzero component is
    /// positive is returned. Real inputs get the axis `i`.
    pub fn to_polar(&self) -> Result<PolarForm> {
        let modulus = self.modulus();
        if modulus == 0.0 {
            return Err(Error::DegenerateInput("polar form of zero".into()));
        }
        let vn = self.vector_norm();
        if vn == 0.0 {
            let angle = if self.w > 0.0 { 0.0 } else { PI };
            return Ok(PolarForm {
                modulus,
                axis: PureUnitQuaternion::I,
                angle,
            });
        }
        let mut axis = PureUnitQuaternion::new(self.x, self.y, self.z)?;
        let mut angle = vn.atan2(self.w);
        if axis.leading_component() < 0.0 {
            axis = -axis;
            angle = -angle;
        }
        Ok(PolarForm {
            modulus,
            axis,
            angle,
        })
    }

    /// Quaternion exponential `e^w (cos|v| + v/|v| sin|v|)`.
    pub fn exp(&self) -> Self {
        let ew = self.w.exp();
        let vn = self.vector_norm();
        if vn == 0.0 {
            return Quaternion::real(ew);
        }
        let s = ew * vn.sin() / vn;
        Quaternion::new(ew * vn.cos(), s * self.x, s * self.y, s * self.z)
    }

    /// Element of the similarity class in the subfield of `i` with nonnegative
    /// `i` coefficient: `w + |v| i`.
    pub fn canonical_representative(&self) -> Self {
        Quaternion::new(self.w, self.vector_norm(), 0.0, 0.0)
    }

    /// True if `p = s^-1 q s` for some unit `s`.
    pub fn similar(&self, other: &Quaternion, tol: f64) -> bool {
        let a = self.canonical_representative();
        let b = other.canonical_representative();
        let scale = self.modulus().max(other.modulus()).max(1.0);
        (a - b).modulus() <= tol * scale
    }

    pub fn to_pair(&self) -> ComplexPair {
        ComplexPair {
            z1: Complex64::new(self.w, self.x),
            z2: Complex64::new(self.y, self.z),
        }
    }
}

/// `(c0, c1)` with `q = c0 + c1 mu_perp` read as complex numbers in the subfield of `mu`.
pub(crate) fn symplectic_coords(
    q: &Quaternion,
    mu: PureUnitQuaternion,
    mu_perp: PureUnitQuaternion,
) -> (Complex64, Complex64) {
    let m = mu.as_quaternion();
    let p = mu_perp.as_quaternion();
    let nu = m * p;
    (
        Complex64::new(q.w, q.vector_dot(&m)),
        Complex64::new(q.vector_dot(&p), q.vector_dot(&nu)),
    )
}

/// Inverse of [`symplectic_coords`].
pub(crate) fn from_symplectic_coords(
    c0: Complex64,
    c1: Complex64,
    mu: PureUnitQuaternion,
    mu_perp: PureUnitQuaternion,
) -> Quaternion {
    Quaternion::from_subfield(c0, mu) + Quaternion::from_subfield(c1, mu) * mu_perp.as_quaternion()
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        // pairwise grouping makes conj(a b) == conj(b) conj(a) bit for bit
        Quaternion::new(
            (a.w * b.w - a.x * b.x) - (a.y * b.y + a.z * b.z),
            (a.w * b.x + a.x * b.w) + (a.y * b.z - a.z * b.y),
            (a.w * b.y + a.y * b.w) + (a.z * b.x - a.x * b.z),
            (a.w * b.z + a.z * b.w) + (a.x * b.y - a.y * b.x),
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Quaternion::real(w)
    }
}

/// A quaternion written as `z1 + z2 j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair {
    pub z1: Complex64,
    pub z2: Complex64,
}

impl ComplexPair {
    pub fn new(z1: Complex64, z2: Complex64) -> Self {
        ComplexPair { z1, z2 }
    }

    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(self.z1.re, self.z1.im, self.z2.re, self.z2.im)
    }

    /// `(x1, x2)(z1, z2) = (x1 z1 - x2 conj(z2), x2 conj(z1) + z2 x1)`
    pub fn mul(&self, other: &ComplexPair) -> ComplexPair {
        let (x1, x2) = (self.z1, self.z2);
        let (z1, z2) = (other.z1, other.z2);
        ComplexPair {
            z1: x1 * z1 - x2 * z2.conj(),
            z2: x2 * z1.conj() + z2 * x1,
        }
    }

    pub fn conj(&self) -> ComplexPair {
        ComplexPair {
            z1: self.z1.conj(),
            z2: -self.z2,
        }
    }
}

impl From<Quaternion> for ComplexPair {
    fn from(q: Quaternion) -> Self {
        q.to_pair()
    }
}

/// A quaternion with zero scalar part and unit modulus. Squares to -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureUnitQuaternion {
    axis: Quaternion,
}

impl PureUnitQuaternion {
    pub const I: PureUnitQuaternion = PureUnitQuaternion {
        axis: Quaternion::I,
    };
    pub const J: PureUnitQuaternion = PureUnitQuaternion {
        axis: Quaternion::J,
    };
    pub const K: PureUnitQuaternion = PureUnitQuaternion {
        axis: Quaternion::K,
    };

    /// Normalizes `(x, y, z)` onto the unit sphere.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::DegenerateInput(
                "vector part vanishes, no unique axis".into(),
            ));
        }
        Ok(PureUnitQuaternion {
            axis: Quaternion::new(0.0, x / n, y / n, z / n),
        })
    }

    /// Accepts `q` only if it is pure and of unit modulus within `tol`.
    pub fn from_quaternion(q: Quaternion, tol: f64) -> Result<Self> {
        if q.w.abs() > tol {
            return Err(Error::DegenerateInput(format!(
                "axis has nonzero scalar part {}",
                q.w
            )));
        }
        if (q.vector_norm() - 1.0).abs() > tol {
            return Err(Error::DegenerateInput(format!(
                "axis has modulus {}, expected 1",
                q.vector_norm()
            )));
        }
        PureUnitQuaternion::new(q.x, q.y, q.z)
    }

    #[inline]
    pub fn as_quaternion(&self) -> Quaternion {
        self.axis
    }

    /// Deterministic axis orthogonal to `self`: `j` with its `self` component
    /// removed, or `k` when `self` is within 1e-6 of `±j`.
    pub fn orthogonal_complement(&self) -> PureUnitQuaternion {
        let near_j = (self.axis - Quaternion::J).modulus() < 1e-6
            || (self.axis + Quaternion::J).modulus() < 1e-6;
        let seed = if near_j { Quaternion::K } else { Quaternion::J };
        let v = seed - self.axis * seed.vector_dot(&self.axis);
        PureUnitQuaternion::new(v.x, v.y, v.z).expect("seed is not parallel to the axis")
    }

    fn leading_component(&self) -> f64 {
        [self.axis.x, self.axis.y, self.axis.z]
            .into_iter()
            .find(|c| *c != 0.0)
            .unwrap_or(0.0)
    }
}

impl Neg for PureUnitQuaternion {
    type Output = PureUnitQuaternion;
    fn neg(self) -> PureUnitQuaternion {
        PureUnitQuaternion { axis: -self.axis }
    }
}

impl From<PureUnitQuaternion> for Quaternion {
    fn from(p: PureUnitQuaternion) -> Quaternion {
        p.axis
    }
}

/// True iff the vector parts have vanishing dot product.
pub fn are_orthogonal(mu: PureUnitQuaternion, nu: PureUnitQuaternion, tol: f64) -> bool {
    mu.axis.vector_dot(&nu.axis).abs() < tol
}

/// `q = q0p + q1p mu_perp` with both parts in the subfield of `mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticParts {
    pub q0p: Quaternion,
    pub q1p: Quaternion,
    pub mu: PureUnitQuaternion,
    pub mu_perp: PureUnitQuaternion,
}

impl SymplecticParts {
    pub fn recompose(&self) -> Quaternion {
        self.q0p + self.q1p * self.mu_perp.as_quaternion()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    pub modulus: f64,
    pub axis: PureUnitQuaternion,
    /// In `(-pi, pi]`.
    pub angle: f64,
}

impl PolarForm {
    pub fn to_quaternion(&self) -> Quaternion {
        (Quaternion::real(self.angle.cos()) + self.axis.as_quaternion() * self.angle.sin())
            * self.modulus
    }
}
