//! Hamilton's quaternions ℍ: multiplication, conjugation, polar form, the
//! conjugation action `h ↦ q h q⁻¹` and its rotation matrix.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::mat3::{self, Vec3};
use crate::rotation::Rotation3;

/// Threshold on `u1² + u2²` (as a length) below which the adapted frame is undefined.
pub const AXIS_EPS: f64 = 1e-12;

/// `w + x·i₁ + y·i₂ + z·i₃`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub type Mat4 = [[f64; 4]; 4];

impl Quaternion {
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I1: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const I2: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const I3: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn pure(v: Vec3) -> Self {
        Quaternion::new(0.0, v[0], v[1], v[2])
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_coords(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    pub fn re(&self) -> f64 {
        self.w
    }

    /// Coordinates of the vector part.
    pub fn vec_part(&self) -> Vec3 {
        [self.x, self.y, self.z]
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// The ℝ⁴ inner product, equal to `Re(h q*)`.
    pub fn inner(&self, q: &Quaternion) -> f64 {
        self.w * q.w + self.x * q.x + self.y * q.y + self.z * q.z
    }

    pub fn norm_sqr(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }

    /// Largest coordinate difference; sign sensitive.
    pub fn max_abs_diff(&self, other: &Quaternion) -> f64 {
        self.coords()
            .iter()
            .zip(other.coords())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Polar form `‖q‖ (cos θ + u sin θ)` with `θ ∈ [0, π]`.
    ///
    /// When the vector part vanishes the axis is arbitrary; `i₃` is returned
    /// and `degenerate` is set.
    pub fn to_polar(&self) -> Result<PolarForm> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        let v = self.vec_part();
        let vn = mat3::norm(v);
        let theta = vn.atan2(self.w);
        if vn == 0.0 {
            return Ok(PolarForm {
                norm,
                theta,
                axis: UnitPureQuaternion::I3,
                degenerate: true,
            });
        }
        let axis = UnitPureQuaternion([v[0] / vn, v[1] / vn, v[2] / vn]);
        Ok(PolarForm {
            norm,
            theta,
            axis,
            degenerate: false,
        })
    }

    /// `Γ_q(h) = q h q⁻¹`.
    pub fn conjugate_by(&self, h: &Quaternion) -> Result<Quaternion> {
        Ok(*self * *h * self.inverse()?)
    }

    /// Matrix of `h ↦ p h` in the basis `{1, i₁, i₂, i₃}`.
    pub fn left_matrix(&self) -> Mat4 {
        let [p0, p1, p2, p3] = self.coords();
        [
            [p0, -p1, -p2, -p3],
            [p1, p0, -p3, p2],
            [p2, p3, p0, -p1],
            [p3, -p2, p1, p0],
        ]
    }

    /// Matrix of `h ↦ h q` in the basis `{1, i₁, i₂, i₃}`.
    pub fn right_matrix(&self) -> Mat4 {
        let [q0, q1, q2, q3] = self.coords();
        [
            [q0, -q1, -q2, -q3],
            [q1, q0, q3, -q2],
            [q2, -q3, q0, q1],
            [q3, q2, -q1, q0],
        ]
    }

    /// Matrix of the restriction of `Γ_q` to pure vectors.
    ///
    /// `q` is renormalized first; it must be nonzero.
    pub fn rotation_matrix(&self) -> Result<Rotation3> {
        let q = self.normalized()?;
        let (q0, q1, q2, q3) = (q.w, q.x, q.y, q.z);
        Ok(Rotation3::from_matrix([
            [
                q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3,
                2.0 * (q1 * q2 - q0 * q3),
                2.0 * (q0 * q2 + q1 * q3),
            ],
            [
                2.0 * (q0 * q3 + q1 * q2),
                q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3,
                2.0 * (q2 * q3 - q0 * q1),
            ],
            [
                2.0 * (q1 * q3 - q0 * q2),
                2.0 * (q0 * q1 + q2 * q3),
                q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3,
            ],
        ]))
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, q: Quaternion) -> Quaternion {
        let p = self;
        Quaternion::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    fn add(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    fn sub(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

/// A pure quaternion of unit norm; the members square to −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPureQuaternion(Vec3);

impl UnitPureQuaternion {
    pub const I1: UnitPureQuaternion = UnitPureQuaternion([1.0, 0.0, 0.0]);
    pub const I2: UnitPureQuaternion = UnitPureQuaternion([0.0, 1.0, 0.0]);
    pub const I3: UnitPureQuaternion = UnitPureQuaternion([0.0, 0.0, 1.0]);

    /// Normalizes `v`; fails on the zero vector.
    pub fn new(v: Vec3) -> Result<Self> {
        let n = mat3::norm(v);
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroQuaternion);
        }
        Ok(UnitPureQuaternion([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn vector(&self) -> Vec3 {
        self.0
    }

    pub fn quaternion(&self) -> Quaternion {
        Quaternion::pure(self.0)
    }

    pub fn neg(&self) -> Self {
        UnitPureQuaternion(self.0.map(|c| -c))
    }

    /// `e^{uθ} = cos θ + u sin θ`.
    pub fn exp(&self, theta: f64) -> Quaternion {
        let s = theta.sin();
        Quaternion::new(theta.cos(), self.0[0] * s, self.0[1] * s, self.0[2] * s)
    }

    /// Completes `u` to the frame `(u, v, w)` with `w ∥ u × e₃` and `v = w × u`,
    /// so that `uv = w` and `uvw = −1`.
    pub fn adapted_frame(&self) -> Result<(Self, Self, Self)> {
        let [u1, u2, u3] = self.0;
        let rho = u1.hypot(u2);
        if rho <= AXIS_EPS {
            return Err(Error::PolarAxisDegenerate);
        }
        let w = [u2 / rho, -u1 / rho, 0.0];
        let v = [-u1 * u3 / rho, -u2 * u3 / rho, rho];
        Ok((*self, UnitPureQuaternion(v), UnitPureQuaternion(w)))
    }
}

/// Membership test for unit pure quaternions via `u² = −1`.
pub fn squares_to_minus_one(q: &Quaternion, tol: f64) -> bool {
    (*q * *q).max_abs_diff(&Quaternion::new(-1.0, 0.0, 0.0, 0.0)) <= tol
}

/// `e^{uθ}`.
pub fn qexp(u: &UnitPureQuaternion, theta: f64) -> Quaternion {
    u.exp(theta)
}

/// `q = norm · (cos θ + axis · sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    pub norm: f64,
    pub theta: f64,
    pub axis: UnitPureQuaternion,
    /// Set when the vector part vanished and `axis` is the conventional `i₃`.
    pub degenerate: bool,
}

impl PolarForm {
    pub fn to_quaternion(&self) -> Quaternion {
        self.axis.exp(self.theta).scale(self.norm)
    }
}
