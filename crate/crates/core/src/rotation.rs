use crate::mat3::{self, Mat3, Vec3};

/// A 3×3 real matrix acting on sphere coordinates.
///
/// Values produced by this crate are proper rotations up to rounding;
/// [`Rotation3::is_proper`] checks that explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3(Mat3);

impl Rotation3 {
    pub const IDENTITY: Rotation3 = Rotation3(mat3::IDENTITY);

    /// Wraps a matrix without checking orthogonality.
    pub fn from_matrix(m: Mat3) -> Self {
        Rotation3(m)
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        mat3::mul_vec(&self.0, v)
    }

    /// `self · rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &Rotation3) -> Rotation3 {
        Rotation3(mat3::mul(&self.0, &rhs.0))
    }

    pub fn transpose(&self) -> Rotation3 {
        Rotation3(mat3::transpose(&self.0))
    }

    pub fn det(&self) -> f64 {
        mat3::det(&self.0)
    }

    pub fn trace(&self) -> f64 {
        mat3::trace(&self.0)
    }

    /// `max |RᵀR − I|`.
    pub fn orthogonality_error(&self) -> f64 {
        mat3::max_abs_diff(
            &mat3::mul(&mat3::transpose(&self.0), &self.0),
            &mat3::IDENTITY,
        )
    }

    pub fn is_proper(&self, tol: f64) -> bool {
        self.orthogonality_error() <= tol && (self.det() - 1.0).abs() <= tol
    }

    pub fn max_abs_diff(&self, other: &Rotation3) -> f64 {
        mat3::max_abs_diff(&self.0, &other.0)
    }

    /// Right-handed rotation by `angle` radians about the unit vector `axis`.
    pub fn about_axis(axis: Vec3, angle: f64) -> Rotation3 {
        let k = mat3::hat(axis);
        let k2 = mat3::mul(&k, &k);
        let m = mat3::add(
            &mat3::add(&mat3::IDENTITY, &mat3::scale(&k, angle.sin())),
            &mat3::scale(&k2, 1.0 - angle.cos()),
        );
        Rotation3(m)
    }
}
