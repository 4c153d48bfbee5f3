//! Infinitesimal generators of the orbit `τ ↦ T_τ`.
//!
//! At the level of 3×3 matrices the derivative at `τ = 0` is a skew matrix
//! and exponentiates back to the orbit. At the level of maps on Ĉ the
//! derivative of the coefficients is again a Möbius map, but conjugating that
//! map by stereographic projection does not give a skew matrix; see
//! [`counterexample_report`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::{stereo, stereo_inv, ExtComplex, SpherePoint};
use crate::mat3::{self, Mat3, Vec3};
use crate::mobius::{GeneralMobius, QuatMobius};
use crate::orbits::t_orbit;
use crate::polar::extract_polar;
use crate::rotation::Rotation3;

/// Default step for central differences.
pub const DEFAULT_FD_STEP: f64 = 1e-6;

const SKEW_TOL: f64 = 1e-12;

/// A real skew-symmetric 3×3 matrix, `A = hat(a)` with `A·x = a × x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewMatrix3(Mat3);

impl SkewMatrix3 {
    pub fn from_vector(a: Vec3) -> Self {
        SkewMatrix3(mat3::hat(a))
    }

    /// Accepts `m` when `max |m + mᵀ| ≤ 1e-12`.
    pub fn from_matrix(m: Mat3) -> Result<Self> {
        let err = skew_error(&m);
        if err > SKEW_TOL {
            return Err(Error::NotSkew(err));
        }
        Ok(SkewMatrix3(m))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    /// The vector `a` with `A = hat(a)`.
    pub fn vector(&self) -> Vec3 {
        let m = &self.0;
        [m[2][1], m[0][2], m[1][0]]
    }
}

/// `max |m + mᵀ|`.
pub fn skew_error(m: &Mat3) -> f64 {
    mat3::max_abs_diff(m, &mat3::scale(&mat3::transpose(m), -1.0))
}

/// Derivative of the orbit's coefficient matrix at `τ = 0`, up to the
/// projective factor 2, as a det-1 Möbius transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentMobius {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl TangentMobius {
    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn to_general(&self) -> GeneralMobius {
        GeneralMobius::new(self.a, self.b, self.c, self.d).expect("unit determinant")
    }

    pub fn eval(&self, z: ExtComplex) -> ExtComplex {
        self.to_general().eval(z)
    }
}

/// `z ↦ (i cos φ · z − sin φ e^{iλ}) / (sin φ e^{−iλ} · z − i cos φ)` for the
/// axis angles of `q`.
pub fn t_prime_zero(q: &QuatMobius) -> Result<TangentMobius> {
    let p = extract_polar(q);
    if q.is_identity() {
        return Err(Error::DegenerateOrbit);
    }
    let (sin_phi, cos_phi) = p.phi.sin_cos();
    let i = Complex64::i();
    let omega = Complex64::from_polar(sin_phi, p.lambda);
    Ok(TangentMobius {
        a: i * cos_phi,
        b: -omega,
        c: omega.conj(),
        d: -i * cos_phi,
    })
}

/// Derivative of `induced_rotation(T_τ)` at `τ = 0`: the hat of the unit axis.
pub fn so3_generator(q: &QuatMobius) -> Result<SkewMatrix3> {
    if q.is_identity() {
        return Err(Error::DegenerateOrbit);
    }
    let p = extract_polar(q);
    let (sp, cp) = p.phi.sin_cos();
    let (sl, cl) = p.lambda.sin_cos();
    Ok(SkewMatrix3([
        [0.0, -cp, sp * cl],
        [cp, 0.0, sp * sl],
        [-sp * cl, -sp * sl, 0.0],
    ]))
}

/// `exp(τA)` by the Rodrigues formula.
pub fn expm_so3(a: &SkewMatrix3, tau: f64) -> Rotation3 {
    let v = a.vector();
    let theta = mat3::norm(v);
    if theta == 0.0 {
        return Rotation3::IDENTITY;
    }
    Rotation3::about_axis([v[0] / theta, v[1] / theta, v[2] / theta], tau * theta)
}

/// Partial sum `Σ_{k<terms} (τA)^k / k!`.
pub fn expm_series(a: &SkewMatrix3, tau: f64, terms: usize) -> Mat3 {
    let step = mat3::scale(&a.0, tau);
    let mut term = mat3::IDENTITY;
    let mut sum = [[0.0; 3]; 3];
    for k in 0..terms {
        sum = mat3::add(&sum, &term);
        term = mat3::scale(&mat3::mul(&term, &step), 1.0 / (k + 1) as f64);
    }
    sum
}

/// `(f(h) − f(−h)) / 2h`, entrywise.
pub fn central_difference<const N: usize>(f: impl Fn(f64) -> [f64; N], h: f64) -> [f64; N] {
    let (plus, minus) = (f(h), f(-h));
    std::array::from_fn(|k| (plus[k] - minus[k]) / (2.0 * h))
}

/// Central difference of `induced_rotation(t_orbit(q, τ))` at `τ = 0`.
pub fn fd_generator(q: &QuatMobius, h: f64) -> Mat3 {
    let flat = central_difference(
        |tau| {
            let m = *t_orbit(q, tau).induced_rotation().matrix();
            std::array::from_fn::<f64, 9, _>(|k| m[k / 3][k % 3])
        },
        h,
    );
    std::array::from_fn(|r| std::array::from_fn(|c| flat[3 * r + c]))
}

/// Central difference of the coefficients `(ζ, −ω, ω̄, ζ̄)` of `t_orbit(q, τ)` at `τ = 0`.
pub fn fd_tangent_coefficients(q: &QuatMobius, h: f64) -> [Complex64; 4] {
    let flat = central_difference(
        |tau| {
            let c = t_orbit(q, tau).to_general().coefficients();
            std::array::from_fn::<f64, 8, _>(|k| if k % 2 == 0 { c[k / 2].re } else { c[k / 2].im })
        },
        h,
    );
    std::array::from_fn(|k| Complex64::new(flat[2 * k], flat[2 * k + 1]))
}

/// `max |so3_generator(q) − fd_generator(q, h)|`.
pub fn generator_fd_error(q: &QuatMobius, h: f64) -> Result<f64> {
    Ok(mat3::max_abs_diff(
        so3_generator(q)?.matrix(),
        &fd_generator(q, h),
    ))
}

/// Largest gap between the coefficients of [`t_prime_zero`] and twice the
/// finite-difference derivative of the orbit's coefficients.
pub fn tangent_fd_error(q: &QuatMobius, h: f64) -> Result<f64> {
    let exact = t_prime_zero(q)?.coefficients();
    let fd = fd_tangent_coefficients(q, h);
    Ok((0..4)
        .map(|k| (exact[k] - 2.0 * fd[k]).norm())
        .fold(0.0, f64::max))
}

/// The rotation by `tau` about the first coordinate axis.
pub fn x_axis_rotation(tau: f64) -> QuatMobius {
    QuatMobius::new(
        Complex64::new((tau / 2.0).cos(), 0.0),
        Complex64::new(0.0, -(tau / 2.0).sin()),
    )
    .expect("unit parameters")
}

pub const COUNTEREXAMPLE_TAU: f64 = 0.8;

/// The tangent map of the x-axis rotation, pulled back to the sphere
/// pointwise, compared with the skew generator.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub tau: f64,
    /// Induced rotation of the x-axis rotation at `tau`.
    pub rotation: Mat3,
    /// `[[1,0,0],[0,cos τ,−sin τ],[0,sin τ,cos τ]]`.
    pub expected_rotation: Mat3,
    pub rotation_error: f64,
    pub generator: Mat3,
    pub tangent: TangentMobius,
    /// `(z, T′₀(z))` for `z = 1, i, ∞`, the projections of the basis vectors.
    pub probe_images: [(ExtComplex, ExtComplex); 3],
    /// `σ⁻¹(T′₀(σ(e_k)))` as columns.
    pub assembled: Mat3,
    /// `max |assembled + assembledᵀ|`.
    pub assembled_skew_error: f64,
    /// `max |assembled − generator|`.
    pub mismatch: f64,
    /// The matrix `diag(1, −1, 0)` sometimes quoted for this construction,
    /// and its max-abs gap to `assembled`. Its third column disagrees with
    /// `σ⁻¹(0) = (0, 0, −1)`.
    pub quoted_assembly: Mat3,
    pub quoted_assembly_gap: f64,
    /// True when the pulled-back tangent map is not the skew generator.
    pub not_in_so3: bool,
}

pub fn counterexample_report() -> CounterexampleReport {
    counterexample_report_at(COUNTEREXAMPLE_TAU)
}

pub fn counterexample_report_at(tau: f64) -> CounterexampleReport {
    let q = x_axis_rotation(tau);
    let rotation = *q.induced_rotation().matrix();
    let (s, c) = tau.sin_cos();
    let expected_rotation = [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]];
    let generator = *so3_generator(&q).expect("non-identity").matrix();
    let tangent = t_prime_zero(&q).expect("non-identity");

    let mut assembled = [[0.0; 3]; 3];
    let mut probe_images = [(ExtComplex::ZERO, ExtComplex::ZERO); 3];
    for k in 0..3 {
        let mut e = [0.0; 3];
        e[k] = 1.0;
        let z = stereo(SpherePoint::from_array(e).expect("basis vector"));
        let image = tangent.eval(z);
        probe_images[k] = (z, image);
        let col = stereo_inv(image).coords();
        for r in 0..3 {
            assembled[r][k] = col[r];
        }
    }
    let quoted_assembly = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 0.0]];
    let mismatch = mat3::max_abs_diff(&assembled, &generator);
    let assembled_skew_error = skew_error(&assembled);
    CounterexampleReport {
        tau,
        rotation,
        expected_rotation,
        rotation_error: mat3::max_abs_diff(&rotation, &expected_rotation),
        generator,
        tangent,
        probe_images,
        assembled,
        assembled_skew_error,
        mismatch,
        quoted_assembly,
        quoted_assembly_gap: mat3::max_abs_diff(&assembled, &quoted_assembly),
        not_in_so3: assembled_skew_error > SKEW_TOL && mismatch > SKEW_TOL,
    }
}
