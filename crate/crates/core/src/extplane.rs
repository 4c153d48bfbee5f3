//! The extended complex plane Ĉ = ℂ ∪ {∞} and stereographic projection
//! between Ĉ and the unit sphere S².
//!
//! Projection is taken from the north pole `(0, 0, 1)`, which corresponds
//! to `∞`; the south pole corresponds to `0` and the equator to the unit
//! circle.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points with `η3 ≥ 1 − POLE_EPS` project to infinity.
pub const POLE_EPS: f64 = 1e-14;

/// A point of the extended complex plane.
///
/// `Finite` values always carry finite components; use [`ExtComplex::from`]
/// or [`ExtComplex::new`] rather than building the variant from untrusted
/// data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    pub const ZERO: ExtComplex = ExtComplex::Finite(Complex64::new(0.0, 0.0));
    pub const ONE: ExtComplex = ExtComplex::Finite(Complex64::new(1.0, 0.0));
    pub const I: ExtComplex = ExtComplex::Finite(Complex64::new(0.0, 1.0));

    /// Finite point `re + i·im`. Rejects NaN and infinite components.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ExtComplex::Finite(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match *self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, ExtComplex::Finite(z) if *z == Complex64::new(0.0, 0.0))
    }

    /// `1/z` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> Self {
        match self {
            ExtComplex::Infinity => ExtComplex::ZERO,
            z if z.is_zero() => ExtComplex::Infinity,
            ExtComplex::Finite(z) => ExtComplex::from(z.inv()),
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        use ExtComplex::*;
        match (self, rhs) {
            (Infinity, Infinity) => Err(Error::Indeterminate("∞ + ∞")),
            (Infinity, Finite(_)) | (Finite(_), Infinity) => Ok(Infinity),
            (Finite(a), Finite(b)) => Ok(ExtComplex::from(a + b)),
        }
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        match (self, rhs) {
            (ExtComplex::Infinity, ExtComplex::Infinity) => Err(Error::Indeterminate("∞ − ∞")),
            _ => self.checked_add(-rhs),
        }
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        use ExtComplex::*;
        match (self, rhs) {
            (Infinity, z) | (z, Infinity) if z.is_zero() => Err(Error::Indeterminate("0 · ∞")),
            (Infinity, _) | (_, Infinity) => Ok(Infinity),
            (Finite(a), Finite(b)) => Ok(ExtComplex::from(a * b)),
        }
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        use ExtComplex::*;
        match (self, rhs) {
            (Infinity, Infinity) => Err(Error::Indeterminate("∞ / ∞")),
            (a, b) if a.is_zero() && b.is_zero() => Err(Error::Indeterminate("0 / 0")),
            (Infinity, Finite(_)) => Ok(Infinity),
            (Finite(_), Infinity) => Ok(ExtComplex::ZERO),
            (Finite(_), b) if b.is_zero() => Ok(Infinity),
            (Finite(a), Finite(b)) => Ok(ExtComplex::from(a / b)),
        }
    }
}

/// Non-finite complex values (overflow) are read as the point at infinity.
impl std::ops::Neg for ExtComplex {
    type Output = ExtComplex;

    fn neg(self) -> ExtComplex {
        match self {
            ExtComplex::Finite(z) => ExtComplex::Finite(-z),
            ExtComplex::Infinity => ExtComplex::Infinity,
        }
    }
}

impl From<Complex64> for ExtComplex {
    fn from(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            ExtComplex::Finite(z)
        } else {
            ExtComplex::Infinity
        }
    }
}

impl fmt::Display for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtComplex::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
            ExtComplex::Infinity => f.write_str("∞"),
        }
    }
}

/// A point of the unit sphere S² in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint([f64; 3]);

impl SpherePoint {
    pub const NORTH: SpherePoint = SpherePoint([0.0, 0.0, 1.0]);
    pub const SOUTH: SpherePoint = SpherePoint([0.0, 0.0, -1.0]);

    /// Normalizes `(x, y, z)` onto the sphere.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_array([x, y, z])
    }

    pub fn from_array(v: [f64; 3]) -> Result<Self> {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::NonFinite);
        }
        Ok(SpherePoint([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }

    pub fn antipode(&self) -> Self {
        SpherePoint([-self.0[0], -self.0[1], -self.0[2]])
    }

    pub fn dot(&self, v: [f64; 3]) -> f64 {
        self.0[0] * v[0] + self.0[1] * v[1] + self.0[2] * v[2]
    }

    /// Euclidean (chordal) distance in ℝ³.
    pub fn distance(&self, other: &SpherePoint) -> f64 {
        let [a, b, c] = self.0;
        let [x, y, z] = other.0;
        ((a - x).powi(2) + (b - y).powi(2) + (c - z).powi(2)).sqrt()
    }
}

/// Stereographic projection σ: S² → Ĉ from the north pole.
pub fn stereo(p: SpherePoint) -> ExtComplex {
    let [x, y, z] = p.0;
    if z >= 1.0 - POLE_EPS {
        return ExtComplex::Infinity;
    }
    if z > 0.0 {
        // (η1 + iη2)/(1 − η3) = (η1 + iη2)(1 + η3)/(η1² + η2²), no cancellation near the pole
        let s = (1.0 + z) / (x * x + y * y);
        ExtComplex::from(Complex64::new(x * s, y * s))
    } else {
        let d = 1.0 - z;
        ExtComplex::from(Complex64::new(x / d, y / d))
    }
}

/// Inverse stereographic projection σ⁻¹: Ĉ → S².
///
/// For `|z| > 1` the closed form is rescaled by `1/|z|²` so that very large
/// inputs do not overflow.
pub fn stereo_inv(z: ExtComplex) -> SpherePoint {
    let z = match z {
        ExtComplex::Infinity => return SpherePoint::NORTH,
        ExtComplex::Finite(z) => z,
    };
    let r = z.re.hypot(z.im);
    let v = if r <= 1.0 {
        let r2 = r * r;
        let den = r2 + 1.0;
        [2.0 * z.re / den, 2.0 * z.im / den, (r2 - 1.0) / den]
    } else {
        let t = 1.0 / r;
        let (ux, uy) = (z.re * t, z.im * t);
        let t2 = t * t;
        let den = 1.0 + t2;
        [2.0 * ux * t / den, 2.0 * uy * t / den, (1.0 - t2) / den]
    };
    // the closed form is unit up to rounding; renormalize to keep the invariant tight
    SpherePoint::from_array(v).unwrap_or(SpherePoint::NORTH)
}

/// Chordal distance `‖σ⁻¹(a) − σ⁻¹(b)‖`, finite everywhere on Ĉ and at most 2.
pub fn chordal_distance(a: ExtComplex, b: ExtComplex) -> f64 {
    stereo_inv(a).distance(&stereo_inv(b))
}

/// Tolerant equality on Ĉ: both infinite, or Euclidean distance within
/// `tol`, or chordal distance within `tol` (the latter makes points near
/// infinity comparable).
pub fn ext_eq(a: ExtComplex, b: ExtComplex, tol: f64) -> bool {
    match (a, b) {
        (ExtComplex::Infinity, ExtComplex::Infinity) => true,
        (ExtComplex::Finite(x), ExtComplex::Finite(y)) if (x - y).norm() <= tol => true,
        _ => chordal_distance(a, b) <= tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> ExtComplex {
        ExtComplex::new(re, im).unwrap()
    }

    #[test]
    fn stereo_fixed_points() {
        assert_eq!(stereo(SpherePoint::NORTH), ExtComplex::Infinity);
        assert_eq!(
            stereo(SpherePoint::new(1.0, 0.0, 0.0).unwrap()),
            c(1.0, 0.0)
        );
        assert_eq!(stereo(SpherePoint::SOUTH), c(0.0, 0.0));
        // within POLE_EPS of the pole
        assert!(stereo(SpherePoint::new(1e-9, 0.0, 1.0).unwrap()).is_infinite());
    }

    #[test]
    fn stereo_inv_fixed_points() {
        assert_eq!(stereo_inv(ExtComplex::Infinity).coords(), [0.0, 0.0, 1.0]);
        assert_eq!(stereo_inv(c(0.0, 0.0)).coords(), [0.0, 0.0, -1.0]);
        let p = stereo_inv(ExtComplex::I).coords();
        assert!((p[0]).abs() < 1e-15 && (p[1] - 1.0).abs() < 1e-15 && p[2].abs() < 1e-15);
        // huge input stays finite and lands near the north pole
        let p = stereo_inv(c(1e200, -3e200)).coords();
        assert!(p.iter().all(|v| v.is_finite()));
        assert!((p[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ext_eq_examples() {
        assert!(ext_eq(ExtComplex::Infinity, ExtComplex::Infinity, 1e-9));
        assert!(ext_eq(c(1.0, 0.0), c(1.0 + 1e-12, 0.0), 1e-9));
        assert!(!ext_eq(c(0.0, 0.0), ExtComplex::Infinity, 1e-9));
        assert!(ext_eq(c(1e20, 0.0), ExtComplex::Infinity, 1e-9));
    }

    #[test]
    fn indeterminate_forms_are_errors() {
        let inf = ExtComplex::Infinity;
        let zero = ExtComplex::ZERO;
        assert!(matches!(inf.checked_sub(inf), Err(Error::Indeterminate(_))));
        assert!(matches!(inf.checked_add(inf), Err(Error::Indeterminate(_))));
        assert!(matches!(
            zero.checked_mul(inf),
            Err(Error::Indeterminate(_))
        ));
        assert!(matches!(inf.checked_div(inf), Err(Error::Indeterminate(_))));
        assert!(matches!(
            zero.checked_div(zero),
            Err(Error::Indeterminate(_))
        ));
        assert_eq!(c(2.0, 1.0).checked_div(zero).unwrap(), inf);
        assert_eq!(c(2.0, 1.0).checked_div(inf).unwrap(), zero);
        assert_eq!(inf.checked_mul(c(0.0, 3.0)).unwrap(), inf);
        assert_eq!(inf.recip(), zero);
        assert_eq!(zero.recip(), inf);
        assert!(ExtComplex::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let p = SpherePoint::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            )
            .unwrap();
            let back = stereo_inv(stereo(p));
            assert!(back.distance(&p) <= 1e-10, "{p:?} -> {back:?}");
            let n: f64 = back.coords().iter().map(|v| v * v).sum();
            assert!((n - 1.0).abs() <= 1e-12);
        }
        for _ in 0..1000 {
            let r = 10f64.powf(rng.random_range(-6.0..6.0));
            let t = rng.random_range(0.0..std::f64::consts::TAU);
            let z = Complex64::from_polar(r, t);
            let back = stereo(stereo_inv(ExtComplex::Finite(z))).finite().unwrap();
            assert!((back - z).norm() <= 1e-8 * (1.0 + r * r), "{z} -> {back}");
        }
    }
}
