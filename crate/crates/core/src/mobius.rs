//! Möbius transformations `z ↦ (az + b)/(cz + d)` of the extended plane and
//! the quaternionic subgroup `Q(ζ, ω): z ↦ (ζz − ω)/(ω̄z + ζ̄)`.
//!
//! A quaternionic transformation is stored normalized (`|ζ|² + |ω|² = 1`)
//! and sign-canonicalized, so `(ζ, ω)` and `(−ζ, −ω)` build equal values.
//! Each one induces a proper rotation of the Riemann sphere, see
//! [`QuatMobius::induced_rotation`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::{chordal_distance, stereo, stereo_inv, ExtComplex, SpherePoint};
pub use crate::rotation::Rotation3;

/// Minimum `|ad − bc|` accepted at construction.
pub const SINGULAR_EPS: f64 = 1e-14;

/// Tolerance on `d = ā`, `c = −b̄` when recognizing a quaternionic map.
pub const QUATERNIONIC_TOL: f64 = 1e-9;

/// Below this, `|Im ζ|` and `|ω|` are treated as zero by the degeneracy tests.
pub const DEGENERATE_EPS: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The fixed probe points used for map-level comparison.
pub const PROBES: [ExtComplex; 8] = [
    ExtComplex::Finite(Complex64::new(0.0, 0.0)),
    ExtComplex::Finite(Complex64::new(1.0, 0.0)),
    ExtComplex::Finite(Complex64::new(-1.0, 0.0)),
    ExtComplex::Finite(Complex64::new(0.0, 1.0)),
    ExtComplex::Finite(Complex64::new(0.0, -1.0)),
    ExtComplex::Finite(Complex64::new(2.0, 1.0)),
    ExtComplex::Infinity,
    ExtComplex::Finite(Complex64::new(1.0 / 3.0, 0.0)),
];

/// Largest chordal distance between `f(z)` and `g(z)` over [`PROBES`].
pub fn probe_distance(
    f: impl Fn(ExtComplex) -> ExtComplex,
    g: impl Fn(ExtComplex) -> ExtComplex,
) -> f64 {
    PROBES
        .iter()
        .map(|&z| chordal_distance(f(z), g(z)))
        .fold(0.0, f64::max)
}

/// A general Möbius transformation with `ad − bc ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralMobius {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl GeneralMobius {
    pub const IDENTITY: GeneralMobius = GeneralMobius {
        a: ONE,
        b: ZERO,
        c: ZERO,
        d: ONE,
    };

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if ![a, b, c, d]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let det = a * d - b * c;
        if det.norm() <= SINGULAR_EPS {
            return Err(Error::Singular(det.norm()));
        }
        Ok(GeneralMobius { a, b, c, d })
    }

    /// Same transformation, rescaled so that `ad − bc = 1`.
    pub fn normalized(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        Ok(Self::new(a, b, c, d)?.renormalize())
    }

    fn renormalize(self) -> Self {
        let k = self.det().sqrt().inv();
        GeneralMobius {
            a: self.a * k,
            b: self.b * k,
            c: self.c * k,
            d: self.d * k,
        }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Evaluates the map on Ĉ with `M(∞) = a/c` (or `∞` if `c = 0`) and
    /// `M(−d/c) = ∞`.
    pub fn eval(&self, z: ExtComplex) -> ExtComplex {
        let GeneralMobius { a, b, c, d } = *self;
        match z {
            ExtComplex::Infinity => {
                if c == ZERO {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::from(a / c)
                }
            }
            ExtComplex::Finite(z) => {
                let den = c * z + d;
                // relative test so that z = −d/c, computed in floating point, still hits the pole
                if den.norm() <= 4.0 * f64::EPSILON * (c.norm() * z.norm() + d.norm()) {
                    return ExtComplex::Infinity;
                }
                ExtComplex::from((a * z + b) / den)
            }
        }
    }

    /// `self ∘ first`: coefficient matrix product, renormalized to det 1.
    pub fn compose(&self, first: &GeneralMobius) -> GeneralMobius {
        let (p, q) = (self, first);
        GeneralMobius {
            a: p.a * q.a + p.b * q.c,
            b: p.a * q.b + p.b * q.d,
            c: p.c * q.a + p.d * q.c,
            d: p.c * q.b + p.d * q.d,
        }
        .renormalize()
    }

    /// `ℳ(d, −b, −c, a)`; exact inverse for normalized coefficients and the
    /// inverse map in every case.
    pub fn inverse(&self) -> GeneralMobius {
        GeneralMobius {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Transformation-conjugate `ℳ(ā, c̄, b̄, d̄)`.
    pub fn star(&self) -> GeneralMobius {
        GeneralMobius {
            a: self.a.conj(),
            b: self.c.conj(),
            c: self.b.conj(),
            d: self.d.conj(),
        }
    }

    /// Recognizes the pattern `(ζ, −ω, ω̄, ζ̄)` after det-1 normalization.
    pub fn as_quat_mobius(&self) -> Result<QuatMobius> {
        let m = self.renormalize();
        if (m.d - m.a.conj()).norm() > QUATERNIONIC_TOL
            || (m.c + m.b.conj()).norm() > QUATERNIONIC_TOL
        {
            return Err(Error::NotQuaternionic);
        }
        QuatMobius::new(m.a, -m.b)
    }

    /// `σ⁻¹ ∘ M ∘ σ` evaluated at a sphere point.
    pub fn induced_sphere_map(&self, p: SpherePoint) -> SpherePoint {
        stereo_inv(self.eval(stereo(p)))
    }

    pub fn probe_distance(&self, other: &GeneralMobius) -> f64 {
        probe_distance(|z| self.eval(z), |z| other.eval(z))
    }
}

/// Picks the representative of `±(ζ, ω)` with `Re ζ > 0`, ties broken by
/// `Im ζ > 0`, then `Re ω > 0`, then `Im ω > 0`.
pub(crate) fn canonical_sign(zeta: Complex64, omega: Complex64) -> (Complex64, Complex64) {
    let keys = [zeta.re, zeta.im, omega.re, omega.im];
    let flip = keys.iter().find(|k| **k != 0.0).is_some_and(|k| *k < 0.0);
    if flip {
        (-zeta, -omega)
    } else {
        (zeta, omega)
    }
}

/// A normalized, sign-canonical quaternionic Möbius transformation `Q(ζ, ω)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuatMobius {
    zeta: Complex64,
    omega: Complex64,
}

impl QuatMobius {
    pub const IDENTITY: QuatMobius = QuatMobius {
        zeta: ONE,
        omega: ZERO,
    };

    /// Normalizes to `|ζ|² + |ω|² = 1` and canonicalizes the sign.
    pub fn new(zeta: Complex64, omega: Complex64) -> Result<Self> {
        let n = (zeta.norm_sqr() + omega.norm_sqr()).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroParameters);
        }
        let (zeta, omega) = canonical_sign(zeta / n, omega / n);
        Ok(QuatMobius { zeta, omega })
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn omega(&self) -> Complex64 {
        self.omega
    }

    pub fn to_general(&self) -> GeneralMobius {
        GeneralMobius {
            a: self.zeta,
            b: -self.omega,
            c: self.omega.conj(),
            d: self.zeta.conj(),
        }
    }

    pub fn eval(&self, z: ExtComplex) -> ExtComplex {
        self.to_general().eval(z)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &QuatMobius) -> QuatMobius {
        let (p, q) = (self, first);
        let zeta = p.zeta * q.zeta - p.omega * q.omega.conj();
        let omega = p.zeta * q.omega + p.omega * q.zeta.conj();
        QuatMobius::new(zeta, omega).expect("product of unit parameters is nonzero")
    }

    /// `Q(ζ̄, −ω)`, which is both the inverse and the transformation-conjugate.
    pub fn inverse(&self) -> QuatMobius {
        QuatMobius::new(self.zeta.conj(), -self.omega).expect("unit parameters")
    }

    pub fn star(&self) -> QuatMobius {
        self.inverse()
    }

    /// True when the map is the identity up to [`DEGENERATE_EPS`].
    pub fn is_identity(&self) -> bool {
        self.zeta.im.abs() < DEGENERATE_EPS && self.omega.norm() < DEGENERATE_EPS
    }

    /// Matrix of the sphere rotation `σ⁻¹ ∘ M ∘ σ`.
    pub fn induced_rotation(&self) -> Rotation3 {
        let (z, w) = (self.zeta, self.omega);
        let z2 = z * z;
        let w2 = w * w;
        let zw = z * w;
        let zwb = z * w.conj();
        Rotation3::from_matrix([
            [(z2 - w2).re, -(z2 + w2).im, 2.0 * zw.re],
            [(z2 - w2).im, (z2 + w2).re, 2.0 * zw.im],
            [-2.0 * zwb.re, 2.0 * zwb.im, z.norm_sqr() - w.norm_sqr()],
        ])
    }

    pub fn induced_sphere_map(&self, p: SpherePoint) -> SpherePoint {
        self.to_general().induced_sphere_map(p)
    }

    /// The two fixed points, roots of `ω̄z² + (ζ̄ − ζ)z + ω = 0`; `(0, ∞)` when `ω` vanishes.
    pub fn fixed_points(&self) -> Result<(ExtComplex, ExtComplex)> {
        if self.is_identity() {
            return Err(Error::IdentityTransform);
        }
        let (z, w) = (self.zeta, self.omega);
        if w.norm() < DEGENERATE_EPS {
            return Ok((ExtComplex::ZERO, ExtComplex::Infinity));
        }
        let qa = w.conj();
        let qb = z.conj() - z;
        let qc = w;
        let sq = (qb * qb - 4.0 * qa * qc).sqrt();
        // pick the sign that avoids cancellation in qb ± sq
        let t = if (qb.conj() * sq).re >= 0.0 {
            qb + sq
        } else {
            qb - sq
        };
        let r1 = ExtComplex::from(-t / (2.0 * qa));
        let r2 = ExtComplex::from(-2.0 * qc / t);
        Ok((r1, r2))
    }

    pub fn probe_distance(&self, other: &QuatMobius) -> f64 {
        probe_distance(|z| self.eval(z), |z| other.eval(z))
    }

    /// Largest parameter difference, sign sensitive.
    pub fn max_param_diff(&self, other: &QuatMobius) -> f64 {
        (self.zeta - other.zeta)
            .norm()
            .max((self.omega - other.omega).norm())
    }
}

/// Fixed-point pairs compared as unordered sets under the chordal metric.
pub fn pair_set_distance(p: (ExtComplex, ExtComplex), q: (ExtComplex, ExtComplex)) -> f64 {
    let direct = chordal_distance(p.0, q.0).max(chordal_distance(p.1, q.1));
    let swapped = chordal_distance(p.0, q.1).max(chordal_distance(p.1, q.0));
    direct.min(swapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat3;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    use crate::testing::{
        ext_point as point, general_mobius as general, quat_mobius, sphere_point,
    };
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn x_rotation(tau: f64) -> QuatMobius {
        QuatMobius::new(c((tau / 2.0).cos(), 0.0), c(0.0, -(tau / 2.0).sin())).unwrap()
    }

    #[test]
    fn eval_conventions() {
        assert_eq!(
            GeneralMobius::IDENTITY.eval(ExtComplex::Infinity),
            ExtComplex::Infinity
        );
        let m = GeneralMobius::new(c(1.0, 2.0), c(0.5, 0.0), c(2.0, -1.0), c(3.0, 0.25)).unwrap();
        let pole = ExtComplex::Finite(-c(3.0, 0.25) / c(2.0, -1.0));
        assert_eq!(m.eval(pole), ExtComplex::Infinity);
        assert_eq!(
            m.eval(ExtComplex::Infinity),
            ExtComplex::Finite(c(1.0, 2.0) / c(2.0, -1.0))
        );
        let affine = GeneralMobius::new(c(2.0, 0.0), c(1.0, 0.0), ZERO, ONE).unwrap();
        assert_eq!(affine.eval(ExtComplex::Infinity), ExtComplex::Infinity);
    }

    #[test]
    fn eval_x_rotation_at_i() {
        for tau in [0.3, 1.0, 2.5, -0.7] {
            let m = x_rotation(tau);
            let expected = c(0.0, tau.cos() / (1.0 - tau.sin()));
            let got = m.eval(ExtComplex::I).finite().unwrap();
            assert!(
                (got - expected).norm() < 1e-14,
                "{tau}: {got} vs {expected}"
            );
            assert!((m.eval(ExtComplex::ONE).finite().unwrap() - ONE).norm() < 1e-15);
        }
    }

    #[test]
    fn singular_coefficients_rejected() {
        assert!(matches!(
            GeneralMobius::new(ONE, ONE, ONE, ONE),
            Err(Error::Singular(_))
        ));
        assert!(GeneralMobius::new(c(f64::NAN, 0.0), ZERO, ZERO, ONE).is_err());
        assert_eq!(QuatMobius::new(ZERO, ZERO), Err(Error::ZeroParameters));
    }

    #[test]
    fn normalized_has_unit_det() {
        let m = GeneralMobius::normalized(c(1.0, 2.0), c(0.5, 0.0), c(2.0, -1.0), c(3.0, 0.25))
            .unwrap();
        assert!((m.det() - ONE).norm() < 1e-12);
    }

    #[test]
    fn identity_and_inverse_examples() {
        assert_eq!(GeneralMobius::IDENTITY.inverse(), GeneralMobius::IDENTITY);
        let m = GeneralMobius::normalized(c(1.0, 2.0), c(0.5, 0.0), c(2.0, -1.0), c(3.0, 0.25))
            .unwrap();
        assert!(m.compose(&GeneralMobius::IDENTITY).probe_distance(&m) < 1e-15);
        assert!(
            m.compose(&m.inverse())
                .probe_distance(&GeneralMobius::IDENTITY)
                < 1e-12
        );
        let q = QuatMobius::new(c(0.3, -0.4), c(0.5, 0.7)).unwrap();
        let expected = QuatMobius::new(q.zeta().conj(), -q.omega()).unwrap();
        assert_eq!(q.inverse(), expected);
        assert!(q.to_general().star().probe_distance(&expected.to_general()) < 1e-14);
        assert!(
            q.to_general()
                .inverse()
                .probe_distance(&expected.to_general())
                < 1e-14
        );
    }

    #[test]
    fn sign_canonicalization() {
        let (z, w) = (c(-0.3, 0.4), c(0.5, -0.2));
        assert_eq!(
            QuatMobius::new(z, w).unwrap(),
            QuatMobius::new(-z, -w).unwrap()
        );
        assert!(QuatMobius::new(z, w).unwrap().zeta().re > 0.0);
        // ties fall through to the next key
        let q = QuatMobius::new(c(0.0, -1.0), ZERO).unwrap();
        assert_eq!(q.zeta(), c(0.0, 1.0));
        let q = QuatMobius::new(ZERO, c(0.0, -1.0)).unwrap();
        assert_eq!(q.omega(), c(0.0, 1.0));
        let q = QuatMobius::new(ZERO, c(-0.6, 0.8)).unwrap();
        assert_eq!(q.omega(), c(0.6, -0.8));
    }

    #[test]
    fn as_quat_mobius_examples() {
        let recip = GeneralMobius::new(ZERO, ONE, ONE, ZERO).unwrap();
        let q = recip.as_quat_mobius().unwrap();
        assert_eq!(q, QuatMobius::new(ZERO, c(0.0, 1.0)).unwrap());
        for z in [
            ExtComplex::ZERO,
            ExtComplex::ONE,
            ExtComplex::I,
            ExtComplex::Infinity,
        ] {
            assert!(chordal_distance(q.eval(z), recip.eval(z)) < 1e-15);
        }
        assert_eq!(
            GeneralMobius::IDENTITY.as_quat_mobius().unwrap(),
            QuatMobius::IDENTITY
        );
        let shear = GeneralMobius::new(ONE, ONE, ZERO, ONE).unwrap();
        assert_eq!(shear.as_quat_mobius(), Err(Error::NotQuaternionic));
    }

    #[test]
    fn induced_rotation_examples() {
        assert_eq!(QuatMobius::IDENTITY.induced_rotation(), Rotation3::IDENTITY);
        for tau in [0.4, 1.3, 2.9] {
            let (ct, st) = (f64::cos(tau), f64::sin(tau));
            let expected = Rotation3::from_matrix([[1.0, 0.0, 0.0], [0.0, ct, -st], [0.0, st, ct]]);
            assert!(x_rotation(tau).induced_rotation().max_abs_diff(&expected) <= 1e-12);
        }
    }

    #[test]
    fn reciprocal_swaps_i_and_minus_i_on_sphere() {
        let recip = GeneralMobius::new(ZERO, ONE, ONE, ZERO).unwrap();
        let p = recip.induced_sphere_map(SpherePoint::new(0.0, 1.0, 0.0).unwrap());
        assert!(p.distance(&SpherePoint::new(0.0, -1.0, 0.0).unwrap()) < 1e-15);
        let p0 = SpherePoint::new(0.2, -0.5, 0.3).unwrap();
        assert!(GeneralMobius::IDENTITY.induced_sphere_map(p0).distance(&p0) < 1e-15);
    }

    #[test]
    fn fixed_point_examples() {
        for tau in [0.5, 2.0, -1.0] {
            let d = QuatMobius::new(Complex64::from_polar(1.0, tau / 2.0), ZERO).unwrap();
            let fp = d.fixed_points().unwrap();
            assert!(pair_set_distance(fp, (ExtComplex::ZERO, ExtComplex::Infinity)) == 0.0);
        }
        for tau in [0.1, 1.0, PI - 0.1] {
            let fp = x_rotation(tau).fixed_points().unwrap();
            let expected = (ExtComplex::ONE, ExtComplex::Finite(-ONE));
            assert!(pair_set_distance(fp, expected) < 1e-14, "{fp:?}");
        }
        assert_eq!(
            QuatMobius::IDENTITY.fixed_points(),
            Err(Error::IdentityTransform)
        );
        let minus_id = QuatMobius::new(c(-1.0, 0.0), ZERO).unwrap();
        assert_eq!(minus_id.fixed_points(), Err(Error::IdentityTransform));
    }

    #[test]
    fn quarter_turn_fixture() {
        let q = QuatMobius::new(c(FRAC_1_SQRT_2, 0.0), c(0.0, -FRAC_1_SQRT_2)).unwrap();
        let r = q.induced_rotation();
        let expected = Rotation3::from_matrix([[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]]);
        assert!(r.max_abs_diff(&expected) < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn compose_matches_nested_eval(m2 in general(), m1 in general(), z in point()) {
            let lhs = m2.compose(&m1).eval(z);
            let rhs = m2.eval(m1.eval(z));
            prop_assert!(chordal_distance(lhs, rhs) <= 1e-9, "{lhs} vs {rhs}");
        }

        #[test]
        fn inverse_undoes(m in general(), z in point()) {
            let back = m.inverse().eval(m.eval(z));
            prop_assert!(chordal_distance(back, z) <= 1e-9);
        }

        #[test]
        fn compose_is_associative(a in general(), b in general(), cc in general()) {
            let lhs = a.compose(&b).compose(&cc);
            let rhs = a.compose(&b.compose(&cc));
            prop_assert!(lhs.probe_distance(&rhs) <= 1e-9);
        }

        #[test]
        fn quaternionic_maps_are_closed(p in quat_mobius(), q in quat_mobius()) {
            let prod = p.to_general().compose(&q.to_general());
            let recognized = prod.as_quat_mobius();
            prop_assert!(recognized.is_ok());
            let [a, b, cc, d] = prod.coefficients();
            prop_assert!((d - a.conj()).norm() <= 1e-10 && (cc + b.conj()).norm() <= 1e-10);
            prop_assert!(recognized.unwrap().probe_distance(&p.compose(&q)) <= 1e-10);
        }

        #[test]
        fn quat_star_is_inverse(q in quat_mobius()) {
            prop_assert!(q.to_general().star().probe_distance(&q.inverse().to_general()) <= 1e-10);
            prop_assert!(q.compose(&q.inverse()).probe_distance(&QuatMobius::IDENTITY) <= 1e-10);
        }

        #[test]
        fn induced_rotation_is_a_homomorphism(p in quat_mobius(), q in quat_mobius()) {
            let lhs = p.compose(&q).induced_rotation();
            let rhs = p.induced_rotation().compose(&q.induced_rotation());
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
        }

        #[test]
        fn induced_rotation_is_proper(q in quat_mobius()) {
            let r = q.induced_rotation();
            prop_assert!(r.orthogonality_error() <= 1e-10);
            prop_assert!((r.det() - 1.0).abs() <= 1e-10);
        }

        // columns of the matrix are the images σ⁻¹(M(σ(e_k))) of the basis vectors
        #[test]
        fn induced_rotation_columns(q in quat_mobius()) {
            let r = q.induced_rotation();
            for k in 0..3 {
                let mut e = [0.0; 3];
                e[k] = 1.0;
                let image = stereo_inv(q.eval(stereo(SpherePoint::from_array(e).unwrap())));
                prop_assert!(mat3::max_abs_vec_diff(image.coords(), mat3::column(r.matrix(), k)) <= 1e-9);
            }
        }

        #[test]
        fn sphere_map_matches_rotation(q in quat_mobius(), p in sphere_point()) {
            let pointwise = q.induced_sphere_map(p).coords();
            let linear = q.induced_rotation().apply(p.coords());
            prop_assert!(mat3::max_abs_vec_diff(pointwise, linear) <= 1e-9);
        }

        #[test]
        fn antipodes_go_to_antipodes(q in quat_mobius(), p in sphere_point()) {
            let a = q.induced_sphere_map(p);
            let b = q.induced_sphere_map(p.antipode());
            prop_assert!(a.distance(&b.antipode()) <= 1e-9);
        }

        #[test]
        fn fixed_points_are_fixed(q in quat_mobius()) {
            prop_assume!(!q.is_identity());
            let (z1, z2) = q.fixed_points().unwrap();
            prop_assert!(chordal_distance(q.eval(z1), z1) <= 1e-9);
            prop_assert!(chordal_distance(q.eval(z2), z2) <= 1e-9);
        }
    }
}
