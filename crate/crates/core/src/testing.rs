//! Shared proptest strategies for unit tests.

use num_complex::Complex64;
use proptest::prelude::*;

use crate::extplane::{ExtComplex, SpherePoint};
use crate::mobius::{GeneralMobius, QuatMobius};

pub fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

pub fn general_mobius() -> impl Strategy<Value = GeneralMobius> {
    (complex(), complex(), complex(), complex()).prop_filter_map("singular", |(a, b, c, d)| {
        let det = a * d - b * c;
        (det.norm() > 0.1).then(|| GeneralMobius::normalized(a, b, c, d).unwrap())
    })
}

pub fn quat_mobius() -> impl Strategy<Value = QuatMobius> {
    (complex(), complex()).prop_filter_map("zero", |(z, w)| {
        (z.norm() + w.norm() > 1e-3).then(|| QuatMobius::new(z, w).unwrap())
    })
}

/// Transformations whose axis stays away from the poles and whose angle
/// stays away from zero.
pub fn generic_quat_mobius() -> impl Strategy<Value = QuatMobius> {
    quat_mobius().prop_filter("near degenerate", |q| {
        q.omega().norm() > 1e-3 && q.zeta().re < 1.0 - 1e-6
    })
}

pub fn ext_point() -> impl Strategy<Value = ExtComplex> {
    prop_oneof![
        1 => Just(ExtComplex::Infinity),
        9 => complex().prop_map(|z| ExtComplex::Finite(z * 3.0)),
    ]
}

pub fn sphere_point() -> impl Strategy<Value = SpherePoint> {
    prop::array::uniform3(-1.0..1.0f64).prop_filter_map("zero", |v| SpherePoint::from_array(v).ok())
}

pub fn angle() -> impl Strategy<Value = f64> {
    -7.0..7.0f64
}
