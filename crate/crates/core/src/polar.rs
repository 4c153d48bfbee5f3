//! Axis–angle data of a sphere rotation and its polar decomposition
//! `M = W ∘ D ∘ W*`, where `D` rotates about the polar axis and `W` carries
//! the north pole onto the rotation axis.
//!
//! Longitudes are reported as `λ = arg ω`. The axis itself then sits at
//! spherical longitude `λ + π/2`.

use num_complex::Complex64;

use crate::extplane::{chordal_distance, stereo, ExtComplex, SpherePoint};
use crate::mobius::{QuatMobius, DEGENERATE_EPS, PROBES};
use crate::quaternion::UnitPureQuaternion;

/// Which closed-form branch [`extract_polar`] took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    None,
    /// `ζ = ±1`, `ω = 0`.
    Identity,
    /// `ω = 0` but not the identity: rotation about `±i3`.
    PolarAxis,
}

impl Degeneracy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Degeneracy::None => "none",
            Degeneracy::Identity => "identity",
            Degeneracy::PolarAxis => "polar_axis",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarData {
    /// Rotation axis.
    pub axis: UnitPureQuaternion,
    /// Rotation angle in `[0, π]` for canonical input.
    pub tau: f64,
    /// Polar angle of the axis.
    pub phi: f64,
    /// `arg ω`.
    pub lambda: f64,
    /// Horizontal unit vector perpendicular to the axis.
    pub w_axis: Option<UnitPureQuaternion>,
    /// Completes `(axis, v, w)` to a right-handed frame.
    pub v_axis: Option<UnitPureQuaternion>,
    pub degenerate: Degeneracy,
}

impl PolarData {
    /// `σ(axis)` and `σ(−axis)`: the two fixed points of the rotation.
    pub fn axis_fixed_points(&self) -> (ExtComplex, ExtComplex) {
        let u = self.axis.vector();
        let p = SpherePoint::from_array(u).expect("unit axis");
        (stereo(p), stereo(p.antipode()))
    }
}

/// Reads off axis, angle and frame from the parameters.
pub fn extract_polar(q: &QuatMobius) -> PolarData {
    let (zeta, omega) = (q.zeta(), q.omega());
    let w_abs = omega.norm();
    if q.is_identity() {
        return PolarData {
            axis: UnitPureQuaternion::I3,
            tau: 0.0,
            phi: 0.0,
            lambda: 0.0,
            w_axis: None,
            v_axis: None,
            degenerate: Degeneracy::Identity,
        };
    }
    if w_abs < DEGENERATE_EPS {
        let up = zeta.im > 0.0;
        return PolarData {
            axis: if up {
                UnitPureQuaternion::I3
            } else {
                UnitPureQuaternion::I3.neg()
            },
            tau: 2.0 * zeta.im.abs().atan2(zeta.re),
            phi: if up { 0.0 } else { std::f64::consts::PI },
            lambda: 0.0,
            w_axis: None,
            v_axis: None,
            degenerate: Degeneracy::PolarAxis,
        };
    }
    // s = sin(τ/2) = √(1 − Re²ζ), computed without cancellation
    let s = zeta.im.hypot(w_abs);
    let unit = |v| UnitPureQuaternion::new(v).expect("nonzero by construction");
    PolarData {
        axis: unit([-omega.im / s, omega.re / s, zeta.im / s]),
        tau: 2.0 * s.atan2(zeta.re),
        phi: w_abs.atan2(zeta.im),
        lambda: omega.arg(),
        w_axis: Some(unit([omega.re / w_abs, omega.im / w_abs, 0.0])),
        v_axis: Some(unit([
            zeta.im * omega.im / (w_abs * s),
            -zeta.im * omega.re / (w_abs * s),
            w_abs / s,
        ])),
        degenerate: Degeneracy::None,
    }
}

/// Rotation by `tau` about the axis with polar angle `phi` and `arg ω = lambda`.
pub fn angles_to_params(tau: f64, phi: f64, lambda: f64) -> QuatMobius {
    let (s, c) = (tau / 2.0).sin_cos();
    let zeta = Complex64::new(c, s * phi.cos());
    let omega = Complex64::from_polar(s * phi.sin(), lambda);
    QuatMobius::new(zeta, omega).expect("unit parameters")
}

/// Rotation carrying the north pole to the axis with polar angle `phi`
/// and `arg ω = lambda`.
pub(crate) fn pole_aligner(phi: f64, lambda: f64) -> QuatMobius {
    let (s, c) = (phi / 2.0).sin_cos();
    QuatMobius::new(
        Complex64::new(c, 0.0),
        Complex64::from_polar(s, lambda) * Complex64::i(),
    )
    .expect("unit parameters")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub w: QuatMobius,
    pub d: QuatMobius,
    pub w_star: QuatMobius,
}

impl Decomposition {
    /// `W ∘ D ∘ W*`.
    pub fn reconstruct(&self) -> QuatMobius {
        self.w.compose(&self.d.compose(&self.w_star))
    }

    /// Largest chordal gap between `W(D(W*(z)))` and `target(z)` over the probes.
    pub fn reconstruction_error(&self, target: &QuatMobius) -> f64 {
        PROBES
            .iter()
            .map(|&z| {
                chordal_distance(
                    self.w.eval(self.d.eval(self.w_star.eval(z))),
                    target.eval(z),
                )
            })
            .fold(0.0, f64::max)
    }
}

/// Splits `q` into `W ∘ D ∘ W*`. For `ω = 0` the aligner is the identity
/// and `D = q`.
pub fn decompose(q: &QuatMobius) -> Decomposition {
    let polar = extract_polar(q);
    match polar.degenerate {
        Degeneracy::Identity => Decomposition {
            w: QuatMobius::IDENTITY,
            d: QuatMobius::IDENTITY,
            w_star: QuatMobius::IDENTITY,
        },
        Degeneracy::PolarAxis => Decomposition {
            w: QuatMobius::IDENTITY,
            d: *q,
            w_star: QuatMobius::IDENTITY,
        },
        Degeneracy::None => {
            let w = pole_aligner(polar.phi, polar.lambda);
            let d = QuatMobius::new(
                Complex64::from_polar(1.0, polar.tau / 2.0),
                Complex64::new(0.0, 0.0),
            )
            .expect("unit parameters");
            Decomposition {
                w,
                d,
                w_star: w.star(),
            }
        }
    }
}
