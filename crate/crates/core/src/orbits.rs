//! One- and multi-parameter families of rotations built from a transformation
//! `M = W ∘ D ∘ W*`:
//!
//! * [`t_orbit`] keeps the axis and varies the angle (a one-parameter subgroup),
//! * [`phi_family`] keeps the angle and longitude and tilts the axis,
//! * [`lambda_family`] keeps the angle and polar angle and spins the axis,
//! * [`g_family`] covers every rotation by its three angles.
//!
//! Longitude arguments are `arg ω`, matching [`crate::polar::PolarData::lambda`].

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::{stereo_inv, ExtComplex, SpherePoint};
use crate::mobius::QuatMobius;
use crate::polar::{angles_to_params, extract_polar};

/// `arg ω` minus the index `λ` for which [`u_phi_lambda`] aligns the pole with
/// the axis. The literal aligner sends the pole to longitude `λ + π`, while
/// the axis sits at longitude `arg ω + π/2`.
pub const U_INDEX_OFFSET: f64 = -FRAC_PI_2;

/// `z ↦ e^{iτ}z`.
pub fn d_tau(tau: f64) -> QuatMobius {
    QuatMobius::new(
        Complex64::from_polar(1.0, tau / 2.0),
        Complex64::new(0.0, 0.0),
    )
    .expect("unit parameters")
}

/// `Q(cos(φ/2), −sin(φ/2)e^{iλ})`; sends the north pole to
/// `(sin φ cos(λ+π), sin φ sin(λ+π), cos φ)`.
pub fn u_phi_lambda(phi: f64, lambda: f64) -> QuatMobius {
    let (s, c) = (phi / 2.0).sin_cos();
    QuatMobius::new(Complex64::new(c, 0.0), -Complex64::from_polar(s, lambda))
        .expect("unit parameters")
}

/// Tilt by `phi` that moves the pole along the meridian of an axis whose
/// parameters have `arg ω = lambda`.
pub fn w_phi(phi: f64, lambda: f64) -> QuatMobius {
    u_phi_lambda(phi, lambda + U_INDEX_OFFSET)
}

/// `T_τ`: the rotation by `tau` about the axis of `q`, so `t_orbit(q, τ_q) = q`.
///
/// Uses the closed form rather than composing `W ∘ D^τ ∘ W*`. For `ω = 0`
/// this is a rotation about `±i3` and for the identity it is [`d_tau`].
pub fn t_orbit(q: &QuatMobius, tau: f64) -> QuatMobius {
    let p = extract_polar(q);
    angles_to_params(tau, p.phi, p.lambda)
}

/// `W_φ ∘ D ∘ W_{−φ}` with `D` the diagonal part of `q`; `phi_family(q, φ_q) = q`.
pub fn phi_family(q: &QuatMobius, phi: f64) -> QuatMobius {
    let p = extract_polar(q);
    w_phi(phi, p.lambda)
        .compose(&d_tau(p.tau))
        .compose(&w_phi(-phi, p.lambda))
}

/// `L_λ ∘ D ∘ L_λ*` with `L_λ` the tilt by `φ_q` at longitude `lambda`;
/// `lambda_family(q, arg ω) = q`.
pub fn lambda_family(q: &QuatMobius, lambda: f64) -> QuatMobius {
    let p = extract_polar(q);
    let l = w_phi(p.phi, lambda);
    l.compose(&d_tau(p.tau)).compose(&l.star())
}

/// `U ∘ D^τ ∘ U*`, the rotation by `tau` about the axis with polar angle
/// `phi` and `arg ω = lambda`.
pub fn g_family(phi: f64, lambda: f64, tau: f64) -> QuatMobius {
    let u = w_phi(phi, lambda);
    u.compose(&d_tau(tau)).compose(&u.star())
}

/// How far `m` is from the shape shared by every `phi_family(q, ·)`: same
/// rotation angle as `q`, axis in the meridian plane of `q`'s axis.
pub fn phi_family_residual(q: &QuatMobius, m: &QuatMobius) -> f64 {
    let (pq, pm) = (extract_polar(q), extract_polar(m));
    // normal of the meridian plane through the pole and the axis of q
    let normal = [pq.lambda.cos(), pq.lambda.sin(), 0.0];
    let off_plane = crate::mat3::dot(pm.axis.vector(), normal).abs();
    (pm.tau - pq.tau).abs().max(off_plane)
}

/// How far `m` is from the shape shared by every `lambda_family(q, ·)`: same
/// rotation angle and same axis polar angle as `q`.
pub fn lambda_family_residual(q: &QuatMobius, m: &QuatMobius) -> f64 {
    let (pq, pm) = (extract_polar(q), extract_polar(m));
    (pm.tau - pq.tau).abs().max((pm.phi - pq.phi).abs())
}

/// One point of a sampled orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSample {
    pub parameter: f64,
    pub transform: QuatMobius,
    pub image_of_probe: Option<ExtComplex>,
    pub sphere_image: Option<SpherePoint>,
}

/// The circle `{T_τ(z0)}` at `n` equally spaced `τ ∈ [0, 2π)`.
pub fn sample_invariant_curve(
    q: &QuatMobius,
    z0: ExtComplex,
    n: usize,
) -> Result<Vec<OrbitSample>> {
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    let p = extract_polar(q);
    Ok((0..n)
        .map(|k| {
            let tau = TAU * k as f64 / n as f64;
            let transform = angles_to_params(tau, p.phi, p.lambda);
            let image = transform.eval(z0);
            OrbitSample {
                parameter: tau,
                transform,
                image_of_probe: Some(image),
                sphere_image: Some(stereo_inv(image)),
            }
        })
        .collect())
}
