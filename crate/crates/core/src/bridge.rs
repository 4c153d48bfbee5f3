//! The bijection between quaternions and Möbius parameter pairs, under
//! which quaternion multiplication becomes composition of maps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::QuatMobius;
use crate::quaternion::Quaternion;

/// Raw `(ζ, ω)` parameters. Unlike [`QuatMobius`] this keeps the sign, so
/// `q` and `−q` give different pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    pub zeta: Complex64,
    pub omega: Complex64,
}

impl ParamPair {
    pub fn new(zeta: Complex64, omega: Complex64) -> Self {
        ParamPair { zeta, omega }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.zeta.norm_sqr() + self.omega.norm_sqr()
    }

    /// Normalizes and canonicalizes into a transformation.
    pub fn to_mobius(&self) -> Result<QuatMobius> {
        QuatMobius::new(self.zeta, self.omega)
    }

    /// Parameters of a transformation in its canonical sign.
    pub fn from_mobius(m: &QuatMobius) -> Self {
        ParamPair {
            zeta: m.zeta(),
            omega: m.omega(),
        }
    }

    pub fn max_abs_diff(&self, other: &ParamPair) -> f64 {
        (self.zeta - other.zeta)
            .norm()
            .max((self.omega - other.omega).norm())
    }
}

/// `q ↦ (q0 + i·q3, q2 − i·q1)`.
pub fn gamma(q: &Quaternion) -> ParamPair {
    ParamPair {
        zeta: Complex64::new(q.w, q.z),
        omega: Complex64::new(q.y, -q.x),
    }
}

/// `(ζ, ω) ↦ Re ζ − Im ω·i1 + Re ω·i2 + Im ζ·i3`.
pub fn gamma_inv(p: &ParamPair) -> Quaternion {
    Quaternion::new(p.zeta.re, -p.omega.im, p.omega.re, p.zeta.im)
}

/// The transformation corresponding to a nonzero quaternion.
pub fn quat_to_mobius(q: &Quaternion) -> Result<QuatMobius> {
    gamma(q).to_mobius().map_err(|_| Error::ZeroQuaternion)
}

/// Max-abs gap between the conjugation matrix of `q` and the sphere rotation
/// induced by its transformation.
pub fn check_cq_equals_mhat(q: &Quaternion) -> Result<f64> {
    let conj = q.rotation_matrix()?;
    let induced = quat_to_mobius(q)?.induced_rotation();
    Ok(conj.max_abs_diff(&induced))
}

/// Gap between the parameters of `pq` and the composition law applied to
/// the parameters of `p` and `q`.
pub fn check_homomorphism(p: &Quaternion, q: &Quaternion) -> f64 {
    let lhs = gamma(&(*p * *q));
    let (gp, gq) = (gamma(p), gamma(q));
    let rhs = ParamPair {
        zeta: gp.zeta * gq.zeta - gp.omega * gq.omega.conj(),
        omega: gp.zeta * gq.omega + gp.omega * gq.zeta.conj(),
    };
    lhs.max_abs_diff(&rhs)
}
