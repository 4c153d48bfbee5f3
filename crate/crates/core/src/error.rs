use thiserror::Error;

/// Errors raised by the geometric operations of this crate.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("quaternion has zero norm")]
    ZeroQuaternion,
    #[error("parameters (ζ, ω) are both zero or non-finite")]
    ZeroParameters,
    #[error("axis is (anti)parallel to the polar axis; adapted frame undefined")]
    PolarAxisDegenerate,
    #[error("coefficients do not have the quaternionic pattern (ζ, −ω, ω̄, ζ̄)")]
    NotQuaternionic,
    #[error("transformation is the identity")]
    IdentityTransform,
    #[error("orbit generator undefined for the identity transformation")]
    DegenerateOrbit,
    #[error("singular Möbius coefficients: |ad − bc| = {0:e}")]
    Singular(f64),
    #[error("indeterminate form {0}")]
    Indeterminate(&'static str),
    #[error("matrix is not skew-symmetric: max |A + Aᵀ| = {0:e}")]
    NotSkew(f64),
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("non-finite input")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
