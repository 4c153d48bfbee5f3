pub mod bridge;
pub mod checks;
pub mod cli;
pub mod error;
pub mod extplane;
pub mod lie;
pub mod mat3;
pub mod mobius;
pub mod orbits;
pub mod polar;
pub mod quaternion;
pub mod rotation;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
