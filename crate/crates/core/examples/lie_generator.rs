//! The orbit's tangent at the identity, checked against finite differences
//! and exponentiated back to the orbit.

use quat_mobius::lie::{
    expm_so3, generator_fd_error, so3_generator, t_prime_zero, tangent_fd_error,
};
use quat_mobius::orbits::t_orbit;
use quat_mobius::polar::angles_to_params;

fn main() -> Result<(), quat_mobius::Error> {
    let q = angles_to_params(1.2, 0.7, -2.0);
    let a = so3_generator(&q)?;
    println!("generator {:?}", a.matrix());
    println!("tangent map {:?}", t_prime_zero(&q)?);

    for h in [1e-4, 1e-5, 5e-6, 1e-6] {
        println!(
            "h = {h:e}: matrix error {:.3e}, coefficient error {:.3e}",
            generator_fd_error(&q, h)?,
            tangent_fd_error(&q, h)?
        );
    }
    for tau in [0.5, 1.5, 3.0] {
        let gap = expm_so3(&a, tau).max_abs_diff(&t_orbit(&q, tau).induced_rotation());
        println!("exp({tau} A) vs orbit rotation: {gap:.1e}");
    }
    Ok(())
}
