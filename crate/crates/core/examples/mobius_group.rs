//! Möbius maps compose like matrices; the quaternionic ones are sphere rotations.

use num_complex::Complex64;
use quat_mobius::extplane::ExtComplex;
use quat_mobius::mobius::{GeneralMobius, QuatMobius};

fn main() -> Result<(), quat_mobius::Error> {
    let c = Complex64::new;
    let shear = GeneralMobius::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0))?;
    let flip = GeneralMobius::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))?;
    let both = flip.compose(&shear);
    for z in [ExtComplex::ZERO, ExtComplex::I, ExtComplex::Infinity] {
        println!("flip(shear({z})) = {}", both.eval(z));
    }
    println!("shear is quaternionic: {}", shear.as_quat_mobius().is_ok());
    println!("1/z as Q(zeta, omega): {:?}", flip.as_quat_mobius()?);

    let p = QuatMobius::new(c(0.8, 0.1), c(0.3, -0.5))?;
    let q = QuatMobius::new(c(0.2, 0.9), c(-0.1, 0.4))?;
    let pq = p.compose(&q);
    let gap = pq
        .induced_rotation()
        .max_abs_diff(&p.induced_rotation().compose(&q.induced_rotation()));
    println!("rotation of a composition vs product of rotations: {gap:.1e}");
    println!(
        "p then its inverse, probe distance from identity: {:.1e}",
        p.compose(&p.inverse())
            .probe_distance(&QuatMobius::IDENTITY)
    );

    let (z1, z2) = p.fixed_points()?;
    println!("fixed points of p: {z1}, {z2}");
    Ok(())
}
