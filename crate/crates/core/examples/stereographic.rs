//! Stereographic projection between the Riemann sphere and the extended plane.

use quat_mobius::extplane::{chordal_distance, stereo, stereo_inv, ExtComplex, SpherePoint};

fn main() -> Result<(), quat_mobius::Error> {
    let points = [
        SpherePoint::NORTH,
        SpherePoint::SOUTH,
        SpherePoint::new(1.0, 0.0, 0.0)?,
        SpherePoint::new(0.0, 1.0, 0.0)?,
        SpherePoint::new(0.3, -0.4, 0.5)?,
    ];
    for p in points {
        let z = stereo(p);
        let back = stereo_inv(z);
        println!(
            "{:?} -> {z} -> round trip error {:.1e}",
            p.coords(),
            back.distance(&p)
        );
    }

    // arithmetic on the extended plane
    let inf = ExtComplex::Infinity;
    println!(
        "1/0 = {}, 1/inf = {}",
        ExtComplex::ZERO.recip(),
        inf.recip()
    );
    println!("inf - inf -> {:?}", inf.checked_sub(inf));

    // the chordal metric is finite at infinity
    let far = ExtComplex::new(1e8, 0.0)?;
    println!("chordal(1e8, inf) = {:.3e}", chordal_distance(far, inf));
    Ok(())
}
