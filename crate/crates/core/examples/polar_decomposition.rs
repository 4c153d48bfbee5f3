//! Split a rotation into an axis-aligning map and a rotation about the pole.

use num_complex::Complex64;
use quat_mobius::mobius::QuatMobius;
use quat_mobius::polar::{angles_to_params, decompose, extract_polar};

fn main() -> Result<(), quat_mobius::Error> {
    let q = QuatMobius::new(Complex64::new(0.5, 0.5), Complex64::new(0.5f64.sqrt(), 0.0))?;
    let p = extract_polar(&q);
    println!("axis {:?}", p.axis.vector());
    println!(
        "angle {:.6} polar angle {:.6} arg omega {:.6} ({:?})",
        p.tau, p.phi, p.lambda, p.degenerate
    );

    let dec = decompose(&q);
    println!("W = {:?}\nD = {:?}", dec.w, dec.d);
    println!(
        "W moves the pole to {:?}",
        dec.w.induced_rotation().apply([0.0, 0.0, 1.0])
    );
    println!("reconstruction error {:.1e}", dec.reconstruction_error(&q));

    let again = angles_to_params(p.tau, p.phi, p.lambda);
    println!(
        "rebuilt from angles, probe distance {:.1e}",
        again.probe_distance(&q)
    );

    for degenerate in [
        QuatMobius::IDENTITY,
        QuatMobius::new(Complex64::new(0.6, -0.8), Complex64::new(0.0, 0.0))?,
    ] {
        let p = extract_polar(&degenerate);
        println!(
            "{:?}: axis {:?}, angle {:.4}",
            p.degenerate,
            p.axis.vector(),
            p.tau
        );
    }
    Ok(())
}
