//! Sample the circle a point traces under the one-parameter orbit of a rotation.

use num_complex::Complex64;
use quat_mobius::extplane::ExtComplex;
use quat_mobius::orbits::sample_invariant_curve;
use quat_mobius::polar::{angles_to_params, extract_polar};

fn main() -> Result<(), quat_mobius::Error> {
    let q = angles_to_params(2.0, 1.0, 0.5);
    let axis = extract_polar(&q).axis.vector();
    let z0 = ExtComplex::Finite(Complex64::new(0.4, -1.5));
    println!("tau,re,im,eta1,eta2,eta3,height");
    for s in sample_invariant_curve(&q, z0, 12)? {
        let eta = s.sphere_image.expect("sampled").coords();
        let z = s.image_of_probe.expect("sampled");
        let (re, im) = z
            .finite()
            .map_or((f64::INFINITY, f64::INFINITY), |z| (z.re, z.im));
        let height: f64 = (0..3).map(|k| eta[k] * axis[k]).sum();
        println!(
            "{:.4},{re:.6},{im:.6},{:.6},{:.6},{:.6},{height:.12}",
            s.parameter, eta[0], eta[1], eta[2]
        );
    }
    Ok(())
}
