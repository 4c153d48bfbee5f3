//! Families of rotations through a given one: vary the angle, the tilt or the longitude.

use std::f64::consts::PI;

use quat_mobius::orbits::{
    g_family, lambda_family, lambda_family_residual, phi_family, phi_family_residual, t_orbit,
};
use quat_mobius::polar::{angles_to_params, extract_polar};

fn main() {
    let q = angles_to_params(1.3, 0.9, 0.4);
    let p = extract_polar(&q);

    for k in 0..4 {
        let tau = k as f64 * PI / 2.0;
        let t = t_orbit(&q, tau);
        println!(
            "T({tau:.3}) angle {:.3}, axis {:?}",
            extract_polar(&t).tau,
            extract_polar(&t).axis.vector()
        );
    }
    println!(
        "T at its own angle equals q: {:.1e}",
        t_orbit(&q, p.tau).probe_distance(&q)
    );
    let law = t_orbit(&q, 0.7)
        .compose(&t_orbit(&q, 1.1))
        .probe_distance(&t_orbit(&q, 1.8));
    println!("T(0.7) T(1.1) vs T(1.8): {law:.1e}");

    println!(
        "phi family at the own tilt equals q: {:.1e}",
        phi_family(&q, p.phi).probe_distance(&q)
    );
    println!(
        "lambda family at the own longitude equals q: {:.1e}",
        lambda_family(&q, p.lambda).probe_distance(&q)
    );
    println!(
        "all angles rebuild q: {:.1e}",
        g_family(p.phi, p.lambda, p.tau).probe_distance(&q)
    );

    // these two families are not closed under composition
    let phi_pair = phi_family(&q, 0.5).compose(&phi_family(&q, 1.1));
    let lambda_pair = lambda_family(&q, 0.3).compose(&lambda_family(&q, 1.7));
    println!(
        "phi family composite leaves the family by {:.3}",
        phi_family_residual(&q, &phi_pair)
    );
    println!(
        "lambda family composite leaves the family by {:.3}",
        lambda_family_residual(&q, &lambda_pair)
    );
}
