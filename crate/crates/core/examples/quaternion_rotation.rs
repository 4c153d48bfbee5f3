//! Unit quaternions rotate vectors by conjugation `h ↦ q h q⁻¹`.

use std::f64::consts::FRAC_PI_4;

use quat_mobius::quaternion::{Quaternion, UnitPureQuaternion};

fn main() -> Result<(), quat_mobius::Error> {
    // e^{i3 π/4} turns by π/2 about the third axis
    let q = UnitPureQuaternion::I3.exp(FRAC_PI_4);
    let image = q.conjugate_by(&Quaternion::I1)?;
    println!("q = {q:?}");
    println!("q i1 q^-1 = {image:?}");

    let polar = q.to_polar()?;
    println!(
        "polar form: norm {}, angle {}, axis {:?}",
        polar.norm,
        polar.theta,
        polar.axis.vector()
    );

    let r = q.rotation_matrix()?;
    println!("rotation matrix {:?}", r.matrix());
    println!(
        "det {:.3}, orthogonality error {:.1e}",
        r.det(),
        r.orthogonality_error()
    );

    // the frame (u, v, w) attached to an axis
    let u = UnitPureQuaternion::new([1.0, 2.0, 2.0])?;
    let (u, v, w) = u.adapted_frame()?;
    println!(
        "frame u {:?}\n      v {:?}\n      w {:?}",
        u.vector(),
        v.vector(),
        w.vector()
    );
    Ok(())
}
