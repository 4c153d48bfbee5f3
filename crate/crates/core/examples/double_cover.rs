//! Quaternions map two-to-one onto transformations, turning products into compositions.

use quat_mobius::bridge::{
    check_cq_equals_mhat, check_homomorphism, gamma, gamma_inv, quat_to_mobius,
};
use quat_mobius::quaternion::Quaternion;

fn main() -> Result<(), quat_mobius::Error> {
    let q = Quaternion::new(0.5, -0.1, 0.7, 0.5).normalized()?;
    let pair = gamma(&q);
    println!("q = {q:?}\nparameters = {pair:?}");
    println!("back to the quaternion exactly: {}", gamma_inv(&pair) == q);

    let (plus, minus) = (quat_to_mobius(&q)?, quat_to_mobius(&-q)?);
    println!("q and -q give the same map: {}", plus == minus);
    println!(
        "conjugation matrix vs induced rotation: {:.1e}",
        check_cq_equals_mhat(&q)?
    );

    let p = Quaternion::new(0.1, 0.2, -0.3, 0.9);
    println!(
        "parameters of pq vs composition law: {:.1e}",
        check_homomorphism(&p, &q)
    );
    Ok(())
}
