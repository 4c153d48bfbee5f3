//! Pulling the tangent map back to the sphere point by point does not give
//! the skew generator.

use quat_mobius::lie::counterexample_report;

fn main() {
    let r = counterexample_report();
    println!(
        "rotation about e1 by {}: {:?} (error {:.1e})",
        r.tau, r.rotation, r.rotation_error
    );
    println!("skew generator {:?}", r.generator);
    for (z, image) in r.probe_images {
        println!("tangent map: {z} -> {image}");
    }
    println!("assembled sphere matrix {:?}", r.assembled);
    println!(
        "skew error {:.3}, mismatch with generator {:.3}",
        r.assembled_skew_error, r.mismatch
    );
    println!("gap to diag(1, -1, 0): {:.3}", r.quoted_assembly_gap);
    println!("tangent map pulled back is not in so(3): {}", r.not_in_so3);
}
