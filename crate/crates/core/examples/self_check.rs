//! Run the randomized invariant suite from a seed.

use quat_mobius::checks::run_checks;

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    for c in run_checks(seed, 300, 0.0) {
        let rel = if c.lower_bound { ">=" } else { "<=" };
        println!(
            "{:<28} {:.3e} {rel} {:.0e}  {}",
            c.name,
            c.worst_error,
            c.tolerance,
            if c.pass { "ok" } else { "FAIL" }
        );
    }
}
