//! A seeded self-verification suite over random inputs. Each check reports
//! its worst observed error against a fixed tolerance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::bridge::{check_cq_equals_mhat, check_homomorphism, gamma, quat_to_mobius};
use crate::extplane::{stereo, stereo_inv, SpherePoint};
use crate::lie::{
    counterexample_report, expm_so3, fd_generator, generator_fd_error, so3_generator,
    DEFAULT_FD_STEP,
};
use crate::mat3;
use crate::mobius::{pair_set_distance, QuatMobius};
use crate::orbits::{d_tau, t_orbit};
use crate::polar::{decompose, extract_polar, Degeneracy};
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub worst_error: f64,
    pub tolerance: f64,
    /// `worst_error ≥ tolerance` passes instead of `≤`.
    pub lower_bound: bool,
    pub pass: bool,
}

impl CheckResult {
    fn at_most(name: &'static str, worst_error: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            worst_error,
            tolerance,
            lower_bound: false,
            pass: worst_error <= tolerance,
        }
    }

    fn at_least(name: &'static str, worst_error: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            worst_error,
            tolerance,
            lower_bound: true,
            pass: worst_error >= tolerance,
        }
    }
}

/// Uniformly distributed unit quaternion.
pub fn random_unit_quaternion(rng: &mut impl Rng) -> Quaternion {
    loop {
        let c: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
        if let Ok(q) = Quaternion::from_coords(c).normalized() {
            return q;
        }
    }
}

pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    Quaternion::from_coords(std::array::from_fn(|_| StandardNormal.sample(rng)))
}

pub fn random_mobius(rng: &mut impl Rng) -> QuatMobius {
    quat_to_mobius(&random_unit_quaternion(rng)).expect("unit quaternion")
}

/// Runs every check on `iters` random inputs from `seed`.
///
/// A nonzero `perturb` shifts one side of each randomized comparison by a
/// small rotation, so the suite can be shown to fail.
pub fn run_checks(seed: u64, iters: usize, perturb: f64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tweak = |q: QuatMobius| {
        if perturb != 0.0 {
            q.compose(&d_tau(perturb))
        } else {
            q
        }
    };
    let tweak_quat = |q: Quaternion| {
        if perturb != 0.0 {
            q + Quaternion::I3.scale(perturb)
        } else {
            q
        }
    };
    let mut worst = [0.0f64; 9];
    for _ in 0..iters {
        let q = random_unit_quaternion(&mut rng);
        let cq = if perturb != 0.0 {
            let lhs = tweak_quat(q).rotation_matrix().expect("nonzero");
            lhs.max_abs_diff(
                &quat_to_mobius(&q)
                    .expect("unit quaternion")
                    .induced_rotation(),
            )
        } else {
            check_cq_equals_mhat(&q).expect("unit quaternion")
        };
        worst[0] = worst[0].max(cq);

        let (p, r) = (random_quaternion(&mut rng), random_quaternion(&mut rng));
        let hom = if perturb != 0.0 {
            let (gp, gr) = (gamma(&p), gamma(&r));
            let lhs = gamma(&(tweak_quat(p) * r));
            (lhs.zeta - (gp.zeta * gr.zeta - gp.omega * gr.omega.conj())).norm()
        } else {
            check_homomorphism(&p, &r)
        };
        worst[1] = worst[1].max(hom);

        let m = random_mobius(&mut rng);
        worst[2] = worst[2].max(decompose(&m).reconstruction_error(&tweak(m)));

        let rot = tweak(m).induced_rotation();
        for k in 0..3 {
            let mut e = [0.0; 3];
            e[k] = 1.0;
            let image = stereo_inv(m.eval(stereo(SpherePoint::from_array(e).expect("basis"))));
            worst[3] = worst[3].max(mat3::max_abs_vec_diff(
                image.coords(),
                mat3::column(rot.matrix(), k),
            ));
        }

        let (tau, nu) = (rng.random_range(-7.0..7.0), rng.random_range(-7.0..7.0));
        let group = tweak(t_orbit(&m, tau))
            .compose(&t_orbit(&m, nu))
            .probe_distance(&t_orbit(&m, tau + nu));
        let period =
            tweak(t_orbit(&m, tau + std::f64::consts::TAU)).probe_distance(&t_orbit(&m, tau));
        let reach = tweak(t_orbit(&m, extract_polar(&m).tau)).probe_distance(&m);
        worst[4] = worst[4].max(group).max(period).max(reach);

        if !m.is_identity() {
            let fd = if perturb != 0.0 {
                let exact = so3_generator(&tweak(m)).expect("non-identity");
                mat3::max_abs_diff(exact.matrix(), &fd_generator(&m, DEFAULT_FD_STEP))
            } else {
                generator_fd_error(&m, DEFAULT_FD_STEP).expect("non-identity")
            };
            worst[5] = worst[5].max(fd);
            let a = so3_generator(&tweak(m)).expect("non-identity");
            let gap = expm_so3(&a, tau).max_abs_diff(&t_orbit(&m, tau).induced_rotation());
            worst[6] = worst[6].max(gap);
        }

        let polar = extract_polar(&m);
        if polar.degenerate != Degeneracy::Identity {
            let fixed = tweak(m).fixed_points().expect("non-identity");
            worst[7] = worst[7].max(pair_set_distance(fixed, polar.axis_fixed_points()));
        }
    }
    let report = counterexample_report();
    worst[8] = report.mismatch;
    vec![
        CheckResult::at_most("cq_equals_mhat", worst[0], 1e-11),
        CheckResult::at_most("homomorphism", worst[1], 1e-12),
        CheckResult::at_most("polar_reconstruction", worst[2], 1e-9),
        CheckResult::at_most("column_oracle", worst[3], 1e-9),
        CheckResult::at_most("orbit_laws", worst[4], 1e-9),
        CheckResult::at_most("generator_finite_difference", worst[5], 1e-8),
        CheckResult::at_most("exponential_orbit", worst[6], 1e-9),
        CheckResult::at_most("fixed_points", worst[7], 1e-8),
        CheckResult::at_most("counterexample_rotation", report.rotation_error, 1e-12),
        CheckResult::at_least("counterexample_mismatch", worst[8], 0.5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let results = run_checks(1, 100, 0.0);
        assert!(results.iter().all(|r| r.pass), "{results:#?}");
    }

    #[test]
    fn same_seed_same_numbers() {
        assert_eq!(run_checks(5, 30, 0.0), run_checks(5, 30, 0.0));
    }

    #[test]
    fn perturbation_is_detected() {
        let results = run_checks(1, 30, 1e-4);
        let failed = results.iter().filter(|r| !r.pass).count();
        assert!(failed >= 8, "{results:#?}");
    }
}
