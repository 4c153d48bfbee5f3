//! Command-line front end. [`run`] parses arguments, writes data to `out`
//! and diagnostics to `err`, and returns the process exit code:
//! 0 on success, 1 when `check` finds a failing invariant, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::bridge::{gamma, gamma_inv, quat_to_mobius, ParamPair};
use crate::checks::run_checks;
use crate::extplane::ExtComplex;
use crate::lie::so3_generator;
use crate::mat3::{Mat3, Vec3};
use crate::mobius::QuatMobius;
use crate::orbits::sample_invariant_curve;
use crate::polar::{angles_to_params, decompose, extract_polar};
use crate::quaternion::Quaternion;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Overrides `--seed` for `check`.
pub const SEED_ENV: &str = "MOBIUS_ORBITS_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "quat-mobius",
    version,
    about = "Quaternionic Möbius transformations as sphere rotations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Axis, angle, polar decomposition and fixed points.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sample the invariant curve through a point.
    Orbit {
        #[command(flatten)]
        input: InputArgs,
        /// Starting point as `re,im` or `inf`.
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        z0: String,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Induced rotation, conjugation matrix and generator.
    Rotmat {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Express the input as parameters, quaternion and angles.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the randomized invariant suite.
    Check {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        iters: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 0.0, hide = true)]
        perturb: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// ζ as `re,im`; requires --omega.
    #[arg(long, allow_hyphen_values = true, requires = "omega", conflicts_with_all = ["quat", "angles"])]
    zeta: Option<String>,
    /// ω as `re,im`; requires --zeta.
    #[arg(long, allow_hyphen_values = true, requires = "zeta")]
    omega: Option<String>,
    /// Quaternion as `q0,q1,q2,q3`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "angles")]
    quat: Option<String>,
    /// Rotation angles `φ,λ,τ` in radians, with λ = arg ω.
    #[arg(long, allow_hyphen_values = true)]
    angles: Option<String>,
}

#[derive(Debug)]
struct UsageError(String);

fn parse_reals<const N: usize>(flag: &str, s: &str) -> Result<[f64; N], UsageError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(UsageError(format!(
            "--{flag} expects {N} comma-separated numbers, got {s:?}"
        )));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        let v: f64 = part
            .parse()
            .map_err(|_| UsageError(format!("--{flag}: cannot parse {part:?}")))?;
        if !v.is_finite() {
            return Err(UsageError(format!("--{flag}: {part:?} is not finite")));
        }
        *slot = v;
    }
    Ok(out)
}

fn parse_point(s: &str) -> Result<ExtComplex, UsageError> {
    if s.trim().eq_ignore_ascii_case("inf") {
        return Ok(ExtComplex::Infinity);
    }
    let [re, im] = parse_reals::<2>("z0", s)?;
    Ok(ExtComplex::Finite(Complex64::new(re, im)))
}

impl InputArgs {
    fn resolve(&self) -> Result<QuatMobius, UsageError> {
        match (&self.zeta, &self.omega, &self.quat, &self.angles) {
            (Some(z), Some(w), None, None) => {
                let [zr, zi] = parse_reals::<2>("zeta", z)?;
                let [wr, wi] = parse_reals::<2>("omega", w)?;
                QuatMobius::new(Complex64::new(zr, zi), Complex64::new(wr, wi))
                    .map_err(|e| UsageError(e.to_string()))
            }
            (None, None, Some(q), None) => {
                let q = Quaternion::from_coords(parse_reals::<4>("quat", q)?);
                quat_to_mobius(&q).map_err(|e| UsageError(e.to_string()))
            }
            (None, None, None, Some(a)) => {
                let [phi, lambda, tau] = parse_reals::<3>("angles", a)?;
                Ok(angles_to_params(tau, phi, lambda))
            }
            _ => Err(UsageError(
                "give exactly one of --zeta/--omega, --quat or --angles".into(),
            )),
        }
    }
}

#[derive(Serialize)]
struct JsonComplex {
    re: f64,
    im: f64,
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonPoint {
    Finite { re: f64, im: f64 },
    Infinity { is_infinity: bool },
}

impl From<ExtComplex> for JsonPoint {
    fn from(z: ExtComplex) -> Self {
        match z {
            ExtComplex::Finite(z) => JsonPoint::Finite { re: z.re, im: z.im },
            ExtComplex::Infinity => JsonPoint::Infinity { is_infinity: true },
        }
    }
}

#[derive(Serialize)]
struct JsonParams {
    zeta: JsonComplex,
    omega: JsonComplex,
}

impl From<&QuatMobius> for JsonParams {
    fn from(q: &QuatMobius) -> Self {
        JsonParams {
            zeta: q.zeta().into(),
            omega: q.omega().into(),
        }
    }
}

#[derive(Serialize)]
struct DecomposeReport {
    zeta: JsonComplex,
    omega: JsonComplex,
    axis: Vec3,
    tau: f64,
    phi: f64,
    lambda: f64,
    #[serde(rename = "W")]
    w: JsonParams,
    #[serde(rename = "D")]
    d: JsonParams,
    fixed_points: Option<[JsonPoint; 2]>,
    degenerate: &'static str,
    reconstruction_error: f64,
}

#[derive(Serialize)]
struct OrbitRow {
    tau: f64,
    z: JsonPoint,
    eta: Vec3,
}

#[derive(Serialize)]
struct RotmatReport {
    mhat: Mat3,
    cq: Mat3,
    generator: Option<Mat3>,
    max_abs_diff: f64,
}

#[derive(Serialize)]
struct ConvertReport {
    zeta: JsonComplex,
    omega: JsonComplex,
    quaternion: [f64; 4],
    phi: f64,
    lambda: f64,
    tau: f64,
}

#[derive(Serialize)]
struct CheckReport {
    seed: u64,
    iters: usize,
    checks: Vec<crate::checks::CheckResult>,
    all_pass: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn cmd_decompose(q: &QuatMobius, format: Format) -> String {
    let polar = extract_polar(q);
    let dec = decompose(q);
    let report = DecomposeReport {
        zeta: q.zeta().into(),
        omega: q.omega().into(),
        axis: polar.axis.vector(),
        tau: polar.tau,
        phi: polar.phi,
        lambda: polar.lambda,
        w: (&dec.w).into(),
        d: (&dec.d).into(),
        fixed_points: q.fixed_points().ok().map(|(a, b)| [a.into(), b.into()]),
        degenerate: polar.degenerate.as_str(),
        reconstruction_error: dec.reconstruction_error(q),
    };
    match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let [ax, ay, az] = report.axis;
            format!(
                "zeta_re,zeta_im,omega_re,omega_im,axis_x,axis_y,axis_z,tau,phi,lambda,degenerate,reconstruction_error\n\
                 {:?},{:?},{:?},{:?},{ax:?},{ay:?},{az:?},{:?},{:?},{:?},{},{:?}",
                q.zeta().re,
                q.zeta().im,
                q.omega().re,
                q.omega().im,
                report.tau,
                report.phi,
                report.lambda,
                report.degenerate,
                report.reconstruction_error
            )
        }
    }
}

fn cmd_orbit(
    q: &QuatMobius,
    z0: ExtComplex,
    n: usize,
    format: Format,
) -> Result<String, UsageError> {
    let samples = sample_invariant_curve(q, z0, n).map_err(|e| UsageError(e.to_string()))?;
    let rows: Vec<OrbitRow> = samples
        .iter()
        .map(|s| OrbitRow {
            tau: s.parameter,
            z: s.image_of_probe.expect("sampled").into(),
            eta: s.sphere_image.expect("sampled").coords(),
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut out = String::from("tau,re,im,is_infinity,eta1,eta2,eta3");
            for (row, s) in rows.iter().zip(&samples) {
                let (re, im, inf) = match s.image_of_probe.expect("sampled") {
                    ExtComplex::Finite(z) => (format!("{:?}", z.re), format!("{:?}", z.im), false),
                    ExtComplex::Infinity => (String::new(), String::new(), true),
                };
                let [e1, e2, e3] = row.eta;
                out.push_str(&format!(
                    "\n{:?},{re},{im},{inf},{e1:?},{e2:?},{e3:?}",
                    row.tau
                ));
            }
            out
        }
    })
}

fn cmd_rotmat(q: &QuatMobius, format: Format) -> String {
    let mhat = *q.induced_rotation().matrix();
    let cq = *gamma_inv(&ParamPair::from_mobius(q))
        .rotation_matrix()
        .expect("unit quaternion")
        .matrix();
    let report = RotmatReport {
        mhat,
        cq,
        generator: so3_generator(q).ok().map(|a| *a.matrix()),
        max_abs_diff: crate::mat3::max_abs_diff(&mhat, &cq),
    };
    match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("matrix,row,c0,c1,c2");
            let named = [
                ("mhat", Some(report.mhat)),
                ("cq", Some(report.cq)),
                ("generator", report.generator),
            ];
            for (name, m) in named {
                if let Some(m) = m {
                    for (r, row) in m.iter().enumerate() {
                        out.push_str(&format!(
                            "\n{name},{r},{:?},{:?},{:?}",
                            row[0], row[1], row[2]
                        ));
                    }
                }
            }
            out
        }
    }
}

fn cmd_convert(q: &QuatMobius, format: Format) -> String {
    let polar = extract_polar(q);
    let quaternion = gamma_inv(&ParamPair::from_mobius(q)).coords();
    debug_assert_eq!(
        gamma(&Quaternion::from_coords(quaternion)),
        ParamPair::from_mobius(q)
    );
    let report = ConvertReport {
        zeta: q.zeta().into(),
        omega: q.omega().into(),
        quaternion,
        phi: polar.phi,
        lambda: polar.lambda,
        tau: polar.tau,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let [q0, q1, q2, q3] = quaternion;
            format!(
                "zeta_re,zeta_im,omega_re,omega_im,q0,q1,q2,q3,phi,lambda,tau\n{:?},{:?},{:?},{:?},{q0:?},{q1:?},{q2:?},{q3:?},{:?},{:?},{:?}",
                q.zeta().re,
                q.zeta().im,
                q.omega().re,
                q.omega().im,
                polar.phi,
                polar.lambda,
                polar.tau
            )
        }
    }
}

fn cmd_check(seed: u64, iters: usize, perturb: f64, format: Format) -> (String, bool) {
    let checks = run_checks(seed, iters, perturb);
    let all_pass = checks.iter().all(|c| c.pass);
    let text = match format {
        Format::Json => to_json(&CheckReport {
            seed,
            iters,
            checks,
            all_pass,
        }),
        Format::Csv => {
            let mut out = String::from("name,worst_error,tolerance,lower_bound,pass");
            for c in &checks {
                out.push_str(&format!(
                    "\n{},{:?},{:?},{},{}",
                    c.name, c.worst_error, c.tolerance, c.lower_bound, c.pass
                ));
            }
            out
        }
    };
    (text, all_pass)
}

fn seed_from_env(default: u64) -> Result<u64, UsageError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("{SEED_ENV}: cannot parse {v:?} as a seed"))),
        Err(_) => Ok(default),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, UsageError> {
    let (text, code) = match command {
        Command::Decompose { input, format } => (cmd_decompose(&input.resolve()?, format), EXIT_OK),
        Command::Orbit {
            input,
            z0,
            n,
            format,
        } => {
            let q = input.resolve()?;
            (cmd_orbit(&q, parse_point(&z0)?, n, format)?, EXIT_OK)
        }
        Command::Rotmat { input, format } => (cmd_rotmat(&input.resolve()?, format), EXIT_OK),
        Command::Convert { input, format } => (cmd_convert(&input.resolve()?, format), EXIT_OK),
        Command::Check {
            seed,
            iters,
            format,
            perturb,
        } => {
            let (text, ok) = cmd_check(seed_from_env(seed)?, iters, perturb, format);
            (text, if ok { EXIT_OK } else { EXIT_INVARIANT_FAILURE })
        }
    };
    writeln!(out, "{text}").map_err(|e| UsageError(format!("writing output: {e}")))?;
    Ok(code)
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
