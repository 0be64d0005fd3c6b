use std::path::Path;

use xi_harmonic::duffin::{
    boundary_recovery, find_zeros, rh_criterion_scan, scan_scheme, verify_duffin_with, verify_rh_criterion, SummationMethod,
    SummationScheme, ZerosTable, DEFAULT_Y_SEQ, DUFFIN_GRID,
};
use xi_harmonic::identities::dirichlet::{verify_boundary_limit, verify_dirichlet, BoundaryData};
use xi_harmonic::identities::eq11::verify_eq11;
use xi_harmonic::identities::harmonicity::harmonicity_check;
use xi_harmonic::identities::laplace_chain::verify_laplace_chain;
use xi_harmonic::identities::rk::verify_rk_identity;
use xi_harmonic::identities::upsilon::verify_upsilon;
use xi_harmonic::identities::{Convention, PassRule};
use xi_harmonic::{Complex64, Tolerances, VerificationReport};

use crate::args::*;
use crate::output;

pub const EQ11_GRID: [f64; 6] = [0.0, 0.25, 0.5, 1.0, 2.0, 4.0];
pub const UPSILON_S: [(f64, f64); 5] = [(1.5, 0.0), (2.0, 0.0), (2.5, 0.0), (3.0, 0.0), (2.0, 1.0)];
pub const DIRICHLET_PAIRS: [(usize, f64); 4] = [(1, 1.0), (1, 2.0), (2, 1.0), (2, 2.0)];
pub const LAPLACE_CASES: [(usize, f64); 2] = [(1, 2.0), (2, 3.0)];
pub const HARMONICITY_POINTS: [(usize, f64); 2] = [(1, 1.0), (2, 2.0)];
pub const BOUNDARY_XS: [f64; 2] = [0.0, 1.0];
pub const BOUNDARY_YS: [f64; 3] = [0.5, 0.1, 0.02];
pub const DUFFIN_BOUNDARY_YS: [f64; 7] = [1.0, 0.5, 0.2, 0.1, 0.01, 1e-3, 1e-4];

/// Why a run stopped: bad arguments (exit 2) or a failed computation (exit 1).
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Run(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Run(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// The tolerances a run is judged against.
fn rule(common: &Common, default_rel: f64) -> Result<PassRule, Failure> {
    let rel = common.rel_tol.unwrap_or(default_rel);
    let abs = common.abs_tol.unwrap_or(rel);
    for (name, v) in [("--rel-tol", rel), ("--abs-tol", abs)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(usage(format!("{name} must be a positive finite number, got {v}")));
        }
    }
    Ok(PassRule::new(rel, abs))
}

/// Quadrature tolerances: the measured default for the command, tightened to
/// a hundredth of the requested accuracy when that is stricter.
fn compute_tol(rule: PassRule, base: Tolerances) -> Tolerances {
    Tolerances::clamped(base.rel_tol.min(1e-2 * rule.rel_tol), base.abs_tol.min(1e-2 * rule.abs_tol))
}

fn parse_s(text: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| usage(format!("--s expects re[,im], got {text:?}")));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(usage(format!("--s expects re[,im], got {text:?}"))),
    }
}

fn nonempty<T: Clone>(v: &Option<Vec<T>>, default: &[T], flag: &str) -> Result<Vec<T>, Failure> {
    match v {
        Some(v) if v.is_empty() => Err(usage(format!("{flag} needs at least one value"))),
        Some(v) => Ok(v.clone()),
        None => Ok(default.to_vec()),
    }
}

fn scheme(args: &SchemeArgs, base: SummationScheme) -> Result<SummationScheme, Failure> {
    let mut s = base;
    if let Some(m) = args.scheme {
        s.method = match m {
            SchemeArg::Partial => SummationMethod::Partial,
            SchemeArg::Abel => SummationMethod::Abel,
            SchemeArg::Cesaro => SummationMethod::Cesaro,
        };
    }
    if let Some(m) = args.m_max {
        s.m_max = m;
    }
    if let Some(n) = args.n_max {
        s.n_max = n;
    }
    s.validate().map_err(|e| usage(e.to_string()))?;
    Ok(s)
}

fn strictly_decreasing(v: &[f64], flag: &str) -> Result<(), Failure> {
    if v.windows(2).any(|w| w[1] >= w[0]) || v.iter().any(|y| y.is_nan() || *y <= 0.0) {
        return Err(usage(format!("{flag} must be positive and strictly decreasing")));
    }
    Ok(())
}

/// What a command produced: reports (exit status from their verdicts) or a
/// data table that is valid by construction.
pub enum Outcome {
    Reports(Vec<VerificationReport>, Common),
    Text(String, Common),
}

fn verify(v: &Verify) -> Result<Outcome, Failure> {
    let reports = match v {
        Verify::Eq11(a) => {
            let xs = nonempty(&a.x, &EQ11_GRID, "--x")?;
            let r = rule(&a.common, 1e-8)?;
            return Ok(Outcome::Reports(verify_eq11(&xs, compute_tol(r, Tolerances::default()), r)?, a.common.clone()));
        }
        Verify::Upsilon(a) => {
            let s: Vec<Complex64> = if a.s.is_empty() {
                UPSILON_S.iter().map(|&(re, im)| Complex64::new(re, im)).collect()
            } else {
                a.s.iter().map(|t| parse_s(t)).collect::<Result<_, _>>()?
            };
            let r = rule(&a.common, 1e-8)?;
            (verify_upsilon(&s, compute_tol(r, Tolerances::default()), r)?, &a.common)
        }
        Verify::Dirichlet(a) => {
            let pairs: Vec<(usize, f64)> = match (a.n, &a.y) {
                (None, None) => DIRICHLET_PAIRS.to_vec(),
                _ => {
                    let ns = a.n.map_or(vec![1, 2], |n| vec![n]);
                    let ys = nonempty(&a.y, &[1.0, 2.0], "--y")?;
                    ns.iter().flat_map(|&n| ys.iter().map(move |&y| (n, y))).collect()
                }
            };
            let r = rule(&a.common, 1e-6)?;
            (verify_dirichlet(&pairs, compute_tol(r, Tolerances::clamped(1e-8, 1e-8)), r)?, &a.common)
        }
        Verify::LaplaceChain(a) => {
            let cases: Vec<(usize, Complex64)> = match (a.n, a.s.is_empty()) {
                (None, true) => LAPLACE_CASES.iter().map(|&(n, s)| (n, Complex64::new(s, 0.0))).collect(),
                _ => {
                    let ns = a.n.map_or(vec![1, 2], |n| vec![n]);
                    let ss: Vec<Complex64> = if a.s.is_empty() {
                        vec![Complex64::new(3.0, 0.0)]
                    } else {
                        a.s.iter().map(|t| parse_s(t)).collect::<Result<_, _>>()?
                    };
                    ns.iter().flat_map(|&n| ss.iter().map(move |&s| (n, s))).collect()
                }
            };
            let mut out = Vec::new();
            for (n, s) in cases {
                let r = rule(&a.common, if n == 1 { 1e-6 } else { 1e-5 })?;
                let base = if n == 1 { Tolerances::default() } else { Tolerances::clamped(1e-8, 1e-8) };
                out.push(verify_laplace_chain(n, s, compute_tol(r, base), r)?);
            }
            (out, &a.common)
        }
        Verify::Rk(a) => {
            rule(&a.common, 1.0)?;
            (verify_rk_identity(a.k_max, a.n_max)?, &a.common)
        }
        Verify::Duffin(a) => {
            let points: Vec<(f64, f64)> = match (&a.x, &a.y) {
                (None, None) => DUFFIN_GRID.to_vec(),
                _ => {
                    let xs = nonempty(&a.x, &[1.0, 2.0], "--x")?;
                    let ys = nonempty(&a.y, &[1.0, 2.0, 4.0], "--y")?;
                    xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
                }
            };
            let r = rule(&a.common, 1e-4)?;
            let conventions: &[Convention] = match a.convention {
                ConventionArg::Plain => &[Convention::Plain],
                ConventionArg::Twopi => &[Convention::TwoPi],
                ConventionArg::Auto => &[Convention::Plain, Convention::TwoPi],
            };
            let s = scheme(&a.scheme, SummationScheme::default())?;
            (verify_duffin_with(&points, &s, compute_tol(r, Tolerances::default()), r, conventions)?.0, &a.common)
        }
        Verify::Harmonicity(a) => {
            let points: Vec<(usize, f64)> = match (a.n, &a.y) {
                (None, None) => HARMONICITY_POINTS.to_vec(),
                _ => {
                    let ns = a.n.map_or(vec![1, 2], |n| vec![n]);
                    let ys = nonempty(&a.y, &[1.0], "--y")?;
                    ns.iter().flat_map(|&n| ys.iter().map(move |&y| (n, y))).collect()
                }
            };
            if a.h.is_nan() || a.h <= 0.0 {
                return Err(usage("--h must be positive"));
            }
            // judged on residual size and reduction, not on a tolerance
            rule(&a.common, 1.0)?;
            let tol = Tolerances::default();
            let out = points
                .iter()
                .map(|&(n, y)| harmonicity_check(BoundaryData::new(n)?, &vec![0.0; n], y, a.h, tol))
                .collect::<Result<Vec<_>, _>>()?;
            (out, &a.common)
        }
    };
    Ok(Outcome::Reports(reports.0, reports.1.clone()))
}

fn load_zeros(path: &Path) -> Result<ZerosTable, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Run(format!("reading {}: {e}", path.display())))?;
    let table = output::parse_zeros_csv(&text).map_err(|e| Failure::Run(format!("{}: {e}", path.display())))?;
    table.validate().map_err(|e| Failure::Run(format!("{}: {e}", path.display())))?;
    Ok(table)
}

pub fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Verify(v) => verify(v),
        Command::Zeros(a) => {
            rule(&a.common, 1.0)?;
            let table = find_zeros(a.max_height, Tolerances::default())?;
            table.validate()?;
            let text = match a.common.format {
                Format::Json => output::zeros_json(&table),
                Format::Csv => output::zeros_csv(&table)?,
            };
            Ok(Outcome::Text(text, a.common.clone()))
        }
        Command::RhScan(a) => {
            rule(&a.common, 1.0)?;
            let ys = nonempty(&a.y, &DEFAULT_Y_SEQ, "--y")?;
            strictly_decreasing(&ys, "--y")?;
            let s = scheme(&a.scheme, scan_scheme())?;
            let tol = Tolerances::default();
            if let Some(gammas) = &a.gamma {
                let mut rows = Vec::new();
                for &g in gammas {
                    rows.extend(rh_criterion_scan(g, &ys, &s, tol)?.into_iter().map(|(y, v)| (g, y, v)));
                }
                let text = output::trajectories(&rows, a.common.format == Format::Json)?;
                return Ok(Outcome::Text(text, a.common.clone()));
            }
            let zeros = match &a.zeros_file {
                Some(p) => load_zeros(p)?,
                None => find_zeros(a.max_height, tol)?,
            };
            if zeros.is_empty() {
                return Err(Failure::Run("no zeros to scan".into()));
            }
            Ok(Outcome::Reports(verify_rh_criterion(&zeros, a.reference, &ys, &s, tol)?, a.common.clone()))
        }
        Command::Boundary(a) => {
            rule(&a.common, 1.0)?;
            let tol = Tolerances::default();
            if a.duffin {
                let xs = nonempty(&a.x, &[1.0], "--x")?;
                let ys = nonempty(&a.y, &DUFFIN_BOUNDARY_YS, "--y")?;
                strictly_decreasing(&ys, "--y")?;
                let s = scheme(&a.scheme, scan_scheme())?;
                let mut out = Vec::new();
                for x in xs {
                    out.extend(boundary_recovery(x, &ys, &s, tol)?);
                }
                return Ok(Outcome::Reports(out, a.common.clone()));
            }
            let xs = nonempty(&a.x, &BOUNDARY_XS, "--x")?;
            let ys = nonempty(&a.y, &BOUNDARY_YS, "--y")?;
            strictly_decreasing(&ys, "--y")?;
            Ok(Outcome::Reports(verify_boundary_limit(&xs, &ys, tol)?, a.common.clone()))
        }
    }
}
