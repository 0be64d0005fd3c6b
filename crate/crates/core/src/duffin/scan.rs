//! Grid adjudication against the Poisson integral, boundary recovery, the
//! x → 0 limit and the RH-criterion trajectories.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::halfplane::poisson_halfplane;
use super::series::{
    duffin_harmonic, duffin_series_detail, DuffinValue, Normalization, NormalizationKind, ADJUDICATED_CONVENTION,
    ADJUDICATED_NORMALIZATION,
};
use super::summation::{SummationMethod, SummationScheme};
use super::zeros::ZerosTable;
use crate::error::{Error, Result};
use crate::identities::convention::Convention;
use crate::identities::eq11::xi_profile;
use crate::identities::report::{IdentityId, Param, PassRule, VerificationReport};
use crate::identities::upsilon::upsilon_series;
use crate::specfun::{incomplete_gamma_upper, xi_real};
use crate::tolerances::Tolerances;

pub const DUFFIN_GRID: [(f64, f64); 6] = [(1.0, 1.0), (1.0, 2.0), (1.0, 4.0), (2.0, 1.0), (2.0, 2.0), (2.0, 4.0)];
/// Outer cap for the convention that is only evaluated to be rejected.
pub const REJECTED_CONVENTION_M_MAX: usize = 4000;
/// Outer cap for scans at x = γ ≥ 10, where the regularized terms are tiny from m = 1.
pub const SCAN_M_MAX: usize = 2000;
pub const DEFAULT_Y_SEQ: [f64; 11] = [1.0, 0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 1e-3, 1e-4, 1e-5, 1e-6];
pub const SECOND_LIMIT_XS: [f64; 3] = [0.2, 0.1, 0.05];

pub fn scan_scheme() -> SummationScheme {
    SummationScheme::default().with_m_max(SCAN_M_MAX)
}

/// One (convention, normalization) candidate fitted over the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub convention: Convention,
    pub normalization: Normalization,
    /// max_i |c·g_i − P_i| / max(|P_i|, 1)
    pub misfit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Adjudication {
    pub chosen: Candidate,
    pub candidates: Vec<Candidate>,
    pub matches_pinned: bool,
}

fn fit(values: &[DuffinValue], poisson: &[f64], convention: Convention, kind: NormalizationKind) -> Candidate {
    let unit = Normalization { kind, constant: 1.0 };
    let g: Vec<f64> = values.iter().map(|v| v.normalized(unit)).collect();
    let (num, den) = g.iter().zip(poisson).fold((0.0, 0.0), |(n, d), (g, p)| (n + g * p, d + g * g));
    let constant = num / den;
    let misfit = g.iter().zip(poisson).map(|(g, p)| (constant * g - p).abs() / p.abs().max(1.0)).fold(0.0, f64::max);
    Candidate { convention, normalization: Normalization { kind, constant }, misfit }
}

fn describe(c: &Candidate) -> String {
    format!("{} with {} (max misfit {:.3e})", c.convention.as_str(), c.normalization.describe(), c.misfit)
}

/// Series vs half-plane Poisson integral on a grid: both kernel conventions,
/// both normalization shapes, one fitted constant; one report per point under
/// the best candidate. Pass requires agreement within max(rel·|P|, abs) and a
/// normalized Abel–Cesàro spread below the scheme target.
pub fn verify_duffin(
    points: &[(f64, f64)],
    scheme: &SummationScheme,
    tol: Tolerances,
    rule: PassRule,
) -> Result<(Vec<VerificationReport>, Adjudication)> {
    verify_duffin_with(points, scheme, tol, rule, &[Convention::Plain, Convention::TwoPi])
}

/// As [`verify_duffin`], restricted to the given kernel conventions.
pub fn verify_duffin_with(
    points: &[(f64, f64)],
    scheme: &SummationScheme,
    tol: Tolerances,
    rule: PassRule,
    conventions: &[Convention],
) -> Result<(Vec<VerificationReport>, Adjudication)> {
    if points.is_empty() {
        return Err(Error::domain("verify_duffin needs at least one (x, y) point"));
    }
    if conventions.is_empty() {
        return Err(Error::domain("verify_duffin needs at least one convention"));
    }
    scheme.validate()?;
    let poisson: Vec<_> = points.iter().map(|&(x, y)| poisson_halfplane(x, y, tol)).collect::<Result<_>>()?;
    let p: Vec<f64> = poisson.iter().map(|r| r.value).collect();
    let rejected_scheme = scheme.clone().with_m_max(scheme.m_max.min(REJECTED_CONVENTION_M_MAX));
    let mut by_conv = Vec::new();
    for &conv in conventions {
        let s = if conv == ADJUDICATED_CONVENTION || conventions.len() == 1 { scheme } else { &rejected_scheme };
        let vals: Vec<DuffinValue> =
            points.iter().map(|&(x, y)| duffin_series_detail(x, y, s, conv, tol)).collect::<Result<_>>()?;
        by_conv.push((conv, vals));
    }
    let mut candidates = Vec::new();
    for (conv, vals) in &by_conv {
        for kind in [NormalizationKind::Constant, NormalizationKind::OverX] {
            candidates.push(fit(vals, &p, *conv, kind));
        }
    }
    let chosen = candidates.iter().min_by(|a, b| a.misfit.total_cmp(&b.misfit)).unwrap().clone();
    let matches_pinned = chosen.convention == ADJUDICATED_CONVENTION
        && chosen.normalization.kind == ADJUDICATED_NORMALIZATION.kind
        && (chosen.normalization.constant - ADJUDICATED_NORMALIZATION.constant).abs() < 1e-6;
    let vals = &by_conv.iter().find(|(c, _)| *c == chosen.convention).unwrap().1;
    let f0: Vec<f64> = points.iter().map(|&(_, y)| poisson_halfplane(0.0, y, tol).map(|r| r.value)).collect::<Result<_>>()?;
    let rejected: Vec<String> = candidates.iter().filter(|c| **c != chosen).map(describe).collect();
    let norm = chosen.normalization;
    let reports = points
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| {
            let v = &vals[i];
            let lhs = v.normalized(norm);
            let spread = v.normalized_spread(norm);
            let err_budget = poisson[i].err_estimate + norm.factor(x).abs() * v.tail_bound;
            let err = (lhs - p[i]).abs();
            let pass = err <= rule.abs_tol.max(rule.rel_tol * p[i].abs()) && spread < scheme.target;
            let notes = format!(
                "adjudicated: {}{}; summation {} over M = {}: Abel {:.15}, Cesaro {:.15}, partial {:.15}, \
                 normalized Abel-Cesaro spread {:.3e}; terms are mu(m)/m times the inner sum minus its Euler-Maclaurin \
                 mean (sum mu(m) x int F assigned its (C,1) value 0); printed terms without that removal Abel-sum to \
                 {:.6e} = {:.4}*(x/2)(f(x,y) - f(0,y)); rejected: {}",
                describe(&chosen),
                if matches_pinned { ", equals the pinned choice" } else { ", DIFFERS from the pinned choice" },
                scheme.method.as_str(),
                v.m_max,
                norm.factor(x) * v.structure(SummationMethod::Abel),
                norm.factor(x) * v.structure(SummationMethod::Cesaro),
                norm.factor(x) * v.structure(SummationMethod::Partial),
                spread,
                v.raw.abel,
                v.raw.abel / (x / 2.0 * (p[i] - f0[i])),
                rejected.join("; "),
            );
            VerificationReport::judged(
                IdentityId::Duffin,
                vec![Param::new("x", x), Param::new("y", y), Param::new("m_max", v.m_max as f64)],
                Complex64::new(lhs, 0.0),
                Complex64::new(p[i], 0.0),
                err_budget,
                v.n_evals + poisson[i].n_evals,
                pass,
                notes,
            )
        })
        .collect();
    Ok((reports, Adjudication { chosen, candidates, matches_pinned }))
}

/// |f_series(x, y) − f(x)| along a decreasing y sequence. Each report passes
/// when its error is below the previous one; the last also needs
/// error < 1e−3·max(|f(x)|, 1e−3).
pub fn boundary_recovery(x: f64, y_seq: &[f64], scheme: &SummationScheme, tol: Tolerances) -> Result<Vec<VerificationReport>> {
    if y_seq.is_empty() || y_seq.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::domain("boundary_recovery needs a non-empty strictly decreasing y sequence"));
    }
    let fx = xi_profile(x);
    let mut prev = f64::INFINITY;
    let mut out = Vec::with_capacity(y_seq.len());
    for (i, &y) in y_seq.iter().enumerate() {
        let v = duffin_harmonic(x, y, scheme, tol)?;
        let val = v.normalized(ADJUDICATED_NORMALIZATION);
        let err = (val - fx).abs();
        let last = i + 1 == y_seq.len();
        let mut pass = err < prev;
        if last {
            pass &= err < 1e-3 * fx.abs().max(1e-3);
        }
        prev = err;
        out.push(VerificationReport::judged(
            IdentityId::Duffin,
            vec![Param::new("x", x), Param::new("y", y), Param::new("m_max", scheme.m_max as f64)],
            Complex64::new(val, 0.0),
            Complex64::new(fx, 0.0),
            ADJUDICATED_NORMALIZATION.factor(x) * v.tail_bound,
            v.n_evals,
            pass,
            format!(
                "boundary recovery toward Xi(x)/(x^2+1/4); {} with {}; spread {:.3e}; the approach is first order in y",
                ADJUDICATED_CONVENTION.as_str(),
                ADJUDICATED_NORMALIZATION.describe(),
                v.normalized_spread(ADJUDICATED_NORMALIZATION)
            ),
        ));
    }
    Ok(out)
}

/// (y, f_series(γ, y)) along y_seq under the pinned convention and normalization.
pub fn rh_criterion_scan(gamma: f64, y_seq: &[f64], scheme: &SummationScheme, tol: Tolerances) -> Result<Vec<(f64, f64)>> {
    if !(gamma > 0.0) {
        return Err(Error::domain(format!("rh_criterion_scan needs γ > 0, got {gamma}")));
    }
    if y_seq.is_empty() || y_seq.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::domain("rh_criterion_scan needs a non-empty strictly decreasing y sequence"));
    }
    y_seq
        .iter()
        .map(|&y| Ok((y, duffin_harmonic(gamma, y, scheme, tol)?.normalized(ADJUDICATED_NORMALIZATION))))
        .collect()
}

/// Scan endpoints at each zero in the table against the endpoint at a
/// reference height. A zero passes when its endpoint is at least 100× smaller
/// in magnitude; the reference passes when its endpoint is within 1% of
/// Ξ(γ)/(γ²+¼).
pub fn verify_rh_criterion(
    zeros: &ZerosTable,
    reference: f64,
    y_seq: &[f64],
    scheme: &SummationScheme,
    tol: Tolerances,
) -> Result<Vec<VerificationReport>> {
    let trail = |v: &[(f64, f64)]| v.iter().map(|(y, f)| format!("{y:e}:{f:.3e}")).collect::<Vec<_>>().join(" ");
    let ref_scan = rh_criterion_scan(reference, y_seq, scheme, tol)?;
    let ref_end = ref_scan.last().unwrap().1;
    let f_ref = xi_profile(reference);
    let mut reps = vec![VerificationReport::judged(
        IdentityId::RhCriterion,
        vec![Param::new("gamma", reference), Param::new("y_end", *y_seq.last().unwrap())],
        Complex64::new(ref_end, 0.0),
        Complex64::new(f_ref, 0.0),
        0.0,
        0,
        (ref_end - f_ref).abs() <= 1e-2 * f_ref.abs(),
        format!("reference height; trajectory {}", trail(&ref_scan)),
    )];
    for e in &zeros.entries {
        let scan = rh_criterion_scan(e.gamma, y_seq, scheme, tol)?;
        let end = scan.last().unwrap().1;
        let ratio = ref_end.abs() / end.abs();
        reps.push(VerificationReport::judged(
            IdentityId::RhCriterion,
            vec![Param::new("gamma", e.gamma), Param::new("y_end", *y_seq.last().unwrap())],
            Complex64::new(end, 0.0),
            Complex64::new(0.0, 0.0),
            0.0,
            0,
            ratio >= 100.0,
            format!(
                "zero from find_zeros; |endpoint at gamma={reference}| / |endpoint| = {ratio:.3e} (need >= 100); trajectory {}",
                trail(&scan)
            ),
        ));
    }
    Ok(reps)
}

/// The printed x → 0 expression at s = y + ½:
/// (π/2)(1/(y−½) − ξ(y+½)(y−½)/(y+½) + π^{−(y−½)/2}Σ n^{−y+½}Γ((y+½)/2, πn²)).
pub fn second_limit_printed(y: f64, tol: Tolerances) -> Result<f64> {
    let mut sum = 0.0;
    for n in 1..=12 {
        let nf = n as f64;
        let g = incomplete_gamma_upper(Complex64::new((y + 0.5) / 2.0, 0.0), PI * nf * nf, tol)?.re;
        sum += nf.powf(0.5 - y) * g;
    }
    let bracket = 1.0 / (y - 0.5) - xi_real(y + 0.5)? * (y - 0.5) / (y + 0.5) + PI.powf(-(y - 0.5) / 2.0) * sum;
    Ok(PI / 2.0 * bracket)
}

/// Richardson extrapolation of f_series(x, y) in x² to x = 0, compared with the
/// candidate closed forms. Uses partial sums: the regularized terms are
/// absolutely summable, and at small x they stay large out to m ≈ 2πy/x, which
/// the Abel radii cannot resolve.
pub fn verify_second_limit(y: f64, xs: &[f64], scheme: &SummationScheme, tol: Tolerances) -> Result<VerificationReport> {
    if xs.len() < 2 || xs.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::domain("second limit needs at least two decreasing x values"));
    }
    if !(y > 0.5) {
        return Err(Error::domain(format!("second-limit candidates need y > 1/2, got {y}")));
    }
    let partial = scheme.clone().with_method(SummationMethod::Partial);
    let vals: Vec<f64> = xs
        .iter()
        .map(|&x| Ok(duffin_series_detail(x, y, &partial, ADJUDICATED_CONVENTION, tol)?.normalized(ADJUDICATED_NORMALIZATION)))
        .collect::<Result<_>>()?;
    let d: Vec<f64> = xs.iter().map(|x| x * x).collect();
    let neville = |d: &[f64], v: &[f64]| {
        let mut p = v.to_vec();
        let n = p.len();
        for k in 1..n {
            for i in 0..n - k {
                p[i] = (d[i + k] * p[i] - d[i] * p[i + 1]) / (d[i + k] - d[i]);
            }
        }
        p[0]
    };
    let n = xs.len();
    let limit = neville(&d, &vals);
    let coarse = neville(&d[..n - 1], &vals[..n - 1]);
    let extrap_err = (limit - coarse).abs();
    let ups = upsilon_series(Complex64::new(y + 0.5, 0.0), tol)?.re;
    let printed = second_limit_printed(y, tol)?;
    let candidates = [
        ("(2/pi)*Upsilon(y+1/2) [Poisson value at x=0]", 2.0 / PI * ups),
        ("Upsilon(y+1/2) [bracket with pi/2]", ups),
        ("printed expression with xi(y+1/2)(y-1/2)/(y+1/2)", printed),
        ("printed expression without the pi/2 prefactor", printed * 2.0 / PI),
    ];
    let match_tol = (10.0 * extrap_err).max(1e-6);
    let matching: Vec<usize> = (0..candidates.len()).filter(|&i| (candidates[i].1 - limit).abs() <= match_tol).collect();
    let lines: Vec<String> = candidates
        .iter()
        .map(|(name, v)| format!("{name} = {v:.12} (diff {:.3e})", (v - limit).abs()))
        .collect();
    let traj: Vec<String> = xs.iter().zip(&vals).map(|(x, v)| format!("x={x}:{v:.12}")).collect();
    Ok(VerificationReport::judged(
        IdentityId::Duffin,
        vec![Param::new("x", 0.0), Param::new("y", y)],
        Complex64::new(limit, 0.0),
        Complex64::new(candidates[0].1, 0.0),
        extrap_err,
        0,
        matching == [0],
        format!(
            "second limit x -> 0 by Richardson in x^2 over {} (extrapolation error {:.2e}); candidates: {}; \
             the un-normalized printed structure itself tends to 0 like x/2 * f(0,y)",
            traj.join(" "),
            extrap_err,
            lines.join("; ")
        ),
    ))
}
