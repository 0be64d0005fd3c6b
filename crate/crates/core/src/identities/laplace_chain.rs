//! Laplace transform of the diagonal ĝ(y) = φ(y)ⁿ: direct quadrature, the
//! kernel form over ℝⁿ and the expanded incomplete-gamma series.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::eq11::{xi_profile, XI_PROFILE_SCALE};
use super::report::{IdentityId, Param, PassRule, VerificationReport};
use super::upsilon::upsilon_series;
use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_grid_with, integrate_semi_infinite_with, laplace_transform, Axis, DecayHint, ExpBound, QuadOptions,
    QuadResult, TensorSums, DEFAULT_NODE_BUDGET,
};
use crate::specfun::{
    binomial, incomplete_gamma_upper, phi, sum_of_squares_r_table, sum_of_squares_rprime_table,
};
use crate::sum::ComplexKahanSum;
use crate::tolerances::Tolerances;

/// Required distance Re s − n/2 for the expanded form.
pub const LAPLACE_MARGIN: f64 = 1.0;

/// Representation counts are tabulated up to this m; Γ(·, πm) terms beyond it
/// are below e^{−πm} ≈ 1e−55.
const SERIES_M: usize = 40;

/// ĝ(y) on the diagonal y_l = y: (e^{y/2} − 2e^{−y/2}ψ(e^{−2y}))ⁿ.
pub fn ghat_diagonal(y: f64, n: usize) -> f64 {
    phi(y).powi(n as i32)
}

/// Binomially expanded diagonal: Σ_k C(n,k)(−2)^k e^{(n−2k)y/2} ψ(e^{−2y})^k.
pub fn ghat_diagonal_expanded(y: f64, n: usize) -> Result<f64> {
    let psi = crate::specfun::psi_theta((-2.0 * y).exp(), Tolerances::default())?;
    let mut acc = 0.0;
    for k in 0..=n {
        let c = binomial(n, k) as f64 * (-2.0f64).powi(k as i32);
        acc += c * ((n as f64 - 2.0 * k as f64) * y / 2.0).exp() * psi.powi(k as i32);
    }
    Ok(acc)
}

fn check(n: usize, s: Complex64) -> Result<()> {
    if !(1..=3).contains(&n) {
        return Err(Error::domain(format!("Laplace chain supported for 1 ≤ n ≤ 3, got {n}")));
    }
    if !(s.re - n as f64 / 2.0 >= LAPLACE_MARGIN) {
        return Err(Error::domain(format!(
            "Laplace chain needs Re s − n/2 ≥ {LAPLACE_MARGIN} (the expanded form converges only for Re s > n/2); got s = {s}, n = {n}"
        )));
    }
    Ok(())
}

/// Form (a): ∫_0^∞ ĝ(y)e^{−sy} dy.
pub fn laplace_form_a(n: usize, s: Complex64, tol: Tolerances) -> Result<QuadResult<Complex64>> {
    check(n, s)?;
    laplace_transform(|y| ghat_diagonal(y, n), s, ExpBound { exponent: -(n as f64) / 2.0, scale: 1.0 }, tol)
}

/// Form (b): π^{−n}∫_{ℝⁿ} s·g(x)/(s² + (Σx_l)²) dx, for n ≤ 2.
pub fn laplace_form_b(n: usize, s: Complex64, tol: Tolerances) -> Result<QuadResult<Complex64>> {
    check(n, s)?;
    let kernel = move |w: f64| s / (s * s + w * w);
    // |s/(s²+w²)| ≤ |s|/m with m = min_w |s² + w²|
    let (a, b) = (s.re, s.im);
    let m = if a * a >= b * b { s.norm_sqr() } else { 2.0 * (a * b).abs() };
    let kbound = s.norm() / m;
    let pin = PI.powi(-(n as i32));
    match n {
        1 => {
            let hint = DecayHint::new(PI / 4.0, XI_PROFILE_SCALE * kbound * 2.0)?;
            let opts = QuadOptions { breakpoints: vec![0.5, 1.0, 2.0], ..Default::default() };
            let r = integrate_semi_infinite_with(|t| kernel(t) * xi_profile(t) * 2.0, hint, tol.with_abs(tol.abs_tol / pin), &opts)?;
            Ok(QuadResult { value: r.value * pin, err_estimate: r.err_estimate * pin, ..r })
        }
        2 => {
            let l1 = 2.0 * XI_PROFILE_SCALE / (PI / 4.0);
            let hint = DecayHint::new(PI / 4.0, XI_PROFILE_SCALE * l1 * kbound)?;
            let ax = Axis::Decaying { hint, even: false, feature: 0.125, width: 1.0 };
            let axes = [ax, ax];
            let itol = tol.with_abs(tol.abs_tol / pin / 2.0);
            let eval = |part: usize| {
                integrate_grid_with(&axes, itol, DEFAULT_NODE_BUDGET / 2, |grid| {
                    let f: Vec<Vec<f64>> =
                        grid.axes.iter().map(|a| a.nodes.iter().map(|&t| xi_profile(t)).collect()).collect();
                    let sums: TensorSums = grid.sum_indexed(|i| {
                        let w = grid.axes[0].nodes[i[0]] + grid.axes[1].nodes[i[1]];
                        let k = kernel(w);
                        f[0][i[0]] * f[1][i[1]] * if part == 0 { k.re } else { k.im }
                    });
                    Ok(sums)
                })
            };
            let (re, _) = eval(0)?;
            let (im, _) = if s.im == 0.0 { (QuadResult { value: 0.0, err_estimate: 0.0, n_evals: 0, truncation_point: 0.0 }, ()) } else { (eval(1)?.0, ()) };
            Ok(QuadResult {
                value: Complex64::new(re.value, im.value) * pin,
                err_estimate: (re.err_estimate + im.err_estimate) * pin,
                n_evals: re.n_evals + im.n_evals,
                truncation_point: re.truncation_point,
            })
        }
        _ => Err(Error::Capacity("form (b) is not evaluated for n = 3 (tensor node budget)".into())),
    }
}

/// Reading of the expanded form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesVariant {
    /// Leading term 1/(s − n/2) instead of the printed 1/(s − ½).
    pub lead_n_half: bool,
    /// Incomplete-gamma order a/2 with a = s − n/2 + k instead of the printed
    /// integrand power t^{s−1+(n−k)/2+k/2}, i.e. a = s + n/2.
    pub derived_power: bool,
    /// Include the (πm)^{−a/2} normalization rather than the printed m^{−a/2}.
    pub pi_factor: bool,
}

impl SeriesVariant {
    pub const DERIVED: SeriesVariant = SeriesVariant { lead_n_half: true, derived_power: true, pi_factor: true };
    pub const LITERAL: SeriesVariant = SeriesVariant { lead_n_half: false, derived_power: false, pi_factor: false };

    pub fn candidates() -> [SeriesVariant; 5] {
        [
            SeriesVariant { lead_n_half: false, derived_power: false, pi_factor: true },
            SeriesVariant { lead_n_half: false, derived_power: true, pi_factor: true },
            SeriesVariant { lead_n_half: true, derived_power: false, pi_factor: true },
            SeriesVariant::DERIVED,
            SeriesVariant::LITERAL,
        ]
    }

    pub fn describe(&self) -> String {
        format!(
            "lead 1/(s-{}), power {}, {}",
            if self.lead_n_half { "n/2" } else { "1/2" },
            if self.derived_power { "a=s-n/2+k" } else { "a=s+n/2 (printed)" },
            if self.pi_factor { "(pi m)^(-a/2)" } else { "m^(-a/2) (printed)" }
        )
    }
}

/// Λ_l(w) = π^{−w}Γ(w)Σ_m r_l(m)m^{−w}, continued through the theta
/// function so the m-sum converges exponentially.
fn completed_epstein(l: usize, w: Complex64, r: &[u128], tol: Tolerances) -> Result<Complex64> {
    let lh = l as f64 / 2.0;
    let mut acc = ComplexKahanSum::new();
    acc.add(1.0 / (w - lh) - 1.0 / w);
    for (m, &rm) in r.iter().enumerate().skip(1) {
        if rm == 0 {
            continue;
        }
        let x = PI * m as f64;
        let t1 = (-w * x.ln()).exp() * incomplete_gamma_upper(w, x, tol)?;
        let t2 = ((w - lh) * x.ln()).exp() * incomplete_gamma_upper(lh - w, x, tol)?;
        acc.add((t1 + t2) * rm as f64);
    }
    Ok(acc.value())
}

/// Form (c) under a given reading.
pub fn laplace_form_c_variant(n: usize, s: Complex64, variant: SeriesVariant, tol: Tolerances) -> Result<Complex64> {
    check(n, s)?;
    let nf = n as f64;
    let lead = if variant.lead_n_half { nf / 2.0 } else { 0.5 };
    let mut total = ComplexKahanSum::new();
    total.add(1.0 / (s - lead));
    let r_full: Vec<Vec<u128>> = (0..=n).map(|l| sum_of_squares_r_table(l, SERIES_M)).collect::<Result<_>>()?;
    for k in 1..=n {
        let rp = sum_of_squares_rprime_table(k, SERIES_M)?;
        let a = if variant.derived_power { s - nf / 2.0 + k as f64 } else { s + nf / 2.0 };
        let w = a / 2.0;
        // complete part: ½ Σ_m r'_k(m)(πm)^{−w}Γ(w) = ½·2^{−k}Σ_l C(k,l)(−1)^{k−l}Λ_l(w)
        let mut complete = Complex64::new(0.0, 0.0);
        for l in 1..=k {
            let sign = if (k - l) % 2 == 0 { 1.0 } else { -1.0 };
            complete += sign * binomial(k, l) as f64 * completed_epstein(l, w, &r_full[l], tol)?;
        }
        complete *= 0.5 * 2f64.powi(-(k as i32));
        let mut incomplete = Complex64::new(0.0, 0.0);
        for (m, &c) in rp.iter().enumerate().skip(1) {
            if c == 0 {
                continue;
            }
            let x = PI * m as f64;
            incomplete += c as f64 * (-w * x.ln()).exp() * incomplete_gamma_upper(w, x, tol)?;
        }
        incomplete *= 0.5;
        let mut part = complete - incomplete;
        if !variant.pi_factor {
            // the printed form carries m^{−w} where the derivation gives (πm)^{−w}
            part *= (w * PI.ln()).exp();
        }
        total.add(binomial(n, k) as f64 * (-2.0f64).powi(k as i32) * part);
    }
    let v = total.value();
    Ok(v)
}

/// Form (c) under the reading that matches form (a).
pub fn laplace_form_c(n: usize, s: Complex64, tol: Tolerances) -> Result<Complex64> {
    laplace_form_c_variant(n, s, SeriesVariant::DERIVED, tol)
}

/// Cross-compares forms (a), (b) (n ≤ 2) and (c). Form (a) is ground truth;
/// every reading of (c) is evaluated and exactly one must match.
pub fn verify_laplace_chain(n: usize, s: Complex64, tol: Tolerances, rule: PassRule) -> Result<VerificationReport> {
    check(n, s)?;
    let a = laplace_form_a(n, s, tol)?;
    let b = if n <= 2 { Some(laplace_form_b(n, s, tol)?) } else { None };
    let target = rule.abs_tol.max(rule.rel_tol * a.value.norm()) + a.err_estimate;
    let mut matching = Vec::new();
    let mut lines = Vec::new();
    for v in SeriesVariant::candidates() {
        let c = laplace_form_c_variant(n, s, v, tol)?;
        let d = (c - a.value).norm();
        let ok = d <= target;
        if ok {
            matching.push(v);
        }
        lines.push(format!("[{}] |c-a| = {d:.3e}{}", v.describe(), if ok { " MATCH" } else { "" }));
    }
    let c = laplace_form_c(n, s, tol)?;
    let mut notes = format!("form (a) by quadrature is ground truth; form (c) readings: {}", lines.join("; "));
    let mut pass_extra = true;
    match &b {
        Some(b) => {
            let d = (b.value - a.value).norm();
            let ok = d <= target + b.err_estimate;
            pass_extra &= ok;
            notes.push_str(&format!("; form (b) pi^(-n)*int s g/(s^2+(sum x)^2): |b-a| = {d:.3e} ({})", if ok { "agrees" } else { "DISAGREES" }));
        }
        None => notes.push_str("; form (b) skipped for n = 3 (node budget)"),
    }
    if n == 1 {
        // ∫_0^∞ φ(y)e^{−sy}dy = (2/π)Υ(s+½)
        let ups = upsilon_series(s + 0.5, tol)? * (2.0 / PI);
        let d = (ups - a.value).norm();
        let ok = d <= target;
        pass_extra &= ok;
        notes.push_str(&format!("; n=1 reproduces (2/pi)*Upsilon(s+1/2) = {:.15}: |diff| = {d:.3e}", ups.re));
    }
    let unique = matching.len() == 1 || (n == 1 && matching.contains(&SeriesVariant::DERIVED));
    notes.push_str(&format!("; {} reading(s) match", matching.len()));
    let mut r = VerificationReport::assess(
        IdentityId::LaplaceChain,
        vec![Param::new("n", n as f64), Param::new("s_re", s.re), Param::new("s_im", s.im)],
        a.value,
        c,
        a.err_estimate + 1e-14 * c.norm(),
        a.n_evals + b.map_or(0, |b| b.n_evals),
        rule,
        notes,
    );
    r.pass &= pass_extra && unique && matching.contains(&SeriesVariant::DERIVED);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn diagonal_forms() {
        assert!((ghat_diagonal(0.4, 1) - 2.0 / PI * super::super::eq11::eq11_rhs(0.4).unwrap()).abs() < 1e-15);
        assert!((ghat_diagonal(1.0, 2) - ghat_diagonal(1.0, 1).powi(2)).abs() < 1e-15);
        let e = ghat_diagonal_expanded(0.7, 3).unwrap();
        assert!((e - ghat_diagonal(0.7, 3)).abs() < 1e-12);
    }

    #[test]
    fn reference_values() {
        let t = Tolerances::default();
        let a = laplace_form_a(1, c(2.0), t).unwrap();
        assert!((a.value.re - 0.390_621_920_256_849).abs() < 1e-12);
        let cc = laplace_form_c(1, c(2.0), t).unwrap();
        assert!((cc.re - 0.390_621_920_256_849).abs() < 1e-12);
        let a2 = laplace_form_a(2, c(3.0), t).unwrap();
        assert!((a2.value.re - 0.234_072_907_221_284_1).abs() < 1e-12);
        let c2 = laplace_form_c(2, c(3.0), t).unwrap();
        assert!((c2.re - 0.234_072_907_221_284_1).abs() < 1e-12);
        let c3 = laplace_form_c(3, c(4.0), t).unwrap();
        assert!((c3.re - 0.161_294_374_330_568_2).abs() < 1e-12);
    }

    #[test]
    fn margin_is_enforced() {
        let t = Tolerances::default();
        assert!(matches!(laplace_form_a(1, c(1.2), t), Err(Error::Domain(_))));
        assert!(matches!(verify_laplace_chain(2, c(1.5), t, PassRule::new(1e-6, 1e-6)), Err(Error::Domain(_))));
    }
}
