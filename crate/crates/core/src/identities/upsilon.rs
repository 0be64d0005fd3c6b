//! Υ(s) := (s−½)∫_0^∞ Ξ(t)/((t²+¼)(t²+(s−½)²)) dt and its incomplete-gamma
//! series.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::eq11::{xi_profile, XI_PROFILE_SCALE};
use super::report::{IdentityId, Param, PassRule, VerificationReport};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite_with, DecayHint, QuadOptions, QuadResult};
use crate::specfun::{incomplete_gamma_upper, xi};
use crate::tolerances::Tolerances;

/// Series terms never exceed this count (Γ(s/2, πn²) decays like e^{−πn²}).
pub const UPSILON_MAX_TERMS: usize = 12;

/// Integral side by quadrature.
pub fn upsilon_integral(s: Complex64, tol: Tolerances) -> Result<QuadResult<Complex64>> {
    if !(s.re > 1.0) {
        return Err(Error::domain(format!("Υ(s) integral needs Re s > 1, got s = {s}")));
    }
    let w = s - 0.5;
    let (a, b) = (w.re, w.im);
    // min over t of |t² + w²|
    let denom_min = if a * a >= b * b { w.norm_sqr() } else { 2.0 * (a * b).abs() };
    let hint = DecayHint::new(PI / 4.0, XI_PROFILE_SCALE * w.norm() / denom_min)?;
    let opts = QuadOptions { breakpoints: vec![0.5, 1.0, 2.0, w.norm()], ..Default::default() };
    integrate_semi_infinite_with(|t| w * xi_profile(t) / (t * t + w * w), hint, tol, &opts)
}

/// Which coefficient multiplies ξ(s)/(s(s−1)) in the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpsilonVariant {
    /// Coefficient 2 (what the integral actually equals).
    Corrected,
    /// Coefficient 1, as printed.
    Printed,
}

/// Series value with the truncation data that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpsilonSeries {
    pub value: Complex64,
    /// Incomplete-gamma terms summed.
    pub terms: usize,
    /// Bound on the omitted terms (first omitted term bounds the rest).
    pub tail_bound: f64,
}

/// Modulus bound for the n-th incomplete-gamma term: n^{−σ}π^{−σ/2}Γ(σ/2, πn²).
fn term_bound(n: usize, sigma: f64) -> Result<f64> {
    let nf = n as f64;
    let g = incomplete_gamma_upper(Complex64::new(sigma / 2.0, 0.0), PI * nf * nf, Tolerances::default())?;
    Ok(nf.powf(-sigma) * PI.powf(-sigma / 2.0) * g.re.abs())
}

/// (π/2)(1/(s−1) − c·ξ(s)/(s(s−1)) + π^{−s/2}Σ_{n≥1} n^{−s}Γ(s/2, πn²)) with
/// c = 2 (corrected) or 1 (printed).
pub fn upsilon_series_variant(s: Complex64, tol: Tolerances, variant: UpsilonVariant) -> Result<UpsilonSeries> {
    if !(s.re > 1.0) {
        return Err(Error::domain(format!("Υ(s) series needs Re s > 1, got s = {s}")));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut terms = 0;
    let mut tail_bound = 0.0;
    let pi_pow = (-s / 2.0 * PI.ln()).exp();
    for n in 1..=UPSILON_MAX_TERMS {
        let nf = n as f64;
        let g = incomplete_gamma_upper(s / 2.0, PI * nf * nf, tol)?;
        sum += (-s * nf.ln()).exp() * g;
        terms = n;
        // |n^{−s}Γ(s/2,x)| ≤ n^{−σ}Γ(σ/2,x); the bound decreases in n
        tail_bound = term_bound(n + 1, s.re)? * 2.0;
        if tail_bound <= tol.abs_tol * 1e-3 || tail_bound <= f64::EPSILON * 1e-2 * sum.norm() * pi_pow.norm() {
            break;
        }
    }
    let coeff = match variant {
        UpsilonVariant::Corrected => 2.0,
        UpsilonVariant::Printed => 1.0,
    };
    let v = PI / 2.0 * (1.0 / (s - 1.0) - coeff * xi(s)? / (s * (s - 1.0)) + pi_pow * sum);
    Ok(UpsilonSeries { value: v, terms, tail_bound: PI / 2.0 * pi_pow.norm() * tail_bound })
}

/// Series side of the identity the integral actually satisfies.
pub fn upsilon_series(s: Complex64, tol: Tolerances) -> Result<Complex64> {
    Ok(upsilon_series_variant(s, tol, UpsilonVariant::Corrected)?.value)
}

/// One report per s; printed-coefficient variant evaluated alongside.
pub fn verify_upsilon(s_list: &[Complex64], tol: Tolerances, rule: PassRule) -> Result<Vec<VerificationReport>> {
    s_list
        .par_iter()
        .map(|&s| {
            let lhs = upsilon_integral(s, tol)?;
            let good = upsilon_series_variant(s, tol, UpsilonVariant::Corrected)?;
            let printed = upsilon_series_variant(s, tol, UpsilonVariant::Printed)?;
            let printed_rel = (printed.value - lhs.value).norm() / lhs.value.norm();
            let notes = format!(
                "xi-term coefficient adjudicated: 2*xi(s)/(s(s-1)) matches the integral; printed coefficient 1 gives rel err {printed_rel:.3e}; \
                 series used {} incomplete-gamma terms (cap 6 met: {}), omitted-term bound {:.3e}",
                good.terms,
                good.terms <= 6,
                good.tail_bound
            );
            let mut r = VerificationReport::assess(
                IdentityId::Upsilon,
                vec![Param::new("s_re", s.re), Param::new("s_im", s.im)],
                lhs.value,
                good.value,
                lhs.err_estimate + good.tail_bound + 64.0 * f64::EPSILON * good.value.norm(),
                lhs.n_evals + good.terms,
                rule,
                notes,
            );
            r.pass &= good.terms <= 6;
            Ok(r)
        })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn reference_values() {
        let t = Tolerances::default();
        let v = upsilon_series(c(2.0, 0.0), t).unwrap();
        assert!((v.re - 0.769_936_688_420_493_2).abs() < 1e-13);
        let v = upsilon_series(c(2.0, 1.0), t).unwrap();
        assert!((v - c(0.612_990_123_182_782_5, -0.312_644_653_459_507_8)).norm() < 1e-13);
        let i = upsilon_integral(c(2.0, 0.0), t).unwrap();
        assert!((i.value.re - 0.769_936_688_420_493_2).abs() < 1e-11);
    }

    #[test]
    fn printed_coefficient_fails() {
        let t = Tolerances::default();
        let p = upsilon_series_variant(c(2.0, 0.0), t, UpsilonVariant::Printed).unwrap();
        assert!((p.value.re - 1.181_17).abs() < 1e-4);
    }

    #[test]
    fn few_terms_needed() {
        let t = Tolerances::default().with_abs(1e-15);
        for s in [c(1.5, 0.0), c(3.0, 0.0), c(2.0, 1.0), c(4.0, 0.0)] {
            let r = upsilon_series_variant(s, t, UpsilonVariant::Corrected).unwrap();
            assert!(r.terms <= 6, "s = {s}: {} terms", r.terms);
        }
    }

    #[test]
    fn domain() {
        assert!(matches!(upsilon_integral(c(1.0, 2.0), Tolerances::default()), Err(Error::Domain(_))));
        assert!(matches!(upsilon_series(c(0.5, 0.0), Tolerances::default()), Err(Error::Domain(_))));
    }
}
