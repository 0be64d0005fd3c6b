//! Σ_m μ(m)/m Σ_n e^{−2πny/(mx)} C(n/(mx)) with the mean value of each inner
//! sum removed before the outer sum is regularized.
//!
//! Write F(u) = C(u)e^{−βu}, β = 2πy, h = 1/(mx). Euler–Maclaurin gives
//! Σ_{n≥1} F(nh) = ∫F/h − F(0)/2 − hF′(0)/12 + h³F‴(0)/720 + O(h⁵), so
//! b_m = μ(m)/m·(remainder) is O(m⁻⁶). Summing the subtracted pieces over m
//! uses Σμ(m)/m = 0, Σμ(m)/m² = 1/ζ(2), Σμ(m)/m⁴ = 1/ζ(4), and assigns the
//! divergent Σμ(m)·x∫F its (C,1) value 0; the raw printed terms are summed
//! alongside so the effect of that assignment stays visible.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::summation::{p_summation_detail, PSum, SummationScheme};
use crate::error::{Error, Result};
use crate::identities::convention::Convention;
use crate::quadrature::{laplace_transform, ExpBound};
use crate::specfun::{mobius_sieve, phi};
use crate::sum::KahanSum;
use crate::tolerances::Tolerances;

const ZETA2: f64 = PI * PI / 6.0;
const ZETA4: f64 = PI * PI * PI * PI / 90.0;
/// θ-part terms below this are dropped (then bounded rigorously).
const THETA_CUTOFF: f64 = 1e-22;
const RESEED: usize = 32;

/// How the structure Σ_m μ(m)/m Σ_n … relates to f(x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizationKind {
    /// f = c·S
    Constant,
    /// f = (c/x)·S
    OverX,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Normalization {
    pub kind: NormalizationKind,
    pub constant: f64,
}

impl Normalization {
    pub fn factor(&self, x: f64) -> f64 {
        match self.kind {
            NormalizationKind::Constant => self.constant,
            NormalizationKind::OverX => self.constant / x,
        }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            NormalizationKind::Constant => format!("f = {}*S", self.constant),
            NormalizationKind::OverX => format!("f = ({}/x)*S", self.constant),
        }
    }
}

/// Pinned by `verify_duffin` on the reference grid.
pub const ADJUDICATED_CONVENTION: Convention = Convention::TwoPi;
pub const ADJUDICATED_NORMALIZATION: Normalization = Normalization { kind: NormalizationKind::OverX, constant: 2.0 };

/// Derivative data of F at 0 and its integral.
#[derive(Debug, Clone, Copy)]
struct Setup {
    x: f64,
    kappa: f64,
    beta: f64,
    rho: f64,
    c0: f64,
    f1: f64,
    f3: f64,
    mean: f64,
}

/// φ″(0) from e^{−u/2} − 2e^{u/2}ψ(e^{2u}): ¼ − 2(P/4 + P′ + P″) with
/// P = ψ(1), P′ = −2πΣn²e^{−πn²}, P″ = −4πΣn²e^{−πn²} + 4π²Σn⁴e^{−πn²}.
pub fn phi_second_derivative_at_zero() -> f64 {
    let (mut p, mut s1, mut s2) = (0.0, 0.0, 0.0);
    for n in 1..8 {
        let n2 = (n * n) as f64;
        let e = (-PI * n2).exp();
        p += e;
        s1 += n2 * e;
        s2 += n2 * n2 * e;
    }
    let dp = -2.0 * PI * s1;
    let ddp = -4.0 * PI * s1 + 4.0 * PI * PI * s2;
    0.25 - 2.0 * (p / 4.0 + dp + ddp)
}

fn setup(x: f64, y: f64, convention: Convention, tol: Tolerances) -> Result<Setup> {
    let kappa = convention.kappa();
    let beta = 2.0 * PI * y;
    let rho = kappa / 2.0 + beta;
    if !(rho > 0.0) {
        return Err(Error::Divergence(format!(
            "inner sum diverges: terms behave like e^(-(kappa/2 + 2 pi y) n h) with kappa/2 + 2 pi y = {rho} <= 0"
        )));
    }
    if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::domain(format!("Duffin series needs x, y > 0, got ({x}, {y})")));
    }
    let c0 = PI / 2.0 * phi(0.0);
    let c2 = PI / 2.0 * kappa * kappa * phi_second_derivative_at_zero();
    let f1 = -beta * c0;
    let f3 = -3.0 * beta * c2 - beta.powi(3) * c0;
    // ∫_0^∞ (π/2)φ(κu)e^{−βu} du = (π/(2κ))∫_0^∞ φ(v)e^{−(β/κ)v} dv
    let lt = laplace_transform(
        phi,
        Complex64::new(beta / kappa, 0.0),
        ExpBound { exponent: -0.5, scale: 1.0 },
        tol.with_rel(1e-15).with_abs(1e-16),
    )?;
    let mean = PI / (2.0 * kappa) * lt.value.re;
    Ok(Setup { x, kappa, beta, rho, c0, f1, f3, mean })
}

/// Σ_{n≥1} F(nh): the e^{−ρu} part in closed form, the θ part explicitly.
#[derive(Debug, Clone, Copy)]
struct Inner {
    value: f64,
    tail_bound: f64,
    n_terms: usize,
}

fn inner_sum(s: &Setup, h: f64, n_max: usize) -> Inner {
    // (π/2)Σ e^{−ρnh}
    let closed = PI / 2.0 / (s.rho * h).exp_m1();
    let grow = (s.kappa / 2.0 - s.beta) * h;
    let two_kh = 2.0 * s.kappa * h;
    let (ga, ge) = (grow.exp(), two_kh.exp());
    let mut theta = KahanSum::new();
    let (mut a, mut e) = (1.0, 1.0);
    let mut n = 0;
    while n < n_max {
        n += 1;
        if n % RESEED == 1 {
            a = (grow * n as f64).exp();
            e = (two_kh * n as f64).exp();
        } else {
            a *= ga;
            e *= ge;
        }
        let q = (-PI * e).exp();
        let q3 = q * q * q;
        let psi = q * (1.0 + q3 * (1.0 + q3 * q * q * (1.0 + q3 * q3 * q)));
        let t = PI * a * psi;
        theta.add(t);
        if t < THETA_CUTOFF && PI * (s.kappa / 2.0 * n as f64 * h).exp() * 1.0001 * q < THETA_CUTOFF {
            break;
        }
    }
    // Σ_{n>N} π e^{(κ/2−β)u}ψ(e^{2κu}) ≤ π·1.0001·[g(U) + (1/h)∫_U^∞ g], g(u) = e^{κu/2}e^{−πe^{2κu}},
    // and ∫_U^∞ g = π^{−1/4}Γ(¼, πW)/(2κ) ≤ π^{−1/4}(πW)^{−3/4}e^{−πW}/(2κ), W = e^{2κU}.
    let u = (n + 1) as f64 * h;
    let w = (2.0 * s.kappa * u).exp();
    let ew = (-PI * w).exp();
    let tail_bound = PI * 1.0001 * ew * ((s.kappa * u / 2.0).exp() + PI.powf(-0.25) * (PI * w).powf(-0.75) / (2.0 * s.kappa * h));
    Inner { value: closed - theta.value(), tail_bound, n_terms: n }
}

/// Outcome of one evaluation at (x, y).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DuffinValue {
    pub x: f64,
    pub y: f64,
    pub convention: Convention,
    /// S under the scheme's method (see [`DuffinValue::structure`]).
    pub value: f64,
    /// Means of the regularized terms b_m.
    pub sums: PSum,
    /// −F′(0)/(12xζ(2)) + F‴(0)/(720x³ζ(4)).
    pub correction: f64,
    /// Means of the printed terms μ(m)/m·Σ_n F(n/(mx)) without mean removal.
    pub raw: PSum,
    /// Σ_m (inner tail bound)/m.
    pub tail_bound: f64,
    pub m_max: usize,
    pub n_evals: usize,
    /// Largest |b_m| over the last tenth of the range: how far the terms are from negligible.
    pub term_scale_at_cap: f64,
}

impl DuffinValue {
    /// S = Σ^P b_m + correction for a given mean.
    pub fn structure(&self, method: super::summation::SummationMethod) -> f64 {
        self.sums.value(method) + self.correction
    }

    /// f(x, y) under a normalization.
    pub fn normalized(&self, norm: Normalization) -> f64 {
        norm.factor(self.x) * self.value
    }

    /// Abel–Cesàro spread after normalization.
    pub fn normalized_spread(&self, norm: Normalization) -> f64 {
        norm.factor(self.x).abs() * self.sums.spread
    }
}

/// The regularized Möbius series at (x, y); no instability check (see [`duffin_series`]).
pub fn duffin_series_detail(
    x: f64,
    y: f64,
    scheme: &SummationScheme,
    convention: Convention,
    tol: Tolerances,
) -> Result<DuffinValue> {
    scheme.validate()?;
    let s = setup(x, y, convention, tol)?;
    let mu = mobius_sieve(scheme.m_max)?;
    let terms: Vec<(f64, f64, f64, usize)> = (1..scheme.m_max + 1)
        .into_par_iter()
        .with_min_len(64)
        .map(|m| {
            let mu_m = mu[m - 1];
            if mu_m == 0 {
                return (0.0, 0.0, 0.0, 0);
            }
            let mf = m as f64;
            let h = 1.0 / (mf * s.x);
            let inner = inner_sum(&s, h, scheme.n_max);
            let sign = mu_m as f64 / mf;
            let rem = inner.value - mf * s.x * s.mean + s.c0 / 2.0 + h * s.f1 / 12.0 - h.powi(3) * s.f3 / 720.0;
            (sign * rem, sign * inner.value, inner.tail_bound / mf, inner.n_terms)
        })
        .collect();
    let b: Vec<f64> = terms.iter().map(|t| t.0).collect();
    let raw: Vec<f64> = terms.iter().map(|t| t.1).collect();
    let tail_bound: f64 = terms.iter().map(|t| t.2).sum();
    let n_evals: usize = terms.iter().map(|t| t.3).sum();
    let sums = p_summation_detail(&b, &scheme.abel_radii);
    let raw = p_summation_detail(&raw, &scheme.abel_radii);
    let correction = -s.f1 / (12.0 * x * ZETA2) + s.f3 / (720.0 * x.powi(3) * ZETA4);
    let lo = scheme.m_max - scheme.m_max / 10;
    let term_scale_at_cap = b[lo..].iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let value = sums.value(scheme.method) + correction;
    if !value.is_finite() {
        return Err(Error::Overflow(format!("Duffin series at ({x}, {y}) is not finite")));
    }
    Ok(DuffinValue {
        x,
        y,
        convention,
        value,
        sums,
        correction,
        raw,
        tail_bound,
        m_max: scheme.m_max,
        n_evals,
        term_scale_at_cap,
    })
}

/// As [`duffin_series_detail`], failing with an instability error when the
/// normalized Abel–Cesàro spread exceeds 100× the scheme target.
pub fn duffin_series(x: f64, y: f64, scheme: &SummationScheme, convention: Convention, tol: Tolerances) -> Result<DuffinValue> {
    let v = duffin_series_detail(x, y, scheme, convention, tol)?;
    let spread = v.normalized_spread(ADJUDICATED_NORMALIZATION);
    let limit = 100.0 * scheme.target;
    if !(spread <= limit) {
        return Err(Error::Instability { spread, limit });
    }
    Ok(v)
}

/// f(x, y) from the series under the pinned convention and normalization.
pub fn duffin_harmonic(x: f64, y: f64, scheme: &SummationScheme, tol: Tolerances) -> Result<DuffinValue> {
    duffin_series(x, y, scheme, ADJUDICATED_CONVENTION, tol)
}

#[cfg(test)]
mod tests {
    use super::super::summation::SummationMethod;
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn phi_curvature_matches_second_moment() {
        // φ″(0) = −(2/π)∫_0^∞ t² Ξ(t)/(t²+¼) dt, moment by quadrature
        use crate::identities::eq11::{xi_profile, xi_profile_hint};
        use crate::quadrature::integrate_semi_infinite;
        let m2 = integrate_semi_infinite(|t| t * t * xi_profile(t), xi_profile_hint(), Tolerances::default()).unwrap();
        let want = -2.0 / PI * m2.value;
        assert!((phi_second_derivative_at_zero() - want).abs() < 1e-9, "{}", want);
    }

    #[test]
    fn inner_sum_matches_direct_summation() {
        let s = setup(1.0, 1.0, Convention::TwoPi, tol()).unwrap();
        for h in [1.0, 0.2, 0.01] {
            let inner = inner_sum(&s, h, 1_000_000);
            let direct: f64 = (1..200_000)
                .map(|n| {
                    let u = n as f64 * h;
                    super::super::cosine::cosine_transform_C(u, Convention::TwoPi) * (-s.beta * u).exp()
                })
                .sum();
            assert!((inner.value - direct).abs() < 1e-12 * direct.abs().max(1.0), "h = {h}");
            assert!(inner.tail_bound < 1e-20);
        }
    }

    #[test]
    fn mean_matches_upsilon() {
        // ∫F = Υ(y + ½)/κ
        let s = setup(1.0, 2.0, Convention::TwoPi, tol()).unwrap();
        let ups = crate::identities::upsilon::upsilon_series(Complex64::new(2.5, 0.0), tol()).unwrap().re;
        assert!((s.mean - ups / (2.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn terms_decay_and_match_poisson() {
        let scheme = SummationScheme::default().with_m_max(400).with_method(SummationMethod::Partial);
        let v = duffin_series_detail(2.0, 1.0, &scheme, Convention::TwoPi, tol()).unwrap();
        assert!(v.term_scale_at_cap < 1e-12);
        let f = v.normalized(ADJUDICATED_NORMALIZATION);
        assert!((f - 0.230_024_637_639_766_44).abs() < 1e-10, "{f}");
    }

    #[test]
    fn divergence_and_domain() {
        let s = SummationScheme::default().with_m_max(16);
        assert!(matches!(duffin_series_detail(1.0, -1.0, &s, Convention::TwoPi, tol()), Err(Error::Divergence(_))));
        assert!(matches!(duffin_series_detail(1.0, -0.01, &s, Convention::TwoPi, tol()), Err(Error::Domain(_))));
        assert!(matches!(duffin_series_detail(0.0, 1.0, &s, Convention::TwoPi, tol()), Err(Error::Domain(_))));
    }
}
