//! Regularized evaluation of the outer Möbius sum.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::KahanSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SummationMethod {
    Partial,
    Abel,
    Cesaro,
}

impl SummationMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SummationMethod::Partial => "partial",
            SummationMethod::Abel => "abel",
            SummationMethod::Cesaro => "cesaro",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "partial" => Some(SummationMethod::Partial),
            "abel" => Some(SummationMethod::Abel),
            "cesaro" => Some(SummationMethod::Cesaro),
            _ => None,
        }
    }
}

pub const DEFAULT_ABEL_RADII: [f64; 4] = [0.90, 0.95, 0.975, 0.99];

/// Outer index cap large enough that the (C,1) bias is below 1e−4 on the
/// x ∈ {1, 2}, y ∈ {1, 2, 4} grid.
pub const DEFAULT_M_MAX: usize = 40_000;
/// Inner cap; the θ part of every inner sum ends well before this for m ≤ M_max.
pub const DEFAULT_N_MAX: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummationScheme {
    pub method: SummationMethod,
    pub m_max: usize,
    pub n_max: usize,
    pub abel_radii: Vec<f64>,
    /// Tolerance the spread is judged against: spread > 100·target is an instability.
    pub target: f64,
}

impl Default for SummationScheme {
    fn default() -> Self {
        SummationScheme {
            method: SummationMethod::Abel,
            m_max: DEFAULT_M_MAX,
            n_max: DEFAULT_N_MAX,
            abel_radii: DEFAULT_ABEL_RADII.to_vec(),
            target: 1e-4,
        }
    }
}

impl SummationScheme {
    pub fn new(method: SummationMethod, m_max: usize, n_max: usize, abel_radii: Vec<f64>, target: f64) -> Result<Self> {
        let s = SummationScheme { method, m_max, n_max, abel_radii, target };
        s.validate()?;
        Ok(s)
    }

    pub fn with_m_max(mut self, m_max: usize) -> Self {
        self.m_max = m_max;
        self
    }

    pub fn with_method(mut self, method: SummationMethod) -> Self {
        self.method = method;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.m_max < 8 || self.n_max < 8 {
            return Err(Error::domain(format!(
                "summation caps must be ≥ 8, got M_max = {}, N_max = {}",
                self.m_max, self.n_max
            )));
        }
        let r = &self.abel_radii;
        if r.is_empty() || r.iter().any(|&x| !(x > 0.0 && x < 1.0)) || r.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!("Abel radii must be strictly increasing in (0, 1), got {r:?}")));
        }
        if !(self.target > 0.0) {
            return Err(Error::domain(format!("stability target must be positive, got {}", self.target)));
        }
        Ok(())
    }
}

/// All three means for one sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PSum {
    pub partial: f64,
    pub abel: f64,
    pub cesaro: f64,
    /// |Abel − Cesàro|.
    pub spread: f64,
    /// Largest r^{M+1} among the radii: what the truncated Abel sums miss, relative to term size.
    pub abel_truncation: f64,
}

impl PSum {
    pub fn value(&self, method: SummationMethod) -> f64 {
        match method {
            SummationMethod::Partial => self.partial,
            SummationMethod::Abel => self.abel,
            SummationMethod::Cesaro => self.cesaro,
        }
    }
}

/// Neville evaluation at 0 of the polynomial through (d_i, v_i).
fn extrapolate_to_zero(d: &[f64], v: &[f64]) -> f64 {
    let mut p = v.to_vec();
    let n = p.len();
    for k in 1..n {
        for i in 0..n - k {
            p[i] = (d[i + k] * p[i] - d[i] * p[i + 1]) / (d[i + k] - d[i]);
        }
    }
    p[0]
}

/// Partial, Abel (Richardson in −ln r toward r = 1) and Cesàro (C,1) means of
/// a_1..a_M, with terms[0] = a_1. Never fails; see [`p_summation`].
pub fn p_summation_detail(terms: &[f64], radii: &[f64]) -> PSum {
    let m = terms.len();
    let mut partial = KahanSum::new();
    let mut cesaro = KahanSum::new();
    for &a in terms {
        partial.add(a);
        cesaro.add(partial.value());
    }
    let cesaro = if m == 0 { 0.0 } else { cesaro.value() / m as f64 };
    let d: Vec<f64> = radii.iter().map(|r| -r.ln()).collect();
    let abel_values: Vec<f64> = radii
        .iter()
        .map(|&r| {
            let mut acc = KahanSum::new();
            let mut w = 1.0;
            for (i, &a) in terms.iter().enumerate() {
                if i % 64 == 0 {
                    w = r.powi(i as i32 + 1);
                } else {
                    w *= r;
                }
                acc.add(a * w);
            }
            acc.value()
        })
        .collect();
    let abel = extrapolate_to_zero(&d, &abel_values);
    let rmax = radii.iter().cloned().fold(0.0, f64::max);
    PSum { partial: partial.value(), abel, cesaro, spread: (abel - cesaro).abs(), abel_truncation: rmax.powi(m as i32 + 1) }
}

/// Regularized sum of a_1..a_M under the scheme, with the Abel–Cesàro spread.
/// Fails with an instability error when spread > 100·target.
pub fn p_summation(terms: &[f64], scheme: &SummationScheme) -> Result<(f64, f64)> {
    scheme.validate()?;
    let m = terms.len().min(scheme.m_max);
    let p = p_summation_detail(&terms[..m], &scheme.abel_radii);
    let limit = 100.0 * scheme.target;
    if !(p.spread <= limit) {
        return Err(Error::Instability { spread: p.spread, limit });
    }
    Ok((p.value(scheme.method), p.spread))
}
