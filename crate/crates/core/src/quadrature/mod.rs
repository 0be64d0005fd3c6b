//! Controlled-error quadrature: Gauss–Kronrod panels, adaptive semi-infinite
//! integrals with explicit exponential tail bounds, Laplace transforms and
//! tensor-product integrals over ℝⁿ.

mod adaptive;
mod rules;
pub mod suite;
mod tensor;

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use adaptive::{
    integrate_finite, integrate_finite_with, integrate_semi_infinite,
    integrate_semi_infinite_with, laplace_transform, ExpBound, QuadOptions,
};
pub use rules::{gauss_kronrod_15, GK15_NODES};
pub use tensor::{
    integrate_grid_with, integrate_rn, integrate_rn_with, Axis, AxisGrid, TensorGrid, TensorSums,
    DEFAULT_NODE_BUDGET,
};

/// Outcome of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<V> {
    pub value: V,
    /// Claimed bound on |exact − value|, including truncated tails.
    pub err_estimate: f64,
    pub n_evals: usize,
    /// Where an infinite range was cut (∞ when nothing was truncated).
    pub truncation_point: f64,
}

/// |f(t)| ≤ scale · e^{−rate·t} on the integration range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayHint {
    pub rate: f64,
    pub scale: f64,
}

impl DecayHint {
    pub fn new(rate: f64, scale: f64) -> Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(Error::domain(format!("decay rate must be positive, got {rate}")));
        }
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::domain(format!("decay scale must be positive, got {scale}")));
        }
        Ok(DecayHint { rate, scale })
    }

    /// Smallest T ≥ 0 with scale·e^{−rate·T}/rate ≤ budget.
    pub fn truncation(&self, budget: f64) -> f64 {
        ((self.scale / (self.rate * budget)).ln() / self.rate).max(0.0)
    }

    /// ∫_T^∞ scale·e^{−rate·t} dt.
    pub fn tail(&self, t: f64) -> f64 {
        self.scale * (-self.rate * t).exp() / self.rate
    }
}

/// Scalars that can be integrated: real or complex.
pub trait QuadValue:
    Copy + Send + Sync + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn magnitude(&self) -> f64;
    fn parts(&self) -> (f64, f64);
    fn from_parts(re: f64, im: f64) -> Self;
}

impl QuadValue for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn parts(&self) -> (f64, f64) {
        (*self, 0.0)
    }
    fn from_parts(re: f64, _im: f64) -> Self {
        re
    }
}

impl QuadValue for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn parts(&self) -> (f64, f64) {
        (self.re, self.im)
    }
    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
}

pub(crate) fn compensated_total<V: QuadValue>(values: impl IntoIterator<Item = V>) -> V {
    let mut acc = crate::sum::ComplexKahanSum::new();
    for v in values {
        let (re, im) = v.parts();
        acc.add(Complex64::new(re, im));
    }
    let t = acc.value();
    V::from_parts(t.re, t.im)
}
