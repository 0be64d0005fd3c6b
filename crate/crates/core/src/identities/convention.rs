//! The one place where the cos(xt) kernel of the Ξ integral meets the
//! e^{−2πixξ} Fourier convention.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::specfun::phi;

/// Kernel of the cosine transform used for C(u).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// ∫_0^∞ f(t) cos(ut) dt.
    Plain,
    /// ∫_0^∞ f(t) cos(2πut) dt.
    TwoPi,
}

impl Convention {
    /// Frequency scale κ with C(u) = (π/2)·φ(κu).
    pub fn kappa(self) -> f64 {
        match self {
            Convention::Plain => 1.0,
            Convention::TwoPi => 2.0 * PI,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Plain => "plain",
            Convention::TwoPi => "twopi",
        }
    }
}

/// ∫_0^∞ Ξ(t)/(t²+¼) · cos(κut) dt in closed form.
pub fn cosine_transform(u: f64, convention: Convention) -> f64 {
    PI / 2.0 * phi(convention.kappa() * u)
}

/// ∫_ℝ Ξ(t)/(t²+¼) · e^{−2πitz} dt = 2·(cosine transform under cos(2πzt)).
pub fn fourier_transform_2pi(z: f64) -> f64 {
    2.0 * cosine_transform(z, Convention::TwoPi)
}
