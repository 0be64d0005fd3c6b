//! ∫_0^∞ Ξ(t)/(t²+¼)·cos(xt) dt = (π/2)(e^{x/2} − 2e^{−x/2}ψ(e^{−2x})).

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::report::{IdentityId, Param, PassRule, VerificationReport};
use crate::error::Result;
use crate::quadrature::{integrate_semi_infinite_with, DecayHint, QuadOptions, QuadResult};
use crate::specfun::{phi, Xi_real};
use crate::tolerances::Tolerances;

/// |Ξ(t)/(t²+¼)| ≤ XI_PROFILE_SCALE·e^{−πt/4} on t ≥ 0 (the maximum of
/// |f(t)|e^{πt/4} is f(0) ≈ 1.988).
pub const XI_PROFILE_SCALE: f64 = 2.5;

/// Decay hint of the profile f(t) = Ξ(t)/(t²+¼).
pub fn xi_profile_hint() -> DecayHint {
    DecayHint { rate: PI / 4.0, scale: XI_PROFILE_SCALE }
}

/// f(t) = Ξ(t)/(t²+¼); real, even, decaying like e^{−π|t|/4}.
///
/// Ξ is only evaluated where the profile is representable; far out the
/// value is below 1e−300 and returned as zero.
pub fn xi_profile(t: f64) -> f64 {
    let a = t.abs();
    if a > 850.0 {
        return 0.0;
    }
    Xi_real(a).map(|v| v / (a * a + 0.25)).unwrap_or(0.0)
}

/// Left side by quadrature, panel width capped at π/(4|x|).
pub fn eq11_lhs(x: f64, tol: Tolerances) -> Result<QuadResult<f64>> {
    let x = x.abs();
    let opts = QuadOptions {
        max_panel_width: (x > 0.0).then(|| PI / (4.0 * x)),
        breakpoints: vec![0.5, 1.0, 2.0],
    };
    integrate_semi_infinite_with(|t| xi_profile(t) * (x * t).cos(), xi_profile_hint(), tol, &opts)
}

/// Right side in closed form. Evaluated as (π/2)φ(|x|), which has no
/// cancellation and cannot overflow; it decays like (π/2)e^{−|x|/2}.
pub fn eq11_rhs(x: f64) -> Result<f64> {
    Ok(PI / 2.0 * phi(x))
}

/// One report per grid point, in input order.
pub fn verify_eq11(x_grid: &[f64], tol: Tolerances, rule: PassRule) -> Result<Vec<VerificationReport>> {
    x_grid
        .par_iter()
        .map(|&x| {
            let lhs = eq11_lhs(x, tol)?;
            let rhs = eq11_rhs(x)?;
            let notes = if x < 0.0 {
                format!("evaluated at |x| = {} by evenness of the cosine kernel", x.abs())
            } else {
                String::new()
            };
            Ok(VerificationReport::assess(
                IdentityId::Eq11,
                vec![Param::new("x", x)],
                Complex64::new(lhs.value, 0.0),
                Complex64::new(rhs, 0.0),
                lhs.err_estimate + 8.0 * f64::EPSILON * rhs.abs(),
                lhs.n_evals + 1,
                rule,
                notes,
            ))
        })
        .collect()
}
