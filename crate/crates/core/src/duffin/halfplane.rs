//! Half-plane Poisson integral of f(t) = Ξ(t)/(t² + ¼).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::identities::eq11::{xi_profile, XI_PROFILE_SCALE};
use crate::quadrature::{integrate_semi_infinite_with, laplace_transform, DecayHint, ExpBound, QuadOptions, QuadResult};
use crate::specfun::phi;
use crate::tolerances::Tolerances;

/// f(x, y) = (1/π)∫_ℝ y/(y² + (x−t)²) f(t) dt, folded onto t ≥ 0.
pub fn poisson_halfplane(x: f64, y: f64, tol: Tolerances) -> Result<QuadResult<f64>> {
    if !(y > 0.0) || !y.is_finite() || !x.is_finite() {
        return Err(Error::domain(format!("poisson_halfplane needs finite x and y > 0, got ({x}, {y})")));
    }
    let x = x.abs();
    let k = move |d: f64| y / (PI * (y * y + d * d));
    let hint = DecayHint::new(PI / 4.0, XI_PROFILE_SCALE * 2.0 / (PI * y))?;
    // the kernel peak has width y; grade breakpoints geometrically out from t = x
    let mut bps = vec![x];
    let mut d = y;
    while d < 4.0 {
        bps.push(x + d);
        if x - d > 0.0 {
            bps.push(x - d);
        }
        d *= 4.0;
    }
    bps.extend([0.5, 1.0, 2.0]);
    bps.retain(|&b| b > 0.0);
    bps.sort_by(f64::total_cmp);
    bps.dedup();
    let opts = QuadOptions { breakpoints: bps, ..Default::default() };
    integrate_semi_infinite_with(|t| xi_profile(t) * (k(x - t) + k(x + t)), hint, tol, &opts)
}

/// The same function by its spectral form ∫_0^∞ φ(ω)cos(ωx)e^{−yω} dω.
pub fn poisson_halfplane_spectral(x: f64, y: f64, tol: Tolerances) -> Result<QuadResult<f64>> {
    if !(y >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("spectral Poisson form needs y ≥ 0, got {y}")));
    }
    let r = laplace_transform(
        |w| phi(w) * (w * x).cos(),
        num_complex::Complex64::new(y, 0.0),
        ExpBound { exponent: -0.5, scale: 1.0 },
        tol,
    )?;
    Ok(QuadResult { value: r.value.re, err_estimate: r.err_estimate, n_evals: r.n_evals, truncation_point: r.truncation_point })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default().with_rel(1e-12).with_abs(1e-13)
    }

    #[test]
    fn reference_grid() {
        for (x, y, want) in [
            (1.0, 1.0, 0.451_283_280_907_294_86),
            (2.0, 1.0, 0.230_024_637_639_766_44),
            (1.0, 2.0, 0.335_524_837_947_547_56),
            (2.0, 4.0, 0.177_899_624_149_987_2),
            (1.0, 4.0, 0.203_954_374_691_045_2),
            (0.0, 1.0, 0.656_315_920_599_714_6),
        ] {
            let r = poisson_halfplane(x, y, tol()).unwrap();
            assert!((r.value - want).abs() < 1e-11, "({x},{y}): {}", r.value);
            let s = poisson_halfplane_spectral(x, y, tol()).unwrap();
            assert!((s.value - want).abs() < 1e-11, "spectral ({x},{y}): {}", s.value);
        }
    }

    #[test]
    fn near_boundary_and_far_field() {
        let f1 = xi_profile(1.0);
        let r = poisson_halfplane(1.0, 1e-2, tol()).unwrap();
        assert!((r.value - f1).abs() < 2e-2 * f1);
        let r = poisson_halfplane(1.0, 1e-6, tol()).unwrap();
        assert!((r.value - f1).abs() < 1e-5);
        // y → ∞: (1/(πy))∫_ℝ f = (2/(πy))·(π/2)φ(0)
        let y = 50.0;
        let r = poisson_halfplane(0.0, y, tol()).unwrap();
        let far = phi(0.0) / y;
        assert!((r.value - far).abs() < 5e-3 * far, "{} vs {far}", r.value);
    }

    #[test]
    fn large_height_small_y() {
        let a = poisson_halfplane(14.134_725_141_734_694, 1e-4, tol()).unwrap();
        let b = poisson_halfplane_spectral(14.134_725_141_734_694, 1e-4, tol()).unwrap();
        assert!((a.value - b.value).abs() < 1e-10, "{} {}", a.value, b.value);
        // first order in y: about 4.7e-3·y at the first zero
        assert!(a.value.abs() < 1e-6, "{}", a.value);
    }
}
