use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::ln_gamma_complex;
use super::zeta::zeta_complex;
use super::STIELTJES;
use crate::error::{finite, Result};
use crate::tolerances::Tolerances;

/// (s−1)ζ(s) near s = 1 from the Laurent expansion.
fn zeta_times_sm1_near_one(w: Complex64) -> Complex64 {
    let [g0, g1, g2] = STIELTJES;
    1.0 + w * (g0 + w * (-g1 + w * (g2 / 2.0)))
}

/// ξ(s) = ½ s(s−1) π^{−s/2} Γ(s/2) ζ(s), entire.
///
/// Uses ξ(s) = ξ(1−s) to map into Re s ≥ ½, which makes the functional
/// equation exact and avoids the trivial zeros of ζ.
pub fn xi(s: Complex64) -> Result<Complex64> {
    let s = if s.re < 0.5 { 1.0 - s } else { s };
    let w = s - 1.0;
    let zs = if w.norm() < 1e-3 {
        zeta_times_sm1_near_one(w)
    } else {
        zeta_complex(s, Tolerances::default())? * w
    };
    let ln_pref = ln_gamma_complex(s / 2.0)? - s / 2.0 * PI.ln();
    let v = 0.5 * s * zs * ln_pref.exp();
    finite(v, "ξ(s)")
}

/// ξ on the real axis.
pub fn xi_real(s: f64) -> Result<f64> {
    Ok(xi(Complex64::new(s, 0.0))?.re)
}

/// Ξ(t) = ξ(½ + it). Evenness holds exactly: t and −t map to the same
/// evaluation point; for real t the result is real.
#[allow(non_snake_case)]
pub fn Xi(t: Complex64) -> Result<Complex64> {
    let t = if t.re < 0.0 || (t.re == 0.0 && t.im < 0.0) { -t } else { t };
    let v = xi(Complex64::new(0.5 - t.im, t.re))?;
    Ok(if t.im == 0.0 { Complex64::new(v.re, 0.0) } else { v })
}

/// Ξ(t) for real t.
#[allow(non_snake_case)]
pub fn Xi_real(t: f64) -> Result<f64> {
    Ok(Xi(Complex64::new(t, 0.0))?.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn reference_values() {
        let half = xi_real(0.5).unwrap();
        assert!((half - 0.497_120_778_188_314_1).abs() < 1e-14);
        assert!((xi_real(2.0).unwrap() - PI / 6.0).abs() < 1e-15);
        assert!((xi_real(0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((xi_real(1.0).unwrap() - 0.5).abs() < 1e-15);
        for (t, want) in [
            (1.0, 0.485_757_429_670_983_5),
            (5.0, 0.275_549_997_344_204_2),
            (10.0, 0.037_967_850_310_935_684),
        ] {
            let got = Xi_real(t).unwrap();
            assert!(((got - want) / want).abs() < 1e-12, "Ξ({t}) = {got}");
        }
    }

    #[test]
    fn smooth_through_the_laurent_window() {
        for d in [1.1e-3, 9e-4, 1e-6, -5e-4, -1.2e-3] {
            let a = xi_real(1.0 + d).unwrap();
            // ξ'(1) = −ξ'(0) ≈ 0.0230957...; a Taylor bound suffices here
            assert!((a - 0.5).abs() < 0.03 * d.abs() + 1e-15, "ξ(1{d:+e}) = {a}");
        }
        let near = xi(c(1.0, 5e-4)).unwrap();
        let far = xi(c(1.0, 2e-3)).unwrap();
        assert!((near - far).norm() < 1e-4);
    }

    #[test]
    fn first_zero_height() {
        assert!(Xi_real(14.134_725_141_734_694).unwrap().abs() < 1e-6);
    }

    #[test]
    fn evenness_is_exact() {
        for t in [0.3, 5.0, 17.25, 44.0] {
            assert_eq!(Xi_real(t).unwrap(), Xi_real(-t).unwrap());
            let z = c(t, 0.2);
            assert_eq!(Xi(z).unwrap(), Xi(-z).unwrap());
        }
    }
}
