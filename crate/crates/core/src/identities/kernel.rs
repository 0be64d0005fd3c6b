//! The half-space Poisson kernel K(x) = Γ((n+1)/2)/(π^{(n+1)/2}(1+|x|²)^{(n+1)/2}).

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Γ((n+1)/2)/π^{(n+1)/2} for the dimensions in use.
pub fn kernel_constant(n: usize) -> f64 {
    let half = (n as f64 + 1.0) / 2.0;
    // Γ((n+1)/2) for small n via the half-integer recurrence
    let mut g = if n % 2 == 1 { 1.0 } else { PI.sqrt() };
    let mut a = if n % 2 == 1 { 1.0 } else { 0.5 };
    while a < half {
        g *= a;
        a += 1.0;
    }
    g / PI.powf(half)
}

/// K(x) for x ∈ ℝⁿ.
pub fn poisson_kernel(x: &[f64]) -> f64 {
    let n = x.len();
    let r2: f64 = x.iter().map(|v| v * v).sum();
    kernel_constant(n) / (1.0 + r2).powf((n as f64 + 1.0) / 2.0)
}

/// K_y(x) = y^{−n}K(x/y) = c_n·y/(y²+|x|²)^{(n+1)/2}.
pub fn poisson_kernel_scaled(x: &[f64], y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::domain(format!("K_y needs y > 0, got {y}")));
    }
    Ok(kernel_at(x.len(), x.iter().map(|v| v * v).sum(), y))
}

/// c_n·y/(y²+r²)^{(n+1)/2} from the squared radius.
pub(crate) fn kernel_at(n: usize, r2: f64, y: f64) -> f64 {
    let p = y * y + r2;
    let c = kernel_constant(n);
    match n {
        1 => c * y / p,
        2 => c * y / (p * p.sqrt()),
        3 => c * y / (p * p),
        _ => c * y / p.powf((n as f64 + 1.0) / 2.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_rn, Axis};
    use crate::tolerances::Tolerances;

    #[test]
    fn values_at_origin() {
        assert!((poisson_kernel(&[0.0]) - 1.0 / PI).abs() < 1e-16);
        assert!((poisson_kernel(&[0.0, 0.0]) - 1.0 / (2.0 * PI)).abs() < 1e-16);
        assert!((poisson_kernel(&[0.0; 3]) - 1.0 / (PI * PI)).abs() < 1e-16);
        assert!((poisson_kernel_scaled(&[0.3, -1.0], 1.0).unwrap() - poisson_kernel(&[0.3, -1.0])).abs() < 1e-17);
        assert!((poisson_kernel_scaled(&[0.0], 2.0).unwrap() - 0.5 / PI).abs() < 1e-16);
        assert!(poisson_kernel_scaled(&[0.0], 0.0).is_err());
    }

    #[test]
    fn normalization_one_dimension_closed_form() {
        // ∫_{−R}^{R} K_y = (2/π)·arctan(R/y) checks the rational-axis quadrature
        let t = Tolerances::default().with_rel(1e-10).with_abs(1e-10);
        for y in [0.5, 3.0] {
            let ax = Axis::Rational { scale: y, even: true, panels: 4 };
            let r = integrate_rn(|z: &[f64]| poisson_kernel_scaled(z, y).unwrap(), &[ax], t).unwrap();
            assert!((r.value - 1.0).abs() < 1e-10);
            let fin = Axis::Finite { a: -10.0, b: 10.0, panels: 16 };
            let r = integrate_rn(|z: &[f64]| poisson_kernel_scaled(z, y).unwrap(), &[fin], t).unwrap();
            assert!((r.value - 2.0 / PI * (10.0 / y).atan()).abs() < 1e-10);
        }
    }
}
