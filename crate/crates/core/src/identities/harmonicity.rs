//! Discrete Laplacian of u(x, y) in all n+1 coordinates.

use num_complex::Complex64;

use super::dirichlet::{extension_axes, BoundaryData, ProfileCache};
use super::kernel::poisson_kernel_scaled;
use super::report::{IdentityId, Param, VerificationReport};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_grid_with, TensorGrid, DEFAULT_NODE_BUDGET};
use crate::tolerances::Tolerances;

/// Residual bound for a pass.
pub const HARMONICITY_RESIDUAL_LIMIT: f64 = 1e-4;
/// Required reduction of the residual when h is halved (O(h²) would give 4).
pub const HARMONICITY_MIN_RATIO: f64 = 3.0;

/// Central-difference Laplacian of `u` at (x, y) with step h.
fn laplacian<U: Fn(&[f64], f64) -> f64>(u: U, x: &[f64], y: f64, h: f64) -> f64 {
    let c = u(x, y);
    let mut acc = (u(x, y + h) - 2.0 * c + u(x, y - h)) / (h * h);
    let mut p = x.to_vec();
    for d in 0..x.len() {
        p[d] = x[d] + h;
        let up = u(&p, y);
        p[d] = x[d] - h;
        let dn = u(&p, y);
        p[d] = x[d];
        acc += (up - 2.0 * c + dn) / (h * h);
    }
    acc
}

fn judge(
    inputs: Vec<Param>,
    r1: f64,
    r2: f64,
    err_budget: f64,
    evals: usize,
    what: &str,
) -> VerificationReport {
    let ratio = r1.abs() / r2.abs().max(f64::MIN_POSITIVE);
    let pass = r1.abs() <= HARMONICITY_RESIDUAL_LIMIT && ratio >= HARMONICITY_MIN_RATIO;
    VerificationReport::judged(
        IdentityId::Harmonicity,
        inputs,
        Complex64::new(r1, 0.0),
        Complex64::new(0.0, 0.0),
        err_budget,
        evals,
        pass,
        format!(
            "{what}: residual(h) = {:.3e}, residual(h/2) = {:.3e}, reduction {:.2} (need >= {HARMONICITY_MIN_RATIO}, residual <= {HARMONICITY_RESIDUAL_LIMIT:e})",
            r1.abs(),
            r2.abs(),
            ratio
        ),
    )
}

/// Laplacian residual of u = g ∗ K_y at (x, y) for steps h and h/2.
///
/// All stencil values share one quadrature grid, so the discrete sum is
/// itself exactly harmonic and the residual is pure finite-difference
/// truncation.
pub fn harmonicity_check(data: BoundaryData, x: &[f64], y: f64, h: f64, tol: Tolerances) -> Result<VerificationReport> {
    if x.len() != data.n {
        return Err(Error::domain("point dimension does not match the boundary data"));
    }
    if !(h > 0.0 && y > 3.0 * h) {
        return Err(Error::domain(format!("harmonicity check needs 0 < 3h < y, got h = {h}, y = {y}")));
    }
    let inner = tol.with_rel(tol.rel_tol.min(1e-10)).with_abs(tol.abs_tol.min(1e-10));
    let axes = extension_axes(x, y, false);
    let mut cache: Option<(ProfileCache, TensorGrid)> = None;
    let (center, grid) = integrate_grid_with(&axes, inner, DEFAULT_NODE_BUDGET, |g| {
        let c = ProfileCache::new(g);
        let s = c.convolve(g, x, y);
        cache = Some((c, g.clone()));
        Ok(s)
    })?;
    let (cache, _) = cache.unwrap();
    let u = |p: &[f64], yy: f64| cache.convolve(&grid, p, yy).kronrod;
    let r1 = laplacian(u, x, y, h);
    let r2 = laplacian(u, x, y, h / 2.0);
    let stencils = 2 * (2 * data.n + 3);
    let mut inputs = vec![Param::new("n", data.n as f64), Param::new("y", y), Param::new("h", h)];
    inputs.extend(x.iter().map(|&v| Param::new("x", v)));
    Ok(judge(inputs, r1, r2, center.err_estimate, center.n_evals + stencils * grid.node_count(), "u = g * K_y on a fixed grid"))
}

/// The same stencil applied to K_y(x) itself, a known harmonic function.
pub fn harmonicity_kernel_check(x: &[f64], y: f64, h: f64) -> Result<VerificationReport> {
    if !(h > 0.0 && y > 3.0 * h) {
        return Err(Error::domain(format!("harmonicity check needs 0 < 3h < y, got h = {h}, y = {y}")));
    }
    let u = |p: &[f64], yy: f64| poisson_kernel_scaled(p, yy).unwrap_or(f64::NAN);
    let r1 = laplacian(u, x, y, h);
    let r2 = laplacian(u, x, y, h / 2.0);
    let mut inputs = vec![Param::new("n", x.len() as f64), Param::new("y", y), Param::new("h", h)];
    inputs.extend(x.iter().map(|&v| Param::new("x", v)));
    Ok(judge(inputs, r1, r2, 0.0, 2 * (2 * x.len() + 3), "pure kernel K_y"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_is_harmonic() {
        let r = harmonicity_kernel_check(&[0.3], 1.0, 1e-2).unwrap();
        assert!(r.pass, "{}", r.variant_notes);
        let r = harmonicity_kernel_check(&[0.3, -0.2], 1.0, 1e-2).unwrap();
        assert!(r.pass, "{}", r.variant_notes);
    }

    #[test]
    fn non_harmonic_function_is_caught() {
        let r = laplacian(|p: &[f64], y: f64| p[0] * p[0] + y, &[0.0], 1.0, 1e-2);
        assert!((r - 2.0).abs() < 1e-8);
    }

    #[test]
    fn extension_in_one_dimension() {
        let d = BoundaryData::new(1).unwrap();
        let r = harmonicity_check(d, &[0.0], 1.0, 1e-2, Tolerances::default()).unwrap();
        assert!(r.pass, "{}", r.variant_notes);
        assert!(harmonicity_check(d, &[0.0], 0.02, 1e-2, Tolerances::default()).is_err());
    }
}
