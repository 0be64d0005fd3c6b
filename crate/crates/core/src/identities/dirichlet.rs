//! Harmonic extension u = g ∗ K_y of the product boundary data
//! g(x) = ∏ Ξ(x_l)/(x_l²+¼) and the Fourier-side expression for u(0, y).

use std::f64::consts::PI;

use num_complex::Complex64;

use super::convention::fourier_transform_2pi;
use super::eq11::{xi_profile, XI_PROFILE_SCALE};
use super::kernel::{kernel_at, kernel_constant};
use super::report::{IdentityId, Param, PassRule, VerificationReport};
use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_grid_with, integrate_semi_infinite_with, Axis, DecayHint, QuadOptions, QuadResult, TensorGrid,
    DEFAULT_NODE_BUDGET,
};
use crate::specfun::{phi, xi_real};
use crate::tolerances::Tolerances;

/// Bound on ∫_ℝ |Ξ(t)/(t²+¼)| dt from the decay hint.
const PROFILE_L1_BOUND: f64 = 2.0 * XI_PROFILE_SCALE / (PI / 4.0);

/// Boundary data g(x) = ∏_{l=1}^{n} Ξ(x_l)/(x_l²+¼) on ℝⁿ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryData {
    pub n: usize,
}

impl BoundaryData {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=3).contains(&n) {
            return Err(Error::domain(format!("boundary data supported for 1 ≤ n ≤ 3, got {n}")));
        }
        Ok(BoundaryData { n })
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        x.iter().map(|&t| xi_profile(t)).product()
    }

    /// g(0) = (ξ(½)/(¼))ⁿ.
    pub fn at_origin(&self) -> Result<f64> {
        Ok((xi_real(0.5)? * 4.0).powi(self.n as i32))
    }
}

fn check_point(x: &[f64], y: f64, data: &BoundaryData) -> Result<()> {
    if x.len() != data.n {
        return Err(Error::domain(format!("point has {} coordinates, data has n = {}", x.len(), data.n)));
    }
    if !(y > 0.0) {
        return Err(Error::domain(format!("harmonic extension needs y > 0, got {y}")));
    }
    Ok(())
}

/// Axes for ∫ g(t)K_y(x−t) dt; a coordinate with x_l = 0 is folded by evenness
/// unless `fold` is false.
pub(crate) fn extension_axes(x: &[f64], y: f64, fold: bool) -> Vec<Axis> {
    let n = x.len();
    let scale = XI_PROFILE_SCALE * PROFILE_L1_BOUND.powi(n as i32 - 1) * kernel_constant(n) / y.powi(n as i32);
    let hint = DecayHint { rate: PI / 4.0, scale };
    x.iter()
        .map(|&xl| Axis::Decaying { hint, even: fold && xl == 0.0, feature: (y / 4.0).min(0.125), width: y.min(1.0) })
        .collect()
}

/// Σ w_i g(t_i)K_y(x − t_i) on a fixed grid, with g cached per axis.
pub(crate) struct ProfileCache {
    values: Vec<Vec<f64>>,
}

impl ProfileCache {
    pub(crate) fn new(grid: &TensorGrid) -> Self {
        ProfileCache { values: grid.axes.iter().map(|a| a.nodes.iter().map(|&t| xi_profile(t)).collect()).collect() }
    }

    pub(crate) fn convolve(&self, grid: &TensorGrid, x: &[f64], y: f64) -> crate::quadrature::TensorSums {
        let n = x.len();
        grid.sum_indexed(|idx| {
            let mut g = 1.0;
            let mut r2 = 0.0;
            for d in 0..n {
                g *= self.values[d][idx[d]];
                let dx = x[d] - grid.axes[d].nodes[idx[d]];
                r2 += dx * dx;
            }
            g * kernel_at(n, r2, y)
        })
    }
}

/// u(x, y) = ∫_{ℝⁿ} g(t)K_y(x−t) dt.
pub fn harmonic_extension_u(x: &[f64], y: f64, data: BoundaryData, tol: Tolerances) -> Result<QuadResult<f64>> {
    check_point(x, y, &data)?;
    if data.n == 1 {
        // fold t → −t so only (0, ∞) is integrated; the kernel peak at |x| is a breakpoint
        let x0 = x[0];
        let hint = DecayHint::new(PI / 4.0, XI_PROFILE_SCALE * 2.0 / (PI * y))?;
        let mut breakpoints = vec![0.5, 1.0, 2.0];
        if x0 != 0.0 {
            let a = x0.abs();
            breakpoints.extend([a, (a - y).max(0.0), a + y, (a - 10.0 * y).max(0.0), a + 10.0 * y]);
        }
        let opts = QuadOptions { max_panel_width: Some((4.0 * y).max(0.05)), breakpoints };
        let k1 = kernel_constant(1);
        return integrate_semi_infinite_with(
            |t| {
                let (a, b) = (x0 - t, x0 + t);
                xi_profile(t) * k1 * (y / (y * y + a * a) + y / (y * y + b * b))
            },
            hint,
            tol,
            &opts,
        );
    }
    let axes = extension_axes(x, y, true);
    let (r, _) = integrate_grid_with(&axes, tol, DEFAULT_NODE_BUDGET, |grid| {
        Ok(ProfileCache::new(grid).convolve(grid, x, y))
    })?;
    Ok(r)
}

/// Reading of the Fourier-side expression for u(0, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum U0Variant {
    /// ∫ e^{−2πy|z|} ∏ ĝ₁(z_l) dz with ĝ₁(z) = πφ(2πz), the transform of
    /// Ξ(t)/(t²+¼) in the e^{−2πitz} convention.
    Bridged,
    /// y^{1−n} ∫ e^{−2π|yz|} ∏ φ(z_l) dz, as printed.
    Printed,
}

impl U0Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            U0Variant::Bridged => "bridged 2pi-convention transform pi*phi(2*pi*z), no y^(1-n)",
            U0Variant::Printed => "printed y^(1-n) * int e^(-2 pi |y z|) prod phi(z_l)",
        }
    }
}

fn check_u0(y: f64, n: usize) -> Result<()> {
    if !(1..=3).contains(&n) {
        return Err(Error::domain(format!("u0_alternate supports 1 ≤ n ≤ 3, got {n}")));
    }
    // φ decays like e^{−|z|/2}, so e^{−2πy|z|}∏φ is integrable for every y > 0
    if !(y > 0.0) {
        return Err(Error::domain(format!("u0_alternate needs y > 0, got {y}")));
    }
    Ok(())
}

/// The Fourier-side expression for u(0, y) under the given reading.
pub fn u0_alternate_variant(y: f64, n: usize, tol: Tolerances, variant: U0Variant) -> Result<QuadResult<f64>> {
    check_u0(y, n)?;
    let (factor, rate, scale, width, prefactor): (fn(f64) -> f64, f64, f64, f64, f64) = match variant {
        U0Variant::Bridged => (fourier_transform_2pi, PI * (1.0 + 2.0 * y), PI * 2f64.powi(n as i32 - 1), 1.0 / 16.0, 1.0),
        U0Variant::Printed => (phi, 0.5 + 2.0 * PI * y, 4f64.powi(n as i32 - 1), 0.5, y.powi(1 - n as i32)),
    };
    let hint = DecayHint::new(rate, scale)?;
    let axes = vec![Axis::Decaying { hint, even: true, feature: 1e-4, width }; n];
    let inner_tol = tol.with_abs(tol.abs_tol / prefactor.max(1e-300));
    let (r, _) = integrate_grid_with(&axes, inner_tol, DEFAULT_NODE_BUDGET, |grid| {
        let cache: Vec<Vec<f64>> = grid.axes.iter().map(|a| a.nodes.iter().map(|&z| factor(z)).collect()).collect();
        Ok(grid.sum_indexed(|idx| {
            let mut p = 1.0;
            let mut r2 = 0.0;
            for (d, &i) in idx.iter().enumerate() {
                p *= cache[d][i];
                let z = grid.axes[d].nodes[i];
                r2 += z * z;
            }
            p * (-2.0 * PI * y * r2.sqrt()).exp()
        }))
    })?;
    Ok(QuadResult { value: r.value * prefactor, err_estimate: r.err_estimate * prefactor, ..r })
}

/// The Fourier-side expression under the reading that reproduces u(0, y).
pub fn u0_alternate(y: f64, n: usize, tol: Tolerances) -> Result<QuadResult<f64>> {
    u0_alternate_variant(y, n, tol, U0Variant::Bridged)
}

/// Spread of conv/alt ratios around their first value.
fn ratio_fit(ratios: &[f64]) -> (f64, f64) {
    let c = ratios[0];
    let spread = ratios.iter().map(|r| (r / c - 1.0).abs()).fold(0.0, f64::max);
    (c, spread)
}

/// Convolution form against the Fourier-side form at every (n, y), with one
/// normalization constant adjudicated across all pairs.
pub fn verify_dirichlet(pairs: &[(usize, f64)], tol: Tolerances, rule: PassRule) -> Result<Vec<VerificationReport>> {
    if pairs.is_empty() {
        return Err(Error::domain("verify_dirichlet needs at least one (n, y) pair"));
    }
    struct Row {
        n: usize,
        y: f64,
        conv: QuadResult<f64>,
        alt: [QuadResult<f64>; 2],
    }
    let mut rows = Vec::new();
    for &(n, y) in pairs {
        let data = BoundaryData::new(n)?;
        let conv = harmonic_extension_u(&vec![0.0; n], y, data, tol)?;
        let b = u0_alternate_variant(y, n, tol, U0Variant::Bridged)?;
        let p = u0_alternate_variant(y, n, tol, U0Variant::Printed)?;
        rows.push(Row { n, y, conv, alt: [b, p] });
    }
    let variants = [U0Variant::Bridged, U0Variant::Printed];
    let fits: Vec<(f64, f64)> = (0..2)
        .map(|v| ratio_fit(&rows.iter().map(|r| r.conv.value / r.alt[v].value).collect::<Vec<_>>()))
        .collect();
    let best = if fits[0].1 <= fits[1].1 { 0 } else { 1 };
    let (c, spread) = fits[best];
    let printed_ratios: Vec<String> =
        rows.iter().map(|r| format!("(n={},y={}):{:.6}", r.n, r.y, r.conv.value / r.alt[1].value)).collect();
    let notes = format!(
        "adjudicated variant: {}; global constant c = {:.12} (ratio spread {:.2e} over {} pairs); \
         rejected {} (constant spread {:.2e}; ratios conv/printed {})",
        variants[best].as_str(),
        c,
        spread,
        rows.len(),
        variants[1 - best].as_str(),
        fits[1 - best].1,
        printed_ratios.join(" ")
    );
    Ok(rows
        .iter()
        .map(|r| {
            let alt = r.alt[best];
            VerificationReport::assess(
                IdentityId::DirichletU0,
                vec![Param::new("n", r.n as f64), Param::new("y", r.y), Param::new("constant", c)],
                Complex64::new(r.conv.value, 0.0),
                Complex64::new(c * alt.value, 0.0),
                r.conv.err_estimate + c.abs() * alt.err_estimate,
                r.conv.n_evals + alt.n_evals,
                rule,
                notes.clone(),
            )
        })
        .collect())
}

/// n = 1 boundary recovery: |u(x, y) − g(x)| along a decreasing y sequence.
/// Passes when the last error is below the first and below 1e−2·|g(x)|.
pub fn verify_boundary_limit(xs: &[f64], ys: &[f64], tol: Tolerances) -> Result<Vec<VerificationReport>> {
    if ys.is_empty() {
        return Err(Error::domain("verify_boundary_limit needs a non-empty y sequence"));
    }
    let data = BoundaryData::new(1)?;
    xs.iter()
        .map(|&x| {
            let g = data.eval(&[x]);
            let mut errs = Vec::new();
            let mut evals = 0;
            let mut last = None;
            for &y in ys {
                let u = harmonic_extension_u(&[x], y, data, tol)?;
                evals += u.n_evals;
                errs.push((u.value - g).abs());
                last = Some(u);
            }
            let last = last.unwrap();
            let (first_err, last_err) = (errs[0], *errs.last().unwrap());
            let pass = last_err < first_err && last_err < 1e-2 * g.abs();
            let trail: Vec<String> = ys.iter().zip(&errs).map(|(y, e)| format!("y={y}:{e:.3e}")).collect();
            let mut inputs = vec![Param::new("n", 1.0), Param::new("x", x)];
            inputs.extend(ys.iter().map(|&y| Param::new("y", y)));
            Ok(VerificationReport::judged(
                IdentityId::BoundaryLimit,
                inputs,
                Complex64::new(last.value, 0.0),
                Complex64::new(g, 0.0),
                last.err_estimate,
                evals,
                pass,
                format!(
                    "|u(x,y) - g(x)| along y: {}; the Poisson error is first order, (u-g)/y = {:.4} at the last y",
                    trail.join(" "),
                    (last.value - g) / ys[ys.len() - 1]
                ),
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default().with_rel(1e-10).with_abs(1e-10)
    }

    #[test]
    fn boundary_data() {
        let d = BoundaryData::new(2).unwrap();
        assert!((d.at_origin().unwrap() - d.eval(&[0.0, 0.0])).abs() < 1e-14);
        assert!((d.eval(&[1.0, -1.0]) - d.eval(&[-1.0, 1.0])).abs() == 0.0);
        assert!(BoundaryData::new(4).is_err());
    }

    #[test]
    fn one_dimensional_reference_values() {
        let d = BoundaryData::new(1).unwrap();
        let u = harmonic_extension_u(&[0.0], 2.0, d, tol()).unwrap();
        // the half-plane Poisson integral of the profile at (0, 2)
        assert!((u.value - 0.390_621_920_256_849_05).abs() < 1e-9, "{}", u.value);
        let b = u0_alternate(2.0, 1, tol()).unwrap();
        assert!((u.value - b.value).abs() < 1e-9);
    }

    #[test]
    fn near_boundary_recovers_data() {
        let d = BoundaryData::new(1).unwrap();
        let u = harmonic_extension_u(&[0.0], 1e-3, d, tol()).unwrap();
        let g0 = d.at_origin().unwrap();
        assert!((u.value - g0).abs() < 1e-2 * g0);
    }

    #[test]
    fn boundary_error_is_first_order() {
        // (u − g)/y → (1/π)∫(g(t) − g(0))/t² dt, the Dirichlet-to-Neumann value at 0
        let d = BoundaryData::new(1).unwrap();
        let g0 = d.at_origin().unwrap();
        let slope = |y: f64| (harmonic_extension_u(&[0.0], y, d, tol()).unwrap().value - g0) / y;
        let dtn = -3.968_786_833;
        assert!((slope(0.005) - dtn).abs() < 0.02);
        assert!((slope(0.02) - dtn).abs() < 0.15);
    }

    #[test]
    fn integrand_at_origin() {
        // e^{0}·φ(0)ⁿ = (1 − 2ψ(1))ⁿ
        let p0 = phi(0.0);
        assert!((p0 - (1.0 - 2.0 * 0.043_217_405_606_654_007)).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(u0_alternate(0.0, 1, tol()).is_err());
        assert!(u0_alternate(1.0, 4, tol()).is_err());
        let d = BoundaryData::new(1).unwrap();
        assert!(harmonic_extension_u(&[0.0], -1.0, d, tol()).is_err());
        assert!(harmonic_extension_u(&[0.0, 0.0], 1.0, d, tol()).is_err());
    }
}
