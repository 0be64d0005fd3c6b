use rayon::prelude::*;

use super::rules::{G7_W, GK15_NODES, GK15_WK};
use super::{DecayHint, QuadResult};
use crate::error::{Error, Result};
use crate::sum::KahanSum;
use crate::tolerances::Tolerances;

/// Default cap on integrand evaluations for one tensor integral.
pub const DEFAULT_NODE_BUDGET: usize = 10_000_000;

/// How one coordinate axis of ℝⁿ is discretised.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Axis {
    /// Exponentially decaying direction, truncated where the hint's tail is
    /// negligible. Panels start at width `feature` at the origin and double up
    /// to `width`. `even` integrates over [0, T] and doubles.
    Decaying { hint: DecayHint, even: bool, feature: f64, width: f64 },
    /// A finite interval with `panels` equal panels.
    Finite { a: f64, b: f64, panels: usize },
    /// The whole line through z = L·u/(1−u²), for algebraic tails.
    Rational { scale: f64, even: bool, panels: usize },
}

/// Kronrod and Gauss weights (Jacobian and symmetry folded in) for one axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisGrid {
    pub nodes: Vec<f64>,
    pub wk: Vec<f64>,
    pub wg: Vec<f64>,
    /// Bound on the integral mass outside the discretised range.
    pub tail: f64,
    pub truncation_point: f64,
}

fn push_panel(grid: &mut AxisGrid, a: f64, b: f64, factor: f64, map: &dyn Fn(f64) -> (f64, f64)) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut add = |u: f64, wk: f64, wg: f64| {
        let (z, jac) = map(u);
        grid.nodes.push(z);
        grid.wk.push(wk * h * jac * factor);
        grid.wg.push(wg * h * jac * factor);
    };
    for i in 0..7 {
        let wg = if i % 2 == 1 { G7_W[i / 2] } else { 0.0 };
        add(c - h * GK15_NODES[i], GK15_WK[i], wg);
    }
    add(c, GK15_WK[7], G7_W[3]);
    for i in (0..7).rev() {
        let wg = if i % 2 == 1 { G7_W[i / 2] } else { 0.0 };
        add(c + h * GK15_NODES[i], GK15_WK[i], wg);
    }
}

impl AxisGrid {
    /// Builds the grid at refinement `level` (each level halves every panel).
    /// `tail_budget` bounds the truncated mass of a decaying axis.
    pub fn build(axis: &Axis, level: u32, tail_budget: f64) -> Result<AxisGrid> {
        let mut g = AxisGrid { nodes: vec![], wk: vec![], wg: vec![], tail: 0.0, truncation_point: f64::INFINITY };
        let split = 2f64.powi(level as i32);
        let id = |u: f64| (u, 1.0);
        match *axis {
            Axis::Decaying { hint, even, feature, width } => {
                if !(feature > 0.0 && width >= feature) {
                    return Err(Error::domain("decaying axis needs 0 < feature ≤ width"));
                }
                // the truncated mass on both sides together must fit the budget
                let t = hint.truncation(tail_budget / 2.0);
                g.tail = 2.0 * hint.tail(t);
                g.truncation_point = t;
                let mut edges = vec![0.0];
                let mut w = feature;
                while *edges.last().unwrap() < t {
                    let e = (*edges.last().unwrap() + w).min(t);
                    edges.push(e);
                    w = (2.0 * w).min(width);
                }
                let mut halves: Vec<(f64, f64)> = Vec::new();
                for pair in edges.windows(2) {
                    let (a, b) = (pair[0], pair[1]);
                    for k in 0..split as usize {
                        let lo = a + (b - a) * k as f64 / split;
                        let hi = a + (b - a) * (k + 1) as f64 / split;
                        halves.push((lo, hi));
                    }
                }
                if even {
                    for &(a, b) in &halves {
                        push_panel(&mut g, a, b, 2.0, &id);
                    }
                } else {
                    for &(a, b) in halves.iter().rev() {
                        push_panel(&mut g, -b, -a, 1.0, &id);
                    }
                    for &(a, b) in &halves {
                        push_panel(&mut g, a, b, 1.0, &id);
                    }
                }
            }
            Axis::Finite { a, b, panels } => {
                if !(a < b) || panels == 0 {
                    return Err(Error::domain("finite axis needs a < b and at least one panel"));
                }
                g.truncation_point = b;
                let k = panels * split as usize;
                for i in 0..k {
                    let lo = a + (b - a) * i as f64 / k as f64;
                    let hi = a + (b - a) * (i + 1) as f64 / k as f64;
                    push_panel(&mut g, lo, hi, 1.0, &id);
                }
            }
            Axis::Rational { scale, even, panels } => {
                if !(scale > 0.0) || panels == 0 {
                    return Err(Error::domain("rational axis needs a positive scale and panels"));
                }
                let map = move |u: f64| {
                    let d = 1.0 - u * u;
                    (scale * u / d, scale * (1.0 + u * u) / (d * d))
                };
                let k = panels * split as usize;
                let (lo, factor) = if even { (0.0, 2.0) } else { (-1.0, 1.0) };
                for i in 0..k {
                    let a = lo + (1.0 - lo) * i as f64 / k as f64;
                    let b = lo + (1.0 - lo) * (i + 1) as f64 / k as f64;
                    push_panel(&mut g, a, b, factor, &map);
                }
            }
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// A tensor product of axis grids with index-based evaluation, so callers
/// can cache per-axis factors.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorGrid {
    pub axes: Vec<AxisGrid>,
}

/// Kronrod sum, Gauss sum and Kronrod sum of |f| over a tensor grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TensorSums {
    pub kronrod: f64,
    pub gauss: f64,
    pub abs: f64,
    pub n_evals: usize,
}

impl TensorSums {
    pub fn err(&self) -> f64 {
        (self.kronrod - self.gauss).abs() + 50.0 * f64::EPSILON * self.abs
    }
}

impl TensorGrid {
    pub fn build(axes: &[Axis], level: u32, tol: &Tolerances) -> Result<TensorGrid> {
        let n = axes.len().max(1) as f64;
        let budget = tol.abs_tol / (2.0 * n);
        Ok(TensorGrid { axes: axes.iter().map(|a| AxisGrid::build(a, level, budget)).collect::<Result<_>>()? })
    }

    pub fn node_count(&self) -> usize {
        self.axes.iter().map(AxisGrid::len).product()
    }

    pub fn tail(&self) -> f64 {
        self.axes.iter().map(|a| a.tail).sum()
    }

    pub fn truncation_point(&self) -> f64 {
        self.axes.iter().map(|a| a.truncation_point).fold(0.0, f64::max)
    }

    /// Σ w_i f(i) over all multi-indices; the reduction order is fixed.
    pub fn sum_indexed<F: Fn(&[usize]) -> f64 + Sync>(&self, f: F) -> TensorSums {
        let dims: Vec<usize> = self.axes.iter().map(AxisGrid::len).collect();
        if dims.is_empty() {
            return TensorSums { kronrod: 0.0, gauss: 0.0, abs: 0.0, n_evals: 0 };
        }
        let rest: Vec<usize> = dims[1..].to_vec();
        let inner = |i0: usize| {
            let mut idx = vec![0usize; dims.len()];
            idx[0] = i0;
            let (mut k, mut g, mut a) = (KahanSum::new(), KahanSum::new(), KahanSum::new());
            loop {
                let mut wk = self.axes[0].wk[i0];
                let mut wg = self.axes[0].wg[i0];
                for (d, ax) in self.axes.iter().enumerate().skip(1) {
                    wk *= ax.wk[idx[d]];
                    wg *= ax.wg[idx[d]];
                }
                let v = f(&idx);
                k.add(wk * v);
                if wg != 0.0 {
                    g.add(wg * v);
                }
                a.add(wk.abs() * v.abs());
                // odometer over the remaining axes
                let mut d = rest.len();
                loop {
                    if d == 0 {
                        return (k.value(), g.value(), a.value());
                    }
                    idx[d] += 1;
                    if idx[d] < dims[d] {
                        break;
                    }
                    idx[d] = 0;
                    d -= 1;
                }
            }
        };
        let parts: Vec<(f64, f64, f64)> = (0..dims[0]).into_par_iter().map(inner).collect();
        let (mut k, mut g, mut a) = (KahanSum::new(), KahanSum::new(), KahanSum::new());
        for (pk, pg, pa) in parts {
            k.add(pk);
            g.add(pg);
            a.add(pa);
        }
        TensorSums { kronrod: k.value(), gauss: g.value(), abs: a.value(), n_evals: self.node_count() }
    }

    pub fn sum<F: Fn(&[f64]) -> f64 + Sync>(&self, f: F) -> TensorSums {
        self.sum_indexed(|idx| {
            let mut pt = [0.0f64; 8];
            for (d, &i) in idx.iter().enumerate() {
                pt[d] = self.axes[d].nodes[i];
            }
            f(&pt[..idx.len()])
        })
    }
}

/// ∫_{ℝⁿ} f for n ≤ 3 with default node budget.
pub fn integrate_rn<F: Fn(&[f64]) -> f64 + Sync>(f: F, axes: &[Axis], tol: Tolerances) -> Result<QuadResult<f64>> {
    integrate_rn_with(f, axes, tol, DEFAULT_NODE_BUDGET)
}

/// Refines all axes together until |Q_K − Q_G| plus tails meets the target.
pub fn integrate_rn_with<F: Fn(&[f64]) -> f64 + Sync>(
    f: F,
    axes: &[Axis],
    tol: Tolerances,
    node_budget: usize,
) -> Result<QuadResult<f64>> {
    if axes.is_empty() || axes.len() > 3 {
        return Err(Error::domain(format!("integrate_rn supports 1 ≤ n ≤ 3, got n = {}", axes.len())));
    }
    integrate_grid_with(axes, tol, node_budget, |g| Ok(g.sum(&f))).map(|(r, _)| r)
}

/// Refinement driver for callers that evaluate the grid themselves (for
/// instance with cached per-axis factors). `eval` returns the Kronrod/Gauss
/// sums on a grid; levels increase until the error target is met.
pub fn integrate_grid_with<E: FnMut(&TensorGrid) -> Result<TensorSums>>(
    axes: &[Axis],
    tol: Tolerances,
    node_budget: usize,
    mut eval: E,
) -> Result<(QuadResult<f64>, TensorGrid)> {
    let mut spent = 0usize;
    for level in 0..tol.max_refinement_depth {
        let grid = TensorGrid::build(axes, level, &tol)?;
        let nodes = grid.node_count();
        if spent + nodes > node_budget {
            return Err(Error::Capacity(format!(
                "tensor quadrature needs {} evaluations, budget is {node_budget}",
                spent + nodes
            )));
        }
        let s = eval(&grid)?;
        spent += nodes;
        if !s.kronrod.is_finite() {
            return Err(Error::Overflow("tensor quadrature: integrand produced a non-finite value".into()));
        }
        let err = s.err() + grid.tail();
        if err <= tol.target(s.kronrod) {
            let r = QuadResult { value: s.kronrod, err_estimate: err, n_evals: spent, truncation_point: grid.truncation_point() };
            return Ok((r, grid));
        }
    }
    Err(Error::Convergence(format!(
        "tensor quadrature did not converge within {} refinement levels",
        tol.max_refinement_depth
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tol() -> Tolerances {
        Tolerances::default().with_rel(1e-10).with_abs(1e-10)
    }

    #[test]
    fn gaussian_in_two_dimensions() {
        let hint = DecayHint::new(1.0, 1.0).unwrap();
        let ax = Axis::Decaying { hint, even: true, feature: 0.5, width: 1.0 };
        let r = integrate_rn(|z: &[f64]| (-PI * (z[0] * z[0] + z[1] * z[1])).exp(), &[ax, ax], tol()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10, "{}", r.value);
        assert!((r.value - 1.0).abs() <= r.err_estimate);
    }

    #[test]
    fn cauchy_density_on_rational_axis() {
        let ax = Axis::Rational { scale: 1.0, even: false, panels: 4 };
        let r = integrate_rn(|z: &[f64]| 1.0 / (PI * (1.0 + z[0] * z[0])), &[ax], tol()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn finite_box_and_asymmetric_axis() {
        let f = Axis::Finite { a: 0.0, b: 2.0, panels: 1 };
        let hint = DecayHint::new(1.0, 3.0).unwrap();
        let d = Axis::Decaying { hint, even: false, feature: 0.5, width: 2.0 };
        // ∫_0^2 x dx · ∫ e^{−|t|}(1 + t) dt = 2 · 2
        let r = integrate_rn(|z: &[f64]| z[0] * (-z[1].abs()).exp() * (1.0 + z[1]), &[f, d], tol()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn budget_is_enforced() {
        let ax = Axis::Rational { scale: 1.0, even: false, panels: 64 };
        let r = integrate_rn_with(|_: &[f64]| 1.0, &[ax, ax, ax], tol(), 1000);
        assert!(matches!(r, Err(Error::Capacity(_))));
        assert!(matches!(integrate_rn(|_: &[f64]| 1.0, &[], tol()), Err(Error::Domain(_))));
    }
}
