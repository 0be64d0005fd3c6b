use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use super::rules::gauss_kronrod_15;
use super::{compensated_total, DecayHint, QuadResult, QuadValue};
use crate::error::{Error, Result};
use crate::tolerances::Tolerances;

/// Hard cap on the number of live panels in one adaptive integration.
const MAX_PANELS: usize = 200_000;

/// Extra controls for adaptive integration.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct QuadOptions {
    /// Upper bound on the width of any initial panel (e.g. π/(4x) for cos(xt)).
    pub max_panel_width: Option<f64>,
    /// Interior points where the integrand has features worth a panel edge.
    pub breakpoints: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
struct Panel<V> {
    a: f64,
    b: f64,
    value: V,
    err: f64,
    floor: f64,
    depth: u32,
}

struct Worst {
    err: f64,
    a: f64,
    idx: usize,
}

impl PartialEq for Worst {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Worst {}
impl PartialOrd for Worst {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Worst {
    fn cmp(&self, o: &Self) -> Ordering {
        // largest error first; ties resolved by position for determinism
        self.err.total_cmp(&o.err).then(o.a.total_cmp(&self.a))
    }
}

fn evaluate<V: QuadValue, F: Fn(f64) -> V + ?Sized>(f: &F, a: f64, b: f64, depth: u32) -> Panel<V> {
    let e = gauss_kronrod_15(f, a, b);
    let floor = 50.0 * f64::EPSILON * e.abs;
    Panel { a, b, value: e.kronrod, err: e.error(), floor, depth }
}

fn initial_edges(a: f64, b: f64, opts: &QuadOptions) -> Vec<f64> {
    let mut edges = vec![a];
    let mut pts: Vec<f64> = opts.breakpoints.iter().copied().filter(|&p| p > a && p < b).collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts.push(b);
    for p in pts {
        let lo = *edges.last().unwrap();
        if let Some(w) = opts.max_panel_width {
            let k = ((p - lo) / w).ceil().max(1.0) as usize;
            for i in 1..k {
                edges.push(lo + (p - lo) * i as f64 / k as f64);
            }
        }
        edges.push(p);
    }
    edges
}

/// Global adaptive bisection: always split the panel with the largest error
/// until the summed error meets `target(value) − reserved`.
fn adaptive<V: QuadValue, F: Fn(f64) -> V + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    tol: &Tolerances,
    opts: &QuadOptions,
    reserved: f64,
) -> Result<(V, f64, usize)> {
    let edges = initial_edges(a, b, opts);
    let mut panels: Vec<Panel<V>> = edges.windows(2).map(|w| evaluate(f, w[0], w[1], 0)).collect();
    let mut evals = 15 * panels.len();
    let mut heap: BinaryHeap<Worst> = panels
        .iter()
        .enumerate()
        .map(|(idx, p)| Worst { err: p.err, a: p.a, idx })
        .collect();
    loop {
        let value = compensated_total(panels.iter().map(|p| p.value));
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let target = tol.abs_tol.max(tol.rel_tol * value.magnitude()) - reserved;
        if err <= target {
            return Ok((value, err, evals));
        }
        // bisect a batch of the worst panels before re-summing
        let mut excess = err - target.max(0.0);
        let mut splits = 0;
        while excess > 0.0 && splits < 64 {
            let Some(w) = heap.pop() else { break };
            let p = panels[w.idx];
            if p.err <= 2.0 * p.floor {
                // rounding limited: bisection cannot help any panel left in the heap
                heap.push(w);
                let value = compensated_total(panels.iter().map(|p| p.value));
                let err: f64 = panels.iter().map(|p| p.err).sum();
                return Ok((value, err, evals));
            }
            if p.depth >= tol.max_refinement_depth {
                return Err(Error::Convergence(format!(
                    "adaptive quadrature on [{a}, {b}] exceeded refinement depth {} near [{}, {}]",
                    tol.max_refinement_depth, p.a, p.b
                )));
            }
            if panels.len() >= MAX_PANELS {
                return Err(Error::Convergence(format!(
                    "adaptive quadrature on [{a}, {b}] needs more than {MAX_PANELS} panels"
                )));
            }
            let m = 0.5 * (p.a + p.b);
            let left = evaluate(f, p.a, m, p.depth + 1);
            let right = evaluate(f, m, p.b, p.depth + 1);
            evals += 30;
            excess -= p.err - left.err - right.err;
            panels[w.idx] = left;
            heap.push(Worst { err: left.err, a: left.a, idx: w.idx });
            heap.push(Worst { err: right.err, a: right.a, idx: panels.len() });
            panels.push(right);
            splits += 1;
        }
    }
}

fn check_finite<V: QuadValue>(v: V, what: &str) -> Result<V> {
    let (re, im) = v.parts();
    if re.is_finite() && im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("{what}: integrand produced a non-finite value")))
    }
}

/// ∫_a^b f on a finite interval.
pub fn integrate_finite<V: QuadValue, F: Fn(f64) -> V>(f: F, a: f64, b: f64, tol: Tolerances) -> Result<QuadResult<V>> {
    integrate_finite_with(f, a, b, tol, &QuadOptions::default())
}

pub fn integrate_finite_with<V: QuadValue, F: Fn(f64) -> V>(
    f: F,
    a: f64,
    b: f64,
    tol: Tolerances,
    opts: &QuadOptions,
) -> Result<QuadResult<V>> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("finite integration needs finite limits"));
    }
    if a == b {
        return Ok(QuadResult { value: V::default(), err_estimate: 0.0, n_evals: 0, truncation_point: b });
    }
    if a > b {
        let r = integrate_finite_with(f, b, a, tol, opts)?;
        return Ok(QuadResult { value: r.value * -1.0, ..r });
    }
    let (value, err, n) = adaptive(&f, a, b, &tol, opts, 0.0)?;
    Ok(QuadResult {
        value: check_finite(value, "integrate_finite")?,
        err_estimate: err,
        n_evals: n,
        truncation_point: b,
    })
}

/// ∫_0^∞ f using the decay hint to cut the range at T with
/// scale·e^{−rate·T}/rate ≤ abs_tol/2; the tail bound is part of err_estimate.
pub fn integrate_semi_infinite<V: QuadValue, F: Fn(f64) -> V>(f: F, hint: DecayHint, tol: Tolerances) -> Result<QuadResult<V>> {
    integrate_semi_infinite_with(f, hint, tol, &QuadOptions::default())
}

pub fn integrate_semi_infinite_with<V: QuadValue, F: Fn(f64) -> V>(
    f: F,
    hint: DecayHint,
    tol: Tolerances,
    opts: &QuadOptions,
) -> Result<QuadResult<V>> {
    let efold = 4.0 / hint.rate;
    let t = hint.truncation(tol.abs_tol / 2.0);
    if t == 0.0 {
        let tail = hint.tail(t);
        return Ok(QuadResult { value: V::default(), err_estimate: tail, n_evals: 0, truncation_point: 0.0 });
    }
    // cut on a whole number of panels so that tightening the tolerance only
    // appends panels and leaves the existing partition untouched
    let t = (t / efold).ceil() * efold;
    let tail = hint.tail(t);
    let mut opts = opts.clone();
    // resolve the decay scale: a panel never spans more than a few e-foldings
    opts.max_panel_width = Some(opts.max_panel_width.map_or(efold, |w| w.min(efold)));
    let (value, err, n) = adaptive(&f, 0.0, t, &tol, &opts, tail)?;
    Ok(QuadResult {
        value: check_finite(value, "integrate_semi_infinite")?,
        err_estimate: err + tail,
        n_evals: n,
        truncation_point: t,
    })
}

/// |f(t)| ≤ scale·e^{exponent·t}; the exponent may be positive (growth).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpBound {
    pub exponent: f64,
    pub scale: f64,
}

impl ExpBound {
    pub fn decaying(hint: DecayHint) -> Self {
        ExpBound { exponent: -hint.rate, scale: hint.scale }
    }
}

/// ∫_0^∞ f(y)e^{−sy} dy.
pub fn laplace_transform<F: Fn(f64) -> f64>(f: F, s: Complex64, bound: ExpBound, tol: Tolerances) -> Result<QuadResult<Complex64>> {
    let rate = s.re - bound.exponent;
    if !(rate > 0.0) {
        return Err(Error::domain(format!(
            "Laplace transform at s = {s} diverges: combined decay rate {rate} ≤ 0"
        )));
    }
    let hint = DecayHint::new(rate, bound.scale)?;
    let g = move |y: f64| {
        let v = f(y);
        if v == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            v * (-s * y).exp()
        }
    };
    integrate_semi_infinite(g, hint, tol)
}
