use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::ln_gamma_complex;
use crate::error::{finite, Error, Result};
use crate::sum::ComplexKahanSum;
use crate::tolerances::Tolerances;

/// B₂ₖ/(2k)! for k = 1..12.
const BERNOULLI_OVER_FACT: [f64; 12] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
    -174_611.0 / 330.0 / 2_432_902_008_176_640_000.0,
    854_513.0 / 138.0 / 1.124_000_727_777_607_7e21,
    -236_364_091.0 / 2730.0 / 6.204_484_017_332_394e23,
];

/// Euler–Maclaurin evaluation, valid on Re s > −23; returns the value and
/// the magnitude of the last correction term.
fn zeta_em(s: Complex64, n: usize) -> (Complex64, f64) {
    let mut acc = ComplexKahanSum::new();
    for k in 1..n {
        acc.add((-s * (k as f64).ln()).exp());
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp();
    acc.add(n_pow * nf / (s - 1.0));
    acc.add(n_pow * 0.5);
    // rising factorial s(s+1)…(s+2k−2) times N^{−s−2k+1}
    let mut fac = s * n_pow / nf;
    let mut last = 0.0;
    for (k, b) in BERNOULLI_OVER_FACT.iter().enumerate() {
        if k > 0 {
            let j = (2 * k - 1) as f64;
            fac = fac * (s + j) * (s + j + 1.0) / (nf * nf);
        }
        let term = fac * *b;
        acc.add(term);
        last = term.norm();
    }
    (acc.value(), last)
}

fn zeta_em_adaptive(s: Complex64, tol: &Tolerances) -> Result<Complex64> {
    let mut n = (s.norm().ceil() as usize + 10).max(12);
    loop {
        let (v, last) = zeta_em(s, n);
        if last <= tol.rel_tol * 1e-2 * v.norm() || last <= f64::MIN_POSITIVE {
            return finite(v, "ζ(s)");
        }
        if n > tol.max_terms {
            return Err(Error::Convergence(format!(
                "Euler–Maclaurin for ζ({s}) did not reach tolerance within {} terms",
                tol.max_terms
            )));
        }
        n *= 2;
    }
}

/// Riemann ζ(s) on ℂ∖{1}.
pub fn zeta_complex(s: Complex64, tol: Tolerances) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::pole(s));
    }
    if s.re >= 0.5 || s.norm() < 0.25 {
        let v = zeta_em_adaptive(s, &tol)?;
        return Ok(if s.im == 0.0 { Complex64::new(v.re, 0.0) } else { v });
    }
    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    let one_minus = 1.0 - s;
    let z1 = zeta_em_adaptive(one_minus, &tol)?;
    let lg = ln_gamma_complex(one_minus)?;
    let ln_fac = s * 2f64.ln() + (s - 1.0) * PI.ln() + lg;
    if ln_fac.re > 709.0 {
        return Err(Error::Overflow(format!("ζ({s}) exceeds f64 range")));
    }
    let v = ln_fac.exp() * (PI * s / 2.0).sin() * z1;
    let v = if s.im == 0.0 { Complex64::new(v.re, 0.0) } else { v };
    finite(v, "ζ(s)")
}
