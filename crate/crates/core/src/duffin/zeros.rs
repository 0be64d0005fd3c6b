//! Sign changes of Ξ on the real line.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{ln_gamma_complex, Xi_real};
use crate::tolerances::Tolerances;

pub const ZEROS_MAX_HEIGHT: f64 = 60.0;
pub const SCAN_STEP: f64 = 0.2;
pub const BRACKET_WIDTH: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroEntry {
    pub gamma: f64,
    pub bracket: (f64, f64),
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ZerosTable {
    pub entries: Vec<ZeroEntry>,
}

impl ZerosTable {
    pub fn gammas(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.gamma).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks the table invariants: strict sign change, γ inside, increasing.
    pub fn validate(&self) -> Result<()> {
        let mut prev = 0.0;
        for e in &self.entries {
            let (lo, hi) = e.bracket;
            if !(lo <= e.gamma && e.gamma <= hi && lo > prev) {
                return Err(Error::domain(format!("zero bracket [{lo}, {hi}] for γ = {} out of order", e.gamma)));
            }
            if !(Xi_real(lo)? * Xi_real(hi)? < 0.0) {
                return Err(Error::domain(format!("no sign change of Ξ on [{lo}, {hi}]")));
            }
            prev = hi;
        }
        Ok(())
    }
}

/// Riemann–von Mangoldt main term θ(T)/π + 1 with θ(T) = Im ln Γ(¼ + iT/2) − (T/2)ln π.
pub fn zero_count_main_term(t: f64) -> Result<f64> {
    let theta = ln_gamma_complex(Complex64::new(0.25, t / 2.0))?.im - t / 2.0 * PI.ln();
    Ok(theta / PI + 1.0)
}

/// Zeros of Ξ in (0, T]: scan at step 0.2, bisect each sign change to width ≤ 1e−8.
pub fn find_zeros(t_max: f64, _tol: Tolerances) -> Result<ZerosTable> {
    if !(t_max <= ZEROS_MAX_HEIGHT) {
        return Err(Error::domain(format!("find_zeros is validated for T ≤ {ZEROS_MAX_HEIGHT}, got {t_max}")));
    }
    let mut entries = Vec::new();
    if !(t_max > 0.0) {
        return Ok(ZerosTable { entries });
    }
    let steps = (t_max / SCAN_STEP).floor() as usize;
    let mut lo = 0.0;
    let mut f_lo = Xi_real(lo)?;
    for i in 1..=steps {
        let hi = i as f64 * SCAN_STEP;
        let f_hi = Xi_real(hi)?;
        if f_lo * f_hi < 0.0 {
            let (mut a, mut b, mut fa) = (lo, hi, f_lo);
            while b - a > BRACKET_WIDTH {
                let mid = 0.5 * (a + b);
                let fm = Xi_real(mid)?;
                if fm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if fa * fm < 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            entries.push(ZeroEntry { gamma: 0.5 * (a + b), bracket: (a, b) });
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(ZerosTable { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        let t = find_zeros(30.0, Tolerances::default()).unwrap();
        let want = [14.134_725_141_734_694, 21.022_039_638_771_55, 25.010_857_580_145_69];
        assert_eq!(t.len(), 3);
        for (e, w) in t.entries.iter().zip(want) {
            assert!((e.gamma - w).abs() < 1e-8, "{} vs {w}", e.gamma);
            assert!(e.bracket.1 - e.bracket.0 <= BRACKET_WIDTH);
        }
        t.validate().unwrap();
        assert_eq!(find_zeros(15.0, Tolerances::default()).unwrap().len(), 1);
        assert!(find_zeros(10.0, Tolerances::default()).unwrap().is_empty());
        assert!(find_zeros(61.0, Tolerances::default()).is_err());
    }

    #[test]
    fn count_matches_main_term() {
        let t = find_zeros(60.0, Tolerances::default()).unwrap();
        assert_eq!(t.len(), 13);
        let n = zero_count_main_term(60.0).unwrap();
        assert!((n - t.len() as f64).abs() < 1.0, "{n}");
    }
}
