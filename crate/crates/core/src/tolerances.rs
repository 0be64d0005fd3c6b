use crate::error::{Error, Result};

/// Smallest relative tolerance a computation is asked to meet.
pub const REL_TOL_FLOOR: f64 = 8.0 * f64::EPSILON;

/// Accuracy targets and truncation caps shared by every series and quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Bound on the number of terms of any infinite series.
    pub max_terms: usize,
    /// Bound on bisection depth of adaptive quadrature.
    pub max_refinement_depth: u32,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rel_tol: 1e-12,
            abs_tol: 1e-13,
            max_terms: 1_000_000,
            max_refinement_depth: 48,
        }
    }
}

impl Tolerances {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: usize, max_refinement_depth: u32) -> Result<Self> {
        if !(rel_tol >= REL_TOL_FLOOR) || !rel_tol.is_finite() {
            return Err(Error::domain(format!(
                "rel_tol {rel_tol:e} below floor {REL_TOL_FLOOR:e}"
            )));
        }
        if !(abs_tol > 0.0) || !abs_tol.is_finite() {
            return Err(Error::domain(format!("abs_tol {abs_tol:e} must be positive")));
        }
        if max_terms == 0 || max_refinement_depth == 0 {
            return Err(Error::domain("truncation caps must be at least 1"));
        }
        Ok(Tolerances { rel_tol, abs_tol, max_terms, max_refinement_depth })
    }

    /// Builds tolerances from possibly unattainable targets by clamping them
    /// to what double precision can deliver.
    pub fn clamped(rel_tol: f64, abs_tol: f64) -> Self {
        let d = Tolerances::default();
        Tolerances {
            rel_tol: rel_tol.max(REL_TOL_FLOOR),
            abs_tol: abs_tol.max(f64::MIN_POSITIVE),
            ..d
        }
    }

    pub fn with_rel(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol.max(REL_TOL_FLOOR);
        self
    }

    pub fn with_abs(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol.max(f64::MIN_POSITIVE);
        self
    }

    /// Target error for a quantity of magnitude `scale`.
    pub fn target(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale.abs())
    }
}
