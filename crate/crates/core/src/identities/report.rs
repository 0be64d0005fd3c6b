use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Which identity a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    Eq11,
    Upsilon,
    DirichletU0,
    LaplaceChain,
    RkIdentity,
    BoundaryLimit,
    Harmonicity,
    Duffin,
    RhCriterion,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Eq11,
        IdentityId::Upsilon,
        IdentityId::DirichletU0,
        IdentityId::LaplaceChain,
        IdentityId::RkIdentity,
        IdentityId::BoundaryLimit,
        IdentityId::Harmonicity,
        IdentityId::Duffin,
        IdentityId::RhCriterion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Eq11 => "EQ11",
            IdentityId::Upsilon => "UPSILON",
            IdentityId::DirichletU0 => "DIRICHLET_U0",
            IdentityId::LaplaceChain => "LAPLACE_CHAIN",
            IdentityId::RkIdentity => "RK_IDENTITY",
            IdentityId::BoundaryLimit => "BOUNDARY_LIMIT",
            IdentityId::Harmonicity => "HARMONICITY",
            IdentityId::Duffin => "DUFFIN",
            IdentityId::RhCriterion => "RH_CRITERION",
        }
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        IdentityId::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named numeric input of a verification.
#[derive(Debug, Clone, PartialEq)]
pub struct Param {
    pub name: String,
    pub value: f64,
}

impl Param {
    pub fn new(name: impl Into<String>, value: f64) -> Self {
        Param { name: name.into(), value }
    }
}

/// Tolerances a report is judged against, exactly as requested by the caller
/// (not clamped to what double precision can deliver).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PassRule {
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl PassRule {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Self {
        PassRule { rel_tol, abs_tol }
    }
}

/// Both sides of one identity at one input, and the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    pub inputs: Vec<Param>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
    pub variant_notes: String,
    pub n_evals: usize,
    /// Summed error estimates of both sides.
    pub err_budget: f64,
}

impl VerificationReport {
    /// Compares `lhs` with `rhs`. The report passes when the two sides agree
    /// (|lhs − rhs| ≤ abs_tol + err_budget, or relative error ≤ rel_tol) and the
    /// computation certifies the requested accuracy (err_budget within the
    /// requested target), so an unattainable tolerance can never pass.
    #[allow(clippy::too_many_arguments)]
    pub fn assess(
        identity_id: IdentityId,
        inputs: Vec<Param>,
        lhs: Complex64,
        rhs: Complex64,
        err_budget: f64,
        n_evals: usize,
        rule: PassRule,
        variant_notes: impl Into<String>,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_err = if scale > 0.0 {
            abs_err / scale
        } else if abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        let agree = abs_err <= rule.abs_tol + err_budget || rel_err <= rule.rel_tol;
        let certified = err_budget <= rule.abs_tol.max(rule.rel_tol * scale);
        VerificationReport {
            identity_id,
            inputs,
            lhs,
            rhs,
            abs_err,
            rel_err,
            pass: agree && certified,
            variant_notes: variant_notes.into(),
            n_evals,
            err_budget,
        }
    }

    /// A report for a quantity compared against an explicit criterion rather
    /// than a tolerance (monotone decrease, ratios, …).
    #[allow(clippy::too_many_arguments)]
    pub fn judged(
        identity_id: IdentityId,
        inputs: Vec<Param>,
        lhs: Complex64,
        rhs: Complex64,
        err_budget: f64,
        n_evals: usize,
        pass: bool,
        variant_notes: impl Into<String>,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rel_err = if rhs.norm() > 0.0 { abs_err / rhs.norm() } else { abs_err };
        VerificationReport {
            identity_id,
            inputs,
            lhs,
            rhs,
            abs_err,
            rel_err,
            pass,
            variant_notes: variant_notes.into(),
            n_evals,
            err_budget,
        }
    }

    pub fn input(&self, name: &str) -> Option<f64> {
        self.inputs.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn ids_roundtrip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.as_str()), Some(id));
            let js = serde_json::to_string(&id).unwrap();
            assert_eq!(js, format!("\"{}\"", id.as_str()));
        }
    }

    #[test]
    fn pass_requires_certification() {
        let rule = PassRule::new(1e-8, 1e-8);
        let r = VerificationReport::assess(IdentityId::Eq11, vec![], c(1.0), c(1.0 + 1e-10), 1e-12, 1, rule, "");
        assert!(r.pass);
        let strict = PassRule::new(1e-30, 1e-30);
        let r = VerificationReport::assess(IdentityId::Eq11, vec![], c(1.0), c(1.0 + 1e-10), 1e-12, 1, strict, "");
        assert!(!r.pass);
        // exact agreement of exact quantities passes any tolerance
        let r = VerificationReport::assess(IdentityId::RkIdentity, vec![], c(8.0), c(8.0), 0.0, 1, strict, "");
        assert!(r.pass);
    }
}
