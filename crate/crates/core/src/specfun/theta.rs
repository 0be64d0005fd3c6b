use crate::error::{Error, Result};
use crate::sum::KahanSum;
use crate::tolerances::Tolerances;

fn psi_direct(x: f64, tol: &Tolerances) -> Result<f64> {
    let mut acc = KahanSum::new();
    for n in 1..=tol.max_terms {
        let nf = n as f64;
        let term = (-std::f64::consts::PI * nf * nf * x).exp();
        acc.add(term);
        // terms decrease faster than geometrically, so the next one bounds the tail
        let next = (-std::f64::consts::PI * (nf + 1.0) * (nf + 1.0) * x).exp();
        if next <= tol.abs_tol * 1e-3 || next <= f64::EPSILON * 1e-3 * acc.value() {
            return Ok(acc.value());
        }
    }
    Err(Error::Convergence(format!("ψ({x}) needs more than {} terms", tol.max_terms)))
}

/// ψ(x) = Σ_{n≥1} e^{−πn²x}. Arguments below 1 go through the modular relation
/// 2ψ(x)+1 = x^{−1/2}(2ψ(1/x)+1).
pub fn psi_theta(x: f64, tol: Tolerances) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("ψ(x) needs x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x >= 1.0 {
        psi_direct(x, &tol)
    } else {
        let inner = psi_direct(1.0 / x, &tol)?;
        Ok(((2.0 * inner + 1.0) / x.sqrt() - 1.0) / 2.0)
    }
}

/// φ(u) = e^{u/2} − 2e^{−u/2}ψ(e^{−2u}), the closed form of the cosine
/// transform of Ξ(t)/(t²+¼) up to the factor π/2.
///
/// φ is even; it is evaluated as e^{−|u|/2} − 2e^{|u|/2}ψ(e^{2|u|}), which
/// has no cancellation and never overflows. 0 < φ(u) ≤ e^{−|u|/2}.
pub fn phi(u: f64) -> f64 {
    let a = u.abs();
    let x = (2.0 * a).exp();
    // ψ(x) < 2e^{−πx} for x ≥ 1 and underflows to zero beyond x ≈ 240
    let psi = if x > 240.0 {
        0.0
    } else {
        let q = (-std::f64::consts::PI * x).exp();
        let q2 = q * q;
        let q4 = q2 * q2;
        let q9 = q4 * q4 * q;
        let q16 = q9 * q4 * q2 * q;
        q + q4 + q9 + q16
    };
    if psi == 0.0 {
        return (-a / 2.0).exp();
    }
    (-a / 2.0).exp() - 2.0 * (a / 2.0).exp() * psi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi(x: f64) -> f64 {
        psi_theta(x, Tolerances::default()).unwrap()
    }

    #[test]
    fn reference_values() {
        assert!((psi(1.0) - 0.043_217_405_606_654_007).abs() < 1e-16);
        assert!((psi(0.1) - 1.081_138_830_084_261_4).abs() < 1e-14);
        let big = psi(50.0);
        assert!(((big - (-50.0 * std::f64::consts::PI).exp()) / big).abs() < 1e-15);
    }

    #[test]
    fn modular_relation() {
        for x in [0.1, 0.25, 0.5, 2.0, 10.0] {
            let lhs = 2.0 * psi(x) + 1.0;
            let rhs = (2.0 * psi(1.0 / x) + 1.0) / x.sqrt();
            assert!((lhs - rhs).abs() < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(matches!(psi_theta(0.0, Tolerances::default()), Err(Error::Domain(_))));
        assert!(matches!(psi_theta(-1.0, Tolerances::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_agrees_with_unstable_form() {
        for u in [-3.0, -0.4, 0.0, 0.3, 1.0, 2.5] {
            let direct = (u / 2.0f64).exp() - 2.0 * (-u / 2.0f64).exp() * psi((-2.0 * u).exp());
            assert!((phi(u) - direct).abs() < 1e-13, "u = {u}");
        }
        assert_eq!(phi(1e4), 0.0);
        assert!((phi(0.0) - (1.0 - 2.0 * psi(1.0))).abs() < 1e-16);
    }
}
