use proptest::prelude::*;
use xi_harmonic::quadrature::suite::closed_form_suite;
use xi_harmonic::quadrature::{integrate_rn, integrate_semi_infinite, Axis};
use xi_harmonic::identities::kernel::poisson_kernel_scaled;
use xi_harmonic::{DecayHint, Tolerances};

const TOLS: [f64; 6] = [1e-4, 5e-5, 1e-6, 5e-7, 1e-9, 5e-10];

#[test]
fn err_estimate_is_honest() {
    for c in closed_form_suite() {
        for rel in TOLS {
            let r = (c.run)(Tolerances::default().with_rel(rel).with_abs(rel * 1e-2)).unwrap();
            let err = (r.value - c.exact).abs();
            assert!(err <= r.err_estimate, "{} at rel {rel:e}: |err| {err:e} > estimate {:e}", c.name, r.err_estimate);
        }
    }
}

#[test]
fn refinement_is_monotone() {
    let mut strict_violations = 0;
    for c in closed_form_suite() {
        let mut prev = f64::INFINITY;
        let mut rel = 1e-3;
        while rel > 1e-13 {
            let r = (c.run)(Tolerances::default().with_rel(rel).with_abs(rel * 1e-2)).unwrap();
            let err = (r.value - c.exact).abs();
            // A coarse panel can land closer to the truth by cancellation than
            // its refinement does, so the error is compared at a resolution
            // three digits finer than the tighter request, plus rounding.
            let resolution = 1e-3 * rel * c.exact.abs() + 4.0 * f64::EPSILON * c.exact.abs();
            assert!(err <= prev + resolution, "{} at rel {rel:e}: {err:e} > {prev:e}", c.name);
            if err > prev {
                strict_violations += 1;
            }
            prev = err;
            rel /= 2.0;
        }
    }
    eprintln!("sub-resolution error increases: {strict_violations}");
}

fn poly_exp(coef: &[f64], t: f64) -> f64 {
    coef.iter().rev().fold(0.0, |acc, c| acc * t + c) * (-t).exp()
}

fn poly_hint(coef: &[f64]) -> DecayHint {
    // |p(t)|e^{−t} ≤ Σ|c_k| k!·2^k · e^{−t/2}
    let mut fact = 1.0;
    let mut scale = 0.0;
    for (k, c) in coef.iter().enumerate() {
        if k > 0 {
            fact *= 2.0 * k as f64;
        }
        scale += c.abs() * fact;
    }
    DecayHint::new(0.5, scale.max(1e-3)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn linearity(p in prop::collection::vec(-3.0f64..3.0, 1..6), q in prop::collection::vec(-3.0f64..3.0, 1..6),
                 a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let tol = Tolerances::default().with_rel(1e-10).with_abs(1e-12);
        let n = p.len().max(q.len());
        let combo: Vec<f64> = (0..n)
            .map(|k| a * p.get(k).copied().unwrap_or(0.0) + b * q.get(k).copied().unwrap_or(0.0))
            .collect();
        let ip = integrate_semi_infinite(|t| poly_exp(&p, t), poly_hint(&p), tol).unwrap();
        let iq = integrate_semi_infinite(|t| poly_exp(&q, t), poly_hint(&q), tol).unwrap();
        let ic = integrate_semi_infinite(|t| poly_exp(&combo, t), poly_hint(&combo), tol).unwrap();
        let sum = a.abs() * ip.err_estimate + b.abs() * iq.err_estimate + ic.err_estimate;
        prop_assert!((ic.value - (a * ip.value + b * iq.value)).abs() <= 2.0 * sum);
    }
}

#[test]
fn poisson_kernel_has_unit_mass() {
    // z = y·sinh t turns the algebraic tails into exponential ones; every
    // one-dimensional marginal of K_y is the Cauchy density, which in t is
    // 1/(π cosh t) ≤ (2/π)e^{−|t|}
    let tol = Tolerances::default().with_rel(1e-7).with_abs(1e-7);
    let hint = DecayHint::new(1.0, 2.0 / std::f64::consts::PI).unwrap();
    let axis = Axis::Decaying { hint, even: true, feature: 1.0, width: 4.0 };
    for n in 1..=3 {
        for y in [0.5, 1.0, 2.0] {
            let f = |t: &[f64]| {
                let z: Vec<f64> = t.iter().map(|v| y * v.sinh()).collect();
                let jac: f64 = t.iter().map(|v| y * v.cosh()).product();
                poisson_kernel_scaled(&z, y).unwrap() * jac
            };
            let r = integrate_rn(f, &vec![axis; n], tol).unwrap();
            assert!((r.value - 1.0).abs() <= 1e-6, "n = {n}, y = {y}: mass {}", r.value);
        }
    }
}
