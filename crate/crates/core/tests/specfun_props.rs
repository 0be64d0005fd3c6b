use num_complex::Complex64;
use proptest::prelude::*;
use xi_harmonic::specfun::{
    gamma_complex, incomplete_gamma_lower, incomplete_gamma_upper, mobius_sieve, psi_theta, xi, Xi_real,
};
use xi_harmonic::Tolerances;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn xi_functional_equation(re in -5.0f64..5.0, im in -30.0f64..30.0) {
        let s = Complex64::new(re, im);
        let a = xi(s).unwrap();
        let b = xi(1.0 - s).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * a.norm());
    }

    #[test]
    fn big_xi_is_even(t in -60.0f64..60.0) {
        prop_assert_eq!(Xi_real(t).unwrap().to_bits(), Xi_real(-t).unwrap().to_bits());
    }

    #[test]
    fn incomplete_gamma_complement(re in 0.1f64..8.0, im in -4.0f64..4.0, x in 0.01f64..20.0) {
        let s = Complex64::new(re, im);
        let t = Tolerances::default();
        let g = gamma_complex(s).unwrap();
        let total = incomplete_gamma_upper(s, x, t).unwrap() + incomplete_gamma_lower(s, x, t).unwrap();
        prop_assert!((total - g).norm() <= 1e-11 * g.norm().max(1.0), "s = {}, x = {}", s, x);
    }
}

#[test]
fn theta_modularity() {
    let t = Tolerances::default();
    for x in [0.1f64, 0.5, 2.0, 10.0] {
        let lhs = 2.0 * psi_theta(x, t).unwrap() + 1.0;
        let rhs = x.powf(-0.5) * (2.0 * psi_theta(1.0 / x, t).unwrap() + 1.0);
        assert!((lhs - rhs).abs() <= t.abs_tol, "x = {x}: {lhs} vs {rhs}");
    }
}

#[test]
fn mobius_divisor_sums() {
    let n = 10_000;
    let mu = mobius_sieve(n).unwrap();
    let mut sums = vec![0i64; n + 1];
    for d in 1..=n {
        for m in (d..=n).step_by(d) {
            sums[m] += mu[d - 1] as i64;
        }
    }
    assert_eq!(sums[1], 1);
    assert!(sums[2..].iter().all(|&s| s == 0));
}
