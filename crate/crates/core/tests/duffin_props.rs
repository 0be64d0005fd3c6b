use xi_harmonic::duffin::{duffin_series_detail, find_zeros, scan_scheme, ADJUDICATED_CONVENTION, ADJUDICATED_NORMALIZATION};
use xi_harmonic::specfun::Xi_real;
use xi_harmonic::Tolerances;

#[test]
fn mobius_cap_sensitivity() {
    let tol = Tolerances::default().with_rel(1e-8).with_abs(1e-10);
    let base = scan_scheme();
    let doubled = base.clone().with_m_max(2 * base.m_max);
    for (x, y) in [(2.0, 1.0), (2.0, 2.0), (1.0, 2.0)] {
        let a = duffin_series_detail(x, y, &base, ADJUDICATED_CONVENTION, tol).unwrap();
        let b = duffin_series_detail(x, y, &doubled, ADJUDICATED_CONVENTION, tol).unwrap();
        let change = (a.normalized(ADJUDICATED_NORMALIZATION) - b.normalized(ADJUDICATED_NORMALIZATION)).abs();
        let spread = a.normalized_spread(ADJUDICATED_NORMALIZATION);
        assert!(change < spread, "({x}, {y}): change {change:e} vs spread {spread:e}");
    }
}

#[test]
fn zero_brackets_change_sign() {
    let table = find_zeros(60.0, Tolerances::default()).unwrap();
    let mut prev = 0.0;
    for z in &table.entries {
        let (lo, hi) = z.bracket;
        assert!(Xi_real(lo).unwrap() * Xi_real(hi).unwrap() < 0.0);
        assert!(lo <= z.gamma && z.gamma <= hi && hi - lo <= 1e-8);
        assert!(z.gamma > prev);
        prev = z.gamma;
    }
    assert!(find_zeros(10.0, Tolerances::default()).unwrap().is_empty());
}
