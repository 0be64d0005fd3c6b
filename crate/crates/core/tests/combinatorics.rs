use xi_harmonic::identities::rk::{lattice_counts, rk_expansion, rk_expansion_printed, verify_rk_identity, RK_MAX_K, RK_MAX_N};
use xi_harmonic::specfun::{sum_of_squares_r, sum_of_squares_rprime};

#[test]
fn rk_identity_holds_on_full_range() {
    let reports = verify_rk_identity(RK_MAX_K, RK_MAX_N).unwrap();
    assert_eq!(reports.len(), RK_MAX_K + 1);
    for r in &reports {
        assert!(r.pass, "{}", r.variant_notes);
    }
    for k in 0..=RK_MAX_K {
        assert_eq!(lattice_counts(k, RK_MAX_N), rk_expansion(k, RK_MAX_N).unwrap(), "k = {k}");
    }
}

#[test]
fn printed_expansion_fails_at_two_one() {
    let lattice = lattice_counts(2, 1);
    let printed = rk_expansion_printed(2, 1).unwrap();
    assert_ne!(lattice[1], printed[1]);
    assert_eq!(lattice[1], 4);
}

#[test]
fn rprime_is_half_of_r_in_one_dimension() {
    for n in 1..=1000 {
        assert_eq!(sum_of_squares_rprime(1, n).unwrap() * 2, sum_of_squares_r(1, n).unwrap(), "n = {n}");
    }
}
