//! r_k(n) = Σ_l C(k,l)·2^l·r'_l(n): choose which of the k coordinates are
//! nonzero, then a sign for each.

use num_complex::Complex64;

use super::report::{IdentityId, Param, VerificationReport};
use crate::error::{Error, Result};
use crate::specfun::{binomial, sum_of_squares_r_table, sum_of_squares_rprime_table};

pub const RK_MAX_K: usize = 6;
pub const RK_MAX_N: usize = 500;

/// Lattice count of r_k(0..=n), independent of the theta-series tables:
/// walk the nonnegative orthant and weight each point by 2^{#nonzero}.
pub fn lattice_counts(k: usize, n: usize) -> Vec<u128> {
    fn walk(dims: usize, sum: usize, weight: u128, n: usize, out: &mut [u128]) {
        if dims == 0 {
            out[sum] += weight;
            return;
        }
        let mut a = 0usize;
        while sum + a * a <= n {
            walk(dims - 1, sum + a * a, if a == 0 { weight } else { 2 * weight }, n, out);
            a += 1;
        }
    }
    let mut out = vec![0u128; n + 1];
    walk(k, 0, 1, n, &mut out);
    out
}

/// Σ_l C(k,l)·base(l)·r'_l(n) for each n ≤ n_max.
fn expansion(k: usize, n_max: usize, base: impl Fn(usize) -> u128) -> Result<Vec<u128>> {
    let mut total = vec![0u128; n_max + 1];
    for l in 0..=k {
        let rp = sum_of_squares_rprime_table(l, n_max)?;
        let c = binomial(k, l) * base(l);
        for (t, r) in total.iter_mut().zip(rp) {
            *t += c * r;
        }
    }
    Ok(total)
}

/// Right-hand side with the sign factor 2^l.
pub fn rk_expansion(k: usize, n_max: usize) -> Result<Vec<u128>> {
    expansion(k, n_max, |l| 1u128 << l)
}

/// The printed reading with 2^k in place of 2^l.
pub fn rk_expansion_printed(k: usize, n_max: usize) -> Result<Vec<u128>> {
    expansion(k, n_max, |_| 1u128 << k)
}

/// One report per k ≤ k_max, exact integer comparison over 1 ≤ n ≤ n_max.
/// lhs is the lattice count, rhs the 2^l expansion, both taken at the first
/// mismatching n (or n_max when all agree).
pub fn verify_rk_identity(k_max: usize, n_max: usize) -> Result<Vec<VerificationReport>> {
    if k_max > RK_MAX_K || n_max > RK_MAX_N || n_max == 0 {
        return Err(Error::domain(format!(
            "rk identity is checked for k ≤ {RK_MAX_K}, 1 ≤ n ≤ {RK_MAX_N}; got k = {k_max}, n = {n_max}"
        )));
    }
    (0..=k_max)
        .map(|k| {
            let lattice = lattice_counts(k, n_max);
            let theta = sum_of_squares_r_table(k, n_max)?;
            let rhs = rk_expansion(k, n_max)?;
            let printed = rk_expansion_printed(k, n_max)?;
            let bad = (1..=n_max).find(|&n| lattice[n] != rhs[n] || theta[n] != lattice[n]);
            let at = bad.unwrap_or(n_max);
            let printed_bad: Vec<usize> = (1..=n_max).filter(|&n| printed[n] != lattice[n]).collect();
            let mut notes = format!(
                "exact integers, lattice oracle vs sum_l C(k,l) 2^l r'_l(n) for 1 <= n <= {n_max}; theta-series r_k table {}",
                if (1..=n_max).all(|n| theta[n] == lattice[n]) { "agrees" } else { "DISAGREES" }
            );
            match printed_bad.first() {
                Some(&n) => notes.push_str(&format!(
                    "; printed 2^k variant fails at {} of {n_max} n, first at n = {n}: {} vs r_{k}({n}) = {}",
                    printed_bad.len(),
                    printed[n],
                    lattice[n]
                )),
                None => notes.push_str("; printed 2^k variant coincides for this k"),
            }
            Ok(VerificationReport::judged(
                IdentityId::RkIdentity,
                vec![Param::new("k", k as f64), Param::new("n", at as f64)],
                Complex64::new(lattice[at] as f64, 0.0),
                Complex64::new(rhs[at] as f64, 0.0),
                0.0,
                n_max + 1,
                bad.is_none(),
                notes,
            ))
        })
        .collect()
}
