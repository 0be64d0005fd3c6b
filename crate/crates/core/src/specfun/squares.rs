use crate::error::{Error, Result};

pub const SQUARES_MAX_K: usize = 8;
pub const SQUARES_MAX_N: usize = 1_000_000;

fn check_caps(k: usize, n: usize) -> Result<()> {
    if k > SQUARES_MAX_K || n > SQUARES_MAX_N {
        return Err(Error::Capacity(format!(
            "sum-of-squares counts limited to k ≤ {SQUARES_MAX_K}, n ≤ {SQUARES_MAX_N}; got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Coefficients of Σ_j w(j) q^{j²} raised to the k-th power, truncated at q^n.
/// `include_zero` selects the full theta series (j ∈ ℤ) versus j ≥ 1.
fn power_table(k: usize, n: usize, include_zero: bool) -> Vec<u128> {
    let mut squares = Vec::new();
    let mut j = 1usize;
    while j * j <= n {
        squares.push(j * j);
        j += 1;
    }
    let (w0, wj) = if include_zero { (1u128, 2u128) } else { (0, 1) };
    let mut r = vec![0u128; n + 1];
    r[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; n + 1];
        for m in 0..=n {
            let mut acc = w0 * r[m];
            for &sq in &squares {
                if sq > m {
                    break;
                }
                acc += wj * r[m - sq];
            }
            next[m] = acc;
        }
        r = next;
    }
    r
}

/// r_k(0..=n): representations as ordered sums of k squares of integers.
pub fn sum_of_squares_r_table(k: usize, n: usize) -> Result<Vec<u128>> {
    check_caps(k, n)?;
    Ok(power_table(k, n, true))
}

/// r'_l(0..=n): representations as ordered sums of l squares of positive integers.
pub fn sum_of_squares_rprime_table(l: usize, n: usize) -> Result<Vec<u128>> {
    check_caps(l, n)?;
    Ok(power_table(l, n, false))
}

pub fn sum_of_squares_r(k: usize, n: usize) -> Result<u128> {
    Ok(sum_of_squares_r_table(k, n)?[n])
}

pub fn sum_of_squares_rprime(l: usize, n: usize) -> Result<u128> {
    Ok(sum_of_squares_rprime_table(l, n)?[n])
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut b: u128 = 1;
    for i in 0..k {
        b = b * (n - i) as u128 / (i + 1) as u128;
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(sum_of_squares_r(2, 5).unwrap(), 8);
        assert_eq!(sum_of_squares_r(1, 4).unwrap(), 2);
        for k in 0..=SQUARES_MAX_K {
            assert_eq!(sum_of_squares_r(k, 0).unwrap(), 1);
        }
        assert_eq!(sum_of_squares_r(0, 1).unwrap(), 0);
        assert_eq!(sum_of_squares_rprime(1, 4).unwrap(), 1);
        assert_eq!(sum_of_squares_rprime(2, 2).unwrap(), 1);
        assert_eq!(sum_of_squares_rprime(0, 0).unwrap(), 1);
        assert_eq!(sum_of_squares_r(4, 1).unwrap(), 8);
    }

    #[test]
    fn jacobi_four_squares() {
        // r_4(n) = 8 Σ_{d|n, 4∤d} d
        let r = sum_of_squares_r_table(4, 300).unwrap();
        for n in 1..=300usize {
            let s: usize = (1..=n).filter(|d| n % d == 0 && d % 4 != 0).sum();
            assert_eq!(r[n], 8 * s as u128, "n = {n}");
        }
    }

    #[test]
    fn one_square_halves() {
        let r = sum_of_squares_r_table(1, 1000).unwrap();
        let rp = sum_of_squares_rprime_table(1, 1000).unwrap();
        for n in 1..=1000 {
            assert_eq!(r[n], 2 * rp[n]);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(8, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn caps() {
        assert!(matches!(sum_of_squares_r(9, 1), Err(Error::Capacity(_))));
        assert!(matches!(sum_of_squares_rprime(1, SQUARES_MAX_N + 1), Err(Error::Capacity(_))));
    }
}
