use crate::error::{Error, Result};

/// Largest sieve length accepted (one byte per entry plus the prime list).
pub const MOBIUS_CAPACITY: usize = 100_000_000;

/// μ(1), …, μ(N) by a linear sieve; index i holds μ(i+1).
pub fn mobius_sieve(n: usize) -> Result<Vec<i8>> {
    if n == 0 {
        return Err(Error::domain("mobius_sieve needs N ≥ 1"));
    }
    if n > MOBIUS_CAPACITY {
        return Err(Error::Capacity(format!(
            "mobius_sieve({n}) exceeds the budget of {MOBIUS_CAPACITY} entries"
        )));
    }
    let mut mu = vec![0i8; n + 1];
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = 1;
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu.remove(0);
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(mobius_sieve(4).unwrap(), vec![1, -1, -1, 0]);
        let mu = mobius_sieve(30).unwrap();
        assert_eq!(mu[29], -1);
        assert_eq!(mu[11], 0);
        assert_eq!(mobius_sieve(1).unwrap(), vec![1]);
    }

    #[test]
    fn mertens_floor_identity() {
        let n = 1000;
        let mu = mobius_sieve(n).unwrap();
        let s: i64 = (1..=n).map(|m| mu[m - 1] as i64 * (n / m) as i64).sum();
        assert_eq!(s, 1);
    }

    #[test]
    fn divisor_sum_vanishes() {
        let n = 10_000;
        let mu = mobius_sieve(n).unwrap();
        let mut acc = vec![0i64; n + 1];
        for d in 1..=n {
            for k in (d..=n).step_by(d) {
                acc[k] += mu[d - 1] as i64;
            }
        }
        assert_eq!(acc[1], 1);
        assert!(acc[2..].iter().all(|&v| v == 0));
    }

    #[test]
    fn squareful_iff_zero() {
        let mu = mobius_sieve(2000).unwrap();
        for m in 1..=2000usize {
            let squareful = (2..=m).any(|p| m % (p * p) == 0);
            assert_eq!(mu[m - 1] == 0, squareful, "m = {m}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(mobius_sieve(0), Err(Error::Domain(_))));
        assert!(matches!(mobius_sieve(MOBIUS_CAPACITY + 1), Err(Error::Capacity(_))));
    }
}
