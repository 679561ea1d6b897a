//! Number-theoretic helpers and exact rationals.

mod primes;
mod rational;

use alloc::vec::Vec;

pub use primes::{odd_primes, PrimeStream, DEFAULT_PRIME_CAP};
pub use rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("{0} is outside the domain of {1}")]
    Domain(u64, &'static str),
    #[error("prime cap {cap} reached after {found} odd primes")]
    PrimeCapExceeded { cap: u64, found: usize },
    #[error("malformed decimal literal {text:?} at byte {position}")]
    Parse {
        text: alloc::string::String,
        position: usize,
    },
    #[error("zero denominator")]
    ZeroDenominator,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::Domain(0, "euler_phi"));
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn tau(n: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::Domain(0, "tau"));
    }
    Ok(factorize(n)
        .into_iter()
        .map(|(_, e)| u64::from(e) + 1)
        .product())
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).first() == Some(&(n, 1))
}

/// Units `u` modulo `n` with `u^2 = 1`, ascending. These index the
/// homomorphisms `Z_2 -> Aut(Z_n)`.
pub fn unit_involutions(n: u64) -> Result<Vec<u64>, ArithError> {
    if n < 2 {
        return Err(ArithError::Domain(n, "unit_involutions"));
    }
    let m = u128::from(n);
    Ok((1..n)
        .filter(|&u| gcd(u, n) == 1 && (u128::from(u) * u128::from(u)) % m == 1)
        .collect())
}

/// `n = p^k` or `n = 2 p^k` with `p` an odd prime and `k >= 1`.
pub fn is_odd_prime_power_or_twice(n: u64) -> bool {
    let m = if n.is_multiple_of(2) { n / 2 } else { n };
    let f = factorize(m);
    f.len() == 1 && f[0].0 != 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn phi_by_scan(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), Ok(1));
        // {1,5,7,11}
        assert_eq!(phi_by_scan(12), 4);
        assert_eq!(euler_phi(12), Ok(4));
        assert_eq!(euler_phi(13), Ok(12));
        assert!(euler_phi(0).is_err());
        for n in 1..500 {
            assert_eq!(euler_phi(n).unwrap(), phi_by_scan(n), "n={n}");
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(1), Ok(1));
        assert_eq!((1..=12u64).filter(|d| 12 % d == 0).count(), 6);
        assert_eq!(tau(12), Ok(6));
        assert_eq!(tau(49), Ok(3));
        assert!(tau(0).is_err());
        for n in 1..500u64 {
            assert_eq!(tau(n).unwrap(), divisors(n).len() as u64);
        }
    }

    #[test]
    fn unit_involution_examples() {
        assert_eq!(unit_involutions(2).unwrap(), vec![1]);
        assert_eq!(unit_involutions(5).unwrap(), vec![1, 4]);
        assert_eq!(unit_involutions(12).unwrap(), vec![1, 5, 7, 11]);
        assert!(unit_involutions(1).is_err());
        assert!(unit_involutions(0).is_err());
        for n in 3..300 {
            let u = unit_involutions(n).unwrap();
            assert!(u.contains(&1) && u.contains(&(n - 1)));
        }
    }

    #[test]
    fn prime_power_forms() {
        for n in [3, 5, 9, 25, 27, 49, 6, 10, 18, 54] {
            assert!(is_odd_prime_power_or_twice(n), "{n}");
        }
        for n in [1, 2, 4, 8, 12, 15, 30, 36] {
            assert!(!is_odd_prime_power_or_twice(n), "{n}");
        }
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
