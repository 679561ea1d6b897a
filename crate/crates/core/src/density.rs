//! Greedy selection of odd primes whose dihedral product has `beta` close to
//! a target.
//!
//! `beta(D_2p) = (p + 1) / (p + 2)` and `beta` is multiplicative over
//! products of dihedral groups of distinct odd prime degree, so the product
//! over a set `I` is `prod_{p in I} (p + 1) / (p + 2)`. Primes are scanned in
//! increasing order and `p` is taken whenever the running product stays at
//! or above the target. Since `sum 1/p` diverges the product can be pushed
//! arbitrarily close to any `t` in `(0, 1]`, given enough primes.
//!
//! Inclusion and stopping are threshold tests on `L = sum ln((p+2)/(p+1))`.
//! They are screened in `f64` with a margin far wider than the accumulated
//! rounding error; a test that falls inside the margin is settled with exact
//! integer products instead. The final selection is always re-checked
//! exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive};

use crate::arith::{is_prime, ExactRational, PrimeStream};
use crate::group::{invariants, Constructor, FiniteGroup, GroupError};

/// Half-width of the band around a threshold in which the float screen
/// defers to exact arithmetic. Summing 10^5 terms of size at most 0.23
/// accumulates well under 10^-10 of rounding error.
const SCREEN_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PrimeSelection {
    /// Ascending, distinct odd primes.
    pub primes: Vec<u64>,
    pub predicted_beta: ExactRational,
    /// `ln(1/t) - sum ln((p+2)/(p+1))`, a float diagnostic.
    pub log_residual: f64,
    pub primes_scanned: u64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DensityError {
    #[error("{0}")]
    Domain(String),
    #[error("prime cap {prime_cap} reached before the tolerance was met (best beta {})", best.predicted_beta)]
    NotConverged {
        best: PrimeSelection,
        prime_cap: u64,
    },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Natural log of a positive big integer.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().expect("finite below 2^1000"));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

fn ln_rational(q: &ExactRational) -> f64 {
    ln_big(q.numer().magnitude()) - ln_big(q.denom().magnitude())
}

/// Product of `values` by balanced splitting.
fn product_of(values: &[u64]) -> BigUint {
    match values {
        [] => BigUint::one(),
        [v] => BigUint::from(*v),
        _ => {
            let (a, b) = values.split_at(values.len() / 2);
            product_of(a) * product_of(b)
        }
    }
}

fn product_tree(primes: &[u64], offset: u64) -> BigUint {
    let shifted: Vec<u64> = primes.iter().map(|p| p + offset).collect();
    product_of(&shifted)
}

/// Exact, reduced `prod (p + 1) / (p + 2)`.
///
/// Every factor is at most `max(p) + 2`, so the fraction is reduced by
/// cancelling prime exponents over a smallest-factor sieve rather than by a
/// gcd of the (possibly million-bit) products.
pub fn selection_beta(primes: &[u64]) -> ExactRational {
    let top = match primes.iter().max() {
        Some(&m) => (m + 2) as usize,
        None => return ExactRational::one(),
    };
    let mut spf = vec![0u32; top + 1];
    for q in 2..=top {
        if spf[q] == 0 {
            for m in (q..=top).step_by(q) {
                if spf[m] == 0 {
                    spf[m] = q as u32;
                }
            }
        }
    }
    let mut exponent = vec![0i64; top + 1];
    let mut tally = |mut v: usize, sign: i64| {
        while v > 1 {
            let q = spf[v] as usize;
            exponent[q] += sign;
            v /= q;
        }
    };
    for &p in primes {
        tally(p as usize + 1, 1);
        tally(p as usize + 2, -1);
    }
    let (mut num, mut den) = (Vec::new(), Vec::new());
    for (q, &e) in exponent.iter().enumerate() {
        let side = if e > 0 { &mut num } else { &mut den };
        side.extend(core::iter::repeat_n(q as u64, e.unsigned_abs() as usize));
    }
    ExactRational::from_coprime(product_of(&num), product_of(&den))
}

/// Sign of `num/den - q`, without reducing `num/den`.
fn compare_fraction(num: &BigUint, den: &BigUint, q: &ExactRational) -> core::cmp::Ordering {
    let lhs = BigInt::from_biguint(Sign::Plus, num.clone()) * q.denom();
    let rhs = BigInt::from_biguint(Sign::Plus, den.clone()) * q.numer();
    lhs.cmp(&rhs)
}

/// `prod_{p in primes + extra} (p+1)/(p+2)` compared with `q`.
fn exact_compare(primes: &[u64], extra: Option<u64>, q: &ExactRational) -> core::cmp::Ordering {
    let mut num = product_tree(primes, 1);
    let mut den = product_tree(primes, 2);
    if let Some(p) = extra {
        num *= p + 1;
        den *= p + 2;
    }
    compare_fraction(&num, &den, q)
}

/// Whether `value` lies above `threshold`, decided in floats when the gap
/// exceeds the margin and by `exact` otherwise.
fn screened_above(value: f64, threshold: f64, exact: impl FnOnce() -> bool) -> bool {
    if value > threshold + SCREEN_MARGIN {
        true
    } else if value < threshold - SCREEN_MARGIN {
        false
    } else {
        exact()
    }
}

fn check_domain(t: &ExactRational, eps: &ExactRational) -> Result<(), DensityError> {
    if !t.is_positive() || *t > ExactRational::one() {
        return Err(DensityError::Domain(format!(
            "target {t} is outside (0, 1]"
        )));
    }
    if !eps.is_positive() {
        return Err(DensityError::Domain(format!(
            "tolerance {eps} is not positive"
        )));
    }
    Ok(())
}

/// Greedy approximation of `t` by `prod (p+1)/(p+2)` over odd primes up to
/// `prime_cap`, stopping once `beta - t <= eps`. The result always has
/// `t <= beta <= t + eps`.
pub fn approximate_beta(
    t: &ExactRational,
    eps: &ExactRational,
    prime_cap: u64,
) -> Result<PrimeSelection, DensityError> {
    check_domain(t, eps)?;
    let upper = t.clone() + eps.clone();
    // Include p while L stays <= ln(1/t); stop once L >= ln(1/(t + eps)).
    let include_limit = -ln_rational(t);
    let stop_limit = -ln_rational(&upper);
    let mut primes = Vec::new();
    let mut sum = 0.0f64;
    let mut scanned = 0u64;

    let done = |primes: &[u64], sum: f64| {
        screened_above(sum, stop_limit, || {
            exact_compare(primes, None, &upper) != core::cmp::Ordering::Greater
        })
    };

    let mut converged = done(&primes, sum);
    if !converged {
        for p in PrimeStream::new(prime_cap) {
            scanned += 1;
            let x = libm::log1p(1.0 / (p as f64 + 1.0));
            let fits = !screened_above(sum + x, include_limit, || {
                exact_compare(&primes, Some(p), t) == core::cmp::Ordering::Less
            });
            if !fits {
                continue;
            }
            primes.push(p);
            sum += x;
            if done(&primes, sum) {
                converged = true;
                break;
            }
        }
    }

    let predicted_beta = selection_beta(&primes);
    let selection = PrimeSelection {
        primes,
        log_residual: (include_limit - sum).max(0.0),
        primes_scanned: scanned,
        predicted_beta,
    };
    if selection.predicted_beta < *t {
        return Err(DensityError::InvariantViolation(format!(
            "selection overshoots: beta {} < target {t}",
            selection.predicted_beta
        )));
    }
    if !converged {
        return Err(DensityError::NotConverged {
            best: selection,
            prime_cap,
        });
    }
    if selection.predicted_beta > upper {
        return Err(DensityError::InvariantViolation(format!(
            "stopped with beta {} above {upper}",
            selection.predicted_beta
        )));
    }
    Ok(selection)
}

#[derive(Debug, Clone)]
pub enum Materialized {
    Group(FiniteGroup),
    TooLarge { required_order: BigUint },
}

/// The product of `D_2p` over the selection, if its order is at most
/// `order_cap`. The counted `beta` is checked against the formula.
pub fn materialize(sel: &PrimeSelection, order_cap: usize) -> Result<Materialized, DensityError> {
    let mut distinct = sel.primes.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != sel.primes.len() || distinct.iter().any(|&p| p == 2 || !is_prime(p)) {
        return Err(DensityError::Domain(format!(
            "{:?} is not a list of distinct odd primes",
            sel.primes
        )));
    }
    let required_order = sel
        .primes
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * (2 * p));
    let k = Constructor::with_cap(order_cap);
    let fits = required_order.to_usize().is_some_and(|n| n <= k.table_cap);
    if !fits {
        return Ok(Materialized::TooLarge { required_order });
    }
    let mut g = FiniteGroup::trivial().with_name("Z1");
    for (j, &p) in sel.primes.iter().enumerate() {
        let d = k.dihedral(2 * p)?;
        g = if j == 0 { d } else { k.direct_product(&g, &d)? };
    }
    let counted = invariants(&g).beta;
    let formula = selection_beta(&sel.primes);
    if counted != formula {
        return Err(DensityError::InvariantViolation(format!(
            "counted beta {counted} differs from formula {formula} for {}",
            g.display_name()
        )));
    }
    Ok(Materialized::Group(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DEFAULT_PRIME_CAP;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_ints(n, d).unwrap()
    }

    #[test]
    fn selection_beta_examples() {
        assert_eq!(selection_beta(&[]), q(1, 1));
        assert_eq!(selection_beta(&[3, 5]), q(24, 35));
        assert_eq!(selection_beta(&[3, 5, 7, 11, 13, 19]), q(2048, 4095));
        let primes: Vec<u64> = PrimeStream::new(3000).collect();
        let slow = ExactRational::from_unsigned(product_tree(&primes, 1), product_tree(&primes, 2));
        assert_eq!(selection_beta(&primes), slow.unwrap());
    }

    #[test]
    fn approximate_examples() {
        let one = approximate_beta(&q(1, 1), &q(1, 10), DEFAULT_PRIME_CAP).unwrap();
        assert!(one.primes.is_empty());
        assert_eq!(one.predicted_beta, q(1, 1));
        let four_fifths = approximate_beta(&q(4, 5), &q(1, 1_000_000), DEFAULT_PRIME_CAP).unwrap();
        assert_eq!(four_fifths.primes, [3]);
        assert_eq!(four_fifths.predicted_beta, q(4, 5));
        let half = approximate_beta(&q(1, 2), &q(1, 1000), DEFAULT_PRIME_CAP).unwrap();
        assert_eq!(half.primes, [3, 5, 7, 11, 13, 19]);
        assert_eq!(half.predicted_beta, q(2048, 4095));
        assert_eq!(half.predicted_beta.clone() - q(1, 2), q(1, 8190));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            approximate_beta(&q(0, 1), &q(1, 10), 100),
            Err(DensityError::Domain(_))
        ));
        assert!(matches!(
            approximate_beta(&q(3, 2), &q(1, 10), 100),
            Err(DensityError::Domain(_))
        ));
        assert!(matches!(
            approximate_beta(&q(1, 2), &q(0, 1), 100),
            Err(DensityError::Domain(_))
        ));
    }

    #[test]
    fn small_cap_fails_to_converge() {
        match approximate_beta(&q(1, 10), &q(1, 1000), 100) {
            Err(DensityError::NotConverged { best, prime_cap }) => {
                assert_eq!(prime_cap, 100);
                assert!(best.predicted_beta >= q(1, 10));
                assert_eq!(best.primes_scanned, 24);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn materialize_examples() {
        let sel = |primes: &[u64]| PrimeSelection {
            primes: primes.to_vec(),
            predicted_beta: selection_beta(primes),
            log_residual: 0.0,
            primes_scanned: 0,
        };
        match materialize(&sel(&[3]), 4096).unwrap() {
            Materialized::Group(g) => assert_eq!(invariants(&g).beta, q(4, 5)),
            other => panic!("{other:?}"),
        }
        match materialize(&sel(&[3, 5]), 4096).unwrap() {
            Materialized::Group(g) => assert_eq!(g.order(), 60),
            other => panic!("{other:?}"),
        }
        match materialize(&sel(&[3, 5, 7, 11, 13, 19]), 4096).unwrap() {
            Materialized::TooLarge { required_order } => {
                assert_eq!(required_order, BigUint::from(18_258_240u32))
            }
            other => panic!("{other:?}"),
        }
        assert!(materialize(&sel(&[9]), 4096).is_err());
    }

    #[test]
    fn big_logs() {
        let x = BigUint::one() << 3000u32;
        let want = 3000.0 * core::f64::consts::LN_2;
        assert!((ln_big(&x) - want).abs() < 1e-9);
    }
}
