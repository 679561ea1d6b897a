use involute_core::arith::{divisors, euler_phi, gcd, is_prime, tau};
use involute_core::density::{approximate_beta, materialize, selection_beta, Materialized};
use involute_core::group::{cyclic, dihedral, direct_product, invariants};
use involute_core::ExactRational;
use num_bigint::BigUint;
use proptest::prelude::*;

fn slow_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn slow_tau(n: u64) -> u64 {
    (1..=n).filter(|&d| n.is_multiple_of(d)).count() as u64
}

/// `prod (p+1) / prod (p+2)`, reduced by the rational type itself.
fn product_formula(primes: &[u64]) -> ExactRational {
    let num: BigUint = primes.iter().map(|&p| BigUint::from(p + 1)).product();
    let den: BigUint = primes.iter().map(|&p| BigUint::from(p + 2)).product();
    ExactRational::from_unsigned(num, den).unwrap()
}

proptest! {
    #[test]
    fn phi_and_tau_match_counting(n in 1u64..3000) {
        prop_assert_eq!(euler_phi(n).unwrap(), slow_phi(n));
        prop_assert_eq!(tau(n).unwrap(), slow_tau(n));
        prop_assert_eq!(divisors(n).len() as u64, slow_tau(n));
    }

    #[test]
    fn phi_and_tau_are_multiplicative(a in 1u64..2000, b in 1u64..2000) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(euler_phi(a * b).unwrap(), euler_phi(a).unwrap() * euler_phi(b).unwrap());
        prop_assert_eq!(tau(a * b).unwrap(), tau(a).unwrap() * tau(b).unwrap());
    }

    #[test]
    fn phi_sums_to_n_over_divisors(n in 1u64..100_000) {
        let total: u64 = divisors(n).iter().map(|&d| euler_phi(d).unwrap()).sum();
        prop_assert_eq!(total, n);
    }

    #[test]
    fn selections_never_overshoot(num in 1u64..1000, scale in 1u32..6) {
        let t = ExactRational::from_ints(num as i64, 1000).unwrap();
        let eps = ExactRational::from_ints(1, 10i64.pow(scale)).unwrap();
        if let Ok(sel) = approximate_beta(&t, &eps, 200_000) {
            let beta = product_formula(&sel.primes);
            prop_assert_eq!(&beta, &sel.predicted_beta);
            prop_assert!(t <= beta);
            prop_assert!(beta <= t.clone() + eps);
            prop_assert!(sel.primes.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(sel.primes.iter().all(|&p| p > 2 && is_prime(p)));
        }
    }

    #[test]
    fn refining_the_tolerance_extends_the_selection(num in 1u64..1000, scale in 1u32..5) {
        let t = ExactRational::from_ints(num as i64, 1000).unwrap();
        let coarse = ExactRational::from_ints(1, 10i64.pow(scale)).unwrap();
        let fine = ExactRational::from_ints(1, 10i64.pow(scale + 1)).unwrap();
        if let (Ok(a), Ok(b)) = (approximate_beta(&t, &coarse, 200_000), approximate_beta(&t, &fine, 200_000)) {
            prop_assert!(a.primes.len() <= b.primes.len());
            prop_assert_eq!(&a.primes[..], &b.primes[..a.primes.len()]);
            prop_assert!(b.predicted_beta <= a.predicted_beta);
        }
    }

    #[test]
    fn selection_beta_matches_formula(mask in 0u32..(1 << 12)) {
        const PRIMES: [u64; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
        let set: Vec<u64> = (0..12).filter(|i| mask >> i & 1 == 1).map(|i| PRIMES[i]).collect();
        prop_assert_eq!(selection_beta(&set), product_formula(&set));
    }
}

#[test]
fn cyclic_subgroups_of_cyclic_groups_are_divisors() {
    for n in 1..=512u64 {
        let inv = invariants(&cyclic(n).unwrap());
        assert_eq!(inv.c as u64, tau(n).unwrap(), "Z{n}");
        assert_eq!(inv.i, if n % 2 == 0 { 2 } else { 1 }, "Z{n}");
    }
}

#[test]
fn dihedral_formulas() {
    for n in 1..=256u64 {
        let inv = invariants(&dihedral(2 * n).unwrap());
        let i = if n % 2 == 0 { n + 2 } else { n + 1 };
        assert_eq!(inv.i as u64, i, "D{}", 2 * n);
        assert_eq!(inv.c as u64, tau(n).unwrap() + n, "D{}", 2 * n);
    }
}

#[test]
fn counted_beta_of_dihedral_products() {
    for set in [&[3u64][..], &[5], &[3, 5], &[3, 7], &[5, 7], &[3, 5, 7]] {
        let mut g = cyclic(1).unwrap();
        for &p in set {
            g = direct_product(&g, &dihedral(2 * p).unwrap()).unwrap();
        }
        assert_eq!(invariants(&g).beta, product_formula(set), "{set:?}");
    }
    let t = ExactRational::from_ints(3, 5).unwrap();
    let eps = ExactRational::from_ints(1, 100).unwrap();
    let sel = approximate_beta(&t, &eps, 1000).unwrap();
    match materialize(&sel, 4096).unwrap() {
        Materialized::Group(g) => assert_eq!(invariants(&g).beta, sel.predicted_beta),
        Materialized::TooLarge { required_order } => {
            let order: BigUint = sel.primes.iter().map(|&p| BigUint::from(2 * p)).product();
            assert_eq!(required_order, order);
        }
    }
}
