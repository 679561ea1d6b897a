use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{r_value, Census, ClaimId, ClassifyError, VerificationReport, Witness};
use crate::arith::{gcd, is_prime, tau, ExactRational, PrimeStream};
use crate::catalog::Catalog;
use crate::group::{
    cyclic_subgroups, invariants, is_elementary_abelian_2, is_normal_subgroup, Constructor,
    FiniteGroup, GroupError,
};

/// Every cyclic subgroup that is the only cyclic subgroup of its order is
/// normal, for all census groups.
pub fn check_lemma21(census: &Census) -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new(ClaimId::L21, census.scope());
    let mut checked = 0usize;
    for g in census.groups() {
        let set = cyclic_subgroups(g);
        let subs = set.subgroups();
        for (idx, s) in subs.iter().enumerate() {
            let alone = subs
                .iter()
                .enumerate()
                .all(|(j, t)| j == idx || t.len() != s.len());
            if !alone {
                continue;
            }
            checked += 1;
            if !is_normal_subgroup(g, s)? {
                report.fail(
                    g,
                    format!(
                        "the unique cyclic subgroup of order {} is not normal: {:?}",
                        s.len(),
                        s
                    ),
                );
            }
        }
        report.witness(Witness::of(g));
    }
    report
        .notes
        .push(format!("{checked} unique cyclic subgroups checked"));
    Ok(report)
}

fn lemma31a_expected(n: u64) -> usize {
    let t = tau(n).expect("n >= 1") as usize;
    if n % 2 == 1 {
        t - 1
    } else {
        t - 2
    }
}

fn lemma31a_into(
    report: &mut VerificationReport,
    n: u64,
    k: &Constructor,
) -> Result<(), ClassifyError> {
    let want = lemma31a_expected(n);
    for g in &[k.cyclic(n)?, k.dihedral(2 * n)?] {
        let got = r_value(g);
        if got == want {
            report.witness(Witness::of(g));
        } else {
            report.fail(
                g,
                format!(
                    "r({}) = {got}, expected {want} from tau({n})",
                    g.display_name()
                ),
            );
        }
    }
    Ok(())
}

/// `r(Z_n) = r(D_2n) = tau(n) - 1` for odd `n`, `tau(n) - 2` for even `n`.
pub fn check_lemma31a(n: u64, k: &Constructor) -> Result<VerificationReport, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::Domain(String::from("n must be positive")));
    }
    let mut report = VerificationReport::new(ClaimId::L31a, format!("n={n}"));
    lemma31a_into(&mut report, n, k)?;
    Ok(report)
}

/// [`check_lemma31a`] for every `n <= max_n` with `2n` within the table cap.
pub fn sweep_lemma31a(max_n: u64, k: &Constructor) -> Result<VerificationReport, ClassifyError> {
    let top = max_n.min(k.table_cap as u64 / 2);
    let mut report = VerificationReport::new(ClaimId::L31a, format!("n<={top}"));
    for n in 1..=top {
        lemma31a_into(&mut report, n, k)?;
    }
    Ok(report)
}

fn lemma31b_into(
    report: &mut VerificationReport,
    h: &FiniteGroup,
    k: &Constructor,
) -> Result<(), ClassifyError> {
    let p = k.direct_product(h, &k.cyclic(2)?)?;
    let (rh, rp) = (r_value(h), r_value(&p));
    if rp == 2 * rh {
        report.witness(Witness::of(&p));
    } else {
        report.fail(
            &p,
            format!(
                "r({}) = {rp}, expected 2 r({}) = {}",
                p.display_name(),
                h.display_name(),
                2 * rh
            ),
        );
    }
    Ok(())
}

/// `r(H x Z2) = 2 r(H)`.
pub fn check_lemma31b(
    h: &FiniteGroup,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new(ClaimId::L31b, format!("H={}", h.display_name()));
    lemma31b_into(&mut report, h, k)?;
    Ok(report)
}

/// [`check_lemma31b`] over every catalog group with `2|H|` within the cap.
pub fn sweep_lemma31b(
    catalog: &Catalog,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new(ClaimId::L31b, "catalog");
    for e in catalog.entries() {
        if 2 * e.group.order() <= k.table_cap {
            lemma31b_into(&mut report, &e.group, k)?;
        }
    }
    Ok(report)
}

fn lemma41_hypothesis(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    gcd(g.order() as u64, h.order() as u64) == 1 || is_elementary_abelian_2(h)
}

fn lemma41_into(
    report: &mut VerificationReport,
    g: &FiniteGroup,
    h: &FiniteGroup,
    k: &Constructor,
) -> Result<(), ClassifyError> {
    if !lemma41_hypothesis(g, h) {
        return Err(ClassifyError::Domain(format!(
            "gcd({}, {}) > 1 and {} is not elementary abelian",
            g.order(),
            h.order(),
            h.display_name()
        )));
    }
    let p = k.direct_product(g, h)?;
    let want = invariants(g).beta * invariants(h).beta;
    let got = invariants(&p).beta;
    if got == want {
        report.witness(Witness::of(&p));
    } else {
        report.fail(&p, format!("beta = {got}, product of factors = {want}"));
    }
    Ok(())
}

/// `beta(G x H) = beta(G) beta(H)` when the orders are coprime or `H` is
/// elementary abelian.
pub fn check_lemma41(
    g: &FiniteGroup,
    h: &FiniteGroup,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let scope = format!("G={}, H={}", g.display_name(), h.display_name());
    let mut report = VerificationReport::new(ClaimId::L41, scope);
    lemma41_into(&mut report, g, h, k)?;
    Ok(report)
}

/// Ordered catalog index pairs satisfying the hypothesis whose product fits
/// the table cap.
pub fn lemma41_eligible(catalog: &Catalog, k: &Constructor) -> Vec<(usize, usize)> {
    let es = catalog.entries();
    let mut out = Vec::new();
    for (a, ea) in es.iter().enumerate() {
        for (b, eb) in es.iter().enumerate() {
            if ea.group.order() * eb.group.order() <= k.table_cap
                && lemma41_hypothesis(&ea.group, &eb.group)
            {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn sweep_lemma41(
    catalog: &Catalog,
    pairs: &[(usize, usize)],
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let mut report =
        VerificationReport::new(ClaimId::L41, format!("{} catalog pairs", pairs.len()));
    let es = catalog.entries();
    for &(a, b) in pairs {
        let (g, h) = match (es.get(a), es.get(b)) {
            (Some(g), Some(h)) => (&g.group, &h.group),
            _ => return Err(ClassifyError::Domain(format!("no catalog pair ({a}, {b})"))),
        };
        lemma41_into(&mut report, g, h, k)?;
    }
    Ok(report)
}

fn dihedral_formula(primes: &[u64]) -> ExactRational {
    primes
        .iter()
        .map(|&p| ExactRational::from_ints(p as i64 + 1, p as i64 + 2).expect("p + 2 > 0"))
        .product()
}

fn lemma42_into(
    report: &mut VerificationReport,
    primes: &[u64],
    k: &Constructor,
) -> Result<(), ClassifyError> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() || sorted.iter().any(|&p| p == 2 || !is_prime(p)) {
        return Err(ClassifyError::Domain(format!(
            "{primes:?} is not a list of distinct odd primes"
        )));
    }
    let required = primes
        .iter()
        .fold(1u128, |acc, &p| acc.saturating_mul(2 * u128::from(p)));
    if required > k.table_cap as u128 {
        return Err(GroupError::TooLarge {
            order: required,
            cap: k.table_cap,
        }
        .into());
    }
    let mut g = FiniteGroup::trivial().with_name("Z1");
    for (j, &p) in primes.iter().enumerate() {
        let d = k.dihedral(2 * p)?;
        g = if j == 0 { d } else { k.direct_product(&g, &d)? };
    }
    let want = dihedral_formula(primes);
    let got = invariants(&g).beta;
    if got == want {
        report.witness(Witness::of(&g));
    } else {
        report.fail(&g, format!("beta = {got}, formula gives {want}"));
    }
    Ok(())
}

/// `beta` of the product of `D_2p` over the given odd primes equals
/// `prod (p + 1) / (p + 2)`.
pub fn check_lemma42(primes: &[u64], k: &Constructor) -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new(ClaimId::L42, format!("primes={primes:?}"));
    lemma42_into(&mut report, primes, k)?;
    Ok(report)
}

/// [`check_lemma42`] for every set of odd primes (the empty set included)
/// whose dihedral product fits the table cap.
pub fn sweep_lemma42(k: &Constructor) -> Result<VerificationReport, ClassifyError> {
    let primes: Vec<u64> = PrimeStream::new(k.table_cap as u64 / 2).collect();
    let mut subsets: Vec<Vec<u64>> = Vec::new();
    let mut stack: Vec<(Vec<u64>, usize, u64)> = Vec::new();
    stack.push((Vec::new(), 0, 1));
    while let Some((set, from, order)) = stack.pop() {
        for (j, &p) in primes.iter().enumerate().skip(from) {
            let next = order * 2 * p;
            if next > k.table_cap as u64 {
                break;
            }
            let mut s = set.clone();
            s.push(p);
            stack.push((s, j + 1, next));
        }
        subsets.push(set);
    }
    subsets.sort();
    let mut report = VerificationReport::new(
        ClaimId::L42,
        format!("{} prime sets, order<={}", subsets.len(), k.table_cap),
    );
    for s in &subsets {
        lemma42_into(&mut report, s, k)?;
    }
    Ok(report)
}

/// The lemma checks at their default sweep ranges: unique-subgroup
/// normality over the census, `n <= 128`, all catalog groups, all eligible
/// catalog pairs and all fitting prime sets.
pub fn run_lemma_sweeps(
    census: &Census,
    catalog: &Catalog,
    k: &Constructor,
) -> Result<Vec<VerificationReport>, ClassifyError> {
    let pairs = lemma41_eligible(catalog, k);
    Ok(alloc::vec![
        check_lemma21(census)?,
        sweep_lemma31a(128, k)?,
        sweep_lemma31b(catalog, k)?,
        sweep_lemma41(catalog, &pairs, k)?,
        sweep_lemma42(k)?,
    ])
}
