use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{r_value, Census, ClaimId, ClassifyError, VerificationReport, Witness};
use crate::arith::{is_odd_prime_power_or_twice, unit_involutions, PrimeStream};
use crate::catalog::{q8_by_z2, z2z2_by_z4};
use crate::group::{
    cyclic_subgroups, invariants, involution_count, is_elementary_abelian_2, Constructor,
    FiniteGroup,
};
use crate::iso::are_isomorphic;

fn odd_primes_upto(bound: usize) -> impl Iterator<Item = u64> {
    PrimeStream::new(bound as u64)
}

fn sort_family(mut family: Vec<FiniteGroup>) -> Vec<FiniteGroup> {
    family.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.display_name().cmp(&b.display_name()))
    });
    family
}

/// Members of the family with `c(G) - i(G) = r`, `r` in `{0, 1, 2}`, of order
/// at most `max_order`, sorted by (order, name).
pub fn theorem1_families(
    r: u8,
    max_order: usize,
    k: &Constructor,
) -> Result<Vec<FiniteGroup>, ClassifyError> {
    let mut out = Vec::new();
    let fits = |order: usize| order <= max_order;
    match r {
        0 => {
            let mut rank = 0u32;
            while fits(1usize << rank) {
                out.push(k.elementary_abelian_2(rank)?);
                rank += 1;
            }
        }
        1 => {
            if fits(4) {
                out.push(k.cyclic(4)?);
            }
            if fits(8) {
                out.push(k.dihedral(8)?);
            }
            for p in odd_primes_upto(max_order) {
                out.push(k.cyclic(p)?);
                if fits(2 * p as usize) {
                    out.push(k.dihedral(2 * p)?);
                }
            }
        }
        2 => {
            if fits(8) {
                let (z2, z4) = (k.cyclic(2)?, k.cyclic(4)?);
                out.push(k.direct_product(&z2, &z4)?);
                out.push(k.cyclic(8)?);
            }
            if fits(16) {
                let (z2, d8) = (k.cyclic(2)?, k.dihedral(8)?);
                out.push(k.direct_product(&z2, &d8)?);
                out.push(k.dihedral(16)?);
            }
            for p in odd_primes_upto(max_order / 2) {
                let p2 = p * p;
                if fits(p2 as usize) {
                    out.push(k.cyclic(p2)?);
                }
                if fits(2 * p2 as usize) {
                    out.push(k.dihedral(2 * p2)?);
                }
                out.push(k.cyclic(2 * p)?);
                if fits(4 * p as usize) {
                    out.push(k.dihedral(4 * p)?);
                }
            }
        }
        _ => {
            return Err(ClassifyError::Domain(format!(
                "r must be 0, 1 or 2, got {r}"
            )))
        }
    }
    Ok(sort_family(out))
}

fn find_iso<'a>(g: &FiniteGroup, family: &'a [FiniteGroup]) -> Option<&'a FiniteGroup> {
    family
        .iter()
        .filter(|f| f.order() == g.order())
        .find(|f| are_isomorphic(g, f).is_some())
}

/// Two-way set comparison between the census groups selected by `holds` and
/// the `listed` groups of order within the census bound.
fn compare_with_census(
    report: &mut VerificationReport,
    census: &Census,
    listed: &[FiniteGroup],
    holds: &dyn Fn(&FiniteGroup) -> bool,
    what: &str,
) {
    for f in listed.iter().filter(|f| f.order() <= census.max_order()) {
        if !holds(f) {
            report.fail(
                f,
                format!("listed group {} does not satisfy {what}", f.display_name()),
            );
            continue;
        }
        if find_iso(f, census.of_order(f.order())).is_none() {
            report.fail(
                f,
                format!(
                    "listed group {} is missing from the enumeration",
                    f.display_name()
                ),
            );
            continue;
        }
        report.witness(Witness::of(f));
    }
    for g in census.groups().filter(|g| holds(g)) {
        if find_iso(g, listed).is_none() {
            report.fail(
                g,
                format!("{} satisfies {what} but is not listed", g.display_name()),
            );
        }
    }
}

/// Both directions of the `r = 0, 1, 2` classification over the census.
pub fn verify_theorem1(
    census: &Census,
    k: &Constructor,
) -> Result<[VerificationReport; 3], ClassifyError> {
    let claims = [ClaimId::T11R0, ClaimId::T11R1, ClaimId::T11R2];
    let mut out = claims.map(|c| VerificationReport::new(c, census.scope()));
    for (r, report) in out.iter_mut().enumerate() {
        let family = theorem1_families(r as u8, census.max_order(), k)?;
        let what = format!("r = {r}");
        compare_with_census(report, census, &family, &|g| r_value(g) == r, &what);
    }
    Ok(out)
}

/// Every census group with `4 i(G) > 3 |G|` is elementary abelian, and every
/// elementary abelian 2-group in range exceeds the threshold.
pub fn verify_involution_threshold(
    census: &Census,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new(ClaimId::T22, census.scope());
    let exceeds = |g: &FiniteGroup| 4 * involution_count(g) > 3 * g.order();
    let mut listed = Vec::new();
    let mut rank = 0u32;
    while (1usize << rank) <= census.max_order() {
        listed.push(k.elementary_abelian_2(rank)?);
        rank += 1;
    }
    for g in census.groups().filter(|g| exceeds(g)) {
        if !is_elementary_abelian_2(g) {
            report.fail(
                g,
                format!(
                    "i = {} exceeds 3/4 of {} but the group is not elementary abelian",
                    involution_count(g),
                    g.order()
                ),
            );
        }
    }
    compare_with_census(&mut report, census, &listed, &exceeds, "4i > 3|G|");
    Ok(report)
}

/// The groups with `c(G) = |G| - r` for `r` in `{1, 2, 4}`, all orders.
pub fn c_deficit_list(r: u8, k: &Constructor) -> Result<Vec<FiniteGroup>, ClassifyError> {
    let z = |n: u64| k.cyclic(n);
    let x = |a: &FiniteGroup, b: &FiniteGroup| k.direct_product(a, b);
    let list = match r {
        1 => vec_of([z(3)?, z(4)?, k.dihedral(6)?.with_name("S3"), k.dihedral(8)?]),
        2 => vec_of([
            z(6)?,
            x(&z(4)?, &z(2)?)?,
            k.dihedral(12)?,
            x(&z(2)?, &k.dihedral(8)?)?,
        ]),
        4 => {
            let v4 = k.elementary_abelian_2(2)?;
            let z3z3 = x(&z(3)?, &z(3)?)?;
            vec_of([
                x(&z(4)?, &v4)?.with_name("Z4xZ2xZ2"),
                x(&v4, &k.dihedral(8)?)?.with_name("Z2xZ2xD8"),
                z2z2_by_z4()?,
                q8_by_z2()?,
                z3z3.clone(),
                k.generalized_dihedral(&z3z3)?.with_name("(Z3xZ3):Z2"),
                k.alternating4()?,
                x(&z(6)?, &z(2)?)?,
                x(&v4, &k.dihedral(6)?)?.with_name("Z2xZ2xS3"),
                z(8)?,
                k.dihedral(16)?,
            ])
        }
        _ => {
            return Err(ClassifyError::Domain(format!(
                "r must be 1, 2 or 4, got {r}"
            )))
        }
    };
    Ok(sort_family(list))
}

fn vec_of<const N: usize>(items: [FiniteGroup; N]) -> Vec<FiniteGroup> {
    Vec::from(items)
}

/// Classification of `c(G) = |G| - r`: exhaustive within the census,
/// member-wise (one direction only) for listed groups above it.
pub fn verify_c_order_deficit(
    r: u8,
    census: &Census,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let claim = match r {
        1 => ClaimId::T23R1,
        2 => ClaimId::T23R2,
        4 => ClaimId::T23R4,
        _ => {
            return Err(ClassifyError::Domain(format!(
                "r must be 1, 2 or 4, got {r}"
            )))
        }
    };
    let r = usize::from(r);
    let mut report = VerificationReport::new(claim, census.scope());
    let listed = c_deficit_list(r as u8, k)?;
    let holds = |g: &FiniteGroup| invariants(g).c + r == g.order();
    let what = format!("c = |G| - {r}");
    compare_with_census(&mut report, census, &listed, &holds, &what);
    let above: Vec<&FiniteGroup> = listed
        .iter()
        .filter(|f| f.order() > census.max_order())
        .collect();
    if !above.is_empty() {
        report.exhaustive = false;
        let mut names = Vec::new();
        for f in above {
            if holds(f) {
                report.witness(Witness::of(f));
            } else {
                report.fail(
                    f,
                    format!("listed group {} does not satisfy {what}", f.display_name()),
                );
            }
            names.push(f.display_name());
        }
        report.notes.push(format!(
            "member-wise only above order {}: {}",
            census.max_order(),
            names.join(", ")
        ));
    }
    Ok(report)
}

/// For `n = p^k` or `2 p^k`, the two actions `u = 1` and `u = n - 1` give
/// `Z2 x Zn` and `D_2n`.
pub fn verify_semidirect_dichotomy(
    n: u64,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    if n < 2 || !is_odd_prime_power_or_twice(n) {
        return Err(ClassifyError::Domain(format!(
            "n = {n} is not an odd prime power or twice one"
        )));
    }
    let mut report = VerificationReport::new(ClaimId::T24, format!("n={n}"));
    let units = unit_involutions(n).map_err(|e| ClassifyError::Domain(format!("{e}")))?;
    let z2zn = k.direct_product(&k.cyclic(2)?, &k.cyclic(n)?)?;
    let dihedral = k.dihedral(2 * n)?;
    if units.len() != 2 {
        report.fail(
            &z2zn,
            format!(
                "expected two unit involutions mod {n}, found {}",
                units.len()
            ),
        );
    }
    let mut images: Vec<FiniteGroup> = Vec::new();
    for &u in &units {
        let g = k.semidirect_zn_z2(n, u)?;
        let target = if u == 1 {
            Some(&z2zn)
        } else if u == n - 1 {
            Some(&dihedral)
        } else {
            None
        };
        match target {
            Some(t) if are_isomorphic(&g, t).is_some() => {
                report.witness(Witness::named(
                    format!("{} ~ {}", g.display_name(), t.display_name()),
                    &g,
                ));
            }
            Some(t) => report.fail(
                &g,
                format!(
                    "{} is not isomorphic to {}",
                    g.display_name(),
                    t.display_name()
                ),
            ),
            None => report.fail(&g, format!("unexpected unit involution {u} mod {n}")),
        }
        images.push(g);
    }
    if images.len() == 2 && are_isomorphic(&images[0], &images[1]).is_some() {
        report.fail(&images[0], "the two semidirect products coincide");
    }
    Ok(report)
}

/// Cyclic subgroups of order greater than two.
fn non_involution_cyclic(g: &FiniteGroup) -> Vec<Vec<usize>> {
    cyclic_subgroups(g)
        .subgroups()
        .iter()
        .filter(|s| s.len() > 2)
        .cloned()
        .collect()
}

/// Case (f) of the `r = 2` argument: no census group with `r = 2` has, as its
/// only cyclic subgroups of order above two, exactly two distinct subgroups
/// of the same odd prime order. At order 12 additionally D12 must be the
/// only group with `r = 2`.
pub fn verify_case_f(
    census: &Census,
    k: &Constructor,
) -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new(ClaimId::T11CaseF, census.scope());
    for g in census.groups().filter(|g| r_value(g) == 2) {
        let big = non_involution_cyclic(g);
        let case_f = big.len() == 2
            && big[0].len() == big[1].len()
            && crate::arith::is_prime(big[0].len() as u64)
            && big[0].len() % 2 == 1;
        if case_f {
            report.fail(
                g,
                format!(
                    "r = 2 with two cyclic subgroups of order {} as the only ones above order 2",
                    big[0].len()
                ),
            );
        } else {
            report.witness(Witness::of(g));
        }
    }
    if census.max_order() >= 12 {
        let d12 = k.dihedral(12)?;
        let with_r2: Vec<&FiniteGroup> = census
            .of_order(12)
            .iter()
            .filter(|g| r_value(g) == 2)
            .collect();
        match with_r2.as_slice() {
            [g] if are_isomorphic(g, &d12).is_some() => report
                .notes
                .push(String::from("order 12: D12 is the only group with r = 2")),
            [] => report.fail(&d12, "no group of order 12 has r = 2"),
            [g, ..] => report.fail(
                g,
                format!("{} groups of order 12 have r = 2", with_r2.len()),
            ),
        }
    }
    Ok(report)
}
