//! Element orders, involutions, cyclic subgroups and the derived ratio
//! `beta = i / c`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{FiniteGroup, GroupError};
use crate::arith::{euler_phi, ExactRational};

pub fn element_orders(g: &FiniteGroup) -> Vec<u32> {
    let n = g.order();
    let mut orders = vec![0u32; n];
    orders[0] = 1;
    for x in 1..n {
        if orders[x] != 0 {
            continue;
        }
        // Walk <x> once and assign |x^k| = |x| / gcd(k, |x|) to every power.
        let mut powers = vec![0usize];
        let mut p = x;
        while p != 0 {
            powers.push(p);
            p = g.mul(p, x);
        }
        let ord = powers.len() as u64;
        for (k, &y) in powers.iter().enumerate().skip(1) {
            if orders[y] == 0 {
                orders[y] = (ord / crate::arith::gcd(k as u64, ord)) as u32;
            }
        }
    }
    orders
}

pub fn element_order(g: &FiniteGroup, x: usize) -> Result<u32, GroupError> {
    if x >= g.order() {
        return Err(GroupError::IndexOutOfRange {
            index: x,
            order: g.order(),
        });
    }
    let mut k = 1;
    let mut p = x;
    while p != 0 {
        p = g.mul(p, x);
        k += 1;
    }
    Ok(k)
}

/// `|{x : x^2 = e}|`, identity included.
pub fn involution_count(g: &FiniteGroup) -> usize {
    g.elements().filter(|&x| g.mul(x, x) == 0).count()
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|a| (a + 1..n).all(|b| g.mul(a, b) == g.mul(b, a)))
}

pub fn center_size(g: &FiniteGroup) -> usize {
    let n = g.order();
    (0..n)
        .filter(|&a| (0..n).all(|b| g.mul(a, b) == g.mul(b, a)))
        .count()
}

pub fn is_elementary_abelian_2(g: &FiniteGroup) -> bool {
    involution_count(g) == g.order()
}

/// Subgroup generated by `gens`, as a sorted index list.
pub fn generated_subgroup(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut members = vec![0usize];
    let mut k = 0;
    while k < members.len() {
        let y = members[k];
        for &s in gens {
            let z = g.mul(y, s);
            if !inside[z] {
                inside[z] = true;
                members.push(z);
            }
        }
        k += 1;
    }
    members.sort_unstable();
    members
}

/// The set `C(G)` of cyclic subgroups, trivial subgroup included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubgroupSet {
    subgroups: Vec<Vec<usize>>,
}

impl CyclicSubgroupSet {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Sorted by (size, elements).
    pub fn subgroups(&self) -> &[Vec<usize>] {
        &self.subgroups
    }

    pub fn of_order(&self, k: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.subgroups.iter().filter(move |s| s.len() == k)
    }
}

/// Every cyclic subgroup exactly once. Each `<x>` is walked from its first
/// unseen generator, and all `phi(|x|)` generators of it are then marked, so
/// no duplicate is ever produced.
pub fn cyclic_subgroups(g: &FiniteGroup) -> CyclicSubgroupSet {
    let n = g.order();
    let mut covered = vec![false; n];
    let mut subgroups = Vec::new();
    for x in 0..n {
        if covered[x] {
            continue;
        }
        let mut powers = vec![0usize];
        let mut p = x;
        while p != 0 {
            powers.push(p);
            p = g.mul(p, x);
        }
        let ord = powers.len() as u64;
        for (k, &y) in powers.iter().enumerate() {
            if crate::arith::gcd(k as u64, ord) == 1 || ord == 1 {
                covered[y] = true;
            }
        }
        powers.sort_unstable();
        subgroups.push(powers);
    }
    subgroups.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    CyclicSubgroupSet { subgroups }
}

/// `i(G)`, `c(G)`, `r = c - i`, `beta = i / c` and the element-order
/// histogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: usize,
    pub i: usize,
    pub c: usize,
    pub r: usize,
    pub beta: ExactRational,
    pub order_histogram: BTreeMap<u32, usize>,
    pub element_orders: Vec<u32>,
}

/// Computes the invariant bundle. `c` is obtained from the histogram as
/// `sum_k h_k / phi(k)`, since a cyclic subgroup of order `k` has exactly
/// `phi(k)` generators.
pub fn invariants(g: &FiniteGroup) -> GroupInvariants {
    let element_orders = element_orders(g);
    let mut order_histogram = BTreeMap::new();
    for &o in &element_orders {
        *order_histogram.entry(o).or_insert(0usize) += 1;
    }
    let i = order_histogram.get(&1).copied().unwrap_or(0)
        + order_histogram.get(&2).copied().unwrap_or(0);
    let c = order_histogram
        .iter()
        .map(|(&k, &h)| {
            let phi = euler_phi(u64::from(k)).expect("orders are positive") as usize;
            debug_assert_eq!(h % phi, 0);
            h / phi
        })
        .sum::<usize>();
    debug_assert!(1 <= i && i <= c && c <= g.order());
    let beta = ExactRational::from_ints(i as i64, c as i64).expect("c >= 1");
    GroupInvariants {
        order: g.order(),
        i,
        c,
        r: c - i,
        beta,
        order_histogram,
        element_orders,
    }
}

/// Whether the subgroup `subset` is normal. Fails if `subset` is not a
/// subgroup.
pub fn is_normal_subgroup(g: &FiniteGroup, subset: &[usize]) -> Result<bool, GroupError> {
    let n = g.order();
    let mut inside = vec![false; n];
    for &s in subset {
        if s >= n {
            return Err(GroupError::IndexOutOfRange { index: s, order: n });
        }
        inside[s] = true;
    }
    if !inside[0] {
        return Err(GroupError::NotSubgroup);
    }
    for &a in subset {
        for &b in subset {
            if !inside[g.mul(a, b)] {
                return Err(GroupError::NotSubgroup);
            }
        }
    }
    Ok((0..n).all(|x| {
        let xi = g.inverse(x);
        subset.iter().all(|&s| inside[g.mul(g.mul(x, s), xi)])
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dicyclic, dihedral, direct_product, elementary_abelian_2};

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_ints(n, d).unwrap()
    }

    #[test]
    fn orders_and_powers() {
        let z12 = cyclic(12).unwrap();
        assert_eq!(element_order(&z12, 0), Ok(1));
        assert_eq!(element_order(&z12, 1), Ok(12));
        assert!(element_order(&z12, 12).is_err());
        let p = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        // (1, 1) sits at index 1 * 2 + 1.
        assert_eq!(element_order(&p, 3), Ok(4));
        for g in [z12, p, dihedral(10).unwrap(), dicyclic(12).unwrap()] {
            let fast = element_orders(&g);
            for x in g.elements() {
                assert_eq!(fast[x], element_order(&g, x).unwrap());
            }
        }
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution_count(&elementary_abelian_2(3).unwrap()), 8);
        assert_eq!(involution_count(&cyclic(4).unwrap()), 2);
        assert_eq!(involution_count(&dihedral(8).unwrap()), 6);
    }

    #[test]
    fn cyclic_subgroup_examples() {
        assert_eq!(cyclic_subgroups(&cyclic(12).unwrap()).len(), 6);
        assert_eq!(cyclic_subgroups(&dihedral(8).unwrap()).len(), 7);
        let t = cyclic_subgroups(&FiniteGroup::trivial());
        assert_eq!(t.subgroups(), &[vec![0]]);
    }

    #[test]
    fn invariant_examples() {
        let d6 = invariants(&dihedral(6).unwrap());
        assert_eq!((d6.order, d6.i, d6.c, d6.r), (6, 4, 5, 1));
        assert_eq!(d6.beta, q(4, 5));
        let q8 = invariants(&dicyclic(8).unwrap());
        assert_eq!((q8.order, q8.i, q8.c, q8.r), (8, 2, 5, 3));
        assert_eq!(q8.beta, q(2, 5));
        for k in 0..6 {
            assert_eq!(invariants(&elementary_abelian_2(k).unwrap()).beta, q(1, 1));
        }
        assert_eq!(d6.order_histogram.values().sum::<usize>(), 6);
    }

    #[test]
    fn normality() {
        let z6 = cyclic(6).unwrap();
        assert_eq!(is_normal_subgroup(&z6, &[0, 2, 4]), Ok(true));
        let d6 = dihedral(6).unwrap();
        // Rotations are 0..3, reflections 3..6.
        assert_eq!(is_normal_subgroup(&d6, &[0, 1, 2]), Ok(true));
        assert_eq!(is_normal_subgroup(&d6, &[0, 3]), Ok(false));
        assert_eq!(
            is_normal_subgroup(&d6, &[0, 1]),
            Err(GroupError::NotSubgroup)
        );
        assert_eq!(
            is_normal_subgroup(&d6, &[1, 2]),
            Err(GroupError::NotSubgroup)
        );
    }

    #[test]
    fn center_and_abelian() {
        assert_eq!(center_size(&dihedral(8).unwrap()), 2);
        assert_eq!(center_size(&dicyclic(8).unwrap()), 2);
        assert_eq!(center_size(&dihedral(6).unwrap()), 1);
        assert!(is_abelian(&cyclic(9).unwrap()));
        assert!(!is_abelian(&dihedral(6).unwrap()));
    }
}
