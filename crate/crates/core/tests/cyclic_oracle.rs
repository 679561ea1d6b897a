//! Cyclic subgroups and involutions recounted the slow way: close every
//! element into its subgroup and collect the distinct sets.

use std::collections::{BTreeMap, BTreeSet};

use involute_core::catalog::Catalog;
use involute_core::group::{
    cyclic, cyclic_subgroups, dicyclic, dihedral, direct_product, generalized_dihedral, invariants,
    Constructor,
};
use involute_core::FiniteGroup;

fn closure(g: &FiniteGroup, x: usize) -> BTreeSet<usize> {
    let mut set = BTreeSet::new();
    let mut p = 0;
    loop {
        if !set.insert(p) {
            return set;
        }
        p = g.mul(p, x);
    }
}

fn slow_counts(g: &FiniteGroup) -> (usize, usize, BTreeMap<usize, usize>) {
    let subgroups: BTreeSet<BTreeSet<usize>> = g.elements().map(|x| closure(g, x)).collect();
    let involutions = g.elements().filter(|&x| g.mul(x, x) == 0).count();
    let mut histogram = BTreeMap::new();
    for x in g.elements() {
        *histogram.entry(closure(g, x).len()).or_insert(0) += 1;
    }
    (involutions, subgroups.len(), histogram)
}

fn pool() -> Vec<FiniteGroup> {
    let k = Constructor::default();
    let mut out: Vec<FiniteGroup> = Catalog::standard()
        .entries()
        .iter()
        .map(|e| e.group.clone())
        .collect();
    for n in [18, 20, 22, 24] {
        out.push(dihedral(n).unwrap());
        out.push(cyclic(n).unwrap());
    }
    out.push(dicyclic(20).unwrap());
    out.push(dicyclic(24).unwrap());
    let z3z3 = direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap();
    out.push(generalized_dihedral(&z3z3).unwrap());
    out.push(direct_product(&k.alternating4().unwrap(), &cyclic(2).unwrap()).unwrap());
    out.push(direct_product(&dihedral(6).unwrap(), &elementary(2)).unwrap());
    out
}

fn elementary(rank: u32) -> FiniteGroup {
    involute_core::group::elementary_abelian_2(rank).unwrap()
}

#[test]
fn fast_and_slow_counts_agree() {
    for g in pool() {
        assert!(g.order() <= 24);
        let (i, c, hist) = slow_counts(&g);
        let inv = invariants(&g);
        let name = g.display_name();
        assert_eq!(inv.i, i, "{name}: i");
        assert_eq!(inv.c, c, "{name}: c from totients");
        assert_eq!(
            cyclic_subgroups(&g).len(),
            c,
            "{name}: explicit enumeration"
        );
        let fast: BTreeMap<usize, usize> = inv
            .order_histogram
            .iter()
            .map(|(&k, &v)| (k as usize, v))
            .collect();
        assert_eq!(fast, hist, "{name}: histogram");
        assert_eq!(inv.r, c - i);
    }
}

#[test]
fn explicit_subgroups_are_the_closures() {
    for g in pool() {
        let want: BTreeSet<Vec<usize>> = g
            .elements()
            .map(|x| closure(&g, x).into_iter().collect())
            .collect();
        let got: BTreeSet<Vec<usize>> = cyclic_subgroups(&g).subgroups().iter().cloned().collect();
        assert_eq!(got, want, "{}", g.display_name());
    }
}
