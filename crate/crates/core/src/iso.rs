//! Isomorphism testing for small groups.
//!
//! The search maps a greedy generating sequence of `G` (lowest index first,
//! each generator outside the span of the previous ones) into `H`, trying
//! images of matching element order and checking the partial map for
//! homomorphism consistency after every choice.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{center_size, generated_subgroup, invariants, is_abelian, FiniteGroup};

/// Cheap isomorphism invariant. Equal fingerprints are necessary, not
/// sufficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoFingerprint {
    pub order: usize,
    /// `(element order, count)` ascending by element order.
    pub order_histogram: Vec<(u32, usize)>,
    pub abelian: bool,
    pub center_size: usize,
    pub i: usize,
    pub c: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> IsoFingerprint {
    let inv = invariants(g);
    IsoFingerprint {
        order: g.order(),
        order_histogram: inv.order_histogram.into_iter().collect(),
        abelian: is_abelian(g),
        center_size: center_size(g),
        i: inv.i,
        c: inv.c,
    }
}

/// An element bijection `G -> H` that respects multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub bijection: Vec<usize>,
}

impl IsoWitness {
    /// Exhaustive check of the homomorphism and bijection properties.
    pub fn is_valid(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        let n = g.order();
        if h.order() != n || self.bijection.len() != n || self.bijection[0] != 0 {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in &self.bijection {
            if y >= n || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        let f = &self.bijection;
        (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b])))
    }
}

/// Breadth-first spanning tree of `<gens>` in `g`: each entry is
/// `(element, parent index into the list, generator index)`.
struct WordTree {
    steps: Vec<(usize, usize, usize)>,
}

fn word_tree(g: &FiniteGroup, gens: &[usize]) -> WordTree {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut steps = vec![(0usize, 0usize, usize::MAX)];
    let mut k = 0;
    while k < steps.len() {
        let y = steps[k].0;
        for (j, &s) in gens.iter().enumerate() {
            let z = g.mul(y, s);
            if !seen[z] {
                seen[z] = true;
                steps.push((z, k, j));
            }
        }
        k += 1;
    }
    WordTree { steps }
}

/// Greedy generating sequence: ascending indices, each outside the span of
/// those before it.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![false; g.order()];
    span[0] = true;
    for x in 1..g.order() {
        if !span[x] {
            gens.push(x);
            for y in generated_subgroup(g, &gens) {
                span[y] = true;
            }
        }
    }
    gens
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    trees: Vec<WordTree>,
    h_orders: Vec<u32>,
    g_orders: Vec<u32>,
    images: Vec<usize>,
}

impl Search<'_> {
    /// Builds the map on `<gens[..=level]>` from the chosen images and checks
    /// it is an injective homomorphism there.
    fn partial_map(&self, level: usize) -> Option<Vec<usize>> {
        let n = self.g.order();
        let tree = &self.trees[level];
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for &(z, parent, j) in &tree.steps {
            let img = if j == usize::MAX {
                0
            } else {
                self.h.mul(map[tree.steps[parent].0], self.images[j])
            };
            if used[img] {
                return None;
            }
            used[img] = true;
            map[z] = img;
        }
        for &(y, _, _) in &tree.steps {
            for j in 0..=level {
                let z = self.g.mul(y, self.gens[j]);
                if map[z] != self.h.mul(map[y], self.images[j]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn extend(&mut self, level: usize) -> Option<Vec<usize>> {
        let want = self.g_orders[self.gens[level]];
        for cand in 1..self.h.order() {
            if self.h_orders[cand] != want {
                continue;
            }
            self.images[level] = cand;
            if let Some(map) = self.partial_map(level) {
                if level + 1 == self.gens.len() {
                    return Some(map);
                }
                if let Some(done) = self.extend(level + 1) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// An isomorphism `G -> H`, or `None`. Deterministic for fixed inputs.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<IsoWitness> {
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    isomorphism_unfiltered(g, h)
}

/// Same as [`are_isomorphic`] without the fingerprint pre-filter; callers
/// that already bucket by fingerprint use this.
pub fn isomorphism_unfiltered(g: &FiniteGroup, h: &FiniteGroup) -> Option<IsoWitness> {
    if g.order() != h.order() {
        return None;
    }
    if g.order() == 1 {
        return Some(IsoWitness { bijection: vec![0] });
    }
    let gens = greedy_generators(g);
    let trees = (0..gens.len()).map(|k| word_tree(g, &gens[..=k])).collect();
    let mut search = Search {
        g,
        h,
        images: vec![0; gens.len()],
        gens,
        trees,
        h_orders: crate::group::element_orders(h),
        g_orders: crate::group::element_orders(g),
    };
    let map = search.extend(0)?;
    if map.contains(&usize::MAX) {
        return None;
    }
    let w = IsoWitness { bijection: map };
    debug_assert!(w.is_valid(g, h));
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        cyclic, dicyclic, dihedral, direct_product, elementary_abelian_2, semidirect_zn_z2,
    };

    #[test]
    fn fingerprint_examples() {
        assert_eq!(
            fingerprint(&cyclic(4).unwrap()).order_histogram,
            vec![(1, 1), (2, 1), (4, 2)]
        );
        assert_eq!(
            fingerprint(&elementary_abelian_2(2).unwrap()).order_histogram,
            vec![(1, 1), (2, 3)]
        );
        assert_eq!(
            fingerprint(&dihedral(8).unwrap()).order_histogram,
            vec![(1, 1), (2, 5), (4, 2)]
        );
        assert_eq!(
            fingerprint(&dicyclic(8).unwrap()).order_histogram,
            vec![(1, 1), (2, 1), (4, 6)]
        );
    }

    #[test]
    fn iso_examples() {
        let d18 = dihedral(18).unwrap();
        let w = are_isomorphic(&d18, &d18).unwrap();
        assert!(w.is_valid(&d18, &d18));
        let sd = semidirect_zn_z2(9, 8).unwrap();
        let w = are_isomorphic(&sd, &d18).unwrap();
        assert!(w.is_valid(&sd, &d18));
        assert!(are_isomorphic(&cyclic(4).unwrap(), &elementary_abelian_2(2).unwrap()).is_none());
        let z12 = cyclic(12).unwrap();
        let z3z4 = direct_product(&cyclic(3).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert!(are_isomorphic(&z3z4, &z12).is_some());
        assert!(are_isomorphic(&dihedral(8).unwrap(), &dicyclic(8).unwrap()).is_none());
    }

    #[test]
    fn semidirect_12_5_is_neither() {
        let g = semidirect_zn_z2(12, 5).unwrap();
        let z2z12 = direct_product(&cyclic(2).unwrap(), &cyclic(12).unwrap()).unwrap();
        assert!(are_isomorphic(&g, &z2z12).is_none());
        assert!(are_isomorphic(&g, &dihedral(24).unwrap()).is_none());
    }

    #[test]
    fn invalid_witness_detected() {
        let z4 = cyclic(4).unwrap();
        assert!(!IsoWitness {
            bijection: vec![0, 2, 1, 3]
        }
        .is_valid(&z4, &z4));
        assert!(IsoWitness {
            bijection: vec![0, 3, 2, 1]
        }
        .is_valid(&z4, &z4));
    }
}
