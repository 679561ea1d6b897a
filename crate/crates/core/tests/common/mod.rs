#![allow(dead_code)]

use involute_core::group::Elem;
use involute_core::FiniteGroup;
use rand::seq::SliceRandom;
use rand::Rng;

/// Tries every bijection sending identity to identity.
pub fn brute_force_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let n = g.order();
    n == h.order() && brute_force_rows(&g.rows(), &h.rows())
}

pub fn brute_force_rows(g: &[Vec<usize>], h: &[Vec<usize>]) -> bool {
    let n = g.len();
    if n != h.len() {
        return false;
    }
    let mut map = vec![0; n];
    let mut used = vec![false; n];
    used[0] = true;
    fn extend(
        k: usize,
        g: &[Vec<usize>],
        h: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = g.len();
        if k == n {
            return (0..n).all(|a| (0..n).all(|b| map[g[a][b]] == h[map[a]][map[b]]));
        }
        for y in 1..n {
            if !used[y] {
                used[y] = true;
                map[k] = y;
                if extend(k + 1, g, h, map, used) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    extend(1, g, h, &mut map, &mut used)
}

pub fn relabel<R: Rng>(g: &FiniteGroup, rng: &mut R) -> FiniteGroup {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as Elem;
        }
    }
    FiniteGroup::from_flat(n, table).unwrap()
}
