//! Constructors for the group families used throughout the crate.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{is_abelian, Elem, FiniteGroup, GroupError, DEFAULT_TABLE_CAP};
use crate::arith::unit_involutions;

/// Group constructors sharing one table cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constructor {
    pub table_cap: usize,
}

impl Default for Constructor {
    fn default() -> Self {
        Constructor {
            table_cap: DEFAULT_TABLE_CAP,
        }
    }
}

impl Constructor {
    pub fn with_cap(table_cap: usize) -> Self {
        Constructor {
            table_cap: table_cap.min(usize::from(Elem::MAX)),
        }
    }

    fn admit(&self, order: u128) -> Result<usize, GroupError> {
        if order > self.table_cap as u128 {
            return Err(GroupError::TooLarge {
                order,
                cap: self.table_cap,
            });
        }
        Ok(order as usize)
    }

    fn build(
        &self,
        order: u128,
        mut op: impl FnMut(usize, usize) -> usize,
    ) -> Result<FiniteGroup, GroupError> {
        let n = self.admit(order)?;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b) as Elem);
            }
        }
        Ok(FiniteGroup::from_trusted(n, table))
    }

    /// Like `build`, with `fill(a, row)` writing row `a` in one pass.
    fn build_rows(
        &self,
        order: u128,
        mut fill: impl FnMut(usize, &mut [Elem]),
    ) -> Result<FiniteGroup, GroupError> {
        let n = self.admit(order)?;
        let mut table = vec![0 as Elem; n * n];
        for (a, row) in table.chunks_exact_mut(n.max(1)).enumerate() {
            fill(a, row);
        }
        Ok(FiniteGroup::from_trusted(n, table))
    }

    pub fn cyclic(&self, n: u64) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::BadParameter {
                what: "cyclic order",
                value: n,
            });
        }
        let m = n as usize;
        let g = self.build_rows(n.into(), |a, row| {
            for (b, cell) in row.iter_mut().enumerate() {
                let v = a + b;
                *cell = (if v >= m { v - m } else { v }) as Elem;
            }
        })?;
        Ok(g.with_name(format!("Z{n}")))
    }

    /// Dihedral group of order `m = 2k`: rotations `0..k`, reflections `k..2k`.
    pub fn dihedral(&self, m: u64) -> Result<FiniteGroup, GroupError> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(GroupError::BadParameter {
                what: "dihedral order",
                value: m,
            });
        }
        let k = (m / 2) as usize;
        let g = self.build_rows(m.into(), |a, row| {
            let (j, s) = (a % k, a / k);
            let (rot, refl) = row.split_at_mut(k);
            for l in 0..k {
                // r^j s^s * r^l = r^(j +- l) s^s, and likewise times r^l s.
                let v = if s == 0 { (j + l) % k } else { (j + k - l) % k };
                rot[l] = (v + k * s) as Elem;
                refl[l] = (v + k * (1 - s)) as Elem;
            }
        })?;
        Ok(g.with_name(format!("D{m}")))
    }

    /// Dicyclic group of order `m = 4k`: `<a, x | a^{2k}, x^2 = a^k, x a x^-1 = a^-1>`.
    /// Order 8 gives the quaternion group.
    pub fn dicyclic(&self, m: u64) -> Result<FiniteGroup, GroupError> {
        if m < 4 || !m.is_multiple_of(4) {
            return Err(GroupError::BadParameter {
                what: "dicyclic order",
                value: m,
            });
        }
        let half = (m / 2) as usize;
        let k = half / 2;
        let g = self.build(m.into(), |a, b| {
            let (j, s) = (a % half, a / half);
            let (l, t) = (b % half, b / half);
            match (s, t) {
                (0, _) => (j + l) % half + half * t,
                (_, 0) => (j + half - l) % half + half,
                _ => (j + half - l + k) % half,
            }
        })?;
        Ok(g.with_name(format!("Q{m}")))
    }

    pub fn elementary_abelian_2(&self, k: u32) -> Result<FiniteGroup, GroupError> {
        if k >= 32 {
            return Err(GroupError::BadParameter {
                what: "rank",
                value: k.into(),
            });
        }
        let g = self.build(1u128 << k, |a, b| a ^ b)?;
        let name = match k {
            0 => String::from("Z1"),
            1 => String::from("Z2"),
            _ => format!("Z2^{k}"),
        };
        Ok(g.with_name(name))
    }

    /// Pairs `(g, h)` stored at index `g * |H| + h`.
    pub fn direct_product(
        &self,
        g: &FiniteGroup,
        h: &FiniteGroup,
    ) -> Result<FiniteGroup, GroupError> {
        let m = h.order();
        let order = g.order() as u128 * m as u128;
        let out = self.build_rows(order, |a, row| {
            let (hrow, grow) = (h.row(a % m), g.row(a / m));
            for (chunk, &gv) in row.chunks_exact_mut(m).zip(grow) {
                let base = usize::from(gv) * m;
                for (cell, &hv) in chunk.iter_mut().zip(hrow) {
                    *cell = (base + usize::from(hv)) as Elem;
                }
            }
        })?;
        Ok(out.with_name(format!("{}x{}", factor_name(g), factor_name(h))))
    }

    /// `Z_n x| Z_2` on pairs `(a, b)`, index `a + n b`, with
    /// `(a, b)(a', b') = (a + u^b a', b + b')`.
    pub fn semidirect_zn_z2(&self, n: u64, u: u64) -> Result<FiniteGroup, GroupError> {
        let units = unit_involutions(n).map_err(|_| GroupError::BadParameter {
            what: "semidirect modulus",
            value: n,
        })?;
        if !units.contains(&u) {
            return Err(GroupError::BadParameter {
                what: "semidirect action",
                value: u,
            });
        }
        let g = self.cyclic_by_cyclic(n, 2, u)?;
        Ok(g.with_name(format!("SD({n},{u})")))
    }

    /// `Z_n x| Z_m` with the generator of `Z_m` acting as multiplication by
    /// `u`; requires `u^m = 1 (mod n)`.
    pub(crate) fn cyclic_by_cyclic(
        &self,
        n: u64,
        m: u64,
        u: u64,
    ) -> Result<FiniteGroup, GroupError> {
        if n == 0 || m == 0 {
            return Err(GroupError::BadParameter {
                what: "semidirect order",
                value: n.min(m),
            });
        }
        let modulus = n as u128;
        let mut acts = Vec::with_capacity(m as usize);
        let mut p: u128 = 1 % modulus;
        for _ in 0..m {
            acts.push(p as usize);
            p = p * u128::from(u) % modulus;
        }
        if p != 1 % modulus {
            return Err(GroupError::BadParameter {
                what: "semidirect action",
                value: u,
            });
        }
        let (nn, mm) = (n as usize, m as usize);
        self.build(modulus * u128::from(m), |x, y| {
            let (a, b) = (x % nn, x / nn);
            let (c, d) = (y % nn, y / nn);
            let twisted = (acts[b] as u128 * c as u128 % modulus) as usize;
            (a + twisted) % nn + nn * ((b + d) % mm)
        })
    }

    /// `A x| Z_m` on pairs `(a, k)`, index `a + |A| k`, where the generator of
    /// `Z_m` acts by the automorphism `sigma` of `A` (given as an element
    /// permutation with `sigma^m = id`).
    pub(crate) fn semidirect_by_cyclic(
        &self,
        base: &FiniteGroup,
        m: usize,
        sigma: &[usize],
    ) -> Result<FiniteGroup, GroupError> {
        let n = base.order();
        let bad = GroupError::BadParameter {
            what: "automorphism",
            value: m as u64,
        };
        if m == 0 || sigma.len() != n {
            return Err(bad);
        }
        for a in 0..n {
            for b in 0..n {
                if sigma[base.mul(a, b)] != base.mul(sigma[a], sigma[b]) {
                    return Err(bad);
                }
            }
        }
        // powers[k][x] = sigma^k(x)
        let mut powers: Vec<Vec<usize>> = vec![(0..n).collect()];
        for k in 1..=m {
            let prev = &powers[k - 1];
            let next: Vec<usize> = prev.iter().map(|&x| sigma[x]).collect();
            powers.push(next);
        }
        if powers[m].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(bad);
        }
        self.build(n as u128 * m as u128, |x, y| {
            let (a, k) = (x % n, x / n);
            let (b, l) = (y % n, y / n);
            base.mul(a, powers[k][b]) + n * ((k + l) % m)
        })
    }

    /// `A x| Z_2` with the reflection acting by inversion; `A` must be abelian.
    pub fn generalized_dihedral(&self, base: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        if !is_abelian(base) {
            return Err(GroupError::BadParameter {
                what: "generalized dihedral base (non-abelian)",
                value: base.order() as u64,
            });
        }
        let inv: Vec<usize> = base.elements().map(|x| base.inverse(x)).collect();
        let g = self.semidirect_by_cyclic(base, 2, &inv)?;
        Ok(g.with_name(format!("Dih({})", base.display_name())))
    }

    /// The group generated by `gens` under `op`, labelled in breadth-first
    /// discovery order from `identity`.
    pub(crate) fn closure<T: Ord + Clone>(
        &self,
        identity: T,
        gens: &[T],
        op: impl Fn(&T, &T) -> T,
    ) -> Result<FiniteGroup, GroupError> {
        use alloc::collections::BTreeMap;
        let mut index: BTreeMap<T, usize> = BTreeMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        let mut k = 0;
        while k < elems.len() {
            for g in gens {
                let next = op(&elems[k], g);
                if !index.contains_key(&next) {
                    if elems.len() >= self.table_cap {
                        return Err(GroupError::TooLarge {
                            order: elems.len() as u128 + 1,
                            cap: self.table_cap,
                        });
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            k += 1;
        }
        let n = elems.len();
        self.build(n as u128, |a, b| index[&op(&elems[a], &elems[b])])
    }

    /// The alternating group on four points.
    pub fn alternating4(&self) -> Result<FiniteGroup, GroupError> {
        let compose = |p: &[u8; 4], q: &[u8; 4]| {
            let mut r = [0u8; 4];
            for i in 0..4 {
                r[i] = p[q[i] as usize];
            }
            r
        };
        let g = self.closure([0, 1, 2, 3], &[[1, 2, 0, 3], [1, 0, 3, 2]], compose)?;
        Ok(g.with_name("A4"))
    }
}

fn factor_name(g: &FiniteGroup) -> String {
    let name = g.display_name();
    if name.contains(':') {
        format!("({name})")
    } else {
        name
    }
}

pub fn cyclic(n: u64) -> Result<FiniteGroup, GroupError> {
    Constructor::default().cyclic(n)
}

pub fn dihedral(m: u64) -> Result<FiniteGroup, GroupError> {
    Constructor::default().dihedral(m)
}

pub fn dicyclic(m: u64) -> Result<FiniteGroup, GroupError> {
    Constructor::default().dicyclic(m)
}

pub fn elementary_abelian_2(k: u32) -> Result<FiniteGroup, GroupError> {
    Constructor::default().elementary_abelian_2(k)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    Constructor::default().direct_product(g, h)
}

pub fn semidirect_zn_z2(n: u64, u: u64) -> Result<FiniteGroup, GroupError> {
    Constructor::default().semidirect_zn_z2(n, u)
}

pub fn generalized_dihedral(base: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    Constructor::default().generalized_dihedral(base)
}

pub fn alternating4() -> Result<FiniteGroup, GroupError> {
    Constructor::default().alternating4()
}

pub(crate) fn cyclic_by_cyclic(n: u64, m: u64, u: u64) -> Result<FiniteGroup, GroupError> {
    Constructor::default().cyclic_by_cyclic(n, m, u)
}

pub(crate) fn semidirect_by_cyclic(
    base: &FiniteGroup,
    m: usize,
    sigma: &[usize],
) -> Result<FiniteGroup, GroupError> {
    Constructor::default().semidirect_by_cyclic(base, m, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{element_orders, involution_count};

    fn sorted_orders(g: &FiniteGroup) -> Vec<u32> {
        let mut o = element_orders(g);
        o.sort_unstable();
        o
    }

    #[test]
    fn small_families() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(sorted_orders(&dihedral(6).unwrap()), vec![1, 2, 2, 2, 3, 3]);
        assert_eq!(involution_count(&dicyclic(8).unwrap()), 2);
        assert_eq!(
            sorted_orders(&dicyclic(8).unwrap()),
            vec![1, 2, 4, 4, 4, 4, 4, 4]
        );
        assert_eq!(sorted_orders(&dihedral(2).unwrap()), vec![1, 2]);
        assert_eq!(elementary_abelian_2(3).unwrap().order(), 8);
        assert_eq!(alternating4().unwrap().order(), 12);
    }

    #[test]
    fn parameter_errors() {
        assert!(cyclic(0).is_err());
        assert!(dihedral(7).is_err());
        assert!(dihedral(0).is_err());
        assert!(dicyclic(6).is_err());
        assert!(semidirect_zn_z2(12, 3).is_err());
        assert!(semidirect_zn_z2(1, 0).is_err());
        assert!(matches!(cyclic(5000), Err(GroupError::TooLarge { .. })));
        assert!(Constructor::with_cap(8).dihedral(10).is_err());
    }

    #[test]
    fn semidirect_orders() {
        let g = semidirect_zn_z2(12, 5).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.name(), Some("SD(12,5)"));
        let trivial_action = semidirect_zn_z2(5, 1).unwrap();
        assert!(is_abelian(&trivial_action));
        assert!(!is_abelian(&semidirect_zn_z2(5, 4).unwrap()));
    }

    #[test]
    fn product_names() {
        let z2 = cyclic(2).unwrap();
        let d8 = dihedral(8).unwrap();
        assert_eq!(direct_product(&z2, &d8).unwrap().name(), Some("Z2xD8"));
        let gd = generalized_dihedral(
            &direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!(gd.order(), 18);
    }
}
