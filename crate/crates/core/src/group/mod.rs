//! Finite groups stored as Cayley tables.
//!
//! Elements are the dense indices `0..n`, with `0` the identity. The table is
//! a flat row-major `n * n` array, so `mul(a, b) = table[a * n + b]`.

mod construct;
mod invariants;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use construct::{
    alternating4, cyclic, dicyclic, dihedral, direct_product, elementary_abelian_2,
    generalized_dihedral, semidirect_zn_z2, Constructor,
};
pub(crate) use construct::{cyclic_by_cyclic, semidirect_by_cyclic};
pub use invariants::{
    center_size, cyclic_subgroups, element_order, element_orders, generated_subgroup, invariants,
    involution_count, is_abelian, is_elementary_abelian_2, is_normal_subgroup, CyclicSubgroupSet,
    GroupInvariants,
};

/// Largest table order accepted by constructors unless overridden.
pub const DEFAULT_TABLE_CAP: usize = 4096;

/// Largest order re-checked by debug builds in trusted construction.
const DEBUG_CHECK_LIMIT: usize = 256;

/// Element index. Tables above `u16::MAX` entries per side are out of reach
/// anyway (quadratic memory).
pub type Elem = u16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: {what} {index} repeats value {value}")]
    NotLatin {
        what: &'static str,
        index: usize,
        value: usize,
    },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("order {order} exceeds table cap {cap}")]
    TooLarge { order: u128, cap: usize },
    #[error("invalid parameter for {what}: {value}")]
    BadParameter { what: &'static str, value: u64 },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("element set is not a subgroup")]
    NotSubgroup,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    name: Option<String>,
}

impl core::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a flat row-major table. See [`verify_axioms`] for the rules.
    pub fn from_flat(order: usize, table: Vec<Elem>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != order * order {
            return Err(GroupError::NotSquare {
                row: table.len() / order,
                len: table.len() % order,
                expected: order,
            });
        }
        if let Some((k, &v)) = table
            .iter()
            .enumerate()
            .find(|(_, &v)| usize::from(v) >= order)
        {
            return Err(GroupError::EntryOutOfRange {
                row: k / order,
                col: k % order,
                value: usize::from(v),
                order,
            });
        }
        check_associative(order, &table)?;
        let e = find_identity(order, &table).ok_or(GroupError::NoIdentity)?;
        check_latin(order, &table)?;
        let table = if e == 0 {
            table
        } else {
            swap_labels(order, &table, 0, e)
        };
        Ok(Self::from_trusted(order, table))
    }

    /// Builds from a table already known to be a group with identity 0.
    /// Debug builds still run the Latin-square and associativity checks on
    /// tables up to [`DEBUG_CHECK_LIMIT`].
    pub(crate) fn from_trusted(order: usize, table: Vec<Elem>) -> Self {
        if cfg!(debug_assertions) && order <= DEBUG_CHECK_LIMIT {
            assert!(check_latin(order, &table).is_ok());
            assert!(check_associative(order, &table).is_ok());
            assert!((0..order)
                .all(|x| usize::from(table[x]) == x && usize::from(table[x * order]) == x));
        }
        let mut inverses = vec![0; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&v| v == 0)
                .expect("Latin row has identity");
            inverses[a] = b as Elem;
        }
        FiniteGroup {
            order,
            table,
            inverses,
            name: None,
        }
    }

    pub fn trivial() -> Self {
        Self::from_trusted(1, vec![0]).with_name("Z1")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or `G<order>` if the group is unnamed.
    pub fn display_name(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => alloc::format!("G{}", self.order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        usize::from(self.table[a * self.order + b])
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        usize::from(self.inverses[a])
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn row(&self, a: usize) -> &[Elem] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&v| usize::from(v)).collect())
            .collect()
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }
}

/// Validates an `n x n` table given as rows.
///
/// Checks, in order: shape and entry range, associativity, existence of a
/// two-sided identity, and the Latin-square property. A non-zero identity is
/// relabelled to index 0 by swapping it with element 0.
pub fn verify_axioms(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let n = rows.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    if n > usize::from(Elem::MAX) {
        return Err(GroupError::TooLarge {
            order: n as u128,
            cap: usize::from(Elem::MAX),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotSquare {
                row: r,
                len: row.len(),
                expected: n,
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupError::EntryOutOfRange {
                    row: r,
                    col: c,
                    value: v,
                    order: n,
                });
            }
            flat.push(v as Elem);
        }
    }
    FiniteGroup::from_flat(n, flat)
}

fn find_identity(n: usize, t: &[Elem]) -> Option<usize> {
    (0..n)
        .find(|&e| (0..n).all(|x| usize::from(t[e * n + x]) == x && usize::from(t[x * n + e]) == x))
}

fn check_latin(n: usize, t: &[Elem]) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = usize::from(t[r * n + c]);
            if seen[v] == r {
                return Err(GroupError::NotLatin {
                    what: "row",
                    index: r,
                    value: v,
                });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = usize::from(t[r * n + c]);
            if seen[v] == c {
                return Err(GroupError::NotLatin {
                    what: "column",
                    index: c,
                    value: v,
                });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

/// Elements whose closure under the binary operation is the whole carrier,
/// chosen greedily by lowest index.
fn magma_generators(n: usize, t: &[Elem]) -> Vec<usize> {
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside[x] = true;
        members.push(x);
        // Every product of two members is eventually examined: a new member
        // at position k is multiplied against all members before it (both
        // sides) and itself.
        let mut k = members.len() - 1;
        while k < members.len() {
            let a = members[k];
            for j in 0..=k {
                let b = members[j];
                for v in [t[a * n + b], t[b * n + a]] {
                    let v = usize::from(v);
                    if !inside[v] {
                        inside[v] = true;
                        members.push(v);
                    }
                }
            }
            k += 1;
        }
    }
    gens
}

/// Light's associativity test: it suffices that `(x g) y = x (g y)` for all
/// `x, y` and every `g` in a generating set of the magma.
fn check_associative(n: usize, t: &[Elem]) -> Result<(), GroupError> {
    let at = |a: usize, b: usize| usize::from(t[a * n + b]);
    for g in magma_generators(n, t) {
        for x in 0..n {
            let xg = at(x, g);
            for y in 0..n {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(GroupError::NotAssociative { a: x, b: g, c: y });
                }
            }
        }
    }
    Ok(())
}

fn swap_labels(n: usize, t: &[Elem], p: usize, q: usize) -> Vec<Elem> {
    let sigma = |x: usize| {
        if x == p {
            q
        } else if x == q {
            p
        } else {
            x
        }
    };
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[sigma(a) * n + sigma(b)] = sigma(usize::from(t[a * n + b])) as Elem;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_associative(g: &[Vec<usize>]) -> bool {
        let n = g.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| g[g[a][b]][c] == g[a][g[b][c]])))
    }

    #[test]
    fn trivial_and_z2() {
        let g = verify_axioms(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        let z2 = verify_axioms(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.mul(1, 1), 0);
    }

    #[test]
    fn non_associative_latin_square() {
        // Every 3x3 Latin square with a two-sided identity is Z3, so this one
        // (no identity) must fail on associativity first.
        let sq = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(!brute_associative(&sq));
        assert!(matches!(
            verify_axioms(&sq),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn distinct_failures() {
        assert_eq!(verify_axioms(&[]), Err(GroupError::Empty));
        assert!(matches!(
            verify_axioms(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            verify_axioms(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { value: 2, .. })
        ));
        // Constant semigroup: associative, no identity.
        assert_eq!(
            verify_axioms(&[vec![0, 0], vec![0, 0]]),
            Err(GroupError::NoIdentity)
        );
        // Monoid {1, 0} under multiplication: identity but 1*1 = 1 repeats.
        assert!(matches!(
            verify_axioms(&[vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotLatin { .. })
        ));
    }

    #[test]
    fn identity_is_relabelled() {
        // Z3 with identity stored at index 2.
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = verify_axioms(&rows).unwrap();
        for x in 0..3 {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
        }
    }

    #[test]
    fn light_test_agrees_with_brute_force_on_all_order3_magmas_with_latin_rows() {
        // All 3^9 binary operations on three points.
        for code in 0..3usize.pow(9) {
            let mut c = code;
            let mut rows = vec![vec![0; 3]; 3];
            for row in rows.iter_mut() {
                for cell in row.iter_mut() {
                    *cell = c % 3;
                    c /= 3;
                }
            }
            let flat: Vec<Elem> = rows.iter().flatten().map(|&v| v as Elem).collect();
            assert_eq!(
                check_associative(3, &flat).is_ok(),
                brute_associative(&rows),
                "{rows:?}"
            );
        }
    }

    #[test]
    fn inverses_and_pow() {
        let z6 = cyclic(6).unwrap();
        for x in z6.elements() {
            assert_eq!(z6.mul(x, z6.inverse(x)), 0);
            assert_eq!(z6.pow(x, 6), 0);
        }
        assert_eq!(z6.pow(1, 4), 4);
    }
}
