//! Built-in catalog of named groups of order at most 16.
//!
//! The catalog contains one entry per isomorphism class of order <= 16, so
//! identification of any such group is total.

use alloc::string::String;
use alloc::vec::Vec;

use crate::group::{cyclic_by_cyclic, semidirect_by_cyclic, Constructor, FiniteGroup, GroupError};
use crate::iso::{fingerprint, isomorphism_unfiltered, IsoFingerprint};

pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<&'static str>,
    pub group: FiniteGroup,
    pub fingerprint: IsoFingerprint,
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn entry(name: &str, aliases: &[&'static str], g: FiniteGroup) -> CatalogEntry {
    let fingerprint = fingerprint(&g);
    CatalogEntry {
        name: String::from(name),
        aliases: aliases.to_vec(),
        group: g.with_name(name),
        fingerprint,
    }
}

/// `(Z2 x Z2) x| Z4`, the generator of `Z4` swapping the two `Z2` factors.
pub fn z2z2_by_z4() -> Result<FiniteGroup, GroupError> {
    let v4 = Constructor::default().elementary_abelian_2(2)?;
    // Index bits: 1 = first factor, 2 = second factor.
    semidirect_by_cyclic(&v4, 4, &[0, 2, 1, 3]).map(|g| g.with_name("(Z2xZ2):Z4"))
}

/// `Q8 x| Z2` with the involution acting by conjugation with an element of
/// order four (the Pauli group).
pub fn q8_by_z2() -> Result<FiniteGroup, GroupError> {
    let q8 = Constructor::default().dicyclic(8)?;
    let a = 1;
    let ai = q8.inverse(a);
    let sigma: Vec<usize> = q8.elements().map(|x| q8.mul(q8.mul(a, x), ai)).collect();
    semidirect_by_cyclic(&q8, 2, &sigma).map(|g| g.with_name("Q8:Z2"))
}

impl Catalog {
    pub fn standard() -> Self {
        let k = Constructor::default();
        let z = |n: u64| k.cyclic(n).expect("catalog order");
        let d = |m: u64| k.dihedral(m).expect("catalog order");
        let q = |m: u64| k.dicyclic(m).expect("catalog order");
        let x = |a: &FiniteGroup, b: &FiniteGroup| k.direct_product(a, b).expect("catalog order");
        let e2 = |r: u32| k.elementary_abelian_2(r).expect("catalog order");
        let mut entries = Vec::new();
        for n in 1..=16 {
            entries.push(entry(&alloc::format!("Z{n}"), &[], z(n)));
        }
        entries.push(entry("Z2^2", &["Z2xZ2", "D4", "V4"], e2(2)));
        entries.push(entry("D6", &["S3"], d(6)));
        entries.push(entry("Z4xZ2", &["Z2xZ4"], x(&z(4), &z(2))));
        entries.push(entry("Z2^3", &["Z2xZ2xZ2"], e2(3)));
        entries.push(entry("D8", &[], d(8)));
        entries.push(entry("Q8", &[], q(8)));
        entries.push(entry("Z3xZ3", &[], x(&z(3), &z(3))));
        entries.push(entry("D10", &[], d(10)));
        entries.push(entry("Z6xZ2", &["Z2xZ6"], x(&z(6), &z(2))));
        entries.push(entry("D12", &["Z2xS3"], d(12)));
        entries.push(entry("A4", &[], k.alternating4().expect("A4")));
        entries.push(entry("Q12", &["Dic12", "Z3:Z4"], q(12)));
        entries.push(entry("D14", &[], d(14)));
        entries.push(entry("Z8xZ2", &["Z2xZ8"], x(&z(8), &z(2))));
        entries.push(entry("Z4xZ4", &[], x(&z(4), &z(4))));
        entries.push(entry(
            "Z4xZ2^2",
            &["Z4xZ2xZ2", "Z2xZ2xZ4"],
            x(&z(4), &e2(2)),
        ));
        entries.push(entry("Z2^4", &[], e2(4)));
        entries.push(entry("D16", &[], d(16)));
        entries.push(entry("Q16", &[], q(16)));
        entries.push(entry(
            "SD16",
            &["SD(8,3)"],
            cyclic_by_cyclic(8, 2, 3).expect("SD16"),
        ));
        entries.push(entry(
            "M16",
            &["SD(8,5)", "Z8:Z2"],
            cyclic_by_cyclic(8, 2, 5).expect("M16"),
        ));
        entries.push(entry("Z2xD8", &["D8xZ2"], x(&z(2), &d(8))));
        entries.push(entry("Z2xQ8", &["Q8xZ2"], x(&z(2), &q(8))));
        entries.push(entry("(Z2xZ2):Z4", &[], z2z2_by_z4().expect("order 16")));
        entries.push(entry("Q8:Z2", &["Pauli"], q8_by_z2().expect("order 16")));
        entries.push(entry(
            "Z4:Z4",
            &[],
            cyclic_by_cyclic(4, 4, 3).expect("order 16"),
        ));
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry by canonical name or alias.
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name || e.aliases.contains(&name))
    }

    /// Named group (cloned) by canonical name or alias.
    pub fn group(&self, name: &str) -> Option<FiniteGroup> {
        self.get(name).map(|e| e.group.clone())
    }

    /// Name of the catalog member isomorphic to `g`, if any.
    pub fn identify(&self, g: &FiniteGroup) -> Option<&str> {
        if g.order() > 16 {
            return None;
        }
        let fp = fingerprint(g);
        self.entries
            .iter()
            .filter(|e| e.fingerprint == fp)
            .find(|e| isomorphism_unfiltered(g, &e.group).is_some())
            .map(|e| e.name.as_str())
    }
}

pub fn identify<'a>(g: &FiniteGroup, catalog: &'a Catalog) -> Option<&'a str> {
    catalog.identify(g)
}

/// Name of a cyclic, dihedral, dicyclic or elementary abelian group of the
/// same order isomorphic to `g`. Used beyond the catalog range.
pub fn identify_in_families(g: &FiniteGroup, k: &Constructor) -> Option<String> {
    let n = g.order() as u64;
    let mut candidates = Vec::new();
    candidates.push(k.cyclic(n));
    if n.is_multiple_of(2) && n >= 6 {
        candidates.push(k.dihedral(n));
    }
    if n.is_multiple_of(4) && n >= 8 {
        candidates.push(k.dicyclic(n));
    }
    if n.is_power_of_two() && n >= 4 {
        candidates.push(k.elementary_abelian_2(n.trailing_zeros()));
    }
    candidates
        .into_iter()
        .filter_map(Result::ok)
        .find(|h| crate::iso::are_isomorphic(g, h).is_some())
        .map(|h| h.display_name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, invariants};

    #[test]
    fn sizes_per_order() {
        let cat = Catalog::standard();
        let mut counts = [0usize; 17];
        for e in cat.entries() {
            counts[e.group.order()] += 1;
        }
        assert_eq!(
            &counts[1..],
            &[1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]
        );
    }

    #[test]
    fn identify_examples() {
        let cat = Catalog::standard();
        assert_eq!(cat.identify(&dihedral(6).unwrap()), Some("D6"));
        assert_eq!(cat.get("S3").unwrap().name, "D6");
        let p = direct_product(&cyclic(3).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert_eq!(cat.identify(&p), Some("Z12"));
        let a4 = cat.group("A4").unwrap();
        let inv = invariants(&a4);
        assert_eq!((inv.i, inv.c), (4, 8));
        assert_eq!(cat.identify(&cyclic(17).unwrap()), None);
        let k = Constructor::default();
        let sd = crate::group::semidirect_zn_z2(9, 8).unwrap();
        assert_eq!(identify_in_families(&sd, &k).as_deref(), Some("D18"));
        let sd = crate::group::semidirect_zn_z2(12, 5).unwrap();
        assert_eq!(identify_in_families(&sd, &k), None);
    }

    #[test]
    fn catalog_is_injective() {
        let cat = Catalog::standard();
        for e in cat.entries() {
            assert_eq!(cat.identify(&e.group), Some(e.name.as_str()), "{}", e.name);
        }
    }

    #[test]
    fn deficit_four_members_of_order_16() {
        let cat = Catalog::standard();
        for name in ["Z4xZ2^2", "(Z2xZ2):Z4", "Q8:Z2", "D16"] {
            let inv = invariants(&cat.group(name).unwrap());
            assert_eq!(inv.c + 4, 16, "{name}");
        }
    }
}
