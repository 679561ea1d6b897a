//! Exhaustive verification of classification statements about `i(G)`,
//! `c(G)` and `beta(G)` over enumerated groups and constructed families.

mod lemmas;
mod theorems;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::enumerate::{enumerate_groups, EnumerateError, EnumerationConfig, EnumerationResult};
use crate::group::{invariants, FiniteGroup, GroupError, GroupInvariants};

pub use lemmas::{
    check_lemma21, check_lemma31a, check_lemma31b, check_lemma41, check_lemma42, lemma41_eligible,
    run_lemma_sweeps, sweep_lemma31a, sweep_lemma31b, sweep_lemma41, sweep_lemma42,
};
pub use theorems::{
    c_deficit_list, theorem1_families, verify_c_order_deficit, verify_case_f,
    verify_involution_threshold, verify_semidirect_dichotomy, verify_theorem1,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    T11R0,
    T11R1,
    T11R2,
    T11CaseF,
    T22,
    T23R1,
    T23R2,
    T23R4,
    T24,
    L21,
    L31a,
    L31b,
    L41,
    L42,
}

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::T11R0 => "T1.1-r0",
            ClaimId::T11R1 => "T1.1-r1",
            ClaimId::T11R2 => "T1.1-r2",
            ClaimId::T11CaseF => "T1.1-case-f",
            ClaimId::T22 => "T2.2",
            ClaimId::T23R1 => "T2.3-r1",
            ClaimId::T23R2 => "T2.3-r2",
            ClaimId::T23R4 => "T2.3-r4",
            ClaimId::T24 => "T2.4",
            ClaimId::L21 => "L2.1",
            ClaimId::L31a => "L3.1a",
            ClaimId::L31b => "L3.1b",
            ClaimId::L41 => "L4.1",
            ClaimId::L42 => "L4.2",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Counterexample,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub name: String,
    pub invariants: GroupInvariants,
}

impl Witness {
    pub fn of(g: &FiniteGroup) -> Self {
        Witness {
            name: g.display_name(),
            invariants: invariants(g),
        }
    }

    pub fn named(name: impl Into<String>, g: &FiniteGroup) -> Self {
        Witness {
            name: name.into(),
            invariants: invariants(g),
        }
    }
}

/// A group violating a claim. The full table is kept so the failure can be
/// re-checked independently.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub group: FiniteGroup,
    pub explanation: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub scope: String,
    pub status: Status,
    /// False when part of the claim was checked member-wise only.
    pub exhaustive: bool,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim: ClaimId, scope: impl Into<String>) -> Self {
        VerificationReport {
            claim,
            scope: scope.into(),
            status: Status::Verified,
            exhaustive: true,
            witnesses: Vec::new(),
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Records a counterexample; only the first one is kept.
    pub fn fail(&mut self, group: &FiniteGroup, explanation: impl Into<String>) {
        self.status = Status::Counterexample;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                group: group.clone(),
                explanation: explanation.into(),
            });
        }
    }

    pub fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub fn witness_names(&self) -> Vec<&str> {
        self.witnesses.iter().map(|w| w.name.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Domain(String),
}

/// All groups of every order `1..=max_order`, one enumeration per order.
#[derive(Debug, Clone)]
pub struct Census {
    max_order: usize,
    results: Vec<EnumerationResult>,
}

impl Census {
    pub fn enumerate(max_order: usize, config: &EnumerationConfig) -> Result<Self, ClassifyError> {
        let results = (1..=max_order)
            .map(|n| enumerate_groups(n, config))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Census { max_order, results })
    }

    /// Assembles a census from per-order results computed elsewhere; they
    /// must cover `1..=max_order` in order.
    pub fn from_results(results: Vec<EnumerationResult>) -> Result<Self, ClassifyError> {
        for (k, r) in results.iter().enumerate() {
            if r.order != k + 1 {
                return Err(ClassifyError::Domain(alloc::format!(
                    "census slot {} holds order {}",
                    k + 1,
                    r.order
                )));
            }
        }
        Ok(Census {
            max_order: results.len(),
            results,
        })
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn results(&self) -> &[EnumerationResult] {
        &self.results
    }

    pub fn of_order(&self, n: usize) -> &[FiniteGroup] {
        if n == 0 || n > self.max_order {
            return &[];
        }
        &self.results[n - 1].groups
    }

    pub fn groups(&self) -> impl Iterator<Item = &FiniteGroup> {
        self.results.iter().flat_map(|r| r.groups.iter())
    }

    fn scope(&self) -> String {
        alloc::format!("order<={}", self.max_order)
    }
}

/// `r(G) = c(G) - i(G)`.
pub fn r_value(g: &FiniteGroup) -> usize {
    invariants(g).r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};
    use alloc::string::ToString;

    #[test]
    fn r_values() {
        assert_eq!(r_value(&cyclic(4).unwrap()), 1);
        assert_eq!(r_value(&dihedral(16).unwrap()), 2);
        assert_eq!(r_value(&cyclic(12).unwrap()), 4);
        assert_eq!(r_value(&FiniteGroup::trivial()), 0);
    }

    #[test]
    fn census_slots() {
        let c = Census::enumerate(4, &EnumerationConfig::default()).unwrap();
        assert_eq!(c.groups().count(), 5);
        assert_eq!(c.of_order(4).len(), 2);
        assert!(c.of_order(5).is_empty());
        let mut rs = c.results().to_vec();
        rs.swap(0, 1);
        assert!(Census::from_results(rs).is_err());
    }

    #[test]
    fn claim_ids_render() {
        assert_eq!(ClaimId::T11R2.to_string(), "T1.1-r2");
        assert_eq!(ClaimId::L31a.to_string(), "L3.1a");
    }
}
