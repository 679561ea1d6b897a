//! Exact computation of involution counts `i(G)`, cyclic-subgroup counts
//! `c(G)` and the ratio `beta(G) = i(G) / c(G)` for finite groups given by
//! Cayley tables, together with:
//!
//! * [`enumerate`]: every group of a small order up to isomorphism,
//! * [`classify`]: exhaustive checks of the classification of groups with
//!   `i(G) = c(G) - r` for `r <= 2` and related statements,
//! * [`density`]: prime selections whose dihedral products realise a target
//!   `beta` within a tolerance.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod density;
pub mod enumerate;
pub mod group;
pub mod iso;

pub use arith::ExactRational;
pub use catalog::Catalog;
pub use group::{FiniteGroup, GroupError, GroupInvariants};
