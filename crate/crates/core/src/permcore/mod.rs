//! Permutations, permutation groups and their basic constructions.

mod chain;
mod classes;
mod group;
mod iso;
mod perm;
mod quotient;
mod text;

pub use chain::StabChain;
pub use classes::{conjugacy_class_reps, conjugacy_classes, direct_product, ConjugacyClass};
pub use group::{group_from_generators, GroupHandle, SubgroupRef};
pub use iso::{is_isomorphic_small, ISOMORPHISM_CAP};
pub(crate) use perm::gcd;
pub use perm::Permutation;
pub use quotient::{quotient, Homomorphism};
pub use text::{format_group, load_group, parse_cycles, parse_group, parse_group_with_caps};

use crate::error::Result;

/// `|G|`.
pub fn order(g: &GroupHandle) -> u128 {
    g.order()
}

/// Every element of `G` exactly once.
pub fn elements(g: &GroupHandle) -> Result<Vec<Permutation>> {
    Ok(g.element_list()?.to_vec())
}
