//! Centralizer lattices, c-dimension with witnesses, and subgroup-chain length.

mod bounds;
mod dimension;
mod lattice;
mod length;

pub use bounds::{check_dkr_bound, check_dkr_named, check_finext_bound, check_finext_named};
pub(crate) use dimension::DetachedCdim;
pub use dimension::{cdim, cdim_from_lattice, cdim_lower_bound, lattice_centralizer, verify_witnesses, CdimResult};
pub use lattice::CentralizerLattice;
pub use length::{quotient_chain_length, subgroup_chain_length, subgroup_chain_length_exact};

/// Builds the lattice of all centralizers.
pub fn centralizer_lattice(g: &crate::GroupHandle) -> crate::Result<CentralizerLattice> {
    CentralizerLattice::new(g)
}
