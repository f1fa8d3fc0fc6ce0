//! Invariants of finite permutation groups built around centralizer chains:
//! c-dimension, subgroup-chain length, radicals, socle, layer, the generalized
//! Fitting subgroup, induced automorphism groups and the λ invariant, plus a
//! harness that checks the related inequalities on a corpus of groups.

pub mod arith;
pub mod caps;
pub mod cdim;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod layer;
pub mod permcore;
pub mod report;
pub mod simplerec;
pub mod steinitz;
pub mod subgrp;

pub use caps::Caps;
pub use error::{Error, Result};
pub use permcore::{GroupHandle, Permutation, SubgroupRef};
