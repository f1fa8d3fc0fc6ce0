//! Subgroup algorithms: centralizers, normalizers, closures, series,
//! Sylow subgroups, cores, radicals and the socle.

mod centralizer;
mod minimal;
mod radical;
mod series;
mod sylow;

pub use centralizer::{
    center, centralizer, centralizer_by_backtrack, centralizer_by_filter, normalizer, normalizer_by_backtrack,
    normalizer_by_filter,
};
pub use minimal::{is_simple, minimal_normal_subgroups, socle};
pub use radical::{fitting, p_soluble_radical, soluble_radical, upper_fitting, upper_fitting_series};
pub use series::{
    commutator_subgroup, derived_length, derived_series, derived_subgroup, intersection, is_nilpotent, is_perfect,
    is_soluble, is_subnormal, join, lower_central_series, normal_closure, perfect_core, SeriesKind, SeriesRecord,
};
pub use sylow::{p_core, p_prime_core, pi_core, sylow};
