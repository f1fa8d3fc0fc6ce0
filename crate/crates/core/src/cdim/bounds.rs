use super::dimension::cdim;
use super::length::quotient_chain_length;
use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, SubgroupRef};
use crate::report::{order_value, CheckReport};

/// `cdim(G) <= (l + 1)^2 (k + 1)` with `k = cdim(N)` and `l = l(G/N)`.
///
/// The verdict uses strict-inclusion counts for both c-dimensions; the same
/// inequality with subgroup counts is recorded alongside.
pub fn check_finext_bound(g: &GroupHandle, n: &SubgroupRef) -> Result<CheckReport> {
    check_finext_named(g, n, "?")
}

pub fn check_finext_named(g: &GroupHandle, n: &SubgroupRef, name: &str) -> Result<CheckReport> {
    let n = n.reparent(g)?;
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let kr = cdim(n.group())?;
    let cr = cdim(g)?;
    let l = quotient_chain_length(g, &n)? as i64;
    let (k, c) = (kr.value_steps as i64, cr.value_steps as i64);
    let bound = (l + 1).pow(2) * (k + 1);
    let (k_terms, c_terms) = (kr.value_terms as i64, cr.value_terms as i64);
    let terms_bound = (l + 1).pow(2) * (k_terms + 1);
    Ok(CheckReport::new("finext", name)
        .input("order", order_value(g.order()))
        .input("normal_order", order_value(n.order()))
        .computed("k_steps", k)
        .computed("l", l)
        .computed("cdim_steps", c)
        .computed("bound", bound)
        .computed("k_terms", k_terms)
        .computed("cdim_terms", c_terms)
        .computed("terms_bound", terms_bound)
        .computed("terms_holds", c_terms <= terms_bound)
        .verdict(c <= bound)
        .margin(bound, c))
}

/// `cdim(G) <= k (k (d + 2) + 2)` with `k = |G : H|` and `d = cdim(H)`.
pub fn check_dkr_bound(g: &GroupHandle, h: &SubgroupRef) -> Result<CheckReport> {
    check_dkr_named(g, h, "?")
}

pub fn check_dkr_named(g: &GroupHandle, h: &SubgroupRef, name: &str) -> Result<CheckReport> {
    let h = h.reparent(g)?;
    let k = (g.order() / h.order()) as i64;
    let d = cdim(h.group())?.value_steps as i64;
    let c = cdim(g)?.value_steps as i64;
    let bound = k * (k * (d + 2) + 2);
    Ok(CheckReport::new("dkr", name)
        .input("order", order_value(g.order()))
        .input("subgroup_order", order_value(h.order()))
        .computed("index", k)
        .computed("d_steps", d)
        .computed("cdim_steps", c)
        .computed("bound", bound)
        .verdict(c <= bound)
        .margin(bound, c))
}
