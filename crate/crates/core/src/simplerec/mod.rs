//! Composition series, recognition of small simple groups and the λ invariant.

mod composition;
mod table;

pub use composition::{
    composition_factors, composition_series, composition_series_by, factors_of_series, maximal_normal,
    small_faithful_action, CompositionFactor, Strategy,
};
pub use table::{Disambiguator, RecognitionTable, SimpleFactorId, SimpleKind};

use crate::arith::is_prime;
use crate::cdim::cdim;
use crate::error::{Error, Result};
use crate::permcore::GroupHandle;
use crate::report::{order_value, CheckReport};
use crate::subgrp::is_simple;

/// Identifies a simple group with the built-in table.
pub fn identify_simple(g: &GroupHandle) -> Result<SimpleFactorId> {
    identify_simple_with(g, RecognitionTable::builtin())
}

pub fn identify_simple_with(g: &GroupHandle, table: &RecognitionTable) -> Result<SimpleFactorId> {
    let order = g.order();
    if !is_simple(g)? {
        return Err(Error::NotSimple(order));
    }
    if g.is_abelian() {
        debug_assert!(is_prime(order as u64));
        return Ok(SimpleFactorId { kind: SimpleKind::Cyclic(order as u64), order, lambda: 0 });
    }
    recognize_order(g, order, table)
}

/// Table lookup for a group already known to be nonabelian simple.
fn recognize_order(g: &GroupHandle, order: u128, table: &RecognitionTable) -> Result<SimpleFactorId> {
    match table.candidates(order) {
        [] => Err(Error::UnrecognizedOrder(order)),
        [only] => Ok(only.clone()),
        candidates => {
            let rule = table.disambiguators.get(&order).ok_or(Error::UnrecognizedOrder(order))?;
            let present = g.element_list()?.iter().any(|x| x.order() == rule.element_order);
            candidates
                .iter()
                .find(|c| (c.kind == rule.when_present) == present)
                .cloned()
                .ok_or(Error::UnrecognizedOrder(order))
        }
    }
}

/// Identified nonabelian composition factors, top first.
pub fn nonabelian_factors(g: &GroupHandle, table: &RecognitionTable) -> Result<Vec<SimpleFactorId>> {
    composition_factors(g)?
        .iter()
        .filter(|f| !f.is_abelian())
        .map(|f| recognize_order(&f.group, f.order, table))
        .collect()
}

/// Sum of λ over the nonabelian composition factors.
pub fn lambda_invariant(g: &GroupHandle) -> Result<u32> {
    lambda_with(g, RecognitionTable::builtin())
}

pub fn lambda_with(g: &GroupHandle, table: &RecognitionTable) -> Result<u32> {
    Ok(nonabelian_factors(g, table)?.iter().map(|f| f.lambda).sum())
}

/// Number of nonabelian composition factors against `5 * cdim_steps(G)`.
///
/// Above the enumeration cap the c-dimension is replaced by the length of a
/// greedy centralizer chain, which can only make the bound harder to meet.
pub fn check_factor_count(g: &GroupHandle) -> Result<CheckReport> {
    check_factor_count_with(g, RecognitionTable::builtin(), "?")
}

pub fn check_factor_count_with(g: &GroupHandle, table: &RecognitionTable, name: &str) -> Result<CheckReport> {
    let factors = nonabelian_factors(g, table)?;
    let count = factors.len() as i64;
    let lambda: u32 = factors.iter().map(|f| f.lambda).sum();
    let k = cdim(g)?.value_steps as i64;
    let report = CheckReport::new("factor_count", name)
        .input("order", order_value(g.order()))
        .computed("nonabelian_factors", count)
        .computed("cdim_steps", k)
        .computed("bound", 5 * k)
        .computed("lambda", lambda);
    let report = if k > 0 { report.computed("lambda_over_cdim", lambda as f64 / k as f64) } else { report };
    if k == 0 {
        let report = report.computed("note", "cdim_steps is 0");
        return Ok(if count == 0 { report.skipped("vacuous: abelian group") } else { report.verdict(false) });
    }
    Ok(report.margin(5 * k, count).verdict(count < 5 * k))
}
