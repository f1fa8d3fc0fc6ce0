use std::collections::HashMap;

use crate::arith::{is_prime, prime_divisors};
use crate::error::Result;
use crate::permcore::{conjugacy_classes, quotient, GroupHandle, Permutation, SubgroupRef};
use crate::subgrp::{derived_subgroup, is_perfect, minimal_normal_subgroups};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Split off a minimal normal subgroup and recurse on it and on the quotient.
    MinimalNormalFirst,
    /// Repeatedly pass to a maximal normal subgroup.
    MaximalNormalFirst,
}

/// `G = G_0 > G_1 > ... > G_r = 1`, each normal in the previous with simple quotient.
pub fn composition_series(g: &GroupHandle) -> Result<Vec<SubgroupRef>> {
    composition_series_by(g, Strategy::MinimalNormalFirst)
}

pub fn composition_series_by(g: &GroupHandle, strategy: Strategy) -> Result<Vec<SubgroupRef>> {
    match strategy {
        Strategy::MinimalNormalFirst => series_min(g),
        Strategy::MaximalNormalFirst => series_max(g),
    }
}

fn series_min(g: &GroupHandle) -> Result<Vec<SubgroupRef>> {
    if g.is_trivial() {
        return Ok(vec![g.as_subgroup()]);
    }
    let mins = minimal_normal_subgroups(g)?;
    let n = mins.iter().min_by_key(|m| m.order()).expect("nontrivial group has a minimal normal subgroup");
    if n.is_whole() {
        return Ok(vec![g.as_subgroup(), g.trivial_subgroup()]);
    }
    let (q, hom) = quotient(g, n)?;
    let mut series: Vec<SubgroupRef> = series_min(&q)?.iter().map(|t| hom.preimage(t)).collect();
    for t in series_min(n.group())?.into_iter().skip(1) {
        series.push(t.reparent(g)?);
    }
    Ok(series)
}

fn series_max(g: &GroupHandle) -> Result<Vec<SubgroupRef>> {
    let mut series = vec![g.as_subgroup()];
    let mut current = g.clone();
    while !current.is_trivial() {
        let m = maximal_normal(&current)?;
        current = m.group().clone();
        series.push(m.reparent(g)?);
    }
    Ok(series)
}

/// A normal subgroup with simple quotient.
pub fn maximal_normal(g: &GroupHandle) -> Result<SubgroupRef> {
    if g.is_trivial() {
        return Ok(g.as_subgroup());
    }
    if !is_perfect(g) {
        let d = derived_subgroup(g);
        let p = prime_divisors(g.order() / d.order())[0];
        let mut gens: Vec<Permutation> = d.generators().to_vec();
        gens.extend(g.generators().iter().map(|x| x.pow(p as i64)));
        let mut span = g.subgroup(gens)?;
        let mut basis = Vec::new();
        for x in g.generators() {
            if !span.contains(x) {
                basis.push(x.clone());
                let mut gens = span.generators().to_vec();
                gens.push(x.clone());
                span = g.subgroup(gens)?;
            }
        }
        let mut gens: Vec<Permutation> = d.generators().to_vec();
        gens.extend(g.generators().iter().map(|x| x.pow(p as i64)));
        gens.extend(basis.into_iter().skip(1));
        return g.subgroup(gens);
    }
    let mins = minimal_normal_subgroups(g)?;
    let n = &mins[0];
    if n.is_whole() {
        return Ok(g.trivial_subgroup());
    }
    let (q, hom) = quotient(g, n)?;
    Ok(hom.preimage(&maximal_normal(&q)?))
}

/// One composition factor, with a faithful permutation representation.
#[derive(Clone, Debug)]
pub struct CompositionFactor {
    pub order: u128,
    pub group: GroupHandle,
}

impl CompositionFactor {
    pub fn is_abelian(&self) -> bool {
        self.order <= u64::MAX as u128 && is_prime(self.order as u64)
    }
}

/// Factors of the series, top first.
pub fn composition_factors(g: &GroupHandle) -> Result<Vec<CompositionFactor>> {
    factors_of_series(&composition_series(g)?)
}

pub fn factors_of_series(series: &[SubgroupRef]) -> Result<Vec<CompositionFactor>> {
    let mut out = Vec::new();
    for pair in series.windows(2) {
        let (upper, lower) = (pair[0].group(), &pair[1]);
        let order = upper.order() / lower.order();
        let group = if lower.is_trivial() {
            upper.clone()
        } else {
            let inner = lower.reparent(upper)?;
            quotient(upper, &inner)?.0
        };
        let group = if group.is_abelian() { group } else { small_faithful_action(&group)? };
        out.push(CompositionFactor { order, group });
    }
    Ok(out)
}

/// For a nonabelian simple group, its conjugation action on a smallest
/// nontrivial class; any nontrivial action of a simple group is faithful.
pub fn small_faithful_action(s: &GroupHandle) -> Result<GroupHandle> {
    let elements = s.element_list()?;
    let class = conjugacy_classes(s)?
        .into_iter()
        .filter(|c| c.size() > 1)
        .min_by_key(|c| (c.size(), c.representative))
        .expect("nonabelian group has a nontrivial class");
    if class.size() >= s.degree() {
        return Ok(s.clone());
    }
    let members: Vec<&Permutation> = class.members.iter().map(|(i, _)| &elements[*i]).collect();
    let position: HashMap<&Permutation, usize> = members.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let gens = s
        .generators()
        .iter()
        .map(|x| {
            let images: Vec<usize> = members.iter().map(|m| position[&m.conjugate_by(x)]).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let image = GroupHandle::with_caps(members.len(), gens, s.caps())?;
    debug_assert_eq!(image.order(), s.order());
    Ok(image)
}
