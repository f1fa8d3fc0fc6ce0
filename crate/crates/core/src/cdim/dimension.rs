use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lattice::{mask_of_set, CentralizerLattice};
use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation, SubgroupRef};
use crate::subgrp::centralizer;

/// A longest strict chain of centralizers with the elements that realize it.
#[derive(Clone, Debug)]
pub struct CdimResult {
    /// Number of subgroups in the chain.
    pub value_terms: usize,
    /// Number of strict inclusions in the chain.
    pub value_steps: usize,
    /// `x_1, ..., x_m` with `chain[i] = C_G(x_1, ..., x_i)`.
    pub witnesses: Vec<Permutation>,
    /// `h_i` in `chain[i]` but not in `chain[i + 1]`.
    pub separators: Vec<Permutation>,
    pub chain: Vec<SubgroupRef>,
}

/// A `CdimResult` without references back to its group, kept on the handle.
#[derive(Clone, Debug)]
pub(crate) struct DetachedCdim {
    witnesses: Vec<Permutation>,
    separators: Vec<Permutation>,
    chain: Vec<Vec<Permutation>>,
}

/// c-dimension through the full centralizer lattice; the result is cached
/// on the handle.
pub fn cdim(g: &GroupHandle) -> Result<CdimResult> {
    if let Some(d) = g.cdim_slot().get() {
        let chain: Vec<SubgroupRef> =
            d.chain.iter().map(|gens| SubgroupRef::from_trusted(g, g.sibling(gens.clone()))).collect();
        return Ok(CdimResult {
            value_terms: chain.len(),
            value_steps: chain.len() - 1,
            witnesses: d.witnesses.clone(),
            separators: d.separators.clone(),
            chain,
        });
    }
    let lattice = CentralizerLattice::new(g)?;
    let r = cdim_from_lattice(&lattice);
    let _ = g.cdim_slot().set(DetachedCdim {
        witnesses: r.witnesses.clone(),
        separators: r.separators.clone(),
        chain: r.chain.iter().map(|h| h.generators().to_vec()).collect(),
    });
    Ok(r)
}

pub fn cdim_from_lattice(lattice: &CentralizerLattice) -> CdimResult {
    let path = lattice.longest_chain();
    let elements = lattice.elements();
    let mut witnesses = Vec::new();
    let mut separators = Vec::new();
    for step in path.windows(2) {
        let (upper, lower) = (step[0], step[1]);
        let x = lattice
            .defining_set(lower)
            .iter()
            .copied()
            .filter(|&x| {
                let mut m = lattice.mask(upper).clone();
                m.intersect_with(lattice.mask(lattice.element_centralizer(x)));
                &m == lattice.mask(lower)
            })
            .min()
            .expect("a cover step is cut out by one defining element");
        witnesses.push(elements[x].clone());
        let mut diff = lattice.mask(upper).clone();
        diff.difference_with(lattice.mask(lower));
        let h = diff.ones().next().expect("the step is strict");
        separators.push(elements[h].clone());
    }
    let chain = path.iter().map(|&node| lattice.subgroup(node)).collect();
    CdimResult { value_terms: path.len(), value_steps: path.len() - 1, witnesses, separators, chain }
}

/// Checks the stored chain against fresh centralizers and recomputes the
/// c-dimension of the subgroup generated by witnesses and separators.
pub fn verify_witnesses(g: &GroupHandle, r: &CdimResult) -> Result<bool> {
    let m = r.witnesses.len();
    if r.chain.len() != m + 1 || r.separators.len() != m || r.value_terms != m + 1 || r.value_steps != m {
        return Err(Error::Malformed("cdim result lengths disagree".into()));
    }
    if !r.chain[0].is_whole() || !r.chain[0].ambient().same_elements(g) {
        return Ok(false);
    }
    for i in 1..=m {
        let c = centralizer(g, &r.witnesses[..i])?;
        if c != r.chain[i] || r.chain[i].order() >= r.chain[i - 1].order() {
            return Ok(false);
        }
        let h = &r.separators[i - 1];
        if !r.chain[i - 1].contains(h) || r.chain[i].contains(h) {
            return Ok(false);
        }
    }
    let gens: Vec<Permutation> = r.witnesses.iter().chain(&r.separators).cloned().collect();
    let h = g.subgroup(gens)?;
    Ok(cdim(h.group())?.value_terms == r.value_terms)
}

/// Length of a greedily built strict chain `C_G(x_1) > C_G(x_1, x_2) > ...`,
/// a lower bound for the c-dimension that needs no element enumeration.
pub fn cdim_lower_bound(g: &GroupHandle) -> Result<CdimResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6364_696d);
    let order = g.order();
    let mut witnesses: Vec<Permutation> = Vec::new();
    let mut separators = Vec::new();
    let mut chain = vec![g.as_subgroup()];
    loop {
        let current = chain.last().unwrap().clone();
        let mut candidates: Vec<Permutation> = g.generators().to_vec();
        candidates.extend(current.generators().iter().cloned());
        for _ in 0..24 {
            let idx = rng.gen_range(0..order.min(usize::MAX as u128)) as usize;
            candidates.push(g.chain().element_at(idx));
        }
        let mut best: Option<(SubgroupRef, Permutation)> = None;
        for x in candidates {
            if current.generators().iter().all(|y| y.commutes_with(&x)) {
                continue;
            }
            let mut set = witnesses.clone();
            set.push(x.clone());
            let c = centralizer(g, &set)?;
            if best.as_ref().is_none_or(|(b, _)| c.order() > b.order()) {
                best = Some((c, x));
            }
        }
        let Some((c, x)) = best else { break };
        let h = current
            .generators()
            .iter()
            .find(|y| !c.contains(y))
            .expect("a strict drop leaves a generator behind")
            .clone();
        witnesses.push(x);
        separators.push(h);
        chain.push(c);
    }
    let m = witnesses.len();
    Ok(CdimResult { value_terms: m + 1, value_steps: m, witnesses, separators, chain })
}

/// `C_G(S)` for element indices `S`, read off the lattice.
pub fn lattice_centralizer(lattice: &CentralizerLattice, set: &[usize]) -> SubgroupRef {
    lattice.ambient().subgroup_from_mask(&mask_of_set(lattice, set))
}
