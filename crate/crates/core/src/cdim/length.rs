use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::arith::big_omega;
use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation, StabChain, SubgroupRef};
use crate::simplerec::composition_factors;
use crate::subgrp::is_soluble;

/// `l(G)`, the number of strict inclusions in a longest subgroup chain.
///
/// Soluble groups give `Ω(|G|)` directly. Otherwise `l` is summed over the
/// composition factors, since `l(G) = l(N) + l(G/N)` for normal `N`, and each
/// nonabelian factor is searched exactly (its order must be within the
/// chain-length cap).
pub fn subgroup_chain_length(g: &GroupHandle) -> Result<usize> {
    if is_soluble(g) {
        return Ok(big_omega(g.order()));
    }
    let cap = g.caps().chain_length as u128;
    let mut total = 0;
    for f in composition_factors(g)? {
        if f.is_abelian() {
            total += 1;
        } else if f.order > cap {
            return Err(Error::CapExceeded { what: "subgroup chain length", needed: f.order, cap });
        } else {
            total += ChainSearch::new(&f.group)?.run();
        }
    }
    Ok(total)
}

/// `l(G)` by direct search over the subgroups of `G`; `|G|` must be within
/// the chain-length cap.
pub fn subgroup_chain_length_exact(g: &GroupHandle) -> Result<usize> {
    let cap = g.caps().chain_length as u128;
    if g.order() > cap {
        return Err(Error::CapExceeded { what: "subgroup chain length", needed: g.order(), cap });
    }
    Ok(ChainSearch::new(g)?.run())
}

/// `l(G/N)`, using additivity over `N`.
pub fn quotient_chain_length(g: &GroupHandle, n: &SubgroupRef) -> Result<usize> {
    if n.is_whole() {
        return Ok(0);
    }
    if n.is_trivial() {
        return subgroup_chain_length(g);
    }
    Ok(subgroup_chain_length(g)? - subgroup_chain_length(n.group())?)
}

/// Upward search: `best(H)` is the longest chain from `H` to `G`, taken over
/// the minimal overgroups `<H, g>` and memoized on every conjugate of `H`.
struct ChainSearch<'a> {
    group: &'a GroupHandle,
    elements: &'a [Permutation],
    conj: Vec<Vec<u32>>,
    memo: HashMap<FixedBitSet, usize>,
}

impl<'a> ChainSearch<'a> {
    fn new(g: &'a GroupHandle) -> Result<Self> {
        let elements = g.element_list()?;
        let conj = g
            .generators()
            .iter()
            .map(|x| elements.iter().map(|e| g.index_of(&e.conjugate_by(x)).unwrap() as u32).collect())
            .collect();
        Ok(ChainSearch { group: g, elements, conj, memo: HashMap::new() })
    }

    fn run(&mut self) -> usize {
        let chain = StabChain::new(self.group.degree(), &[]);
        let mut mask = FixedBitSet::with_capacity(self.elements.len());
        mask.insert(self.group.index_of(&self.group.identity()).unwrap());
        self.best(mask, chain)
    }

    fn mask_of(&self, chain: &StabChain) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.elements.len());
        for e in chain.elements() {
            mask.insert(self.group.index_of(&e).expect("subgroup element"));
        }
        mask
    }

    fn index(&self, p: &Permutation) -> usize {
        self.group.index_of(p).expect("element of G")
    }

    /// Marks the double coset `H g H`.
    fn mark_double_coset(&self, h: &StabChain, g: usize, seen: &mut FixedBitSet) {
        if seen.contains(g) {
            return;
        }
        seen.insert(g);
        let mut stack = vec![g];
        while let Some(i) = stack.pop() {
            for s in h.strong_generators() {
                for j in [self.index(&self.elements[i].compose(s)), self.index(&s.compose(&self.elements[i]))] {
                    if !seen.contains(j) {
                        seen.insert(j);
                        stack.push(j);
                    }
                }
            }
        }
    }

    fn best(&mut self, mask: FixedBitSet, chain: StabChain) -> usize {
        let n = self.elements.len();
        let size = chain.order() as usize;
        if size == n {
            return 0;
        }
        if let Some(&v) = self.memo.get(&mask) {
            return v;
        }
        let bound = big_omega((n / size) as u128);

        let mut seen = mask.clone();
        let mut overgroups: Vec<(FixedBitSet, StabChain)> = Vec::new();
        let mut known: HashSet<FixedBitSet> = HashSet::new();
        for idx in 0..n {
            if seen.contains(idx) {
                continue;
            }
            let x = &self.elements[idx];
            let order = x.order() as i64;
            for k in 1..order {
                if crate::permcore::gcd(k as u64, order as u64) == 1 {
                    let p = self.index(&x.pow(k));
                    self.mark_double_coset(&chain, p, &mut seen);
                }
            }
            let mut over = chain.clone();
            over.extend(x);
            let m = self.mask_of(&over);
            if known.insert(m.clone()) {
                overgroups.push((m, over));
            }
        }
        // only minimal overgroups can start a longest chain
        let minimal: Vec<bool> =
            overgroups.iter().map(|(m, _)| !overgroups.iter().any(|(o, _)| o != m && o.is_subset(m))).collect();
        let mut candidates: Vec<(FixedBitSet, StabChain)> =
            overgroups.into_iter().zip(minimal).filter(|(_, keep)| *keep).map(|(o, _)| o).collect();
        candidates.sort_by_key(|(m, _)| m.count_ones(..));

        let mut best = 0;
        for (m, over) in candidates {
            best = best.max(1 + self.best(m, over));
            if best == bound {
                break;
            }
        }
        self.remember(mask, best);
        best
    }

    fn remember(&mut self, mask: FixedBitSet, value: usize) {
        let mut stack = vec![mask];
        while let Some(m) = stack.pop() {
            if self.memo.contains_key(&m) {
                continue;
            }
            for table in &self.conj {
                let mut image = FixedBitSet::with_capacity(m.len());
                for i in m.ones() {
                    image.insert(table[i] as usize);
                }
                if !self.memo.contains_key(&image) {
                    stack.push(image);
                }
            }
            self.memo.insert(m, value);
        }
    }
}
