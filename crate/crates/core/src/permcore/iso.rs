use std::collections::BTreeMap;

use super::group::GroupHandle;
use super::perm::Permutation;
use crate::error::{Error, Result};

pub const ISOMORPHISM_CAP: u128 = 512;

/// Whether `G` and `H` are isomorphic, by backtracking over generator images.
pub fn is_isomorphic_small(g: &GroupHandle, h: &GroupHandle) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISOMORPHISM_CAP {
            return Err(Error::CapExceeded { what: "isomorphism test", needed: x.order(), cap: ISOMORPHISM_CAP });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let ge = g.element_list()?;
    let he = h.element_list()?;
    let census = |elems: &[Permutation]| {
        let mut m: BTreeMap<u64, usize> = BTreeMap::new();
        for x in elems {
            *m.entry(x.order()).or_default() += 1;
        }
        m
    };
    let (gc, hc) = (census(ge), census(he));
    if gc != hc || g.is_abelian() != h.is_abelian() {
        return Ok(false);
    }

    // generators of G drawn from its rarest element orders first
    let mut candidates: Vec<usize> = (1..ge.len()).collect();
    candidates.sort_by_key(|&i| (gc[&ge[i].order()], std::cmp::Reverse(ge[i].order()), i));
    let mut gens: Vec<usize> = Vec::new();
    let mut chain = super::chain::StabChain::new(g.degree(), &[]);
    for i in candidates {
        if chain.order() == g.order() {
            break;
        }
        if chain.extend(&ge[i]) {
            gens.push(i);
        }
    }
    let images_by_order: Vec<Vec<usize>> =
        gens.iter().map(|&i| (0..he.len()).filter(|&j| he[j].order() == ge[i].order()).collect()).collect();

    let mut search = Search { g, h, ge, he, gens: &gens, images_by_order: &images_by_order, chosen: Vec::new() };
    Ok(search.run())
}

struct Search<'a> {
    g: &'a GroupHandle,
    h: &'a GroupHandle,
    ge: &'a [Permutation],
    he: &'a [Permutation],
    gens: &'a [usize],
    images_by_order: &'a [Vec<usize>],
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let depth = self.chosen.len();
        if !self.consistent() {
            return false;
        }
        if depth == self.gens.len() {
            return true;
        }
        for &j in &self.images_by_order[depth] {
            self.chosen.push(j);
            if self.run() {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    /// Extends the partial generator map along words in the chosen generators;
    /// false on a clash or a non-injective map.
    fn consistent(&self) -> bool {
        let n = self.ge.len();
        let mut map: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; self.he.len()];
        map[0] = Some(0);
        used[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            let image_a = &self.he[map[a].expect("queued elements are mapped")];
            for (k, &gi) in self.gens.iter().take(self.chosen.len()).enumerate() {
                let prod = self.ge[a].compose(&self.ge[gi]);
                let b = self.g.index_of(&prod).expect("closed under products");
                let image_b = image_a.compose(&self.he[self.chosen[k]]);
                let ib = self.h.index_of(&image_b).expect("closed under products");
                match map[b] {
                    Some(existing) if existing != ib => return false,
                    Some(_) => {}
                    None => {
                        if used[ib] {
                            return false;
                        }
                        used[ib] = true;
                        map[b] = Some(ib);
                        queue.push(b);
                    }
                }
            }
            head += 1;
        }
        true
    }
}
