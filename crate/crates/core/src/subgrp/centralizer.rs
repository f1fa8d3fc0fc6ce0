use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation, StabChain, SubgroupRef};

fn check_members(g: &GroupHandle, s: &[Permutation]) -> Result<()> {
    match s.iter().find(|x| !g.contains(x)) {
        Some(x) => Err(Error::NotInGroup(x.to_string())),
        None => Ok(()),
    }
}

/// `C_G(S)`.
pub fn centralizer(g: &GroupHandle, s: &[Permutation]) -> Result<SubgroupRef> {
    check_members(g, s)?;
    if s.iter().all(Permutation::is_identity) {
        return Ok(g.as_subgroup());
    }
    if g.order() <= g.caps().filter as u128 {
        centralizer_by_filter(g, s)
    } else {
        Ok(centralizer_by_backtrack(g, s))
    }
}

pub fn center(g: &GroupHandle) -> Result<SubgroupRef> {
    centralizer(g, g.generators())
}

/// Centralizer by testing every element.
pub fn centralizer_by_filter(g: &GroupHandle, s: &[Permutation]) -> Result<SubgroupRef> {
    let elements = g.element_list()?;
    let mut mask = fixedbitset::FixedBitSet::with_capacity(elements.len());
    for (i, x) in elements.iter().enumerate() {
        if s.iter().all(|y| x.commutes_with(y)) {
            mask.insert(i);
        }
    }
    Ok(g.subgroup_from_mask(&mask))
}

/// Centralizer by backtracking over base images, with the base laid out
/// along the cycles of the elements of `S`.
pub fn centralizer_by_backtrack(g: &GroupHandle, s: &[Permutation]) -> SubgroupRef {
    let degree = g.degree();
    let mut prefix = Vec::new();
    let mut placed = vec![false; degree];
    for x in s {
        let mut cycles = x.cycles();
        cycles.sort_by_key(|c| Reverse(c.len()));
        for c in cycles {
            for p in c {
                if !placed[p] {
                    placed[p] = true;
                    prefix.push(p);
                }
            }
        }
    }
    let chain = StabChain::with_base_prefix(degree, g.generators(), &prefix);
    let base = chain.base();
    let mut level_of = vec![usize::MAX; degree];
    for (i, &b) in base.iter().enumerate() {
        level_of[b] = i;
    }
    // image(b_m) must equal s(image(b_a)) whenever s(b_a) = b_m
    let mut constraints: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); base.len()];
    for (si, x) in s.iter().enumerate() {
        for (a, &b) in base.iter().enumerate() {
            let m = level_of[x.apply(b)];
            if m != usize::MAX {
                constraints[a.max(m)].push((a, m, si));
            }
        }
    }
    let cycle_lengths: Vec<Vec<usize>> = s.iter().map(Permutation::cycle_lengths).collect();
    let prune = move |level: usize, img: usize, images: &[usize]| {
        let b = base[level];
        cycle_lengths.iter().all(|cl| cl[b] == cl[img])
            && constraints[level].iter().all(|&(a, m, si)| images[m] == s[si].apply(images[a]))
    };
    let accept = |x: &Permutation| s.iter().all(|y| x.commutes_with(y));
    backtrack(g, &chain, prune, accept)
}

/// `N_G(H)`.
pub fn normalizer(g: &GroupHandle, h: &SubgroupRef) -> Result<SubgroupRef> {
    check_members(g, h.generators())?;
    if g.order() <= g.caps().filter as u128 {
        normalizer_by_filter(g, h)
    } else {
        Ok(normalizer_by_backtrack(g, h))
    }
}

fn normalizes(x: &Permutation, h: &SubgroupRef) -> bool {
    h.generators().iter().all(|y| h.contains(&y.conjugate_by(x)))
}

pub fn normalizer_by_filter(g: &GroupHandle, h: &SubgroupRef) -> Result<SubgroupRef> {
    let elements = g.element_list()?;
    let mut mask = fixedbitset::FixedBitSet::with_capacity(elements.len());
    for (i, x) in elements.iter().enumerate() {
        if normalizes(x, h) {
            mask.insert(i);
        }
    }
    Ok(g.subgroup_from_mask(&mask))
}

/// Normalizer by backtracking; base images must preserve `H`-orbit lengths.
pub fn normalizer_by_backtrack(g: &GroupHandle, h: &SubgroupRef) -> SubgroupRef {
    let degree = g.degree();
    let mut orbit_len = vec![1usize; degree];
    let mut seen = vec![false; degree];
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            for y in h.generators() {
                let q = y.apply(orbit[head]);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            head += 1;
        }
        for &p in &orbit {
            orbit_len[p] = orbit.len();
        }
    }
    let chain = g.chain().clone();
    let base = chain.base();
    let prune = move |level: usize, img: usize, _: &[usize]| orbit_len[base[level]] == orbit_len[img];
    backtrack(g, &chain, prune, |x| normalizes(x, h))
}

fn backtrack(
    g: &GroupHandle,
    chain: &StabChain,
    prune: impl Fn(usize, usize, &[usize]) -> bool,
    accept: impl Fn(&Permutation) -> bool,
) -> SubgroupRef {
    struct State<'a, P, A> {
        chain: &'a StabChain,
        prune: P,
        accept: A,
        images: Vec<usize>,
        found: StabChain,
        gens: Vec<Permutation>,
    }
    fn descend<P, A>(st: &mut State<'_, P, A>, level: usize, prefix: &Permutation)
    where
        P: Fn(usize, usize, &[usize]) -> bool,
        A: Fn(&Permutation) -> bool,
    {
        if level == st.chain.levels.len() {
            if !st.found.contains(prefix) && (st.accept)(prefix) {
                st.found.extend(prefix);
                st.gens.push(prefix.clone());
            }
            return;
        }
        let chain = st.chain;
        let lvl = &chain.levels[level];
        for pos in 0..lvl.orbit.len() {
            let img = prefix.apply(lvl.orbit[pos]);
            st.images[level] = img;
            if !(st.prune)(level, img, &st.images) {
                continue;
            }
            let next = if pos == 0 { prefix.clone() } else { lvl.rep(pos).compose(prefix) };
            descend(st, level + 1, &next);
        }
    }
    let mut st = State {
        chain,
        prune,
        accept,
        images: vec![0; chain.levels.len()],
        found: StabChain::new(g.degree(), &[]),
        gens: Vec::new(),
    };
    descend(&mut st, 0, &g.identity());
    let group = GroupHandle::from_chain(g.degree(), st.gens, g.caps(), st.found);
    SubgroupRef::from_trusted(g, group)
}
