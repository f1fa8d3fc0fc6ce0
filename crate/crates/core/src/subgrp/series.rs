use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation, StabChain, SubgroupRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperFitting,
    PSeries,
}

/// A chain of subgroups with the stabilized tail removed.
#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub kind: SeriesKind,
    pub terms: Vec<SubgroupRef>,
}

impl SeriesRecord {
    pub fn last(&self) -> &SubgroupRef {
        self.terms.last().expect("series has at least one term")
    }

    /// Number of strict steps.
    pub fn steps(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Subgroup generated by `gens` under conjugation by `G`.
pub fn normal_closure(g: &GroupHandle, s: &[Permutation]) -> Result<SubgroupRef> {
    if let Some(x) = s.iter().find(|x| !g.contains(x)) {
        return Err(Error::NotInGroup(x.to_string()));
    }
    Ok(closure_under(g, s, g.generators()))
}

/// Smallest subgroup containing `seed` and normalized by `by`.
fn closure_under(g: &GroupHandle, seed: &[Permutation], by: &[Permutation]) -> SubgroupRef {
    let mut chain = StabChain::new(g.degree(), &[]);
    let mut gens = Vec::new();
    for x in seed {
        if chain.extend(x) {
            gens.push(x.clone());
        }
    }
    let mut i = 0;
    while i < gens.len() {
        for y in by {
            let c = gens[i].conjugate_by(y);
            if chain.extend(&c) {
                gens.push(c);
            }
        }
        i += 1;
    }
    SubgroupRef::from_trusted(g, GroupHandle::from_chain(g.degree(), gens, g.caps(), chain))
}

/// Subgroup generated by all the given subgroups.
pub fn join(g: &GroupHandle, parts: &[&SubgroupRef]) -> SubgroupRef {
    let mut chain = StabChain::new(g.degree(), &[]);
    let mut gens = Vec::new();
    for part in parts {
        for x in part.generators() {
            if chain.extend(x) {
                gens.push(x.clone());
            }
        }
    }
    SubgroupRef::from_trusted(g, GroupHandle::from_chain(g.degree(), gens, g.caps(), chain))
}

/// `A ∩ B`, by enumerating the smaller group.
pub fn intersection(a: &SubgroupRef, b: &SubgroupRef) -> Result<SubgroupRef> {
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let mut chain = StabChain::new(a.ambient().degree(), &[]);
    let mut gens = Vec::new();
    for x in small.group().element_list()? {
        if large.contains(x) && chain.extend(x) {
            gens.push(x.clone());
        }
    }
    let ambient = a.ambient();
    Ok(SubgroupRef::from_trusted(ambient, GroupHandle::from_chain(ambient.degree(), gens, ambient.caps(), chain)))
}

/// `[A, B]` for subgroups normalized by `G`, as a subgroup of `G`.
pub fn commutator_subgroup(g: &GroupHandle, a: &SubgroupRef, b: &SubgroupRef) -> SubgroupRef {
    let comms: Vec<Permutation> = a
        .generators()
        .iter()
        .flat_map(|x| b.generators().iter().map(move |y| x.commutator(y)))
        .filter(|c| !c.is_identity())
        .collect();
    closure_under(g, &comms, g.generators())
}

pub fn derived_subgroup(g: &GroupHandle) -> SubgroupRef {
    let whole = g.as_subgroup();
    commutator_subgroup(g, &whole, &whole)
}

/// Whether `H` is reached by the chain of successive normal closures `K_{i+1} = H^{K_i}`.
pub fn is_subnormal(g: &GroupHandle, h: &SubgroupRef) -> Result<bool> {
    let mut k = g.clone();
    loop {
        let next = normal_closure(&k, h.generators())?;
        if next.order() == k.order() {
            return Ok(k.order() == h.order());
        }
        k = next.group().clone();
    }
}

/// `G >= G' >= G'' >= ...` until the order stops dropping.
pub fn derived_series(g: &GroupHandle) -> SeriesRecord {
    let mut terms = vec![g.as_subgroup()];
    loop {
        let last = terms.last().unwrap().group().clone();
        let next = derived_subgroup(&last);
        if next.order() == last.order() {
            break;
        }
        terms.push(next.reparent(g).expect("derived subgroup lies in G"));
    }
    SeriesRecord { kind: SeriesKind::Derived, terms }
}

/// Strict steps to reach the trivial group; `None` when the series stalls above it.
pub fn derived_length(g: &GroupHandle) -> Option<usize> {
    let series = derived_series(g);
    series.last().is_trivial().then(|| series.steps())
}

pub fn is_soluble(g: &GroupHandle) -> bool {
    derived_length(g).is_some()
}

pub fn is_perfect(g: &GroupHandle) -> bool {
    derived_subgroup(g).order() == g.order()
}

/// Last term of the derived series.
pub fn perfect_core(g: &GroupHandle) -> SubgroupRef {
    derived_series(g).last().clone()
}

pub fn lower_central_series(g: &GroupHandle) -> SeriesRecord {
    let whole = g.as_subgroup();
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = commutator_subgroup(g, last, &whole);
        if next.order() == last.order() {
            break;
        }
        terms.push(next);
    }
    SeriesRecord { kind: SeriesKind::LowerCentral, terms }
}

pub fn is_nilpotent(g: &GroupHandle) -> bool {
    lower_central_series(g).last().is_trivial()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn s4_derived_series() {
        let g = GroupHandle::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        let orders: Vec<u128> = derived_series(&g).terms.iter().map(SubgroupRef::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert_eq!(derived_length(&g), Some(3));
        assert!(!is_nilpotent(&g));
    }

    #[test]
    fn a5_is_perfect() {
        let g = GroupHandle::new(5, vec![cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(derived_length(&g), None);
        assert!(is_perfect(&g));
        assert_eq!(normal_closure(&g, &[cyc(5, &[&[1, 2], &[3, 4]])]).unwrap().order(), 60);
    }

    #[test]
    fn abelian_has_length_one() {
        let g = GroupHandle::new(4, vec![cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(derived_length(&g), Some(1));
        assert!(is_nilpotent(&g));
    }

    #[test]
    fn klein_is_normal_closure_of_double_transposition() {
        let g = GroupHandle::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        let v = normal_closure(&g, &[cyc(4, &[&[1, 2], &[3, 4]])]).unwrap();
        assert_eq!(v.order(), 4);
        let c = g.subgroup(vec![cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(intersection(&v, &c).unwrap().order(), 2);
    }
}
