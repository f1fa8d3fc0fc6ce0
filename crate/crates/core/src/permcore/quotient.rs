use std::collections::HashMap;
use std::sync::Arc;

use super::group::{GroupHandle, SubgroupRef};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Cosets of a normal subgroup, each named by a canonical representative.
struct CosetTable {
    normal: GroupHandle,
    reps: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
}

impl CosetTable {
    /// Lexicographically least base-image element of the coset `N g`.
    fn canonical(&self, g: &Permutation) -> Permutation {
        let chain = self.normal.chain();
        let mut g = g.clone();
        for level in &chain.levels {
            // n g maps the base point to g(n(b)); n(b) runs over the basic orbit
            let (pos, _) = level
                .orbit
                .iter()
                .enumerate()
                .map(|(pos, &delta)| (pos, g.apply(delta)))
                .min_by_key(|&(_, img)| img)
                .expect("orbit contains the base point");
            if pos != 0 {
                g = level.rep(pos).compose(&g);
            }
        }
        g
    }

    fn coset_of(&self, g: &Permutation) -> usize {
        self.lookup[&self.canonical(g)]
    }
}

/// The canonical projection `G -> G/N`.
#[derive(Clone)]
pub struct Homomorphism {
    source: GroupHandle,
    target: GroupHandle,
    images: Vec<Permutation>,
    cosets: Arc<CosetTable>,
}

impl Homomorphism {
    pub fn source(&self) -> &GroupHandle {
        &self.source
    }

    pub fn target(&self) -> &GroupHandle {
        &self.target
    }

    /// Images of the source generators, in order.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn kernel(&self) -> SubgroupRef {
        SubgroupRef::from_trusted(&self.source, self.cosets.normal.clone())
    }

    pub fn image(&self, g: &Permutation) -> Permutation {
        let images: Vec<u32> = self.cosets.reps.iter().map(|r| self.cosets.coset_of(&r.compose(g)) as u32).collect();
        Permutation::from_images_unchecked(images)
    }

    pub fn image_subgroup(&self, h: &SubgroupRef) -> SubgroupRef {
        let gens = h.generators().iter().map(|g| self.image(g)).collect();
        SubgroupRef::from_trusted(&self.target, self.target.sibling(gens))
    }

    /// Some element of the source mapping to `x`.
    pub fn lift(&self, x: &Permutation) -> Permutation {
        self.cosets.reps[x.apply(0)].clone()
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, k: &SubgroupRef) -> SubgroupRef {
        let mut gens: Vec<Permutation> = self.cosets.normal.generators().to_vec();
        gens.extend(k.generators().iter().map(|x| self.lift(x)).filter(|g| !g.is_identity()));
        SubgroupRef::from_trusted(&self.source, self.source.sibling(gens))
    }
}

/// `G/N` in its regular action on the cosets of `N`, with the projection.
pub fn quotient(g: &GroupHandle, n: &SubgroupRef) -> Result<(GroupHandle, Homomorphism)> {
    if let Some(x) = n.generators().iter().find(|x| !g.contains(x)) {
        return Err(Error::NotInGroup(x.to_string()));
    }
    let normal = n.group().clone();
    if !g.generators().iter().all(|x| normal.generators().iter().all(|h| normal.contains(&h.conjugate_by(x)))) {
        return Err(Error::NotNormal);
    }
    let index = g.order() / normal.order();
    let cap = g.caps().quotient as u128;
    if index > cap {
        return Err(Error::CapExceeded { what: "quotient index", needed: index, cap });
    }
    let index = index as usize;
    let mut table = CosetTable { normal, reps: Vec::with_capacity(index), lookup: HashMap::with_capacity(index) };
    let id = table.canonical(&g.identity());
    table.lookup.insert(id.clone(), 0);
    table.reps.push(id);
    let gens = g.generators();
    let mut actions: Vec<Vec<u32>> = vec![Vec::with_capacity(index); gens.len()];
    let mut head = 0;
    while head < table.reps.len() {
        for (j, x) in gens.iter().enumerate() {
            let c = table.canonical(&table.reps[head].compose(x));
            let next = table.reps.len();
            let k = *table.lookup.entry(c.clone()).or_insert(next);
            if k == next {
                table.reps.push(c);
            }
            actions[j].push(k as u32);
        }
        head += 1;
    }
    debug_assert_eq!(table.reps.len(), index);
    let images: Vec<Permutation> = actions.into_iter().map(Permutation::from_images_unchecked).collect();
    let target = GroupHandle::from_parts(index, images.clone(), g.caps());
    let hom = Homomorphism { source: g.clone(), target: target.clone(), images, cosets: Arc::new(table) };
    Ok((target, hom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn s4() -> GroupHandle {
        GroupHandle::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap()
    }

    #[test]
    fn s4_mod_klein_is_nonabelian_of_order_6() {
        let g = s4();
        let v4 = g.subgroup(vec![cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])]).unwrap();
        let (q, hom) = quotient(&g, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        assert!(!q.is_abelian());
        assert_eq!(hom.kernel(), v4);
        for x in g.element_list().unwrap() {
            assert_eq!(hom.image(x).is_identity(), v4.contains(x));
        }
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s4();
        let (q, _) = quotient(&g, &g.as_subgroup()).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_by_trivial_is_regular() {
        let g = s4();
        let (q, hom) = quotient(&g, &g.trivial_subgroup()).unwrap();
        assert_eq!(q.order(), 24);
        assert_eq!(q.degree(), 24);
        let a4 = g.subgroup(vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]).unwrap();
        let img = hom.image_subgroup(&a4);
        assert_eq!(img.order(), 12);
        assert_eq!(hom.preimage(&img), a4);
    }

    #[test]
    fn rejects_non_normal() {
        let g = s4();
        let h = g.subgroup(vec![cyc(4, &[&[1, 2]])]).unwrap();
        assert!(matches!(quotient(&g, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn index_cap_is_enforced() {
        let g = s4().recapped(crate::caps::Caps { quotient: 5, ..Default::default() });
        assert!(matches!(quotient(&g, &g.trivial_subgroup()), Err(Error::CapExceeded { .. })));
    }
}
