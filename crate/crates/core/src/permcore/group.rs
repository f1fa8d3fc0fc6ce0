use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::caps::Caps;
use crate::error::{Error, Result};

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    caps: Caps,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Vec<Permutation>>,
    cdim: OnceLock<crate::cdim::DetachedCdim>,
}

/// A finite permutation group given by generators.
///
/// The stabilizer chain is built on first use and never changes afterwards;
/// clones share it.
#[derive(Clone)]
pub struct GroupHandle {
    inner: Arc<GroupInner>,
}

/// Generated subgroup of the symmetric group on `degree` points.
pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<GroupHandle> {
    GroupHandle::new(degree, gens)
}

impl GroupHandle {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        GroupHandle::with_caps(degree, gens, Caps::default())
    }

    pub fn with_caps(degree: usize, gens: Vec<Permutation>, caps: Caps) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        Ok(GroupHandle::from_parts(degree, gens, caps))
    }

    pub(crate) fn from_parts(degree: usize, gens: Vec<Permutation>, caps: Caps) -> Self {
        GroupHandle {
            inner: Arc::new(GroupInner {
                degree,
                generators: gens,
                caps,
                chain: OnceLock::new(),
                elements: OnceLock::new(),
                cdim: OnceLock::new(),
            }),
        }
    }

    pub(crate) fn from_chain(degree: usize, gens: Vec<Permutation>, caps: Caps, chain: StabChain) -> Self {
        let handle = GroupHandle::from_parts(degree, gens, caps);
        let _ = handle.inner.chain.set(chain);
        handle
    }

    /// A handle on the same generators with different caps.
    pub fn recapped(&self, caps: Caps) -> GroupHandle {
        GroupHandle::from_parts(self.degree(), self.generators().to_vec(), caps)
    }

    /// A new group on the same degree sharing this handle's caps.
    pub fn sibling(&self, gens: Vec<Permutation>) -> GroupHandle {
        GroupHandle::from_parts(self.degree(), gens, self.caps())
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        GroupHandle::new(degree, Vec::new())
    }

    pub(crate) fn cdim_slot(&self) -> &OnceLock<crate::cdim::DetachedCdim> {
        &self.inner.cdim
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn caps(&self) -> Caps {
        self.inner.caps
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn chain(&self) -> &StabChain {
        self.inner.chain.get_or_init(|| StabChain::new(self.inner.degree, &self.inner.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Position of `g` in [`GroupHandle::element_list`].
    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.chain().index_of(g)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Fails when the order is above the enumeration cap.
    pub fn check_enumerable(&self) -> Result<usize> {
        let order = self.order();
        let cap = self.caps().enumeration as u128;
        if order > cap {
            return Err(Error::CapExceeded { what: "element enumeration", needed: order, cap });
        }
        Ok(order as usize)
    }

    /// Every element exactly once, in stabilizer-chain index order.
    pub fn element_list(&self) -> Result<&[Permutation]> {
        if let Some(e) = self.inner.elements.get() {
            return Ok(e);
        }
        self.check_enumerable()?;
        Ok(self.inner.elements.get_or_init(|| self.chain().elements()))
    }

    pub fn elements(&self) -> Result<impl Iterator<Item = &Permutation>> {
        Ok(self.element_list()?.iter())
    }

    /// Element of a given chain index.
    pub fn element(&self, index: usize) -> Permutation {
        match self.inner.elements.get() {
            Some(e) => e[index].clone(),
            None => self.chain().element_at(index),
        }
    }

    pub fn same_handle(&self, other: &GroupHandle) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Whether both groups have exactly the same elements.
    pub fn same_elements(&self, other: &GroupHandle) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && other.generators().iter().all(|g| self.contains(g))
    }

    pub fn as_subgroup(&self) -> SubgroupRef {
        SubgroupRef { ambient: self.clone(), group: self.clone() }
    }

    pub fn trivial_subgroup(&self) -> SubgroupRef {
        SubgroupRef { ambient: self.clone(), group: self.sibling(Vec::new()) }
    }

    /// Subgroup generated by elements of this group.
    /// The stabilizer of `point` (0-based).
    pub fn point_stabilizer(&self, point: usize) -> SubgroupRef {
        let chain = StabChain::with_base_prefix(self.degree(), self.generators(), &[point]);
        let gens = chain.levels.get(1).map(|l| l.gens.clone()).unwrap_or_default();
        SubgroupRef::from_trusted(self, self.sibling(gens))
    }

    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<SubgroupRef> {
        SubgroupRef::new(self, gens)
    }

    /// Subgroup with the given element set, as a mask over this group's indices.
    pub fn subgroup_from_mask(&self, mask: &FixedBitSet) -> SubgroupRef {
        let mut chain = StabChain::new(self.degree(), &[]);
        let mut gens = Vec::new();
        let mut count = 1u128;
        let target = mask.count_ones(..) as u128;
        for idx in mask.ones() {
            if count == target {
                break;
            }
            let g = self.element(idx);
            if chain.extend(&g) {
                gens.push(g);
                count = chain.order();
            }
        }
        let group = GroupHandle::from_chain(self.degree(), gens, self.caps(), chain);
        SubgroupRef { ambient: self.clone(), group }
    }

    /// Mask over element indices for every element of `elements`.
    pub fn mask_of<'a>(&self, elements: impl IntoIterator<Item = &'a Permutation>) -> Result<FixedBitSet> {
        let order = self.check_enumerable()?;
        let mut mask = FixedBitSet::with_capacity(order);
        for g in elements {
            let idx = self.index_of(g).ok_or_else(|| Error::NotInGroup(g.to_string()))?;
            mask.insert(idx);
        }
        Ok(mask)
    }
}

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHandle").field("degree", &self.degree()).field("generators", &self.generators()).finish()
    }
}

/// A subgroup of an ambient group, itself usable as a group.
#[derive(Clone)]
pub struct SubgroupRef {
    ambient: GroupHandle,
    group: GroupHandle,
}

impl SubgroupRef {
    pub fn new(ambient: &GroupHandle, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != ambient.degree() {
                return Err(Error::DegreeMismatch { expected: ambient.degree(), found: g.degree() });
            }
            if !ambient.contains(g) {
                return Err(Error::NotInGroup(g.to_string()));
            }
        }
        Ok(SubgroupRef { ambient: ambient.clone(), group: ambient.sibling(gens) })
    }

    pub(crate) fn from_trusted(ambient: &GroupHandle, group: GroupHandle) -> Self {
        SubgroupRef { ambient: ambient.clone(), group }
    }

    pub fn ambient(&self) -> &GroupHandle {
        &self.ambient
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.group.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &SubgroupRef) -> bool {
        self.order() <= other.order() && self.generators().iter().all(|g| other.contains(g))
    }

    /// The same element set viewed inside another ambient group containing it.
    pub fn reparent(&self, ambient: &GroupHandle) -> Result<SubgroupRef> {
        SubgroupRef::new(ambient, self.generators().to_vec())
    }

    /// Mask over the ambient group's element indices.
    pub fn mask(&self) -> Result<FixedBitSet> {
        self.ambient.mask_of(self.group.element_list()?)
    }

    pub fn is_normal(&self) -> bool {
        self.ambient.generators().iter().all(|x| self.generators().iter().all(|h| self.contains(&h.conjugate_by(x))))
    }

    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generators().iter().filter(|g| !g.is_identity()).map(|g| g.to_string()).collect();
        if gens.is_empty() {
            format!("order {}", self.order())
        } else {
            format!("order {}, gens {}", self.order(), gens.join(", "))
        }
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_elements(&other.group)
    }
}

impl Eq for SubgroupRef {}

impl fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubgroupRef({})", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn constructor_errors() {
        assert!(matches!(GroupHandle::new(0, vec![]), Err(Error::ZeroDegree)));
        assert!(matches!(
            GroupHandle::new(3, vec![cyc(4, &[&[1, 2]])]),
            Err(Error::DegreeMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn small_orders() {
        assert_eq!(GroupHandle::new(3, vec![]).unwrap().order(), 1);
        let s3 = GroupHandle::new(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.order(), 6);
        let a5 = GroupHandle::new(5, vec![cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn enumeration_respects_cap() {
        let caps = Caps { enumeration: 10, ..Caps::default() };
        let s4 = GroupHandle::with_caps(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])], caps).unwrap();
        assert!(matches!(s4.element_list(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn subgroup_equality_ignores_generators() {
        let s4 = GroupHandle::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        let a = s4.subgroup(vec![cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])]).unwrap();
        let b = s4.subgroup(vec![cyc(4, &[&[1, 4], &[2, 3]]), cyc(4, &[&[1, 2], &[3, 4]])]).unwrap();
        assert_eq!(a, b);
        assert!(a.is_normal());
        let mask = a.mask().unwrap();
        assert_eq!(s4.subgroup_from_mask(&mask), a);
    }
}
