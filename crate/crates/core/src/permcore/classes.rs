use fixedbitset::FixedBitSet;

use super::group::GroupHandle;
use super::perm::Permutation;
use crate::error::Result;

/// One conjugacy class: its least-index member and every member with a conjugator.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    /// `(member index, c)` with `representative^c = member`.
    pub members: Vec<(usize, Permutation)>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// All conjugacy classes, ordered by representative index.
pub fn conjugacy_classes(g: &GroupHandle) -> Result<Vec<ConjugacyClass>> {
    let elements = g.element_list()?;
    let mut seen = FixedBitSet::with_capacity(elements.len());
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start);
        let mut members = vec![(start, g.identity())];
        let mut head = 0;
        while head < members.len() {
            let (idx, conj) = members[head].clone();
            for x in g.generators() {
                let y = elements[idx].conjugate_by(x);
                let j = g.index_of(&y).expect("conjugate stays in the group");
                if !seen.contains(j) {
                    seen.insert(j);
                    members.push((j, conj.compose(x)));
                }
            }
            head += 1;
        }
        classes.push(ConjugacyClass { representative: start, members });
    }
    Ok(classes)
}

/// One representative per conjugacy class.
pub fn conjugacy_class_reps(g: &GroupHandle) -> Result<Vec<Permutation>> {
    Ok(conjugacy_classes(g)?.iter().map(|c| g.element(c.representative)).collect())
}

/// `G x H` on `deg(G) + deg(H)` points, `G` on the first block.
pub fn direct_product(g: &GroupHandle, h: &GroupHandle) -> GroupHandle {
    let degree = g.degree() + h.degree();
    let mut gens: Vec<Permutation> = g.generators().iter().map(|x| x.shifted(0, degree)).collect();
    gens.extend(h.generators().iter().map(|x| x.shifted(g.degree(), degree)));
    GroupHandle::from_parts(degree, gens, g.caps())
}
