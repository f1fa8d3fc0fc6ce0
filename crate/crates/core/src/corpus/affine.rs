use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation};

/// Extends generator images to a map on all elements of `Q`, checking that
/// it is a bijective homomorphism. The result is a permutation of `Q`'s
/// element indices.
pub fn automorphism_on_elements(q: &GroupHandle, images: &[Permutation]) -> Result<Permutation> {
    let gens = q.generators();
    if images.len() != gens.len() {
        return Err(Error::InvalidAutomorphism(format!("{} images for {} generators", images.len(), gens.len())));
    }
    if let Some(x) = images.iter().find(|x| !q.contains(x)) {
        return Err(Error::InvalidAutomorphism(format!("image {x} lies outside the group")));
    }
    let elements = q.element_list()?;
    let n = elements.len();
    let id = q.index_of(&q.identity()).unwrap();
    let mut map: Vec<Option<Permutation>> = vec![None; n];
    map[id] = Some(q.identity());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let i = queue[head];
        head += 1;
        let mapped = map[i].clone().unwrap();
        for (x, y) in gens.iter().zip(images) {
            let j = q.index_of(&elements[i].compose(x)).unwrap();
            let target = mapped.compose(y);
            match &map[j] {
                Some(existing) if existing != &target => {
                    return Err(Error::InvalidAutomorphism("generator images violate a relation".into()));
                }
                Some(_) => {}
                None => {
                    map[j] = Some(target);
                    queue.push(j);
                }
            }
        }
    }
    let indices: Vec<usize> = map.iter().map(|m| q.index_of(m.as_ref().unwrap()).unwrap()).collect();
    Permutation::from_images(indices)
        .map_err(|_| Error::InvalidAutomorphism("generator images do not define a bijection".into()))
}

/// `Q ⋊ E` on the elements of `Q`: `Q` acts by right multiplication and each
/// automorphism (given by images of `Q`'s generators) acts by evaluation.
pub fn make_affine_action(q: &GroupHandle, automorphisms: &[Vec<Permutation>]) -> Result<GroupHandle> {
    let elements = q.element_list()?;
    let n = elements.len();
    let lookup: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut gens = Vec::new();
    for x in q.generators() {
        let images: Vec<usize> = elements.iter().map(|e| lookup[&e.compose(x)]).collect();
        gens.push(Permutation::from_images(images)?);
    }
    for a in automorphisms {
        let p = automorphism_on_elements(q, a)?;
        if !p.is_identity() {
            gens.push(p);
        }
    }
    GroupHandle::with_caps(n, gens, q.caps())
}
