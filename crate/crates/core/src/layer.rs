//! Components, the layer, the generalized Fitting subgroup and induced
//! automorphism groups.

use crate::error::{Error, Result};
use crate::permcore::{
    is_isomorphic_small, quotient, GroupHandle, Homomorphism, Permutation, SubgroupRef, ISOMORPHISM_CAP,
};
use crate::report::{order_value, CheckReport};
use crate::subgrp::{
    center, centralizer, fitting, intersection, is_perfect, is_simple, is_soluble, join, minimal_normal_subgroups,
    normalizer, perfect_core, soluble_radical,
};

/// Perfect with simple central quotient.
pub fn is_quasisimple(g: &GroupHandle) -> Result<bool> {
    if g.is_trivial() || !is_perfect(g) {
        return Ok(false);
    }
    let z = center(g)?;
    if z.is_trivial() {
        return is_simple(g);
    }
    let (q, _) = quotient(g, &z)?;
    is_simple(&q)
}

#[derive(Clone, Debug)]
pub struct ComponentSet {
    pub ambient: GroupHandle,
    pub components: Vec<SubgroupRef>,
    pub layer: SubgroupRef,
}

/// Projection to `G/K`, or the identity when `K` is trivial.
pub(crate) enum Projection {
    Identity(GroupHandle),
    Quotient(Homomorphism),
}

impl Projection {
    pub(crate) fn new(g: &GroupHandle, k: &SubgroupRef) -> Result<Self> {
        if k.is_trivial() {
            Ok(Projection::Identity(g.clone()))
        } else {
            Ok(Projection::Quotient(quotient(g, k)?.1))
        }
    }

    pub(crate) fn target(&self) -> &GroupHandle {
        match self {
            Projection::Identity(g) => g,
            Projection::Quotient(h) => h.target(),
        }
    }

    pub(crate) fn image_subgroup(&self, h: &SubgroupRef) -> SubgroupRef {
        match self {
            Projection::Identity(g) => SubgroupRef::new(g, h.generators().to_vec()).expect("subgroup of the source"),
            Projection::Quotient(hom) => hom.image_subgroup(h),
        }
    }

    pub(crate) fn preimage(&self, k: &SubgroupRef) -> SubgroupRef {
        match self {
            Projection::Identity(g) => SubgroupRef::new(g, k.generators().to_vec()).expect("subgroup of the target"),
            Projection::Quotient(hom) => hom.preimage(k),
        }
    }
}

/// All subnormal quasisimple subgroups, found inside `C_G(R(G))`.
pub fn components(g: &GroupHandle) -> Result<ComponentSet> {
    let mut found: Vec<SubgroupRef> = Vec::new();
    if !is_soluble(g) {
        let r = soluble_radical(g)?;
        let c = centralizer(g, r.generators())?;
        let z = intersection(&c, &r)?;
        let cg = c.group().clone();
        let proj = Projection::new(&cg, &z.reparent(&cg)?)?;
        for m in minimal_normal_subgroups(proj.target())? {
            if m.group().is_abelian() {
                continue;
            }
            for s in minimal_normal_subgroups(m.group())? {
                let x = proj.preimage(&s);
                let q = perfect_core(x.group()).reparent(g)?;
                if !found.contains(&q) {
                    found.push(q);
                }
            }
        }
    }
    let refs: Vec<&SubgroupRef> = found.iter().collect();
    let layer = join(g, &refs);
    Ok(ComponentSet { ambient: g.clone(), components: found, layer })
}

/// `F*(G) = F(G) E(G)`.
pub fn generalized_fitting(g: &GroupHandle) -> Result<SubgroupRef> {
    let f = fitting(g)?;
    let e = components(g)?.layer;
    Ok(join(g, &[&f, &e]))
}

/// The conjugation action of `N_G(H)` on the elements of `H`, which is a
/// faithful copy of `N_G(H)/C_G(H)`.
pub fn induced_automorphisms(g: &GroupHandle, h: &SubgroupRef) -> Result<GroupHandle> {
    let n = normalizer(g, h)?;
    let elements = h.group().element_list()?;
    let hg = h.group();
    let mut gens = Vec::new();
    for x in n.generators() {
        let images: Vec<usize> =
            elements.iter().map(|e| hg.index_of(&e.conjugate_by(x)).expect("normalizer preserves H")).collect();
        let p = Permutation::from_images(images)?;
        if !p.is_identity() {
            gens.push(p);
        }
    }
    GroupHandle::with_caps(elements.len(), gens, g.caps())
}

/// Compares `Aut_G(Q)` with `Aut_{G/R}(QR/R)` for a component `Q`.
pub fn check_indaut_lemma(g: &GroupHandle, q: &SubgroupRef) -> Result<CheckReport> {
    if !components(g)?.components.contains(q) {
        return Err(Error::NotAComponent);
    }
    let r = soluble_radical(g)?;
    indaut_report(g, q, &r, "?")
}

pub(crate) fn indaut_report(g: &GroupHandle, q: &SubgroupRef, r: &SubgroupRef, name: &str) -> Result<CheckReport> {
    let proj = Projection::new(g, r)?;
    let qbar = proj.image_subgroup(q);
    let upstairs = induced_automorphisms(g, q)?;
    let downstairs = induced_automorphisms(proj.target(), &qbar)?;
    let (a, b) = (upstairs.order(), downstairs.order());
    let mut report = CheckReport::new("indaut", name)
        .input("component_order", order_value(q.order()))
        .input("radical_order", order_value(r.order()))
        .computed("aut_upstairs_order", order_value(a))
        .computed("aut_downstairs_order", order_value(b));
    let mut pass = a == b;
    if pass && a <= ISOMORPHISM_CAP {
        let iso = is_isomorphic_small(&upstairs, &downstairs)?;
        report.record("isomorphic", iso);
        pass = iso;
    }
    Ok(report.verdict(pass))
}
