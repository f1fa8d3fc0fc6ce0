use fixedbitset::FixedBitSet;

use super::series::{join, normal_closure};
use crate::arith::{is_p_power, is_prime, p_part};
use crate::error::{Error, Result};
use crate::permcore::{conjugacy_class_reps, GroupHandle, Permutation, StabChain, SubgroupRef};

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time.
pub fn sylow(g: &GroupHandle, p: u64) -> Result<SubgroupRef> {
    require_prime(p)?;
    let target = p_part(g.order(), p);
    let mut chain = StabChain::new(g.degree(), &[]);
    let mut gens: Vec<Permutation> = Vec::new();
    if target > 1 {
        let elements = g.element_list()?;
        'grow: while chain.order() < target {
            for x in elements {
                if !is_p_power(x.order() as u128, p) || chain.contains(x) {
                    continue;
                }
                if gens.iter().all(|y| chain.contains(&y.conjugate_by(x))) {
                    chain.extend(x);
                    gens.push(x.clone());
                    continue 'grow;
                }
            }
            unreachable!("a p-subgroup below Sylow order has a proper normalizing p-element");
        }
    }
    Ok(SubgroupRef::from_trusted(g, GroupHandle::from_chain(g.degree(), gens, g.caps(), chain)))
}

/// `O_p(G)`: the intersection of the conjugates of a Sylow `p`-subgroup.
pub fn p_core(g: &GroupHandle, p: u64) -> Result<SubgroupRef> {
    let s = sylow(g, p)?;
    if s.is_trivial() {
        return Ok(s);
    }
    let elements = g.element_list()?;
    let mut core: FixedBitSet = s.mask()?;
    loop {
        let before = core.count_ones(..);
        for x in g.generators() {
            let mut conj = FixedBitSet::with_capacity(elements.len());
            for i in core.ones() {
                conj.insert(g.index_of(&elements[i].conjugate_by(x)).expect("conjugate stays in G"));
            }
            core.intersect_with(&conj);
        }
        if core.count_ones(..) == before {
            break;
        }
    }
    Ok(g.subgroup_from_mask(&core))
}

/// Largest normal subgroup whose order has only primes accepted by `allowed`:
/// the join of the normal closures of class representatives that qualify.
pub fn pi_core(g: &GroupHandle, allowed: impl Fn(u64) -> bool) -> Result<SubgroupRef> {
    let mut parts = Vec::new();
    for x in conjugacy_class_reps(g)? {
        if x.is_identity() {
            continue;
        }
        let n = normal_closure(g, &[x])?;
        if crate::arith::prime_divisors(n.order()).into_iter().all(&allowed) {
            parts.push(n);
        }
    }
    let refs: Vec<&SubgroupRef> = parts.iter().collect();
    Ok(join(g, &refs))
}

/// `O_{p'}(G)`.
pub fn p_prime_core(g: &GroupHandle, p: u64) -> Result<SubgroupRef> {
    require_prime(p)?;
    pi_core(g, |q| q != p)
}
