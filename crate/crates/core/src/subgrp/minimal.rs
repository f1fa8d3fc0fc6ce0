use super::series::{join, normal_closure};
use crate::error::{Error, Result};
use crate::permcore::{conjugacy_class_reps, GroupHandle, SubgroupRef};

/// The minimal nontrivial normal subgroups: inclusion-minimal normal
/// closures of nontrivial class representatives.
pub fn minimal_normal_subgroups(g: &GroupHandle) -> Result<Vec<SubgroupRef>> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let mut candidates: Vec<SubgroupRef> = Vec::new();
    for x in conjugacy_class_reps(g)? {
        if x.is_identity() {
            continue;
        }
        let n = normal_closure(g, &[x])?;
        if !candidates.contains(&n) {
            candidates.push(n);
        }
    }
    let minimal = candidates
        .iter()
        .filter(|n| !candidates.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
        .cloned()
        .collect();
    Ok(minimal)
}

/// Nontrivial with no proper nontrivial normal subgroup.
pub fn is_simple(g: &GroupHandle) -> Result<bool> {
    if g.is_abelian() {
        return Ok(is_prime_order(g.order()));
    }
    for x in conjugacy_class_reps(g)? {
        if !x.is_identity() && normal_closure(g, &[x])?.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_prime_order(n: u128) -> bool {
    n <= u64::MAX as u128 && crate::arith::is_prime(n as u64)
}

/// Product of the minimal normal subgroups.
pub fn socle(g: &GroupHandle) -> Result<SubgroupRef> {
    let mins = minimal_normal_subgroups(g)?;
    let refs: Vec<&SubgroupRef> = mins.iter().collect();
    Ok(join(g, &refs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn s4_has_klein_socle() {
        let g = GroupHandle::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        let mins = minimal_normal_subgroups(&g).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        assert_eq!(socle(&g).unwrap().order(), 4);
    }

    #[test]
    fn c6_socle_is_everything() {
        let g = GroupHandle::new(6, vec![cyc(6, &[&[1, 2, 3, 4, 5, 6]])]).unwrap();
        let mut orders: Vec<u128> = minimal_normal_subgroups(&g).unwrap().iter().map(SubgroupRef::order).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
        assert_eq!(socle(&g).unwrap().order(), 6);
    }

    #[test]
    fn trivial_group_is_rejected() {
        let g = GroupHandle::trivial(3).unwrap();
        assert!(matches!(socle(&g), Err(Error::TrivialGroup)));
    }
}
