use super::series::{join, SeriesKind, SeriesRecord};
use super::sylow::{p_core, p_prime_core};
use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::permcore::{quotient, GroupHandle, SubgroupRef};

/// `F(G)`, the product of the `p`-cores.
pub fn fitting(g: &GroupHandle) -> Result<SubgroupRef> {
    let cores = prime_divisors(g.order()).into_iter().map(|p| p_core(g, p)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&SubgroupRef> = cores.iter().collect();
    Ok(join(g, &refs))
}

/// Preimage of `f(G/K)` in `G`; `f` is applied to `G` itself when `K` is trivial.
fn lift_from_quotient(
    g: &GroupHandle,
    k: &SubgroupRef,
    f: impl Fn(&GroupHandle) -> Result<SubgroupRef>,
) -> Result<SubgroupRef> {
    if k.is_trivial() {
        return f(g);
    }
    let (q, hom) = quotient(g, k)?;
    Ok(hom.preimage(&f(&q)?))
}

/// `F_1 <= F_2 <= ... ` with `F_{j+1}/F_j = F(G/F_j)`, stopping once it stalls.
pub fn upper_fitting_series(g: &GroupHandle) -> Result<SeriesRecord> {
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let last = terms.last().unwrap();
        if last.is_whole() {
            break;
        }
        let next = lift_from_quotient(g, last, fitting)?;
        if next.order() == last.order() {
            break;
        }
        terms.push(next);
    }
    Ok(SeriesRecord { kind: SeriesKind::UpperFitting, terms })
}

/// `F_i(G)` for `i >= 1`.
pub fn upper_fitting(g: &GroupHandle, i: usize) -> Result<SubgroupRef> {
    if i == 0 {
        return Err(Error::Malformed("upper Fitting index starts at 1".into()));
    }
    let mut current = g.trivial_subgroup();
    for _ in 0..i {
        if current.is_whole() {
            break;
        }
        let next = lift_from_quotient(g, &current, fitting)?;
        if next.order() == current.order() {
            break;
        }
        current = next;
    }
    Ok(current)
}

/// Largest normal soluble subgroup.
pub fn soluble_radical(g: &GroupHandle) -> Result<SubgroupRef> {
    let mut r = g.trivial_subgroup();
    loop {
        if r.is_whole() {
            return Ok(r);
        }
        let next = lift_from_quotient(g, &r, fitting)?;
        if next.order() == r.order() {
            return Ok(r);
        }
        r = next;
    }
}

/// Largest normal `p`-soluble subgroup, the top of
/// `1 <= O_{p'} <= O_{p',p} <= O_{p',p,p'} <= ...`.
pub fn p_soluble_radical(g: &GroupHandle, p: u64) -> Result<SubgroupRef> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut k = g.trivial_subgroup();
    let mut want_p_prime = true;
    let mut stalled = 0;
    while stalled < 2 && !k.is_whole() {
        let next = if want_p_prime {
            lift_from_quotient(g, &k, |q| p_prime_core(q, p))?
        } else {
            lift_from_quotient(g, &k, |q| p_core(q, p))?
        };
        if next.order() == k.order() {
            stalled += 1;
        } else {
            stalled = 0;
            k = next;
        }
        want_p_prime = !want_p_prime;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn sym(n: usize) -> GroupHandle {
        let long: Vec<usize> = (1..=n).collect();
        GroupHandle::new(n, vec![cyc(n, &[&[1, 2]]), cyc(n, &[&long])]).unwrap()
    }

    #[test]
    fn s4_fitting_chain() {
        let g = sym(4);
        assert_eq!(fitting(&g).unwrap().order(), 4);
        assert_eq!(upper_fitting(&g, 2).unwrap().order(), 12);
        assert_eq!(upper_fitting(&g, 3).unwrap().order(), 24);
        assert_eq!(upper_fitting(&g, 9).unwrap().order(), 24);
        let orders: Vec<u128> = upper_fitting_series(&g).unwrap().terms.iter().map(SubgroupRef::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(soluble_radical(&g).unwrap().order(), 24);
    }

    #[test]
    fn s5_radicals() {
        let g = sym(5);
        assert!(fitting(&g).unwrap().is_trivial());
        assert!(soluble_radical(&g).unwrap().is_trivial());
        assert!(p_soluble_radical(&g, 2).unwrap().is_trivial());
        assert_eq!(p_soluble_radical(&g, 7).unwrap().order(), 120);
        assert!(matches!(p_soluble_radical(&g, 6), Err(Error::NotPrime(6))));
    }
}
