use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation};

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[points.into_iter().collect()])
}

fn out_of_range(what: &str, n: usize) -> Error {
    Error::Unsupported(format!("{what} with parameter {n}"))
}

/// `S_n` in its natural action.
pub fn make_symmetric(n: usize) -> Result<GroupHandle> {
    match n {
        0 => Err(out_of_range("symmetric group", n)),
        1 => GroupHandle::trivial(1),
        2 => GroupHandle::new(2, vec![cycle(2, [1, 2])?]),
        _ => GroupHandle::new(n, vec![cycle(n, [1, 2])?, cycle(n, 1..=n)?]),
    }
}

/// `A_n` in its natural action.
pub fn make_alternating(n: usize) -> Result<GroupHandle> {
    match n {
        0 => Err(out_of_range("alternating group", n)),
        1 | 2 => GroupHandle::trivial(n),
        3 => GroupHandle::new(3, vec![cycle(3, [1, 2, 3])?]),
        _ if n % 2 == 1 => GroupHandle::new(n, vec![cycle(n, [1, 2, 3])?, cycle(n, 1..=n)?]),
        _ => GroupHandle::new(n, vec![cycle(n, [1, 2, 3])?, cycle(n, 2..=n)?]),
    }
}

/// `C_n` generated by an `n`-cycle.
pub fn make_cyclic(n: usize) -> Result<GroupHandle> {
    match n {
        0 => Err(out_of_range("cyclic group", n)),
        1 => GroupHandle::trivial(1),
        _ => GroupHandle::new(n, vec![cycle(n, 1..=n)?]),
    }
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn make_dihedral(n: usize) -> Result<GroupHandle> {
    if n < 3 {
        return Err(out_of_range("dihedral group on n points", n));
    }
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    GroupHandle::new(n, vec![cycle(n, 1..=n)?, Permutation::from_images(reflection)?])
}

/// `(C_p)^k` as `k` disjoint `p`-cycles on `pk` points.
pub fn make_elementary_abelian(p: u64, k: usize) -> Result<GroupHandle> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(out_of_range("elementary abelian rank", k));
    }
    let p = p as usize;
    let degree = p * k;
    let gens = (0..k).map(|i| cycle(degree, i * p + 1..=i * p + p)).collect::<Result<Vec<_>>>()?;
    GroupHandle::new(degree, gens)
}

/// The quaternion group in its regular action on 8 points.
pub fn make_quaternion() -> Result<GroupHandle> {
    let i = Permutation::from_cycles(8, &[vec![1, 2, 3, 4], vec![5, 6, 7, 8]])?;
    let j = Permutation::from_cycles(8, &[vec![1, 5, 3, 7], vec![2, 8, 4, 6]])?;
    GroupHandle::new(8, vec![i, j])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        assert_eq!(make_symmetric(1).unwrap().order(), 1);
        for n in 3..=8 {
            let half: u128 = (1..=n as u128).product::<u128>() / 2;
            assert_eq!(make_alternating(n).unwrap().order(), half, "A{n}");
        }
        assert_eq!(make_cyclic(12).unwrap().order(), 12);
        assert_eq!(make_dihedral(5).unwrap().order(), 10);
        let e = make_elementary_abelian(2, 3).unwrap();
        assert_eq!(e.order(), 8);
        assert!(e.generators().iter().all(|x| x.order() == 2));
        let q = make_quaternion().unwrap();
        assert_eq!(q.order(), 8);
        assert!(!q.is_abelian());
        assert_eq!(q.element_list().unwrap().iter().filter(|x| x.order() == 2).count(), 1);
        assert!(make_dihedral(2).is_err());
        assert!(make_elementary_abelian(4, 2).is_err());
    }
}
