//! Brute-force oracles sharing no code with the library beyond reading
//! generator images.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use centra::permcore::{GroupHandle, Permutation, SubgroupRef};
use fixedbitset::FixedBitSet;

pub type P = Vec<u32>;

/// `a` then `b`.
pub fn compose(a: &[u32], b: &[u32]) -> P {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inverse(a: &[u32]) -> P {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

pub fn identity(n: usize) -> P {
    (0..n as u32).collect()
}

pub fn images(x: &Permutation) -> P {
    x.images().to_vec()
}

/// Every element generated by `gens`, by breadth-first search.
pub fn closure(degree: usize, gens: &[P]) -> Vec<P> {
    let mut seen: HashSet<P> = HashSet::new();
    let id = identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    queue.sort();
    queue
}

/// A finite group as an explicit multiplication table.
pub struct Finite {
    pub degree: usize,
    pub elems: Vec<P>,
    pub index: HashMap<P, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    pub id: usize,
}

pub type Set = FixedBitSet;

impl Finite {
    pub fn new(g: &GroupHandle) -> Self {
        let gens: Vec<P> = g.generators().iter().map(images).collect();
        Finite::from_gens(g.degree(), &gens)
    }

    pub fn from_gens(degree: usize, gens: &[P]) -> Self {
        let elems = closure(degree, gens);
        let index: HashMap<P, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&compose(&elems[i], &elems[j])] as u32;
            }
        }
        let inv = elems.iter().map(|e| index[&inverse(e)] as u32).collect();
        let id = index[&identity(degree)];
        Finite { degree, elems, index, mul, inv, id }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `b^-1 a b`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn set_of(&self, items: impl IntoIterator<Item = usize>) -> Set {
        let mut s = Set::with_capacity(self.len());
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn whole(&self) -> Set {
        self.set_of(0..self.len())
    }

    pub fn trivial(&self) -> Set {
        self.set_of([self.id])
    }

    pub fn gen(&self, gens: &[usize]) -> Set {
        let mut s = self.trivial();
        let mut queue = vec![self.id];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !s.contains(y) {
                    s.insert(y);
                    queue.push(y);
                }
            }
        }
        s
    }

    /// Normal closure of `items` inside the subgroup `within`.
    pub fn normal_closure(&self, items: &[usize], within: &Set) -> Set {
        let mut gens: Vec<usize> = Vec::new();
        for &x in items {
            for w in within.ones() {
                gens.push(self.conj(x, w));
            }
        }
        gens.sort();
        gens.dedup();
        self.gen(&gens)
    }

    pub fn centralizer(&self, items: &[usize], within: &Set) -> Set {
        self.set_of(within.ones().filter(|&g| items.iter().all(|&x| self.mul(x, g) == self.mul(g, x))))
    }

    pub fn center(&self, h: &Set) -> Set {
        let items: Vec<usize> = h.ones().collect();
        self.centralizer(&items, h)
    }

    pub fn derived(&self, h: &Set) -> Set {
        let gens = self.small_gens(h);
        let mut comms = Vec::new();
        for &a in &gens {
            for &b in &gens {
                comms.push(self.comm(a, b));
            }
        }
        self.normal_closure(&comms, h)
    }

    /// A generating set of `h`, greedily.
    pub fn small_gens(&self, h: &Set) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for x in h.ones() {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.gen(&gens);
            }
        }
        gens
    }

    pub fn is_normal_in(&self, n: &Set, h: &Set) -> bool {
        n.ones().all(|x| h.ones().all(|w| n.contains(self.conj(x, w))))
    }

    pub fn is_perfect(&self, h: &Set) -> bool {
        self.derived(h) == *h
    }

    /// Every nontrivial normal subgroup of `h/z` is the whole quotient.
    pub fn quotient_is_simple(&self, h: &Set, z: &Set) -> bool {
        if h.count_ones(..) == z.count_ones(..) {
            return false;
        }
        let zs: Vec<usize> = z.ones().collect();
        h.ones().filter(|&x| !z.contains(x)).all(|x| {
            let mut items = zs.clone();
            items.push(x);
            self.normal_closure(&items, h) == *h
        })
    }

    pub fn is_quasisimple(&self, h: &Set) -> bool {
        self.is_perfect(h) && self.quotient_is_simple(h, &self.center(h))
    }

    pub fn is_subnormal(&self, h: &Set) -> bool {
        let gens: Vec<usize> = h.ones().collect();
        let mut cur = self.whole();
        loop {
            if cur == *h {
                return true;
            }
            let next = self.normal_closure(&gens, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    pub fn class_reps(&self) -> Vec<usize> {
        let mut seen = self.set_of([]);
        let mut reps = Vec::new();
        for x in 0..self.len() {
            if seen.contains(x) {
                continue;
            }
            reps.push(x);
            for g in 0..self.len() {
                seen.insert(self.conj(x, g));
            }
        }
        reps
    }

    /// All subnormal quasisimple subgroups. Quasisimple groups are
    /// 2-generated, and the set is closed under conjugation, so one
    /// generator can be taken from a list of class representatives.
    pub fn components(&self) -> HashSet<Vec<usize>> {
        let mut tried: HashSet<Vec<usize>> = HashSet::new();
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        for a in self.class_reps() {
            for b in 0..self.len() {
                let h = self.gen(&[a, b]);
                let key: Vec<usize> = h.ones().collect();
                if !tried.insert(key.clone()) {
                    continue;
                }
                if h.count_ones(..) > 1 && self.is_quasisimple(&h) && self.is_subnormal(&h) {
                    for g in 0..self.len() {
                        let mut c: Vec<usize> = key.iter().map(|&x| self.conj(x, g)).collect();
                        c.sort();
                        found.insert(c);
                    }
                }
            }
        }
        found
    }

    /// Element set of a library subgroup in this table's numbering.
    pub fn set_of_subgroup(&self, h: &SubgroupRef) -> Set {
        let items: Vec<usize> = h.group().element_list().unwrap().iter().map(|x| self.index[&images(x)]).collect();
        self.set_of(items)
    }

    /// All centralizers `C_G(S)`: element centralizers closed under meets.
    pub fn centralizer_lattice(&self) -> Vec<Set> {
        let whole = self.whole();
        let atoms: Vec<Set> = (0..self.len()).map(|x| self.centralizer(&[x], &whole)).collect();
        let mut all: HashSet<Set> = HashSet::new();
        all.insert(whole.clone());
        let mut frontier = vec![whole];
        while let Some(c) = frontier.pop() {
            for a in &atoms {
                let mut m = c.clone();
                m.intersect_with(a);
                if all.insert(m.clone()) {
                    frontier.push(m);
                }
            }
        }
        let mut out: Vec<Set> = all.into_iter().collect();
        out.sort_by_key(|s| std::cmp::Reverse(s.count_ones(..)));
        out
    }

    /// All subgroups, from cyclic subgroups closed under joins.
    pub fn subgroups(&self) -> Vec<Set> {
        let cyclic: HashSet<Set> = (0..self.len()).map(|x| self.gen(&[x])).collect();
        let cyclic: Vec<Set> = cyclic.into_iter().collect();
        let mut all: HashSet<Set> = cyclic.iter().cloned().collect();
        let mut frontier: Vec<Set> = cyclic.clone();
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let mut gens = self.small_gens(&h);
                gens.extend(self.small_gens(c));
                let j = self.gen(&gens);
                if all.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        all.into_iter().collect()
    }
}

/// Number of strict inclusions in a longest chain of the family, by
/// memoized depth-first search.
pub fn longest_chain(family: &[Set]) -> usize {
    fn go(i: usize, family: &[Set], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut best = 0;
        for j in 0..family.len() {
            if j != i && family[j].is_subset(&family[i]) && family[j] != family[i] {
                best = best.max(1 + go(j, family, memo));
            }
        }
        memo[i] = Some(best);
        best
    }
    let mut memo = vec![None; family.len()];
    (0..family.len()).map(|i| go(i, family, &mut memo)).max().unwrap_or(0)
}

/// Subgroup chain length of the group itself.
pub fn chain_length(f: &Finite) -> usize {
    longest_chain(&f.subgroups())
}

/// Brute-force centralizer of a list of permutations inside `G`.
pub fn brute_centralizer(g: &GroupHandle, s: &[Permutation]) -> HashSet<P> {
    let s: Vec<P> = s.iter().map(images).collect();
    let gens: Vec<P> = g.generators().iter().map(images).collect();
    closure(g.degree(), &gens).into_iter().filter(|x| s.iter().all(|y| compose(x, y) == compose(y, x))).collect()
}

pub fn element_set(h: &GroupHandle) -> HashSet<P> {
    h.element_list().unwrap().iter().map(images).collect()
}

/// Prime factorization by trial division.
pub fn factor(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn omega(n: u128) -> usize {
    factor(n).iter().map(|&(_, e)| e as usize).sum()
}
