//! Base and strong generating set for a permutation group.
//!
//! Construction runs a seeded random Schreier-Sims phase and then a
//! deterministic pass that sifts every Schreier generator of every level,
//! so the finished chain is certified and identical across runs.

use std::borrow::Cow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
/// Transversals with more entries than this (orbit length times degree) are
/// kept as Schreier trees instead of explicit coset representatives.
const EXPLICIT_LIMIT: usize = 1 << 22;
const RANDOM_SEED: u64 = 0x6365_6e74_7261;
const RANDOM_QUIET_ROUNDS: usize = 24;

#[derive(Clone, Debug)]
enum Transversal {
    Explicit {
        reps: Vec<Permutation>,
        invs: Vec<Permutation>,
    },
    /// For each orbit position: (generator index, orbit position of the predecessor).
    Tree {
        parent: Vec<(u32, u32)>,
    },
}

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base: usize,
    pub(crate) gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    pub(crate) orbit: Vec<usize>,
    orbit_pos: Vec<u32>,
    transversal: Transversal,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            gens_inv: Vec::new(),
            orbit: Vec::new(),
            orbit_pos: vec![NOT_IN_ORBIT; degree],
            transversal: Transversal::Tree { parent: Vec::new() },
        };
        level.rebuild_orbit();
        level
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.orbit_pos.len();
        self.orbit_pos.iter_mut().for_each(|p| *p = NOT_IN_ORBIT);
        self.orbit.clear();
        self.orbit.push(self.base);
        self.orbit_pos[self.base] = 0;
        let mut parent = vec![(u32::MAX, u32::MAX)];
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            for (j, g) in self.gens.iter().enumerate() {
                let img = g.apply(pt);
                if self.orbit_pos[img] == NOT_IN_ORBIT {
                    self.orbit_pos[img] = self.orbit.len() as u32;
                    self.orbit.push(img);
                    parent.push((j as u32, head as u32));
                }
            }
            head += 1;
        }
        if self.orbit.len().saturating_mul(degree) <= EXPLICIT_LIMIT {
            let mut reps: Vec<Permutation> = Vec::with_capacity(self.orbit.len());
            reps.push(Permutation::identity(degree));
            for (pos, &(j, pred)) in parent.iter().enumerate().skip(1) {
                let r = reps[pred as usize].compose(&self.gens[j as usize]);
                debug_assert_eq!(r.apply(self.base), self.orbit[pos]);
                reps.push(r);
            }
            let invs = reps.iter().map(Permutation::inverse).collect();
            self.transversal = Transversal::Explicit { reps, invs };
        } else {
            self.transversal = Transversal::Tree { parent };
        }
    }

    #[inline]
    pub(crate) fn position(&self, point: usize) -> Option<usize> {
        match self.orbit_pos[point] {
            NOT_IN_ORBIT => None,
            p => Some(p as usize),
        }
    }

    /// Coset representative mapping the base point to `orbit[pos]`.
    pub(crate) fn rep(&self, pos: usize) -> Cow<'_, Permutation> {
        match &self.transversal {
            Transversal::Explicit { reps, .. } => Cow::Borrowed(&reps[pos]),
            Transversal::Tree { parent } => {
                let mut path = Vec::new();
                let mut cur = pos;
                while cur != 0 {
                    let (j, pred) = parent[cur];
                    path.push(j as usize);
                    cur = pred as usize;
                }
                let mut r = Permutation::identity(self.orbit_pos.len());
                for &j in path.iter().rev() {
                    r = r.compose(&self.gens[j]);
                }
                Cow::Owned(r)
            }
        }
    }

    pub(crate) fn rep_inv(&self, pos: usize) -> Cow<'_, Permutation> {
        match &self.transversal {
            Transversal::Explicit { invs, .. } => Cow::Borrowed(&invs[pos]),
            Transversal::Tree { parent } => {
                let mut r = Permutation::identity(self.orbit_pos.len());
                let mut cur = pos;
                while cur != 0 {
                    let (j, pred) = parent[cur];
                    r = r.compose(&self.gens_inv[j as usize]);
                    cur = pred as usize;
                }
                Cow::Owned(r)
            }
        }
    }

    /// `g * rep(pos)^-1`
    fn strip(&self, g: &Permutation, pos: usize) -> Permutation {
        g.compose(&self.rep_inv(pos))
    }
}

/// Stabilizer chain `G = G_0 >= G_1 >= ... >= G_k = 1` with `G_i` the
/// pointwise stabilizer of the first `i` base points.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        StabChain::with_base_prefix(degree, gens, &[])
    }

    /// Builds a chain whose base starts with `prefix` (points may be redundant).
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain { degree, levels: prefix.iter().map(|&b| Level::new(b, degree)).collect() };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            chain.insert_strong(g.clone(), 0, chain.fixed_depth(g));
        }
        chain.random_phase(&gens);
        chain.complete(chain.levels.len());
        chain
    }

    /// Adds a generator to an existing chain and re-certifies it.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (res, drop) = self.sift_from(g, 0);
        if res.is_identity() {
            return false;
        }
        self.insert_strong(res, 0, drop);
        self.complete(drop + 1);
        true
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Group order; saturates at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Number of leading base points fixed by `g`, i.e. the deepest level `g` belongs to.
    fn fixed_depth(&self, g: &Permutation) -> usize {
        self.levels.iter().take_while(|l| g.apply(l.base) == l.base).count()
    }

    /// Sifts `g` starting at level `from`; returns the residue and the level it dropped out at
    /// (`levels.len()` when it passed every level).
    pub(crate) fn sift_from(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match level.position(beta) {
                Some(pos) => {
                    if pos != 0 {
                        h = level.strip(&h, pos);
                    }
                }
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, _) = self.sift_from(g, 0);
        res.is_identity()
    }

    /// Mixed-radix index of `g` in the enumeration order of [`StabChain::element_at`].
    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree {
            return None;
        }
        let mut h = Cow::Borrowed(g);
        let mut index = 0usize;
        let mut stride = 1usize;
        for level in &self.levels {
            let pos = level.position(h.apply(level.base))?;
            index += pos * stride;
            stride *= level.orbit.len();
            if pos != 0 {
                h = Cow::Owned(level.strip(&h, pos));
            }
        }
        h.is_identity().then_some(index)
    }

    pub fn element_at(&self, mut index: usize) -> Permutation {
        let mut positions = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            positions.push(index % level.orbit.len());
            index /= level.orbit.len();
        }
        // g = u_k ... u_1: deepest level applied first
        let mut g = Permutation::identity(self.degree);
        for (level, &pos) in self.levels.iter().zip(positions.iter()).rev() {
            if pos != 0 {
                g = g.compose(&level.rep(pos));
            }
        }
        g
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        // prepend deeper levels: element(index) = u_k ... u_1, index radix starts at level 1
        for level in self.levels.iter().rev() {
            let reps: Vec<Permutation> = (0..level.orbit.len()).map(|p| level.rep(p).into_owned()).collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            // index = pos_1 + |D_1| (pos_2 + ...): level-1 position varies fastest
            for g in &out {
                for r in &reps {
                    next.push(g.compose(r));
                }
            }
            out = next;
        }
        out
    }

    /// Adds `g` as a strong generator to levels `from..=to`, appending a level if needed.
    fn insert_strong(&mut self, g: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = g.first_moved().expect("identity residue is never inserted");
            self.levels.push(Level::new(b, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.add_gen(g.clone());
        }
    }

    fn random_phase(&mut self, gens: &[Permutation]) {
        if gens.is_empty() {
            return;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
        let mut state: Vec<Permutation> = gens.to_vec();
        while state.len() < 10 {
            state.push(gens[state.len() % gens.len()].clone());
        }
        let mut accum = Permutation::identity(self.degree);
        let mut quiet = 0;
        let mut rounds = 0;
        while quiet < RANDOM_QUIET_ROUNDS && rounds < 2000 {
            rounds += 1;
            let i = rng.gen_range(0..state.len());
            let mut j = rng.gen_range(0..state.len() - 1);
            if j >= i {
                j += 1;
            }
            state[i] =
                if rng.gen_bool(0.5) { state[i].compose(&state[j]) } else { state[i].compose(&state[j].inverse()) };
            accum = accum.compose(&state[i]);
            let (res, drop) = self.sift_from(&accum, 0);
            if res.is_identity() {
                quiet += 1;
            } else {
                quiet = 0;
                self.insert_strong(res, 0, drop);
            }
        }
    }

    /// Deterministic completion: every Schreier generator of levels below `start` must sift.
    fn complete(&mut self, start: usize) {
        let mut i = start.min(self.levels.len());
        while i > 0 {
            let lvl = i - 1;
            let mut restart = None;
            'scan: for pos in 0..self.levels[lvl].orbit.len() {
                for j in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let delta = level.orbit[pos];
                    let gen = &level.gens[j];
                    let img_pos = level.position(gen.apply(delta)).expect("orbit is closed");
                    let schreier = level.rep(pos).compose(gen).compose(&level.rep_inv(img_pos));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (res, drop) = self.sift_from(&schreier, lvl + 1);
                    if !res.is_identity() {
                        self.insert_strong(res, lvl + 1, drop);
                        restart = Some(drop + 1);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(r) => i = r,
                None => i -= 1,
            }
        }
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
    fn symmetric_group_orders() {
        for n in 2..=8usize {
            let long: Vec<usize> = (1..=n).collect();
            let chain = StabChain::new(n, &[cyc(n, &[&[1, 2]]), cyc(n, &[&long])]);
            let expected: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), expected, "S_{}", n);
        }
    }

    #[test]
    fn index_round_trips() {
        let chain = StabChain::new(5, &[cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2, 3]])]);
        assert_eq!(chain.order(), 60);
        let elems = chain.elements();
        assert_eq!(elems.len(), 60);
        for (i, g) in elems.iter().enumerate() {
            assert_eq!(chain.index_of(g), Some(i));
            assert_eq!(&chain.element_at(i), g);
        }
        assert!(!chain.contains(&cyc(5, &[&[1, 2]])));
        assert_eq!(chain.index_of(&cyc(5, &[&[1, 2]])), None);
    }

    #[test]
    fn prescribed_prefix_is_kept() {
        let chain = StabChain::with_base_prefix(4, &[cyc(4, &[&[1, 2]])], &[3, 2]);
        assert_eq!(&chain.base()[..2], &[3, 2]);
        assert_eq!(chain.order(), 2);
    }

    #[test]
    fn extend_grows_group() {
        let mut chain = StabChain::new(4, &[cyc(4, &[&[1, 2]])]);
        assert!(chain.extend(&cyc(4, &[&[1, 2, 3, 4]])));
        assert_eq!(chain.order(), 24);
        assert!(!chain.extend(&cyc(4, &[&[2, 3]])));
    }
}
