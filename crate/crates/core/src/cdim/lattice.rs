use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::permcore::{conjugacy_classes, GroupHandle, Permutation, SubgroupRef};

/// All centralizers `C_G(S)` of a group, as element masks closed under
/// intersection, with their inclusion covers.
#[derive(Clone, Debug)]
pub struct CentralizerLattice {
    ambient: GroupHandle,
    masks: Vec<FixedBitSet>,
    orders: Vec<usize>,
    defining: Vec<Vec<usize>>,
    covers: Vec<(usize, usize)>,
    element_node: Vec<usize>,
}

impl CentralizerLattice {
    pub fn new(g: &GroupHandle) -> Result<Self> {
        let n = g.check_enumerable()?;
        let elements = g.element_list()?;
        let cap = g.caps().lattice_nodes;

        // element centralizers, one filter per class and conjugation for the rest
        let mut element_mask: Vec<Option<FixedBitSet>> = vec![None; n];
        for class in conjugacy_classes(g)? {
            let rep = &elements[class.representative];
            let mut base = FixedBitSet::with_capacity(n);
            for (i, y) in elements.iter().enumerate() {
                if y.commutes_with(rep) {
                    base.insert(i);
                }
            }
            let base_members: Vec<usize> = base.ones().collect();
            for (idx, c) in &class.members {
                if c.is_identity() {
                    element_mask[*idx] = Some(base.clone());
                    continue;
                }
                let mut m = FixedBitSet::with_capacity(n);
                for &i in &base_members {
                    m.insert(g.index_of(&elements[i].conjugate_by(c)).expect("conjugate stays in G"));
                }
                element_mask[*idx] = Some(m);
            }
        }

        let mut whole = FixedBitSet::with_capacity(n);
        whole.insert_range(..);
        let mut lookup: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut masks = vec![whole.clone()];
        let mut defining: Vec<Vec<usize>> = vec![Vec::new()];
        lookup.insert(whole, 0);
        let mut element_node = vec![0; n];
        let mut atoms: Vec<(usize, usize)> = Vec::new();
        for (i, m) in element_mask.into_iter().enumerate() {
            let m = m.expect("every element lies in a class");
            let node = match lookup.get(&m) {
                Some(&node) => node,
                None => {
                    let node = masks.len();
                    lookup.insert(m.clone(), node);
                    masks.push(m);
                    defining.push(vec![i]);
                    atoms.push((node, i));
                    node
                }
            };
            element_node[i] = node;
        }

        let mut head = 1;
        while head < masks.len() {
            for &(atom, x) in &atoms {
                let mut m = masks[head].clone();
                m.intersect_with(&masks[atom]);
                if lookup.contains_key(&m) {
                    continue;
                }
                if masks.len() >= cap {
                    return Err(Error::LatticeTooLarge(cap));
                }
                let mut def = defining[head].clone();
                def.push(x);
                lookup.insert(m.clone(), masks.len());
                masks.push(m);
                defining.push(def);
            }
            head += 1;
        }

        let orders: Vec<usize> = masks.iter().map(|m| m.count_ones(..)).collect();
        let mut lattice =
            CentralizerLattice { ambient: g.clone(), masks, orders, defining, covers: Vec::new(), element_node };
        lattice.covers = lattice.compute_covers();
        Ok(lattice)
    }

    fn by_decreasing_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.masks.len()).collect();
        idx.sort_by(|&a, &b| self.orders[b].cmp(&self.orders[a]).then(a.cmp(&b)));
        idx
    }

    fn compute_covers(&self) -> Vec<(usize, usize)> {
        let order = self.by_decreasing_order();
        let mut covers = Vec::new();
        for (pos, &upper) in order.iter().enumerate() {
            let mut accepted: Vec<usize> = Vec::new();
            for &lower in &order[pos + 1..] {
                let (lo, up) = (self.orders[lower], self.orders[upper]);
                if lo == up || up % lo != 0 || !self.masks[lower].is_subset(&self.masks[upper]) {
                    continue;
                }
                if accepted.iter().any(|&c| self.masks[lower].is_subset(&self.masks[c])) {
                    continue;
                }
                accepted.push(lower);
                covers.push((lower, upper));
            }
        }
        covers
    }

    pub fn ambient(&self) -> &GroupHandle {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        0
    }

    /// Index of the centre, the smallest node.
    pub fn bottom(&self) -> usize {
        (0..self.len()).min_by_key(|&i| (self.orders[i], i)).expect("lattice has a node")
    }

    pub fn mask(&self, node: usize) -> &FixedBitSet {
        &self.masks[node]
    }

    pub fn node_order(&self, node: usize) -> usize {
        self.orders[node]
    }

    /// Element indices `S` with `node = C_G(S)`.
    pub fn defining_set(&self, node: usize) -> &[usize] {
        &self.defining[node]
    }

    /// Node of `C_G(x)` for the element of index `x`.
    pub fn element_centralizer(&self, x: usize) -> usize {
        self.element_node[x]
    }

    /// Pairs `(lower, upper)` with nothing strictly between.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of_mask(&self, mask: &FixedBitSet) -> Option<usize> {
        self.masks.iter().position(|m| m == mask)
    }

    pub fn subgroup(&self, node: usize) -> SubgroupRef {
        self.ambient.subgroup_from_mask(&self.masks[node])
    }

    pub fn nodes(&self) -> Vec<SubgroupRef> {
        (0..self.len()).map(|i| self.subgroup(i)).collect()
    }

    /// Number of nodes on a longest strict chain from the top down to each node.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.len()];
        depth[self.top()] = 1;
        let mut upward: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(lower, upper) in &self.covers {
            upward[lower].push(upper);
        }
        for node in self.by_decreasing_order() {
            if let Some(best) = upward[node].iter().map(|&u| depth[u]).max() {
                depth[node] = best + 1;
            }
        }
        depth
    }

    /// A longest strict chain from the top, as node indices.
    pub fn longest_chain(&self) -> Vec<usize> {
        let depth = self.depths();
        let best = *depth.iter().max().expect("lattice has a node");
        let mut node = (0..self.len()).find(|&i| depth[i] == best).unwrap();
        let mut chain = vec![node];
        while depth[node] > 1 {
            node = self
                .covers
                .iter()
                .filter(|&&(lower, upper)| lower == node && depth[upper] + 1 == depth[node])
                .map(|&(_, upper)| upper)
                .min()
                .expect("a deeper node has a parent one level up");
            chain.push(node);
        }
        chain.reverse();
        chain
    }

    pub(crate) fn elements(&self) -> &[Permutation] {
        self.ambient.element_list().expect("lattice groups are enumerable")
    }
}

/// `C_G(S)` for a set of element indices, via the element centralizers.
pub(crate) fn mask_of_set(lattice: &CentralizerLattice, set: &[usize]) -> FixedBitSet {
    let mut m = lattice.mask(lattice.top()).clone();
    for &x in set {
        m.intersect_with(lattice.mask(lattice.element_centralizer(x)));
    }
    m
}
