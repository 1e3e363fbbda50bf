//! The lattice of normal subgroups, chief factors and chief series.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::factors::NormalFactor;
use crate::group::{conjugacy_classes, normal_closure, ElemId, FiniteGroup, Subgroup};

pub const DEFAULT_NODE_CAP: usize = 10_000;

/// Largest order accepted by [`oracle_all_subgroups`].
pub const ORACLE_BOUND: usize = 24;

/// All normal subgroups of a group with containment and covering relations.
#[derive(Clone)]
pub struct NormalLattice {
    group: FiniteGroup,
    nodes: Vec<Subgroup>,
    index: HashMap<Subgroup, usize>,
    below: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl NormalLattice {
    /// Enumerates the normal subgroups as joins of normal closures of single elements.
    ///
    /// Every normal subgroup is the join of the closures `<<g>>` of its
    /// elements, and `<<g>>` depends only on the conjugacy class of `g`, so
    /// closing the class atoms under joins reaches every node.
    pub fn new(group: &FiniteGroup, node_cap: usize) -> Result<NormalLattice> {
        let mut atoms: Vec<Subgroup> = Vec::new();
        let mut seen_atoms = HashSet::new();
        for class in conjugacy_classes(group).iter().skip(1) {
            let a = normal_closure(group, &class[..1]);
            if seen_atoms.insert(a.clone()) {
                atoms.push(a);
            }
        }
        let trivial = group.trivial_subgroup();
        let mut nodes = vec![trivial.clone()];
        let mut index: HashMap<Subgroup, usize> = HashMap::new();
        index.insert(trivial, 0);
        let mut i = 0;
        while i < nodes.len() {
            let n = nodes[i].clone();
            for a in &atoms {
                if a.is_subgroup_of(&n) {
                    continue;
                }
                let j = n.join(a)?;
                if !index.contains_key(&j) {
                    if nodes.len() == node_cap {
                        return Err(Error::NodeCapExceeded { cap: node_cap });
                    }
                    index.insert(j.clone(), nodes.len());
                    nodes.push(j);
                }
            }
            i += 1;
        }
        nodes.sort();
        let index: HashMap<Subgroup, usize> =
            nodes.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let count = nodes.len();
        let mut below = vec![FixedBitSet::with_capacity(count); count];
        for j in 0..count {
            for i in 0..j {
                if nodes[i].order() < nodes[j].order() && nodes[i].is_subgroup_of(&nodes[j]) {
                    below[j].insert(i);
                }
            }
        }
        let mut lower_covers = vec![Vec::new(); count];
        let mut upper_covers = vec![Vec::new(); count];
        for j in 0..count {
            let mut shadow = FixedBitSet::with_capacity(count);
            for k in below[j].ones() {
                shadow.union_with(&below[k]);
            }
            for i in below[j].ones() {
                if !shadow.contains(i) {
                    lower_covers[j].push(i);
                    upper_covers[i].push(j);
                }
            }
        }
        Ok(NormalLattice {
            group: group.clone(),
            nodes,
            index,
            below,
            lower_covers,
            upper_covers,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Nodes sorted by order, then by member set. Index 0 is the trivial
    /// subgroup and the last index is the whole group.
    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h).copied()
    }

    fn require(&self, h: &Subgroup) -> Result<usize> {
        if !h.parent().same_group(&self.group) {
            return Err(Error::DifferentParents);
        }
        self.index_of(h)
            .ok_or_else(|| Error::NotNormal(format!("subgroup of order {}", h.order())))
    }

    /// Containment `nodes[i] <= nodes[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.below[j].contains(i)
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// Minimal non-trivial normal subgroups.
    pub fn minimal_normal(&self) -> Vec<usize> {
        if self.nodes.len() == 1 {
            return Vec::new();
        }
        self.upper_covers[0].clone()
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|j| self.lower_covers[j].iter().map(move |&i| (i, j)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn join_index(&self, i: usize, j: usize) -> usize {
        if self.leq(i, j) {
            return j;
        }
        if self.leq(j, i) {
            return i;
        }
        (0..self.len())
            .find(|&k| self.leq(i, k) && self.leq(j, k))
            .expect("whole group is an upper bound")
    }

    pub fn meet_index(&self, i: usize, j: usize) -> usize {
        (0..self.len())
            .rev()
            .find(|&k| self.leq(k, i) && self.leq(k, j))
            .expect("trivial group is a lower bound")
    }

    /// Nodes `M` with `lower < M < upper`.
    pub fn strictly_between(&self, lower: usize, upper: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&m| m != lower && m != upper && self.leq(lower, m) && self.leq(m, upper))
            .collect()
    }

    /// Whether `K/L` is a chief factor: both normal, `L < K`, nothing normal in between.
    pub fn is_chief_factor(&self, k: &Subgroup, l: &Subgroup) -> Result<bool> {
        let ki = self.require(k)?;
        let li = self.require(l)?;
        if ki == li || !self.leq(li, ki) {
            return Err(Error::NotNested(format!(
                "order {} is not strictly below order {}",
                l.order(),
                k.order()
            )));
        }
        Ok(self.lower_covers[ki].contains(&li))
    }

    /// Covering pairs of the lattice, ordered by (upper, lower) index.
    pub fn chief_factor_indices(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|j| self.lower_covers[j].iter().map(move |&i| (j, i)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn chief_factors(&self) -> Vec<NormalFactor> {
        self.chief_factor_indices()
            .into_iter()
            .map(|(k, l)| NormalFactor::new_unchecked(self.nodes[k].clone(), self.nodes[l].clone()))
            .collect()
    }

    /// Maximal chains `1 = G_0 < ... < G_n = G`, at most `max_series` of them.
    pub fn chief_series_iter(&self, max_series: usize) -> ChiefSeriesIter<'_> {
        ChiefSeriesIter {
            lattice: self,
            stack: vec![(0, 0)],
            path: vec![0],
            remaining: max_series,
        }
    }

    /// Index chains corresponding to [`chief_series_iter`](Self::chief_series_iter).
    pub fn chief_series_indices(&self, max_series: usize) -> Vec<Vec<usize>> {
        let mut it = self.chief_series_iter(max_series);
        let mut out = Vec::new();
        while let Some(path) = it.next_indices() {
            out.push(path);
        }
        out
    }
}

/// Depth-first enumeration of chief series.
pub struct ChiefSeriesIter<'a> {
    lattice: &'a NormalLattice,
    /// `(node, next upper-cover position)`
    stack: Vec<(usize, usize)>,
    path: Vec<usize>,
    remaining: usize,
}

impl ChiefSeriesIter<'_> {
    fn next_indices(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        let top = self.lattice.top();
        loop {
            let (node, pos) = *self.stack.last()?;
            if node == top {
                let out = self.path.clone();
                self.stack.pop();
                self.path.pop();
                self.remaining -= 1;
                return Some(out);
            }
            let ups = &self.lattice.upper_covers[node];
            if pos < ups.len() {
                let next = ups[pos];
                self.stack.last_mut().expect("non-empty").1 += 1;
                self.stack.push((next, 0));
                self.path.push(next);
            } else {
                self.stack.pop();
                self.path.pop();
            }
        }
    }
}

impl Iterator for ChiefSeriesIter<'_> {
    type Item = Vec<Subgroup>;

    fn next(&mut self) -> Option<Vec<Subgroup>> {
        let idx = self.next_indices()?;
        Some(idx.into_iter().map(|i| self.lattice.nodes[i].clone()).collect())
    }
}

/// Every subgroup of a small group, by closing `<H, x>` from the trivial subgroup.
pub fn oracle_all_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if group.order() > ORACLE_BOUND {
        return Err(Error::OracleBoundExceeded {
            order: group.order(),
            bound: ORACLE_BOUND,
        });
    }
    let mut seen = HashSet::new();
    let trivial = group.trivial_subgroup();
    seen.insert(trivial.clone());
    let mut all = vec![trivial];
    let mut i = 0;
    while i < all.len() {
        let h = all[i].clone();
        for x in group.elements() {
            if h.contains(x) {
                continue;
            }
            let mut seed: Vec<ElemId> = h.generators().to_vec();
            seed.push(x);
            let k = crate::group::subgroup_generated(group, &seed);
            debug_assert_eq!(group.order() % k.order(), 0);
            if seen.insert(k.clone()) {
                all.push(k);
            }
        }
        i += 1;
    }
    all.sort();
    Ok(all)
}


impl std::fmt::Debug for NormalLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "NormalLattice({} nodes)", self.nodes.len())
    }
}
