//! Automorphisms by generator-image search.
//!
//! A small generating set is chosen greedily; each generator may only map
//! to elements with the same order and conjugacy class size, and pairs of
//! images must reproduce the orders of pairwise products. Surviving image
//! tuples are extended along a breadth-first word walk and kept when the
//! extension is consistent and bijective.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use super::{conjugacy_classes, Closure, ElemId, FiniteGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};

/// Default cap on candidate image assignments.
pub const DEFAULT_SEARCH_CAP: usize = 20_000_000;

/// Counters from one search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AutSearchStats {
    pub generators: usize,
    pub candidates: usize,
    pub automorphisms: usize,
}

struct Search<'g> {
    group: &'g FiniteGroup,
    gens: Vec<ElemId>,
    candidates: Vec<Vec<ElemId>>,
    /// `pair_order[i][j]`: orders of `gens[i] gens[j]`, `gens[i] gens[j]^-1`
    /// and `[gens[i], gens[j]]` for `j < i`.
    pair_order: Vec<Vec<[usize; 3]>>,
    orders: Vec<usize>,
    /// BFS word walk: `(source element, generator index, product)`.
    walk: Vec<(ElemId, usize, ElemId)>,
    cap: usize,
    stats: AutSearchStats,
    map: Vec<ElemId>,
    used: FixedBitSet,
}

impl<'g> Search<'g> {
    fn new(group: &'g FiniteGroup, cap: usize) -> Self {
        let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();
        let mut class_size = vec![0usize; group.order()];
        for class in conjugacy_classes(group) {
            for &x in &class {
                class_size[x as usize] = class.len();
            }
        }
        let key = |x: ElemId| (orders[x as usize], class_size[x as usize]);
        let mut bucket_size = std::collections::HashMap::new();
        for x in group.elements() {
            *bucket_size.entry(key(x)).or_insert(0usize) += 1;
        }
        let mut ranked: Vec<ElemId> = group.elements().skip(1).collect();
        ranked.sort_by_key(|&x| (std::cmp::Reverse(orders[x as usize]), bucket_size[&key(x)], x));
        let mut closure = Closure::new(group);
        let mut gens = Vec::new();
        for x in ranked {
            if closure.len() == group.order() {
                break;
            }
            if closure.add(x) {
                gens.push(x);
            }
        }
        // prune generators that became redundant
        let mut i = 0;
        while i < gens.len() && gens.len() > 1 {
            let mut c = Closure::new(group);
            for (j, &g) in gens.iter().enumerate() {
                if j != i {
                    c.add(g);
                }
            }
            if c.len() == group.order() {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        let cost = |gs: &[ElemId]| -> f64 { gs.iter().map(|&g| bucket_size[&key(g)] as f64).product() };
        if let Some(pair) = two_generators(group, &orders, &key, cost(&gens)) {
            gens = pair;
        }
        let candidates = gens
            .iter()
            .map(|&g| group.elements().filter(|&y| key(y) == key(g)).collect())
            .collect();
        let pair_order = (0..gens.len())
            .map(|i| (0..i).map(|j| pair_signature(group, &orders, gens[i], gens[j])).collect())
            .collect();
        let mut walk = Vec::with_capacity(group.order() * gens.len());
        let mut seen = FixedBitSet::with_capacity(group.order());
        seen.insert(0);
        let mut queue = vec![0 as ElemId];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(x, g);
                walk.push((x, k, y));
                if !seen.put(y as usize) {
                    queue.push(y);
                }
            }
            qi += 1;
        }
        Search {
            group,
            stats: AutSearchStats {
                generators: gens.len(),
                ..Default::default()
            },
            gens,
            candidates,
            pair_order,
            orders,
            walk,
            cap,
            map: vec![ElemId::MAX; group.order()],
            used: FixedBitSet::with_capacity(group.order()),
        }
    }

    fn extend(&mut self, images: &[ElemId]) -> bool {
        let g = self.group;
        self.map.fill(ElemId::MAX);
        self.used.clear();
        self.map[0] = 0;
        self.used.insert(0);
        for &(x, k, y) in &self.walk {
            let v = g.mul(self.map[x as usize], images[k]);
            let cur = self.map[y as usize];
            if cur == ElemId::MAX {
                if self.used.put(v as usize) {
                    return false;
                }
                self.map[y as usize] = v;
            } else if cur != v {
                return false;
            }
        }
        true
    }

    fn run<F>(&mut self, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[ElemId]) -> ControlFlow<()>,
    {
        let mut images = Vec::with_capacity(self.gens.len());
        self.dfs(&mut images, visit)
    }

    fn dfs<F>(&mut self, images: &mut Vec<ElemId>, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[ElemId]) -> ControlFlow<()>,
    {
        let depth = images.len();
        if depth == self.gens.len() {
            if self.extend(images) {
                self.stats.automorphisms += 1;
                return Ok(visit(&self.map));
            }
            return Ok(ControlFlow::Continue(()));
        }
        for ci in 0..self.candidates[depth].len() {
            let y = self.candidates[depth][ci];
            self.stats.candidates += 1;
            if self.stats.candidates > self.cap {
                return Err(Error::SearchCapExceeded { cap: self.cap });
            }
            let ok = (0..depth)
                .all(|j| pair_signature(self.group, &self.orders, y, images[j]) == self.pair_order[depth][j]);
            if !ok {
                continue;
            }
            images.push(y);
            let flow = self.dfs(images, visit)?;
            images.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn pair_signature(group: &FiniteGroup, orders: &[usize], x: ElemId, y: ElemId) -> [usize; 3] {
    [
        orders[group.mul(x, y) as usize],
        orders[group.mul(x, group.inv(y)) as usize],
        orders[group.commutator(x, y) as usize],
    ]
}

/// Looks for a generating pair whose candidate buckets are smaller than
/// `budget` in product, trying a few elements from each pair of buckets.
fn two_generators<K: Fn(ElemId) -> (usize, usize)>(
    group: &FiniteGroup,
    orders: &[usize],
    key: &K,
    budget: f64,
) -> Option<Vec<ElemId>> {
    const MAX_TESTS: usize = 400;
    let mut buckets: std::collections::BTreeMap<(usize, usize), Vec<ElemId>> = Default::default();
    for x in group.elements().skip(1) {
        buckets.entry(key(x)).or_default().push(x);
    }
    let mut list: Vec<Vec<ElemId>> = buckets.into_values().collect();
    list.sort_by_key(|b| (b.len(), std::cmp::Reverse(orders[b[0] as usize]), b[0]));
    let mut best: Option<(f64, Vec<ElemId>)> = None;
    let mut tests = 0;
    for i in 0..list.len() {
        for &x in list[i].iter().take(2) {
            for b2 in &list[i..] {
                let c = (list[i].len() * b2.len()) as f64;
                if c >= budget || best.as_ref().is_some_and(|(bc, _)| c >= *bc) {
                    break;
                }
                for &y in b2.iter().take(4) {
                    if x == y {
                        continue;
                    }
                    tests += 1;
                    if tests > MAX_TESTS {
                        return best.map(|b| b.1);
                    }
                    let mut cl = Closure::new(group);
                    cl.add(x);
                    cl.add(y);
                    if cl.len() == group.order() {
                        best = Some((c, vec![x, y]));
                        break;
                    }
                }
            }
        }
    }
    best.map(|b| b.1)
}

/// Streams every automorphism of `group` (as a full image table) to `visit`.
pub fn for_each_automorphism<F>(group: &FiniteGroup, search_cap: usize, mut visit: F) -> Result<AutSearchStats>
where
    F: FnMut(&[ElemId]) -> ControlFlow<()>,
{
    if group.is_trivial() {
        let _ = visit(&[0]);
        return Ok(AutSearchStats {
            automorphisms: 1,
            ..Default::default()
        });
    }
    let mut search = Search::new(group, search_cap);
    let _ = search.run(&mut visit)?;
    Ok(search.stats)
}

/// All automorphisms of `group`.
pub fn automorphism_group(group: &FiniteGroup, search_cap: usize) -> Result<Vec<Homomorphism>> {
    let mut out = Vec::new();
    for_each_automorphism(group, search_cap, |map| {
        out.push(Homomorphism::new_unchecked(group, group, map.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// True iff `group` is non-trivial and no proper non-trivial normal subgroup
/// is invariant under every automorphism.
///
/// Characteristic subgroups are normal, so only normal subgroups are scanned.
pub fn is_characteristically_simple(group: &FiniteGroup, search_cap: usize) -> Result<bool> {
    if group.is_trivial() {
        return Ok(false);
    }
    let center = group.center();
    if !center.is_trivial() && !center.is_whole() {
        return Ok(false);
    }
    let derived = group.derived_subgroup();
    if !derived.is_trivial() && !derived.is_whole() {
        return Ok(false);
    }
    let lattice = crate::lattice::NormalLattice::new(group, crate::lattice::DEFAULT_NODE_CAP)?;
    let proper: Vec<&Subgroup> = lattice
        .nodes()
        .iter()
        .filter(|n| !n.is_trivial() && !n.is_whole())
        .collect();
    for n in &proper {
        if proper.iter().filter(|m| m.order() == n.order()).count() == 1 {
            return Ok(false);
        }
    }
    let mut fixed: Vec<&Subgroup> = proper;
    for_each_automorphism(group, search_cap, |map| {
        fixed.retain(|n| n.generators().iter().all(|&x| n.contains(map[x as usize])));
        if fixed.is_empty() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(fixed.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, DEFAULT_ELEMENT_CAP};

    fn count(name: &str) -> usize {
        let g = named_group(name, DEFAULT_ELEMENT_CAP).unwrap();
        automorphism_group(&g, DEFAULT_SEARCH_CAP).unwrap().len()
    }

    #[test]
    fn small_automorphism_counts() {
        assert_eq!(count("C2"), 1);
        assert_eq!(count("V4"), 6);
        assert_eq!(count("C6"), 2);
        assert_eq!(count("S3"), 6);
        assert_eq!(count("Q8"), 24);
        assert_eq!(count("D8"), 8);
    }

    #[test]
    fn search_cap_is_reported() {
        let g = named_group("A5", DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(
            automorphism_group(&g, 5).unwrap_err(),
            Error::SearchCapExceeded { cap: 5 }
        );
    }
}
