//! Chief blocks: association classes of non-abelian chief factors.
//!
//! A block is keyed by the common centralizer of its representatives, and
//! blocks are ordered by inclusion of centralizers.

use std::collections::{BTreeMap, HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::factors::{are_associated, is_internal_compression, normal_product, NormalFactor};
use crate::group::{commutator_subgroup, FiniteGroup, Subgroup};
use crate::lattice::NormalLattice;

/// An association class of non-abelian chief factors.
#[derive(Clone, Debug)]
pub struct ChiefBlock {
    pub id: usize,
    pub centralizer: Subgroup,
    pub representatives: Vec<NormalFactor>,
}

/// How a normal factor sits relative to a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coverage {
    Covers,
    /// `N <= C_G(a)`
    Below,
    /// `M` is not contained in `C_G(a)`
    Above,
}

impl Coverage {
    pub fn covers(self) -> bool {
        self == Coverage::Covers
    }
}

/// `N/M` against a block with centralizer `c`.
pub fn coverage(c: &Subgroup, upper: &Subgroup, lower: &Subgroup) -> Coverage {
    if !lower.is_subgroup_of(c) {
        Coverage::Above
    } else if upper.is_subgroup_of(c) {
        Coverage::Below
    } else {
        Coverage::Covers
    }
}

/// The chief blocks of a group, ordered by centralizer inclusion.
#[derive(Clone, Debug)]
pub struct BlockPoset {
    lattice: NormalLattice,
    blocks: Vec<ChiefBlock>,
    /// Lattice index of the centralizer of each block.
    centralizer_index: Vec<usize>,
    /// Lattice index of `G_a` for each block.
    minimal_cover: Vec<usize>,
}

impl BlockPoset {
    /// Partitions the non-abelian chief factors by centralizer.
    pub fn new(lattice: &NormalLattice) -> Result<BlockPoset> {
        let mut classes: BTreeMap<Subgroup, Vec<NormalFactor>> = BTreeMap::new();
        for f in lattice.chief_factors() {
            if f.is_abelian() {
                continue;
            }
            classes.entry(f.centralizer()).or_default().push(f);
        }
        let mut blocks = Vec::new();
        let mut centralizer_index = Vec::new();
        for (id, (centralizer, representatives)) in classes.into_iter().enumerate() {
            let ci = lattice
                .index_of(&centralizer)
                .ok_or_else(|| Error::invariant("block centralizer is not a lattice node"))?;
            centralizer_index.push(ci);
            blocks.push(ChiefBlock {
                id,
                centralizer,
                representatives,
            });
        }
        let mut poset = BlockPoset {
            lattice: lattice.clone(),
            blocks,
            centralizer_index,
            minimal_cover: Vec::new(),
        };
        poset.minimal_cover = (0..poset.blocks.len())
            .map(|b| poset.compute_minimal_cover(b))
            .collect::<Result<_>>()?;
        Ok(poset)
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    pub fn lattice(&self) -> &NormalLattice {
        &self.lattice
    }

    pub fn blocks(&self) -> &[ChiefBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, id: usize) -> &ChiefBlock {
        &self.blocks[id]
    }

    pub fn centralizer_index(&self, id: usize) -> usize {
        self.centralizer_index[id]
    }

    /// The block containing a non-abelian chief factor.
    pub fn block_of(&self, f: &NormalFactor) -> Option<usize> {
        if f.is_abelian() {
            return None;
        }
        let c = f.centralizer();
        self.blocks.iter().position(|b| b.centralizer == c)
    }

    /// The block whose centralizer is `c`.
    pub fn block_with_centralizer(&self, c: &Subgroup) -> Option<usize> {
        self.blocks.iter().position(|b| &b.centralizer == c)
    }

    pub fn coverage(&self, id: usize, upper: &Subgroup, lower: &Subgroup) -> Result<Coverage> {
        let c = &self.blocks[id].centralizer;
        c.same_parent(upper)?;
        c.same_parent(lower)?;
        Ok(coverage(c, upper, lower))
    }

    /// Whether `N/M` covers the block.
    pub fn covers(&self, id: usize, f: &NormalFactor) -> Result<bool> {
        Ok(self.coverage(id, f.upper(), f.lower())?.covers())
    }

    /// Whether `N = N/1` covers the block.
    pub fn subgroup_covers(&self, id: usize, n: &Subgroup) -> Result<bool> {
        let c = &self.blocks[id].centralizer;
        c.same_parent(n)?;
        Ok(!n.is_subgroup_of(c))
    }

    /// Lattice indices of the normal subgroups covering the block.
    pub fn covering_filter(&self, id: usize) -> Vec<usize> {
        let c = &self.blocks[id].centralizer;
        (0..self.lattice.len())
            .filter(|&i| !self.lattice.node(i).is_subgroup_of(c))
            .collect()
    }

    fn compute_minimal_cover(&self, id: usize) -> Result<usize> {
        let filter = self.covering_filter(id);
        let mut meet = filter
            .first()
            .copied()
            .ok_or_else(|| Error::invariant("covering filter is empty"))?;
        for &k in &filter[1..] {
            meet = self.lattice.meet_index(meet, k);
        }
        if !filter.contains(&meet) {
            return Err(Error::invariant("intersection of the covering filter does not cover"));
        }
        Ok(meet)
    }

    /// `G_a`, the least normal subgroup covering the block.
    pub fn minimal_cover(&self, id: usize) -> &Subgroup {
        self.lattice.node(self.minimal_cover[id])
    }

    pub fn minimal_cover_index(&self, id: usize) -> usize {
        self.minimal_cover[id]
    }

    /// Every block of a finite group is minimally covered.
    pub fn is_minimally_covered(&self, id: usize) -> bool {
        let m = self.minimal_cover(id);
        !m.is_subgroup_of(&self.blocks[id].centralizer)
    }

    /// `a <= b` iff `C_G(a) <= C_G(b)`, checked against the covering
    /// characterizations of the order.
    pub fn block_le(&self, a: usize, b: usize) -> Result<bool> {
        let ca = &self.blocks[a].centralizer;
        let cb = &self.blocks[b].centralizer;
        let le = ca.is_subgroup_of(cb);

        // Every normal subgroup covering b covers a.
        let by_filters = {
            let fa: HashSet<usize> = self.covering_filter(a).into_iter().collect();
            self.covering_filter(b).iter().all(|k| fa.contains(k))
        };
        // G_b covers a.
        let by_cover = !self.minimal_cover(b).is_subgroup_of(ca);
        // b <= a iff G_b <= G_a, read with the roles exchanged.
        let by_reverse = self.minimal_cover(a).is_subgroup_of(self.minimal_cover(b));
        // a < b iff for every representative A/B of b, B covers a.
        let strict = a != b && le;
        let by_reps = self.blocks[b]
            .representatives
            .iter()
            .all(|r| !r.lower().is_subgroup_of(ca));
        if by_filters != le || by_cover != le || by_reverse != le || by_reps != strict {
            return Err(Error::invariant(format!(
                "block order characterizations disagree for blocks {a} and {b}"
            )));
        }
        Ok(le)
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn hasse_edges(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.blocks.len();
        let mut lt = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                lt[a][b] = a != b && self.block_le(a, b)?;
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt[a][b] && !(0..n).any(|c| lt[a][c] && lt[c][b]) {
                    edges.push((a, b));
                }
            }
        }
        Ok(edges)
    }

    pub fn is_antichain(&self) -> Result<bool> {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a != b && self.block_le(a, b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `G^a / C_G(a)`: the socle of the monolithic quotient `G / C_G(a)`.
    ///
    /// Normal subgroups of `G/C` correspond to lattice nodes above `C`, so the
    /// minimal normal subgroups of the quotient are the upper covers of `C`.
    pub fn uppermost_representative(&self, id: usize) -> Result<NormalFactor> {
        let ci = self.centralizer_index[id];
        let ups = self.lattice.upper_covers(ci);
        if ups.len() != 1 {
            return Err(Error::invariant(format!(
                "quotient by the centralizer of block {id} has {} minimal normal subgroups",
                ups.len()
            )));
        }
        let f = NormalFactor::new_unchecked(
            self.lattice.node(ups[0]).clone(),
            self.blocks[id].centralizer.clone(),
        );
        self.check_in_block(id, &f)?;
        for r in &self.blocks[id].representatives {
            if !is_internal_compression(r, &f)? {
                return Err(Error::invariant("uppermost representative is not a compression target"));
            }
        }
        Ok(f)
    }

    /// `G_a / C_{G_a}(a)`.
    pub fn lowermost_representative(&self, id: usize) -> Result<NormalFactor> {
        let m = self.minimal_cover(id).clone();
        let n = m.meet(&self.blocks[id].centralizer)?;
        let f = NormalFactor::new_unchecked(m, n);
        self.check_in_block(id, &f)?;
        for r in &self.blocks[id].representatives {
            if !is_internal_compression(&f, r)? {
                return Err(Error::invariant("lowermost representative does not compress onto a representative"));
            }
        }
        Ok(f)
    }

    fn check_in_block(&self, id: usize, f: &NormalFactor) -> Result<()> {
        if !f.is_chief(&self.lattice)? || f.is_abelian() || f.centralizer() != self.blocks[id].centralizer {
            return Err(Error::invariant(format!("factor is not a representative of block {id}")));
        }
        if !self.blocks[id].representatives.contains(f) {
            return Err(Error::invariant("representative missing from the block listing"));
        }
        Ok(())
    }
}

/// Join of the minimal normal subgroups (trivial if there are none).
pub fn socle(lattice: &NormalLattice) -> Subgroup {
    let mut s = lattice.group().trivial_subgroup();
    for i in lattice.minimal_normal() {
        s = s.join(lattice.node(i)).expect("same parent");
    }
    s
}

/// Exactly one minimal normal subgroup.
pub fn is_monolithic(lattice: &NormalLattice) -> bool {
    lattice.minimal_normal().len() == 1
}

/// Output of [`refine_series`].
#[derive(Clone, Debug)]
pub struct Refinement {
    /// The interval `G_i <= B < D <= G_{i+1}`.
    pub index: usize,
    pub b: Subgroup,
    pub d: Subgroup,
    /// Elements of `G_{i+1}` acting on `K/L` as inner automorphisms.
    pub r: Subgroup,
    /// `[R, K] B`
    pub a: Subgroup,
}

fn validate_series(lattice: &NormalLattice, series: &[Subgroup]) -> Result<()> {
    let g = lattice.group();
    if series.len() < 2 {
        return Err(Error::NotAChain("series needs at least two terms".into()));
    }
    if !series[0].is_trivial() || !series[series.len() - 1].is_whole() {
        return Err(Error::NotAChain("series must run from 1 to G".into()));
    }
    for (i, s) in series.iter().enumerate() {
        if !s.parent().same_group(g) {
            return Err(Error::DifferentParents);
        }
        if lattice.index_of(s).is_none() {
            return Err(Error::NotAChain(format!("term {i} is not normal")));
        }
    }
    for w in series.windows(2) {
        if !w[0].is_subgroup_of(&w[1]) {
            return Err(Error::NotAChain("terms are not ascending".into()));
        }
    }
    Ok(())
}

/// Locates the unique interval of `series` holding a factor associated to
/// the non-abelian chief factor `K/L`, and builds that factor `D/B`.
pub fn refine_series(lattice: &NormalLattice, series: &[Subgroup], f: &NormalFactor) -> Result<Refinement> {
    validate_series(lattice, series)?;
    if !f.is_chief(lattice)? {
        return Err(Error::NotChief);
    }
    if f.is_abelian() {
        return Err(Error::AbelianFactor);
    }
    let g = lattice.group();
    let (k, l) = (f.upper(), f.lower());
    let c = f.centralizer();
    let index = (0..series.len() - 1)
        .find(|&i| !series[i + 1].is_subgroup_of(&c))
        .ok_or_else(|| Error::invariant("G centralizes a non-abelian chief factor"))?;
    let next = &series[index + 1];
    let b = c.meet(next)?.mark_normal();

    // Label the cosets of L in K, then describe each element's action on K/L
    // by the labels of its conjugates of the generators of K.
    let mut label = vec![u32::MAX; g.order()];
    let mut count = 0u32;
    for y in k.elements() {
        if label[y as usize] != u32::MAX {
            continue;
        }
        for z in l.elements() {
            label[g.mul(y, z) as usize] = count;
        }
        count += 1;
    }
    let signature = |x: u32| -> Vec<u32> {
        k.generators()
            .iter()
            .map(|&y| label[g.conj(x, y) as usize])
            .collect()
    };
    let inner: HashSet<Vec<u32>> = k.elements().map(signature).collect();
    let mut r_bits = FixedBitSet::with_capacity(g.order());
    for x in next.elements() {
        if inner.contains(&signature(x)) {
            r_bits.insert(x as usize);
        }
    }
    let r = Subgroup::from_bits_unchecked(g, r_bits);
    let a = normal_product(&commutator_subgroup(&r, k).mark_normal(), &b)?;
    let d = normal_product(&commutator_subgroup(&a, &a).mark_normal(), &b)?;

    let fail = |m: &str| Err(Error::invariant(format!("refinement: {m}")));
    if !series[index].is_subgroup_of(&b) || !b.is_proper_subgroup_of(&d) || !d.is_subgroup_of(next) {
        return fail("G_i <= B < D <= G_(i+1) does not hold");
    }
    if !lattice.is_chief_factor(&d, &b)? {
        return fail("D/B is not a chief factor");
    }
    let db = NormalFactor::new_unchecked(d.clone(), b.clone());
    if !are_associated(&db, f)? {
        return fail("D/B is not associated to K/L");
    }
    for j in 0..series.len() - 1 {
        if j != index && interval_has_associate(lattice, &series[j], &series[j + 1], f)? {
            return fail("another interval admits an associated factor");
        }
    }
    Ok(Refinement { index, b, d, r, a })
}

/// Whether some lattice factor `A/B` with `low <= B < A <= high` is associated to `f`.
pub fn interval_has_associate(
    lattice: &NormalLattice,
    low: &Subgroup,
    high: &Subgroup,
    f: &NormalFactor,
) -> Result<bool> {
    let inside: Vec<usize> = (0..lattice.len())
        .filter(|&i| low.is_subgroup_of(lattice.node(i)) && lattice.node(i).is_subgroup_of(high))
        .collect();
    for &bi in &inside {
        for &ai in &inside {
            if ai != bi && lattice.leq(bi, ai) {
                let cand = NormalFactor::new_unchecked(lattice.node(ai).clone(), lattice.node(bi).clone());
                if are_associated(&cand, f)? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Partition of the non-abelian chief factors by pairwise association,
/// as sorted index lists into `factors`.
pub fn association_partition(factors: &[NormalFactor]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, f) in factors.iter().enumerate() {
        for class in classes.iter_mut() {
            if are_associated(&factors[class[0]], f)? {
                class.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// Partition of factors by equality of centralizers.
pub fn centralizer_partition(factors: &[NormalFactor]) -> Vec<Vec<usize>> {
    let mut by: HashMap<Subgroup, Vec<usize>> = HashMap::new();
    let mut order = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let c = f.centralizer();
        if !by.contains_key(&c) {
            order.push(c.clone());
        }
        by.entry(c).or_default().push(i);
    }
    order.into_iter().map(|c| by.remove(&c).expect("present")).collect()
}
