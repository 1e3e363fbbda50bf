//! Extending chief blocks from a subgroup `H` to the ambient group `G`,
//! the `G`-stacking preorder on the blocks of a normal subgroup, and
//! pulling blocks back along surjections.
//!
//! Blocks of `H` are computed on `H` as a group in its own right; their
//! centralizers and least covering subgroups are also kept as subgroups of
//! `G` so that coverage by normal subgroups of `G` is a containment test.

use std::collections::{BTreeSet, HashSet};

use crate::blocks::{coverage, BlockPoset};
use crate::error::{Error, Result};
use crate::factors::{make_factor, NormalFactor};
use crate::group::{
    normal_closure, quotient, subgroup_as_group, ElemId, FiniteGroup, Homomorphism, Subgroup,
};
use crate::lattice::NormalLattice;
use crate::products::Factorization;

fn fail<T>(what: &str) -> Result<T> {
    Err(Error::ExtensionCheckFailed(what.to_string()))
}

/// The block poset of a subgroup, with translations to ambient coordinates.
#[derive(Clone, Debug)]
pub struct SubgroupBlocks {
    pub sub: Subgroup,
    /// `H` as a group.
    pub group: FiniteGroup,
    /// `H -> G`
    pub embedding: Homomorphism,
    local: Vec<ElemId>,
    pub lattice: NormalLattice,
    pub poset: BlockPoset,
    /// `C_H(a)` for each block, in `G`.
    pub centralizers: Vec<Subgroup>,
    /// `H_a` for each block, in `G`.
    pub minimal_covers: Vec<Subgroup>,
}

impl SubgroupBlocks {
    pub fn new(sub: &Subgroup, node_cap: usize) -> Result<SubgroupBlocks> {
        let parent = sub.parent();
        let (group, embedding) = if sub.is_whole() {
            (parent.clone(), Homomorphism::identity(parent))
        } else {
            subgroup_as_group(sub)
        };
        let mut local = vec![ElemId::MAX; parent.order()];
        for x in group.elements() {
            local[embedding.apply(x) as usize] = x;
        }
        let lattice = NormalLattice::new(&group, node_cap)?;
        let poset = BlockPoset::new(&lattice)?;
        let centralizers = poset
            .blocks()
            .iter()
            .map(|b| embedding.image_of(&b.centralizer))
            .collect();
        let minimal_covers = (0..poset.len())
            .map(|b| embedding.image_of(poset.minimal_cover(b)))
            .collect();
        Ok(SubgroupBlocks {
            sub: sub.clone(),
            group,
            embedding,
            local,
            lattice,
            poset,
            centralizers,
            minimal_covers,
        })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// A subgroup of `H` given in `G`, as a subgroup of the group `H`.
    pub fn to_local(&self, s: &Subgroup) -> Result<Subgroup> {
        if !s.is_subgroup_of(&self.sub) {
            return Err(Error::invariant("subgroup does not lie in H"));
        }
        let elems: Vec<ElemId> = s.elements().map(|x| self.local[x as usize]).collect();
        Subgroup::from_elements(&self.group, &elems)
    }

    pub fn to_ambient(&self, s: &Subgroup) -> Subgroup {
        self.embedding.image_of(s)
    }

    /// Whether `K ∩ H` covers block `a`, for `K` a subgroup of `G`.
    pub fn intersection_covers(&self, a: usize, k: &Subgroup) -> Result<bool> {
        Ok(!k.meet(&self.sub)?.is_subgroup_of(&self.centralizers[a]))
    }

    /// Whether `(K ∩ H)/(L ∩ H)` covers block `a`.
    pub fn factor_intersection_covers(&self, a: usize, k: &Subgroup, l: &Subgroup) -> Result<bool> {
        Ok(coverage(&self.centralizers[a], &k.meet(&self.sub)?, &l.meet(&self.sub)?).covers())
    }

    /// The block of `H` whose centralizer is `c` (given in `G`).
    pub fn block_with_ambient_centralizer(&self, c: &Subgroup) -> Option<usize> {
        self.centralizers.iter().position(|x| x == c)
    }
}

/// `G`, its blocks, and the blocks of a subgroup `H`.
#[derive(Clone, Debug)]
pub struct ExtensionContext {
    pub lattice: NormalLattice,
    pub poset: BlockPoset,
    pub h: SubgroupBlocks,
}

/// Output of [`ExtensionContext::extend_block`].
#[derive(Clone, Debug)]
pub struct BlockExtension {
    /// Block of `H`.
    pub from: usize,
    /// Block of `G`.
    pub block: usize,
    /// `<<H_a>>_G`
    pub m: Subgroup,
    /// `∩_g g C_H(a) g^-1 ∩ M`
    pub n: Subgroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    AntichainOrbit,
    ProperStacking,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::AntichainOrbit => "antichain-orbit",
            ClassKind::ProperStacking => "proper-stacking",
        }
    }
}

/// Classifies a stacking class from its order and the two action
/// relations `∃g: g.a <= b` and `∃g: g.a < b`; exactly one kind must hold.
pub fn classify_class(
    members: &[usize],
    le: impl Fn(usize, usize) -> bool,
    moves_onto_or_below: impl Fn(usize, usize) -> bool,
    moves_strictly_below: impl Fn(usize, usize) -> bool,
) -> Result<ClassKind> {
    let antichain = members
        .iter()
        .all(|&a| members.iter().all(|&b| a == b || !le(a, b)));
    // On an antichain, g.a <= b with g.a in the class forces g.a = b.
    let transitive = members
        .iter()
        .all(|&a| members.iter().all(|&b| moves_onto_or_below(a, b)));
    let orbit = antichain && transitive;
    let proper = members
        .iter()
        .all(|&a| members.iter().all(|&b| moves_strictly_below(a, b)));
    match (orbit, proper) {
        (true, false) => Ok(ClassKind::AntichainOrbit),
        (false, true) => Ok(ClassKind::ProperStacking),
        _ => fail("stacking class is neither exactly an antichain orbit nor a proper stacking class"),
    }
}

/// The `G`-stacking preorder on the minimally covered blocks of `H`.
#[derive(Clone, Debug)]
pub struct StackingStructure {
    /// Minimally covered blocks of `H`.
    pub minimal: Vec<usize>,
    /// `action[k][a]`: block `a` moved by the `k`-th generator of `G`.
    pub action: Vec<Vec<usize>>,
    /// `preorder[a][b]` iff `a ⪯_G b` (indexed by block id).
    pub preorder: Vec<Vec<bool>>,
    /// Stacking classes with their kind, sorted.
    pub classes: Vec<(Vec<usize>, ClassKind)>,
}

/// The induced map from stacking classes to extended blocks.
#[derive(Clone, Debug)]
pub struct ExtensionPosetIso {
    /// Block of `G` extending each block of `H` (by block id of `H`).
    pub extension_of: Vec<usize>,
    /// Stacking class and its common extension.
    pub class_images: Vec<(Vec<usize>, usize)>,
}

/// The three conditions characterizing antichain orbits.
#[derive(Clone, Debug)]
pub struct AntichainOrbitReport {
    pub class_is_antichain_orbit: bool,
    pub has_minimal_invariant: bool,
    pub conjugate_factorization: bool,
    /// Minimal `H`-invariant subgroups `X` of `M/N`, as the subgroups `X >= N` of `G`.
    pub minimal_invariant: Vec<Subgroup>,
    pub extension: BlockExtension,
}

impl ExtensionContext {
    pub fn new(group: &FiniteGroup, h: &Subgroup, node_cap: usize) -> Result<ExtensionContext> {
        if !h.parent().same_group(group) {
            return Err(Error::DifferentParents);
        }
        let lattice = NormalLattice::new(group, node_cap)?;
        Self::with_lattice(&lattice, h, node_cap)
    }

    pub fn with_lattice(lattice: &NormalLattice, h: &Subgroup, node_cap: usize) -> Result<ExtensionContext> {
        if !h.parent().same_group(lattice.group()) {
            return Err(Error::DifferentParents);
        }
        Ok(ExtensionContext {
            lattice: lattice.clone(),
            poset: BlockPoset::new(lattice)?,
            h: SubgroupBlocks::new(h, node_cap)?,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    fn require_normal(&self) -> Result<()> {
        if self.lattice.index_of(&self.h.sub).is_some() {
            Ok(())
        } else {
            Err(Error::NotNormal("H".into()))
        }
    }

    /// `g.[K/L] = [gKg^-1 / gLg^-1]`, computed on the centralizer and
    /// cross-checked on up to two representatives.
    pub fn block_action(&self, g: ElemId, a: usize) -> Result<usize> {
        self.require_normal()?;
        let c = self.h.centralizers[a].conjugate(g);
        let b = self
            .h
            .block_with_ambient_centralizer(&c)
            .ok_or_else(|| Error::ExtensionCheckFailed("conjugated centralizer is not a block centralizer".into()))?;
        for r in self.h.poset.block(a).representatives.iter().take(2) {
            let k = self.h.to_local(&self.h.to_ambient(r.upper()).conjugate(g))?;
            let l = self.h.to_local(&self.h.to_ambient(r.lower()).conjugate(g))?;
            let f = make_factor(&self.h.group, &k.mark_normal(), &l.mark_normal())?;
            if self.h.poset.block_of(&f) != Some(b) {
                return fail("block action depends on the representative");
            }
        }
        Ok(b)
    }

    fn generator_action(&self) -> Result<Vec<Vec<usize>>> {
        self.group()
            .generators()
            .iter()
            .map(|&g| (0..self.h.len()).map(|a| self.block_action(g, a)).collect())
            .collect()
    }

    fn orbit(action: &[Vec<usize>], a: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([a]);
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for perm in action {
                if seen.insert(perm[x]) {
                    stack.push(perm[x]);
                }
            }
        }
        seen
    }

    /// All `G`-conjugates of a subgroup.
    fn conjugates(&self, s: &Subgroup) -> Vec<Subgroup> {
        let mut seen = BTreeSet::from([s.clone()]);
        let mut stack = vec![s.clone()];
        while let Some(x) = stack.pop() {
            for &g in self.group().generators() {
                let y = x.conjugate(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// For every normal subgroup `K` of `G`: `K` covers `b` iff `K ∩ H`
    /// covers `a`.
    pub fn is_extension(&self, a: usize, b: usize) -> Result<bool> {
        for k in self.lattice.nodes() {
            if self.poset.subgroup_covers(b, k)? != self.h.intersection_covers(a, k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The extension of `a`, found by testing every block of `G`.
    pub fn find_extension(&self, a: usize) -> Result<Option<usize>> {
        let mut found = None;
        for b in 0..self.poset.len() {
            if self.is_extension(a, b)? {
                if found.is_some() {
                    return fail("two blocks extend the same block");
                }
                found = Some(b);
            }
        }
        Ok(found)
    }

    /// `a^G` with lowermost representative `M/N`.
    pub fn extend_block(&self, a: usize) -> Result<BlockExtension> {
        self.require_normal()?;
        if !self.h.poset.is_minimally_covered(a) {
            return fail("block is not minimally covered");
        }
        let g = self.group();
        let m = normal_closure(g, self.h.minimal_covers[a].generators());
        let mut n = m.clone();
        for c in self.conjugates(&self.h.centralizers[a]) {
            n = n.meet(&c)?;
        }
        let n = n.mark_normal();
        if !n.is_normal() {
            return fail("N is not normal in G");
        }
        let f = make_factor(g, &m, &n)?;
        if !f.is_chief(&self.lattice)? || f.is_abelian() {
            return fail("M/N is not a non-abelian chief factor of G");
        }
        let block = self
            .poset
            .block_of(&f)
            .ok_or_else(|| Error::ExtensionCheckFailed("M/N has no block".into()))?;
        if self.poset.lowermost_representative(block)? != f {
            return fail("M/N is not the lowermost representative");
        }
        if !self.is_extension(a, block)? {
            return fail("the block of M/N does not satisfy the extension property");
        }
        if self.find_extension(a)? != Some(block) {
            return fail("extension is not unique");
        }
        Ok(BlockExtension { from: a, block, m, n })
    }

    pub fn stacking_structure(&self) -> Result<StackingStructure> {
        self.require_normal()?;
        let nb = self.h.len();
        let minimal: Vec<usize> = (0..nb).filter(|&a| self.h.poset.is_minimally_covered(a)).collect();
        let action = self.generator_action()?;
        let mut le = vec![vec![false; nb]; nb];
        for a in 0..nb {
            for b in 0..nb {
                le[a][b] = self.h.poset.block_le(a, b)?;
            }
        }
        for perm in &action {
            let min_set: HashSet<usize> = minimal.iter().copied().collect();
            if minimal.iter().any(|a| !min_set.contains(&perm[*a])) {
                return fail("action does not preserve minimally covered blocks");
            }
            for a in 0..nb {
                for b in 0..nb {
                    if le[a][b] != le[perm[a]][perm[b]] {
                        return fail("action does not preserve the block order");
                    }
                }
            }
        }
        let orbits: Vec<BTreeSet<usize>> = (0..nb).map(|a| Self::orbit(&action, a)).collect();
        let mut preorder = vec![vec![false; nb]; nb];
        for &a in &minimal {
            for &b in &minimal {
                preorder[a][b] = orbits[a].iter().any(|&c| le[c][b]);
            }
        }
        let mut classes = Vec::new();
        let mut placed = HashSet::new();
        for &a in &minimal {
            if placed.contains(&a) {
                continue;
            }
            let class: Vec<usize> = minimal
                .iter()
                .copied()
                .filter(|&b| preorder[a][b] && preorder[b][a])
                .collect();
            placed.extend(class.iter().copied());
            let kind = classify_class(
                &class,
                |x, y| le[x][y],
                |x, y| orbits[x].iter().any(|&c| le[c][y]),
                |x, y| orbits[x].iter().any(|&c| c != y && le[c][y]),
            )?;
            classes.push((class, kind));
        }
        classes.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(StackingStructure {
            minimal,
            action,
            preorder,
            classes,
        })
    }

    /// `a^G <= b^G` iff `a ⪯_G b`, over all minimally covered blocks.
    pub fn extension_poset_check(&self) -> Result<ExtensionPosetIso> {
        let s = self.stacking_structure()?;
        let mut extension_of = vec![usize::MAX; self.h.len()];
        for &a in &s.minimal {
            extension_of[a] = self.extend_block(a)?.block;
        }
        for &a in &s.minimal {
            for &b in &s.minimal {
                if self.poset.block_le(extension_of[a], extension_of[b])? != s.preorder[a][b] {
                    return fail("extension order differs from the stacking preorder");
                }
            }
        }
        let mut class_images = Vec::new();
        let mut images = BTreeSet::new();
        for (class, _) in &s.classes {
            let e = extension_of[class[0]];
            if class.iter().any(|&a| extension_of[a] != e) || !images.insert(e) {
                return fail("stacking classes and extensions do not correspond");
            }
            class_images.push((class.clone(), e));
        }
        Ok(ExtensionPosetIso {
            extension_of,
            class_images,
        })
    }

    /// Evaluates the antichain-orbit class kind, the existence of a minimal
    /// `H`-invariant subgroup of `M/N`, and the conjugate quasi-direct form of
    /// those subgroups, and requires them to agree.
    pub fn antichain_orbit_analysis(&self, a: usize) -> Result<AntichainOrbitReport> {
        let s = self.stacking_structure()?;
        let ext = self.extend_block(a)?;
        let (m, n) = (&ext.m, &ext.n);
        let class_is_antichain_orbit = s
            .classes
            .iter()
            .find(|(c, _)| c.contains(&a))
            .map(|(_, k)| *k == ClassKind::AntichainOrbit)
            .ok_or_else(|| Error::ExtensionCheckFailed("block is in no stacking class".into()))?;

        let invariant: Vec<Subgroup> = self
            .h
            .lattice
            .nodes()
            .iter()
            .map(|x| self.h.to_ambient(x))
            .filter(|x| n.is_proper_subgroup_of(x) && x.is_subgroup_of(m))
            .collect();
        let minimal_invariant: Vec<Subgroup> = invariant
            .iter()
            .filter(|x| !invariant.iter().any(|y| y.is_proper_subgroup_of(x)))
            .cloned()
            .collect();
        let has_minimal_invariant = !minimal_invariant.is_empty();

        let mut conjugate_factorization = false;
        for k in &minimal_invariant {
            let f = make_factor(
                &self.h.group,
                &self.h.to_local(k)?.mark_normal(),
                &self.h.to_local(n)?.mark_normal(),
            )?;
            if !f.is_chief(&self.h.lattice)? || self.h.poset.block_of(&f) != Some(a) {
                continue;
            }
            if self.conjugates(k) != minimal_invariant {
                break;
            }
            let (mg, emb) = subgroup_as_group(m);
            let (q, pi) = quotient(&mg, &emb.preimage(n).mark_normal())?;
            let parts: Vec<Subgroup> = minimal_invariant
                .iter()
                .map(|x| pi.image_of(&emb.preimage(x)))
                .collect();
            conjugate_factorization = Factorization::classify(&q.whole(), &parts)?.is_quasi_direct();
            break;
        }
        if class_is_antichain_orbit != has_minimal_invariant || has_minimal_invariant != conjugate_factorization {
            return fail("antichain orbit conditions disagree");
        }
        Ok(AntichainOrbitReport {
            class_is_antichain_orbit,
            has_minimal_invariant,
            conjugate_factorization,
            minimal_invariant,
            extension: ext,
        })
    }

    /// Coverage of extended blocks by factors of `G`, centralizer bounds,
    /// the least cover of an extension, and the covering lemma for `M/N`.
    pub fn verify_extension_lemmas(&self) -> Result<()> {
        let s = self.stacking_structure()?;
        let nodes = self.lattice.nodes();
        for &a in &s.minimal {
            let ext = self.extend_block(a)?;
            let b = ext.block;
            let cb = &self.poset.block(b).centralizer;
            for (ki, k) in nodes.iter().enumerate() {
                for (li, l) in nodes.iter().enumerate() {
                    if ki == li || !self.lattice.leq(li, ki) {
                        continue;
                    }
                    let up = coverage(cb, k, l).covers();
                    let down = self.h.factor_intersection_covers(a, k, l)?;
                    if up != down {
                        return fail("a factor of G covers the extension but its trace does not cover the block");
                    }
                    if down {
                        let f = NormalFactor::new_unchecked(k.clone(), l.clone());
                        let c = f.centralizer_in(&self.h.sub)?;
                        if !c.is_subgroup_of(&self.h.centralizers[a]) {
                            return fail("C_H(K/L) is not inside C_H(a)");
                        }
                    }
                }
            }
            let gb = self.poset.minimal_cover(b);
            if *gb != ext.m {
                return fail("G_b differs from the normal closure of H_a");
            }
            let top = gb.meet(&self.h.sub)?;
            let bottom = cb.meet(&top)?;
            if coverage(&self.h.centralizers[a], &top, &bottom) != crate::blocks::Coverage::Covers {
                return fail("(G_b ∩ H)/C(b) does not cover a");
            }
            for c in 0..self.h.len() {
                if !s.minimal.contains(&c) || !self.h.intersection_covers(c, &ext.m)? {
                    continue;
                }
                for l in self.h.lattice.nodes() {
                    let l = self.h.to_ambient(l);
                    if l.is_subgroup_of(&ext.n) {
                        continue;
                    }
                    let reached = Self::orbit(&s.action, c)
                        .into_iter()
                        .any(|d| !l.is_subgroup_of(&self.h.centralizers[d]));
                    if !reached {
                        return fail("a normal subgroup of H above N covers no conjugate block");
                    }
                }
            }
            for x in self.h.lattice.nodes() {
                let x = self.h.to_ambient(x);
                if ext.n.is_proper_subgroup_of(&x) && x.is_subgroup_of(&ext.m) {
                    let f = NormalFactor::new_unchecked(x, ext.n.clone());
                    if f.is_abelian() {
                        return fail("M/N has a non-trivial abelian H-invariant subgroup");
                    }
                }
            }
        }
        Ok(())
    }
}

/// `K/L ↦ φ^-1(K)/φ^-1(L)` on non-abelian chief factors of the image.
#[derive(Clone, Debug)]
pub struct BlockPullback {
    /// Pairs of (factor of the target, pulled-back factor of the source).
    pub factors: Vec<(NormalFactor, NormalFactor)>,
    /// Block of the source for each block of the target.
    pub block_map: Vec<usize>,
}

pub fn quotient_block_pullback(phi: &Homomorphism, node_cap: usize) -> Result<BlockPullback> {
    if !phi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (g, h) = (phi.source(), phi.target());
    let lg = NormalLattice::new(g, node_cap)?;
    let pg = BlockPoset::new(&lg)?;
    let lh = NormalLattice::new(h, node_cap)?;
    let ph = BlockPoset::new(&lh)?;
    let mut factors = Vec::new();
    let mut block_map = Vec::new();
    for b in ph.blocks() {
        let mut image_block = None;
        for f in &b.representatives {
            let up = phi.preimage(f.upper()).mark_normal();
            let low = phi.preimage(f.lower()).mark_normal();
            let pulled = make_factor(g, &up, &low)?;
            if !pulled.is_chief(&lg)? || pulled.is_abelian() {
                return fail("pulled-back factor is not a non-abelian chief factor");
            }
            if phi.preimage(&f.centralizer()) != pulled.centralizer() {
                return fail("centralizer of the pulled-back factor is not the preimage");
            }
            if !factor_isomorphism(phi, &pulled, f)? {
                return fail("pulled-back factor is not isomorphic to the original");
            }
            let blk = pg
                .block_of(&pulled)
                .ok_or_else(|| Error::ExtensionCheckFailed("pulled-back factor has no block".into()))?;
            match image_block {
                None => image_block = Some(blk),
                Some(x) if x != blk => return fail("one block pulls back to several blocks"),
                _ => {}
            }
            factors.push((f.clone(), pulled));
        }
        block_map.push(image_block.ok_or_else(|| Error::invariant("empty block"))?);
    }
    if block_map.iter().collect::<HashSet<_>>().len() != block_map.len() {
        return fail("block pullback is not injective");
    }
    for a in 0..ph.len() {
        for b in 0..ph.len() {
            if ph.block_le(a, b)? != pg.block_le(block_map[a], block_map[b])? {
                return fail("block pullback does not preserve and reflect the order");
            }
        }
    }
    Ok(BlockPullback { factors, block_map })
}

/// Whether `φ` induces a bijective homomorphism `pulled -> f` of factor groups.
fn factor_isomorphism(phi: &Homomorphism, pulled: &NormalFactor, f: &NormalFactor) -> Result<bool> {
    if pulled.order() != f.order() {
        return Ok(false);
    }
    let (qg, pig, embg) = pulled.factor_group();
    let (qh, pih, embh) = f.factor_group();
    let mut local_h = vec![ElemId::MAX; phi.target().order()];
    for x in embh.source().elements() {
        local_h[embh.apply(x) as usize] = x;
    }
    let mut table = vec![ElemId::MAX; qg.order()];
    for x in embg.source().elements() {
        let q = pig.apply(x) as usize;
        if table[q] == ElemId::MAX {
            let y = phi.apply(embg.apply(x));
            table[q] = pih.apply(local_h[y as usize]);
        }
    }
    let iso = Homomorphism::new(&qg, &qh, table)?;
    Ok(iso.is_isomorphism())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, named_group, DEFAULT_ELEMENT_CAP};
    use crate::lattice::DEFAULT_NODE_CAP;

    #[test]
    fn extension_along_equality() {
        let g = named_group("A5", DEFAULT_ELEMENT_CAP).unwrap();
        let ctx = ExtensionContext::new(&g, &g.whole(), DEFAULT_NODE_CAP).unwrap();
        let e = ctx.extend_block(0).unwrap();
        assert!(e.m.is_whole() && e.n.is_trivial());
        let s = ctx.stacking_structure().unwrap();
        assert_eq!(s.classes, vec![(vec![0], ClassKind::AntichainOrbit)]);
        ctx.verify_extension_lemmas().unwrap();
    }

    #[test]
    fn coordinate_of_a5_squared() {
        let a5 = named_group("A5", DEFAULT_ELEMENT_CAP).unwrap();
        let g = direct_product(&a5, &a5, DEFAULT_ELEMENT_CAP).unwrap();
        let (left, _) = g.product_embeddings().unwrap();
        let h = left.image().mark_normal();
        let ctx = ExtensionContext::new(&g, &h, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(ctx.h.len(), 1);
        let e = ctx.extend_block(0).unwrap();
        assert_eq!(e.m, h);
        assert!(e.n.is_trivial());
        let other = (0..ctx.poset.len()).find(|&b| b != e.block).unwrap();
        assert!(!ctx.is_extension(0, other).unwrap());
    }

    #[test]
    fn synthetic_class_kinds() {
        // Two incomparable blocks swapped by the action.
        let kind = classify_class(&[0, 1], |a, b| a == b, |_, _| true, |_, _| false).unwrap();
        assert_eq!(kind, ClassKind::AntichainOrbit);
        // A chain where every block can be translated strictly below every other.
        let kind = classify_class(&[0, 1, 2], |a, b| a <= b, |_, _| true, |_, _| true).unwrap();
        assert_eq!(kind, ClassKind::ProperStacking);
        // A chain without strict translations fits neither kind.
        let err = classify_class(&[0, 1], |a, b| a <= b, |_, _| true, |a, b| a < b).unwrap_err();
        assert!(matches!(err, Error::ExtensionCheckFailed(_)));
    }

    #[test]
    fn identity_pullback() {
        let g = named_group("S5", DEFAULT_ELEMENT_CAP).unwrap();
        let p = quotient_block_pullback(&Homomorphism::identity(&g), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(p.block_map, vec![0]);
    }
}
