//! Components, the layer, semisimple type, and the weak / semisimple /
//! stacking trichotomy for characteristically simple groups.
//!
//! Component search. A component `M` is normal in `N = <<M>>_G`, which is
//! normal in `G`, so every component appears among the normal subgroups of
//! normal subgroups of `G`. Components are perfect, and the normal closure
//! of a perfect subgroup is perfect, so only perfect `N` are scanned. A
//! candidate `M` is accepted when `M/Z(M)` is non-abelian and every proper
//! normal subgroup of `M` lies in `Z(M)`; this is exactly condition (c)
//! given `M ⊴ <<M>>`, since a component's proper normal subgroups are
//! central in `<<M>>`, and conversely such an `M` commutes with its other
//! conjugates.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::blocks::BlockPoset;
use crate::error::{Error, Result};
use crate::factors::{make_factor, NormalFactor};
use crate::group::{
    commutator_subgroup, for_each_automorphism, is_characteristically_simple, normal_closure,
    quotient, subgroup_as_group, ElemId, FiniteGroup, Homomorphism, Subgroup,
};
use crate::lattice::NormalLattice;
use crate::products::Factorization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemisimpleKind {
    NotSemisimple,
    Semisimple,
    StrictSemisimple,
}

impl SemisimpleKind {
    pub fn is_semisimple(self) -> bool {
        self != SemisimpleKind::NotSemisimple
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SemisimpleKind::NotSemisimple => "not-semisimple",
            SemisimpleKind::Semisimple => "semisimple",
            SemisimpleKind::StrictSemisimple => "strict-semisimple",
        }
    }
}

/// Components of a group, their join, and the resulting classification.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub group: FiniteGroup,
    /// Sorted.
    pub components: Vec<Subgroup>,
    /// `E(G)`
    pub layer: Subgroup,
    pub kind: SemisimpleKind,
}

/// The normal subgroups of `h` (as a group in its own right), as subgroups
/// of the ambient group, sorted.
pub fn normal_subgroups_within(h: &Subgroup, node_cap: usize) -> Result<Vec<Subgroup>> {
    if h.is_whole() {
        return Ok(NormalLattice::new(h.parent(), node_cap)?.nodes().to_vec());
    }
    let (hg, emb) = subgroup_as_group(h);
    let lattice = NormalLattice::new(&hg, node_cap)?;
    let mut out: Vec<Subgroup> = lattice.nodes().iter().map(|n| emb.image_of(n)).collect();
    out.sort();
    Ok(out)
}

/// `[h, h] = h`
pub fn is_perfect_subgroup(h: &Subgroup) -> bool {
    commutator_subgroup(h, h) == *h
}

/// Whether `upper/lower` is non-abelian and simple, where `lower` is normal
/// in `upper`.
pub fn is_nonabelian_simple_section(upper: &Subgroup, lower: &Subgroup, node_cap: usize) -> Result<bool> {
    upper.same_parent(lower)?;
    if !lower.is_proper_subgroup_of(upper) {
        return Ok(false);
    }
    let g = upper.parent();
    let gens = upper.generators();
    let abelian = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| lower.contains(g.commutator(a, b))));
    if abelian {
        return Ok(false);
    }
    let between = normal_subgroups_within(upper, node_cap)?
        .into_iter()
        .filter(|n| lower.is_subgroup_of(n))
        .count();
    Ok(between == 2)
}

fn centralizes(a: &Subgroup, b: &Subgroup) -> bool {
    let g = a.parent();
    a.generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

fn join_all(group: &FiniteGroup, parts: &[Subgroup]) -> Result<Subgroup> {
    let mut j = group.trivial_subgroup();
    for p in parts {
        j = j.join(p)?;
    }
    Ok(j)
}

/// Conditions (a), (b), (c) of the definition of a component, checked
/// literally.
pub fn is_component_by_definition(m: &Subgroup, node_cap: usize) -> Result<bool> {
    let g = m.parent();
    if m.is_trivial() {
        return Ok(false);
    }
    let closure = normal_closure(g, m.generators());
    // (a)
    if !closure.normalizes(m) {
        return Ok(false);
    }
    // (b)
    let z = m.center();
    let gens = m.generators();
    if gens.iter().all(|&a| gens.iter().all(|&b| z.contains(g.commutator(a, b)))) {
        return Ok(false);
    }
    // (c)
    for k in normal_subgroups_within(m, node_cap)? {
        if k != *m && !centralizes(&k, &closure) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All components of the group of `lattice`, sorted.
pub fn components_in(lattice: &NormalLattice, node_cap: usize) -> Result<Vec<Subgroup>> {
    let g = lattice.group();
    let mut found = BTreeSet::new();
    for n in lattice.nodes() {
        if n.is_trivial() || !is_perfect_subgroup(n) {
            continue;
        }
        let inner = if n.is_whole() {
            lattice.nodes().to_vec()
        } else {
            normal_subgroups_within(n, node_cap)?
        };
        for m in inner {
            if m.is_trivial() || !is_perfect_subgroup(&m) || normal_closure(g, m.generators()) != *n {
                continue;
            }
            let z = m.center();
            if m.is_subgroup_of(&z) {
                continue;
            }
            let all_central = normal_subgroups_within(&m, node_cap)?
                .iter()
                .all(|k| *k == m || k.is_subgroup_of(&z));
            if all_central {
                if !is_component_by_definition(&m, node_cap)? {
                    return Err(Error::invariant("accepted candidate fails the component definition"));
                }
                found.insert(m);
            }
        }
    }
    Ok(found.into_iter().collect())
}

pub fn components(group: &FiniteGroup, node_cap: usize) -> Result<Vec<Subgroup>> {
    components_in(&NormalLattice::new(group, node_cap)?, node_cap)
}

/// `E(G)`, the join of the components.
pub fn layer(group: &FiniteGroup, node_cap: usize) -> Result<Subgroup> {
    Ok(semisimple_type(group, node_cap)?.layer)
}

pub fn semisimple_type(group: &FiniteGroup, node_cap: usize) -> Result<ComponentReport> {
    report_for(&NormalLattice::new(group, node_cap)?, node_cap)
}

pub fn report_for(lattice: &NormalLattice, node_cap: usize) -> Result<ComponentReport> {
    let g = lattice.group();
    let components = components_in(lattice, node_cap)?;
    let layer = join_all(g, &components)?;
    let kind = if !layer.is_whole() {
        SemisimpleKind::NotSemisimple
    } else if g.center().is_trivial() {
        SemisimpleKind::StrictSemisimple
    } else {
        SemisimpleKind::Semisimple
    };
    Ok(ComponentReport {
        group: g.clone(),
        components,
        layer,
        kind,
    })
}

/// A group together with its lattice and components; hosts the structural
/// checks on components and groups of semisimple type.
#[derive(Clone, Debug)]
pub struct SemisimpleAnalysis {
    pub lattice: NormalLattice,
    pub report: ComponentReport,
    node_cap: usize,
}

fn fail<T>(what: &str) -> Result<T> {
    Err(Error::invariant(what.to_string()))
}

/// Output of [`SemisimpleAnalysis::quotient_components`].
#[derive(Clone, Debug)]
pub struct QuotientComponents {
    pub quotient: FiniteGroup,
    pub projection: Homomorphism,
    /// `{MK/K : M a component with [M, K] = 1}`, sorted.
    pub components: Vec<Subgroup>,
}

impl SemisimpleAnalysis {
    pub fn new(group: &FiniteGroup, node_cap: usize) -> Result<SemisimpleAnalysis> {
        let lattice = NormalLattice::new(group, node_cap)?;
        Self::from_lattice(&lattice, node_cap)
    }

    pub fn from_lattice(lattice: &NormalLattice, node_cap: usize) -> Result<SemisimpleAnalysis> {
        let report = report_for(lattice, node_cap)?;
        Ok(SemisimpleAnalysis {
            lattice: lattice.clone(),
            report,
            node_cap,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    pub fn components(&self) -> &[Subgroup] {
        &self.report.components
    }

    pub fn kind(&self) -> SemisimpleKind {
        self.report.kind
    }

    fn require_semisimple(&self) -> Result<()> {
        if self.kind().is_semisimple() {
            Ok(())
        } else {
            Err(Error::NotSemisimpleType)
        }
    }

    /// Properties every component has in any group: each normal subgroup
    /// either contains or centralizes it, distinct components commute, and
    /// `MZ(R)/Z(R)`, `R/C_G(M)` are non-abelian simple for `R = M C_G(M)`.
    pub fn verify_component_properties(&self) -> Result<()> {
        let g = self.group();
        let comps = self.components();
        for m in comps {
            for k in self.lattice.nodes() {
                if !m.is_subgroup_of(k) && !centralizes(k, m) {
                    return fail("a normal subgroup neither contains nor centralizes a component");
                }
            }
            for other in comps {
                if other != m && !centralizes(m, other) {
                    return fail("distinct components do not commute");
                }
            }
            if comps.iter().any(|o| o != m && m.is_subgroup_of(o)) {
                return fail("a component lies inside another component");
            }
            let c = g.whole().centralizer_of(m);
            let r = m.join(&c)?;
            let zr = r.center();
            if !is_nonabelian_simple_section(&m.join(&zr)?, &zr, self.node_cap)? {
                return fail("MZ(R)/Z(R) is not non-abelian simple");
            }
            if !is_nonabelian_simple_section(&r, &c, self.node_cap)? {
                return fail("R/C_G(M) is not non-abelian simple");
            }
        }
        Ok(())
    }

    /// Checks for groups of semisimple type: `G = M C_G(M)` with `M`
    /// normal, abelian normal subgroups are central, `[K, G]` is generated
    /// by components, and in the strict case components are exactly the
    /// minimal normal subgroups and are simple.
    pub fn verify_semisimple_properties(&self) -> Result<()> {
        self.require_semisimple()?;
        let g = self.group();
        let whole = g.whole();
        let center = g.center();
        for m in self.components() {
            if !m.is_normal() || m.join(&whole.centralizer_of(m))? != whole {
                return fail("G is not M C_G(M) for a component M");
            }
        }
        for k in self.lattice.nodes() {
            if k.is_abelian() && !k.is_subgroup_of(&center) {
                return fail("an abelian normal subgroup is not central");
            }
            let kg = commutator_subgroup(k, &whole);
            let inside: Vec<Subgroup> = self
                .components()
                .iter()
                .filter(|m| m.is_subgroup_of(&kg))
                .cloned()
                .collect();
            if join_all(g, &inside)? != kg {
                return fail("[K, G] is not generated by components");
            }
        }
        if self.kind() == SemisimpleKind::StrictSemisimple {
            let minimal: BTreeSet<Subgroup> = self
                .lattice
                .minimal_normal()
                .into_iter()
                .map(|i| self.lattice.node(i).clone())
                .collect();
            let comps: BTreeSet<Subgroup> = self.components().iter().cloned().collect();
            if minimal != comps {
                return fail("components differ from the minimal normal subgroups");
            }
            for m in self.components() {
                if !is_nonabelian_simple_section(m, &g.trivial_subgroup(), self.node_cap)? {
                    return fail("a component of a strict semisimple group is not simple");
                }
            }
        }
        Ok(())
    }

    /// Components of `G/K` as images of the components commuting with `K`,
    /// compared with the components of `G/K` computed from scratch.
    pub fn quotient_components(&self, k: &Subgroup) -> Result<QuotientComponents> {
        self.require_semisimple()?;
        let g = self.group();
        if !k.parent().same_group(g) {
            return Err(Error::DifferentParents);
        }
        if self.lattice.index_of(k).is_none() {
            return Err(Error::NotNormal("quotient kernel".into()));
        }
        let (q, pi) = quotient(g, k)?;
        let mut images = BTreeSet::new();
        for m in self.components() {
            if centralizes(m, k) {
                images.insert(pi.image_of(m));
            }
        }
        let images: Vec<Subgroup> = images.into_iter().collect();
        let direct = components(&q, self.node_cap)?;
        if direct != images {
            return fail("images of commuting components differ from the components of the quotient");
        }
        if !join_all(&q, &images)?.is_whole() {
            return fail("quotient components do not generate the quotient");
        }
        Ok(QuotientComponents {
            quotient: q,
            projection: pi,
            components: images,
        })
    }

    /// `G/Z(G)` is strict semisimple and the images of the components form
    /// a quasi-direct factorization of it.
    pub fn central_quotient(&self) -> Result<(QuotientComponents, Factorization)> {
        let qc = self.quotient_components(&self.group().center())?;
        let inner = SemisimpleAnalysis::new(&qc.quotient, self.node_cap)?;
        if inner.kind() != SemisimpleKind::StrictSemisimple {
            return fail("G/Z(G) is not of strict semisimple type");
        }
        let parts: Vec<Subgroup> = qc.components.iter().map(|s| s.clone().mark_normal()).collect();
        let f = Factorization::classify(&qc.quotient.whole(), &parts)?;
        if !f.is_quasi_direct() {
            return fail("component images do not form a quasi-direct factorization of G/Z(G)");
        }
        Ok((qc, f))
    }

    /// Normal subgroups with non-abelian simple quotient, sorted.
    pub fn simple_quotient_kernels(&self) -> Result<Vec<Subgroup>> {
        let top = self.lattice.top();
        let g = self.group();
        let derived = g.derived_subgroup();
        let mut out = Vec::new();
        for i in 0..self.lattice.len() {
            if i != top && self.lattice.upper_covers(i) == [top] && !derived.is_subgroup_of(self.lattice.node(i)) {
                out.push(self.lattice.node(i).clone());
            }
        }
        Ok(out)
    }

    /// Pairs each kernel `N` of a non-abelian simple quotient with the
    /// component `M` having `C_G(M) = N`.
    pub fn simple_quotient_duality(&self) -> Result<Vec<(Subgroup, Subgroup)>> {
        self.require_semisimple()?;
        let whole = self.group().whole();
        let kernels = self.simple_quotient_kernels()?;
        let mut pairs: Vec<(Subgroup, Subgroup)> = self
            .components()
            .iter()
            .map(|m| (whole.centralizer_of(m).mark_normal(), m.clone()))
            .collect();
        pairs.sort();
        let from_components: Vec<Subgroup> = pairs.iter().map(|(n, _)| n.clone()).collect();
        if from_components != kernels {
            return fail("simple quotient kernels differ from centralizers of components");
        }
        Ok(pairs)
    }

    /// The lattice criterion: with `𝒩` the kernels of non-abelian simple
    /// quotients whose block is minimally covered, returns whether
    /// (`∩𝒩 = Z(G)`, every proper normal subgroup lies in some member) and
    /// whether the same holds with `∩𝒩 = 1`; asserts these agree with the
    /// computed kind.
    pub fn semisimple_quot_criterion(&self, poset: &BlockPoset) -> Result<(bool, bool)> {
        let g = self.group();
        let whole = g.whole();
        let mut kernels = Vec::new();
        for n in self.simple_quotient_kernels()? {
            let f = make_factor(g, &whole, &n)?;
            let block = poset
                .block_of(&f)
                .ok_or_else(|| Error::invariant("simple quotient has no block"))?;
            if poset.is_minimally_covered(block) {
                kernels.push(n);
            }
        }
        let mut inter = whole.clone();
        for n in &kernels {
            inter = inter.meet(n)?;
        }
        let contained = self
            .lattice
            .nodes()
            .iter()
            .filter(|s| !s.is_whole())
            .all(|s| kernels.iter().any(|n| s.is_subgroup_of(n)));
        let plain = contained && inter == g.center();
        let strict = contained && inter.is_trivial();
        if plain != self.kind().is_semisimple() || strict != (self.kind() == SemisimpleKind::StrictSemisimple) {
            return fail("the simple-quotient criterion disagrees with the component computation");
        }
        Ok((plain, strict))
    }

    /// For semisimple type: `M ↦ [M/Z(M)]` is a bijection onto the blocks,
    /// every block is minimally covered, and the blocks form an antichain.
    pub fn verify_block_correspondence(&self, poset: &BlockPoset) -> Result<()> {
        self.require_semisimple()?;
        let g = self.group();
        let mut hit = BTreeSet::new();
        for m in self.components() {
            let f = make_factor(g, m, &m.center().mark_normal())?;
            if !f.is_chief(&self.lattice)? || f.is_abelian() {
                return fail("M/Z(M) is not a non-abelian chief factor");
            }
            let b = poset.block_of(&f).ok_or_else(|| Error::invariant("M/Z(M) has no block"))?;
            if !hit.insert(b) {
                return fail("two components give the same block");
            }
        }
        if hit.len() != poset.len() {
            return fail("components do not reach every block");
        }
        if !(0..poset.len()).all(|b| poset.is_minimally_covered(b)) {
            return fail("a block is not minimally covered");
        }
        if !poset.is_antichain()? {
            return fail("blocks are not an antichain");
        }
        Ok(())
    }

    /// Each normal closure `K` of a component covers exactly one block,
    /// namely `[K/Z(K)]`, which is minimally covered; distinct closures give
    /// distinct blocks.
    pub fn verify_component_min_cover(&self, poset: &BlockPoset) -> Result<()> {
        let g = self.group();
        let closures: BTreeSet<Subgroup> = self
            .components()
            .iter()
            .map(|m| normal_closure(g, m.generators()))
            .collect();
        let mut seen = BTreeSet::new();
        for k in &closures {
            let f = make_factor(g, k, &k.center().mark_normal())?;
            if !f.is_chief(&self.lattice)? || f.is_abelian() {
                return fail("K/Z(K) is not a non-abelian chief factor");
            }
            let b = poset.block_of(&f).ok_or_else(|| Error::invariant("K/Z(K) has no block"))?;
            let covered: Vec<usize> = (0..poset.len())
                .filter(|&a| poset.subgroup_covers(a, k).unwrap_or(false))
                .collect();
            if covered != [b] || !poset.is_minimally_covered(b) || !seen.insert(b) {
                return fail("normal closure of a component does not cover exactly one new block");
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharSimpleType {
    Weak,
    Semisimple,
    Stacking,
}

impl CharSimpleType {
    pub fn as_str(self) -> &'static str {
        match self {
            CharSimpleType::Weak => "weak",
            CharSimpleType::Semisimple => "semisimple",
            CharSimpleType::Stacking => "stacking",
        }
    }
}

/// Whether the automorphism `map` sends block `a` strictly below block `b`:
/// blocks are keyed by centralizers and `ψ.a` has centralizer `ψ(C(a))`.
fn translate_below(poset: &BlockPoset, map: &[ElemId], a: usize, b: usize) -> bool {
    let ca = &poset.block(a).centralizer;
    let cb = &poset.block(b).centralizer;
    ca.order() < cb.order() && ca.elements().all(|x| cb.contains(map[x as usize]))
}

fn translate(poset: &BlockPoset, map: &[ElemId], a: usize) -> Option<usize> {
    let g = poset.group();
    let c = &poset.block(a).centralizer;
    let elems: Vec<ElemId> = c.elements().map(|x| map[x as usize]).collect();
    let image = Subgroup::from_elements(g, &elems).ok()?;
    poset.block_with_centralizer(&image)
}

/// Decides the type from the minimally covered blocks and the presence of
/// a component, then checks the chosen branch against the automorphisms
/// streamed by `autos`.
fn classify_with<F>(group: &FiniteGroup, node_cap: usize, mut autos: F) -> Result<CharSimpleType>
where
    F: FnMut(&mut dyn FnMut(&[ElemId]) -> ControlFlow<()>) -> Result<()>,
{
    let lattice = NormalLattice::new(group, node_cap)?;
    let poset = BlockPoset::new(&lattice)?;
    let min: Vec<usize> = (0..poset.len()).filter(|&b| poset.is_minimally_covered(b)).collect();
    if min.is_empty() {
        return Ok(CharSimpleType::Weak);
    }
    let has_component = !components_in(&lattice, node_cap)?.is_empty();
    if has_component {
        // The acting group is transitive on the blocks.
        let mut orbit = BTreeSet::from([min[0]]);
        autos(&mut |map| {
            if let Some(b) = translate(&poset, map, min[0]) {
                orbit.insert(b);
            }
            if orbit.len() == poset.len() {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if orbit.len() != poset.len() || min.len() != poset.len() {
            return fail("semisimple verdict without a transitive action on the blocks");
        }
        return Ok(CharSimpleType::Semisimple);
    }
    let pairs: Vec<(usize, usize)> = min.iter().flat_map(|&a| min.iter().map(move |&b| (a, b))).collect();
    let mut open: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
    autos(&mut |map| {
        open.retain(|&(a, b)| !translate_below(&poset, map, a, b));
        if open.is_empty() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if open.is_empty() {
        Ok(CharSimpleType::Stacking)
    } else {
        fail("characteristically simple group matches no type")
    }
}

/// The type of a characteristically simple group, with `Aut(G)` acting.
/// Abelian characteristically simple groups have no blocks and are weak.
pub fn charsimple_type(group: &FiniteGroup, node_cap: usize, search_cap: usize) -> Result<CharSimpleType> {
    if !is_characteristically_simple(group, search_cap)? {
        return Err(Error::NotCharacteristicallySimple);
    }
    classify_with(group, node_cap, |visit| {
        for_each_automorphism(group, search_cap, |m| visit(m))?;
        Ok(())
    })
}

/// Closes a list of automorphism tables under composition.
pub fn generated_automorphisms(group: &FiniteGroup, gens: &[Homomorphism], cap: usize) -> Result<Vec<Vec<ElemId>>> {
    for a in gens {
        if !a.source().same_group(group) || !a.target().same_group(group) || !a.is_isomorphism() {
            return Err(Error::NotHomomorphism("expected automorphisms of the group".into()));
        }
    }
    let identity: Vec<ElemId> = group.elements().collect();
    let mut seen = std::collections::HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut i = 0;
    while i < out.len() {
        for a in gens {
            let next: Vec<ElemId> = out[i].iter().map(|&x| a.apply(x)).collect();
            if seen.insert(next.clone()) {
                out.push(next);
                if out.len() > cap {
                    return Err(Error::CapExceeded {
                        cap,
                        context: "automorphism group closure".into(),
                    });
                }
            }
        }
        i += 1;
    }
    Ok(out)
}

/// The type of an `A`-simple group for the automorphism group `A`
/// generated by `a_gens`.
pub fn a_simple_type(group: &FiniteGroup, a_gens: &[Homomorphism], node_cap: usize, cap: usize) -> Result<CharSimpleType> {
    let a = generated_automorphisms(group, a_gens, cap)?;
    let lattice = NormalLattice::new(group, node_cap)?;
    if group.is_trivial() {
        return Err(Error::NotCharacteristicallySimple);
    }
    for n in lattice.nodes() {
        if n.is_trivial() || n.is_whole() {
            continue;
        }
        let invariant = a_gens
            .iter()
            .all(|h| n.generators().iter().all(|&x| n.contains(h.apply(x))));
        if invariant {
            return Err(Error::NotCharacteristicallySimple);
        }
    }
    classify_with(group, node_cap, |visit| {
        for m in &a {
            if visit(m).is_break() {
                break;
            }
        }
        Ok(())
    })
}

/// The common type of the representatives of a block, each computed from
/// its factor group.
pub fn block_type(poset: &BlockPoset, id: usize, node_cap: usize, search_cap: usize) -> Result<CharSimpleType> {
    let mut common = None;
    for r in &poset.block(id).representatives {
        let t = factor_type(r, node_cap, search_cap)?;
        match common {
            None => common = Some(t),
            Some(c) if c != t => return fail("representatives of one block have different types"),
            _ => {}
        }
    }
    common.ok_or_else(|| Error::invariant("block has no representatives"))
}

pub fn factor_type(f: &NormalFactor, node_cap: usize, search_cap: usize) -> Result<CharSimpleType> {
    let (q, _, _) = f.factor_group();
    charsimple_type(&q, node_cap, search_cap)
}
