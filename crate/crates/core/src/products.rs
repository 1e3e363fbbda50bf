//! Generalized central and quasi-direct factorizations, the diagonal map,
//! and the semidirect factorization of an injective homomorphism with
//! normal image.

use crate::error::{Error, Result};
use crate::group::{
    direct_product, quotient, semidirect_product, subgroup_as_group, ElemId, FiniteGroup,
    Homomorphism, Subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorizationKind {
    GeneralizedCentral,
    QuasiDirect,
    Neither,
}

/// A set of normal subgroups of `whole`, with the subgroups generated by
/// all parts but one.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub whole: Subgroup,
    pub parts: Vec<Subgroup>,
    /// `complements[i]` is the join of every part except `parts[i]`.
    pub complements: Vec<Subgroup>,
    pub kind: FactorizationKind,
}

fn join_all<'a>(group: &FiniteGroup, parts: impl IntoIterator<Item = &'a Subgroup>) -> Result<Subgroup> {
    let mut j = group.trivial_subgroup();
    for p in parts {
        j = j.join(p)?;
    }
    Ok(j)
}

fn meet_all<'a>(whole: &Subgroup, parts: impl IntoIterator<Item = &'a Subgroup>) -> Result<Subgroup> {
    let mut m = whole.clone();
    for p in parts {
        m = m.meet(p)?;
    }
    Ok(m)
}

fn commute(a: &Subgroup, b: &Subgroup) -> bool {
    let g = a.parent();
    a.generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

impl Factorization {
    /// Classifies `parts` as a factorization of `whole`. Every part must be
    /// a subgroup of `whole` normalized by it.
    pub fn classify(whole: &Subgroup, parts: &[Subgroup]) -> Result<Factorization> {
        let g = whole.parent();
        for (i, p) in parts.iter().enumerate() {
            whole.same_parent(p)?;
            if !p.is_subgroup_of(whole) || !whole.normalizes(p) {
                return Err(Error::NotNormal(format!("part {i}")));
            }
        }
        let complements = (0..parts.len())
            .map(|i| join_all(g, parts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p)))
            .collect::<Result<Vec<_>>>()?;
        let generates = join_all(g, parts)? == *whole;
        let pairwise = (0..parts.len())
            .all(|i| (0..i).all(|j| commute(&parts[i], &parts[j])));
        let central = generates && pairwise;
        let independent = if parts.len() >= 2 {
            meet_all(whole, &complements)?.is_trivial()
        } else {
            true
        };
        let kind = match (central, independent) {
            (true, true) => FactorizationKind::QuasiDirect,
            (true, false) => FactorizationKind::GeneralizedCentral,
            _ => FactorizationKind::Neither,
        };
        Ok(Factorization {
            whole: whole.clone(),
            parts: parts.to_vec(),
            complements,
            kind,
        })
    }

    pub fn is_generalized_central(&self) -> bool {
        self.kind != FactorizationKind::Neither
    }

    pub fn is_quasi_direct(&self) -> bool {
        self.kind == FactorizationKind::QuasiDirect
    }

    /// `G_J` for the parts selected by the bit mask `subset`.
    pub fn generated_by(&self, subset: u32) -> Result<Subgroup> {
        join_all(
            self.whole.parent(),
            self.parts
                .iter()
                .enumerate()
                .filter(|&(i, _)| subset >> i & 1 == 1)
                .map(|(_, p)| p),
        )
    }

    /// The independence property quantified over every family `X` of
    /// subsets of the parts: if `X` has empty intersection then the
    /// subgroups `G_A` (`A` in `X`) intersect trivially, and the parts
    /// generate `whole`. Exhaustive; at most four parts.
    pub fn independence_full(&self) -> Result<bool> {
        let n = self.parts.len();
        if n > 4 {
            return Err(Error::CapExceeded {
                cap: 4,
                context: "exhaustive independence check over parts".into(),
            });
        }
        if join_all(self.whole.parent(), &self.parts)? != self.whole {
            return Ok(false);
        }
        let subsets = 1usize << n;
        let full: u32 = (1u32 << n) - 1;
        let g_sub: Vec<Subgroup> = (0..subsets as u32)
            .map(|a| self.generated_by(a))
            .collect::<Result<_>>()?;
        for family in 1u64..(1u64 << subsets) {
            let mut common = full;
            let mut inter = self.whole.bits().clone();
            for a in 0..subsets {
                if family >> a & 1 == 1 {
                    common &= a as u32;
                    inter.intersect_with(g_sub[a].bits());
                }
            }
            if common == 0 && inter.count_ones(..) != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks that every part is normal in `group` and classifies.
fn classify_in(group: &FiniteGroup, parts: &[Subgroup]) -> Result<Factorization> {
    for (i, p) in parts.iter().enumerate() {
        if !p.parent().same_group(group) {
            return Err(Error::DifferentParents);
        }
        if !p.is_normal() {
            return Err(Error::NotNormal(format!("part {i}")));
        }
    }
    Factorization::classify(&group.whole(), parts)
}

/// Parts generate `group` and commute pairwise.
pub fn is_generalized_central_factorization(group: &FiniteGroup, parts: &[Subgroup]) -> Result<bool> {
    Ok(classify_in(group, parts)?.is_generalized_central())
}

/// Generalized central and the complements of the parts intersect trivially.
pub fn is_quasi_direct_factorization(group: &FiniteGroup, parts: &[Subgroup]) -> Result<bool> {
    Ok(classify_in(group, parts)?.is_quasi_direct())
}

/// The diagonal map `G -> Π G/G_{S\{N}}`.
#[derive(Clone, Debug)]
pub struct DiagonalMap {
    pub kernel: Subgroup,
    pub injective: bool,
    /// The quotients `G/G_{S\{N}}` with their projections.
    pub quotients: Vec<(FiniteGroup, Homomorphism)>,
    /// The map into the direct product, when the product fits under the cap.
    pub map: Option<Homomorphism>,
    /// Coordinate subgroups of the materialized product.
    pub coordinates: Vec<Subgroup>,
}

pub fn diagonal_map(group: &FiniteGroup, parts: &[Subgroup], cap: usize) -> Result<DiagonalMap> {
    let f = classify_in(group, parts)?;
    if !f.is_generalized_central() || parts.len() < 2 {
        return Err(Error::NotGeneralizedCentral);
    }
    let whole = group.whole();
    let kernel = meet_all(&whole, &f.complements)?;
    let fail = |m: &str| Err(Error::invariant(format!("diagonal map: {m}")));
    if !kernel.is_subgroup_of(&group.center()) {
        return fail("kernel is not central");
    }
    for (p, c) in parts.iter().zip(&f.complements) {
        // N lands in its own coordinate and fills it: N G_{S\{N}} = G.
        if p.join(c)? != whole {
            return fail("a part does not fill its coordinate");
        }
    }
    let injective = kernel.is_trivial();
    if injective != f.is_quasi_direct() {
        return fail("injectivity disagrees with quasi-directness");
    }
    let quotients = f
        .complements
        .iter()
        .map(|c| quotient(group, c))
        .collect::<Result<Vec<_>>>()?;
    let total = quotients
        .iter()
        .try_fold(1usize, |acc, (q, _)| acc.checked_mul(q.order()))
        .unwrap_or(usize::MAX);
    let (map, coordinates) = if total <= cap {
        let mut product = quotients[0].0.clone();
        for (q, _) in &quotients[1..] {
            product = direct_product(&product, q, cap)?;
        }
        let encode = |coords: &[ElemId]| -> ElemId {
            let mut id = 0;
            for ((q, _), &c) in quotients.iter().zip(coords) {
                id = id * q.order() as ElemId + c;
            }
            id
        };
        let table = group
            .elements()
            .map(|x| {
                let coords: Vec<ElemId> = quotients.iter().map(|(_, pi)| pi.apply(x)).collect();
                encode(&coords)
            })
            .collect();
        let d = Homomorphism::new(group, &product, table)?;
        if d.kernel() != kernel {
            return fail("kernel differs from the intersection of complements");
        }
        let coordinates = (0..quotients.len())
            .map(|i| {
                let elems: Vec<ElemId> = quotients[i]
                    .0
                    .elements()
                    .map(|c| {
                        let mut coords = vec![0; quotients.len()];
                        coords[i] = c;
                        encode(&coords)
                    })
                    .collect();
                Subgroup::from_elements(&product, &elems)
            })
            .collect::<Result<Vec<_>>>()?;
        let image = d.image();
        for (i, (c, p)) in coordinates.iter().zip(parts).enumerate() {
            if image.meet(c)? != *c || d.image_of(p) != *c {
                return fail(&format!("image does not fill coordinate {i}"));
            }
        }
        (Some(d), coordinates)
    } else {
        (None, Vec::new())
    };
    Ok(DiagonalMap {
        kernel,
        injective,
        quotients,
        map,
        coordinates,
    })
}

/// `{δ^-1(K)}` for an injective `δ` into a direct product with factors `K`,
/// as a quasi-direct factorization of the subgroup it generates.
pub fn subdirect_quasi_factorization(delta: &Homomorphism, factors: &[Subgroup]) -> Result<Factorization> {
    if !delta.is_injective() {
        return Err(Error::NotInjective);
    }
    let image = delta.image();
    let mut parts = Vec::with_capacity(factors.len());
    for (i, k) in factors.iter().enumerate() {
        if !k.parent().same_group(delta.target()) {
            return Err(Error::DifferentParents);
        }
        if image.meet(k)? != *k {
            return Err(Error::ImageNotFullOnFactor(i));
        }
        parts.push(delta.preimage(k));
    }
    let h = join_all(delta.source(), &parts)?;
    let f = Factorization::classify(&h, &parts)?;
    if !f.is_quasi_direct() {
        return Err(Error::invariant("preimages of the factors are not quasi-direct"));
    }
    Ok(f)
}

/// Output of [`central_quotient_factorization`].
#[derive(Clone, Debug)]
pub struct QuotientFactorization {
    /// `M = ∩_S G_{S\{S}} N`
    pub m: Subgroup,
    /// `G/M`, its projection, and the factorization `{SM/M : S not in M}`,
    /// present when `M` is proper.
    pub quotient: Option<(FiniteGroup, Homomorphism, Factorization)>,
}

pub fn central_quotient_factorization(
    group: &FiniteGroup,
    parts: &[Subgroup],
    n: &Subgroup,
) -> Result<QuotientFactorization> {
    let f = classify_in(group, parts)?;
    if !f.is_generalized_central() || parts.len() < 2 {
        return Err(Error::NotGeneralizedCentral);
    }
    if !n.parent().same_group(group) {
        return Err(Error::DifferentParents);
    }
    if !n.is_normal() || n.is_whole() {
        return Err(Error::NotNormal("N must be a proper normal subgroup".into()));
    }
    let whole = group.whole();
    let shifted = f
        .complements
        .iter()
        .map(|c| c.join(n))
        .collect::<Result<Vec<_>>>()?;
    let m = meet_all(&whole, &shifted)?.mark_normal();
    for &x in m.generators() {
        for &g in group.generators() {
            if !n.contains(group.commutator(x, g)) {
                return Err(Error::invariant("M/N is not central in G/N"));
            }
        }
    }
    if m.is_whole() {
        return Ok(QuotientFactorization { m, quotient: None });
    }
    let (q, pi) = quotient(group, &m)?;
    let mut images: Vec<Subgroup> = Vec::new();
    for s in parts {
        if s.is_subgroup_of(&m) {
            continue;
        }
        let img = pi.image_of(s).mark_normal();
        if !images.contains(&img) {
            images.push(img);
        }
    }
    let fq = Factorization::classify(&q.whole(), &images)?;
    if images.len() >= 2 && !fq.is_quasi_direct() {
        return Err(Error::invariant("quotient factorization is not quasi-direct"));
    }
    Ok(QuotientFactorization {
        m,
        quotient: Some((q, pi, fq)),
    })
}

/// Output of [`compression_semidirect`].
#[derive(Clone, Debug)]
pub struct CompressionSemidirect {
    /// `G ⋊_ψ O`
    pub p: FiniteGroup,
    /// `(g, o) ↦ ψ(g) o`
    pub pi: Homomorphism,
    /// `g ↦ (g, 1)`
    pub iota: Homomorphism,
    pub ker_pi: Subgroup,
    /// Whether `ψ(G) = H`. Between finite groups an injective map with
    /// normal image is either onto or not a compression at all.
    pub image_is_whole: bool,
    /// A proper normal compression would be a non-surjective one with
    /// dense image; the finite setting never has one.
    pub proper_compression: bool,
}

/// Factors `ψ: G -> H` (injective, normal image) through `G ⋊_ψ O` for a
/// subgroup `O` of `H` (default `H`), with `O` acting on `G` by
/// `φ_o(g) = ψ^-1(o ψ(g) o^-1)`.
pub fn compression_semidirect(
    psi: &Homomorphism,
    o: Option<&Subgroup>,
    cap: usize,
) -> Result<CompressionSemidirect> {
    let (g, h) = (psi.source(), psi.target());
    if !psi.is_injective() {
        return Err(Error::NotInjective);
    }
    let image = psi.image();
    if !image.is_normal() {
        return Err(Error::ImageNotNormal);
    }
    let o = match o {
        Some(o) => {
            if !o.parent().same_group(h) {
                return Err(Error::DifferentParents);
            }
            o.clone()
        }
        None => h.whole(),
    };
    let (og, emb) = subgroup_as_group(&o);
    let mut local = vec![ElemId::MAX; h.order()];
    for x in og.elements() {
        local[emb.apply(x) as usize] = x;
    }
    let mut psi_inv = vec![ElemId::MAX; h.order()];
    for x in g.elements() {
        psi_inv[psi.apply(x) as usize] = x;
    }
    let action: Vec<Vec<ElemId>> = og
        .elements()
        .map(|oi| {
            let ov = emb.apply(oi);
            g.elements()
                .map(|x| psi_inv[h.conj(ov, psi.apply(x)) as usize])
                .collect()
        })
        .collect();
    let p = semidirect_product(g, &og, action, cap)?;
    let t = og.order() as ElemId;
    let pi_table = p
        .elements()
        .map(|x| h.mul(psi.apply(x / t), emb.apply(x % t)))
        .collect();
    let pi = Homomorphism::new(&p, h, pi_table)?;
    let iota = Homomorphism::new(g, &p, g.elements().map(|x| x * t).collect())?;
    let ker_pi = pi.kernel();
    let fail = |m: &str| Err(Error::invariant(format!("compression factorization: {m}")));

    if iota.then(&pi)?.table() != psi.table() {
        return fail("ψ differs from π∘ι");
    }
    let expected: Vec<ElemId> = g
        .elements()
        .filter(|&x| o.contains(psi.apply(x)))
        .map(|x| g.inv(x) * t + local[psi.apply(x) as usize])
        .collect();
    if Subgroup::from_elements(&p, &expected)? != ker_pi {
        return fail("kernel is not {(g^-1, ψ(g))}");
    }
    if pi.image() != image.join(&o)? {
        return fail("π is not onto ψ(G)O");
    }
    let iota_g = iota.image().mark_normal();
    if !iota_g.is_normal() || !ker_pi.is_normal() {
        return fail("ι(G) or ker π is not normal");
    }
    if !iota_g.meet(&ker_pi)?.is_trivial() || !commute(&iota_g, &ker_pi) {
        return fail("ι(G) and ker π do not intersect trivially and commute");
    }
    if o.is_subgroup_of(&image) {
        if iota_g.join(&ker_pi)? != p.whole() {
            return fail("ι(G) ker π is not all of the semidirect product");
        }
        let anti = Homomorphism::new(g, &p, expected.clone())?;
        if !anti.is_injective() || anti.image() != ker_pi {
            return fail("ker π is not isomorphic to G");
        }
    }
    let image_is_whole = image.is_whole();
    Ok(CompressionSemidirect {
        p,
        pi,
        iota,
        ker_pi,
        image_is_whole,
        proper_compression: false,
    })
}
