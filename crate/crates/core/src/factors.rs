//! Normal factors `K/L`, their centralizers and the association relation.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{quotient, subgroup_as_group, FiniteGroup, Homomorphism, Subgroup};
use crate::lattice::NormalLattice;

/// Product `NM` of two normal subgroups.
///
/// Computed as the join. For small operands a debug build also compares it
/// with the literal set product.
pub fn normal_product(n: &Subgroup, m: &Subgroup) -> Result<Subgroup> {
    let j = n.join(m)?;
    if cfg!(debug_assertions) && n.order() * m.order() <= 1 << 16 {
        debug_assert_eq!(&n.set_product_bits(m)?, j.bits(), "set product is not the join");
    }
    Ok(j)
}

/// A normal factor `K/L` with `L < K` both normal in the ambient group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalFactor {
    upper: Subgroup,
    lower: Subgroup,
}

/// Validates `(K, L)` as a normal factor of `group`.
pub fn make_factor(group: &FiniteGroup, k: &Subgroup, l: &Subgroup) -> Result<NormalFactor> {
    if !k.parent().same_group(group) || !l.parent().same_group(group) {
        return Err(Error::DifferentParents);
    }
    if !k.is_normal() {
        return Err(Error::NotNormal("upper term of a factor".into()));
    }
    if !l.is_normal() {
        return Err(Error::NotNormal("lower term of a factor".into()));
    }
    if !l.is_proper_subgroup_of(k) {
        return Err(Error::NotStrictlyNested);
    }
    Ok(NormalFactor::new_unchecked(k.clone(), l.clone()))
}

impl NormalFactor {
    pub(crate) fn new_unchecked(upper: Subgroup, lower: Subgroup) -> NormalFactor {
        NormalFactor { upper, lower }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.upper.parent()
    }

    /// `K`
    pub fn upper(&self) -> &Subgroup {
        &self.upper
    }

    /// `L`
    pub fn lower(&self) -> &Subgroup {
        &self.lower
    }

    /// `|K/L|`
    pub fn order(&self) -> usize {
        self.upper.order() / self.lower.order()
    }

    fn same_group(&self, other: &NormalFactor) -> Result<()> {
        if self.group().same_group(other.group()) {
            Ok(())
        } else {
            Err(Error::DifferentParents)
        }
    }

    /// `K/L` as a group, with the projection from `K` (as a group in its own
    /// right) and the inclusion of `K` into the ambient group.
    pub fn factor_group(&self) -> (FiniteGroup, Homomorphism, Homomorphism) {
        let (k, emb) = subgroup_as_group(&self.upper);
        let l = emb.preimage(&self.lower).mark_normal();
        let (q, pi) = quotient(&k, &l).expect("lower term is normal in the upper term");
        (q, pi, emb)
    }

    /// `C_G(K/L) = {g : [g, k] in L for all k in K}`.
    ///
    /// Testing generators of `K` suffices: for fixed `g`, the `k` with
    /// `[g, k] in L` form a subgroup of `K` when `L` is normal.
    pub fn centralizer(&self) -> Subgroup {
        self.centralizer_over(self.upper.generators())
    }

    /// [`centralizer`](Self::centralizer) tested against every element of `K`.
    pub fn centralizer_oracle(&self) -> Subgroup {
        let all: Vec<_> = self.upper.elements().collect();
        self.centralizer_over(&all)
    }

    fn centralizer_over(&self, ks: &[u32]) -> Subgroup {
        let g = self.group();
        let mut bits = FixedBitSet::with_capacity(g.order());
        for x in g.elements() {
            if ks.iter().all(|&k| self.lower.contains(g.commutator(x, k))) {
                bits.insert(x as usize);
            }
        }
        Subgroup::from_bits_unchecked(g, bits).mark_normal()
    }

    /// `C_H(K/L)` for a subgroup `H` of the ambient group.
    pub fn centralizer_in(&self, h: &Subgroup) -> Result<Subgroup> {
        self.upper.same_parent(h)?;
        let c = self.centralizer();
        c.meet(h)
    }

    /// `[K, K] <= L`, checked on commutators of generators of `K`.
    pub fn is_abelian(&self) -> bool {
        let g = self.group();
        let gens = self.upper.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.lower.contains(g.commutator(a, b))))
    }

    pub fn is_chief(&self, lattice: &NormalLattice) -> Result<bool> {
        lattice.is_chief_factor(&self.upper, &self.lower)
    }
}

/// `K1 L2 = K2 L1`, `K1 ∩ L1 L2 = L1` and `K2 ∩ L1 L2 = L2`.
pub fn are_associated(f1: &NormalFactor, f2: &NormalFactor) -> Result<bool> {
    f1.same_group(f2)?;
    let l1l2 = normal_product(&f1.lower, &f2.lower)?;
    Ok(normal_product(&f1.upper, &f2.lower)? == normal_product(&f2.upper, &f1.lower)?
        && f1.upper.meet(&l1l2)? == f1.lower
        && f2.upper.meet(&l1l2)? == f2.lower)
}

/// Whether `K2 = K1 L2` and `L1 = K1 ∩ L2`.
pub fn is_internal_compression(f1: &NormalFactor, f2: &NormalFactor) -> Result<bool> {
    f1.same_group(f2)?;
    Ok(normal_product(&f1.upper, &f2.lower)? == f2.upper && f1.upper.meet(&f2.lower)? == f1.lower)
}

/// `(K1 K2)/(L1 L2)`, an internal compression of both associated inputs.
pub fn common_compression(f1: &NormalFactor, f2: &NormalFactor) -> Result<NormalFactor> {
    if !are_associated(f1, f2)? {
        return Err(Error::NotAssociated);
    }
    let c = NormalFactor::new_unchecked(
        normal_product(&f1.upper, &f2.upper)?,
        normal_product(&f1.lower, &f2.lower)?,
    );
    if !c.lower.is_proper_subgroup_of(&c.upper) {
        return Err(Error::invariant("common compression is degenerate"));
    }
    if !is_internal_compression(f1, &c)? || !is_internal_compression(f2, &c)? {
        return Err(Error::invariant("common compression is not a compression of both factors"));
    }
    Ok(c)
}

/// Chief factors as vertices, association between distinct factors as edges.
#[derive(Clone, Debug)]
pub struct AssociationGraph {
    pub factors: Vec<NormalFactor>,
    pub edges: Vec<(usize, usize)>,
}

impl AssociationGraph {
    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.factors.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

pub fn association_graph(lattice: &NormalLattice) -> Result<AssociationGraph> {
    let factors = lattice.chief_factors();
    let mut edges = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if are_associated(&factors[i], &factors[j])? {
                edges.push((i, j));
            }
        }
    }
    Ok(AssociationGraph { factors, edges })
}

impl std::fmt::Debug for NormalFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "NormalFactor({}/{})", self.upper.order(), self.lower.order())
    }
}
