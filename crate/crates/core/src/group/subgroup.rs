use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::{Closure, ElemId, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup of a [`FiniteGroup`], stored as a membership bitset.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    members: FixedBitSet,
    order: usize,
    gens: OnceLock<Vec<ElemId>>,
    normal: OnceLock<bool>,
}

impl Subgroup {
    pub(crate) fn from_parts(
        group: &FiniteGroup,
        members: FixedBitSet,
        order: usize,
        gens: Option<Vec<ElemId>>,
    ) -> Subgroup {
        let cell = OnceLock::new();
        if let Some(g) = gens {
            let _ = cell.set(g);
        }
        Subgroup {
            group: group.clone(),
            members,
            order,
            gens: cell,
            normal: OnceLock::new(),
        }
    }

    /// Wraps a member bitset that is already known to be a subgroup.
    pub(crate) fn from_bits_unchecked(group: &FiniteGroup, members: FixedBitSet) -> Subgroup {
        let order = members.count_ones(..);
        Subgroup::from_parts(group, members, order, None)
    }

    /// Builds a subgroup from an element set, verifying closure.
    ///
    /// The set is a subgroup iff the subgroup generated by its elements
    /// has the same members.
    pub fn from_elements(group: &FiniteGroup, elems: &[ElemId]) -> Result<Subgroup> {
        let mut bits = FixedBitSet::with_capacity(group.order());
        for &x in elems {
            bits.insert(x as usize);
        }
        if !bits.contains(0) {
            return Err(Error::invariant("element set does not contain the identity"));
        }
        let size = bits.count_ones(..);
        let mut closure = Closure::new(group);
        for &x in elems {
            closure.add(x);
            if closure.len() > size {
                return Err(Error::invariant("element set is not closed under products"));
            }
        }
        let s = closure.finish();
        if *s.bits() != bits {
            return Err(Error::invariant("element set is not closed under products"));
        }
        Ok(s)
    }

    pub fn whole(group: &FiniteGroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert_range(..);
        let s = Subgroup::from_parts(group, bits, group.order(), Some(group.generators().to_vec()));
        let _ = s.normal.set(true);
        s
    }

    pub fn trivial(group: &FiniteGroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(0);
        let s = Subgroup::from_parts(group, bits, 1, Some(Vec::new()));
        let _ = s.normal.set(true);
        s
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.group.order()
    }

    #[inline]
    pub fn contains(&self, x: ElemId) -> bool {
        self.members.contains(x as usize)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    /// Members in ascending id order.
    pub fn elements(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.members.ones().map(|x| x as ElemId)
    }

    /// A generating set, computed greedily on first use.
    pub fn generators(&self) -> &[ElemId] {
        self.gens.get_or_init(|| {
            let mut c = Closure::new(&self.group);
            let mut elems: Vec<ElemId> = self.elements().collect();
            elems.sort_by_key(|&x| std::cmp::Reverse(self.group.element_order(x)));
            for x in elems {
                if c.len() == self.order {
                    break;
                }
                c.add(x);
            }
            c.generators().to_vec()
        })
    }

    pub(crate) fn mark_normal(self) -> Subgroup {
        let _ = self.normal.set(true);
        self
    }

    /// Normality in the parent group, checked on generators and cached.
    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| {
            self.group.generators().iter().all(|&g| {
                self.generators()
                    .iter()
                    .all(|&h| self.contains(self.group.conj(g, h)))
            })
        })
    }

    /// True when `other` is normalized by every element of `self`.
    pub fn normalizes(&self, other: &Subgroup) -> bool {
        self.generators().iter().all(|&g| {
            other
                .generators()
                .iter()
                .all(|&h| other.contains(self.group.conj(g, h)))
        })
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group.same_group(&other.group) && self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.is_subgroup_of(other)
    }

    pub fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.group.same_group(&other.group) {
            Ok(())
        } else {
            Err(Error::DifferentParents)
        }
    }

    /// Intersection.
    pub fn meet(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        let s = Subgroup::from_bits_unchecked(&self.group, bits);
        if self.normal.get() == Some(&true) && other.normal.get() == Some(&true) {
            return Ok(s.mark_normal());
        }
        Ok(s)
    }

    /// Subgroup generated by both operands. For normal operands this is the set product.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        if other.is_subgroup_of(self) {
            return Ok(self.clone());
        }
        if self.is_subgroup_of(other) {
            return Ok(other.clone());
        }
        let (big, small) = if self.order >= other.order {
            (self, other)
        } else {
            (other, self)
        };
        let mut c = Closure::from_subgroup(&self.group, big);
        for &g in small.generators() {
            c.add(g);
        }
        let s = c.finish();
        if self.normal.get() == Some(&true) && other.normal.get() == Some(&true) {
            return Ok(s.mark_normal());
        }
        Ok(s)
    }

    /// Literal set product `{ab : a in self, b in other}` as a bitset.
    pub fn set_product_bits(&self, other: &Subgroup) -> Result<FixedBitSet> {
        self.same_parent(other)?;
        let mut bits = FixedBitSet::with_capacity(self.group.order());
        for a in self.elements() {
            for b in other.elements() {
                bits.insert(self.group.mul(a, b) as usize);
            }
        }
        Ok(bits)
    }

    /// `g H g^-1`
    pub fn conjugate(&self, g: ElemId) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.group.order());
        for x in self.elements() {
            bits.insert(self.group.conj(g, x) as usize);
        }
        let gens = self
            .gens
            .get()
            .map(|gs| gs.iter().map(|&h| self.group.conj(g, h)).collect());
        Subgroup::from_parts(&self.group, bits, self.order, gens)
    }

    /// Whether every pair of elements commutes.
    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter().all(|&a| {
            g.iter()
                .all(|&b| self.group.mul(a, b) == self.group.mul(b, a))
        })
    }

    /// Stable fingerprint of the member set: ascending ids.
    pub fn fingerprint(&self) -> Vec<ElemId> {
        self.elements().collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.order == other.order && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.members.as_slice().hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then by member set. Only meaningful within one parent.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order, self.group.order())
    }
}
