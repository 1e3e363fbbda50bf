//! Explicitly enumerated finite groups.
//!
//! Every group carries a dense element numbering `0..order` with the
//! identity at `0`. Multiplication is either a precomputed Cayley table
//! (small groups) or delegated to the construction the group came from.

mod aut;
mod closure;
mod construct;
mod hom;
mod named;
mod ops;
mod perm;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use aut::{
    automorphism_group, for_each_automorphism, is_characteristically_simple, AutSearchStats,
    DEFAULT_SEARCH_CAP,
};
pub(crate) use closure::Closure;
pub use construct::{
    central_product, direct_product, group_from_permutations, quotient, semidirect_product,
    semidirect_product_from_generators, subgroup_as_group, wreath_with_c2,
};
pub use hom::Homomorphism;
pub use named::{is_named_group, named_group, NAMED_GROUPS};
pub use ops::{
    all_pairs_commutator, ALL_PAIRS_BUDGET, centralizer_subgroup, commutator_subgroup, commutator_subgroup_fast,
    conjugacy_classes, normal_closure, normal_closure_in, subgroup_generated,
};
pub use perm::Perm;
pub use subgroup::Subgroup;

/// Index of an element inside its parent group's element table.
pub type ElemId = u32;

/// Default cap on the number of elements of any constructed group.
pub const DEFAULT_ELEMENT_CAP: usize = 30_000;

/// Groups up to this order get a full Cayley table at construction time.
pub(crate) const TABLE_MAX_ORDER: usize = 1024;

/// How a group was built.
#[derive(Debug, Clone)]
pub enum Provenance {
    Permutations { points: usize, generators: Vec<Perm> },
    DirectProduct { left: FiniteGroup, right: FiniteGroup },
    Semidirect { base: FiniteGroup, top: FiniteGroup },
    Quotient { parent: FiniteGroup },
    Subgroup { parent: FiniteGroup },
}

pub(crate) enum Backend {
    Perm {
        perms: Vec<Perm>,
        index: HashMap<Perm, ElemId>,
    },
    Product {
        left: FiniteGroup,
        right: FiniteGroup,
    },
    Semidirect {
        base: FiniteGroup,
        top: FiniteGroup,
        /// `action[h][n]` is the image of base element `n` under the automorphism of top element `h`.
        action: Vec<Vec<ElemId>>,
    },
    Quotient {
        parent: FiniteGroup,
        reps: Vec<ElemId>,
        coset_of: Vec<ElemId>,
    },
    Sub {
        parent: FiniteGroup,
        elems: Vec<ElemId>,
        local: Vec<ElemId>,
    },
}

pub(crate) struct GroupData {
    order: usize,
    inv: Vec<ElemId>,
    gens: Vec<ElemId>,
    table: Option<Vec<ElemId>>,
    backend: Backend,
    provenance: Provenance,
    label: Option<String>,
}

/// A finite group with an explicit element table. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl FiniteGroup {
    /// Finishes construction: computes inverses and, for small groups, the table.
    pub(crate) fn assemble(
        order: usize,
        gens: Vec<ElemId>,
        backend: Backend,
        provenance: Provenance,
        inv: Option<Vec<ElemId>>,
    ) -> FiniteGroup {
        let mut data = GroupData {
            order,
            inv: Vec::new(),
            gens,
            table: None,
            backend,
            provenance,
            label: None,
        };
        data.inv = match inv {
            Some(inv) => inv,
            None => (0..order as ElemId).map(|x| data.backend_inv(x)).collect(),
        };
        if order <= TABLE_MAX_ORDER {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order as ElemId {
                for b in 0..order as ElemId {
                    table.push(data.backend_mul(a, b));
                }
            }
            data.table = Some(table);
        }
        data.gens.retain(|&g| g != 0);
        data.gens.dedup();
        FiniteGroup(Arc::new(data))
    }

    pub(crate) fn with_label(self, label: &str) -> FiniteGroup {
        let mut data = Arc::try_unwrap(self.0).unwrap_or_else(|_| unreachable!("fresh group"));
        data.label = Some(label.to_string());
        FiniteGroup(Arc::new(data))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// Generators of the group (never contains the identity).
    pub fn generators(&self) -> &[ElemId] {
        &self.0.gens
    }

    pub fn provenance(&self) -> &Provenance {
        &self.0.provenance
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    /// True when both handles refer to the same group object.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.0.table {
            Some(t) => t[a as usize * self.0.order + b as usize],
            None => self.0.backend_mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.0.inv[a as usize]
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a b a^-1 b^-1`
    #[inline]
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, x: ElemId, mut e: u64) -> ElemId {
        let mut acc = 0;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: ElemId) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        0..self.0.order as ElemId
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    /// The permutation of a permutation-constructed element.
    pub fn permutation(&self, x: ElemId) -> Option<&Perm> {
        match &self.0.backend {
            Backend::Perm { perms, .. } => perms.get(x as usize),
            _ => None,
        }
    }

    /// Looks up a permutation in a permutation-constructed group.
    pub fn find_permutation(&self, p: &Perm) -> Option<ElemId> {
        match &self.0.backend {
            Backend::Perm { index, .. } => index.get(p).copied(),
            _ => None,
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::whole(self)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self)
    }

    /// Exhaustive check of the group axioms by Light's test: the elements
    /// `s` with `x(sy) = (xs)y` for all `x, y` are closed under products, so
    /// it suffices to test the generators once they generate every element
    /// by right multiplication. `O(n^2)` products per generator.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order() as ElemId;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return false;
            }
        }
        let mut reached = vec![false; n as usize];
        reached[0] = true;
        let mut queue = vec![0 as ElemId];
        while let Some(x) = queue.pop() {
            for &s in self.generators() {
                let y = self.mul(x, s);
                if !reached[y as usize] {
                    reached[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        if reached.iter().any(|&r| !r) {
            return false;
        }
        for &s in self.generators() {
            let right: Vec<ElemId> = (0..n).map(|y| self.mul(s, y)).collect();
            for x in 0..n {
                let xs = self.mul(x, s);
                for y in 0..n {
                    if self.mul(x, right[y as usize]) != self.mul(xs, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Associativity on `samples` pseudo-random triples (for groups too large
    /// for the exhaustive check).
    pub fn verify_axioms_sampled(&self, samples: usize, seed: u64) -> bool {
        let n = self.order() as ElemId;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut next = || rng.gen_range(0..n);
        for _ in 0..samples {
            let (a, b, c) = (next(), next(), next());
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return false;
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(a, 0) != a {
                return false;
            }
        }
        true
    }
}

impl GroupData {
    fn backend_mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.backend {
            Backend::Perm { perms, index } => {
                let p = perms[a as usize].compose(&perms[b as usize]);
                index[&p]
            }
            Backend::Product { left, right } => {
                let r = right.order() as ElemId;
                let (a1, a2) = (a / r, a % r);
                let (b1, b2) = (b / r, b % r);
                left.mul(a1, b1) * r + right.mul(a2, b2)
            }
            Backend::Semidirect { base, top, action } => {
                let t = top.order() as ElemId;
                let (n1, h1) = (a / t, a % t);
                let (n2, h2) = (b / t, b % t);
                let n = base.mul(n1, action[h1 as usize][n2 as usize]);
                n * t + top.mul(h1, h2)
            }
            Backend::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.mul(reps[a as usize], reps[b as usize]) as usize],
            Backend::Sub {
                parent,
                elems,
                local,
            } => local[parent.mul(elems[a as usize], elems[b as usize]) as usize],
        }
    }

    fn backend_inv(&self, a: ElemId) -> ElemId {
        match &self.backend {
            Backend::Perm { perms, index } => index[&perms[a as usize].inverse()],
            Backend::Product { left, right } => {
                let r = right.order() as ElemId;
                left.inv(a / r) * r + right.inv(a % r)
            }
            Backend::Semidirect { base, top, action } => {
                let t = top.order() as ElemId;
                let (n, h) = (a / t, a % t);
                let hi = top.inv(h);
                action[hi as usize][base.inv(n) as usize] * t + hi
            }
            Backend::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.inv(reps[a as usize]) as usize],
            Backend::Sub {
                parent,
                elems,
                local,
            } => local[parent.inv(elems[a as usize]) as usize],
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Some(l) => write!(f, "FiniteGroup({l}, order {})", self.order()),
            None => write!(f, "FiniteGroup(order {})", self.order()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_named_groups_satisfy_axioms() {
        for name in ["C6", "S4", "Q8", "D8", "V4", "SL23"] {
            let g = named_group(name, DEFAULT_ELEMENT_CAP).unwrap();
            assert!(g.verify_axioms(), "{name}");
        }
    }

    #[test]
    fn element_orders() {
        let c6 = named_group("C6", DEFAULT_ELEMENT_CAP).unwrap();
        let mut orders: Vec<usize> = c6.elements().map(|x| c6.element_order(x)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
        assert_eq!(c6.pow(c6.generators()[0], 6), 0);
    }
}
