use fixedbitset::FixedBitSet;

use super::{Closure, ElemId, FiniteGroup, Subgroup};

/// Above this many element pairs, [`commutator_subgroup`] switches to the
/// generator-pair construction.
pub const ALL_PAIRS_BUDGET: usize = 1 << 22;

/// Smallest subgroup containing `seed`.
pub fn subgroup_generated(group: &FiniteGroup, seed: &[ElemId]) -> Subgroup {
    let mut c = Closure::new(group);
    for &x in seed {
        c.add(x);
    }
    c.finish()
}

/// Smallest normal subgroup of `group` containing `seed`.
pub fn normal_closure(group: &FiniteGroup, seed: &[ElemId]) -> Subgroup {
    closure_under(group, group.generators(), seed).mark_normal()
}

/// Smallest subgroup containing `seed` and normalized by `within`.
pub fn normal_closure_in(within: &Subgroup, seed: &[ElemId]) -> Subgroup {
    closure_under(within.parent(), within.generators(), seed)
}

fn closure_under(group: &FiniteGroup, conjugators: &[ElemId], seed: &[ElemId]) -> Subgroup {
    let mut c = Closure::new(group);
    let mut queue: Vec<ElemId> = Vec::new();
    for &x in seed {
        if c.add(x) {
            queue.push(x);
        }
    }
    while let Some(h) = queue.pop() {
        for &g in conjugators {
            let y = group.conj(g, h);
            if c.add(y) {
                queue.push(y);
            }
        }
    }
    c.finish()
}

/// `[A, B]`, the subgroup generated by all commutators `[a, b]`.
///
/// Uses every element pair while `|A||B|` stays within [`ALL_PAIRS_BUDGET`],
/// otherwise [`commutator_subgroup_fast`].
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Subgroup {
    if a.order().saturating_mul(b.order()) <= ALL_PAIRS_BUDGET {
        all_pairs_commutator(a, b)
    } else {
        commutator_subgroup_fast(a, b)
    }
}

/// `[A, B]` from all element pairs.
pub fn all_pairs_commutator(a: &Subgroup, b: &Subgroup) -> Subgroup {
    let g = a.parent();
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut c = Closure::new(g);
    for x in a.elements() {
        for y in b.elements() {
            let k = g.commutator(x, y);
            if !seen.put(k as usize) {
                c.add(k);
            }
        }
    }
    c.finish()
}

/// `[A, B]` as the normal closure in `<A, B>` of the generator commutators.
pub fn commutator_subgroup_fast(a: &Subgroup, b: &Subgroup) -> Subgroup {
    let g = a.parent();
    let mut seed = Vec::new();
    for &x in a.generators() {
        for &y in b.generators() {
            seed.push(g.commutator(x, y));
        }
    }
    let mut conj: Vec<ElemId> = a.generators().to_vec();
    conj.extend_from_slice(b.generators());
    closure_under(g, &conj, &seed)
}

/// `{g : gs = sg for all s in S}`.
pub fn centralizer_subgroup(group: &FiniteGroup, s: &[ElemId]) -> Subgroup {
    let mut bits = FixedBitSet::with_capacity(group.order());
    for g in group.elements() {
        if s.iter().all(|&x| group.mul(g, x) == group.mul(x, g)) {
            bits.insert(g as usize);
        }
    }
    Subgroup::from_bits_unchecked(group, bits)
}

/// Conjugacy classes, each sorted, ordered by least element.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<Vec<ElemId>> {
    let mut seen = FixedBitSet::with_capacity(group.order());
    let mut classes = Vec::new();
    for x in group.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        seen.insert(x as usize);
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &g in group.generators() {
                let z = group.conj(g, y);
                if !seen.put(z as usize) {
                    class.push(z);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

impl FiniteGroup {
    pub fn center(&self) -> Subgroup {
        centralizer_subgroup(self, self.generators()).mark_normal()
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let w = self.whole();
        commutator_subgroup(&w, &w).mark_normal()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().is_whole()
    }
}

impl Subgroup {
    /// `C_self(S)`, the elements of this subgroup commuting with every element of `s`.
    pub fn centralizer_of(&self, s: &Subgroup) -> Subgroup {
        let g = self.parent();
        let gens = s.generators();
        let mut bits = FixedBitSet::with_capacity(g.order());
        for x in self.elements() {
            if gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)) {
                bits.insert(x as usize);
            }
        }
        Subgroup::from_bits_unchecked(g, bits)
    }

    /// `Z(self)`
    pub fn center(&self) -> Subgroup {
        self.centralizer_of(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, DEFAULT_ELEMENT_CAP};

    #[test]
    fn class_sizes_of_s4() {
        let g = named_group("S4", DEFAULT_ELEMENT_CAP).unwrap();
        let mut sizes: Vec<usize> = conjugacy_classes(&g).iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let g = named_group("S4", DEFAULT_ELEMENT_CAP).unwrap();
        let w = g.whole();
        assert_eq!(g.derived_subgroup().order(), 12);
        assert_eq!(all_pairs_commutator(&w, &w), commutator_subgroup_fast(&w, &w));
    }

    #[test]
    fn center_of_q8() {
        let g = named_group("Q8", DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.center().order(), 2);
    }
}
