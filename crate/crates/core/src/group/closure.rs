use fixedbitset::FixedBitSet;

use super::{ElemId, FiniteGroup, Subgroup};

/// Incremental subgroup closure.
///
/// The element set is kept closed under right multiplication by every
/// generator added so far, which for a finite group makes it a subgroup.
pub(crate) struct Closure<'g> {
    group: &'g FiniteGroup,
    members: FixedBitSet,
    elems: Vec<ElemId>,
    gens: Vec<ElemId>,
}

impl<'g> Closure<'g> {
    pub(crate) fn new(group: &'g FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        Closure {
            group,
            members,
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    /// Starts from an existing subgroup, reusing its generators.
    pub(crate) fn from_subgroup(group: &'g FiniteGroup, h: &Subgroup) -> Self {
        Closure {
            group,
            members: h.bits().clone(),
            elems: h.elements().collect(),
            gens: h.generators().to_vec(),
        }
    }

    pub(crate) fn contains(&self, x: ElemId) -> bool {
        self.members.contains(x as usize)
    }

    pub(crate) fn len(&self) -> usize {
        self.elems.len()
    }

    /// Adds `s` as a generator. Returns false if it was already a member.
    pub(crate) fn add(&mut self, s: ElemId) -> bool {
        if self.contains(s) {
            return false;
        }
        self.gens.push(s);
        let old = self.elems.len();
        for i in 0..old {
            let y = self.group.mul(self.elems[i], s);
            self.insert(y);
        }
        let mut idx = old;
        while idx < self.elems.len() {
            let x = self.elems[idx];
            for gi in 0..self.gens.len() {
                let y = self.group.mul(x, self.gens[gi]);
                self.insert(y);
            }
            idx += 1;
        }
        true
    }

    fn insert(&mut self, y: ElemId) {
        if !self.members.put(y as usize) {
            self.elems.push(y);
        }
    }

    pub(crate) fn generators(&self) -> &[ElemId] {
        &self.gens
    }

    pub(crate) fn finish(self) -> Subgroup {
        Subgroup::from_parts(self.group, self.members, self.elems.len(), Some(self.gens))
    }
}
