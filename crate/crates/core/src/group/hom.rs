use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{ElemId, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A homomorphism between two finite groups, stored as a full id table.
#[derive(Clone)]
pub struct Homomorphism {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Arc<Vec<ElemId>>,
}

impl Homomorphism {
    /// Validates `map` as a homomorphism.
    ///
    /// Checking `f(xg) = f(x) f(g)` for every `x` and every generator `g`
    /// suffices: every element is a word in the generators.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<ElemId>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::NotHomomorphism(format!(
                "table has {} entries for a group of order {}",
                map.len(),
                source.order()
            )));
        }
        if map.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::NotHomomorphism("image id out of range".into()));
        }
        if map[0] != 0 {
            return Err(Error::NotHomomorphism("identity not preserved".into()));
        }
        for x in source.elements() {
            for &g in source.generators() {
                let lhs = map[source.mul(x, g) as usize];
                let rhs = target.mul(map[x as usize], map[g as usize]);
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(format!(
                        "f({x}*{g}) != f({x})*f({g})"
                    )));
                }
            }
        }
        Ok(Self::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(source: &FiniteGroup, target: &FiniteGroup, map: Vec<ElemId>) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map: Arc::new(map),
        }
    }

    /// Extends an assignment of generator images to a homomorphism, if one exists.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gens: &[ElemId],
        images: &[ElemId],
    ) -> Result<Self> {
        const UNSET: ElemId = ElemId::MAX;
        let mut map = vec![UNSET; source.order()];
        map[0] = 0;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&g, &img) in gens.iter().zip(images) {
                let y = source.mul(x, g);
                let v = target.mul(map[x as usize], img);
                if map[y as usize] == UNSET {
                    map[y as usize] = v;
                    queue.push(y);
                } else if map[y as usize] != v {
                    return Err(Error::NotHomomorphism("generator images are inconsistent".into()));
                }
            }
            i += 1;
        }
        if queue.len() != source.order() {
            return Err(Error::NotHomomorphism("listed elements do not generate the source".into()));
        }
        Homomorphism::new(source, target, map)
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self::new_unchecked(group, group, group.elements().collect())
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: ElemId) -> ElemId {
        self.map[x as usize]
    }

    pub fn table(&self) -> &[ElemId] {
        &self.map
    }

    pub fn kernel(&self) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.source.order());
        for x in self.source.elements() {
            if self.apply(x) == 0 {
                bits.insert(x as usize);
            }
        }
        Subgroup::from_bits_unchecked(&self.source, bits).mark_normal()
    }

    pub fn image(&self) -> Subgroup {
        self.image_of(&self.source.whole())
    }

    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for x in h.elements() {
            bits.insert(self.apply(x) as usize);
        }
        let gens = h.generators().iter().map(|&x| self.apply(x)).collect();
        let order = bits.count_ones(..);
        Subgroup::from_parts(&self.target, bits, order, Some(gens))
    }

    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.source.order());
        for x in self.source.elements() {
            if h.contains(self.apply(x)) {
                bits.insert(x as usize);
            }
        }
        Subgroup::from_bits_unchecked(&self.source, bits)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if !self.target.same_group(&other.source) {
            return Err(Error::DifferentParents);
        }
        let map = self.map.iter().map(|&y| other.apply(y)).collect();
        Ok(Self::new_unchecked(&self.source, &other.target, map))
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<Homomorphism> {
        if !self.is_isomorphism() {
            return Err(Error::NotInjective);
        }
        let mut inv = vec![0; self.target.order()];
        for x in self.source.elements() {
            inv[self.apply(x) as usize] = x;
        }
        Ok(Self::new_unchecked(&self.target, &self.source, inv))
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Homomorphism({:?} -> {:?})",
            self.source, self.target
        )
    }
}
