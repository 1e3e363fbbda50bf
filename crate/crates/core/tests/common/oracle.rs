//! Element-level reference computations. Everything here works directly on
//! the multiplication of the group and membership vectors, without the
//! lattice, factor or block machinery of the library.

use std::collections::BTreeSet;

use chiefblock::group::{ElemId, FiniteGroup, Subgroup};

pub type Set = Vec<bool>;

pub fn to_set(s: &Subgroup) -> Set {
    let mut v = vec![false; s.parent().order()];
    for x in s.elements() {
        v[x as usize] = true;
    }
    v
}

pub fn size(s: &Set) -> usize {
    s.iter().filter(|&&b| b).count()
}

pub fn members(s: &Set) -> Vec<ElemId> {
    (0..s.len()).filter(|&i| s[i]).map(|i| i as ElemId).collect()
}

pub fn subset(a: &Set, b: &Set) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub fn meet(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(&x, &y)| x && y).collect()
}

/// The subgroup generated by `gens`, by right multiplication from the identity.
pub fn closure(g: &FiniteGroup, gens: &[ElemId]) -> Set {
    let mut set = vec![false; g.order()];
    set[0] = true;
    let mut queue = vec![0 as ElemId];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !set[y as usize] {
                set[y as usize] = true;
                queue.push(y);
            }
        }
    }
    set
}

/// A generating list for a set known to be a subgroup: greedily adds
/// members not yet generated.
pub fn generators_of(g: &FiniteGroup, s: &Set) -> Vec<ElemId> {
    let mut gens = Vec::new();
    let mut cur = closure(g, &gens);
    for x in members(s) {
        if !cur[x as usize] {
            gens.push(x);
            cur = closure(g, &gens);
        }
    }
    gens
}

pub fn join(g: &FiniteGroup, a: &Set, b: &Set) -> Set {
    let mut gens = generators_of(g, a);
    gens.extend(generators_of(g, b));
    closure(g, &gens)
}

pub fn is_normal(g: &FiniteGroup, s: &Set) -> bool {
    let gens = generators_of(g, s);
    g.elements().all(|x| gens.iter().all(|&h| s[g.mul(g.mul(x, h), g.inv(x)) as usize]))
}

/// `{g : [g, k] in L for all k in K}`, the kernel of the action on `K/L`.
pub fn factor_centralizer(g: &FiniteGroup, k: &Set, l: &Set) -> Set {
    let kg = generators_of(g, k);
    g.elements()
        .map(|x| kg.iter().all(|&y| l[g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))) as usize]))
        .collect()
}

/// Association of `K1/L1` and `K2/L2` from the definition.
pub fn associated(g: &FiniteGroup, k1: &Set, l1: &Set, k2: &Set, l2: &Set) -> bool {
    let l1l2 = join(g, l1, l2);
    join(g, k1, l2) == join(g, k2, l1) && meet(k1, &l1l2) == *l1 && meet(k2, &l1l2) == *l2
}

/// `K1 L2 = K2 L1` and `L1 L2 < K1 K2`.
pub fn product_condition(g: &FiniteGroup, k1: &Set, l1: &Set, k2: &Set, l2: &Set) -> bool {
    let top = join(g, k1, k2);
    let bottom = join(g, l1, l2);
    join(g, k1, l2) == join(g, k2, l1) && subset(&bottom, &top) && bottom != top
}

/// Every subgroup, by joining single elements onto known subgroups until
/// nothing new appears.
pub fn all_subgroups(g: &FiniteGroup) -> BTreeSet<Set> {
    let mut found: BTreeSet<Set> = BTreeSet::new();
    let mut frontier = vec![(closure(g, &[]), Vec::<ElemId>::new())];
    found.insert(frontier[0].0.clone());
    while let Some((s, gens)) = frontier.pop() {
        for x in g.elements() {
            if s[x as usize] {
                continue;
            }
            let mut more = gens.clone();
            more.push(x);
            let t = closure(g, &more);
            if found.insert(t.clone()) {
                frontier.push((t, more));
            }
        }
    }
    found
}

/// `<[a, b] : a in A, b in B>` from every element pair.
pub fn commutator(g: &FiniteGroup, a: &Set, b: &Set) -> Set {
    let mut gens = BTreeSet::new();
    for x in members(a) {
        for y in members(b) {
            gens.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
        }
    }
    let gens: Vec<ElemId> = gens.into_iter().collect();
    closure(g, &gens)
}

pub fn is_abelian(g: &FiniteGroup, s: &Set) -> bool {
    let m = generators_of(g, s);
    m.iter().all(|&x| m.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

pub fn center(g: &FiniteGroup) -> Set {
    g.elements()
        .map(|x| g.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect()
}

/// Elementary abelian: abelian, and every non-identity element has the same prime order.
pub fn is_elementary_abelian(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return true;
    }
    if !g.is_abelian() {
        return false;
    }
    let p = g.element_order(1);
    (2..p).all(|d| p % d != 0) && g.elements().skip(1).all(|x| g.element_order(x) == p)
}
