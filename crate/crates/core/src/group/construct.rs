use std::collections::HashMap;

use super::{
    subgroup_generated, Backend, ElemId, FiniteGroup, Homomorphism, Perm, Provenance, Subgroup,
};
use crate::error::{Error, Result};

fn check_cap(order: usize, cap: usize, context: &str) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded {
            cap,
            context: context.to_string(),
        })
    } else {
        Ok(())
    }
}

/// Closure of permutations on `points` points under composition.
pub fn group_from_permutations(points: usize, generators: &[Perm], cap: usize) -> Result<FiniteGroup> {
    if cap == 0 {
        return Err(Error::CapExceeded {
            cap,
            context: "cap must be at least 1".into(),
        });
    }
    for g in generators {
        if g.degree() != points {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} acts on {} points, expected {points}",
                g.degree()
            )));
        }
    }
    let id = Perm::identity(points);
    let mut perms = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0);
    let mut i = 0;
    while i < perms.len() {
        for g in generators {
            let y = perms[i].compose(g);
            if !index.contains_key(&y) {
                if perms.len() == cap {
                    return Err(Error::CapExceeded {
                        cap,
                        context: "permutation closure".into(),
                    });
                }
                index.insert(y.clone(), perms.len() as ElemId);
                perms.push(y);
            }
        }
        i += 1;
    }
    let gens = generators.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::assemble(
        perms.len(),
        gens,
        Backend::Perm { perms, index },
        Provenance::Permutations {
            points,
            generators: generators.to_vec(),
        },
        None,
    ))
}

/// `G × H`, with pair `(a, b)` stored at id `a·|H| + b`.
pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let order = left.order().saturating_mul(right.order());
    check_cap(order, cap, "direct product")?;
    let r = right.order() as ElemId;
    let mut gens: Vec<ElemId> = left.generators().iter().map(|&a| a * r).collect();
    gens.extend(right.generators().iter().copied());
    Ok(FiniteGroup::assemble(
        order,
        gens,
        Backend::Product {
            left: left.clone(),
            right: right.clone(),
        },
        Provenance::DirectProduct {
            left: left.clone(),
            right: right.clone(),
        },
        None,
    ))
}

impl FiniteGroup {
    /// Coordinate embeddings of a direct product.
    pub fn product_embeddings(&self) -> Option<(Homomorphism, Homomorphism)> {
        let Provenance::DirectProduct { left, right } = self.provenance() else {
            return None;
        };
        let r = right.order() as ElemId;
        let e1 = left.elements().map(|a| a * r).collect();
        let e2 = right.elements().collect();
        Some((
            Homomorphism::new_unchecked(left, self, e1),
            Homomorphism::new_unchecked(right, self, e2),
        ))
    }

    /// Coordinate projections of a direct product.
    pub fn product_projections(&self) -> Option<(Homomorphism, Homomorphism)> {
        let Provenance::DirectProduct { left, right } = self.provenance() else {
            return None;
        };
        let r = right.order() as ElemId;
        let p1 = self.elements().map(|x| x / r).collect();
        let p2 = self.elements().map(|x| x % r).collect();
        Some((
            Homomorphism::new_unchecked(self, left, p1),
            Homomorphism::new_unchecked(self, right, p2),
        ))
    }

    /// Base and top embeddings of a semidirect product.
    pub fn semidirect_embeddings(&self) -> Option<(Homomorphism, Homomorphism)> {
        let Provenance::Semidirect { base, top } = self.provenance() else {
            return None;
        };
        let t = top.order() as ElemId;
        let e1 = base.elements().map(|n| n * t).collect();
        let e2 = top.elements().collect();
        Some((
            Homomorphism::new_unchecked(base, self, e1),
            Homomorphism::new_unchecked(top, self, e2),
        ))
    }

    /// The element `(n, h)` of a semidirect product.
    pub fn semidirect_pair(&self, n: ElemId, h: ElemId) -> Option<ElemId> {
        let Provenance::Semidirect { top, .. } = self.provenance() else {
            return None;
        };
        Some(n * top.order() as ElemId + h)
    }

    /// The element `(a, b)` of a direct product.
    pub fn product_pair(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        let Provenance::DirectProduct { right, .. } = self.provenance() else {
            return None;
        };
        Some(a * right.order() as ElemId + b)
    }
}

fn check_automorphism(base: &FiniteGroup, table: &[ElemId]) -> bool {
    if table.len() != base.order() || table[0] != 0 {
        return false;
    }
    let mut seen = vec![false; base.order()];
    for &y in table {
        if y as usize >= base.order() || seen[y as usize] {
            return false;
        }
        seen[y as usize] = true;
    }
    base.elements().all(|x| {
        base.generators()
            .iter()
            .all(|&g| table[base.mul(x, g) as usize] == base.mul(table[x as usize], table[g as usize]))
    })
}

/// `N ⋊ H` with `action[h]` the automorphism table of `h` acting on `N`.
///
/// Multiplication is `(n1, h1)(n2, h2) = (n1·α_{h1}(n2), h1 h2)`.
pub fn semidirect_product(
    base: &FiniteGroup,
    top: &FiniteGroup,
    action: Vec<Vec<ElemId>>,
    cap: usize,
) -> Result<FiniteGroup> {
    let order = base.order().saturating_mul(top.order());
    check_cap(order, cap, "semidirect product")?;
    if action.len() != top.order() {
        return Err(Error::ActionNotHomomorphism);
    }
    for (h, table) in action.iter().enumerate() {
        if !check_automorphism(base, table) {
            return Err(Error::ActionNotAutomorphism(h));
        }
    }
    if action[0].iter().enumerate().any(|(i, &y)| i as ElemId != y) {
        return Err(Error::ActionNotHomomorphism);
    }
    for h in top.elements() {
        for &g in top.generators() {
            let hg = top.mul(h, g) as usize;
            let (ah, ag) = (&action[h as usize], &action[g as usize]);
            if base.elements().any(|n| action[hg][n as usize] != ah[ag[n as usize] as usize]) {
                return Err(Error::ActionNotHomomorphism);
            }
        }
    }
    let t = top.order() as ElemId;
    let mut gens: Vec<ElemId> = base.generators().iter().map(|&n| n * t).collect();
    gens.extend(top.generators().iter().copied());
    Ok(FiniteGroup::assemble(
        order,
        gens,
        Backend::Semidirect {
            base: base.clone(),
            top: top.clone(),
            action,
        },
        Provenance::Semidirect {
            base: base.clone(),
            top: top.clone(),
        },
        None,
    ))
}

/// `N ⋊ H` from automorphism tables of a generating list of `H`.
pub fn semidirect_product_from_generators(
    base: &FiniteGroup,
    top: &FiniteGroup,
    generator_actions: &[(ElemId, Vec<ElemId>)],
    cap: usize,
) -> Result<FiniteGroup> {
    for (i, (_, table)) in generator_actions.iter().enumerate() {
        if !check_automorphism(base, table) {
            return Err(Error::ActionNotAutomorphism(i));
        }
    }
    let mut action: Vec<Option<Vec<ElemId>>> = vec![None; top.order()];
    action[0] = Some(base.elements().collect());
    let mut queue = vec![0 as ElemId];
    let mut i = 0;
    while i < queue.len() {
        let h = queue[i];
        for (g, table) in generator_actions {
            let hg = top.mul(h, *g) as usize;
            let ah = action[h as usize].as_ref().expect("visited");
            let composed: Vec<ElemId> = table.iter().map(|&y| ah[y as usize]).collect();
            match &action[hg] {
                None => {
                    action[hg] = Some(composed);
                    queue.push(hg as ElemId);
                }
                Some(existing) if *existing != composed => return Err(Error::ActionNotHomomorphism),
                Some(_) => {}
            }
        }
        i += 1;
    }
    if queue.len() != top.order() {
        return Err(Error::BadAction(
            "listed top elements do not generate the top group".into(),
        ));
    }
    let action = action.into_iter().map(|a| a.expect("all visited")).collect();
    semidirect_product(base, top, action, cap)
}

/// `G / N` together with the projection.
pub fn quotient(group: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, Homomorphism)> {
    if !n.parent().same_group(group) {
        return Err(Error::DifferentParents);
    }
    if !n.is_normal() {
        return Err(Error::NotNormal("kernel of a quotient".into()));
    }
    const UNSET: ElemId = ElemId::MAX;
    let mut coset_of = vec![UNSET; group.order()];
    let mut reps = Vec::with_capacity(n.index());
    for x in group.elements() {
        if coset_of[x as usize] != UNSET {
            continue;
        }
        let c = reps.len() as ElemId;
        reps.push(x);
        for m in n.elements() {
            coset_of[group.mul(x, m) as usize] = c;
        }
    }
    let gens = group.generators().iter().map(|&g| coset_of[g as usize]).collect();
    let q = FiniteGroup::assemble(
        reps.len(),
        gens,
        Backend::Quotient {
            parent: group.clone(),
            reps,
            coset_of: coset_of.clone(),
        },
        Provenance::Quotient {
            parent: group.clone(),
        },
        None,
    );
    let pi = Homomorphism::new_unchecked(group, &q, coset_of);
    Ok((q, pi))
}

/// A subgroup as a group in its own right, with its inclusion map.
pub fn subgroup_as_group(h: &Subgroup) -> (FiniteGroup, Homomorphism) {
    let parent = h.parent();
    let elems: Vec<ElemId> = h.elements().collect();
    let mut local = vec![ElemId::MAX; parent.order()];
    for (i, &x) in elems.iter().enumerate() {
        local[x as usize] = i as ElemId;
    }
    let gens = h.generators().iter().map(|&x| local[x as usize]).collect();
    let g = FiniteGroup::assemble(
        elems.len(),
        gens,
        Backend::Sub {
            parent: parent.clone(),
            elems: elems.clone(),
            local,
        },
        Provenance::Subgroup {
            parent: parent.clone(),
        },
        None,
    );
    let emb = Homomorphism::new_unchecked(&g, parent, elems);
    (g, emb)
}

/// `(G × H) / <(a, b^-1)>` for the listed pairs of central elements.
pub fn central_product(
    left: &FiniteGroup,
    right: &FiniteGroup,
    identify: &[(ElemId, ElemId)],
    cap: usize,
) -> Result<FiniteGroup> {
    let zl = left.center();
    let zr = right.center();
    for &(a, b) in identify {
        if a as usize >= left.order() || !zl.contains(a) {
            return Err(Error::NotCentral(format!("left element {a}")));
        }
        if b as usize >= right.order() || !zr.contains(b) {
            return Err(Error::NotCentral(format!("right element {b}")));
        }
    }
    let p = direct_product(left, right, cap)?;
    let r = right.order() as ElemId;
    let seed: Vec<ElemId> = identify.iter().map(|&(a, b)| a * r + right.inv(b)).collect();
    let k = subgroup_generated(&p, &seed);
    Ok(quotient(&p, &k)?.0)
}

/// `G ≀ C2 = (G × G) ⋊ C2` with the coordinate swap.
pub fn wreath_with_c2(g: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let base = direct_product(g, g, cap)?;
    let c2 = group_from_permutations(2, &[Perm::from_cycles(2, &[vec![0, 1]])?], cap)?;
    let n = g.order() as ElemId;
    let swap: Vec<ElemId> = base.elements().map(|x| (x % n) * n + x / n).collect();
    let id: Vec<ElemId> = base.elements().collect();
    semidirect_product(&base, &c2, vec![id, swap], cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, DEFAULT_ELEMENT_CAP};

    fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(n, &c).unwrap()
    }

    #[test]
    fn permutation_closures() {
        let a5 = group_from_permutations(5, &[perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1, 2]])], 1000).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(group_from_permutations(3, &[], 10).unwrap().order(), 1);
        assert_eq!(group_from_permutations(2, &[perm(2, &[&[0, 1]])], 10).unwrap().order(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let err = group_from_permutations(5, &[perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])], 100);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn inversion_semidirect_is_s3() {
        let c3 = named_group("C3", DEFAULT_ELEMENT_CAP).unwrap();
        let c2 = named_group("C2", DEFAULT_ELEMENT_CAP).unwrap();
        let inv: Vec<ElemId> = c3.elements().map(|x| c3.inv(x)).collect();
        let id: Vec<ElemId> = c3.elements().collect();
        let g = semidirect_product(&c3, &c2, vec![id, inv], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.verify_axioms());
        assert_eq!(g.center().order(), 1);
    }

    #[test]
    fn non_automorphism_action_is_rejected() {
        let c3 = named_group("C3", DEFAULT_ELEMENT_CAP).unwrap();
        let c2 = named_group("C2", DEFAULT_ELEMENT_CAP).unwrap();
        let id: Vec<ElemId> = c3.elements().collect();
        let bad = vec![0, 0, 0];
        assert_eq!(
            semidirect_product(&c3, &c2, vec![id.clone(), bad], DEFAULT_ELEMENT_CAP).unwrap_err(),
            Error::ActionNotAutomorphism(1)
        );
        let c4 = named_group("C4", DEFAULT_ELEMENT_CAP).unwrap();
        let inv: Vec<ElemId> = c3.elements().map(|x| c3.inv(x)).collect();
        // C4 acting through inversion on every element is not a homomorphism.
        let action = vec![id.clone(), inv.clone(), inv.clone(), inv];
        assert_eq!(
            semidirect_product(&c3, &c4, action, DEFAULT_ELEMENT_CAP).unwrap_err(),
            Error::ActionNotHomomorphism
        );
    }

    #[test]
    fn quotient_orders() {
        let s4 = named_group("S4", DEFAULT_ELEMENT_CAP).unwrap();
        let t = s4.trivial_subgroup();
        let (q, pi) = quotient(&s4, &t).unwrap();
        assert_eq!(q.order(), 24);
        assert!(pi.is_isomorphism());
        let h = subgroup_generated(&s4, &[s4.generators()[0]]);
        if !h.is_normal() {
            assert!(matches!(quotient(&s4, &h), Err(Error::NotNormal(_))));
        }
    }

    #[test]
    fn wreath_order() {
        let c3 = named_group("C3", DEFAULT_ELEMENT_CAP).unwrap();
        let w = wreath_with_c2(&c3, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(w.order(), 18);
        assert!(w.verify_axioms());
    }
}
