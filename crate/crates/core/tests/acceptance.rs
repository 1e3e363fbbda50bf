//! Acceptance checks. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use chiefblock::blocks::{association_partition, centralizer_partition, is_monolithic, refine_series, BlockPoset};
use chiefblock::extensions::{ClassKind, ExtensionContext};
use chiefblock::factors::{are_associated, association_graph, NormalFactor};
use chiefblock::group::{
    all_pairs_commutator, commutator_subgroup_fast, direct_product, is_characteristically_simple, named_group,
    ElemId, FiniteGroup, Subgroup, DEFAULT_ELEMENT_CAP, DEFAULT_SEARCH_CAP,
};
use chiefblock::lattice::{NormalLattice, DEFAULT_NODE_CAP};
use chiefblock::products::{central_quotient_factorization, diagonal_map, Factorization};
use chiefblock::semisimple::{block_type, charsimple_type, CharSimpleType, SemisimpleAnalysis, SemisimpleKind};

use common::oracle::{self, Set};
use common::{corpus, corpus_group};

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lattice(g: &FiniteGroup) -> NormalLattice {
    NormalLattice::new(g, DEFAULT_NODE_CAP).expect("lattice")
}

fn factor_sets(f: &NormalFactor) -> (Set, Set) {
    (oracle::to_set(f.upper()), oracle::to_set(f.lower()))
}

fn timed(limit: Duration, start: Instant, detail: String) -> Outcome {
    let t = start.elapsed();
    check!(t < limit, "took {t:.2?}, limit {limit:?}");
    Ok(format!("{detail}; {t:.2?}"))
}

fn klein_four() -> Outcome {
    let start = Instant::now();
    let g = named_group("V4", DEFAULT_ELEMENT_CAP).unwrap();
    let l = lattice(&g);
    let subgroups = oracle::all_subgroups(&g);
    check!(subgroups.len() == 5 && l.len() == 5, "expected 5 subgroups, got {} / {}", subgroups.len(), l.len());
    let series = l.chief_series_indices(100);
    check!(series.len() == 3, "expected 3 chief series, got {}", series.len());
    let graph = association_graph(&l).unwrap();
    check!(graph.factors.len() == 6, "expected 6 chief factors, got {}", graph.factors.len());

    let a: Vec<usize> = (0..l.len()).filter(|&i| l.node(i).order() == 2).collect();
    let (one, top) = (0, l.top());
    let bottom = |i: usize| (a[i], one);
    let upper = |i: usize| (top, a[i]);
    let idx = |(u, lo): (usize, usize)| {
        graph
            .factors
            .iter()
            .position(|f| f.upper() == l.node(u) && f.lower() == l.node(lo))
            .expect("factor present")
    };
    let mut expected = BTreeSet::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let (x, y) = (idx(bottom(i)), idx(upper(j)));
                expected.insert((x.min(y), x.max(y)));
            }
        }
    }
    let library: BTreeSet<(usize, usize)> = graph.edges.iter().copied().collect();
    let mut from_oracle = BTreeSet::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let (k1, l1) = factor_sets(&graph.factors[i]);
            let (k2, l2) = factor_sets(&graph.factors[j]);
            if oracle::associated(&g, &k1, &l1, &k2, &l2) {
                from_oracle.insert((i, j));
            }
        }
    }
    check!(library == expected, "association edges {library:?}, expected {expected:?}");
    check!(from_oracle == expected, "oracle association edges {from_oracle:?}, expected {expected:?}");
    check!(
        (0..6).all(|v| graph.degree(v) == 2) && graph.components().len() == 1,
        "association graph is not a single 6-cycle"
    );

    let w = [idx(bottom(0)), idx(upper(1)), idx(bottom(2)), idx(upper(0))];
    for p in w.windows(2) {
        let (f1, f2) = (&graph.factors[p[0]], &graph.factors[p[1]]);
        check!(are_associated(f1, f2).unwrap(), "witness factors {} and {} are not associated", p[0], p[1]);
    }
    let shared = series.iter().any(|s| s.contains(&a[0]));
    check!(shared, "A1/1 and G/A1 share no chief series");
    check!(
        !are_associated(&graph.factors[w[0]], &graph.factors[w[3]]).unwrap(),
        "F0 and F3 are associated"
    );
    timed(
        Duration::from_secs(1),
        start,
        "5 subgroups, 3 series, 6 factors, 6-cycle, witness chain ok".into(),
    )
}

fn partitions() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    for (name, g) in corpus() {
        let l = lattice(&g);
        let factors: Vec<NormalFactor> = l.chief_factors().into_iter().filter(|f| !f.is_abelian()).collect();
        let sets: Vec<(Set, Set)> = factors.iter().map(factor_sets).collect();
        let cents: Vec<Set> = sets.iter().map(|(k, lo)| oracle::factor_centralizer(&g, k, lo)).collect();
        for (f, c) in factors.iter().zip(&cents) {
            check!(oracle::to_set(&f.centralizer()) == *c, "{name}: centralizer differs from the oracle");
        }
        for i in 0..factors.len() {
            for j in 0..factors.len() {
                let (k1, l1) = &sets[i];
                let (k2, l2) = &sets[j];
                let c1 = are_associated(&factors[i], &factors[j]).unwrap();
                let c1o = oracle::associated(&g, k1, l1, k2, l2);
                let c2 = cents[i] == cents[j];
                let c3 = oracle::product_condition(&g, k1, l1, k2, l2);
                check!(
                    c1 == c1o && c1 == c2 && c2 == c3,
                    "{name}: factors {i}, {j}: associated {c1} (oracle {c1o}), centralizers {c2}, products {c3}"
                );
                pairs += 1;
            }
        }
        let norm = |p: Vec<Vec<usize>>| -> BTreeSet<BTreeSet<usize>> {
            p.into_iter().map(|c| c.into_iter().collect()).collect()
        };
        let by_assoc = norm(association_partition(&factors).unwrap());
        let by_cent = norm(centralizer_partition(&factors));
        let mut by_oracle: BTreeMap<Set, BTreeSet<usize>> = BTreeMap::new();
        for (i, c) in cents.iter().enumerate() {
            by_oracle.entry(c.clone()).or_default().insert(i);
        }
        let by_oracle: BTreeSet<BTreeSet<usize>> = by_oracle.into_values().collect();
        check!(by_assoc == by_cent && by_cent == by_oracle, "{name}: partitions differ");
    }
    timed(
        Duration::from_secs(60),
        start,
        format!("12 groups, {pairs} ordered factor pairs, partitions agree"),
    )
}

fn refinement() -> Outcome {
    let mut checked = 0usize;
    for (name, g) in corpus() {
        let l = lattice(&g);
        let nonabelian: Vec<NormalFactor> = l.chief_factors().into_iter().filter(|f| !f.is_abelian()).collect();
        if nonabelian.is_empty() {
            continue;
        }
        let node_sets: Vec<Set> = l.nodes().iter().map(oracle::to_set).collect();
        for series in l.chief_series_indices(10_000) {
            let terms: Vec<Subgroup> = series.iter().map(|&i| l.node(i).clone()).collect();
            for f in &nonabelian {
                let r = refine_series(&l, &terms, f).map_err(|e| format!("{name}: {e}"))?;
                let (k, lo) = factor_sets(f);
                let (d, b) = (oracle::to_set(&r.d), oracle::to_set(&r.b));
                let between = node_sets
                    .iter()
                    .any(|s| oracle::subset(&b, s) && oracle::subset(s, &d) && *s != b && *s != d);
                check!(
                    l.index_of(&r.d).is_some() && l.index_of(&r.b).is_some() && !between && b != d,
                    "{name}: D/B is not chief"
                );
                check!(oracle::associated(&g, &d, &b, &k, &lo), "{name}: D/B is not associated");
                let mut hits = Vec::new();
                for j in 0..series.len() - 1 {
                    let (low, high) = (&node_sets[series[j]], &node_sets[series[j + 1]]);
                    let inside: Vec<&Set> = node_sets
                        .iter()
                        .filter(|s| oracle::subset(low, s) && oracle::subset(s, high))
                        .collect();
                    let hit = inside.iter().any(|bs| {
                        inside.iter().any(|a| {
                            a != bs && oracle::subset(bs, a) && oracle::associated(&g, a, bs, &k, &lo)
                        })
                    });
                    if hit {
                        hits.push(j);
                    }
                }
                check!(hits == [r.index], "{name}: intervals with an associate {hits:?}, refinement at {}", r.index);
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (series, factor) refinements unique, chief and associated"))
}

fn blocks() -> Outcome {
    let mut count = 0usize;
    for (name, g) in corpus() {
        let l = lattice(&g);
        let p = BlockPoset::new(&l).unwrap();
        let node_sets: Vec<Set> = l.nodes().iter().map(oracle::to_set).collect();
        for id in 0..p.len() {
            let c = oracle::to_set(&p.block(id).centralizer);
            let filter: Vec<usize> = (0..l.len()).filter(|&i| !oracle::subset(&node_sets[i], &c)).collect();
            check!(filter == p.covering_filter(id), "{name}: covering filter of block {id} differs");
            for &x in &filter {
                for &y in &filter {
                    let m = oracle::meet(&node_sets[x], &node_sets[y]);
                    check!(!oracle::subset(&m, &c), "{name}: covering filter of block {id} is not intersection-closed");
                }
            }
            let mut inter = node_sets[l.top()].clone();
            for &x in &filter {
                inter = oracle::meet(&inter, &node_sets[x]);
            }
            check!(!oracle::subset(&inter, &c), "{name}: intersection of the filter does not cover block {id}");
            check!(inter == oracle::to_set(p.minimal_cover(id)), "{name}: minimal cover of block {id} differs");

            let low = p.lowermost_representative(id).map_err(|e| format!("{name}: {e}"))?;
            let up = p.uppermost_representative(id).map_err(|e| format!("{name}: {e}"))?;
            for rep in [&low, &up] {
                let (k, lo) = factor_sets(rep);
                check!(oracle::factor_centralizer(&g, &k, &lo) == c, "{name}: representative outside block {id}");
            }
            check!(factor_sets(&low).0 == inter, "{name}: lowermost upper term is not G_a");
            check!(factor_sets(&low).1 == oracle::meet(&inter, &c), "{name}: lowermost lower term is not G_a ∩ C");
            check!(factor_sets(&up).1 == c, "{name}: uppermost lower term is not C_G(a)");
            for r in &p.block(id).representatives {
                let (k, lo) = factor_sets(r);
                let (lk, ll) = factor_sets(&low);
                let (uk, ul) = factor_sets(&up);
                check!(
                    oracle::join(&g, &lk, &lo) == k && oracle::meet(&lk, &lo) == ll,
                    "{name}: lowermost does not compress onto a representative of block {id}"
                );
                check!(
                    oracle::join(&g, &k, &ul) == uk && oracle::meet(&k, &ul) == lo,
                    "{name}: a representative of block {id} does not compress onto the uppermost"
                );
            }

            // G/C is monolithic: exactly one minimal normal subgroup above C.
            let above: Vec<&Set> = node_sets
                .iter()
                .filter(|s| oracle::subset(&c, s) && **s != c)
                .collect();
            let minimal: Vec<&&Set> = above
                .iter()
                .filter(|s| !above.iter().any(|t| t != *s && oracle::subset(t, s)))
                .collect();
            check!(minimal.len() == 1, "{name}: G/C_G(a) of block {id} is not monolithic");
            let socle = *minimal[0];
            check!(
                oracle::factor_centralizer(&g, socle, &c) == c,
                "{name}: socle of G/C_G(a) is not in block {id}"
            );
            let ci = p.centralizer_index(id);
            let (q, _) = chiefblock::group::quotient(&g, l.node(ci)).unwrap();
            check!(is_monolithic(&lattice(&q)), "{name}: library quotient of block {id} is not monolithic");
            count += 1;
        }
    }
    Ok(format!("{count} blocks: filters, representatives and monolithic quotients ok"))
}

fn small_groups() -> Vec<(String, FiniteGroup)> {
    let cap = DEFAULT_ELEMENT_CAP;
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 1..=24 {
        out.push((format!("C{n}"), named_group(&format!("C{n}"), cap).unwrap()));
    }
    for n in (4..=24).step_by(2) {
        out.push((format!("D{n}"), named_group(&format!("D{n}"), cap).unwrap()));
    }
    for name in ["S3", "S4", "A4", "Q8", "V4", "SL23"] {
        out.push((name.to_string(), named_group(name, cap).unwrap()));
    }
    let pairs = [
        ("C2", "C2"),
        ("C2", "C4"),
        ("C2", "S3"),
        ("C2", "A4"),
        ("C3", "S3"),
        ("C2", "Q8"),
        ("C2", "D8"),
        ("C3", "C3"),
        ("C4", "C4"),
        ("C4", "S3"),
        ("C3", "Q8"),
        ("V4", "S3"),
        ("V4", "V4"),
        ("C2", "D12"),
    ];
    for (a, b) in pairs {
        let x = named_group(a, cap).unwrap();
        let y = named_group(b, cap).unwrap();
        out.push((format!("{a}x{b}"), direct_product(&x, &y, cap).unwrap()));
    }
    let v4 = named_group("V4", cap).unwrap();
    let c2 = named_group("C2", cap).unwrap();
    out.push(("V4xC2xC2".into(), direct_product(&direct_product(&v4, &c2, cap).unwrap(), &c2, cap).unwrap()));
    out
}

fn lattice_oracle() -> Outcome {
    let groups = small_groups();
    let mut pairs = 0usize;
    for (name, g) in &groups {
        check!(g.order() <= 24, "{name} has order {}", g.order());
        let all = oracle::all_subgroups(g);
        let normal: BTreeSet<Set> = all.iter().filter(|s| oracle::is_normal(g, s)).cloned().collect();
        let l = lattice(g);
        let lib: BTreeSet<Set> = l.nodes().iter().map(oracle::to_set).collect();
        check!(lib == normal, "{name}: lattice has {} nodes, oracle {}", lib.len(), normal.len());
        let lib_all: BTreeSet<Set> = chiefblock::lattice::oracle_all_subgroups(g)
            .unwrap()
            .iter()
            .map(oracle::to_set)
            .collect();
        check!(lib_all == all, "{name}: library subgroup enumeration differs");
        let subs: Vec<Subgroup> = chiefblock::lattice::oracle_all_subgroups(g).unwrap();
        for a in &subs {
            for b in &subs {
                let fast = commutator_subgroup_fast(a, b);
                let slow = all_pairs_commutator(a, b);
                let reference = oracle::commutator(g, &oracle::to_set(a), &oracle::to_set(b));
                check!(fast == slow && oracle::to_set(&fast) == reference, "{name}: commutators differ");
                pairs += 1;
            }
        }
    }
    Ok(format!("{} groups of order <= 24, {pairs} commutator pairs", groups.len()))
}

/// Normal subgroups of order 8 that are non-abelian, in pairs that commute and generate.
fn es32_quaternion_pair(g: &FiniteGroup, l: &NormalLattice) -> (Subgroup, Subgroup) {
    let eights: Vec<&Subgroup> = l.nodes().iter().filter(|s| s.order() == 8 && !s.is_abelian()).collect();
    for a in &eights {
        for b in &eights {
            let commute = a
                .generators()
                .iter()
                .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
            if a != b && commute && a.join(b).unwrap().is_whole() {
                return ((*a).clone(), (*b).clone());
            }
        }
    }
    panic!("no commuting pair of quaternion subgroups");
}

/// The universally quantified independence property, from the definition.
fn independence_oracle(g: &FiniteGroup, parts: &[Set]) -> bool {
    let n = parts.len();
    let gen = |mask: usize| -> Set {
        let mut s = oracle::closure(g, &[]);
        for (i, p) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s = oracle::join(g, &s, p);
            }
        }
        s
    };
    let subs: Vec<Set> = (0..1usize << n).map(gen).collect();
    if oracle::size(&subs[(1 << n) - 1]) != g.order() {
        return false;
    }
    let full = (1usize << n) - 1;
    for family in 1u64..(1u64 << (1 << n)) {
        let mut common = full;
        let mut inter = vec![true; g.order()];
        for (a, s) in subs.iter().enumerate() {
            if family >> a & 1 == 1 {
                common &= a;
                inter = oracle::meet(&inter, s);
            }
        }
        if common == 0 && oracle::size(&inter) != 1 {
            return false;
        }
    }
    true
}

fn products() -> Outcome {
    let cap = DEFAULT_ELEMENT_CAP;
    // A5 x A5 with its coordinates.
    let g = corpus_group("A5xA5");
    let c1 = Subgroup::from_elements(&g, &(0..60).map(|a| a * 60).collect::<Vec<ElemId>>()).unwrap();
    let c2 = Subgroup::from_elements(&g, &(0..60).collect::<Vec<ElemId>>()).unwrap();
    let d = diagonal_map(&g, &[c1.clone(), c2.clone()], cap).map_err(|e| e.to_string())?;
    check!(d.injective && d.kernel.is_trivial(), "A5xA5: diagonal map is not injective");
    check!(d.map.as_ref().is_some_and(|m| m.is_injective()), "A5xA5: materialized map is not injective");

    // Q8 o Q8 with two commuting quaternion subgroups.
    let e = corpus_group("ES32");
    let el = lattice(&e);
    let (q1, q2) = es32_quaternion_pair(&e, &el);
    let d = diagonal_map(&e, &[q1.clone(), q2.clone()], cap).map_err(|e| e.to_string())?;
    let zset = oracle::center(&e);
    check!(
        !d.injective && d.kernel.order() == 2 && oracle::subset(&oracle::to_set(&d.kernel), &zset),
        "ES32: diagonal kernel is not central of order 2"
    );
    let f = Factorization::classify(&e.whole(), &[q1.clone(), q2.clone()]).unwrap();
    check!(f.is_generalized_central() && !f.is_quasi_direct(), "ES32: quaternion pair misclassified");

    // Klein four with two of its subgroups of order 2.
    let v = corpus_group("V4");
    let vl = lattice(&v);
    let a: Vec<Subgroup> = vl.nodes().iter().filter(|s| s.order() == 2).cloned().collect();
    let d = diagonal_map(&v, &a[..2], cap).map_err(|e| e.to_string())?;
    check!(d.injective, "V4: diagonal map on {{A1, A2}} is not injective");

    // The universally quantified independence property against the
    // single intersection, over generalized central families of at most 4 parts.
    let mut families = 0usize;
    for name in ["V4", "S4", "Q8", "D8", "SL23", "A5xA5", "ES32"] {
        let g = corpus_group(name);
        let l = lattice(&g);
        let nodes: Vec<Subgroup> = l.nodes().iter().filter(|s| !s.is_trivial()).cloned().collect();
        let sets: Vec<Set> = nodes.iter().map(oracle::to_set).collect();
        let commute = |i: usize, j: usize| {
            nodes[i]
                .generators()
                .iter()
                .all(|&x| nodes[j].generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        };
        let n = nodes.len();
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(fam) = stack.pop() {
            if fam.len() >= 2 {
                let parts: Vec<Subgroup> = fam.iter().map(|&i| nodes[i].clone()).collect();
                let f = Factorization::classify(&g.whole(), &parts).unwrap();
                if f.is_generalized_central() {
                    let single = f.is_quasi_direct();
                    let full = f.independence_full().unwrap();
                    let fam_sets: Vec<Set> = fam.iter().map(|&i| sets[i].clone()).collect();
                    let reference = independence_oracle(&g, &fam_sets);
                    check!(
                        single == full && full == reference,
                        "{name}: family {fam:?}: single {single}, full {full}, oracle {reference}"
                    );
                    families += 1;
                }
            }
            if fam.len() < 4 {
                let last = *fam.last().unwrap();
                for j in last + 1..n {
                    if fam.iter().all(|&i| commute(i, j)) {
                        let mut next = fam.clone();
                        next.push(j);
                        stack.push(next);
                    }
                }
            }
        }
    }

    // (Q8 o Q8)/Z is elementary abelian of order 16 with a quasi-direct image factorization.
    let qf = central_quotient_factorization(&e, &[q1, q2], &e.trivial_subgroup()).map_err(|e| e.to_string())?;
    check!(oracle::to_set(&qf.m) == zset, "ES32: M is not the center");
    let (q, _, fq) = qf.quotient.as_ref().ok_or("ES32: no quotient")?;
    check!(q.order() == 16 && oracle::is_elementary_abelian(q), "ES32: quotient is not C2^4");
    check!(
        fq.is_quasi_direct() && fq.parts.len() == 2 && fq.parts.iter().all(|p| p.order() == 4),
        "ES32: quotient factorization is not two quasi-direct C2^2 parts"
    );
    Ok(format!("diagonal maps ok; {families} families agree; (Q8oQ8)/Z = C2^4 factorization ok"))
}

fn semisimple() -> Outcome {
    let comps = |name: &str| -> (FiniteGroup, SemisimpleAnalysis) {
        let g = corpus_group(name);
        let a = SemisimpleAnalysis::new(&g, DEFAULT_NODE_CAP).unwrap();
        (g, a)
    };
    let (g, a) = comps("A5xA5");
    let coords: BTreeSet<Set> = [
        (0..3600).map(|x| x % 60 == 0).collect::<Set>(),
        (0..3600).map(|x| x < 60).collect::<Set>(),
    ]
    .into_iter()
    .collect();
    let found: BTreeSet<Set> = a.components().iter().map(oracle::to_set).collect();
    check!(found == coords, "A5xA5: components are not the coordinates");
    check!(g.order() == 3600, "A5xA5 has the wrong order");

    let (g, a) = comps("S5");
    check!(
        a.components().len() == 1 && a.components()[0] == g.derived_subgroup() && a.components()[0].order() == 60,
        "S5: components are not {{A5}}"
    );
    let (_, a) = comps("SL25");
    check!(a.components().len() == 1 && a.components()[0].is_whole(), "SL25: components are not {{SL(2,5)}}");
    let (_, a) = comps("ES32");
    check!(a.components().is_empty(), "ES32 has components");

    let mut semisimple_groups = Vec::new();
    for (name, g) in corpus() {
        let a = SemisimpleAnalysis::new(&g, DEFAULT_NODE_CAP).unwrap();
        let p = BlockPoset::new(&a.lattice).unwrap();
        a.verify_component_properties().map_err(|e| format!("{name}: {e}"))?;
        let (plain, strict) = a.semisimple_quot_criterion(&p).map_err(|e| format!("{name}: {e}"))?;
        check!(plain == a.kind().is_semisimple(), "{name}: quotient criterion disagrees");
        check!(strict == (a.kind() == SemisimpleKind::StrictSemisimple), "{name}: strict criterion disagrees");
        a.verify_component_min_cover(&p).map_err(|e| format!("{name}: {e}"))?;
        if !a.kind().is_semisimple() {
            continue;
        }
        semisimple_groups.push(name);
        a.verify_semisimple_properties().map_err(|e| format!("{name}: {e}"))?;
        a.central_quotient().map_err(|e| format!("{name}: {e}"))?;
        a.verify_block_correspondence(&p).map_err(|e| format!("{name}: {e}"))?;

        // Abelian normal subgroups are central; [K, G] is generated by the components inside it.
        let z = oracle::center(&g);
        let whole = oracle::to_set(&g.whole());
        let comp_sets: Vec<Set> = a.components().iter().map(oracle::to_set).collect();
        for k in a.lattice.nodes() {
            let ks = oracle::to_set(k);
            if oracle::is_abelian(&g, &ks) {
                check!(oracle::subset(&ks, &z), "{name}: abelian normal subgroup is not central");
            }
            let kg = oracle::commutator(&g, &ks, &whole);
            let mut span = oracle::closure(&g, &[]);
            for c in comp_sets.iter().filter(|c| oracle::subset(c, &kg)) {
                span = oracle::join(&g, &span, c);
            }
            check!(span == kg, "{name}: [K, G] is not generated by components");
        }
        // Kernels of simple quotients are exactly the centralizers of components.
        let duality = a.simple_quotient_duality().map_err(|e| format!("{name}: {e}"))?;
        let kernels: BTreeSet<Set> = a
            .lattice
            .nodes()
            .iter()
            .filter(|n| {
                !n.is_whole() && {
                    let (q, _) = chiefblock::group::quotient(&g, n).unwrap();
                    !q.is_abelian() && lattice(&q).len() == 2
                }
            })
            .map(oracle::to_set)
            .collect();
        let cents: BTreeSet<Set> = comp_sets
            .iter()
            .map(|c| g.elements().map(|x| members_commute(&g, c, x)).collect::<Set>())
            .collect();
        check!(kernels == cents, "{name}: simple quotient kernels differ from component centralizers");
        check!(duality.len() == kernels.len(), "{name}: duality pairs miscounted");
        // Blocks form an antichain of minimally covered blocks, one per component.
        check!(p.is_antichain().unwrap(), "{name}: blocks are not an antichain");
        let minimal: Vec<usize> = (0..p.len())
            .filter(|&b| !(0..p.len()).any(|c| c != b && p.block_le(c, b).unwrap()))
            .collect();
        check!(minimal.len() == p.len(), "{name}: some block is not minimal");
        check!(
            (0..p.len()).all(|b| p.is_minimally_covered(b)) && p.len() == a.components().len(),
            "{name}: blocks and components do not correspond"
        );
    }
    check!(
        semisimple_groups == ["A5", "SL25", "A5xA5"],
        "semisimple corpus groups are {semisimple_groups:?}"
    );
    Ok(format!("components ok; semisimple checks ok for {semisimple_groups:?}"))
}

fn members_commute(g: &FiniteGroup, s: &Set, x: ElemId) -> bool {
    oracle::generators_of(g, s).iter().all(|&y| g.mul(x, y) == g.mul(y, x))
}

fn extensions() -> Outcome {
    let g = corpus_group("A5wrC2");
    let l = lattice(&g);
    let h = l
        .nodes()
        .iter()
        .find(|s| s.order() == 3600)
        .cloned()
        .ok_or("no base subgroup")?;
    let ctx = ExtensionContext::with_lattice(&l, &h, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    check!(ctx.h.len() == 2, "H has {} blocks", ctx.h.len());

    // The coordinates of H, found as its normal subgroups of order 60.
    let hs = oracle::to_set(&h);
    let coords: Vec<Set> = ctx
        .h
        .lattice
        .nodes()
        .iter()
        .map(|x| oracle::to_set(&ctx.h.to_ambient(x)))
        .filter(|s| oracle::size(s) == 60)
        .collect();
    check!(coords.len() == 2, "H has {} coordinates", coords.len());
    let socle_block = (0..ctx.poset.len())
        .find(|&b| ctx.poset.minimal_cover(b) == &h)
        .ok_or("no block covered minimally by the socle")?;
    let trivial = oracle::closure(&g, &[]);
    for a in 0..2 {
        let e = ctx.extend_block(a).map_err(|e| e.to_string())?;
        check!(e.block == socle_block, "block {a} of H extends to {} not the socle block", e.block);
        check!(oracle::to_set(&e.m) == hs && oracle::to_set(&e.n) == trivial, "block {a}: M/N is not H/1");
        // Covers-iff from the definition, over the whole lattice.
        let rep = &ctx.h.poset.block(a).representatives[0];
        let ka = oracle::to_set(&ctx.h.to_ambient(rep.upper()));
        let la = oracle::to_set(&ctx.h.to_ambient(rep.lower()));
        let c_h = oracle::meet(&oracle::factor_centralizer(&g, &ka, &la), &hs);
        let c_b = oracle::to_set(&ctx.poset.block(socle_block).centralizer);
        for n in l.nodes() {
            let ns = oracle::to_set(n);
            let up = !oracle::subset(&ns, &c_b);
            let down = !oracle::subset(&oracle::meet(&ns, &hs), &c_h);
            check!(up == down, "covers-iff fails for a normal subgroup of order {}", n.order());
        }
        check!(ctx.is_extension(a, socle_block).unwrap(), "library extension test fails for block {a}");
    }
    // The swap moves one coordinate onto the other.
    let outside = g.elements().find(|&x| !hs[x as usize]).unwrap();
    let moved: Set = {
        let mut s = vec![false; g.order()];
        for x in oracle::members(&coords[0]) {
            s[g.mul(g.mul(outside, x), g.inv(outside)) as usize] = true;
        }
        s
    };
    check!(moved == coords[1], "conjugation outside H does not swap the coordinates");

    let s = ctx.stacking_structure().map_err(|e| e.to_string())?;
    check!(
        s.classes == vec![(vec![0, 1], ClassKind::AntichainOrbit)],
        "stacking classes {:?}",
        s.classes
    );
    for a in 0..2 {
        let r = ctx.antichain_orbit_analysis(a).map_err(|e| e.to_string())?;
        check!(
            r.class_is_antichain_orbit && r.has_minimal_invariant && r.conjugate_factorization,
            "block {a}: minimal-extension conditions {r:?}"
        );
        let invariant: BTreeSet<Set> = r.minimal_invariant.iter().map(oracle::to_set).collect();
        check!(invariant == coords.iter().cloned().collect(), "block {a}: minimal invariant subgroups are not the coordinates");
    }
    let iso = ctx.extension_poset_check().map_err(|e| e.to_string())?;
    check!(iso.class_images == vec![(vec![0, 1], socle_block)], "poset map {:?}", iso.class_images);
    ctx.verify_extension_lemmas().map_err(|e| e.to_string())?;
    Ok("both H-blocks extend to the socle block; one antichain-orbit class; poset map ok".into())
}

fn trichotomy() -> Outcome {
    let mut seen = Vec::new();
    for (name, g) in corpus() {
        let l = lattice(&g);
        let p = BlockPoset::new(&l).unwrap();
        for b in 0..p.len() {
            let t = block_type(&p, b, DEFAULT_NODE_CAP, DEFAULT_SEARCH_CAP).map_err(|e| format!("{name}: {e}"))?;
            check!(t != CharSimpleType::Stacking, "{name}: block {b} has stacking type");
        }
        if !is_characteristically_simple(&g, DEFAULT_SEARCH_CAP).unwrap() {
            continue;
        }
        let t = charsimple_type(&g, DEFAULT_NODE_CAP, DEFAULT_SEARCH_CAP).map_err(|e| format!("{name}: {e}"))?;
        match t {
            CharSimpleType::Weak => check!(oracle::is_elementary_abelian(&g), "{name}: weak but not elementary abelian"),
            CharSimpleType::Semisimple => {
                let a = SemisimpleAnalysis::new(&g, DEFAULT_NODE_CAP).unwrap();
                check!(a.kind().is_semisimple() && !g.is_abelian(), "{name}: semisimple verdict on a non-semisimple group");
            }
            CharSimpleType::Stacking => return Err(format!("{name}: stacking type produced")),
        }
        seen.push(format!("{name}={}", t.as_str()));
    }
    check!(
        seen == ["V4=weak", "A5=semisimple", "A5xA5=semisimple"],
        "characteristically simple corpus groups: {seen:?}"
    );
    Ok(format!("{}; no stacking block in the corpus", seen.join(", ")))
}

fn determinism(suite_start: Instant) -> Outcome {
    let bin = env!("CARGO_BIN_EXE_chiefblock");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let spec = dir.path().join("s5wrc2.json");
    std::fs::write(
        &spec,
        r#"{"kind": "semidirect",
            "base": {"kind": "direct", "left": {"kind": "named", "name": "S5"}, "right": {"kind": "named", "name": "S5"}},
            "top": {"kind": "named", "name": "C2"},
            "action": "swap"}"#,
    )
    .map_err(|e| e.to_string())?;
    let spec = spec.to_str().unwrap().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["analyze".into(), "--group".into(), "A5wrC2".into(), "--extend-normal".into(), "\"derived\"".into()],
        vec!["analyze".into(), "--spec".into(), spec],
        vec!["analyze".into(), "--group".into(), "ES32".into()],
        vec!["analyze".into(), "--group".into(), "SL25".into(), "--seed".into(), "7".into()],
    ];
    for args in &runs {
        let outputs: Vec<Vec<u8>> = (0..2)
            .map(|_| {
                let out = Command::new(bin).args(args).output().expect("run chiefblock");
                assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
                out.stdout
            })
            .collect();
        check!(!outputs[0].is_empty() && outputs[0] == outputs[1], "{args:?}: outputs differ between runs");
    }
    let t = suite_start.elapsed();
    check!(t < Duration::from_secs(300), "acceptance run took {t:.2?}");
    Ok(format!("{} analyze invocations byte-identical; acceptance total {t:.2?}", runs.len()))
}

fn main() {
    let suite_start = Instant::now();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("klein four association", Box::new(klein_four)),
        ("association partitions on the corpus", Box::new(partitions)),
        ("refine_series", Box::new(refinement)),
        ("chief blocks", Box::new(blocks)),
        ("normal lattice and commutators, order <= 24", Box::new(lattice_oracle)),
        ("factorizations", Box::new(products)),
        ("components and semisimple type", Box::new(semisimple)),
        ("block extensions in A5 wr C2", Box::new(extensions)),
        ("characteristically simple trichotomy", Box::new(trichotomy)),
        ("runtime and deterministic output", Box::new(move || determinism(suite_start))),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail} [{:.2?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {why} [{:.2?}]", i + 1, start.elapsed());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
