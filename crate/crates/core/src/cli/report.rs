//! The JSON report produced by `chiefblock analyze`.
//!
//! Subgroups of the analysed group are referred to by their index in
//! `lattice.nodes` whenever they are normal.

use serde::{Deserialize, Serialize};

use crate::blocks::BlockPoset;
use crate::cli::spec::{resolve_list, resolve_normal, ElementList};
use crate::error::{Error, Result};
use crate::extensions::ExtensionContext;
use crate::factors::association_graph;
use crate::group::{ElemId, FiniteGroup, Subgroup, DEFAULT_ELEMENT_CAP, DEFAULT_SEARCH_CAP};
use crate::lattice::{NormalLattice, DEFAULT_NODE_CAP};
use crate::products::{diagonal_map, Factorization, FactorizationKind};
use crate::semisimple::{factor_type, SemisimpleAnalysis};

pub const SCHEMA_VERSION: u32 = 1;

/// Chief series are counted up to this many.
pub const SERIES_COUNT_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub blocks: bool,
    pub components: bool,
    pub factorization: Option<Vec<ElementList>>,
    pub extend_normal: Option<ElementList>,
    pub element_cap: usize,
    pub node_cap: usize,
    pub search_cap: usize,
    pub seed: u64,
    pub axiom_samples: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            blocks: true,
            components: true,
            factorization: None,
            extend_normal: None,
            element_cap: DEFAULT_ELEMENT_CAP,
            node_cap: DEFAULT_NODE_CAP,
            search_cap: DEFAULT_SEARCH_CAP,
            seed: 0,
            axiom_samples: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub group: GroupSummary,
    pub lattice: LatticeSection,
    pub chief_factors: Vec<FactorEntry>,
    pub chief_series_count: usize,
    /// Pairs of indices into `chief_factors`.
    pub association_edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlocksSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<ComponentsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub generators: Vec<ElemId>,
    pub abelian: bool,
    pub perfect: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub seed: u64,
    pub axioms_sampled: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupEntry {
    pub order: usize,
    pub generators: Vec<ElemId>,
}

impl SubgroupEntry {
    fn of(s: &Subgroup) -> Self {
        SubgroupEntry {
            order: s.order(),
            generators: s.generators().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSection {
    pub nodes: Vec<SubgroupEntry>,
    /// `(lower, upper)` covering pairs.
    pub hasse_edges: Vec<(usize, usize)>,
    pub minimal_normal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub upper: usize,
    pub lower: usize,
    pub order: usize,
    pub abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksSection {
    pub blocks: Vec<BlockEntry>,
    /// `(a, b)` with block `a` directly below block `b`.
    pub order_edges: Vec<(usize, usize)>,
    pub antichain: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub centralizer: usize,
    /// Indices into `chief_factors`.
    pub representatives: Vec<usize>,
    pub minimal_cover: usize,
    pub minimally_covered: bool,
    pub lowermost: (usize, usize),
    pub uppermost: (usize, usize),
    pub covering_filter: Vec<usize>,
    #[serde(rename = "type")]
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentsSection {
    pub components: Vec<SubgroupEntry>,
    pub layer: SubgroupEntry,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationSection {
    pub parts: Vec<SubgroupEntry>,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence_full: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal_kernel_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal_injective: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSection {
    pub subgroup: usize,
    pub subgroup_blocks: usize,
    pub extensions: Vec<ExtensionEntry>,
    pub stacking_classes: Vec<StackingClassEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionEntry {
    /// Block of the subgroup, in its own numbering.
    pub from: usize,
    /// Block of the whole group.
    pub block: usize,
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StackingClassEntry {
    pub members: Vec<usize>,
    pub kind: String,
    pub extends_to: usize,
}

fn factorization_kind(k: FactorizationKind) -> &'static str {
    match k {
        FactorizationKind::GeneralizedCentral => "generalized_central",
        FactorizationKind::QuasiDirect => "quasi_direct",
        FactorizationKind::Neither => "neither",
    }
}

fn lattice_index(lattice: &NormalLattice, s: &Subgroup) -> Result<usize> {
    lattice
        .index_of(s)
        .ok_or_else(|| Error::invariant("normal subgroup missing from the lattice"))
}

pub fn analyze(group: &FiniteGroup, name: &str, opts: &AnalyzeOptions) -> Result<Report> {
    if !group.verify_axioms_sampled(opts.axiom_samples, opts.seed) {
        return Err(Error::invariant("group multiplication fails the sampled axiom check"));
    }
    let lattice = NormalLattice::new(group, opts.node_cap)?;
    let graph = association_graph(&lattice)?;
    let chief_factors = graph
        .factors
        .iter()
        .map(|f| {
            Ok(FactorEntry {
                upper: lattice_index(&lattice, f.upper())?,
                lower: lattice_index(&lattice, f.lower())?,
                order: f.order(),
                abelian: f.is_abelian(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let factor_index = |u: usize, l: usize| chief_factors.iter().position(|e| e.upper == u && e.lower == l);

    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        group: GroupSummary {
            name: name.to_string(),
            order: group.order(),
            generators: group.generators().to_vec(),
            abelian: group.is_abelian(),
            perfect: group.is_perfect(),
            center_order: group.center().order(),
            derived_order: group.derived_subgroup().order(),
            seed: opts.seed,
            axioms_sampled: opts.axiom_samples,
        },
        lattice: LatticeSection {
            nodes: lattice.nodes().iter().map(SubgroupEntry::of).collect(),
            hasse_edges: lattice.hasse_edges(),
            minimal_normal: lattice.minimal_normal(),
        },
        chief_series_count: lattice.chief_series_iter(SERIES_COUNT_CAP).count(),
        association_edges: graph.edges.clone(),
        chief_factors: chief_factors.clone(),
        blocks: None,
        components: None,
        factorization: None,
        extension: None,
    };

    let poset = if opts.blocks || opts.extend_normal.is_some() {
        Some(BlockPoset::new(&lattice)?)
    } else {
        None
    };

    if let (true, Some(poset)) = (opts.blocks, &poset) {
        let mut blocks = Vec::new();
        for id in 0..poset.len() {
            let b = poset.block(id);
            let low = poset.lowermost_representative(id)?;
            let up = poset.uppermost_representative(id)?;
            let pair = |f: &crate::factors::NormalFactor| -> Result<(usize, usize)> {
                Ok((lattice_index(&lattice, f.upper())?, lattice_index(&lattice, f.lower())?))
            };
            let mut reps = b
                .representatives
                .iter()
                .map(|r| {
                    let (u, l) = pair(r)?;
                    factor_index(u, l).ok_or_else(|| Error::invariant("representative is not a chief factor"))
                })
                .collect::<Result<Vec<_>>>()?;
            reps.sort_unstable();
            blocks.push(BlockEntry {
                centralizer: poset.centralizer_index(id),
                representatives: reps,
                minimal_cover: poset.minimal_cover_index(id),
                minimally_covered: poset.is_minimally_covered(id),
                lowermost: pair(&low)?,
                uppermost: pair(&up)?,
                covering_filter: poset.covering_filter(id),
                kind: factor_type(&low, opts.node_cap, opts.search_cap)?.as_str().to_string(),
            });
        }
        report.blocks = Some(BlocksSection {
            blocks,
            order_edges: poset.hasse_edges()?,
            antichain: poset.is_antichain()?,
        });
    }

    if opts.components {
        let analysis = SemisimpleAnalysis::from_lattice(&lattice, opts.node_cap)?;
        analysis.verify_component_properties()?;
        report.components = Some(ComponentsSection {
            components: analysis.components().iter().map(SubgroupEntry::of).collect(),
            layer: SubgroupEntry::of(&analysis.report.layer),
            kind: analysis.kind().as_str().to_string(),
        });
    }

    if let Some(lists) = &opts.factorization {
        let parts = lists
            .iter()
            .map(|l| resolve_list(group, l))
            .collect::<Result<Vec<_>>>()?;
        let f = Factorization::classify(&group.whole(), &parts)?;
        let independence_full = if parts.len() <= 4 { Some(f.independence_full()?) } else { None };
        let all_normal = parts.iter().all(|p| p.is_normal());
        let (kernel, injective) = if all_normal && f.is_generalized_central() && parts.len() >= 2 {
            let d = diagonal_map(group, &parts, opts.element_cap)?;
            (Some(d.kernel.order()), Some(d.injective))
        } else {
            (None, None)
        };
        report.factorization = Some(FactorizationSection {
            parts: parts.iter().map(SubgroupEntry::of).collect(),
            kind: factorization_kind(f.kind).to_string(),
            independence_full,
            diagonal_kernel_order: kernel,
            diagonal_injective: injective,
        });
    }

    if let Some(list) = &opts.extend_normal {
        let h = resolve_normal(group, list)?;
        let ctx = ExtensionContext::with_lattice(&lattice, &h, opts.node_cap)?;
        ctx.verify_extension_lemmas()?;
        let mut extensions = Vec::new();
        for a in 0..ctx.h.len() {
            let e = ctx.extend_block(a)?;
            extensions.push(ExtensionEntry {
                from: e.from,
                block: e.block,
                m: lattice_index(&lattice, &e.m)?,
                n: lattice_index(&lattice, &e.n)?,
            });
        }
        let stacking = ctx.stacking_structure()?;
        let iso = ctx.extension_poset_check()?;
        let stacking_classes = stacking
            .classes
            .iter()
            .map(|(members, kind)| StackingClassEntry {
                members: members.clone(),
                kind: kind.as_str().to_string(),
                extends_to: iso.extension_of[members[0]],
            })
            .collect();
        report.extension = Some(ExtensionSection {
            subgroup: lattice_index(&lattice, &h)?,
            subgroup_blocks: ctx.h.len(),
            extensions,
            stacking_classes,
        });
    }

    Ok(report)
}

pub fn render(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    #[test]
    fn klein_report() {
        let g = named_group("V4", DEFAULT_ELEMENT_CAP).unwrap();
        let r = analyze(&g, "V4", &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.lattice.nodes.len(), 5);
        assert_eq!(r.chief_factors.len(), 6);
        assert_eq!(r.chief_series_count, 3);
        assert_eq!(r.association_edges.len(), 6);
        assert!(r.blocks.as_ref().unwrap().blocks.is_empty());
    }

    #[test]
    fn s5_report_round_trips() {
        let g = named_group("S5", DEFAULT_ELEMENT_CAP).unwrap();
        let r = analyze(&g, "S5", &AnalyzeOptions::default()).unwrap();
        let b = r.blocks.as_ref().unwrap();
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.blocks[0].kind, "semisimple");
        assert_eq!(r.components.as_ref().unwrap().components.len(), 1);
        let text = render(&r);
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
