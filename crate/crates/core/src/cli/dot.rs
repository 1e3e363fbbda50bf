//! Graphviz output for the graphs carried by a [`Report`].

use std::fmt::Write;

use crate::cli::report::Report;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotGraph {
    AssociationGraph,
    BlockPoset,
    NormalLattice,
}

impl DotGraph {
    pub const ALL: [DotGraph; 3] = [DotGraph::AssociationGraph, DotGraph::BlockPoset, DotGraph::NormalLattice];

    pub fn name(self) -> &'static str {
        match self {
            DotGraph::AssociationGraph => "association-graph",
            DotGraph::BlockPoset => "block-poset",
            DotGraph::NormalLattice => "normal-lattice",
        }
    }

    pub fn parse(s: &str) -> Option<DotGraph> {
        DotGraph::ALL.into_iter().find(|g| g.name() == s)
    }
}

pub fn render_dot(report: &Report, which: DotGraph) -> Result<String> {
    let mut out = String::new();
    let nodes = &report.lattice.nodes;
    match which {
        DotGraph::NormalLattice => {
            writeln!(out, "digraph normal_lattice {{").unwrap();
            writeln!(out, "  rankdir=BT;").unwrap();
            for (i, n) in nodes.iter().enumerate() {
                writeln!(out, "  n{i} [label=\"{i}: order {}\"];", n.order).unwrap();
            }
            for (a, b) in &report.lattice.hasse_edges {
                writeln!(out, "  n{a} -> n{b};").unwrap();
            }
        }
        DotGraph::AssociationGraph => {
            writeln!(out, "graph association {{").unwrap();
            for (i, f) in report.chief_factors.iter().enumerate() {
                let shape = if f.abelian { "ellipse" } else { "box" };
                writeln!(
                    out,
                    "  f{i} [label=\"{i}: {}/{} (order {})\", shape={shape}];",
                    f.upper, f.lower, f.order
                )
                .unwrap();
            }
            for (a, b) in &report.association_edges {
                writeln!(out, "  f{a} -- f{b};").unwrap();
            }
        }
        DotGraph::BlockPoset => {
            let blocks = report
                .blocks
                .as_ref()
                .ok_or_else(|| Error::SectionMissing("blocks".into()))?;
            writeln!(out, "digraph block_poset {{").unwrap();
            writeln!(out, "  rankdir=BT;").unwrap();
            for (i, b) in blocks.blocks.iter().enumerate() {
                writeln!(
                    out,
                    "  b{i} [label=\"block {i}: |C| = {} ({})\"];",
                    nodes[b.centralizer].order, b.kind
                )
                .unwrap();
            }
            for (a, b) in &blocks.order_edges {
                writeln!(out, "  b{a} -> b{b};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::report::{analyze, AnalyzeOptions};
    use crate::group::{named_group, DEFAULT_ELEMENT_CAP};

    #[test]
    fn klein_association_graph_is_a_hexagon() {
        let g = named_group("V4", DEFAULT_ELEMENT_CAP).unwrap();
        let r = analyze(&g, "V4", &AnalyzeOptions::default()).unwrap();
        let dot = render_dot(&r, DotGraph::AssociationGraph).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.starts_with("graph association {"));
    }

    #[test]
    fn missing_blocks_section() {
        let g = named_group("S4", DEFAULT_ELEMENT_CAP).unwrap();
        let opts = AnalyzeOptions { blocks: false, ..AnalyzeOptions::default() };
        let r = analyze(&g, "S4", &opts).unwrap();
        assert_eq!(
            render_dot(&r, DotGraph::BlockPoset).unwrap_err(),
            Error::SectionMissing("blocks".into())
        );
    }
}
