//! Pieces of the `chiefblock` command-line tool that are useful as a library:
//! group descriptions, the analysis report and its Graphviz renderings.

pub mod dot;
pub mod report;
pub mod spec;

pub use dot::{render_dot, DotGraph};
pub use report::{analyze, render, AnalyzeOptions, Report, SCHEMA_VERSION};
pub use spec::{parse_spec, render_spec, ElementList, ElementSpec, GroupSpec};
