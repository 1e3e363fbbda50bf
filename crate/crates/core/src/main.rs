use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use chiefblock::cli::{analyze, parse_spec, render, render_dot, AnalyzeOptions, DotGraph, ElementList, GroupSpec};
use chiefblock::group::{DEFAULT_ELEMENT_CAP, DEFAULT_SEARCH_CAP};
use chiefblock::lattice::DEFAULT_NODE_CAP;
use chiefblock::{Error, Result};

#[derive(Parser)]
#[command(name = "chiefblock", version, about = "Chief factors, chief blocks and their extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a group and print a JSON report.
    #[command(group(ArgGroup::new("input").required(true).args(["spec", "group"])))]
    Analyze {
        /// JSON group description.
        #[arg(long, value_name = "FILE")]
        spec: Option<PathBuf>,
        /// Built-in group name (C<n>, D<n>, S<n>, A<n>, Q8, V4, SL23, SL25, ES32, A5wrC2).
        #[arg(long, value_name = "NAME")]
        group: Option<String>,
        /// Include the block poset (default when neither section flag is given).
        #[arg(long)]
        blocks: bool,
        /// Include components and the layer (default when neither section flag is given).
        #[arg(long)]
        components: bool,
        /// JSON list of generator lists, one per part.
        #[arg(long, value_name = "FILE")]
        factorization: Option<PathBuf>,
        /// JSON generator list whose normal closure is H.
        #[arg(long, value_name = "JSON")]
        extend_normal: Option<String>,
        /// association-graph, block-poset or normal-lattice.
        #[arg(long, value_name = "WHICH", requires = "output")]
        dot: Option<String>,
        /// Where to write the DOT graph.
        #[arg(short, long, value_name = "FILE", requires = "dot")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        search_cap: usize,
        /// Seed for the sampled group-axiom check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<()> {
    let Command::Analyze {
        spec,
        group,
        blocks,
        components,
        factorization,
        extend_normal,
        dot,
        output,
        element_cap,
        node_cap,
        search_cap,
        seed,
    } = cli.command;
    let dot = dot
        .map(|d| DotGraph::parse(&d).ok_or_else(|| Error::UnknownName(format!("dot graph `{d}`"))))
        .transpose()?;
    let spec = match (spec, group) {
        (Some(path), _) => parse_spec(&read(&path)?)?,
        (None, Some(name)) => {
            let s = GroupSpec::named(&name);
            s.validate()?;
            s
        }
        (None, None) => unreachable!("clap requires an input"),
    };
    let g = spec.build(element_cap)?;
    let (blocks, components) = if blocks || components { (blocks, components) } else { (true, true) };
    let opts = AnalyzeOptions {
        blocks,
        components,
        factorization: factorization
            .map(|p| parse_json::<Vec<ElementList>>(&read(&p)?))
            .transpose()?,
        extend_normal: extend_normal.map(|t| parse_json::<ElementList>(&t)).transpose()?,
        element_cap,
        node_cap,
        search_cap,
        seed,
        ..AnalyzeOptions::default()
    };
    let report = analyze(&g, &spec.describe(), &opts)?;
    if let (Some(which), Some(path)) = (dot, output) {
        std::fs::write(&path, render_dot(&report, which)?)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    print!("{}", render(&report));
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
