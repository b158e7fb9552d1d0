use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordergraph::census::{run_census, CensusConfig, Family, OutputFormat};
use ordergraph::oracle::{predict, Property};
use ordergraph::recognition::{brute_force_root_search, ForbiddenCatalog};
use ordergraph::supergraph::build_variant;
use ordergraph::{is_complement_of_line_graph, is_line_graph, Graph, GroupSpec, Variant};

/// Order supergraphs of finite groups and line graph recognition.
#[derive(Parser)]
#[command(name = "ordergraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a power graph or order supergraph and export it.
    Build {
        /// Group spec: Z6, D12, Q12, SD16, S4, A4, Z2xZ4, @table.tbl
        spec: GroupSpec,
        #[arg(long, default_value = "supergraph")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run recognition on one graph and compare with the prediction.
    Check {
        spec: GroupSpec,
        #[arg(long, default_value = "supergraph")]
        variant: Variant,
        #[arg(long, default_value = "line")]
        property: Property,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every group of the catalog.
    Census {
        #[arg(long = "max-order", visible_alias = "maxOrder", default_value_t = 48)]
        max_order: usize,
        /// Comma separated; all families when omitted.
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        #[arg(long, env = "ORDERGRAPH_WORKERS")]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[arg(long = "fail-fast", visible_alias = "failFast")]
        fail_fast: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a graph whose line graph is isomorphic to the target.
    Root {
        /// Group spec whose graph is the target.
        #[arg(required_unless_present = "graph", conflicts_with = "graph")]
        spec: Option<GroupSpec>,
        #[arg(long, default_value = "supergraph")]
        variant: Variant,
        /// Use the complement of the group graph as the target.
        #[arg(long)]
        complement: bool,
        /// Target graph as a JSON file instead of a group spec.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long = "max-vertices", default_value_t = 10)]
        max_vertices: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(
    spec: &GroupSpec,
    variant: Variant,
    format: GraphFormat,
    out: Option<&Path>,
) -> Result<()> {
    let g = spec.build()?;
    let lg = build_variant(&g, variant);
    let text = match format {
        GraphFormat::Json => serde_json::to_string_pretty(&lg.to_json())? + "\n",
        GraphFormat::Dot => lg.graph.to_dot(&format!("{} {spec}", variant.as_str())),
    };
    emit(out, &text)
}

fn check(
    spec: &GroupSpec,
    variant: Variant,
    property: Property,
    out: Option<&Path>,
) -> Result<bool> {
    let g = spec.build()?;
    let graph = build_variant(&g, variant).graph;
    let verdict = match property {
        Property::LineGraph => is_line_graph(&graph),
        Property::ComplementOfLineGraph => is_complement_of_line_graph(&graph),
    };
    let predicted = predict(&g, variant, property);
    let agree = predicted.is_none_or(|p| p == verdict.is_member);

    let mut body = serde_json::to_value(verdict.to_json())?;
    let obj = body
        .as_object_mut()
        .expect("verdict serializes to an object");
    if let Some(w) = &verdict.witness {
        let elements: Vec<String> = w.embedding.0.iter().map(|&u| graph.label(u)).collect();
        let name = ForbiddenCatalog::get().member(w.index).map(|m| m.name);
        obj.insert("witnessElements".into(), json!(elements));
        obj.insert("forbiddenName".into(), json!(name));
    }
    obj.insert("group".into(), json!(spec.to_string()));
    obj.insert("variant".into(), json!(variant));
    obj.insert("property".into(), json!(property));
    obj.insert("predicted".into(), json!(predicted));
    obj.insert("agree".into(), json!(agree));
    emit(out, &(serde_json::to_string_pretty(&body)? + "\n"))?;
    Ok(agree)
}

fn census(config: &CensusConfig, out: Option<&Path>) -> Result<bool> {
    let report = run_census(config)?;
    let text = match config.output_format {
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => report.to_json()? + "\n",
    };
    emit(out, &text)?;
    if config.output_format == OutputFormat::Csv {
        for p in report.probes.iter().filter(|p| !p.is_clean()) {
            for f in &p.flags {
                eprintln!("probe {} ({:?}): {f}", p.group, p.corollary);
            }
        }
        for e in &report.errors {
            eprintln!("error {}: {}", e.group, e.message);
        }
        let s = &report.summary;
        eprintln!(
            "{} groups, {} agreements, {} disagreements, {} skips, {} inconsistencies, {} errors, {} flagged probes",
            s.groups,
            s.agreements,
            s.disagreements,
            s.hypothesis_skips,
            s.inconsistencies,
            s.errors,
            s.flagged_probes
        );
    }
    Ok(report.is_clean())
}

fn root_target(
    spec: Option<&GroupSpec>,
    variant: Variant,
    complement: bool,
    graph: Option<&Path>,
) -> Result<Graph> {
    let target = match (graph, spec) {
        (Some(path), _) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Graph::from_json_str(&text)?
        }
        (None, Some(spec)) => build_variant(&spec.build()?, variant).graph,
        (None, None) => anyhow::bail!("either a group spec or --graph is required"),
    };
    Ok(if complement {
        target.complement()
    } else {
        target
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build {
            spec,
            variant,
            format,
            out,
        } => build(&spec, variant, format, out.as_deref()).map(|_| true),
        Command::Check {
            spec,
            variant,
            property,
            out,
        } => check(&spec, variant, property, out.as_deref()),
        Command::Census {
            max_order,
            families,
            workers,
            format,
            fail_fast,
            out,
        } => {
            let defaults = CensusConfig::default();
            let workers = workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let config = CensusConfig {
                max_order,
                families: if families.is_empty() {
                    defaults.families
                } else {
                    families
                },
                workers,
                output_format: match format {
                    ReportFormat::Csv => OutputFormat::Csv,
                    ReportFormat::Json => OutputFormat::Json,
                },
                fail_fast,
            };
            census(&config, out.as_deref())
        }
        Command::Root {
            spec,
            variant,
            complement,
            graph,
            max_vertices,
            out,
        } => {
            let target = root_target(spec.as_ref(), variant, complement, graph.as_deref())?;
            let text = match brute_force_root_search(&target, max_vertices)? {
                Some(h) => serde_json::to_string_pretty(&h.to_json())? + "\n",
                None => "none\n".to_string(),
            };
            emit(out.as_deref(), &text).map(|_| true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
