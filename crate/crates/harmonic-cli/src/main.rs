//! `harmonic` — exact harmonic centrality, centralization, graph-family
//! generation, graph products, and formula-vs-oracle verification.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification
//! mismatch under `--fail-on-mismatch`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use harmonic_core::centrality::centrality_profile;
use harmonic_core::families::{Family, FamilySpec};
use harmonic_core::formulas::TheoremId;
use harmonic_core::graph::Graph;
use harmonic_core::products::{product, ProductKind};
use harmonic_core::verify::{records_to_csv, verify_theorem, VerificationRecord};

#[derive(Parser)]
#[command(
    name = "harmonic",
    version,
    about = "Exact harmonic centrality and centralization of graphs and graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a path, cycle, fan or star graph
    Gen {
        /// Graph family: path, cycle, fan or star
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Size parameter (path/cycle order; fan/star path length)
        #[arg(long)]
        m: u32,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Build the Cartesian or direct product of two graphs
    Product {
        /// cartesian or direct
        #[arg(long, value_parser = clap::value_parser!(ProductKind))]
        op: ProductKind,
        /// Left factor: edge-list file or family:NAME:M
        #[arg(long)]
        left: String,
        /// Right factor: edge-list file or family:NAME:M
        #[arg(long)]
        right: String,
        /// Write here instead of stdout (edge list gains a .labels sidecar)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Per-vertex harmonic centralities and the graph centralization
    Centrality {
        /// Edge-list file or family:NAME:M
        graph: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
    },
    /// Sweep closed forms against the BFS oracle
    Verify {
        /// Theorem id (3.1 .. 3.12) or `all`
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        m_min: u32,
        #[arg(long)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Exit with code 2 if any record mismatches
        #[arg(long)]
        fail_on_mismatch: bool,
    },
    /// Export a graph as Graphviz DOT
    Dot {
        /// Edge-list file or family:NAME:M
        graph: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

fn parse_family(s: &str) -> Result<Family, harmonic_core::Error> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            family,
            m,
            out,
            format,
        } => {
            let graph = FamilySpec::new(family, m)?.generate();
            emit_graph(&graph, format, out.as_deref(), false)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Product {
            op,
            left,
            right,
            out,
            format,
        } => {
            let left = resolve_graph(&left)?;
            let right = resolve_graph(&right)?;
            let prod = product(op, &left, &right)?;
            emit_graph(prod.graph(), format, out.as_deref(), true)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Centrality { graph, format } => {
            let graph = resolve_graph(&graph)?;
            let report = centrality_profile(&graph)?;
            match format {
                ReportFormat::Csv => print!("{}", report.to_csv()),
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            m_min,
            m_max,
            format,
            fail_on_mismatch,
        } => cmd_verify(&theorem, m_min, m_max, format, fail_on_mismatch),
        Command::Dot { graph } => {
            let graph = resolve_graph(&graph)?;
            if graph.order() == 0 {
                bail!("cannot export an empty graph");
            }
            print!("{}", render_dot(&graph));
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Accepts an edge-list path or an inline `family:NAME:M` spec.
fn resolve_graph(operand: &str) -> Result<Graph> {
    if let Some(rest) = operand.strip_prefix("family:") {
        let (name, m) = rest
            .split_once(':')
            .with_context(|| format!("`{operand}` should look like family:path:3"))?;
        let family: Family = name.parse()?;
        let m: u32 = m
            .parse()
            .with_context(|| format!("`{m}` is not a valid size parameter"))?;
        Ok(FamilySpec::new(family, m)?.generate())
    } else {
        let text = fs::read_to_string(operand)
            .with_context(|| format!("cannot read edge list `{operand}`"))?;
        Graph::parse_edge_list(&text).with_context(|| format!("while parsing `{operand}`"))
    }
}

fn emit_graph(
    graph: &Graph,
    format: GraphFormat,
    out: Option<&Path>,
    labels_sidecar: bool,
) -> Result<()> {
    let text = match format {
        GraphFormat::Edgelist => graph.to_edge_list(),
        GraphFormat::Json => format!("{}\n", serde_json::to_string_pretty(&graph_json(graph))?),
        GraphFormat::Dot => render_dot(graph),
    };
    match out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write `{}`", path.display()))?;
            if labels_sidecar && format == GraphFormat::Edgelist {
                let mut sidecar = path.as_os_str().to_owned();
                sidecar.push(".labels");
                let sidecar = PathBuf::from(sidecar);
                fs::write(&sidecar, labels_text(graph))
                    .with_context(|| format!("cannot write `{}`", sidecar.display()))?;
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn graph_json(graph: &Graph) -> serde_json::Value {
    let labels: Vec<String> = graph.vertices().map(|v| graph.label_or_id(v)).collect();
    let edges: Vec<(u32, u32)> = graph.edges().collect();
    serde_json::json!({
        "order": graph.order(),
        "labels": labels,
        "edges": edges,
    })
}

fn labels_text(graph: &Graph) -> String {
    let mut out = String::new();
    for v in graph.vertices() {
        let _ = writeln!(out, "{v} {}", graph.label_or_id(v));
    }
    out
}

fn render_dot(graph: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in graph.vertices() {
        if let Some(label) = graph.label(v) {
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        } else if graph.degree(v) == 0 {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn cmd_verify(
    theorem: &str,
    m_min: u32,
    m_max: u32,
    format: ReportFormat,
    fail_on_mismatch: bool,
) -> Result<ExitCode> {
    if m_min > m_max {
        bail!("--m-min {m_min} exceeds --m-max {m_max}");
    }
    let theorems: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse::<TheoremId>()?]
    };

    let mut records: Vec<VerificationRecord> = Vec::new();
    let mut summary = String::new();
    for t in &theorems {
        let section = verify_theorem(*t, m_min..=m_max);
        let matched = section.iter().filter(|r| r.matches).count();
        let _ = writeln!(
            summary,
            "{t}: checked {}, matched {matched}, mismatched {}",
            section.len(),
            section.len() - matched
        );
        records.extend(section);
    }
    if theorems.len() > 1 {
        let matched = records.iter().filter(|r| r.matches).count();
        let _ = writeln!(
            summary,
            "total: checked {}, matched {matched}, mismatched {}",
            records.len(),
            records.len() - matched
        );
    }

    match format {
        ReportFormat::Csv => print!("{}", records_to_csv(&records)),
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&records)?),
    }
    eprint!("{summary}");

    if fail_on_mismatch && records.iter().any(|r| !r.matches) {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}
