//! The `limitlab` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad input file, invalid
//! graphon, non-bipartite split, ...), 2 on a usage error (unknown flag,
//! subcommand, class or graph name). Errors print one line on stderr.
//!
//! Graph specs: `path:K`, `cycle:K`, `complete:K`, `star:K`,
//! `named:NAME[:K]`, `g6:STRING`, or a file path (edge list if the first
//! line contains a space, graph6 otherwise).
//!
//! Graphon specs: `named:NAME[:PARAM]` or a file in the text format of
//! [`StepGraphon::parse`].
//!
//! Family specs: comma-separated graph specs plus `cycles>=K` and
//! `oddcycles`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::certificates::{prf_search_with_budget, ptwin_scan, DEFAULT_NODE_BUDGET};
use crate::classes::{ClassName, ClassSpec, ForbiddenFamily, Mode, DEFAULT_TRUNCATION};
use crate::density::{t_hom, t_ind, t_inj};
use crate::error::Error;
use crate::graph::{
    make_named, parse_edge_list, parse_graph6, serialize_graph, serialize_graph6, Bipartition,
    GraphFormat, LabelledGraph, CATALOG_NAMES,
};
use crate::graphon::{named_graphon, t_ind_step, t_step, GraphonName, StepGraphon, GRAPHON_NAMES};
use crate::limit::{closure_membership, dichotomy_probe};
use crate::sampler::sample;

#[derive(Parser, Debug)]
#[command(name = "limitlab", version, about = "Densities, W-random graphs and closure tests for hereditary classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact density of F in G.
    Density {
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(short = 'F')]
        f: String,
        #[arg(short = 'G')]
        g: String,
    },
    /// Exact density of F in a step graphon.
    Gdensity {
        #[arg(long, value_enum)]
        kind: GraphonKind,
        #[arg(short = 'F')]
        f: String,
        #[arg(short = 'W')]
        w: String,
    },
    /// Draw G(n, W).
    Sample {
        #[arg(short = 'W')]
        w: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
    /// Test class membership.
    Recognize {
        #[arg(long)]
        class: String,
        #[arg(short = 'G')]
        g: String,
    },
    /// Decide membership of W in the closure of a forbidden-family class.
    Closure {
        #[arg(short = 'W')]
        w: String,
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "induced")]
        mode: ModeArg,
        #[arg(long = "truncate")]
        truncate: Option<usize>,
    },
    /// Monte Carlo estimate of P(G(n, W) in class) for each n.
    Dichotomy {
        #[arg(short = 'W')]
        w: String,
        #[arg(long)]
        class: String,
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Search for a completion of a bipartite graph inside a class.
    Prf {
        #[arg(short = 'F')]
        f: String,
        /// `V1/V2`, each a comma-separated vertex list.
        #[arg(long)]
        parts: Option<String>,
        #[arg(long, conflicts_with = "class", required_unless_present = "class")]
        family: Option<String>,
        #[arg(long)]
        class: Option<String>,
        #[arg(long = "truncate")]
        truncate: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Scan small class members for twin-extension failures.
    Ptwin {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(0..=7))]
        nmax: u8,
    },
    /// List named graphs, graphons and classes.
    Catalog,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GraphKind {
    Hom,
    Inj,
    Ind,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GraphonKind {
    T,
    Tind,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Emit {
    Graph6,
    Edgelist,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Induced,
    Subgraph,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{e}");
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(cmd: Command) -> CliResult<String> {
    let text = match cmd {
        Command::Density { kind, f, g } => {
            let (f, g) = (graph_spec(&f)?, graph_spec(&g)?);
            let d = match kind {
                GraphKind::Hom => t_hom(&f, &g),
                GraphKind::Inj => t_inj(&f, &g),
                GraphKind::Ind => t_ind(&f, &g),
            };
            format!("{d}\n")
        }
        Command::Gdensity { kind, f, w } => {
            let (f, w) = (graph_spec(&f)?, graphon_spec(&w)?);
            let d = match kind {
                GraphonKind::T => t_step(&f, &w),
                GraphonKind::Tind => t_ind_step(&f, &w),
            };
            format!("{d}\n")
        }
        Command::Sample { w, n, seed, emit } => {
            let s = sample(&graphon_spec(&w)?, n, seed);
            let format = match emit {
                Emit::Graph6 => GraphFormat::Graph6,
                Emit::Edgelist => GraphFormat::EdgeList,
            };
            let mut text = serialize_graph(&s.graph, format);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let blocks: Vec<String> = s.blocks.iter().map(|b| b.to_string()).collect();
            text.push_str(&format!("blocks {}\n", blocks.join(" ")));
            text
        }
        Command::Recognize { class, g } => {
            let class: ClassName = class.parse()?;
            format!("{}\n", class.contains(&graph_spec(&g)?))
        }
        Command::Closure { w, family, mode, truncate } => {
            let w = graphon_spec(&w)?;
            let mode = match mode {
                ModeArg::Induced => Mode::Induced,
                ModeArg::Subgraph => Mode::Subgraph,
            };
            let fam = family_spec(&family, mode, truncate)?;
            format!("{}\n", closure_membership(&w, &fam))
        }
        Command::Dichotomy { w, class, n, trials, seed } => {
            let w = graphon_spec(&w)?;
            let class: ClassName = class.parse()?;
            if trials == 0 {
                return Err(Failure::Usage("--trials must be positive".into()));
            }
            let oracle = move |g: &LabelledGraph| class.contains(g);
            dichotomy_probe(&w, &oracle, &n, trials, seed)
                .iter()
                .map(|r| format!("{r}\n"))
                .collect()
        }
        Command::Prf { f, parts, family, class, truncate, budget } => {
            let named = named_spec(&f)?;
            let g = match &named {
                Some(ng) => ng.graph.clone(),
                None => graph_spec(&f)?,
            };
            let bip = match (parts, named.and_then(|ng| ng.bipartition)) {
                (Some(p), _) => parts_spec(&p)?,
                (None, Some(b)) => b,
                (None, None) => return Err(Failure::Usage("--parts is required for this graph".into())),
            };
            let fam = match (family, class) {
                (Some(spec), _) => family_spec(&spec, Mode::Induced, truncate)?,
                (None, Some(name)) => {
                    let class: ClassName = name.parse()?;
                    let mut fam = class.forbidden_family().ok_or(Error::FamilyRequired(name))?;
                    if let Some(k) = truncate {
                        fam.truncation = k;
                    }
                    fam
                }
                (None, None) => unreachable!("clap requires one of --family and --class"),
            };
            format!("{}\n", prf_search_with_budget(&g, &bip, &fam, budget)?)
        }
        Command::Ptwin { class, nmax } => {
            let class = ClassSpec::named(class.parse()?);
            match ptwin_scan(&class, nmax as usize) {
                None => "ok\n".to_string(),
                Some((g, v)) => format!("COUNTEREXAMPLE G={} v={v}\n", serialize_graph6(&g)),
            }
        }
        Command::Catalog => catalog(),
    };
    Ok(text)
}

fn catalog() -> String {
    let mut s = String::from("graphs\n");
    for (name, desc) in CATALOG_NAMES {
        s.push_str(&format!("  {name:<26} {desc}\n"));
    }
    s.push_str("graphons\n");
    for (name, desc) in GRAPHON_NAMES {
        s.push_str(&format!("  {name:<26} {desc}\n"));
    }
    s.push_str("classes\n");
    for c in ClassName::ALL {
        s.push_str(&format!("  {c}\n"));
    }
    s
}

fn parse_count(s: &str) -> CliResult<usize> {
    s.parse().map_err(|_| Failure::Usage(format!("expected a non-negative integer, got `{s}`")))
}

/// `named:NAME[:K]` resolved through the catalog, keeping its bipartition.
fn named_spec(spec: &str) -> CliResult<Option<crate::graph::NamedGraph>> {
    let Some(rest) = spec.strip_prefix("named:") else {
        return Ok(None);
    };
    let (name, k) = match rest.split_once(':') {
        Some((name, k)) => (name, Some(parse_count(k)?)),
        None => (rest, None),
    };
    Ok(Some(make_named(name, k)?))
}

fn graph_spec(spec: &str) -> CliResult<LabelledGraph> {
    if let Some(ng) = named_spec(spec)? {
        return Ok(ng.graph);
    }
    if let Some((kind, rest)) = spec.split_once(':') {
        match kind {
            "path" | "cycle" | "complete" | "star" => {
                return Ok(make_named(kind, Some(parse_count(rest)?))?.graph)
            }
            "g6" => return Ok(parse_graph6(rest)?),
            _ if !Path::new(spec).exists() => {
                return Err(Failure::Usage(format!("unknown graph spec `{spec}`")))
            }
            _ => {}
        }
    }
    let text = read_file(spec)?;
    let first = text.lines().next().unwrap_or("");
    Ok(if first.contains(' ') { parse_edge_list(&text)? } else { parse_graph6(&text)? })
}

fn graphon_spec(spec: &str) -> CliResult<StepGraphon> {
    if let Some(rest) = spec.strip_prefix("named:") {
        return Ok(named_graphon(&rest.parse::<GraphonName>()?)?);
    }
    Ok(StepGraphon::parse(&read_file(spec)?)?)
}

fn read_file(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read `{path}`: {e}")))
}

fn family_spec(spec: &str, mode: Mode, truncate: Option<usize>) -> CliResult<ForbiddenFamily> {
    let mut members = Vec::new();
    let mut tail: Option<(usize, bool)> = None;
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let next = if let Some(k) = tok.strip_prefix("cycles>=") {
            Some((parse_count(k)?, false))
        } else if tok == "oddcycles" {
            Some((3, true))
        } else {
            members.push(graph_spec(tok)?);
            None
        };
        if next.is_some() {
            if tail.is_some() {
                return Err(Failure::Usage("at most one cycle tail per family".into()));
            }
            tail = next;
        }
    }
    let fam = match tail {
        Some((min, odd)) => {
            ForbiddenFamily::cycles(min, odd, mode, truncate.unwrap_or(DEFAULT_TRUNCATION))?
                .with_members(members)
        }
        None => ForbiddenFamily::finite(members, mode),
    };
    fam.validate()?;
    Ok(fam)
}

fn parts_spec(spec: &str) -> CliResult<Bipartition> {
    let (a, b) = spec
        .split_once('/')
        .ok_or_else(|| Failure::Usage(format!("--parts expects `V1/V2`, got `{spec}`")))?;
    let list = |s: &str| -> CliResult<Vec<usize>> {
        s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(parse_count).collect()
    };
    Ok(Bipartition::new(list(a)?, list(b)?))
}
