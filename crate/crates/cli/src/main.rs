//! `udim`: exact metric/partition dimension, bound chains, certified
//! constructions and gap scans for unicyclic graphs.
//!
//! Exit codes: 0 success, 1 input or configuration error, 2 a proven bound
//! failed, 3 a partition does not resolve.

mod render;

// A closed stdout (e.g. piped into `head`) is not an error worth a panic.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

use std::fs;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use udim_core::bounds::{bounds_report, tree_bounds_report};
use udim_core::constructions::{construct, lift_tree_partition, ConstructionKind};
use udim_core::generators::{ExhaustiveMode, GeneratorSpec};
use udim_core::scan::{conjecture_scan, exhaustive_instances, random_instances, Instance};
use udim_core::{
    all_pairs_distances, check_resolving_partition, check_resolving_set, metric_dimension_exact, parse_edge_list,
    partition_dimension_exact, validate_unicyclic, Execution, Graph, OrderedPartition, SolverCaps, UnicyclicGraph,
};

use render::Style;

const EXIT_INPUT: u8 = 1;
const EXIT_BOUND: u8 = 2;
const EXIT_NOT_RESOLVING: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "udim", version, about = "Metric and partition dimension of unicyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest graph the exact metric-dimension solver accepts.
    #[arg(long, global = true, default_value_t = SolverCaps::default().dim, value_parser = positive)]
    dim_cap: usize,

    /// Largest graph the exact partition-dimension solver accepts.
    #[arg(long, global = true, default_value_t = SolverCaps::default().pd, value_parser = positive)]
    pd_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants, exact values and the full bound chain.
    Analyze(InputArgs),
    /// Exact metric dimension with a smallest resolving set.
    Dim(InputArgs),
    /// Exact partition dimension with a smallest resolving partition.
    Pd(InputArgs),
    /// Run one of the resolving-set/partition constructions and verify it.
    Construct {
        /// pendant-set, cycle, unit-terminal, kappa-tau, xi-theta or lift.
        #[arg(value_parser = construction_name)]
        name: ConstructionKind,
        #[command(flatten)]
        input: InputArgs,
        /// lift: spanning tree `G - U-V` instead of the minimum-leaf tree.
        #[arg(long, value_name = "U-V", value_parser = edge)]
        delete: Option<(usize, usize)>,
        /// lift: resolving partition of the tree (default: an optimum one).
        #[arg(long, value_name = "FILE")]
        tree_partition: Option<PathBuf>,
    },
    /// Check whether a partition file resolves the graph.
    Verify {
        /// One part per line, space-separated vertex ids.
        partition: PathBuf,
        #[command(flatten)]
        input: GraphSource,
    },
    /// Compare pd(G) with pd(T) over every spanning tree T.
    Scan(ScanArgs),
    /// Print a generated graph as an edge list (or DOT).
    Gen {
        /// Generator, e.g. cycle:7, path:9, star:4, c4k:3, sun:4, corona:3:2, random:12:7.
        spec: String,
        /// Emit Graphviz DOT instead of an edge list.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args, Debug)]
struct GraphSource {
    /// Inline generator (see `gen`).
    #[arg(long, value_name = "SPEC", conflicts_with = "graph")]
    gen: Option<String>,
    /// Edge-list file.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Edge-list file (alternatively --graph or --gen).
    #[arg(value_name = "INPUT", conflicts_with_all = ["gen", "graph"])]
    input: Option<PathBuf>,
    #[command(flatten)]
    source: GraphSource,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Every unicyclic graph with A to B vertices (inclusive).
    #[arg(long, value_name = "A..B", value_parser = range)]
    exhaustive: Option<(usize, usize)>,
    /// With --exhaustive: all labelled graphs instead of one per isomorphism class.
    #[arg(long, requires = "exhaustive")]
    labeled: bool,
    /// Number of random graphs.
    #[arg(long, value_name = "N", requires = "n")]
    random: Option<usize>,
    /// Vertices per random graph.
    #[arg(long, value_name = "K", requires = "random")]
    n: Option<usize>,
    /// Seed of the random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (1 runs sequentially; default: all cores).
    #[arg(long, value_parser = positive)]
    jobs: Option<usize>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn construction_name(s: &str) -> Result<ConstructionKind, String> {
    ConstructionKind::from_name(s).ok_or_else(|| {
        let names: Vec<_> = ConstructionKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown construction `{s}` (one of {})", names.join(", "))
    })
}

fn edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['-', ',']).ok_or("expected U-V")?;
    let a = a.trim().parse().map_err(|_| "expected U-V")?;
    let b = b.trim().parse().map_err(|_| "expected U-V")?;
    Ok((a, b))
}

fn range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| "expected A..B")?;
    let b: usize = b.trim().parse().map_err(|_| "expected A..B")?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

struct Loaded {
    id: String,
    graph: Graph,
}

impl GraphSource {
    fn load(&self, positional: Option<&Path>) -> Result<Loaded> {
        let file = positional.or(self.graph.as_deref());
        match (&self.gen, file) {
            (Some(spec), None) => {
                let parsed: GeneratorSpec = spec.parse()?;
                Ok(Loaded {
                    id: parsed.to_string(),
                    graph: parsed.build()?,
                })
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let graph = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
                Ok(Loaded {
                    id: path.display().to_string(),
                    graph,
                })
            }
            (None, None) => bail!("no input graph: give a file, --graph FILE or --gen SPEC"),
            (Some(_), Some(_)) => bail!("give exactly one input graph"),
        }
    }
}

impl InputArgs {
    fn load(&self) -> Result<Loaded> {
        self.source.load(self.input.as_deref())
    }
}

fn unicyclic(loaded: &Loaded) -> Result<UnicyclicGraph> {
    validate_unicyclic(loaded.graph.clone()).with_context(|| format!("{} is not a unicyclic graph", loaded.id))
}

fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

struct App {
    format: Format,
    caps: SolverCaps,
    style: Style,
}

#[derive(Serialize)]
struct DimOutput {
    graph: String,
    n: usize,
    dim: usize,
    witness: Vec<usize>,
    verified: bool,
}

#[derive(Serialize)]
struct PdOutput {
    graph: String,
    n: usize,
    pd: usize,
    witness: OrderedPartition,
    verified: bool,
}

#[derive(Serialize)]
struct VerifyOutput {
    graph: String,
    parts: usize,
    resolving: bool,
    twin: Option<[usize; 2]>,
}

#[derive(Serialize)]
struct GenOutput {
    spec: String,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl App {
    fn run(&self, command: Command) -> Result<u8> {
        match command {
            Command::Analyze(input) => self.analyze(&input.load()?),
            Command::Dim(input) => self.dim(&input.load()?),
            Command::Pd(input) => self.pd(&input.load()?),
            Command::Construct {
                name,
                input,
                delete,
                tree_partition,
            } => self.construct(name, &input.load()?, delete, tree_partition.as_deref()),
            Command::Verify { partition, input } => self.verify(&input.load(None)?, &partition),
            Command::Scan(args) => self.scan(&args),
            Command::Gen { spec, dot } => self.gen(&spec, dot),
        }
    }

    fn analyze(&self, loaded: &Loaded) -> Result<u8> {
        let g = &loaded.graph;
        let report = if g.is_tree() {
            tree_bounds_report(loaded.id.clone(), g, self.caps)?
        } else {
            bounds_report(loaded.id.clone(), &unicyclic(loaded)?, self.caps)?
        };
        match self.format {
            Format::Json => emit_json(&report)?,
            Format::Text => out!("{}", render::bounds(&report, &self.style)),
        }
        Ok(if report.is_clean() { 0 } else { EXIT_BOUND })
    }

    fn dim(&self, loaded: &Loaded) -> Result<u8> {
        let dm = all_pairs_distances(&loaded.graph)?;
        let (dim, witness) = metric_dimension_exact(&dm, self.caps.dim)?;
        let verified = check_resolving_set(&dm, &witness)?.is_resolving();
        let out = DimOutput {
            graph: loaded.id.clone(),
            n: dm.n(),
            dim,
            witness,
            verified,
        };
        match self.format {
            Format::Json => emit_json(&out)?,
            Format::Text => {
                outln!("graph     {} (n = {})", out.graph, out.n);
                outln!("dim       {}", out.dim);
                outln!("witness   {}", render::join(&out.witness));
                outln!("verified  {}", self.style.flag(out.verified));
            }
        }
        Ok(if verified { 0 } else { EXIT_NOT_RESOLVING })
    }

    fn pd(&self, loaded: &Loaded) -> Result<u8> {
        let dm = all_pairs_distances(&loaded.graph)?;
        let (pd, witness) = partition_dimension_exact(&dm, self.caps.pd)?;
        // re-read the witness as a partition file would be
        let reloaded = OrderedPartition::parse(&witness.to_text(), dm.n())?;
        let verified = check_resolving_partition(&dm, &reloaded)?.is_resolving();
        let out = PdOutput {
            graph: loaded.id.clone(),
            n: dm.n(),
            pd,
            witness,
            verified,
        };
        match self.format {
            Format::Json => emit_json(&out)?,
            Format::Text => {
                outln!("graph     {} (n = {})", out.graph, out.n);
                outln!("pd        {}", out.pd);
                for (i, part) in out.witness.parts().iter().enumerate() {
                    outln!("part {:<4} {}", i + 1, render::join(part));
                }
                outln!("verified  {}", self.style.flag(out.verified));
            }
        }
        Ok(if verified { 0 } else { EXIT_NOT_RESOLVING })
    }

    fn construct(
        &self,
        kind: ConstructionKind,
        loaded: &Loaded,
        delete: Option<(usize, usize)>,
        tree_partition: Option<&Path>,
    ) -> Result<u8> {
        let g = unicyclic(loaded)?;
        if kind != ConstructionKind::Lift && (delete.is_some() || tree_partition.is_some()) {
            bail!("--delete and --tree-partition only apply to the lift construction");
        }
        let cert = if kind == ConstructionKind::Lift && (delete.is_some() || tree_partition.is_some()) {
            let tree = match delete {
                Some((u, v)) => g.spanning_tree_without(u, v)?,
                None => udim_core::invariants::epsilon(&g).1,
            };
            let pi_t = match tree_partition {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    OrderedPartition::parse(&text, g.n()).with_context(|| format!("parsing {}", path.display()))?
                }
                None => partition_dimension_exact(&all_pairs_distances(&tree.graph)?, self.caps.pd)?.1,
            };
            lift_tree_partition(&g, &pi_t, &tree)?
        } else {
            construct(kind, &g, self.caps.pd)?
        };
        match self.format {
            Format::Json => emit_json(&cert)?,
            Format::Text => out!("{}", render::construction(&loaded.id, &cert, &self.style)),
        }
        Ok(if cert.verified { 0 } else { EXIT_BOUND })
    }

    fn verify(&self, loaded: &Loaded, partition: &Path) -> Result<u8> {
        let text = fs::read_to_string(partition).with_context(|| format!("reading {}", partition.display()))?;
        let dm = all_pairs_distances(&loaded.graph)?;
        let p = OrderedPartition::parse(&text, dm.n()).with_context(|| format!("parsing {}", partition.display()))?;
        let check = check_resolving_partition(&dm, &p)?;
        let out = VerifyOutput {
            graph: loaded.id.clone(),
            parts: p.len(),
            resolving: check.is_resolving(),
            twin: check.twin().map(|(u, v)| [u, v]),
        };
        match self.format {
            Format::Json => emit_json(&out)?,
            Format::Text => match out.twin {
                None => outln!("{}: partition with {} parts is {}", out.graph, out.parts, self.style.good("resolving")),
                Some([u, v]) => {
                    let r = udim_core::resolve::partition_representation(&dm, &p, u)?;
                    outln!(
                        "{}: partition with {} parts is {}: vertices {u} and {v} share representation ({})",
                        out.graph,
                        out.parts,
                        self.style.bad("not resolving"),
                        render::join(&r.0)
                    );
                }
            },
        }
        Ok(if out.resolving { 0 } else { EXIT_NOT_RESOLVING })
    }

    fn scan(&self, args: &ScanArgs) -> Result<u8> {
        let mut instances: Vec<Instance> = Vec::new();
        if let Some((a, b)) = args.exhaustive {
            let mode = if args.labeled {
                ExhaustiveMode::Labeled
            } else {
                ExhaustiveMode::Isomorphism
            };
            instances.extend(exhaustive_instances(a..=b, mode)?);
        }
        if let (Some(count), Some(n)) = (args.random, args.n) {
            instances.extend(random_instances(count, n..=n, args.seed)?);
        }
        if instances.is_empty() && args.exhaustive.is_none() && args.random.is_none() {
            bail!("nothing to scan: give --exhaustive A..B and/or --random N --n K");
        }
        let exec = if args.jobs == Some(1) {
            Execution::Sequential
        } else {
            Execution::Parallel
        };
        let result = match args.jobs {
            Some(jobs) if jobs > 1 => rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .context("starting worker pool")?
                .install(|| conjecture_scan(&instances, self.caps.pd, exec))?,
            _ => conjecture_scan(&instances, self.caps.pd, exec)?,
        };
        match self.format {
            Format::Json => emit_json(&result)?,
            Format::Text => out!("{}", render::scan(&result, &self.style)),
        }
        Ok(if result.proposition_violations.is_empty() { 0 } else { EXIT_BOUND })
    }

    fn gen(&self, spec: &str, dot: bool) -> Result<u8> {
        let parsed: GeneratorSpec = spec.parse()?;
        let g = parsed.build()?;
        if dot {
            out!("{}", g.to_dot());
            return Ok(0);
        }
        match self.format {
            Format::Json => emit_json(&GenOutput {
                spec: parsed.to_string(),
                n: g.n(),
                edges: g.edges().collect(),
            })?,
            Format::Text => out!("{}", g.to_edge_list()),
        }
        Ok(0)
    }
}

fn color_enabled() -> bool {
    match std::env::var("UDIM_COLOR") {
        Ok(v) if v == "0" => false,
        Ok(v) if v == "1" => true,
        _ => std::io::stdout().is_terminal(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; --help and --version are not
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let app = App {
        format: cli.format,
        caps: SolverCaps {
            dim: cli.dim_cap,
            pd: cli.pd_cap,
        },
        style: Style::new(color_enabled()),
    };
    match app.run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", render::chain(&e));
            ExitCode::from(EXIT_INPUT)
        }
    }
}
