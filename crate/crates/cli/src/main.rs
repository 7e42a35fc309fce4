mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fairset_core::fairness::{
    connectivity_audit, enumerate_fair_sets, fair_center, partiality_profile, EnumerationOptions,
    DEFAULT_CEILING,
};
use fairset_core::graph::{
    format_edge_list, format_graph6, generate, is_block_graph, is_chordal, parse_edge_list,
    parse_graph6, FamilySpec,
};
use fairset_core::metric::distance_matrix;
use fairset_core::oracles::{
    compare_wheel, random_product_cases, verify_family, verify_product_identity, Interpretation,
    OracleSpec,
};
use fairset_core::search::{
    connected_graphs, free_trees, graph6_lines, merge_reports, scan_stream, tree_lemma_scan,
    ScanReport, ScanTask, Shard,
};
use fairset_core::{Graph, VertexSet};
use serde::Serialize;
use serde_json::Value;

use output::{envelope, set_text};

/// `println!` that ignores a closed stdout (e.g. piping into `head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "fairset",
    version,
    about = "Fair centers and fair sets of small connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fair center of a vertex set.
    Fc(SetCmd),
    /// Partiality of every vertex with respect to a vertex set.
    Partiality(SetCmd),
    /// Every fair set with its first witness.
    Enumerate(GraphCmd),
    /// Induced connectivity of every fair set, with block/chordal class.
    Audit(GraphCmd),
    /// Closed-form characterization against brute force.
    VerifyFamily(VerifyCmd),
    /// Fair centers of product sets in Cartesian products.
    ProductCheck(ProductCmd),
    /// Classify a graph6 stream of connected graphs.
    Scan(ScanCmd),
    /// Fair-set connectivity over all trees up to an order.
    Trees(TreesCmd),
    /// Print a family graph as graph6 or an edge list.
    Gen(GenCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    G6,
    Edgelist,
}

#[derive(Args, Serialize)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family spec such as cycle:5, wheel:6 or random_tree:9,3.
    #[arg(long)]
    family: Option<String>,
    /// Graph file, or - for standard input.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args, Serialize)]
struct GraphArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
    /// Seed for random families.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Serialize)]
struct EnumArgs {
    /// Also accept singleton witnesses.
    #[arg(long)]
    include_singleton_s: bool,
    #[arg(long, env = "FAIRSET_CEILING", default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    /// Enumerate above the ceiling.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    #[serde(skip)]
    workers: Option<usize>,
}

impl EnumArgs {
    fn options(&self) -> EnumerationOptions {
        EnumerationOptions {
            include_singleton_s: self.include_singleton_s,
            ceiling: self.ceiling,
            force: self.force,
            ..EnumerationOptions::default()
        }
        .with_workers(self.workers)
    }
}

#[derive(Args, Serialize)]
struct SetCmd {
    #[command(flatten)]
    #[serde(flatten)]
    graph: GraphArgs,
    /// Comma-separated 0-based vertices.
    #[arg(long)]
    set: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Serialize)]
struct GraphCmd {
    #[command(flatten)]
    #[serde(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    #[serde(flatten)]
    enumeration: EnumArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum InterpretationArg {
    Edges,
    Vertices,
    /// Run both readings and report hub-form discrepancies.
    Both,
}

#[derive(Args, Serialize)]
struct VerifyCmd {
    /// Oracle family: complete:n, complete_minus_edge:n, complete_bipartite:m,n,
    /// star:n, wheel5, wheel:n, cycle:n, odd_cycle:m, hypercube:d.
    #[arg(long)]
    family: String,
    /// Rim-length reading for wheels with n >= 6.
    #[arg(long, value_enum)]
    interpretation: Option<InterpretationArg>,
    #[command(flatten)]
    #[serde(flatten)]
    enumeration: EnumArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Serialize)]
struct ProductCmd {
    /// The two factors, e.g. --family path:3 --family cycle:4.
    #[arg(long, num_args = 1, conflicts_with = "random")]
    family: Vec<String>,
    /// The two factor sets, in the same order as the factors.
    #[arg(long, num_args = 1)]
    set: Vec<String>,
    /// Check this many seeded random factor pairs instead.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest product order for random cases.
    #[arg(long, default_value_t = 20)]
    max_order: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Serialize)]
struct ScanCmd {
    /// graph6 stream, or - for standard input.
    #[arg(long, conflicts_with_all = ["connected", "merge"])]
    input: Option<String>,
    /// Scan every connected graph with up to this many vertices.
    #[arg(long, conflicts_with = "merge")]
    connected: Option<usize>,
    /// Merge shard reports written by `scan --json`.
    #[arg(long, num_args = 1..)]
    merge: Vec<PathBuf>,
    #[arg(long)]
    include_singleton_s: bool,
    /// Skip non-chordal graphs.
    #[arg(long)]
    chordal_only: bool,
    #[arg(long, env = "FAIRSET_CEILING", default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    /// Process lines with index congruent to k mod K.
    #[arg(long, default_value = "0/1")]
    shard: String,
    /// JSON-lines checkpoint; an interrupted scan resumes from it.
    #[arg(long)]
    #[serde(skip)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip)]
    workers: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Serialize)]
struct TreesCmd {
    #[arg(long, default_value_t = 9)]
    max_n: usize,
    /// Print the trees as graph6 instead of scanning them.
    #[arg(long)]
    emit: bool,
    #[arg(long)]
    include_singleton_s: bool,
    #[arg(long)]
    #[serde(skip)]
    workers: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Serialize)]
struct GenCmd {
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
    #[arg(long)]
    seed: Option<u64>,
}

/// Input or configuration problem (exit code 2).
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn config(command: &str, args: &impl Serialize) -> Value {
    let mut v = serde_json::to_value(args).expect("args serialize");
    if let Value::Object(map) = &mut v {
        map.insert("command".into(), command.into());
    }
    v
}

fn parse_family(s: &str, seed: Option<u64>) -> Result<FamilySpec, InputError> {
    let spec: FamilySpec = s.parse()?;
    Ok(match (spec, seed) {
        (FamilySpec::RandomTree { n, .. }, Some(seed)) => FamilySpec::RandomTree { n, seed },
        (FamilySpec::RandomBlockGraph { n, .. }, Some(seed)) => {
            FamilySpec::RandomBlockGraph { n, seed }
        }
        (spec, _) => spec,
    })
}

fn read_source(path: &str) -> Result<String, InputError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))
    }
}

/// The graph plus whether it is a named family (for 1-based echoes).
fn load_graph(args: &GraphArgs) -> Result<(Graph, bool), InputError> {
    if let Some(family) = &args.source.family {
        return Ok((generate(&parse_family(family, args.seed)?)?, true));
    }
    let path = args
        .source
        .input
        .as_deref()
        .expect("clap enforces one source");
    let text = read_source(path)?;
    let g = match args.format {
        Format::Edgelist => parse_edge_list(&text)?,
        Format::G6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines
                .next()
                .ok_or_else(|| InputError(format!("{path}: no graph")))?;
            if lines.next().is_some() {
                return Err(InputError(format!(
                    "{path}: expected a single graph (use scan for streams)"
                )));
            }
            parse_graph6(first)?
        }
    };
    Ok((g, false))
}

fn parse_set(text: &str, g: &Graph) -> Result<VertexSet, InputError> {
    let mut s = VertexSet::empty();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| InputError(format!("bad vertex {part:?} in --set")))?;
        g.check_vertex(v)?;
        s.insert(v);
    }
    if s.is_empty() {
        return Err(InputError("--set is empty".into()));
    }
    Ok(s)
}

fn cmd_fc(cmd: &SetCmd) -> Outcome {
    let (g, named) = load_graph(&cmd.graph)?;
    let s = parse_set(&cmd.set, &g)?;
    let r = fair_center(&distance_matrix(&g)?, s)?;
    if cmd.json {
        out!("{}", envelope(&config("fc", cmd), &r, named));
    } else {
        out!("S {}", set_text(r.s, named));
        out!("center {}", set_text(r.center, named));
        out!("min partiality {}", r.min_partiality);
    }
    Ok(true)
}

fn cmd_partiality(cmd: &SetCmd) -> Outcome {
    let (g, named) = load_graph(&cmd.graph)?;
    let s = parse_set(&cmd.set, &g)?;
    let p = partiality_profile(&distance_matrix(&g)?, s)?;
    if cmd.json {
        out!("{}", envelope(&config("partiality", cmd), &p, named));
    } else {
        out!("S {}", set_text(p.s, named));
        out!("vertex  f");
        for (x, f) in p.f.iter().enumerate() {
            out!("{x:>6}  {f}");
        }
        out!("min {}", p.min_f);
    }
    Ok(true)
}

fn cmd_enumerate(cmd: &GraphCmd) -> Outcome {
    let (g, named) = load_graph(&cmd.graph)?;
    let inv = enumerate_fair_sets(&g, &cmd.enumeration.options())?;
    if cmd.json {
        out!("{}", envelope(&config("enumerate", cmd), &inv, named));
    } else {
        out!(
            "graph {}  n = {}  fair sets: {}",
            inv.graph_id,
            inv.n,
            inv.len()
        );
        for (a, w) in &inv.entries {
            out!(
                "  {}  witness {}  min partiality {}",
                set_text(*a, named),
                set_text(w.s, named),
                w.min_partiality
            );
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct AuditOut {
    block_graph: bool,
    chordal: bool,
    /// False when a block graph has a disconnected fair set, or a chordal
    /// non-block graph has none.
    consistent: bool,
    #[serde(flatten)]
    audit: fairset_core::fairness::AuditReport,
}

fn cmd_audit(cmd: &GraphCmd) -> Outcome {
    let (g, named) = load_graph(&cmd.graph)?;
    let inv = enumerate_fair_sets(&g, &cmd.enumeration.options())?;
    let audit = connectivity_audit(&g, &inv)?;
    let block = is_block_graph(&g)?;
    let chordal = is_chordal(&g);
    let consistent = if chordal {
        block == audit.all_connected
    } else {
        true
    };
    let out = AuditOut {
        block_graph: block,
        chordal,
        consistent,
        audit,
    };
    if cmd.json {
        out!("{}", envelope(&config("audit", cmd), &out, named));
    } else {
        out!(
            "graph {}  block {}  chordal {}  fair sets {}  all connected {}",
            out.audit.graph_id,
            block,
            chordal,
            out.audit.fair_set_count,
            out.audit.all_connected
        );
        for d in &out.audit.disconnected {
            out!(
                "  disconnected {}  witness {}",
                set_text(d.set, named),
                set_text(d.witness, named)
            );
        }
        if !consistent {
            out!("inconsistent with the block/chordal characterization");
        }
    }
    Ok(consistent)
}

fn cmd_verify(cmd: &VerifyCmd) -> Outcome {
    let spec: OracleSpec = cmd.family.parse()?;
    let opts = cmd.enumeration.options();
    let cfg = config("verify-family", cmd);
    let named = true;
    let interpretation = match cmd.interpretation {
        Some(InterpretationArg::Both) => {
            let OracleSpec::Wheel { n, .. } = spec else {
                return Err(InputError(
                    "--interpretation both applies to wheels with n >= 6".into(),
                ));
            };
            let cmp = compare_wheel(n, &opts)?;
            if cmd.json {
                out!("{}", envelope(&cfg, &cmp, named));
            } else {
                for r in &cmp.reports {
                    out!(
                        "wheel:{n} {}: verdict {}  hub-form mismatches {}  agrees elsewhere {}",
                        r.interpretation,
                        if r.report.is_exact() {
                            "exact"
                        } else {
                            "mismatch"
                        },
                        r.hub_form_mismatches.len(),
                        r.agrees_outside_hub_form
                    );
                    for a in &r.hub_form_mismatches {
                        out!("  {}", set_text(*a, named));
                    }
                }
            }
            return Ok(cmp.some_interpretation_agrees_outside_hub_form());
        }
        Some(InterpretationArg::Edges) => Interpretation::Edges,
        Some(InterpretationArg::Vertices) => Interpretation::Vertices,
        None => Interpretation::Edges,
    };
    let spec = match spec {
        OracleSpec::Wheel { n, .. } => OracleSpec::Wheel { n, interpretation },
        other => other,
    };
    let r = verify_family(&spec, &opts)?;
    if cmd.json {
        out!("{}", envelope(&cfg, &r, named));
    } else {
        out!(
            "{} on {}: verdict {}  fair sets {}  candidates {}",
            r.oracle_id,
            r.family,
            if r.is_exact() { "exact" } else { "mismatch" },
            r.fair_set_count,
            r.candidates_checked
        );
        for a in &r.false_positives {
            out!("  false positive {}", set_text(*a, named));
        }
        for m in &r.false_negatives {
            out!(
                "  false negative {}  witness {}",
                set_text(m.set, named),
                set_text(m.witness, named)
            );
        }
    }
    Ok(r.is_exact())
}

fn cmd_product(cmd: &ProductCmd) -> Outcome {
    let cases = match cmd.random {
        Some(count) => random_product_cases(cmd.seed, count, cmd.max_order)
            .into_iter()
            .map(|c| (c.g1, c.g2, c.s1, c.s2))
            .collect(),
        None => {
            let [f1, f2] = &cmd.family[..] else {
                return Err(InputError(
                    "give exactly two --family factors, or --random".into(),
                ));
            };
            let [t1, t2] = &cmd.set[..] else {
                return Err(InputError(
                    "give exactly two --set values, one per factor".into(),
                ));
            };
            let g1 = generate(&parse_family(f1, None)?)?;
            let g2 = generate(&parse_family(f2, None)?)?;
            let (s1, s2) = (parse_set(t1, &g1)?, parse_set(t2, &g2)?);
            vec![(g1, g2, s1, s2)]
        }
    };
    let checks = cases
        .iter()
        .map(|(g1, g2, s1, s2)| verify_product_identity(g1, g2, *s1, *s2))
        .collect::<Result<Vec<_>, _>>()?;
    let holds = checks.iter().all(|c| c.holds());
    if cmd.json {
        out!(
            "{}",
            envelope(&config("product-check", cmd), &checks, false)
        );
    } else {
        for c in &checks {
            out!(
                "{} x {}  S1 {}  S2 {}  center {}  identity {}  additivity {}  connectivity {}",
                c.g1,
                c.g2,
                set_text(c.s1, false),
                set_text(c.s2, false),
                set_text(c.product_center, false),
                c.identity_holds,
                c.additivity_holds,
                c.connectivity_corollary_holds
            );
        }
        out!(
            "{} of {} cases hold",
            checks.iter().filter(|c| c.holds()).count(),
            checks.len()
        );
    }
    Ok(holds)
}

fn print_scan(report: &ScanReport) {
    out!(" n  block  chordal  connected  count");
    for r in &report.cells {
        out!(
            "{:>2}  {:<5}  {:<7}  {:<9}  {}",
            r.n,
            r.block,
            r.chordal,
            r.all_fair_sets_connected,
            r.count
        );
    }
    let s = report.summary;
    out!(
        "block: {} connected, {} disconnected; non-block: {} connected, {} disconnected",
        s.block_connected,
        s.block_disconnected,
        s.nonblock_connected,
        s.nonblock_disconnected
    );
    out!(
        "survivors: (a) non-block all connected {}, (b) block with disconnected {}, (c) chordal non-block all connected {}",
        report.survivors_nonblock_connected.len(),
        report.survivors_block_disconnected.len(),
        report.survivors_chordal_nonblock_connected.len()
    );
    for s in report
        .survivors_nonblock_connected
        .iter()
        .chain(&report.survivors_block_disconnected)
    {
        out!("  line {}  {}", s.line, s.graph6);
    }
    if !report.cardinality_violations.is_empty() {
        out!(
            "fair sets of size n-1: {}",
            report.cardinality_violations.len()
        );
    }
    for s in &report.skipped {
        out!("skipped line {}: {}", s.line, s.reason);
    }
    if !report.complete {
        out!("incomplete: resume with the same --checkpoint");
    }
}

fn scan_ok(report: &ScanReport) -> bool {
    report.survivors_block_disconnected.is_empty()
        && report.survivors_chordal_nonblock_connected.is_empty()
        && report.cardinality_violations.is_empty()
}

fn read_report(path: &PathBuf) -> Result<ScanReport, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let v = match v {
        Value::Object(mut map) if map.contains_key("result") => {
            map.remove("result").expect("present")
        }
        other => other,
    };
    serde_json::from_value(v)
        .map_err(|e| InputError(format!("{}: not a scan report: {e}", path.display())))
}

fn cmd_scan(cmd: &ScanCmd) -> Outcome {
    let report = if !cmd.merge.is_empty() {
        let parts = cmd
            .merge
            .iter()
            .map(read_report)
            .collect::<Result<Vec<_>, _>>()?;
        merge_reports(&parts)?
    } else {
        let text = match (&cmd.input, cmd.connected) {
            (Some(path), None) => read_source(path)?,
            (None, Some(max_n)) => {
                let mut graphs = Vec::new();
                for n in 1..=max_n {
                    graphs.extend(connected_graphs(n)?);
                }
                graph6_lines(&graphs)
            }
            _ => {
                return Err(InputError(
                    "scan needs --input, --connected or --merge".into(),
                ))
            }
        };
        let task = ScanTask {
            include_singleton_s: cmd.include_singleton_s,
            chordal_only: cmd.chordal_only,
            ceiling: cmd.ceiling,
            shard: cmd.shard.parse::<Shard>()?,
            workers: cmd.workers,
            checkpoint: cmd.checkpoint.clone(),
            ..ScanTask::default()
        };
        scan_stream(&task, &text)?
    };
    if cmd.json {
        out!("{}", envelope(&config("scan", cmd), &report, false));
    } else {
        print_scan(&report);
    }
    Ok(scan_ok(&report))
}

fn cmd_trees(cmd: &TreesCmd) -> Outcome {
    if cmd.emit {
        for n in 1..=cmd.max_n {
            out!("{}", graph6_lines(&free_trees(n)?).trim_end());
        }
        return Ok(true);
    }
    let task = ScanTask {
        include_singleton_s: cmd.include_singleton_s,
        workers: cmd.workers,
        ..ScanTask::default()
    };
    let report = tree_lemma_scan(cmd.max_n, &task)?;
    if cmd.json {
        out!("{}", envelope(&config("trees", cmd), &report, false));
    } else {
        out!(
            "{} trees with up to {} vertices; {} with a disconnected fair set",
            report.graphs_scanned,
            cmd.max_n,
            report.survivors_block_disconnected.len()
        );
    }
    Ok(report.survivors_block_disconnected.is_empty())
}

fn cmd_gen(cmd: &GenCmd) -> Outcome {
    let g = generate(&parse_family(&cmd.family, cmd.seed)?)?;
    match cmd.format {
        Format::G6 => out!("{}", format_graph6(&g)),
        Format::Edgelist => out!("{}", format_edge_list(&g).trim_end()),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Fc(c) => cmd_fc(c),
        Command::Partiality(c) => cmd_partiality(c),
        Command::Enumerate(c) => cmd_enumerate(c),
        Command::Audit(c) => cmd_audit(c),
        Command::VerifyFamily(c) => cmd_verify(c),
        Command::ProductCheck(c) => cmd_product(c),
        Command::Scan(c) => cmd_scan(c),
        Command::Trees(c) => cmd_trees(c),
        Command::Gen(c) => cmd_gen(c),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
