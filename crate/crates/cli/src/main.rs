//! Command-line front end for the oracles, the reduction and the statement
//! harness.
//!
//! Exit codes: 0 success, 1 negative verdict under `--assert` or a
//! counterexample, 2 usage or input error, 3 resource limit.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use supereuler::blowup::{blow_up, BlowUpSpec};
use supereuler::harness::corpus::parse_family_name;
use supereuler::harness::{
    ingest_corpus, registry, scan_conjecture, validate_canonical, verify_statement, EnumerationFilter,
    VerificationReport,
};
use supereuler::invariants::{degree_params, edge_connectivity, girth, matching_number};
use supereuler::io::{emit_graph6, encode_any, parse_any, to_dot, to_json};
use supereuler::named::construct_named;
use supereuler::oracle::{has_dominating_eulerian, is_collapsible, is_reduced, is_supereulerian};
use supereuler::reduction::{
    f_value, list_induced_four_cycles, max_two_forest_packing, pi_reduce, reduce_with_log, tree_packing_deficiency,
};
use supereuler::{Corpus, Error, Limits, MultiGraph, OracleVerdict, Vertex};

#[derive(Parser, Debug)]
#[command(name = "supereuler", version, about = "Collapsible and supereulerian graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Largest cycle-space dimension the oracles enumerate.
    #[arg(long, global = true)]
    max_cycle_dim: Option<u32>,

    /// Largest number of even vertex sets a collapsibility test visits.
    #[arg(long, global = true)]
    max_even_subsets: Option<u64>,

    /// Largest order for the partition enumeration behind F(G).
    #[arg(long, global = true)]
    max_partition_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Graph6,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Inline graph6 string.
    #[arg(long, conflicts_with_all = ["name", "file"])]
    graph6: Option<String>,

    /// Named graph such as `petersen`, `p14`, `k(5)`, `k2t:3` or
    /// `blowup:petersen:K5`.
    #[arg(long, conflicts_with = "file")]
    name: Option<String>,

    /// File whose first graph line (graph6 or JSON) is used.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct CorpusArgs {
    /// All non-isomorphic graphs with at most N vertices (N <= 7).
    #[arg(long, value_name = "N", group = "source")]
    enumerate: Option<usize>,

    /// COUNT seeded random graphs.
    #[arg(long, value_name = "COUNT", group = "source")]
    random: Option<usize>,

    /// One graph per line, graph6 or JSON.
    #[arg(long, group = "source")]
    file: Option<PathBuf>,

    /// P, P14, P16, the blow-up families and the 3-edge-connected n <= 7 graphs.
    #[arg(long, group = "source")]
    bundled: bool,

    /// The uniform blow-ups of P, P14 and P16.
    #[arg(long, group = "source")]
    families: bool,

    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Keep only connected graphs (enumeration and random corpora).
    #[arg(long)]
    connected: bool,

    #[arg(long, default_value_t = 0)]
    min_degree: usize,

    /// Enumeration filter: at most this many vertices of degree 2.
    #[arg(long)]
    max_d2: Option<usize>,

    /// Enumeration filter: edge connectivity at least this value.
    #[arg(long)]
    min_edge_connectivity: Option<u64>,

    /// Order range of random graphs.
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 9)]
    n_max: usize,

    /// Edge-probability range of random graphs.
    #[arg(long, default_value_t = 0.25)]
    p_min: f64,
    #[arg(long, default_value_t = 0.6)]
    p_max: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Collapsible,
    Supereulerian,
    Reduced,
    Dominating,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph.
    Construct { name: String },
    /// Reduction (contract every maximal collapsible subgraph) with preimages.
    Reduce {
        #[command(flatten)]
        input: Input,
    },
    /// Run one oracle.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        input: Input,
        /// Exit with 1 when the answer is negative.
        #[arg(long)]
        assert: bool,
    },
    /// F(G) by partition enumeration and by tree packing, and 2n - m - 2.
    Fvalue {
        #[command(flatten)]
        input: Input,
    },
    /// Degree parameters, edge connectivity, girth and a matching certificate.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Values of t for sigma_t.
        #[arg(long = "t", value_delimiter = ',')]
        t: Vec<usize>,
    },
    /// Pi-reduction on an induced 4-cycle, or list the induced 4-cycles.
    Pi {
        #[command(flatten)]
        input: Input,
        /// Cycle `u,v,z,w` in order.
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<Vertex>>,
    },
    /// Check a registered statement over a corpus.
    Verify {
        id: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Scan a conjecture over a corpus.
    Scan {
        id: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Property suite for `p14` or `p16`.
    Validate { name: String },
    /// List the registered statements.
    Statements,
}

enum Failure {
    Usage(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Output plus whether the run counts as negative.
struct Outcome {
    text: String,
    negative: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, negative: false }
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(v) = cli.max_cycle_dim {
        l.max_cycle_dim = v;
    }
    if let Some(v) = cli.max_even_subsets {
        l.max_even_subsets = v;
    }
    if let Some(v) = cli.max_partition_n {
        l.max_partition_n = v;
    }
    l
}

fn build_named(name: &str) -> Result<MultiGraph, Failure> {
    if let Some((base, rep)) = parse_family_name(name) {
        let g = blow_up(&BlowUpSpec::uniform(construct_named(&base)?, rep))?;
        return Ok(g.with_name(name));
    }
    Ok(construct_named(name)?)
}

fn load(input: &Input) -> Result<MultiGraph, Failure> {
    if let Some(s) = &input.graph6 {
        return Ok(parse_any(s)?);
    }
    if let Some(name) = &input.name {
        return build_named(name);
    }
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| Failure::Usage(format!("{}: no graph found", path.display())))?;
        return Ok(parse_any(line)?);
    }
    Err(Failure::Usage("give a graph with --graph6, --name or --file".into()))
}

fn emit_graph(g: &MultiGraph, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => format!(
            "order {}\nsize {}\nedges {:?}\n",
            g.order(),
            g.size(),
            g.edge_multiset()
        ),
        Format::Json => to_json(g) + "\n",
        Format::Dot => to_dot(g),
        Format::Graph6 => emit_graph6(g)? + "\n",
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn reject(what: &str, format: Format) -> Failure {
    Failure::Usage(format!("`{what}` does not support --format {format:?}").to_lowercase())
}

fn reduce_cmd(g: &MultiGraph, l: &Limits, format: Format) -> Result<Outcome, Failure> {
    let out = reduce_with_log(g, l);
    if let Some(e) = out.error {
        let partial = serde_json::to_string(&out.result.log()).expect("plain data serializes");
        return Err(Failure::from(e).with_note(format!("partial log: {partial}")));
    }
    let r = out.result;
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "reduction: order {} size {}\n",
                r.graph.order(),
                r.graph.size()
            );
            for v in r.graph.vertices() {
                s += &format!("  {v} <- {:?}\n", r.preimage(v));
            }
            s += &format!("steps {}\ngraph {}\n", r.steps.len(), encode_any(&r.graph));
            s
        }
        Format::Json => pretty(&json!({
            "graph": encode_any(&r.graph),
            "order": r.graph.order(),
            "size": r.graph.size(),
            "preimages": r.map.classes(),
            "steps": r.steps,
        })),
        Format::Dot => r.to_dot(g),
        Format::Graph6 => emit_graph6(&r.graph)? + "\n",
    };
    Ok(Outcome::ok(text))
}

fn verdict_value(v: &OracleVerdict) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn check_cmd(g: &MultiGraph, p: Property, l: &Limits, format: Format) -> Result<Outcome, Failure> {
    let (label, v) = match p {
        Property::Collapsible => ("collapsible", is_collapsible(g, l)?),
        Property::Supereulerian => ("supereulerian", is_supereulerian(g, l)?),
        Property::Reduced => ("reduced", is_reduced(g, l)?),
        Property::Dominating => ("dominating eulerian subgraph", has_dominating_eulerian(g, l)?),
    };
    let text = match format {
        Format::Text => {
            let mut s = format!("{label}: {}\n", v.answer);
            if let Some(w) = &v.witness {
                s += &format!("witness: {}\n", serde_json::to_string(w).expect("plain data serializes"));
            }
            if let Some(r) = &v.failing_odd_set {
                s += &format!("failing odd set: {r:?}\n");
            }
            s
        }
        Format::Json => pretty(&json!({ "property": label, "verdict": verdict_value(&v) })),
        other => return Err(reject("check", other)),
    };
    Ok(Outcome {
        text,
        negative: !v.answer,
    })
}

fn fvalue_cmd(g: &MultiGraph, l: &Limits, format: Format) -> Result<Outcome, Failure> {
    let f = f_value(g)?;
    let big_f = tree_packing_deficiency(g, l)?;
    let (f0, f1) = max_two_forest_packing(g);
    let packing = 2 * (g.order() - 1) - f0.count() - f1.count();
    Ok(Outcome::ok(match format {
        Format::Text => format!("F {big_f}\nF (tree packing) {packing}\n2n - m - 2 {f}\n"),
        Format::Json => pretty(&json!({ "F": big_f, "F_tree_packing": packing, "f": f })),
        other => return Err(reject("fvalue", other)),
    }))
}

fn invariants_cmd(g: &MultiGraph, t: &[usize], l: &Limits, format: Format) -> Result<Outcome, Failure> {
    let p = degree_params(g, t)?;
    let kappa = edge_connectivity(g);
    let gi = girth(g);
    let m = matching_number(g, l)?;
    Ok(Outcome::ok(match format {
        Format::Text => {
            let mut s = format!(
                "delta {}\nsigma2 {}\n",
                p.delta, p.sigma2
            );
            for (t, v) in &p.sigma_t {
                s += &format!("sigma{t} {v}\n");
            }
            s += &format!(
                "delta_F {}\nsigma2_bar {}\ndelta_L {}\nedge connectivity {kappa}\ngirth {gi}\n",
                p.delta_f, p.sigma2_bar, p.delta_l
            );
            s += &format!(
                "matching number {}\ndeficiency {}\nseparator {:?}\nodd components {}\n",
                m.matching_number, m.deficiency, m.separator, m.odd_components
            );
            s
        }
        Format::Json => pretty(&json!({
            "degree_profile": p,
            "edge_connectivity": kappa,
            "girth": gi,
            "matching": m,
        })),
        other => return Err(reject("invariants", other)),
    }))
}

fn pi_cmd(g: &MultiGraph, cycle: Option<&[Vertex]>, format: Format) -> Result<Outcome, Failure> {
    let Some(c) = cycle else {
        let cycles = list_induced_four_cycles(g);
        return Ok(Outcome::ok(match format {
            Format::Text => cycles.iter().map(|c| format!("{c:?}\n")).collect(),
            Format::Json => pretty(&json!({ "induced_four_cycles": cycles })),
            other => return Err(reject("pi", other)),
        }));
    };
    let &[u, v, z, w] = c else {
        return Err(Failure::Usage(format!("--cycle needs four vertices, got {}", c.len())));
    };
    let step = pi_reduce(g, [u, v, z, w])?;
    Ok(Outcome::ok(match format {
        Format::Text => format!(
            "x {} y {} e_pi {:?}\norder {} size {}\ngraph {}\n",
            step.x,
            step.y,
            step.e_pi(),
            step.graph.order(),
            step.graph.size(),
            encode_any(&step.graph)
        ),
        Format::Json => pretty(&json!({
            "cycle": step.cycle,
            "x": step.x,
            "y": step.y,
            "e_pi": step.e_pi(),
            "graph": encode_any(&step.graph),
            "preimages": step.map.classes(),
        })),
        other => emit_graph(&step.graph, other)?,
    }))
}

fn corpus(args: &CorpusArgs) -> Result<Corpus, Failure> {
    if let Some(n) = args.enumerate {
        let filter = EnumerationFilter {
            connected: args.connected,
            min_degree: args.min_degree,
            max_d2_count: args.max_d2,
            edge_connectivity_min: args.min_edge_connectivity,
        };
        return Ok(Corpus::enumerated(n, &filter)?);
    }
    if let Some(count) = args.random {
        if args.n_min == 0 || args.n_min > args.n_max {
            return Err(Failure::Usage("need 1 <= --n-min <= --n-max".into()));
        }
        if !(0.0..=1.0).contains(&args.p_min) || !(args.p_min..=1.0).contains(&args.p_max) {
            return Err(Failure::Usage("need 0 <= --p-min <= --p-max <= 1".into()));
        }
        return Ok(Corpus::random(
            count,
            (args.n_min, args.n_max),
            (args.p_min, args.p_max),
            args.connected,
            args.seed,
        )?);
    }
    if let Some(path) = &args.file {
        let entries = ingest_corpus(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        return Ok(Corpus::from_entries(path.display().to_string(), entries));
    }
    if args.bundled {
        return Ok(Corpus::bundled()?);
    }
    if args.families {
        return Ok(Corpus::blow_up_families()?);
    }
    Err(Failure::Usage(
        "give a corpus with --enumerate, --random, --file, --bundled or --families".into(),
    ))
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!("{} ({:?}): {}\n", r.statement, r.kind, r.verdict);
    s += &format!("claim: {}\ncorpus: {}\n", r.claim, r.corpus);
    if let Some(seed) = r.seed {
        s += &format!("seed: {seed}\n");
    }
    s += &format!(
        "scanned {} premise matched {} conclusion held {}\n",
        r.scanned, r.premise_matched, r.conclusion_held
    );
    for c in &r.counterexamples {
        s += &format!("counterexample {} [{}] {}: {}\n", c.provenance, c.format, c.graph, c.failed_check);
    }
    for b in &r.budget_exceeded {
        s += &format!("over budget {}: {}\n", b.provenance, b.reason);
    }
    for d in &r.defects {
        s += &format!("defect line {}: {}\n", d.line, d.reason);
    }
    s += &format!("wall {} ms\n", r.wall_ms);
    s
}

fn report_cmd(r: VerificationReport, format: Format) -> Result<Outcome, Failure> {
    let text = match format {
        Format::Text => report_text(&r),
        Format::Json => pretty(&serde_json::to_value(&r).expect("plain data serializes")),
        other => return Err(reject("verify", other)),
    };
    Ok(Outcome {
        text,
        negative: !r.counterexamples.is_empty(),
    })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let l = limits(cli);
    let format = if cli.json { Format::Json } else { cli.format };
    match &cli.command {
        Command::Construct { name } => Ok(Outcome::ok(emit_graph(&build_named(name)?, format)?)),
        Command::Reduce { input } => reduce_cmd(&load(input)?, &l, format),
        Command::Check { property, input, assert } => {
            let mut out = check_cmd(&load(input)?, *property, &l, format)?;
            out.negative &= *assert;
            Ok(out)
        }
        Command::Fvalue { input } => fvalue_cmd(&load(input)?, &l, format),
        Command::Invariants { input, t } => invariants_cmd(&load(input)?, t, &l, format),
        Command::Pi { input, cycle } => pi_cmd(&load(input)?, cycle.as_deref(), format),
        Command::Verify { id, corpus: args } => report_cmd(verify_statement(id, &corpus(args)?, &l)?, format),
        Command::Scan { id, corpus: args } => report_cmd(scan_conjecture(id, &corpus(args)?, &l)?, format),
        Command::Validate { name } => {
            let v = validate_canonical(name, &l)?;
            let text = match format {
                Format::Text => {
                    let mut s = String::new();
                    for c in &v.checks {
                        let mark = if c.passed { "ok" } else { "FAILED" };
                        s += &format!("{mark} {}: expected {}, observed {}\n", c.property, c.expected, c.observed);
                    }
                    if let Some(set) = &v.petersen_contraction {
                        s += &format!("contract {set:?} to reach the Petersen graph\n");
                    }
                    s += &format!("{}: {}\n", v.name, if v.passed { "validated" } else { "not validated" });
                    s
                }
                Format::Json => pretty(&serde_json::to_value(&v).expect("plain data serializes")),
                other => return Err(reject("validate", other)),
            };
            Ok(Outcome {
                text,
                negative: !v.passed,
            })
        }
        Command::Statements => Ok(Outcome::ok(match format {
            Format::Text => registry()
                .iter()
                .map(|s| format!("{:<18} {:?}  {}\n", s.id, s.kind, s.claim))
                .collect(),
            Format::Json => pretty(&json!(registry()
                .iter()
                .map(|s| json!({ "id": s.id, "kind": s.kind, "claim": s.claim }))
                .collect::<Vec<_>>())),
            other => return Err(reject("statements", other)),
        })),
    }
}

impl Failure {
    fn with_note(self, note: String) -> Self {
        match self {
            Failure::Usage(m) => Failure::Usage(format!("{m}\n{note}")),
            Failure::Limit(m) => Failure::Limit(format!("{m}\n{note}")),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(u8::from(out.negative))
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
