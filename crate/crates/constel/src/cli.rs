//! Argument parsing and dispatch. [`dispatch`] never prints; the binary does.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use constel_core::constellation::{
    is_aligned, is_interrupted, is_mixed, is_zigzagged, sits_in, OrderVerdict, Selection,
};
use constel_core::contraction::{apex_contraction_structure, aux_graph, order_bandwidth_bound, ContractionError};
use constel_core::generators::{
    aligned_constellation, binary_tree, complete, complete_bipartite, occultation, occultation_ample, wall,
    zigzag_graph,
};
use constel_core::hypergraph::{dsw_bound_check, ramsey_search, HypergraphError};
use constel_core::models::{find_bipartite_model, Sides};
use constel_core::sequences::{complement_symmetry_check, max_alignment, zigzag_sequence};
use constel_core::width::{certify, pathwidth_exact, treewidth_exact, PATHWIDTH_LIMIT, TREEWIDTH_LIMIT};
use constel_core::{ApexOrder, Budget, Constellation, Graph, IndexSequence, OrderMode, SearchOutcome, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::io::{self, IoError};
use crate::report::{Outcome, RunReport};
use crate::suites;

pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "constel",
    version,
    about = "Constellations, induced models and the checks around them"
)]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Record wall-clock time in the report (makes output vary between runs).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Exit 0 instead of 2 when a search runs out of budget.
    #[arg(long, global = true)]
    pub allow_inconclusive: bool,
    /// Search node limit for budgeted searches.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    pub budget: u64,
    #[command(subcommand)]
    pub group: Group,
}

#[derive(Debug, Subcommand)]
pub enum Group {
    /// Generate graphs and constellations.
    #[command(subcommand)]
    Gen(GenVerb),
    /// Check properties of a constellation file.
    #[command(subcommand)]
    Check(CheckVerb),
    /// Index sequences.
    #[command(subcommand)]
    Seq(SeqVerb),
    /// Hypergraph parameters.
    #[command(subcommand)]
    Hyper(HyperVerb),
    /// Induced complete-bipartite minor models.
    #[command(subcommand)]
    Model(ModelVerb),
    /// Exact treewidth and pathwidth.
    #[command(subcommand)]
    Width(WidthVerb),
    /// Auxiliary graphs and apex contractions.
    #[command(subcommand)]
    Analyze(AnalyzeVerb),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyVerb),
}

#[derive(Debug, Subcommand)]
pub enum GenVerb {
    /// Complete bipartite graph K_{s,t}.
    Bipartite {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Complete graph K_n.
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Complete binary tree of depth r.
    Tree {
        #[arg(long)]
        r: usize,
    },
    /// Wall of height r.
    Wall {
        #[arg(long)]
        r: usize,
    },
    /// The zigzag constellation with l copies of its path.
    ZigzagGraph {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=20))]
        n: u64,
        #[arg(long, default_value_t = 1)]
        l: usize,
    },
    /// A one-path interrupted constellation with spacing c.
    Occultation {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=16))]
        s: u64,
        #[arg(long, default_value_t = 2)]
        c: usize,
        /// Attach each position to one apex only, which makes the result c-ample.
        #[arg(long)]
        ample: bool,
    },
    /// An aligned constellation: each path visits the apexes in order, `reps` vertices each.
    Aligned {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

#[derive(Debug, Args)]
pub struct OrderArg {
    /// `auto` (the file's order, else natural), `natural`, `search`, or ids such as `3,1,2`.
    #[arg(long, default_value = "auto")]
    pub order: String,
}

#[derive(Debug, Subcommand)]
pub enum CheckVerb {
    /// Validate the constellation.
    Constellation { file: PathBuf },
    /// No route of length at most d + 1.
    Ample {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Every route is interrupted under the apex order.
    Interrupted {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Every route is q-zigzagged under the apex order.
    Zigzagged {
        file: PathBuf,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Every route is (q-, q, q+)-mixed under the apex order.
    Mixed {
        file: PathBuf,
        #[arg(long)]
        q_minus: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        q_plus: usize,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Every path meets the apexes in order.
    Aligned {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Whether `sub` (apexes and paths in the parent's ids) sits in `file`.
    SitsIn { sub: PathBuf, file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum SeqVerb {
    /// Print the zigzag sequence Z_n.
    Zigzag {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=24))]
        n: u64,
    },
    /// Whether consecutive entries differ by exactly one. SEQ is a JSON array or a file holding one.
    Smooth { seq: String },
    /// Search for a k-alignment.
    MaxAlignment {
        /// JSON array or file; defaults to Z_n with --zigzag.
        seq: Option<String>,
        #[arg(long, conflicts_with = "seq")]
        zigzag: Option<usize>,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Complement symmetry of Z_n.
    Symmetry {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum HyperVerb {
    /// nu, tau and lambda with witnesses.
    Params { file: PathBuf },
    /// tau against the Ding-Seymour-Winkler bound (a = nu, a' = lambda unless given).
    Dsw {
        file: PathBuf,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        a_prime: Option<usize>,
    },
    /// Monochromatic n-subset of 0..u under a seeded random coloring of the m-subsets.
    Ramsey {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    A,
    B,
    Both,
}

impl SideArg {
    fn sides(self) -> Sides {
        match self {
            SideArg::A => Sides::A,
            SideArg::B => Sides::B,
            SideArg::Both => Sides::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ModelVerb {
    /// Verify an induced model file.
    Verify { file: PathBuf },
    /// Whether every branch set of the chosen side induces a path.
    Linear {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Print the contraction of the chosen side as a constellation.
    Contract {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::A)]
        side: SideArg,
    },
    /// Whether the contraction of the chosen side is d-ample.
    Ample {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Search a graph for an induced K_{s,t} minor model.
    Find {
        file: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WidthVerb {
    /// Exact treewidth with an elimination-order certificate.
    Tw {
        file: PathBuf,
        #[arg(long, default_value_t = TREEWIDTH_LIMIT)]
        limit: usize,
    },
    /// Exact pathwidth with a layout certificate.
    Pw {
        file: PathBuf,
        #[arg(long, default_value_t = PATHWIDTH_LIMIT)]
        limit: usize,
    },
    /// Re-check a certificate against a graph.
    Certify { file: PathBuf, certificate: PathBuf },
}

#[derive(Debug, Args)]
pub struct SelectionArg {
    /// Vertex ids of H, comma separated; defaults to the whole constellation.
    #[arg(long)]
    pub h: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeVerb {
    /// The auxiliary graph on the apexes of H.
    Aux {
        file: PathBuf,
        #[command(flatten)]
        h: SelectionArg,
    },
    /// Contract the apexes of H and match the result to the auxiliary graph.
    Contract {
        file: PathBuf,
        #[command(flatten)]
        h: SelectionArg,
    },
    /// Largest rank gap of an auxiliary edge; passes when at most q.
    Bandwidth {
        file: PathBuf,
        #[command(flatten)]
        h: SelectionArg,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyVerb {
    /// No k-alignment in Z_n (exhaustive), plus a 3-alignment in Z_4.
    LemmaAlign {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..=16))]
        max_n: u64,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// zigzag_graph(n,1) validates, is 1-zigzagged and reads back Z_n.
    ZigzagFamily {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..=16))]
        max_n: u64,
    },
    /// Occultations are interrupted; ample interrupted instances have no two anticomplete routes.
    Deathstar {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=10))]
        max_s: u64,
        #[arg(long, default_value_t = 2)]
        c: usize,
    },
    /// Split an ample q-zigzagged constellation into two anticomplete parts of treewidth >= c.
    Split {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=2))]
        c: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=2))]
        q: u64,
    },
    /// Induced subdivided K_{1,2q+1} with heavy branch vertices: absent when zigzagged, present when interrupted.
    StarObstruction {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1))]
        q: u64,
    },
    /// nu, tau, lambda against subset oracles and the DSW bound on random hypergraphs.
    DswRandom {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact widths of named graphs and tw >= min(s,l) on small constellations.
    Widths {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=4))]
        max_s: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=4))]
        max_l: u64,
    },
}

/// A finished run: the report plus what plain-text mode prints.
#[derive(Debug, Clone)]
pub struct Run {
    pub report: RunReport,
    /// Printed instead of the verdict line in plain mode, if present.
    pub payload: Option<String>,
    pub json: bool,
    pub allow_inconclusive: bool,
}

impl Run {
    pub fn exit_code(&self) -> i32 {
        self.report.exit_code(self.allow_inconclusive)
    }
}

#[derive(Debug)]
pub enum Dispatch {
    Run(Box<Run>),
    /// `--help` or `--version`; print and exit 0.
    Info(String),
    /// Bad arguments or unreadable input; print to stderr and exit 64.
    Usage(String),
}

/// What a handler produces: a verdict plus, optionally, the primary output.
struct Handled {
    outcome: Outcome,
    payload: Option<String>,
}

impl From<Outcome> for Handled {
    fn from(outcome: Outcome) -> Handled {
        Handled { outcome, payload: None }
    }
}

fn with_payload(outcome: Outcome, payload: String) -> Result<Handled, String> {
    Ok(Handled {
        outcome,
        payload: Some(payload),
    })
}

type HResult = Result<Handled, String>;

fn io_err(e: IoError) -> String {
    e.to_string()
}

pub fn dispatch<I, T>(argv: I) -> Dispatch
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Dispatch::Info(e.to_string()),
                _ => Dispatch::Usage(e.to_string()),
            };
        }
    };
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let handled = match run_group(&cli) {
        Ok(h) => h,
        Err(msg) => return Dispatch::Usage(format!("error: {msg}\n")),
    };
    let elapsed = cli.timing.then(|| start.elapsed().as_millis() as u64);
    Dispatch::Run(Box::new(Run {
        report: handled.outcome.into_report(command, elapsed),
        payload: handled.payload,
        json: cli.json,
        allow_inconclusive: cli.allow_inconclusive,
    }))
}

fn run_group(cli: &Cli) -> HResult {
    match &cli.group {
        Group::Gen(v) => gen(v),
        Group::Check(v) => check(v),
        Group::Seq(v) => seq(v, cli.budget),
        Group::Hyper(v) => hyper(v, cli.budget),
        Group::Model(v) => model(v, cli.budget),
        Group::Width(v) => width(v),
        Group::Analyze(v) => analyze(v),
        Group::Verify(v) => Ok(verify(v, cli.budget).into()),
    }
}

fn emit_graph(g: Graph, what: String) -> HResult {
    let text = io::write_graph(&g);
    with_payload(Outcome::pass(what).witness("graph", io::graph_to_json(&g)), text)
}

fn emit_constellation(c: &Constellation, order: Option<&ApexOrder>, what: String) -> HResult {
    let text = io::write_constellation(c, order);
    with_payload(
        Outcome::pass(what).witness("constellation", io::constellation_to_json(c, order)),
        text,
    )
}

fn gen(v: &GenVerb) -> HResult {
    match *v {
        GenVerb::Bipartite { s, t } => emit_graph(complete_bipartite(s, t), format!("K_{{{s},{t}}}")),
        GenVerb::Complete { n } => emit_graph(complete(n), format!("K_{n}")),
        GenVerb::Tree { r } if r <= 20 => emit_graph(binary_tree(r), format!("binary tree of depth {r}")),
        GenVerb::Tree { .. } => Err("--r must be at most 20".into()),
        GenVerb::Wall { r } if (1..=64).contains(&r) => emit_graph(wall(r), format!("wall of height {r}")),
        GenVerb::Wall { .. } => Err("--r must be in 1..=64".into()),
        GenVerb::ZigzagGraph { n, l } if l >= 1 => {
            emit_constellation(&zigzag_graph(n as usize, l), None, format!("zigzag graph ({n},{l})"))
        }
        GenVerb::Occultation { s, c, ample } if c >= 1 => {
            let (con, order) = if ample {
                occultation_ample(s as usize, c)
            } else {
                occultation(s as usize, c)
            };
            emit_constellation(&con, Some(&order), format!("occultation ({s},{c})"))
        }
        GenVerb::Aligned { s, l, reps } if s >= 1 && l >= 1 && reps >= 1 => emit_constellation(
            &aligned_constellation(s, l, reps),
            None,
            format!("aligned ({s},{l}) with {reps} vertices per apex"),
        ),
        _ => Err("sizes must be positive".into()),
    }
}

fn load_constellation(path: &Path) -> Result<(Constellation, Option<ApexOrder>), String> {
    io::parse_constellation(&io::read_file(path).map_err(io_err)?).map_err(io_err)
}

fn parse_ids(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad id `{t}`: {e}")))
        .collect()
}

fn order_mode(arg: &OrderArg, c: &Constellation, file_order: Option<ApexOrder>) -> Result<OrderMode, String> {
    let mode = match arg.order.as_str() {
        "auto" => OrderMode::Given(file_order.unwrap_or_else(|| ApexOrder::natural(c.apex()))),
        "natural" => OrderMode::Given(ApexOrder::natural(c.apex())),
        "search" => OrderMode::Search,
        list => OrderMode::Given(ApexOrder::new(parse_ids(list)?)),
    };
    if let OrderMode::Given(o) = &mode {
        let apex: Vec<usize> = c.apex().iter().collect();
        o.ranks(&apex).map_err(|e| e.to_string())?;
    }
    Ok(mode)
}

fn order_outcome<V: std::fmt::Debug>(
    what: &str,
    verdict: Result<OrderVerdict<V>, constel_core::ConstellationError>,
) -> HResult {
    Ok(match verdict.map_err(|e| e.to_string())? {
        OrderVerdict::Holds(o) => {
            Outcome::pass(format!("{what} under order {:?}", o.as_slice())).witness("order", o.as_slice())
        }
        OrderVerdict::Violated(v) => Outcome::fail(format!("not {what}: {v:?}")).witness("violation", format!("{v:?}")),
        OrderVerdict::NoOrder => Outcome::fail(format!("not {what} under any order")),
    }
    .into())
}

fn check(v: &CheckVerb) -> HResult {
    match v {
        CheckVerb::Constellation { file } => {
            let text = io::read_file(file).map_err(io_err)?;
            Ok(match io::parse_constellation(&text) {
                Ok((c, _)) => Outcome::pass(format!("valid ({},{})-constellation", c.s(), c.l()))
                    .witness("s", c.s())
                    .witness("l", c.l()),
                Err(IoError::Constellation(errs)) => Outcome::fail("not a constellation")
                    .witness("violations", errs.iter().map(|e| e.to_string()).collect::<Vec<_>>()),
                Err(e) => return Err(e.to_string()),
            }
            .into())
        }
        CheckVerb::Ample { file, d } => {
            let (c, _) = load_constellation(file)?;
            let short = constel_core::constellation::ample_violation(&c, *d);
            Ok(match short {
                None => Outcome::pass(format!("{d}-ample")),
                Some(r) => Outcome::fail(format!("route of length {} is too short", r.length()))
                    .witness("route", r.vertices(&c)),
            }
            .into())
        }
        CheckVerb::Interrupted { file, order } => {
            let (c, o) = load_constellation(file)?;
            let mode = order_mode(order, &c, o)?;
            order_outcome("interrupted", is_interrupted(&c, &mode))
        }
        CheckVerb::Zigzagged { file, q, order } => {
            let (c, o) = load_constellation(file)?;
            let mode = order_mode(order, &c, o)?;
            order_outcome(&format!("{q}-zigzagged"), is_zigzagged(&c, *q, &mode))
        }
        CheckVerb::Mixed {
            file,
            q_minus,
            q,
            q_plus,
            order,
        } => {
            let (c, o) = load_constellation(file)?;
            let mode = order_mode(order, &c, o)?;
            order_outcome(
                &format!("({q_minus},{q},{q_plus})-mixed"),
                is_mixed(&c, *q_minus, *q, *q_plus, &mode),
            )
        }
        CheckVerb::Aligned { file, order } => {
            let (c, o) = load_constellation(file)?;
            let mode = order_mode(order, &c, o)?;
            order_outcome("aligned", is_aligned(&c, &mode))
        }
        CheckVerb::SitsIn { sub, file } => {
            let (c, _) = load_constellation(file)?;
            #[derive(serde::Deserialize)]
            struct Sel {
                apex: Vec<usize>,
                paths: Vec<Vec<usize>>,
            }
            let sel: Sel = serde_json::from_str(&io::read_file(sub).map_err(io_err)?).map_err(|e| e.to_string())?;
            if let Some(&v) = sel
                .apex
                .iter()
                .chain(sel.paths.iter().flatten())
                .find(|&&v| v >= c.host().n())
            {
                return Err(format!("vertex {v} is not in the parent"));
            }
            let sel = Selection {
                apex: sel.apex.into_iter().collect(),
                paths: sel.paths,
            };
            Ok(match sits_in(&sel, &c) {
                Ok(()) => Outcome::pass("sits in the constellation"),
                Err(v) => Outcome::fail(format!("does not sit in it: {v:?}")),
            }
            .into())
        }
    }
}

fn load_sequence(arg: &str) -> Result<IndexSequence, String> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        io::read_file(Path::new(arg)).map_err(io_err)?
    };
    io::parse_sequence(&text).map_err(io_err)
}

fn seq(v: &SeqVerb, budget: u64) -> HResult {
    match v {
        SeqVerb::Zigzag { n } => {
            let z = zigzag_sequence(*n as usize).map_err(|e| e.to_string())?;
            let line = z.as_slice().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
            with_payload(
                Outcome::pass(format!("Z_{n} has {} entries", z.len())).witness("sequence", z.as_slice()),
                line + "\n",
            )
        }
        SeqVerb::Smooth { seq } => {
            let a = load_sequence(seq)?;
            Ok(Outcome::decide(a.is_smooth(), if a.is_smooth() { "smooth" } else { "not smooth" }).into())
        }
        SeqVerb::MaxAlignment { seq, zigzag, k } => {
            let a = match (seq, zigzag) {
                (Some(s), None) => load_sequence(s)?,
                (None, Some(n)) if (2..=24).contains(n) => zigzag_sequence(*n).map_err(|e| e.to_string())?,
                (None, Some(_)) => return Err("--zigzag must be in 2..=24".into()),
                _ => return Err("give a sequence or --zigzag N".into()),
            };
            let mut b = Budget::new(budget);
            Ok(match max_alignment(&a, *k, &mut b) {
                SearchOutcome::Found(w) => Outcome::pass(format!("{k}-alignment on window {}..={}", w.i, w.j))
                    .witness("alignment", json!({"values": w.values, "i": w.i, "j": w.j})),
                SearchOutcome::NotFound => Outcome::fail(format!("no {k}-alignment")),
                SearchOutcome::BudgetExceeded => Outcome::inconclusive("budget exhausted"),
            }
            .spent(b.spent())
            .into())
        }
        SeqVerb::Symmetry { n } => {
            let ok = complement_symmetry_check(*n).map_err(|e| e.to_string())?;
            Ok(Outcome::decide(ok, format!("complement symmetry of Z_{n}")).into())
        }
    }
}

fn hyper_budget<T>(r: Result<T, HypergraphError>) -> Result<Option<T>, String> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(HypergraphError::BudgetExceeded) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn hyper(v: &HyperVerb, budget: u64) -> HResult {
    let mut b = Budget::new(budget);
    let load = |file: &PathBuf| -> Result<_, String> {
        io::parse_hypergraph(&io::read_file(file).map_err(io_err)?).map_err(io_err)
    };
    let out = match v {
        HyperVerb::Params { file } => {
            let h = load(file)?;
            let (Some(nu), Some(tau), Some(lambda)) = (
                hyper_budget(h.nu(&mut b))?,
                hyper_budget(h.tau(&mut b))?,
                hyper_budget(h.lambda(&mut b))?,
            ) else {
                return Ok(Outcome::inconclusive("budget exhausted").spent(b.spent()).into());
            };
            Outcome::pass(format!(
                "nu = {}, tau = {}, lambda = {}",
                nu.size, tau.size, lambda.size
            ))
            .witness("nu", json!({"size": nu.size, "edges": nu.edges}))
            .witness("tau", json!({"size": tau.size, "vertices": tau.vertices}))
            .witness("lambda", json!({"size": lambda.size, "family": lambda.family}))
        }
        HyperVerb::Dsw { file, a, a_prime } => {
            let h = load(file)?;
            let a = match a {
                Some(a) => *a,
                None => match hyper_budget(h.nu(&mut b))? {
                    Some(p) => p.size,
                    None => return Ok(Outcome::inconclusive("budget exhausted").spent(b.spent()).into()),
                },
            };
            let a_prime = match a_prime {
                Some(a) => *a,
                None => match hyper_budget(h.lambda(&mut b))? {
                    Some(p) => p.size,
                    None => return Ok(Outcome::inconclusive("budget exhausted").spent(b.spent()).into()),
                },
            };
            match hyper_budget(dsw_bound_check(&h, a, a_prime, &mut b))? {
                Some(c) => Outcome::decide(c.holds, format!("tau = {} against bound {}", c.tau, c.rhs))
                    .witness("tau", c.tau)
                    .witness("bound", c.rhs.to_string()),
                None => Outcome::inconclusive("budget exhausted"),
            }
        }
        HyperVerb::Ramsey { u, m, n, colors, seed } => {
            if *u > 24 || *colors == 0 {
                return Err("need u <= 24 and at least one color".into());
            }
            if *m == 0 || m > n || n > u {
                return Err("need 1 <= m <= n <= u".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut table = std::collections::HashMap::new();
            let mut pick: Vec<usize> = (0..*m).collect();
            loop {
                table.insert(pick.clone(), rng.gen_range(0..*colors));
                if !advance(&mut pick, *u) {
                    break;
                }
            }
            let phi = |t: &[usize]| table[t];
            match ramsey_search(*u, *m, *colors, &phi, *n, &mut b).map_err(|e| e.to_string())? {
                SearchOutcome::Found(z) => {
                    let color = phi(&z[..*m]);
                    Outcome::pass(format!("monochromatic {n}-subset in color {color}"))
                        .witness("subset", z)
                        .witness("color", color)
                }
                SearchOutcome::NotFound => Outcome::fail(format!("no monochromatic {n}-subset")),
                SearchOutcome::BudgetExceeded => Outcome::inconclusive("budget exhausted"),
            }
        }
    };
    Ok(out.spent(b.spent()).into())
}

/// Next ascending `k`-subset of `0..n` in lexicographic order.
fn advance(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for p in (0..k).rev() {
        if idx[p] < n - k + p {
            idx[p] += 1;
            for q in p + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn model(v: &ModelVerb, budget: u64) -> HResult {
    let load = |file: &PathBuf| io::parse_model(&io::read_file(file).map_err(io_err)?).map_err(io_err);
    match v {
        ModelVerb::Verify { file } => {
            let text = io::read_file(file).map_err(io_err)?;
            Ok(match io::parse_model(&text) {
                Ok(m) => Outcome::pass(format!("induced K_{{{},{}}} model", m.s(), m.t())),
                Err(IoError::Model(v)) => Outcome::fail("not an induced model")
                    .witness("violations", v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>()),
                Err(e) => return Err(e.to_string()),
            }
            .into())
        }
        ModelVerb::Linear { file, side } => {
            let m = load(file)?;
            let ok = m.is_linear(side.sides());
            Ok(Outcome::decide(ok, if ok { "linear" } else { "not linear" }).into())
        }
        ModelVerb::Contract { file, side } => {
            let m = load(file)?;
            let c = match side {
                SideArg::A => m.a_contraction(),
                SideArg::B => m.b_contraction(),
                SideArg::Both => return Err("contract one side at a time".into()),
            };
            match c {
                Ok(c) => emit_constellation(&c, None, format!("({},{})-constellation", c.s(), c.l())),
                Err(e) => Ok(Outcome::fail(e.to_string()).into()),
            }
        }
        ModelVerb::Ample { file, d, side } => {
            let m = load(file)?;
            Ok(match m.is_ample(*d, side.sides()) {
                Ok(ok) => Outcome::decide(
                    ok,
                    if ok {
                        format!("{d}-ample")
                    } else {
                        format!("not {d}-ample")
                    },
                ),
                Err(e) => Outcome::fail(e.to_string()),
            }
            .into())
        }
        ModelVerb::Find { file, s, t } => {
            let g = io::load_graph(file).map_err(io_err)?;
            let mut b = Budget::new(budget);
            match find_bipartite_model(&g, *s, *t, &mut b).map_err(|e| e.to_string())? {
                SearchOutcome::Found(m) => {
                    let text = io::write_model(&m);
                    with_payload(
                        Outcome::pass(format!("induced K_{{{s},{t}}} model found"))
                            .witness("model", io::model_to_json(&m))
                            .spent(b.spent()),
                        text,
                    )
                }
                SearchOutcome::NotFound => Ok(Outcome::fail(format!("no induced K_{{{s},{t}}} model"))
                    .spent(b.spent())
                    .into()),
                SearchOutcome::BudgetExceeded => Ok(Outcome::inconclusive("budget exhausted").spent(b.spent()).into()),
            }
        }
    }
}

fn width(v: &WidthVerb) -> HResult {
    match v {
        WidthVerb::Tw { file, limit } | WidthVerb::Pw { file, limit } => {
            let g = io::load_graph(file).map_err(io_err)?;
            let (name, r) = if matches!(v, WidthVerb::Tw { .. }) {
                ("treewidth", treewidth_exact(&g, *limit))
            } else {
                ("pathwidth", pathwidth_exact(&g, *limit))
            };
            let r = r.map_err(|e| e.to_string())?;
            let text = io::write_certificate(&r);
            with_payload(
                Outcome::pass(format!("{name} {}", r.value)).witness("certificate", io::certificate_to_json(&r)),
                text,
            )
        }
        WidthVerb::Certify { file, certificate } => {
            let g = io::load_graph(file).map_err(io_err)?;
            let r = io::parse_certificate(&io::read_file(certificate).map_err(io_err)?).map_err(io_err)?;
            Ok(match certify(&g, &r) {
                Ok(true) => Outcome::pass(format!("certificate for width {} checks out", r.value)),
                Ok(false) => Outcome::fail(format!("certificate does not achieve width {}", r.value)),
                Err(e) => Outcome::fail(e.to_string()),
            }
            .into())
        }
    }
}

fn selection(arg: &SelectionArg, c: &Constellation) -> Result<VertexSet, String> {
    let h: VertexSet = match &arg.h {
        Some(list) => parse_ids(list)?.into_iter().collect(),
        None => c.host().vertices(),
    };
    c.host().check_set(&h).map_err(|e| e.to_string())?;
    Ok(h)
}

fn analyze(v: &AnalyzeVerb) -> HResult {
    match v {
        AnalyzeVerb::Aux { file, h } => {
            let (c, _) = load_constellation(file)?;
            let h = selection(h, &c)?;
            let aux = aux_graph(&c, &h).map_err(|e| e.to_string())?;
            let edges: Vec<[usize; 2]> = aux
                .graph
                .edges()
                .iter()
                .map(|&(i, j)| [aux.apex[i], aux.apex[j]])
                .collect();
            Ok(
                Outcome::pass(format!("{} apexes, {} edges", aux.apex.len(), edges.len()))
                    .witness("apex", &aux.apex)
                    .witness("edges", edges)
                    .into(),
            )
        }
        AnalyzeVerb::Contract { file, h } => {
            let (c, _) = load_constellation(file)?;
            let h = selection(h, &c)?;
            Ok(match apex_contraction_structure(&c, &h) {
                Ok(s) => Outcome::pass("apex contraction is a subdivided leaf-extension of the auxiliary graph")
                    .witness("aux_apex", &s.aux.apex)
                    .witness("aux_edges", s.aux.graph.edges())
                    .witness("extension", io::graph_to_json(&s.extension))
                    .witness("iso", &s.iso),
                Err(e @ ContractionError::Falsified(_)) => Outcome::fail(e.to_string()),
                Err(e) => return Err(format!("precondition: {e}")),
            }
            .into())
        }
        AnalyzeVerb::Bandwidth { file, h, order, q } => {
            let (c, o) = load_constellation(file)?;
            let h = selection(h, &c)?;
            let OrderMode::Given(order) = order_mode(order, &c, o)? else {
                return Err("bandwidth needs a fixed order".into());
            };
            let gap = order_bandwidth_bound(&c, &h, &order).map_err(|e| e.to_string())?;
            Ok(
                Outcome::decide(gap <= *q, format!("largest auxiliary gap {gap}, bound {q}"))
                    .witness("gap", gap)
                    .into(),
            )
        }
    }
}

fn verify(v: &VerifyVerb, budget: u64) -> Outcome {
    match *v {
        VerifyVerb::LemmaAlign { min_n, max_n, k } => suites::lemma_align(min_n, max_n as usize, k, budget),
        VerifyVerb::ZigzagFamily { max_n } => suites::zigzag_family(max_n as usize),
        VerifyVerb::Deathstar { max_s, c } => suites::deathstar(max_s as usize, c),
        VerifyVerb::Split { c, q } => suites::split(c as usize, q as usize),
        VerifyVerb::StarObstruction { q } => suites::star_obstruction(q as usize, budget),
        VerifyVerb::DswRandom { count, seed } => suites::dsw_random(count, seed, budget),
        VerifyVerb::Widths { max_s, max_l } => suites::widths(max_s as usize, max_l as usize),
    }
}
