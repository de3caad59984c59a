//! The `avgconn` command line.
//!
//! Every subcommand writes JSON to standard output, except `table1` and
//! `repro`, which print human-readable tables unless `--json` is given.
//! Graph inputs are graph6 or an edge list (`n m` header, then one `a b` pair
//! per line); the format is detected from the first non-blank byte.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{check_against_search, check_bound, eval_bound, verify_graph, BoundId, BoundParams, ValueSource};
use crate::connectivity::{potential_digraph, potential_graph, report_digraph_with, report_graph_with, Measure};
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graph::{Digraph, Graph, Orientation};
use crate::rational::Rational;
use crate::repro::{self, ReproOptions};
use crate::search::{search, Method, SearchOptions, SearchResult};
use crate::transforms;

#[derive(Parser, Debug)]
#[command(name = "avgconn", version, about = "Average connectivity of graphs and their orientations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pairwise connectivities, averages and potentials.
    Compute(ComputeArgs),
    /// Maximum average connectivity over all orientations.
    Search(SearchArgs),
    /// Minimum maximum average connectivity over maximal outerplanar graphs.
    Table1(Table1Args),
    /// Emit a member of a named family.
    Generate(GenerateArgs),
    /// Inflate, subdivide, or analyse a graph.
    Transform(TransformArgs),
    /// Check a catalogued bound.
    Verify(VerifyArgs),
    /// Run every reproduction check and print a manifest.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    Edges,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: InputFormat,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub io: InputArgs,
    /// Report every pair (default).
    #[arg(long, conflicts_with_all = ["average", "potential"])]
    pub pairs: bool,
    /// Report only the total and average.
    #[arg(long, conflicts_with = "potential")]
    pub average: bool,
    /// Report the degree potential.
    #[arg(long)]
    pub potential: bool,
    /// Input is a digraph: an arc list (`n m` then `tail head` lines) or an
    /// orientation (`<graph6> <hex>`, or an edge list ending in `o <hex>`).
    #[arg(long)]
    pub directed: bool,
    #[arg(long, default_value = "vertex")]
    pub objective: Measure,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, default_value = "bnb")]
    pub method: Method,
    #[arg(long, default_value = "vertex")]
    pub objective: Measure,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub max_edges: Option<usize>,
    /// Local search restarts.
    #[arg(long, default_value_t = 8)]
    pub restarts: usize,
    /// Local search: non-improving moves before a restart.
    #[arg(long)]
    pub max_plateau: Option<usize>,
}

#[derive(Args, Debug)]
pub struct Table1Args {
    #[arg(long, default_value_t = 8)]
    pub max_order: usize,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Star,
    Cycle,
    Path,
    Fan,
    JoinK2Empty,
    CompleteBipartite2,
    #[value(name = "h_st", alias = "h-st")]
    HSt,
    MobiusLadder,
    LexLadder,
    Min2connH,
    Snake,
    TrigonLozengeG,
    TwoTreeRandom,
    /// Polygon triangulations of order `--n` (one per isomorphism class with
    /// `--canonical`).
    Mops,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub canonical: bool,
    /// Also emit the edge list.
    #[arg(long)]
    pub edges: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Inflate,
    Subdivide,
    Dual,
    /// Lift an orientation of a cubic graph to its inflation.
    Lift,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[arg(value_enum)]
    pub kind: TransformKind,
    #[command(flatten)]
    pub io: InputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub bound: BoundId,
    /// Graph to compute the constrained quantity for.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: InputFormat,
    /// Search result JSON whose best average is checked.
    #[arg(long, conflicts_with_all = ["input", "value"])]
    pub result: Option<PathBuf>,
    /// Explicit computed value `p/q`, checked against the formula at the
    /// given parameters.
    #[arg(long, conflicts_with = "input")]
    pub value: Option<Rational>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub total: Option<u64>,
    #[arg(long)]
    pub kbm: Option<Rational>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ReproArgs {
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u8>,
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    let io_err = |p: &str, e: std::io::Error| Error::Io {
        path: p.to_string(),
        reason: e.to_string(),
    };
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| io_err(&p.display().to_string(), e))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| io_err("<stdin>", e))?;
            Ok(s)
        }
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    matches!(text.trim_start().bytes().next(), Some(b'0'..=b'9' | b'#'))
}

/// Parses a graph in the given (or detected) format.
pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    let edges = match format {
        InputFormat::Auto => looks_like_edge_list(text),
        InputFormat::Edges => true,
        InputFormat::Graph6 => false,
    };
    if edges {
        Graph::from_edge_list_text(text)
    } else {
        let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        Graph::from_graph6(line)
    }
}

fn parse_digraph(text: &str, format: InputFormat) -> Result<Digraph> {
    let trimmed = text.trim();
    let has_orientation_line = trimmed.lines().last().is_some_and(|l| l.trim_start().starts_with("o "));
    let edges = match format {
        InputFormat::Auto => looks_like_edge_list(text),
        InputFormat::Edges => true,
        InputFormat::Graph6 => false,
    };
    if edges && !has_orientation_line {
        Digraph::from_arc_list_text(text)
    } else {
        Ok(Orientation::from_text(text)?.to_digraph())
    }
}

fn emit(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Error::Encoding(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Error::Io {
        path: "<stdout>".into(),
        reason: e.to_string(),
    })
}

fn line(out: &mut dyn Write, s: &str) -> Result<()> {
    writeln!(out, "{s}").map_err(|e| Error::Io {
        path: "<stdout>".into(),
        reason: e.to_string(),
    })
}

fn graph_json(g: &Graph, with_edges: bool) -> Value {
    let mut v = json!({ "graph6": g.to_graph6(), "n": g.n(), "m": g.m() });
    if with_edges {
        v["edges"] = json!(g.edges());
    }
    v
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::param(format!("missing --{flag}")))
}

fn cmd_compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<()> {
    let text = read_input(&a.io.input)?;
    if a.directed {
        let d = parse_digraph(&text, a.io.format)?;
        if a.potential {
            return emit(out, &potential_digraph(&d)?);
        }
        let rep = report_digraph_with(&d, a.objective)?;
        if a.average {
            return emit(out, &json!({ "n": rep.n, "total": rep.total, "average": rep.average }));
        }
        return emit(out, &rep);
    }
    let g = parse_graph(&text, a.io.format)?;
    if a.potential {
        return emit(out, &potential_graph(&g)?);
    }
    let rep = report_graph_with(&g, a.objective)?;
    if a.average {
        return emit(out, &json!({ "n": rep.n, "total": rep.total, "average": rep.average }));
    }
    emit(out, &rep)
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let g = parse_graph(&read_input(&a.io.input)?, a.io.format)?;
    let opts = SearchOptions {
        objective: a.objective,
        max_edges: a.max_edges,
        threads: a.threads,
        seed: a.seed,
        restarts: a.restarts,
        max_plateau: a.max_plateau,
    };
    let res = search(&g, a.method, &opts)?;
    for w in &res.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    emit(out, &res)
}

fn cmd_table1(a: &Table1Args, out: &mut dyn Write) -> Result<()> {
    let opts = SearchOptions {
        threads: a.threads,
        ..SearchOptions::default()
    };
    let rows = repro::table1(a.max_order, &opts)?;
    if a.json {
        return emit(out, &rows);
    }
    line(out, &format!("{:>3}  {:>7}  {:<24}  {}", "n", "classes", "min kbar_max", "fan"))?;
    for r in &rows {
        let fan = match (r.fan_attains, r.fan_unique) {
            (true, true) => "unique minimizer",
            (true, false) => "attains (not unique)",
            _ => "does not attain",
        };
        line(
            out,
            &format!("{:>3}  {:>7}  {:<24}  {}", r.n, r.classes, r.min.display_approx(), fan),
        )?;
    }
    Ok(())
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<()> {
    use Family::*;
    if a.family == Mops {
        let n = need(a.n, "n")?;
        let graphs: Vec<Graph> = if a.canonical {
            families::enumerate_mops_canonical(n)?
        } else {
            families::enumerate_mops(n)?.collect()
        };
        let list: Vec<Value> = graphs.iter().map(|g| graph_json(g, a.edges)).collect();
        return emit(out, &json!({ "family": "mops", "n": n, "count": list.len(), "graphs": list }));
    }
    let spec = match a.family {
        Complete => FamilySpec::Complete { n: need(a.n, "n")? },
        Star => FamilySpec::Star { n: need(a.n, "n")? },
        Cycle => FamilySpec::Cycle { n: need(a.n, "n")? },
        Path => FamilySpec::Path { n: need(a.n, "n")? },
        Fan => FamilySpec::Fan { n: need(a.n, "n")? },
        JoinK2Empty => FamilySpec::JoinK2Empty { n: need(a.n, "n")? },
        CompleteBipartite2 => FamilySpec::CompleteBipartite2 { n: need(a.n, "n")? },
        HSt => FamilySpec::Hst {
            s: need(a.s, "s")?,
            t: need(a.t, "t")?,
        },
        MobiusLadder => FamilySpec::MobiusLadder { n: need(a.n, "n")? },
        LexLadder => FamilySpec::LexLadder { n: need(a.n, "n")? },
        Min2connH => FamilySpec::Min2connH { n: need(a.n, "n")? },
        Snake => FamilySpec::Snake { n: need(a.n, "n")? },
        TrigonLozengeG => FamilySpec::TrigonLozengeG { i: need(a.i, "i")? },
        TwoTreeRandom => FamilySpec::TwoTreeRandom {
            n: need(a.n, "n")?,
            seed: a.seed,
        },
        Mops => unreachable!(),
    };
    let gen = families::generate(&spec)?;
    let mut v = graph_json(&gen.graph, a.edges);
    v["family"] = serde_json::to_value(&spec).map_err(|e| Error::Encoding(e.to_string()))?;
    if let Some(o) = &gen.orientation {
        v["orientation"] = serde_json::to_value(o.to_json()).map_err(|e| Error::Encoding(e.to_string()))?;
    }
    emit(out, &v)
}

fn cmd_transform(a: &TransformArgs, out: &mut dyn Write) -> Result<()> {
    let text = read_input(&a.io.input)?;
    match a.kind {
        TransformKind::Inflate => {
            let g = parse_graph(&text, a.io.format)?;
            let inf = transforms::inflation(&g)?;
            let mut v = graph_json(&inf.graph, false);
            v["triangle_map"] = json!(inf.triangle_map());
            emit(out, &v)
        }
        TransformKind::Subdivide => {
            let g = parse_graph(&text, a.io.format)?;
            let sub = transforms::subdivision(&g);
            let mut v = graph_json(&sub.graph, false);
            let map: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &(x, y))| (x, y, sub.edge_vertex(i)))
                .collect();
            v["edge_vertices"] = json!(map);
            emit(out, &v)
        }
        TransformKind::Dual => {
            let g = parse_graph(&text, a.io.format)?;
            let s = transforms::mop_structure(&g)?;
            let (sq, b2) = transforms::chord_square_sets(&g)?;
            emit(
                out,
                &json!({
                    "boundary": s.boundary,
                    "faces": s.faces,
                    "outer_edges": s.outer_edges,
                    "chords": s.chords,
                    "weak_dual": graph_json(&s.weak_dual, true),
                    "chord_square_vertices": sq,
                    "degree_two_vertices": b2,
                }),
            )
        }
        TransformKind::Lift => {
            let d = Orientation::from_text(&text)?;
            let inf = transforms::inflation(d.graph())?;
            let f = transforms::lift_orientation(&inf, &d)?;
            emit(
                out,
                &json!({ "orientation": f.to_json(), "text": f.to_text(), "triangle_map": inf.triangle_map() }),
            )
        }
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<()> {
    let params = BoundParams {
        n: a.n,
        m: a.m,
        r: a.r,
        k: a.k,
        total: a.total,
        kbm: a.kbm.clone(),
    };
    if let Some(path) = &a.result {
        let text = read_input(&Some(path.clone()))?;
        let res: SearchResult = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line: e.line(),
            reason: e.to_string(),
        })?;
        let g = res.witness.graph();
        let p = BoundParams {
            n: params.n.or(Some(g.n() as u64)),
            r: params.r.or(Some(g.degree(0) as u64)),
            ..params
        };
        return emit(out, &check_against_search(a.bound, &p, &res)?);
    }
    if let Some(v) = &a.value {
        let bound = eval_bound(a.bound, &params)?;
        return emit(out, &check_bound(a.bound, bound, v.clone(), ValueSource::Supplied));
    }
    let g = parse_graph(&read_input(&a.input)?, a.format)?;
    let opts = SearchOptions {
        threads: a.threads,
        ..SearchOptions::default()
    };
    emit(out, &verify_graph(a.bound, &g, &opts)?)
}

fn cmd_repro(a: &ReproArgs, out: &mut dyn Write) -> Result<bool> {
    let opts = ReproOptions {
        threads: a.threads,
        seed: a.seed,
        property_cases: a.cases,
    };
    let ids: Vec<u8> = if a.only.is_empty() {
        repro::CRITERIA.iter().map(|c| c.0).collect()
    } else {
        a.only.clone()
    };
    let mut all = true;
    let mut outcomes = Vec::new();
    for id in ids {
        let o = repro::run_criterion(id, &opts);
        all &= o.passed;
        if !a.json {
            let mark = if o.passed { "PASS" } else { "FAIL" };
            line(out, &format!("[{mark}] {:>2} {}: {}", o.id, o.title, o.detail))?;
        }
        outcomes.push(o);
    }
    if a.json {
        emit(out, &outcomes)?;
    }
    Ok(all)
}

/// Runs a parsed command. `Ok(false)` means a reproduction check failed.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a, out).map(|_| true),
        Command::Search(a) => cmd_search(a, out, err).map(|_| true),
        Command::Table1(a) => cmd_table1(a, out).map(|_| true),
        Command::Generate(a) => cmd_generate(a, out).map(|_| true),
        Command::Transform(a) => cmd_transform(a, out).map(|_| true),
        Command::Verify(a) => cmd_verify(a, out).map(|_| true),
        Command::Repro(a) => cmd_repro(a, out),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
