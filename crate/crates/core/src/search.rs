//! Maximum average connectivity over all orientations of a graph.
//!
//! Three strategies share one objective, the integer total `K(D)` (or its
//! edge analogue): plain enumeration, branch-and-bound on the degree
//! potential, and a seeded hill climb for instances too large to certify.
//!
//! Reversing every arc preserves `K(D)`, so the exact methods only visit bit
//! vectors whose first bit is 0. Among optimal orientations the reported
//! witness is the lexicographically smallest bit vector (bit 0 most
//! significant), which always has bit 0 = 0. Work is split into a fixed number
//! of blocks keyed by edges `1..=6`; blocks are searched independently and
//! merged, so results are identical for every thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::{total_connectivity_with, Evaluator, Measure};
use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation, OrientationJson, Vertex};
use crate::rational::Rational;

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;
pub const DEFAULT_BNB_CAP: usize = 30;
const BLOCK_BITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    LocalSearch,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Method::Exhaustive),
            "bnb" | "branch_and_bound" => Ok(Method::BranchAndBound),
            "local" | "local_search" => Ok(Method::LocalSearch),
            _ => Err(Error::param(format!("unknown method {s:?} (exhaustive|bnb|local)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub objective: Measure,
    /// Overrides the method's default edge cap.
    pub max_edges: Option<usize>,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub seed: u64,
    pub restarts: usize,
    pub max_plateau: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            objective: Measure::Vertex,
            max_edges: None,
            threads: None,
            seed: 0,
            restarts: 8,
            max_plateau: None,
        }
    }
}

impl SearchOptions {
    pub fn objective(mut self, objective: Measure) -> Self {
        self.objective = objective;
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub method: Method,
    pub objective: Measure,
    pub best_total: u64,
    pub best_average: Rational,
    pub witness: Orientation,
    /// Number of optimal orientations over the whole orientation space
    /// (exhaustive only).
    pub optimum_count: Option<u64>,
    pub nodes_explored: u64,
    pub certified: bool,
    pub witness_strong: bool,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SearchResultJson {
    method: Method,
    objective: Measure,
    n: usize,
    m: usize,
    best_total: u64,
    best_average: Rational,
    witness: OrientationJson,
    optimum_count: Option<u64>,
    nodes_explored: u64,
    certified: bool,
    witness_strong: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
}

impl Serialize for SearchResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SearchResultJson {
            method: self.method,
            objective: self.objective,
            n: self.witness.graph().n(),
            m: self.witness.graph().m(),
            best_total: self.best_total,
            best_average: self.best_average.clone(),
            witness: self.witness.to_json(),
            optimum_count: self.optimum_count,
            nodes_explored: self.nodes_explored,
            certified: self.certified,
            witness_strong: self.witness_strong,
            warnings: self.warnings.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SearchResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SearchResultJson::deserialize(d)?;
        let witness = raw.witness.decode().map_err(serde::de::Error::custom)?;
        Ok(SearchResult {
            method: raw.method,
            objective: raw.objective,
            best_total: raw.best_total,
            best_average: raw.best_average,
            witness,
            optimum_count: raw.optimum_count,
            nodes_explored: raw.nodes_explored,
            certified: raw.certified,
            witness_strong: raw.witness_strong,
            warnings: raw.warnings,
        })
    }
}

impl SearchResult {
    fn build(
        method: Method,
        objective: Measure,
        g: &Graph,
        best_total: u64,
        witness_mask: Vec<bool>,
        optimum_count: Option<u64>,
        nodes_explored: u64,
    ) -> SearchResult {
        let n = g.n() as u64;
        let witness = Orientation::new(g.clone(), witness_mask).expect("witness length");
        let witness_strong = witness.to_digraph().is_strong();
        SearchResult {
            method,
            objective,
            best_total,
            best_average: Rational::ratio(best_total, n * (n - 1)),
            witness,
            optimum_count,
            nodes_explored,
            certified: method != Method::LocalSearch,
            witness_strong,
            warnings: Vec::new(),
        }
    }

    /// Recomputes the witness total from scratch and checks it against
    /// `best_total`.
    pub fn certify(&self) -> Result<()> {
        let recomputed = total_connectivity_with(&self.witness, self.objective);
        if recomputed != self.best_total {
            return Err(Error::precondition(format!(
                "witness total {recomputed} does not match reported {}",
                self.best_total
            )));
        }
        Ok(())
    }
}

/// Runs the requested method.
pub fn search(g: &Graph, method: Method, opts: &SearchOptions) -> Result<SearchResult> {
    match method {
        Method::Exhaustive => search_exhaustive(g, opts),
        Method::BranchAndBound => search_branch_and_bound(g, opts),
        Method::LocalSearch => search_local(g, opts),
    }
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::param(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices { n: g.n(), needed: 2 });
    }
    Ok(())
}

/// `a` precedes `b` when, at the first edge where they differ, `a` keeps the
/// edge's natural direction.
fn lex_less(a: u64, b: u64) -> bool {
    a != b && (a >> (a ^ b).trailing_zeros()) & 1 == 0
}

fn mask_bits(mask: u64, m: usize) -> Vec<bool> {
    (0..m).map(|i| mask >> i & 1 == 1).collect()
}

#[derive(Clone, Copy)]
struct Best {
    total: u64,
    mask: u64,
    count: u64,
}

fn merge_best(acc: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (acc, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(if a.total > b.total {
            a
        } else if b.total > a.total {
            b
        } else {
            Best {
                total: a.total,
                mask: if lex_less(b.mask, a.mask) { b.mask } else { a.mask },
                count: a.count + b.count,
            }
        }),
    }
}

/// Enumerates every orientation with edge 0 in its natural direction.
pub fn search_exhaustive(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    check_order(g)?;
    let m = g.m();
    let cap = opts.max_edges.unwrap_or(DEFAULT_EXHAUSTIVE_CAP).min(63);
    if m > cap {
        return Err(Error::EdgeCapExceeded {
            method: "exhaustive",
            m,
            cap,
            suggestion: "branch_and_bound or local_search",
        });
    }
    let free = m.saturating_sub(1);
    let block_bits = free.min(BLOCK_BITS);
    let inner_bits = free - block_bits;
    let proto = Evaluator::new(g, opts.objective);
    let (best, nodes) = with_pool(opts.threads, || {
        (0..1u64 << block_bits)
            .into_par_iter()
            .map_init(
                || proto.clone(),
                |ev, block| {
                    let mut best: Option<Best> = None;
                    for inner in 0..1u64 << inner_bits {
                        let mask = ((block << inner_bits | inner) << 1) & !1;
                        let floor = best.map_or(0, |b| b.total);
                        if let Some(t) = ev.total_mask(mask, floor) {
                            best = merge_best(best, Some(Best { total: t, mask, count: 1 }));
                        }
                    }
                    (best, 1u64 << inner_bits)
                },
            )
            .collect::<Vec<_>>()
            .into_iter()
            .fold((None, 0u64), |(b, c), (x, k)| (merge_best(b, x), c + k))
    })?;
    let best = best.expect("at least one orientation");
    // Reversal pairs the half space searched with the other half.
    let count = if m == 0 { best.count } else { 2 * best.count };
    Ok(SearchResult::build(
        Method::Exhaustive,
        opts.objective,
        g,
        best.total,
        mask_bits(best.mask, m),
        Some(count),
        nodes,
    ))
}

/// Static data shared by the branch-and-bound workers.
struct BoundModel {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    deg: Vec<u32>,
    objective: Measure,
    base: Vec<u32>,
}

impl BoundModel {
    fn new(g: &Graph, ev: &Evaluator, objective: Measure) -> BoundModel {
        let n = g.n();
        let mut base = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    base[u * n + v] = ev.base_cap(u, v);
                }
            }
        }
        BoundModel {
            n,
            edges: g.edges().to_vec(),
            deg: g.degrees().iter().map(|&d| d as u32).collect(),
            objective,
            base,
        }
    }

    /// Optimistic potential of a partial orientation: undecided edges count
    /// towards both the in- and out-degree of their endpoints.
    fn bound(&self, od: &[u32], id: &[u32], undecided: &[u32]) -> u64 {
        let n = self.n;
        let mut sum = 0u64;
        for u in 0..n {
            let ou = od[u] + undecided[u];
            let iu = id[u] + undecided[u];
            for v in u + 1..n {
                let ov = od[v] + undecided[v];
                let iv = id[v] + undecided[v];
                let b = self.base[u * n + v];
                let forward = ou.min(iv).min(b);
                let backward = ov.min(iu).min(b);
                let mut pair = (forward + backward).min(self.deg[u].min(self.deg[v]));
                if self.objective == Measure::Edge {
                    pair = pair.min(b);
                }
                sum += pair as u64;
            }
        }
        sum
    }
}

/// Upper bound on `K` over all completions of a partial orientation
/// (`None` = undecided edge), as used for pruning.
pub fn optimistic_bound(g: &Graph, objective: Measure, partial: &[Option<bool>]) -> Result<u64> {
    if partial.len() != g.m() {
        return Err(Error::BitLength {
            expected: g.m(),
            got: partial.len(),
        });
    }
    check_order(g)?;
    let ev = Evaluator::new(g, objective);
    let model = BoundModel::new(g, &ev, objective);
    let n = g.n();
    let (mut od, mut id, mut und) = (vec![0; n], vec![0; n], vec![0; n]);
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        match partial[i] {
            None => {
                und[a] += 1;
                und[b] += 1;
            }
            Some(flip) => {
                let (t, h) = if flip { (b, a) } else { (a, b) };
                od[t] += 1;
                id[h] += 1;
            }
        }
    }
    Ok(model.bound(&od, &id, &und))
}

struct BnbWorker<'a> {
    model: &'a BoundModel,
    ev: Evaluator,
    od: Vec<u32>,
    id: Vec<u32>,
    und: Vec<u32>,
    floor: u64,
    best: Option<Best>,
    nodes: u64,
}

impl BnbWorker<'_> {
    fn assign(&mut self, e: usize, flip: bool, sign: i32) {
        let (a, b) = self.model.edges[e];
        let (t, h) = if flip { (b, a) } else { (a, b) };
        if sign > 0 {
            self.od[t] += 1;
            self.id[h] += 1;
            self.und[a] -= 1;
            self.und[b] -= 1;
        } else {
            self.od[t] -= 1;
            self.id[h] -= 1;
            self.und[a] += 1;
            self.und[b] += 1;
        }
    }

    fn threshold(&self) -> u64 {
        self.best.map_or(self.floor, |b| b.total + 1)
    }

    fn dfs(&mut self, depth: usize, mask: u64) {
        self.nodes += 1;
        let m = self.model.edges.len();
        if depth == m {
            if let Some(t) = self.ev.total_mask(mask, self.threshold()) {
                self.best = Some(Best { total: t, mask, count: 1 });
            }
            return;
        }
        if self.model.bound(&self.od, &self.id, &self.und) < self.threshold() {
            return;
        }
        for flip in [false, true] {
            self.assign(depth, flip, 1);
            self.dfs(depth + 1, mask | (flip as u64) << depth);
            self.assign(depth, flip, -1);
        }
    }
}

/// Depth-first branch-and-bound over edge directions in index order, pruning
/// with the optimistic potential.
pub fn search_branch_and_bound(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    check_order(g)?;
    let m = g.m();
    let cap = opts.max_edges.unwrap_or(DEFAULT_BNB_CAP).min(63);
    if m > cap {
        return Err(Error::EdgeCapExceeded {
            method: "branch_and_bound",
            m,
            cap,
            suggestion: "local_search",
        });
    }
    if m <= 1 {
        let mut opts = opts.clone();
        opts.max_edges = None;
        let mut r = search_exhaustive(g, &opts)?;
        r.method = Method::BranchAndBound;
        r.optimum_count = None;
        return Ok(r);
    }
    let proto = Evaluator::new(g, opts.objective);
    let model = BoundModel::new(g, &proto, opts.objective);
    // A deterministic heuristic value is a valid floor: some orientation with
    // edge 0 undisturbed attains it.
    let floor = {
        let mut warm = opts.clone();
        warm.restarts = 2;
        warm.threads = Some(1);
        warm.seed = 0;
        local_search_core(g, &warm, &proto).0.total
    };
    let block_bits = (m - 1).min(BLOCK_BITS);
    let start_depth = 1 + block_bits;
    let n = g.n();
    let (best, nodes) = with_pool(opts.threads, || {
        (0..1u64 << block_bits)
            .into_par_iter()
            .map(|block| {
                let mut w = BnbWorker {
                    model: &model,
                    ev: proto.clone(),
                    od: vec![0; n],
                    id: vec![0; n],
                    und: g.degrees().iter().map(|&d| d as u32).collect(),
                    floor,
                    best: None,
                    nodes: 0,
                };
                let mask = block << 1;
                for e in 0..start_depth {
                    w.assign(e, mask >> e & 1 == 1, 1);
                }
                w.dfs(start_depth, mask);
                (w.best, w.nodes)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold((None, 0u64), |(b, c), (x, k)| (merge_best(b, x), c + k))
    })?;
    let best = best.expect("the floor is attained by some orientation");
    Ok(SearchResult::build(
        Method::BranchAndBound,
        opts.objective,
        g,
        best.total,
        mask_bits(best.mask, m),
        None,
        nodes,
    ))
}

struct LocalBest {
    total: u64,
    bits: Vec<bool>,
    evaluations: u64,
}

fn restart_seed(seed: u64, restart: usize) -> u64 {
    seed ^ (restart as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn local_search_core(g: &Graph, opts: &SearchOptions, proto: &Evaluator) -> (LocalBest, Vec<String>) {
    let m = g.m();
    let plateau_cap = opts.max_plateau.unwrap_or(4 * m.max(1));
    let strong_start = strong_orientation(g).ok();
    let mut warnings = Vec::new();
    if strong_start.is_none() {
        warnings.push("graph is not 2-edge-connected; local search starts from random orientations".into());
    }
    let restarts = opts.restarts.max(1);
    let runs: Vec<LocalBest> = (0..restarts)
        .into_par_iter()
        .map_init(
            || proto.clone(),
            |ev, r| {
                let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(opts.seed, r));
                let mut bits: Vec<bool> = match (&strong_start, r) {
                    (Some(o), 0) => o.bits().to_vec(),
                    _ => (0..m).map(|_| rng.gen()).collect(),
                };
                let mut evaluations = 1;
                let mut current = ev.total_bits(&bits, 0).expect("threshold 0");
                let mut plateau = 0;
                while m > 0 && plateau < plateau_cap {
                    let i = rng.gen_range(0..m);
                    bits[i] = !bits[i];
                    evaluations += 1;
                    match ev.total_bits(&bits, current + 1) {
                        Some(t) => {
                            current = t;
                            plateau = 0;
                        }
                        None => {
                            bits[i] = !bits[i];
                            plateau += 1;
                        }
                    }
                }
                // Canonical representative of the reversal pair.
                if bits.first() == Some(&true) {
                    bits.iter_mut().for_each(|b| *b = !*b);
                }
                LocalBest {
                    total: current,
                    bits,
                    evaluations,
                }
            },
        )
        .collect();
    let evaluations = runs.iter().map(|r| r.evaluations).sum();
    let mut best = runs
        .into_iter()
        .reduce(|a, b| {
            if b.total > a.total || (b.total == a.total && b.bits < a.bits) {
                b
            } else {
                a
            }
        })
        .expect("at least one restart");
    best.evaluations = evaluations;
    (best, warnings)
}

/// Seeded hill climbing by single-arc reversals with random restarts.
/// The first restart starts from [`strong_orientation`] when one exists.
pub fn search_local(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    check_order(g)?;
    let proto = Evaluator::new(g, opts.objective);
    let (best, warnings) = with_pool(opts.threads, || local_search_core(g, opts, &proto))?;
    let n = g.n() as u64;
    let witness = Orientation::new(g.clone(), best.bits).expect("length");
    let witness_strong = witness.to_digraph().is_strong();
    Ok(SearchResult {
        method: Method::LocalSearch,
        objective: opts.objective,
        best_total: best.total,
        best_average: Rational::ratio(best.total, n * (n - 1)),
        witness,
        optimum_count: None,
        nodes_explored: best.evaluations,
        certified: false,
        witness_strong,
        warnings,
    })
}

/// Strong orientation of a 2-edge-connected graph: depth-first search from
/// vertex 0, tree edges directed away from the root, back edges towards it.
pub fn strong_orientation(g: &Graph) -> Result<Orientation> {
    if !g.is_connected() {
        return Err(Error::precondition("graph is disconnected"));
    }
    if let Some(&b) = g.bridges().first() {
        let (x, y) = g.edges()[b];
        return Err(Error::precondition(format!("edge ({x}, {y}) is a bridge")));
    }
    if g.n() < 2 {
        return Err(Error::TooFewVertices { n: g.n(), needed: 2 });
    }
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut arcs = Vec::with_capacity(g.m());
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    let mut oriented = vec![false; g.m()];
    while let Some(top) = stack.last_mut() {
        let (v, pos) = *top;
        if pos == g.degree(v) {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let w = g.neighbors(v)[pos];
        let e = g.edge_index(v, w).unwrap();
        if oriented[e] {
            continue;
        }
        oriented[e] = true;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            arcs.push((v, w));
            stack.push((w, 0));
        } else {
            // w is an ancestor of v.
            arcs.push((v, w));
        }
    }
    Orientation::from_arcs(g.clone(), &arcs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// An arc from a source to a sink; reversing it strictly improves `K`.
    SourceToSinkArc { tail: Vertex, head: Vertex },
}

/// Necessary conditions every optimal orientation of a connected graph of
/// order at least three satisfies. A non-empty list proves `o` is not optimal.
pub fn check_optimality_necessary_conditions(g: &Graph, o: &Orientation) -> Result<Vec<Violation>> {
    if o.graph() != g {
        return Err(Error::precondition("orientation does not orient this graph"));
    }
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::precondition("needs a connected graph of order at least 3"));
    }
    Ok(o.to_digraph()
        .source_to_sink_arcs()
        .map(|(tail, head)| Violation::SourceToSinkArc { tail, head })
        .collect())
}
