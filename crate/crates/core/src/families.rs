//! Generators for the named graph families and their explicit orientations.
//!
//! Vertex numbering is fixed per family so that orientations have stable edge
//! indices:
//!
//! * `fan(n)`: hub 0, path `1..n`.
//! * `join_k2_empty(n)`: the `K_2` is `{0, 1}`.
//! * `complete_bipartite_2(n)`: parts `{0, 1}` and `2..n`.
//! * `h_st(s, t)`: block `i` (0-based, `0..2s`) holds `i*t .. i*t + t`.
//! * `mobius_ladder(n)`: rim `0..n`, rungs `i – i + n/2`.
//! * `lex_ladder(n)`: `v_i = i - 1`, `u_i = n + i - 1`.
//! * `min2conn_h(k)`: `v_i = i - 1` for `1 <= i <= 2k`, `w_i = 2k + i` for
//!   `0 <= i <= 2k`.
//! * `snake(k)`: path order `0..2k`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation, Vertex};
use crate::transforms::{mop_structure, two_tree_order};

fn at_least(name: &str, what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::param(format!("{name} needs {what} >= {min}, got {value}")));
    }
    Ok(())
}

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("generator emits a simple graph")
}

fn orient(g: Graph, arcs: &[(Vertex, Vertex)]) -> Orientation {
    Orientation::from_arcs(g, arcs).expect("generator emits a valid orientation")
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", "n", n, 1)?;
    let e: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Ok(build(n, &e))
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", "n", n, 2)?;
    let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(build(n, &e))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", "n", n, 3)?;
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &e))
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", "n", n, 1)?;
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &e))
}

/// `K_1 + P_{n-1}`.
pub fn fan(n: usize) -> Result<Graph> {
    at_least("fan", "n", n, 3)?;
    let mut e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    e.extend((1..n - 1).map(|i| (i, i + 1)));
    Ok(build(n, &e))
}

/// `K_2 + \bar K_{n-2}`.
pub fn join_k2_empty(n: usize) -> Result<Graph> {
    at_least("join_k2_empty", "n", n, 3)?;
    let mut e = vec![(0, 1)];
    e.extend((2..n).flat_map(|i| [(0, i), (1, i)]));
    Ok(build(n, &e))
}

/// `K_{2,n-2}`.
pub fn complete_bipartite_2(n: usize) -> Result<Graph> {
    at_least("complete_bipartite_2", "n", n, 4)?;
    let e: Vec<_> = (2..n).flat_map(|i| [(0, i), (1, i)]).collect();
    Ok(build(n, &e))
}

fn h_st_arcs(s: usize, t: usize) -> Result<Vec<(Vertex, Vertex)>> {
    at_least("h_st", "s", s, 2)?;
    at_least("h_st", "t", t, 2)?;
    let blocks = 2 * s;
    let mut arcs = Vec::new();
    for i in 0..blocks {
        let next = (i + 1) % blocks;
        for j in 0..t {
            for k in 0..t {
                if i % 2 == 1 && j == k {
                    continue;
                }
                arcs.push((i * t + j, next * t + k));
            }
        }
    }
    Ok(arcs)
}

/// The `(2t-1)`-regular graph on `2s` blocks of size `t`: consecutive blocks
/// are completely joined, minus the index-aligned matching after every odd
/// (0-based) block.
pub fn h_st(s: usize, t: usize) -> Result<Graph> {
    Ok(build(2 * s * t, &h_st_arcs(s, t)?))
}

/// `h_st` with every edge directed from block `i` to block `i + 1`.
pub fn d_st(s: usize, t: usize) -> Result<Orientation> {
    let arcs = h_st_arcs(s, t)?;
    Ok(orient(build(2 * s * t, &arcs), &arcs))
}

pub fn mobius_ladder(n: usize) -> Result<Graph> {
    at_least("mobius_ladder", "n", n, 6)?;
    if n % 2 == 1 {
        return Err(Error::param(format!("mobius_ladder needs even n, got {n}")));
    }
    let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend((0..n / 2).map(|i| (i, i + n / 2)));
    Ok(build(n, &e))
}

fn lex_ladder_arcs(n: usize) -> Result<Vec<(Vertex, Vertex)>> {
    at_least("lex_ladder", "n", n, 3)?;
    let v = |i: usize| i - 1;
    let u = |i: usize| n + i - 1;
    let mut arcs = Vec::new();
    for i in 1..n {
        arcs.extend([(v(i + 1), v(i)), (u(i + 1), u(i)), (u(i), v(i + 1)), (v(i), u(i + 1))]);
    }
    Ok(arcs)
}

/// `P_n ∘ 2K_1`: layers `{v_i, u_i}`, consecutive layers completely joined.
pub fn lex_ladder(n: usize) -> Result<Graph> {
    Ok(build(2 * n, &lex_ladder_arcs(n)?))
}

/// Both paths directed from layer `n` down to layer 1, cross edges directed
/// upwards.
pub fn lex_ladder_orientation(n: usize) -> Result<Orientation> {
    let arcs = lex_ladder_arcs(n)?;
    Ok(orient(build(2 * n, &arcs), &arcs))
}

fn min2conn_arcs(k: usize) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    at_least("min2conn_h", "n", k, 1)?;
    let top = 2 * k;
    let v = |i: usize| i - 1;
    let w = |i: usize| top + i;
    let mut arcs = Vec::new();
    for i in 1..top {
        arcs.extend([(v(i), w(i)), (w(i), v(i + 1))]);
    }
    arcs.extend([(v(2), w(0)), (w(0), v(1))]);
    arcs.extend([(v(top), w(top)), (w(top), v(top - 1))]);
    for i in 1..=top - 2 {
        arcs.push((v(i + 2), v(i)));
    }
    Ok((4 * k + 1, arcs))
}

/// Minimally 2-connected graph of order `4k + 1`: the path `v_1 … v_{2k}` with
/// every edge subdivided by `w_i`, end caps `w_0` on `v_1 v_2` and `w_{2k}` on
/// `v_{2k-1} v_{2k}`, and skip edges `v_i v_{i+2}`.
pub fn min2conn_h(k: usize) -> Result<Graph> {
    let (n, arcs) = min2conn_arcs(k)?;
    Ok(build(n, &arcs))
}

/// Subdivided path forward, caps backward, skip edges from high to low index.
pub fn min2conn_h_orientation(k: usize) -> Result<Orientation> {
    let (n, arcs) = min2conn_arcs(k)?;
    Ok(orient(build(n, &arcs), &arcs))
}

fn snake_arcs(k: usize) -> Result<Vec<(Vertex, Vertex)>> {
    at_least("snake", "n", k, 2)?;
    let n = 2 * k;
    let mut arcs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    arcs.extend((2..n).map(|i| (i, i - 2)));
    Ok(arcs)
}

/// Square of the path of order `2k`.
pub fn snake(k: usize) -> Result<Graph> {
    Ok(build(2 * k, &snake_arcs(k)?))
}

/// Path edges forward, both chord paths backward.
pub fn snake_orientation(k: usize) -> Result<Orientation> {
    let arcs = snake_arcs(k)?;
    Ok(orient(build(2 * k, &arcs), &arcs))
}

fn catalan_triangulations(lo: usize, hi: usize, out: &mut Vec<Vec<(Vertex, Vertex)>>) {
    if hi - lo < 2 {
        out.push(Vec::new());
        return;
    }
    for k in lo + 1..hi {
        let mut left = Vec::new();
        catalan_triangulations(lo, k, &mut left);
        let mut right = Vec::new();
        catalan_triangulations(k, hi, &mut right);
        for l in &left {
            for r in &right {
                let mut chords = Vec::with_capacity(l.len() + r.len() + 2);
                chords.extend_from_slice(l);
                chords.extend_from_slice(r);
                if k - lo > 1 {
                    chords.push((lo, k));
                }
                if hi - k > 1 {
                    chords.push((k, hi));
                }
                out.push(chords);
            }
        }
    }
}

fn mop_from_chords(n: usize, chords: &[(Vertex, Vertex)]) -> Graph {
    let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend_from_slice(chords);
    build(n, &e)
}

fn check_mop_order(n: usize) -> Result<()> {
    if !(3..=12).contains(&n) {
        return Err(Error::param(format!("enumerate_mops needs 3 <= n <= 12, got {n}")));
    }
    Ok(())
}

/// Every triangulation of the convex polygon `0, 1, …, n-1`, in a fixed
/// order (Catalan(n-2) graphs, isomorphic copies included).
pub fn enumerate_mops(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_mop_order(n)?;
    let mut all = Vec::new();
    catalan_triangulations(0, n - 1, &mut all);
    Ok(all.into_iter().map(move |c| mop_from_chords(n, &c)))
}

/// One representative per isomorphism class. The boundary cycle of a
/// maximal outerplanar graph is its unique Hamiltonian cycle, so two polygon
/// triangulations are isomorphic exactly when a dihedral symmetry of the
/// polygon maps one chord set onto the other.
pub fn enumerate_mops_canonical(n: usize) -> Result<Vec<Graph>> {
    check_mop_order(n)?;
    let mut all = Vec::new();
    catalan_triangulations(0, n - 1, &mut all);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for chords in all {
        let key = (0..n)
            .flat_map(|r| [(r, false), (r, true)])
            .map(|(r, flip)| {
                let map = |x: usize| if flip { (r + n - x) % n } else { (x + r) % n };
                let mut k: Vec<_> = chords
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (map(a), map(b));
                        (x.min(y), x.max(y))
                    })
                    .collect();
                k.sort_unstable();
                k
            })
            .min()
            .unwrap();
        if seen.insert(key) {
            out.push(mop_from_chords(n, &chords));
        }
    }
    Ok(out)
}

/// Intermediate graph with a red-edge attribute.
struct Colored {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    red_outer: Vec<(Vertex, Vertex)>,
}

impl Colored {
    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    /// Glues a lozenge `x, y, z, w` (no edge `zw`, red matching `xz`, `yw`)
    /// with `xz` identified with the given edge; returns the new red `(y, w)`.
    fn lozenge(&mut self, x: Vertex, z: Vertex) -> (Vertex, Vertex) {
        let y = self.vertex();
        let w = self.vertex();
        self.edges.extend([(x, y), (x, w), (y, z), (y, w)]);
        (y, w)
    }

    fn graph(&self) -> Graph {
        build(self.n, &self.edges)
    }
}

fn trigon_lozenge(i: usize) -> Colored {
    let mut c = Colored {
        n: 3,
        edges: vec![(0, 1), (1, 2), (2, 0)],
        red_outer: Vec::new(),
    };
    for (x, z) in [(0, 1), (1, 2), (2, 0)] {
        let red = c.lozenge(x, z);
        c.red_outer.push(red);
    }
    for _ in 0..i {
        let reds = std::mem::take(&mut c.red_outer);
        for (y, w) in reds {
            let r = c.vertex();
            c.edges.extend([(y, r), (w, r)]);
            let a = c.lozenge(w, r);
            let b = c.lozenge(r, y);
            c.red_outer.extend([a, b]);
        }
    }
    c
}

/// `G_i`: a trigon with a lozenge glued red-on-red to each side, then `i`
/// rounds of gluing a trigon plus two lozenges onto every red outer edge.
pub fn trigon_lozenge_g(i: usize) -> Result<Graph> {
    if i > 12 {
        return Err(Error::param(format!("trigon_lozenge_g: i = {i} is too large")));
    }
    Ok(trigon_lozenge(i).graph())
}

/// Red outer edges of `G_i`.
pub fn trigon_lozenge_red_edges(i: usize) -> Result<Vec<(Vertex, Vertex)>> {
    if i > 12 {
        return Err(Error::param(format!("trigon_lozenge_g: i = {i} is too large")));
    }
    Ok(trigon_lozenge(i).red_outer)
}

/// `M`: `f` with a new vertex attached to both ends of every outer edge.
pub fn mop_doubling_m(f: &Graph) -> Result<Graph> {
    let s = mop_structure(f).map_err(|e| Error::param(format!("f must be maximal outerplanar: {e}")))?;
    let n = f.n();
    let mut e = f.edges().to_vec();
    for (i, &(a, b)) in s.outer_edges.iter().enumerate() {
        e.extend([(a, n + i), (b, n + i)]);
    }
    Ok(build(2 * n, &e))
}

/// `H_i`: a copy of `mop_doubling_m(f)` glued onto every red outer edge of
/// `G_i`, identifying the lexicographically smallest outer edge of the copy
/// with the red edge.
pub fn trigon_lozenge_h(i: usize, f: &Graph) -> Result<Graph> {
    let m = mop_doubling_m(f)?;
    let (p, q) = mop_structure(&m)?.outer_edges[0];
    if i > 12 {
        return Err(Error::param(format!("trigon_lozenge_h: i = {i} is too large")));
    }
    let mut c = trigon_lozenge(i);
    for (y, w) in std::mem::take(&mut c.red_outer) {
        let mut map = vec![usize::MAX; m.n()];
        map[p] = y;
        map[q] = w;
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = c.vertex();
            }
        }
        for &(a, b) in m.edges() {
            if (a, b) != (p, q) {
                c.edges.push((map[a], map[b]));
            }
        }
    }
    Ok(c.graph())
}

/// Random 2-tree: starting from the edge `01`, each new vertex is joined to
/// both ends of a uniformly chosen existing edge.
pub fn two_tree_random(n: usize, seed: u64) -> Result<Graph> {
    at_least("two_tree_random", "n", n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        edges.extend([(a, v), (b, v)]);
    }
    Ok(build(n, &edges))
}

/// Strong orientation of a 2-tree: following a construction order, each new
/// vertex closes a directed triangle with the arc it is attached to.
pub fn two_tree_strong_orientation(g: &Graph) -> Result<Orientation> {
    let order = two_tree_order(g)?;
    let mut arcs = vec![order.base];
    let mut placed = std::collections::HashSet::from([order.base]);
    for &(v, a, b) in &order.steps {
        let (t, h) = if placed.contains(&(a, b)) { (a, b) } else { (b, a) };
        arcs.extend([(h, v), (v, t)]);
        placed.extend([(h, v), (v, t)]);
    }
    Orientation::from_arcs(g.clone(), &arcs)
}

/// A named family with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    Star { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Fan { n: usize },
    JoinK2Empty { n: usize },
    CompleteBipartite2 { n: usize },
    Hst { s: usize, t: usize },
    MobiusLadder { n: usize },
    LexLadder { n: usize },
    Min2connH { n: usize },
    Snake { n: usize },
    TrigonLozengeG { i: usize },
    TwoTreeRandom { n: usize, seed: u64 },
}

/// Output of [`generate`]: a graph and, for families with an explicit
/// construction, its orientation.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub orientation: Option<Orientation>,
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    use FamilySpec::*;
    let plain = |g: Result<Graph>| g.map(|graph| Generated { graph, orientation: None });
    let oriented = |o: Result<Orientation>| {
        o.map(|o| Generated {
            graph: o.graph().clone(),
            orientation: Some(o),
        })
    };
    match *spec {
        Complete { n } => plain(complete(n)),
        Star { n } => plain(star(n)),
        Cycle { n } => plain(cycle(n)),
        Path { n } => plain(path(n)),
        Fan { n } => plain(fan(n)),
        JoinK2Empty { n } => plain(join_k2_empty(n)),
        CompleteBipartite2 { n } => plain(complete_bipartite_2(n)),
        Hst { s, t } => oriented(d_st(s, t)),
        MobiusLadder { n } => plain(mobius_ladder(n)),
        LexLadder { n } => oriented(lex_ladder_orientation(n)),
        Min2connH { n } => oriented(min2conn_h_orientation(n)),
        Snake { n } => oriented(snake_orientation(n)),
        TrigonLozengeG { i } => plain(trigon_lozenge_g(i)),
        TwoTreeRandom { n, seed } => {
            let g = two_tree_random(n, seed)?;
            let o = two_tree_strong_orientation(&g)?;
            Ok(Generated {
                graph: g,
                orientation: Some(o),
            })
        }
    }
}
