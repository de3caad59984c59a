//! Structural transforms and recognizers.
//!
//! * [`inflation`] replaces every vertex of a cubic graph by a triangle.
//! * [`subdivision`] replaces every edge by a path of length two.
//! * [`mop_structure`] recognizes maximal outerplanar graphs and recovers
//!   their boundary cycle, triangular faces and weak dual.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation, Vertex};

type Edge = (Vertex, Vertex);

/// `I(G)` together with its triangle map.
///
/// Vertex `v` of the base graph becomes the triangle `{3v, 3v+1, 3v+2}`;
/// corner `3v + k` faces the `k`-th smallest neighbour of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inflation {
    pub graph: Graph,
    pub base: Graph,
}

impl Inflation {
    /// Corner of `T_v` joined to the triangle of `x`.
    pub fn corner(&self, v: Vertex, x: Vertex) -> Option<Vertex> {
        let k = self.base.neighbors(v).iter().position(|&y| y == x)?;
        Some(3 * v + k)
    }

    /// Base vertex whose triangle contains `c`.
    pub fn owner(&self, c: Vertex) -> Vertex {
        c / 3
    }

    /// `(v, x, corner)` for every incidence, sorted.
    pub fn triangle_map(&self) -> Vec<(Vertex, Vertex, Vertex)> {
        (0..self.base.n())
            .flat_map(|v| {
                self.base
                    .neighbors(v)
                    .iter()
                    .enumerate()
                    .map(move |(k, &x)| (v, x, 3 * v + k))
            })
            .collect()
    }
}

/// The inflation of a connected cubic graph.
pub fn inflation(g: &Graph) -> Result<Inflation> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::precondition(format!(
            "inflation needs a cubic graph; vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    if !g.is_connected() {
        return Err(Error::precondition("inflation needs a connected graph"));
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(3 * n + g.m());
    for v in 0..n {
        edges.extend([(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]);
    }
    let corner = |v: Vertex, x: Vertex| 3 * v + g.neighbors(v).iter().position(|&y| y == x).unwrap();
    for &(a, b) in g.edges() {
        edges.push((corner(a, b), corner(b, a)));
    }
    Ok(Inflation {
        graph: Graph::from_edge_list(3 * n, &edges)?,
        base: g.clone(),
    })
}

/// Lifts an orientation of the base graph to its inflation: connecting edges
/// follow `d`, each triangle becomes the directed cycle `3v → 3v+1 → 3v+2 → 3v`.
pub fn lift_orientation(inf: &Inflation, d: &Orientation) -> Result<Orientation> {
    if d.graph() != &inf.base {
        return Err(Error::precondition("orientation is not of the inflated base graph"));
    }
    let mut arcs = Vec::with_capacity(inf.graph.m());
    for v in 0..inf.base.n() {
        arcs.extend([(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v + 2, 3 * v)]);
    }
    for (t, h) in d.arcs() {
        arcs.push((inf.corner(t, h).unwrap(), inf.corner(h, t).unwrap()));
    }
    Orientation::from_arcs(inf.graph.clone(), &arcs)
}

/// Projection of an orientation of `I(G)` onto `G`: `(v, x)` is an arc iff
/// the connecting edge is directed from `T_v` to `T_x`.
pub fn project_orientation(inf: &Inflation, f: &Orientation) -> Result<Orientation> {
    if f.graph() != &inf.graph {
        return Err(Error::precondition("orientation does not match the inflation"));
    }
    let fd = f.to_digraph();
    let arcs: Vec<_> = inf
        .base
        .edges()
        .iter()
        .map(|&(a, b)| {
            if fd.has_arc(inf.corner(a, b).unwrap(), inf.corner(b, a).unwrap()) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    Orientation::from_arcs(inf.base.clone(), &arcs)
}

/// `S(G)` with edge `i` of the base graph subdivided by vertex `n + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    pub base: Graph,
}

impl Subdivision {
    pub fn edge_vertex(&self, i: usize) -> Vertex {
        self.base.n() + i
    }
}

pub fn subdivision(g: &Graph) -> Subdivision {
    let n = g.n();
    let edges: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(a, b))| [(a, n + i), (b, n + i)])
        .collect();
    Subdivision {
        graph: Graph::from_edge_list(n + g.m(), &edges).expect("subdivision is simple"),
        base: g.clone(),
    }
}

/// Orients each subdivided path `a – w – b` along the arc of `d`.
pub fn subdivide_orientation(sub: &Subdivision, d: &Orientation) -> Result<Orientation> {
    if d.graph() != &sub.base {
        return Err(Error::precondition("orientation is not of the subdivided base graph"));
    }
    let arcs: Vec<_> = (0..sub.base.m())
        .flat_map(|i| {
            let (t, h) = d.arc(i);
            let w = sub.edge_vertex(i);
            [(t, w), (w, h)]
        })
        .collect();
    Orientation::from_arcs(sub.graph.clone(), &arcs)
}

/// 2-connected, and deleting any edge destroys 2-connectivity.
pub fn is_minimally_2_connected(g: &Graph) -> bool {
    g.is_2_connected() && (0..g.m()).all(|i| !g.without_edge(i).is_2_connected())
}

/// Construction order of a 2-tree: start from the edge `base`, then add each
/// `(v, a, b)` by joining new vertex `v` to the adjacent pair `a, b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTreeOrder {
    pub base: (Vertex, Vertex),
    pub steps: Vec<(Vertex, Vertex, Vertex)>,
}

/// Recovers a construction order by repeatedly deleting degree-2 vertices
/// whose neighbours are adjacent.
pub fn two_tree_order(g: &Graph) -> Result<TwoTreeOrder> {
    let n = g.n();
    if n < 2 || g.m() != 2 * n - 3 {
        return Err(Error::precondition("not a 2-tree: needs n >= 2 and m = 2n - 3"));
    }
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let mut work: Vec<Vertex> = (0..n).rev().collect();
    let mut removed = Vec::with_capacity(n - 2);
    let mut left = n;
    while left > 2 {
        let Some(v) = work.pop() else {
            return Err(Error::precondition("not a 2-tree: no removable degree-2 vertex"));
        };
        if !alive[v] || deg[v] != 2 {
            continue;
        }
        let mut nb = g.neighbors(v).iter().copied().filter(|&x| alive[x]);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        if !g.has_edge(a, b) {
            continue;
        }
        alive[v] = false;
        left -= 1;
        deg[a] -= 1;
        deg[b] -= 1;
        removed.push((v, a.min(b), a.max(b)));
        work.extend([a, b]);
    }
    let mut rest = (0..n).filter(|&v| alive[v]);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    if !g.has_edge(a, b) {
        return Err(Error::precondition("not a 2-tree: disconnected"));
    }
    removed.reverse();
    Ok(TwoTreeOrder {
        base: (a, b),
        steps: removed,
    })
}

pub fn is_2_tree(g: &Graph) -> bool {
    two_tree_order(g).is_ok()
}

/// Boundary cycle, faces and weak dual of a maximal outerplanar graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MopStructure {
    /// Hamiltonian boundary cycle, starting at 0, second vertex the smaller
    /// of its two cycle neighbours.
    pub boundary: Vec<Vertex>,
    /// Triangular inner faces, each sorted, list sorted.
    pub faces: Vec<[Vertex; 3]>,
    pub outer_edges: Vec<(Vertex, Vertex)>,
    pub chords: Vec<(Vertex, Vertex)>,
    /// Faces adjacent when they share an edge; node `i` is `faces[i]`.
    pub weak_dual: Graph,
}

/// Recognizes a maximal outerplanar graph: a 2-tree in which no edge lies on
/// more than two triangles. The boundary cycle is rebuilt by replaying the
/// elimination order.
pub fn mop_structure(g: &Graph) -> Result<MopStructure> {
    let n = g.n();
    if n < 3 {
        return Err(Error::precondition("maximal outerplanar graphs have order at least 3"));
    }
    let order = two_tree_order(g)?;
    let mut faces: Vec<[Vertex; 3]> = order
        .steps
        .iter()
        .map(|&(v, a, b)| {
            let mut f = [v, a, b];
            f.sort_unstable();
            f
        })
        .collect();
    faces.sort_unstable();
    let mut on_faces = vec![0u8; g.m()];
    for f in &faces {
        for (x, y) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            let e = g.edge_index(x, y).unwrap();
            on_faces[e] += 1;
            if on_faces[e] > 2 {
                return Err(Error::precondition(format!(
                    "not outerplanar: edge ({x}, {y}) lies on three triangles"
                )));
            }
        }
    }
    let (a, b) = order.base;
    let mut cycle = vec![a, b];
    for &(v, x, y) in &order.steps {
        let len = cycle.len();
        let pos = (0..len).find(|&i| {
            let (p, q) = (cycle[i], cycle[(i + 1) % len]);
            (p, q) == (x, y) || (p, q) == (y, x)
        });
        match pos {
            Some(i) => cycle.insert(i + 1, v),
            None => return Err(Error::precondition("not outerplanar: boundary cannot be completed")),
        }
    }
    let start = cycle.iter().position(|&v| v == 0).unwrap();
    cycle.rotate_left(start);
    if cycle[n - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    let mut outer_edges: Vec<_> = (0..n)
        .map(|i| {
            let (p, q) = (cycle[i], cycle[(i + 1) % n]);
            (p.min(q), p.max(q))
        })
        .collect();
    outer_edges.sort_unstable();
    let chords: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| outer_edges.binary_search(e).is_err())
        .collect();
    let mut dual_edges = Vec::new();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let shared = faces[i].iter().filter(|v| faces[j].contains(v)).count();
            if shared == 2 {
                dual_edges.push((i, j));
            }
        }
    }
    let weak_dual = Graph::from_edge_list(faces.len(), &dual_edges)?;
    Ok(MopStructure {
        boundary: cycle,
        faces,
        outer_edges,
        chords,
        weak_dual,
    })
}

pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    mop_structure(g).is_ok()
}

/// `(outer edges, chords)` of a maximal outerplanar graph.
pub fn chord_partition(g: &Graph) -> Result<(Vec<Edge>, Vec<Edge>)> {
    let s = mop_structure(g)?;
    Ok((s.outer_edges, s.chords))
}

/// `(A, B_2)`: vertices on a 4-cycle made of chords, and degree-2 vertices.
pub fn chord_square_sets(g: &Graph) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let (_, chords) = chord_partition(g)?;
    let n = g.n();
    let cg = Graph::from_edge_list(n, &chords)?;
    let mut on4 = vec![false; n];
    for a in 0..n {
        for &b in cg.neighbors(a) {
            for &c in cg.neighbors(b) {
                if c == a {
                    continue;
                }
                for &d in cg.neighbors(c) {
                    if d != a && d != b && cg.has_edge(d, a) {
                        for x in [a, b, c, d] {
                            on4[x] = true;
                        }
                    }
                }
            }
        }
    }
    let a: Vec<_> = (0..n).filter(|&v| on4[v]).collect();
    let b2: Vec<_> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    Ok((a, b2))
}

/// Components of the subgraph induced by vertices of degree above 2, or
/// `None` if that subgraph has a cycle.
pub fn high_degree_forest_components(g: &Graph) -> Option<usize> {
    let keep: Vec<bool> = (0..g.n()).map(|v| g.degree(v) > 2).collect();
    let h = g.induced(&keep);
    let c = h.component_count();
    (h.m() + c == h.n()).then_some(c)
}
