//! Undirected graphs, digraphs and orientations.
//!
//! Vertices are dense indices `0..n`. A [`Graph`] keeps its edges as
//! `(a, b)` pairs with `a < b`, sorted lexicographically; that order is the
//! coordinate system of every orientation bit vector in the crate. Bit `i` of
//! an [`Orientation`] is `false` when edge `i = (a, b)` is directed `a → b`
//! and `true` when it is directed `b → a`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds the canonical graph on `n` vertices from an unordered pair list.
    ///
    /// Pairs may be given in either order; `(1, 0)` and `(0, 1)` both name the
    /// same edge, so listing both is rejected as a duplicate.
    pub fn from_edge_list(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph::from_sorted_unchecked(n, edges))
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_unchecked(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees in non-decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.adj.iter().all(|l| l.len() == r)
    }

    /// The graph with edge `i` removed.
    pub fn without_edge(&self, i: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Graph::from_sorted_unchecked(self.n, edges)
    }

    /// The subgraph induced by `keep` (true = kept), relabelled densely in
    /// increasing vertex order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        let mut k = 0;
        for v in 0..self.n {
            if keep[v] {
                map[v] = k;
                k += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        Graph::from_sorted_unchecked(k, edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let pairs: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edge_list(self.n, &pairs).expect("permutation of a simple graph is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True iff the graph is connected, has at least three vertices and no
    /// cut vertex.
    pub fn is_2_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && !self.cut_structure().articulation.iter().any(|&a| a)
    }

    /// True iff the graph is connected, has at least two vertices and no bridge.
    pub fn is_2_edge_connected(&self) -> bool {
        self.n >= 2 && self.is_connected() && self.cut_structure().bridges.is_empty()
    }

    /// Indices of bridge edges.
    pub fn bridges(&self) -> Vec<usize> {
        self.cut_structure().bridges
    }

    pub fn cut_vertices(&self) -> Vec<Vertex> {
        let cs = self.cut_structure();
        (0..self.n).filter(|&v| cs.articulation[v]).collect()
    }

    // Iterative low-link DFS over the whole graph.
    fn cut_structure(&self) -> CutStructure {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut articulation = vec![false; n];
        let mut bridges = Vec::new();
        let mut time = 0;
        // (vertex, parent edge index, next neighbor position)
        let mut stack: Vec<(Vertex, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(top) = stack.last_mut() {
                let (v, pe, pos) = *top;
                if pos < self.adj[v].len() {
                    top.2 += 1;
                    let w = self.adj[v][pos];
                    let e = self.edge_index(v, w).unwrap();
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(pe);
                        }
                        if p != root && low[v] >= disc[p] {
                            articulation[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                articulation[root] = true;
            }
        }
        bridges.sort_unstable();
        CutStructure { articulation, bridges }
    }

    /// Breadth-first distances from `s` (`usize::MAX` when unreachable).
    pub fn bfs_distances(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut q = VecDeque::new();
        dist[s] = 0;
        q.push_back(s);
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of triangles containing edge `(a, b)`.
    pub fn common_neighbor_count(&self, a: Vertex, b: Vertex) -> usize {
        let (x, y) = (&self.adj[a], &self.adj[b]);
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    /// Exact isomorphism test by degree-pruned backtracking. Intended for the
    /// small graphs handled by the exact searches.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m() != other.m() || self.degree_sequence() != other.degree_sequence() {
            return false;
        }
        let n = self.n;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        // Assign high-degree vertices first; they constrain the most.
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        fn extend(
            k: usize,
            order: &[Vertex],
            g: &Graph,
            h: &Graph,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let v = order[k];
            for w in 0..h.n {
                if used[w] || h.degree(w) != g.degree(v) {
                    continue;
                }
                let consistent = order[..k].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
                if !consistent {
                    continue;
                }
                map[v] = w;
                used[w] = true;
                if extend(k + 1, order, g, h, map, used) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
            false
        }
        extend(0, &order, self, other, &mut map, &mut used)
    }

    // ---- graph6 -------------------------------------------------------

    /// Parses a graph6 string. An optional `>>graph6<<` header and surrounding
    /// whitespace are accepted.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let trimmed = text.trim();
        let (body, base) = match trimmed.strip_prefix(">>graph6<<") {
            Some(rest) => (rest.as_bytes(), ">>graph6<<".len()),
            None => (trimmed.as_bytes(), 0),
        };
        let err = |offset: usize, reason: &str| Error::Graph6 {
            offset: base + offset,
            reason: reason.to_string(),
        };
        if body.is_empty() {
            return Err(err(0, "empty input"));
        }
        if let Some(i) = body.iter().position(|&c| !(63..=126).contains(&c)) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
        let (n, header_len) = if body[0] != 126 {
            ((body[0] - 63) as usize, 1)
        } else if body.len() >= 2 && body[1] != 126 {
            if body.len() < 4 {
                return Err(err(body.len(), "truncated 18-bit order header"));
            }
            (sixes(&body[1..4]), 4)
        } else {
            if body.len() < 8 {
                return Err(err(body.len(), "truncated 36-bit order header"));
            }
            (sixes(&body[2..8]), 8)
        };
        let bit_count = n * n.saturating_sub(1) / 2;
        let need = bit_count.div_ceil(6);
        let data = &body[header_len..];
        if data.len() != need {
            return Err(err(
                header_len + data.len().min(need),
                &format!("expected {need} adjacency bytes for order {n}, found {}", data.len()),
            ));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = data[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        if need > 0 {
            let used = bit_count - (need - 1) * 6;
            let pad_mask = (1u8 << (6 - used)) - 1;
            if (data[need - 1] - 63) & pad_mask != 0 {
                return Err(err(header_len + need - 1, "non-zero padding bits"));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            out.push(126);
            out.push(126);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    // ---- plain edge list ------------------------------------------------

    /// Parses `n m` followed by `m` lines `a b`. Blank lines and lines starting
    /// with `#` are ignored.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let (n, pairs) = parse_pair_list(text)?;
        Graph::from_edge_list(n, &pairs)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

fn sixes(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

struct CutStructure {
    articulation: Vec<bool>,
    bridges: Vec<usize>,
}

/// Shared parser for `n m` + pair lines; returns the order and the raw pairs.
pub(crate) fn parse_pair_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing \"n m\" header".into(),
    })?;
    let nums = parse_ints(hline, header)?;
    if nums.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            reason: "header must be \"n m\"".into(),
        });
    }
    let (n, m) = (nums[0], nums[1]);
    let mut pairs = Vec::with_capacity(m);
    for (line, l) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                reason: format!("more than the declared {m} pairs"),
            });
        }
        let v = parse_ints(line, l)?;
        if v.len() != 2 {
            return Err(Error::Parse {
                line,
                reason: "expected two vertex indices".into(),
            });
        }
        pairs.push((v[0], v[1]));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            reason: format!("declared {m} pairs, found {}", pairs.len()),
        });
    }
    Ok((n, pairs))
}

fn parse_ints(line: usize, l: &str) -> Result<Vec<usize>> {
    l.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                reason: format!("not a non-negative integer: {t:?}"),
            })
        })
        .collect()
}

/// Directed graph on `0..n` without loops or repeated arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<Digraph> {
        for &(a, b) in arcs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
        }
        let mut sorted = arcs.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        Ok(Digraph::from_arcs_unchecked(n, arcs.to_vec()))
    }

    fn from_arcs_unchecked(n: usize, arcs: Vec<(Vertex, Vertex)>) -> Digraph {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            out_adj[a].push(b);
            in_adj[b].push(a);
        }
        Digraph {
            n,
            arcs,
            out_adj,
            in_adj,
        }
    }

    /// Parses the `n m` + `a b` text format, reading each line as an arc.
    pub fn from_arc_list_text(text: &str) -> Result<Digraph> {
        let (n, pairs) = parse_pair_list(text)?;
        Digraph::new(n, &pairs)
    }

    pub fn to_arc_list_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.arcs.len());
        for &(a, b) in &self.arcs {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn has_arc(&self, a: Vertex, b: Vertex) -> bool {
        self.out_adj[a].contains(&b)
    }

    /// Per-vertex `(in-degree, out-degree)`.
    pub fn in_out_degrees(&self) -> Vec<(usize, usize)> {
        (0..self.n).map(|v| (self.in_adj[v].len(), self.out_adj[v].len())).collect()
    }

    pub fn reverse(&self) -> Digraph {
        Digraph::from_arcs_unchecked(self.n, self.arcs.iter().map(|&(a, b)| (b, a)).collect())
    }

    /// Strongly connected components (Kosaraju), as a component id per vertex
    /// together with the number of components.
    pub fn strong_components(&self) -> (Vec<usize>, usize) {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut finish = Vec::with_capacity(n);
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (v, pos) = *top;
                if pos < self.out_adj[v].len() {
                    top.1 += 1;
                    let w = self.out_adj[v][pos];
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    finish.push(v);
                    stack.pop();
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for &s in finish.iter().rev() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.in_adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_strong(&self) -> bool {
        self.n >= 1 && self.strong_components().1 == 1
    }

    /// True iff some arc leaves a vertex of in-degree 0 and enters a vertex of
    /// out-degree 0.
    pub fn has_source_to_sink_arc(&self) -> bool {
        self.source_to_sink_arcs().next().is_some()
    }

    pub fn source_to_sink_arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.arcs
            .iter()
            .copied()
            .filter(|&(a, b)| self.in_adj[a].is_empty() && self.out_adj[b].is_empty())
    }
}

/// A graph together with a direction for each of its edges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    graph: Graph,
    bits: Vec<bool>,
}

impl Orientation {
    pub fn new(graph: Graph, bits: Vec<bool>) -> Result<Orientation> {
        if bits.len() != graph.m() {
            return Err(Error::BitLength {
                expected: graph.m(),
                got: bits.len(),
            });
        }
        Ok(Orientation { graph, bits })
    }

    /// Edge `i` is flipped iff bit `i` of `mask` is set. Requires `m ≤ 64`.
    pub fn from_mask(graph: Graph, mask: u64) -> Orientation {
        assert!(graph.m() <= 64, "mask orientation needs m <= 64");
        let bits = (0..graph.m()).map(|i| mask >> i & 1 == 1).collect();
        Orientation { graph, bits }
    }

    /// Builds the orientation of `graph` that agrees with the given arcs.
    /// Every edge must appear exactly once, in either direction.
    pub fn from_arcs(graph: Graph, arcs: &[(Vertex, Vertex)]) -> Result<Orientation> {
        let mut bits = vec![None; graph.m()];
        for &(a, b) in arcs {
            let i = graph
                .edge_index(a, b)
                .ok_or_else(|| Error::precondition(format!("arc ({a}, {b}) is not an edge of the graph")))?;
            if bits[i].is_some() {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            bits[i] = Some(a > b);
        }
        let bits = bits
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                b.ok_or_else(|| {
                    let (x, y) = graph.edges()[i];
                    Error::precondition(format!("edge ({x}, {y}) has no direction"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation { graph, bits })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn mask(&self) -> Option<u64> {
        (self.bits.len() <= 64).then(|| {
            self.bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i)
        })
    }

    /// Directed version of edge `i` as `(tail, head)`.
    pub fn arc(&self, i: usize) -> (Vertex, Vertex) {
        let (a, b) = self.graph.edges()[i];
        if self.bits[i] {
            (b, a)
        } else {
            (a, b)
        }
    }

    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.bits.len()).map(|i| self.arc(i)).collect()
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_arcs_unchecked(self.graph.n(), self.arcs())
    }

    pub fn flip(&self, i: usize) -> Orientation {
        let mut o = self.clone();
        o.bits[i] = !o.bits[i];
        o
    }

    /// The orientation with every arc reversed.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            graph: self.graph.clone(),
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Lowercase hex of the bit vector packed most-significant-bit first:
    /// edge 0 is the top bit of the first byte; trailing pad bits are zero.
    pub fn bits_hex(&self) -> String {
        let mut bytes = vec![0u8; self.bits.len().div_ceil(8)];
        for (i, &b) in self.bits.iter().enumerate() {
            if b {
                bytes[i / 8] |= 0x80 >> (i % 8);
            }
        }
        hex::encode(bytes)
    }

    pub fn from_bits_hex(graph: Graph, text: &str) -> Result<Orientation> {
        let m = graph.m();
        let bytes = hex::decode(text.trim()).map_err(|e| Error::Encoding(format!("bad hex: {e}")))?;
        if bytes.len() != m.div_ceil(8) {
            return Err(Error::Encoding(format!(
                "expected {} hex digits for {m} edges, got {}",
                2 * m.div_ceil(8),
                text.trim().len()
            )));
        }
        let bits: Vec<bool> = (0..m).map(|i| bytes[i / 8] & (0x80 >> (i % 8)) != 0).collect();
        for i in m..bytes.len() * 8 {
            if bytes[i / 8] & (0x80 >> (i % 8)) != 0 {
                return Err(Error::Encoding("non-zero padding bits".into()));
            }
        }
        Ok(Orientation { graph, bits })
    }

    /// One-line text form `<graph6> <hex bits>`.
    pub fn to_text(&self) -> String {
        format!("{} {}", self.graph.to_graph6(), self.bits_hex())
    }

    /// Parses `<graph6> <hex>`, or an edge list followed by a line `o <hex>`.
    pub fn from_text(text: &str) -> Result<Orientation> {
        let trimmed = text.trim();
        let last = trimmed.lines().last().unwrap_or("").trim();
        if let Some(hex) = last.strip_prefix("o ") {
            let body: Vec<&str> = trimmed.lines().collect();
            let g = Graph::from_edge_list_text(&body[..body.len() - 1].join("\n"))?;
            return Orientation::from_bits_hex(g, hex);
        }
        let mut parts = trimmed.split_whitespace();
        let g6 = parts.next().ok_or_else(|| Error::Encoding("empty orientation".into()))?;
        let hex = parts.next().unwrap_or("");
        if parts.next().is_some() {
            return Err(Error::Encoding("expected \"<graph6> <hex>\"".into()));
        }
        Orientation::from_bits_hex(Graph::from_graph6(g6)?, hex)
    }

    pub fn to_json(&self) -> OrientationJson {
        OrientationJson {
            graph6: self.graph.to_graph6(),
            m: self.graph.m(),
            bits: self.bits_hex(),
        }
    }
}

/// Serialized orientation: base graph as graph6 plus hex bit vector.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrientationJson {
    pub graph6: String,
    pub m: usize,
    pub bits: String,
}

impl OrientationJson {
    pub fn decode(&self) -> Result<Orientation> {
        let g = Graph::from_graph6(&self.graph6)?;
        if g.m() != self.m {
            return Err(Error::BitLength {
                expected: g.m(),
                got: self.m,
            });
        }
        Orientation::from_bits_hex(g, &self.bits)
    }
}
