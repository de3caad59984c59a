//! Pairwise and average connectivity of graphs and digraphs.
//!
//! Vertex connectivity `κ(u, v)` counts internally disjoint `u`–`v` paths and
//! edge connectivity `λ(u, v)` counts edge-disjoint ones; both are computed by
//! unit-capacity max-flow (vertex-split for `κ`). Graph averages run over
//! unordered pairs, digraph averages over ordered pairs.

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flow::{split_sink, split_source, FlowNet};
use crate::graph::{Digraph, Graph, Orientation, Vertex};
use crate::rational::Rational;

/// Which Menger quantity a computation counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// Internally disjoint paths (`κ`).
    #[default]
    Vertex,
    /// Edge-disjoint paths (`λ`).
    Edge,
}

impl std::str::FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(Measure::Vertex),
            "edge" => Ok(Measure::Edge),
            _ => Err(Error::param(format!("unknown objective {s:?} (vertex|edge)"))),
        }
    }
}

fn check_pair(n: usize, u: Vertex, v: Vertex) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::EqualVertices(u));
    }
    Ok(())
}

fn symmetric_arcs(g: &Graph) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    g.edges().iter().flat_map(|&(a, b)| [(a, b), (b, a)])
}

fn flow_between(net: &mut FlowNet, measure: Measure, u: Vertex, v: Vertex, limit: u32) -> u32 {
    match measure {
        Measure::Vertex => net.max_flow(split_source(u), split_sink(v), limit),
        Measure::Edge => net.max_flow(u, v, limit),
    }
}

fn build_net(net: &mut FlowNet, measure: Measure, n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) {
    match measure {
        Measure::Vertex => net.build_vertex_split(n, arcs),
        Measure::Edge => net.build_plain(n, arcs),
    }
}

/// Maximum number of internally disjoint `u`–`v` paths in `g`; 0 when `u` and
/// `v` lie in different components.
pub fn kappa_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<u32> {
    pair_graph(g, u, v, Measure::Vertex)
}

/// Maximum number of edge-disjoint `u`–`v` paths in `g`.
pub fn lambda_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<u32> {
    pair_graph(g, u, v, Measure::Edge)
}

fn pair_graph(g: &Graph, u: Vertex, v: Vertex, measure: Measure) -> Result<u32> {
    check_pair(g.n(), u, v)?;
    let mut net = FlowNet::new();
    build_net(&mut net, measure, g.n(), symmetric_arcs(g));
    let limit = g.degree(u).min(g.degree(v)) as u32;
    Ok(flow_between(&mut net, measure, u, v, limit))
}

/// Maximum number of internally disjoint directed `u`–`v` paths in `d`.
pub fn kappa_pair_digraph(d: &Digraph, u: Vertex, v: Vertex) -> Result<u32> {
    pair_digraph(d, u, v, Measure::Vertex)
}

/// Maximum number of arc-disjoint directed `u`–`v` paths in `d`.
pub fn lambda_pair_digraph(d: &Digraph, u: Vertex, v: Vertex) -> Result<u32> {
    pair_digraph(d, u, v, Measure::Edge)
}

fn pair_digraph(d: &Digraph, u: Vertex, v: Vertex, measure: Measure) -> Result<u32> {
    check_pair(d.n(), u, v)?;
    let mut net = FlowNet::new();
    build_net(&mut net, measure, d.n(), d.arcs().iter().copied());
    let limit = d.out_neighbors(u).len().min(d.in_neighbors(v).len()) as u32;
    Ok(flow_between(&mut net, measure, u, v, limit))
}

/// `κ_D(u, v) + κ_D(v, u)`.
pub fn theta(d: &Digraph, u: Vertex, v: Vertex) -> Result<u32> {
    Ok(kappa_pair_digraph(d, u, v)? + kappa_pair_digraph(d, v, u)?)
}

/// All-pairs connectivity table with its exact total and average.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct ConnectivityReport {
    pub n: usize,
    /// `(u, v, value)`; `u < v` for graphs, every ordered pair for digraphs.
    pub pairs: Vec<(Vertex, Vertex, u32)>,
    pub total: u64,
    pub average: Rational,
}

impl Serialize for ConnectivityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Pairs<'a>(&'a [(Vertex, Vertex, u32)]);
        impl Serialize for Pairs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for &(u, v, k) in self.0 {
                    seq.serialize_element(&[u as u64, v as u64, k as u64])?;
                }
                seq.end()
            }
        }
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ConnectivityReport", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("pairs", &Pairs(&self.pairs))?;
        st.serialize_field("total", &self.total)?;
        st.serialize_field("average", &self.average)?;
        st.end()
    }
}

impl ConnectivityReport {
    /// Value for `(u, v)`; graph reports also answer `(v, u)`.
    pub fn value(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let find = |x, y| self.pairs.iter().find(|p| (p.0, p.1) == (x, y)).map(|p| p.2);
        find(u, v).or_else(|| find(v, u))
    }
}

fn ensure_pairs(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, needed: 2 });
    }
    Ok(())
}

/// `κ(u, v)` over all unordered pairs; the average is `K(G) / C(n, 2)`.
pub fn report_graph(g: &Graph) -> Result<ConnectivityReport> {
    report_graph_with(g, Measure::Vertex)
}

pub fn report_graph_with(g: &Graph, measure: Measure) -> Result<ConnectivityReport> {
    let n = g.n();
    ensure_pairs(n)?;
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let values = pair_values(n, symmetric_arcs(g).collect(), measure, &pairs, |u, v| {
        g.degree(u).min(g.degree(v)) as u32
    });
    Ok(assemble(n, pairs, values, (n * (n - 1) / 2) as u64))
}

/// `κ_D(u, v)` over all ordered pairs; the average is `K(D) / (n(n − 1))`.
pub fn report_digraph(d: &Digraph) -> Result<ConnectivityReport> {
    report_digraph_with(d, Measure::Vertex)
}

pub fn report_digraph_with(d: &Digraph, measure: Measure) -> Result<ConnectivityReport> {
    let n = d.n();
    ensure_pairs(n)?;
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let values = pair_values(n, d.arcs().to_vec(), measure, &pairs, |u, v| {
        d.out_neighbors(u).len().min(d.in_neighbors(v).len()) as u32
    });
    Ok(assemble(n, pairs, values, (n * (n - 1)) as u64))
}

fn pair_values(
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    measure: Measure,
    pairs: &[(Vertex, Vertex)],
    limit: impl Fn(Vertex, Vertex) -> u32 + Sync,
) -> Vec<u32> {
    let mut proto = FlowNet::new();
    build_net(&mut proto, measure, n, arcs);
    pairs
        .par_iter()
        .map_init(
            || proto.clone(),
            |net, &(u, v)| flow_between(net, measure, u, v, limit(u, v)),
        )
        .collect()
}

fn assemble(n: usize, pairs: Vec<(Vertex, Vertex)>, values: Vec<u32>, denom: u64) -> ConnectivityReport {
    let total: u64 = values.iter().map(|&k| k as u64).sum();
    ConnectivityReport {
        n,
        pairs: pairs.into_iter().zip(values).map(|((u, v), k)| (u, v, k)).collect(),
        total,
        average: Rational::ratio(total, denom),
    }
}

/// Total connectivity `K(D)` of an orientation.
pub fn total_connectivity(o: &Orientation) -> u64 {
    total_connectivity_with(o, Measure::Vertex)
}

pub fn total_connectivity_with(o: &Orientation, measure: Measure) -> u64 {
    if o.graph().n() < 2 {
        return 0;
    }
    report_digraph_with(&o.to_digraph(), measure).expect("n >= 2").total
}

/// Degree-based cap on total connectivity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialReport {
    pub value: u64,
    /// `(u, v, cap)` for every unordered pair `u < v`.
    pub per_pair_caps: Vec<(Vertex, Vertex, u32)>,
}

/// `P(G) = Σ_{u<v} min(deg u, deg v)`.
pub fn potential_graph(g: &Graph) -> Result<PotentialReport> {
    ensure_pairs(g.n())?;
    let deg = g.degrees();
    Ok(potential_from(g.n(), |u, v| deg[u].min(deg[v]) as u32))
}

/// `P(D) = Σ_{u<v} min(od u, id v) + min(od v, id u)`.
pub fn potential_digraph(d: &Digraph) -> Result<PotentialReport> {
    ensure_pairs(d.n())?;
    let io = d.in_out_degrees();
    Ok(potential_from(d.n(), |u, v| {
        (io[u].1.min(io[v].0) + io[v].1.min(io[u].0)) as u32
    }))
}

fn potential_from(n: usize, cap: impl Fn(Vertex, Vertex) -> u32) -> PotentialReport {
    let per_pair_caps: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| (u, v, cap(u, v)))
        .collect();
    PotentialReport {
        value: per_pair_caps.iter().map(|p| p.2 as u64).sum(),
        per_pair_caps,
    }
}

/// A pair is full when `θ(u, v)` reaches `min(deg_G u, deg_G v)`.
pub fn is_full_pair(o: &Orientation, u: Vertex, v: Vertex) -> Result<bool> {
    let g = o.graph();
    check_pair(g.n(), u, v)?;
    let d = o.to_digraph();
    Ok(theta(&d, u, v)? as usize == g.degree(u).min(g.degree(v)))
}

/// Unordered full pairs of an orientation.
pub fn full_pairs(o: &Orientation) -> Vec<(Vertex, Vertex)> {
    let g = o.graph();
    let n = g.n();
    if n < 2 {
        return Vec::new();
    }
    let rep = report_digraph(&o.to_digraph()).expect("n >= 2");
    let mut table = vec![0u32; n * n];
    for &(u, v, k) in &rep.pairs {
        table[u * n + v] = k;
    }
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| (table[u * n + v] + table[v * n + u]) as usize == g.degree(u).min(g.degree(v)))
        .collect()
}

pub fn count_full_pairs(o: &Orientation) -> usize {
    full_pairs(o).len()
}

/// Every pair is full, i.e. `K(D) = P(G)`.
pub fn is_saturated(o: &Orientation) -> bool {
    let g = o.graph();
    g.n() >= 2 && count_full_pairs(o) == g.n() * (g.n() - 1) / 2
}

pub fn is_strong(d: &Digraph) -> bool {
    d.is_strong()
}

pub fn has_source_to_sink_arc(d: &Digraph) -> bool {
    d.has_source_to_sink_arc()
}

/// Fast repeated evaluation of `K(D)` (or its edge analogue) over many
/// orientations of one base graph.
///
/// Each ordered pair is capped by `min(od u, id v)` and by the undirected
/// connectivity of the base graph; the caps make both the per-pair flow and
/// the whole evaluation stop early once a requested threshold is out of reach.
#[derive(Clone)]
pub(crate) struct Evaluator {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    measure: Measure,
    base_cap: Vec<u32>,
    net: FlowNet,
    od: Vec<u32>,
    id: Vec<u32>,
    arcs: Vec<(Vertex, Vertex)>,
    pub(crate) flows: u64,
}

impl Evaluator {
    pub(crate) fn new(g: &Graph, measure: Measure) -> Evaluator {
        let n = g.n();
        let mut base_cap = vec![0u32; n * n];
        if n >= 2 {
            let rep = report_graph_with(g, measure).expect("n >= 2");
            for &(u, v, k) in &rep.pairs {
                base_cap[u * n + v] = k;
                base_cap[v * n + u] = k;
            }
        }
        Evaluator {
            n,
            edges: g.edges().to_vec(),
            measure,
            base_cap,
            net: FlowNet::new(),
            od: vec![0; n],
            id: vec![0; n],
            arcs: Vec::with_capacity(g.m()),
            flows: 0,
        }
    }

    /// Undirected connectivity of the base pair, symmetric.
    pub(crate) fn base_cap(&self, u: Vertex, v: Vertex) -> u32 {
        self.base_cap[u * self.n + v]
    }

    pub(crate) fn total_mask(&mut self, mask: u64, at_least: u64) -> Option<u64> {
        self.eval(|i| mask >> i & 1 == 1, at_least)
    }

    pub(crate) fn total_bits(&mut self, bits: &[bool], at_least: u64) -> Option<u64> {
        self.eval(|i| bits[i], at_least)
    }

    /// Exact total if it is at least `at_least`, otherwise `None` (possibly
    /// without finishing the computation).
    fn eval(&mut self, flipped: impl Fn(usize) -> bool, at_least: u64) -> Option<u64> {
        let n = self.n;
        self.od.iter_mut().for_each(|x| *x = 0);
        self.id.iter_mut().for_each(|x| *x = 0);
        self.arcs.clear();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let (t, h) = if flipped(i) { (b, a) } else { (a, b) };
            self.od[t] += 1;
            self.id[h] += 1;
            self.arcs.push((t, h));
        }
        let cap = |s: &Self, u: usize, v: usize| s.od[u].min(s.id[v]).min(s.base_cap[u * n + v]);
        let mut remaining: u64 = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    remaining += cap(self, u, v) as u64;
                }
            }
        }
        if remaining < at_least {
            return None;
        }
        build_net(&mut self.net, self.measure, n, self.arcs.iter().copied());
        let mut total = 0u64;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let c = cap(self, u, v);
                if c == 0 {
                    continue;
                }
                self.flows += 1;
                let k = flow_between(&mut self.net, self.measure, u, v, c);
                total += k as u64;
                remaining -= c as u64;
                if total + remaining < at_least {
                    return None;
                }
            }
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        g(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    #[test]
    fn kappa_examples() {
        let k4 = complete(4);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(kappa_pair(&k4, u, v).unwrap(), 3);
                }
            }
        }
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(kappa_pair(&p3, 0, 2).unwrap(), 1);
        assert_eq!(kappa_pair(&p3, 0, 0), Err(Error::EqualVertices(0)));
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(kappa_pair(&split, 0, 3).unwrap(), 0);
    }

    #[test]
    fn digraph_examples() {
        let cyc = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    assert_eq!(kappa_pair_digraph(&cyc, u, v).unwrap(), 1);
                    assert_eq!(theta(&cyc, u, v).unwrap(), 2);
                }
            }
        }
        let arc = Digraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(kappa_pair_digraph(&arc, 0, 1).unwrap(), 1);
        assert_eq!(kappa_pair_digraph(&arc, 1, 0).unwrap(), 0);
        assert_eq!(report_digraph(&cyc).unwrap().average, Rational::from_integer(1));
    }

    #[test]
    fn lambda_examples() {
        let c5 = cycle(5);
        assert_eq!(lambda_pair(&c5, 0, 2).unwrap(), 2);
        let tree = g(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(lambda_pair(&tree, u, v).unwrap(), 1);
            }
        }
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(lambda_pair(&bowtie, 0, 4).unwrap(), 2);
        assert_eq!(kappa_pair(&bowtie, 0, 4).unwrap(), 1);
    }

    #[test]
    fn tree_average_is_one() {
        let tree = g(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
        assert_eq!(report_graph(&tree).unwrap().average, Rational::one());
    }

    #[test]
    fn small_orders_rejected() {
        assert!(matches!(report_graph(&Graph::empty(1)), Err(Error::TooFewVertices { .. })));
        assert!(matches!(report_graph(&Graph::empty(0)), Err(Error::TooFewVertices { .. })));
        assert!(potential_graph(&Graph::empty(1)).is_err());
    }

    #[test]
    fn potentials() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let p = potential_graph(&star).unwrap();
        assert_eq!(p.value, 6);
        assert_eq!(p.per_pair_caps.len(), 6);
        assert_eq!(potential_graph(&cycle(7)).unwrap().value, 2 * 21);
        let cyc = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(potential_digraph(&cyc).unwrap().value, 6);
    }

    #[test]
    fn full_pairs_on_directed_triangle() {
        let c3 = cycle(3);
        let o = Orientation::from_arcs(c3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_full_pair(&o, 0, 1).unwrap());
        assert_eq!(count_full_pairs(&o), 3);
        assert!(is_saturated(&o));
        let transitive = o.flip(1);
        assert!(!is_saturated(&transitive));
    }

    #[test]
    fn evaluator_matches_report_and_respects_threshold() {
        let k4 = complete(4);
        let mut ev = Evaluator::new(&k4, Measure::Vertex);
        for mask in 0..64u64 {
            let o = Orientation::from_mask(k4.clone(), mask);
            let exact = total_connectivity(&o);
            assert_eq!(ev.total_mask(mask, 0), Some(exact));
            assert_eq!(ev.total_mask(mask, exact), Some(exact));
            assert_eq!(ev.total_mask(mask, exact + 1), None);
        }
    }
}
