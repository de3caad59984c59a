//! Unit-capacity max-flow used for every Menger computation.
//!
//! A [`FlowNet`] is built once per (di)graph and queried for many source/sink
//! pairs; each query restores the residual capacities from a saved copy, so no
//! allocation happens per pair.

const NONE: u32 = u32::MAX;

#[derive(Default, Clone)]
pub(crate) struct FlowNet {
    nodes: usize,
    head: Vec<u32>,
    next: Vec<u32>,
    to: Vec<u32>,
    cap0: Vec<u8>,
    cap: Vec<u8>,
    pred: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<u32>,
}

impl FlowNet {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    fn reset_nodes(&mut self, nodes: usize) {
        self.nodes = nodes;
        self.head.clear();
        self.head.resize(nodes, NONE);
        self.next.clear();
        self.to.clear();
        self.cap0.clear();
        self.pred.resize(nodes, NONE);
        if self.stamp.len() < nodes {
            self.stamp.resize(nodes, 0);
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: u8) {
        let e = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap0.push(c);
        self.next.push(self.head[u]);
        self.head[u] = e;
        self.to.push(u as u32);
        self.cap0.push(0);
        self.next.push(self.head[v]);
        self.head[v] = e + 1;
    }

    fn finish(&mut self) {
        self.cap.clear();
        self.cap.extend_from_slice(&self.cap0);
    }

    /// Vertex-split network for internally disjoint paths: vertex `v` becomes
    /// `in(v) = 2v → out(v) = 2v + 1` with capacity one, and each arc `(a, b)`
    /// becomes `out(a) → in(b)` with capacity one. Query with
    /// [`split_source`] / [`split_sink`].
    pub(crate) fn build_vertex_split(&mut self, n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) {
        self.reset_nodes(2 * n);
        for v in 0..n {
            self.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (a, b) in arcs {
            self.add_arc(2 * a + 1, 2 * b, 1);
        }
        self.finish();
    }

    /// Plain network with one unit arc per given arc, for edge-disjoint paths.
    pub(crate) fn build_plain(&mut self, n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) {
        self.reset_nodes(n);
        for (a, b) in arcs {
            self.add_arc(a, b, 1);
        }
        self.finish();
    }

    /// Maximum flow from `s` to `t`, stopping early once `limit` is reached.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        debug_assert!(s < self.nodes && t < self.nodes && s != t);
        self.cap.copy_from_slice(&self.cap0);
        let mut flow = 0;
        while flow < limit && self.augment(s, t) {
            flow += 1;
        }
        flow
    }

    // One BFS augmentation along a shortest residual path; all capacities are
    // 0/1 so the bottleneck is always one.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|x| *x = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(s as u32);
        self.stamp[s] = epoch;
        let mut qi = 0;
        let mut found = false;
        'bfs: while qi < self.queue.len() {
            let u = self.queue[qi] as usize;
            qi += 1;
            let mut e = self.head[u];
            while e != NONE {
                let ei = e as usize;
                let v = self.to[ei] as usize;
                if self.cap[ei] > 0 && self.stamp[v] != epoch {
                    self.stamp[v] = epoch;
                    self.pred[v] = e;
                    if v == t {
                        found = true;
                        break 'bfs;
                    }
                    self.queue.push(v as u32);
                }
                e = self.next[ei];
            }
        }
        if !found {
            return false;
        }
        let mut v = t;
        while v != s {
            let e = self.pred[v] as usize;
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1] as usize;
        }
        true
    }
}

pub(crate) fn split_source(v: usize) -> usize {
    2 * v + 1
}

pub(crate) fn split_sink(v: usize) -> usize {
    2 * v
}
