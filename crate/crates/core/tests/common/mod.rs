//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's flow or search code: connectivity is the size of a
//! smallest separating vertex set (or arc cut), found by enumeration.
#![allow(dead_code)]

use avgconn::{Graph, Orientation};

/// Digraph as out-neighbour bitmasks, at most 64 vertices.
#[derive(Clone, Debug)]
pub struct Bits {
    pub out: Vec<u64>,
}

impl Bits {
    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Bits {
        let mut out = vec![0u64; n];
        for &(a, b) in arcs {
            out[a] |= 1 << b;
        }
        Bits { out }
    }

    pub fn symmetric(g: &Graph) -> Bits {
        let mut arcs = Vec::new();
        for &(a, b) in g.edges() {
            arcs.push((a, b));
            arcs.push((b, a));
        }
        Bits::from_arcs(g.n(), &arcs)
    }

    /// Bit `i` set means edge `(a, b)`, `a < b`, of the sorted edge list
    /// points `b -> a`.
    pub fn oriented(g: &Graph, mask: u64) -> Bits {
        let arcs: Vec<_> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        Bits::from_arcs(g.n(), &arcs)
    }

    pub fn of(o: &Orientation) -> Bits {
        Bits::from_arcs(o.graph().n(), &o.arcs())
    }

    pub fn out_degree(&self, v: usize) -> u32 {
        self.out[v].count_ones()
    }

    pub fn in_degree(&self, v: usize) -> u32 {
        self.out.iter().filter(|&&m| m >> v & 1 == 1).count() as u32
    }

    /// Is `t` reachable from `s` avoiding the vertices in `blocked`?
    pub fn reaches(&self, s: usize, t: usize, blocked: u64) -> bool {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.out[v];
            }
            next &= !seen & !blocked;
            if next >> t & 1 == 1 {
                return true;
            }
            seen |= next;
            frontier = next;
        }
        false
    }

    pub fn is_strong(&self) -> bool {
        let n = self.n();
        (1..n).all(|v| self.reaches(0, v, 0) && self.reaches(v, 0, 0))
    }

    /// Number of internally disjoint `u -> v` paths, by Menger: an arc `u -> v`
    /// contributes one path, the rest is the smallest vertex separator.
    pub fn kappa(&self, u: usize, v: usize) -> u32 {
        assert_ne!(u, v);
        let mut d = self.clone();
        let direct = d.out[u] >> v & 1;
        d.out[u] &= !(1 << v);
        let cap = d.out_degree(u).min(d.in_degree(v));
        let others: Vec<usize> = (0..d.n()).filter(|&x| x != u && x != v).collect();
        for size in 0..cap {
            if subsets(others.len(), size as usize).any(|s| !d.reaches(u, v, spread(s, &others))) {
                return direct as u32 + size;
            }
        }
        direct as u32 + cap
    }

    /// Number of arc-disjoint `u -> v` paths: the smallest arc cut, found by
    /// enumerating the vertex sets containing `u` but not `v`.
    pub fn lambda(&self, u: usize, v: usize) -> u32 {
        assert_ne!(u, v);
        let others: Vec<usize> = (0..self.n()).filter(|&x| x != u && x != v).collect();
        let mut best = u32::MAX;
        for s in 0..1u64 << others.len() {
            let side = spread(s, &others) | 1 << u;
            let cut: u32 = (0..self.n())
                .filter(|&x| side >> x & 1 == 1)
                .map(|x| (self.out[x] & !side).count_ones())
                .sum();
            best = best.min(cut);
        }
        best
    }

    /// Sum of `kappa` over ordered pairs.
    pub fn total(&self) -> u64 {
        let n = self.n();
        let mut t = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    t += self.kappa(u, v) as u64;
                }
            }
        }
        t
    }

    /// Sum of `kappa` over unordered pairs of a symmetric digraph.
    pub fn total_undirected(&self) -> u64 {
        let n = self.n();
        let mut t = 0;
        for u in 0..n {
            for v in u + 1..n {
                t += self.kappa(u, v) as u64;
            }
        }
        t
    }

    pub fn has_source_to_sink_arc(&self) -> bool {
        (0..self.n()).any(|a| {
            self.in_degree(a) == 0 && (0..self.n()).any(|b| self.out[a] >> b & 1 == 1 && self.out_degree(b) == 0)
        })
    }
}

/// Combinations of `size` out of `n` bits, as masks (Gosper's hack).
pub fn subsets(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut cur = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut done = size > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

fn spread(s: u64, verts: &[usize]) -> u64 {
    let mut m = 0;
    for (i, &x) in verts.iter().enumerate() {
        if s >> i & 1 == 1 {
            m |= 1 << x;
        }
    }
    m
}

/// Maximum total connectivity over all orientations, with the number of
/// orientations attaining it.
pub fn exhaustive_max(g: &Graph) -> (u64, u64) {
    assert!(g.m() <= 20);
    let mut best = 0;
    let mut count = 0;
    for mask in 0..1u64 << g.m() {
        let t = Bits::oriented(g, mask).total();
        if t > best {
            best = t;
            count = 0;
        }
        if t == best {
            count += 1;
        }
    }
    (best, count)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `p / q` in lowest terms.
pub fn reduce(p: u64, q: u64) -> (u64, u64) {
    let g = gcd(p, q);
    (p / g, q / g)
}

/// Directed average `total / (n (n - 1))` as a reduced pair.
pub fn directed_average(total: u64, n: usize) -> (u64, u64) {
    reduce(total, (n * (n - 1)) as u64)
}

pub fn rational_pair(r: &avgconn::Rational) -> (u64, u64) {
    let (p, q) = r.as_i64_pair().expect("small rational");
    (p as u64, q as u64)
}

pub fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Connected after deleting any single vertex, and at least 3 vertices.
pub fn is_2_connected(g: &Graph) -> bool {
    let b = Bits::symmetric(g);
    let n = g.n();
    if n < 3 {
        return false;
    }
    (0..n).all(|x| {
        let alive: Vec<usize> = (0..n).filter(|&v| v != x).collect();
        alive[1..].iter().all(|&v| b.reaches(alive[0], v, 1 << x))
    })
}

/// Every labelled triangulation of the convex `n`-gon, as edge lists.
pub fn polygon_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
        if j - i < 2 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in i + 1..j {
            for left in rec(i, k) {
                for right in rec(k, j) {
                    let mut e = left.clone();
                    e.extend(&right);
                    e.push((i, k));
                    e.push((k, j));
                    out.push(e);
                }
            }
        }
        out
    }
    rec(0, n - 1)
        .into_iter()
        .map(|mut e| {
            e.push((0, n - 1));
            for p in e.iter_mut() {
                if p.0 > p.1 {
                    *p = (p.1, p.0);
                }
            }
            e.sort();
            e.dedup();
            e
        })
        .collect()
}

/// Canonical form under all vertex permutations: the lexicographically
/// smallest sorted edge list. Only for small `n`.
pub fn canonical_form(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<_> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        e.sort();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Non-isomorphic polygon triangulations of order `n`.
pub fn mop_classes(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for e in polygon_triangulations(n) {
        if seen.insert(canonical_form(n, &e)) {
            out.push(Graph::from_edge_list(n, &e).unwrap());
        }
    }
    out
}
