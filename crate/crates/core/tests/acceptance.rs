//! One line per acceptance criterion. Each check recomputes the claim with
//! the brute-force oracles in `common` where that is feasible, compares it
//! with the library, and also runs the library's own `repro` check.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use avgconn::connectivity::report_digraph;
use avgconn::families;
use avgconn::repro::{run_criterion, table1, ReproOptions};
use avgconn::search::{search_branch_and_bound, search_exhaustive, SearchOptions};
use avgconn::transforms::{inflation, is_minimally_2_connected, lift_orientation, subdivision};
use avgconn::{Graph, Orientation};
use common::*;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e2s(e: avgconn::Error) -> String {
    e.to_string()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn oracle_avg(o: &Orientation) -> (u64, u64) {
    directed_average(Bits::of(o).total(), o.graph().n())
}

fn table() -> Check {
    let want = [(1, 1), (13, 12), (23, 20), (7, 6), (25, 21), (67, 56)];
    let rows = table1(8, &opts()).map_err(e2s)?;
    ensure!(rows.len() == 6, "{} rows", rows.len());
    for (row, &(p, q)) in rows.iter().zip(&want) {
        let n = row.n;
        ensure!(rational_pair(&row.min) == (p, q), "n = {n}: library min {}", row.min);
        ensure!(row.fan_unique, "n = {n}: fan not the unique minimizer");
        let classes = mop_classes(n);
        ensure!(classes.len() == row.classes, "n = {n}: {} classes, oracle {}", row.classes, classes.len());
        let fan = families::fan(n).map_err(e2s)?;
        let n_pairs = (n * (n - 1)) as u64;
        if n <= 7 {
            let totals: Vec<u64> = classes.iter().map(|g| exhaustive_max(g).0).collect();
            let min = *totals.iter().min().unwrap();
            let at_min: Vec<&Graph> = classes.iter().zip(&totals).filter(|p| *p.1 == min).map(|p| p.0).collect();
            ensure!(reduce(min, n_pairs) == (p, q), "n = {n}: oracle min {min}/{n_pairs}");
            ensure!(at_min.len() == 1 && at_min[0].is_isomorphic(&fan), "n = {n}: oracle minimizers differ");
        } else {
            let (t, _) = exhaustive_max(&fan);
            ensure!(reduce(t, n_pairs) == (p, q), "fan({n}) oracle optimum {t}");
        }
    }
    Ok("mins 1, 13/12, 23/20, 7/6, 25/21, 67/56; fan unique; oracle agrees (full for n <= 7, fan for n = 8)".into())
}

fn k4() -> Check {
    let g = families::complete(4).map_err(e2s)?;
    let res = search_exhaustive(&g, &opts()).map_err(e2s)?;
    let (best, count) = exhaustive_max(&g);
    ensure!(best == 16 && res.best_total == 16, "oracle {best}, library {}", res.best_total);
    ensure!(rational_pair(&res.best_average) == (4, 3), "average {}", res.best_average);
    ensure!(res.optimum_count == Some(count), "count {:?} vs oracle {count}", res.optimum_count);
    for mask in 0..1u64 << g.m() {
        let b = Bits::oriented(&g, mask);
        if b.total() == 16 {
            ensure!(b.is_strong(), "optimal mask {mask:#x} not strong");
            ensure!(!b.has_source_to_sink_arc(), "optimal mask {mask:#x} has a source-to-sink arc");
        }
    }
    Ok(format!("K_max = 16, {count} optimal orientations, all strong, none with a source-to-sink arc"))
}

fn inflated_k4() -> Check {
    let k4 = families::complete(4).map_err(e2s)?;
    let inf = inflation(&k4).map_err(e2s)?;
    let g = &inf.graph;
    let bnb = search_branch_and_bound(g, &opts()).map_err(e2s)?;
    let ex = search_exhaustive(g, &SearchOptions { max_edges: Some(18), ..opts() }).map_err(e2s)?;
    ensure!(bnb.certified && ex.certified, "not certified");
    ensure!(bnb.best_total == 156 && ex.best_total == 156, "bnb {}, exhaustive {}", bnb.best_total, ex.best_total);
    ensure!(Bits::of(&bnb.witness).total() == 156, "oracle rejects the witness");
    let base = search_exhaustive(&k4, &opts()).map_err(e2s)?;
    let lifted = lift_orientation(&inf, &base.witness).map_err(e2s)?;
    let b = Bits::of(&lifted);
    ensure!(b.total() == 156, "lifted witness total {}", b.total());
    let mut full = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if b.kappa(u, v) + b.kappa(v, u) == g.degree(u).min(g.degree(v)) as u32 {
                full += 1;
            }
        }
    }
    ensure!(full == 24, "{full} full pairs");
    // 1 + (4n(n-1)(k-1) + 2n) / (3n(3n-1)) with n = 4, k = 4/3, over a common denominator 3.
    let n = 4u64;
    let (fp, fq) = reduce(3 * n * (3 * n - 1) * 3 + 4 * n * (n - 1) + 2 * n * 3, 3 * n * (3 * n - 1) * 3);
    ensure!((fp, fq) == (13, 11), "closed form gives {fp}/{fq}");
    Ok(format!(
        "13/11 certified by branch-and-bound ({} nodes) and exhaustive search; lifted witness attains it with 24 full pairs",
        bnb.nodes_explored
    ))
}

fn odd_regular() -> Check {
    for (n, want) in [(6usize, (13, 10)), (8, (9, 7))] {
        let g = families::mobius_ladder(n).map_err(e2s)?;
        ensure!(g.is_regular(3), "Mobius ladder {n} not cubic");
        // (r-1)/2 + n/(4(n-1)) with r = 3
        ensure!(reduce(4 * (n as u64 - 1) + n as u64, 4 * (n as u64 - 1)) == want, "bound for {n}");
        let res = search_branch_and_bound(&g, &opts()).map_err(e2s)?;
        let (t, _) = exhaustive_max(&g);
        ensure!(directed_average(t, n) == want, "Mobius {n}: oracle {t}");
        ensure!(rational_pair(&res.best_average) == want, "Mobius {n}: library {}", res.best_average);
    }
    let d = families::d_st(2, 2).map_err(e2s)?;
    let q3 = d.graph();
    ensure!(q3.n() == 8 && q3.is_regular(3) && q3.is_2_connected(), "D_22 not on a cubic 8-vertex graph");
    let cube = Graph::from_edge_list(
        8,
        &(0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ 1 << b)))
            .filter(|&(a, b)| a < b)
            .collect::<Vec<_>>(),
    )
    .map_err(e2s)?;
    ensure!(q3.is_isomorphic(&cube), "D_22 is not an orientation of Q_3");
    ensure!(oracle_avg(&d) == (9, 7), "oracle average of D_22 {:?}", oracle_avg(&d));
    let (t, _) = exhaustive_max(&cube);
    ensure!(directed_average(t, 8) == (9, 7), "Q_3 oracle optimum {t}");
    let res = search_exhaustive(q3, &opts()).map_err(e2s)?;
    ensure!(rational_pair(&res.best_average) == (9, 7), "Q_3 library optimum {}", res.best_average);
    Ok("Mobius(6) = 13/10, Mobius(8) = 9/7, D_22 = 9/7 optimal on Q_3".into())
}

fn h_st_pattern() -> Check {
    for (s, t) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let d = families::d_st(s, t).map_err(e2s)?;
        let b = Bits::of(&d);
        let n = d.graph().n();
        ensure!(n == 2 * s * t, "order {n}");
        let white = |v: usize| (v / t).is_multiple_of(2);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    let k = b.kappa(u, v) as usize;
                    let want = if white(u) && !white(v) { t } else { t - 1 };
                    ensure!(k == want, "D_{s},{t}: kappa({u}, {v}) = {k}, want {want}");
                }
            }
        }
    }
    Ok("(2,2), (2,3), (3,2): white to black t, otherwise t - 1".into())
}

fn min2conn_family() -> Check {
    for k in 2..=4u64 {
        let n = 4 * k + 1;
        let h = families::min2conn_h(k as usize).map_err(e2s)?;
        let d = families::min2conn_h_orientation(k as usize).map_err(e2s)?;
        ensure!(h.n() as u64 == n, "order {}", h.n());
        let kh = Bits::symmetric(&h).total_undirected();
        let bd = Bits::of(&d);
        let kd = bd.total();
        ensure!(kh == 2 * binom2(n) + 2 * k - 1, "K(H_{n}) = {kh}");
        ensure!(kd == 2 * binom2(n) + binom2(2 * k), "K(D_{n}) = {kd}");
        ensure!(bd.is_strong(), "D_{n} not strong");
        ensure!(is_2_connected(&h), "H_{n} not 2-connected");
        for i in 0..h.m() {
            ensure!(!is_2_connected(&h.without_edge(i)), "H_{n} stays 2-connected without edge {i}");
        }
        ensure!(is_minimally_2_connected(&h), "library disagrees on H_{n}");
    }
    Ok("orders 9, 13, 17".into())
}

fn subdivisions() -> Check {
    let rhs = |g: &Graph, k: u64| 2 * (binom2((g.n() + g.m()) as u64) - binom2(g.n() as u64)) + k;
    let graphs = [
        (families::complete(4).map_err(e2s)?, true),
        (families::cycle(5).map_err(e2s)?, true),
        (Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).map_err(e2s)?, true),
        (Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).map_err(e2s)?, false),
    ];
    for (g, two_conn) in &graphs {
        ensure!(is_2_connected(g) == *two_conn, "{} connectivity class", g.to_graph6());
        let ks = Bits::symmetric(&subdivision(g).graph).total_undirected();
        let r = rhs(g, Bits::symmetric(g).total_undirected());
        ensure!(if *two_conn { ks == r } else { ks < r }, "{}: K(S) = {ks}, rhs {r}", g.to_graph6());
    }
    let mut out = Vec::new();
    for g in [families::complete(4).map_err(e2s)?, families::cycle(5).map_err(e2s)?] {
        let s = subdivision(&g).graph;
        let (base, _) = exhaustive_max(&g);
        let (top, _) = exhaustive_max(&s);
        ensure!(top == rhs(&g, base), "{}: K_max(S) = {top}, rhs {}", g.to_graph6(), rhs(&g, base));
        let lib = search_exhaustive(&s, &opts()).map_err(e2s)?;
        ensure!(lib.best_total == top, "library K_max(S) = {}", lib.best_total);
        out.push(format!("K_max(S({})) = {top}", g.to_graph6()));
    }
    Ok(format!("equality on K_4, C_5, K_2,3; strict on the bowtie; {}", out.join(", ")))
}

fn stars() -> Check {
    for n in 4..=10u64 {
        let g = families::star(n as usize).map_err(e2s)?;
        let a = (n - 1) / 2;
        let b = n - 1 - a;
        let want = reduce(a * b + a + b, n * (n - 1));
        let (t, _) = exhaustive_max(&g);
        ensure!(directed_average(t, n as usize) == want, "K_1,{}: oracle {t}", n - 1);
        let res = search_exhaustive(&g, &opts()).map_err(e2s)?;
        ensure!(rational_pair(&res.best_average) == want, "K_1,{}: library {}", n - 1, res.best_average);
    }
    Ok("n = 4..10".into())
}

fn snakes() -> Check {
    for k in 2..=6u64 {
        let d = families::snake_orientation(k as usize).map_err(e2s)?;
        // 3/2 - (4k-3)/(2k(2k-1))
        let q = 2 * k * (2 * k - 1);
        let want = reduce(3 * k * (2 * k - 1) - (4 * k - 3), q);
        ensure!(oracle_avg(&d) == want, "k = {k}: oracle {:?}, want {want:?}", oracle_avg(&d));
        let lib = report_digraph(&d.to_digraph()).map_err(e2s)?.average;
        ensure!(rational_pair(&lib) == want, "k = {k}: library {lib}");
        if k <= 4 {
            let (t, _) = exhaustive_max(d.graph());
            ensure!(directed_average(t, d.graph().n()) == want, "k = {k}: optimum {t} beats the snake");
        }
    }
    Ok("values for k = 2..6, optimal for k = 2..4".into())
}

fn two_trees() -> Check {
    for seed in 0..50u64 {
        let n = 3 + (seed % 8) as usize;
        let g = families::two_tree_random(n, seed).map_err(e2s)?;
        ensure!(g.m() == 2 * n - 3 && is_2_connected(&g), "seed {seed}: not a 2-tree");
        let o = families::two_tree_strong_orientation(&g).map_err(e2s)?;
        let b = Bits::of(&o);
        ensure!(b.is_strong(), "seed {seed}: not strong");
        let t = b.total();
        ensure!(t >= (n * n - 3) as u64, "seed {seed}: K = {t} < {}", n * n - 3);
    }
    for n in 4..=7u64 {
        let g = families::join_k2_empty(n as usize).map_err(e2s)?;
        let (t, _) = exhaustive_max(&g);
        ensure!(t == n * (n - 1) + n - 3, "n = {n}: oracle K_max = {t}");
        let res = search_exhaustive(&g, &opts()).map_err(e2s)?;
        ensure!(res.best_total == t, "n = {n}: library {}", res.best_total);
    }
    Ok("50 random 2-trees of order 3..10, join optimum n = 4..7".into())
}

fn properties() -> Check {
    use avgconn::connectivity::{kappa_pair, kappa_pair_digraph, lambda_pair, lambda_pair_digraph};
    use avgconn::repro::{random_graph, random_orientation};
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let o = random_orientation(&mut rng, &g);
        let d = o.to_digraph();
        let (bg, bd) = (Bits::symmetric(&g), Bits::of(&o));
        let deg = g.degrees();
        let mut kd = 0;
        let (mut pd, mut pg) = (0, 0);
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let k = bd.kappa(u, v);
                ensure!(kappa_pair_digraph(&d, u, v).map_err(e2s)? == k, "directed kappa mismatch");
                ensure!(lambda_pair_digraph(&d, u, v).map_err(e2s)? == bd.lambda(u, v), "directed lambda mismatch");
                kd += k as u64;
                pd += bd.out_degree(u).min(bd.in_degree(v)) as u64;
                if u < v {
                    let kg = bg.kappa(u, v);
                    ensure!(kappa_pair(&g, u, v).map_err(e2s)? == kg, "kappa mismatch");
                    let lg = bg.lambda(u, v);
                    ensure!(lambda_pair(&g, u, v).map_err(e2s)? == lg, "lambda mismatch");
                    ensure!(k + bd.kappa(v, u) <= 2 * kg, "theta > 2 kappa");
                    ensure!(bd.lambda(u, v) + bd.lambda(v, u) <= lg, "directed lambdas exceed lambda");
                    pg += deg[u].min(deg[v]) as u64;
                    pairs += 1;
                }
            }
        }
        ensure!(kd <= pd && pd <= pg, "K(D) = {kd}, P(D) = {pd}, P(G) = {pg}");
    }
    Ok(format!("1000 random orientations, {pairs} pairs agree with the separator oracle"))
}

fn trends() -> Check {
    let k4 = families::complete(4).map_err(e2s)?;
    let (t, _) = exhaustive_max(&k4);
    ensure!(directed_average(t, 4) == (4, 3), "K_4");
    let inf = inflation(&k4).map_err(e2s)?;
    let (ip, iq) = rational_pair(&search_branch_and_bound(&inf.graph, &opts()).map_err(e2s)?.best_average);
    ensure!(ip * 3 < 4 * iq && ip > iq, "inflation step {ip}/{iq} does not move from 4/3 toward 1");
    let mut prev = (0u64, 1u64);
    for k in 2..=6u64 {
        let d = families::snake_orientation(k as usize).map_err(e2s)?;
        let cur = oracle_avg(&d);
        ensure!(cur.0 * prev.1 > prev.0 * cur.1 && 2 * cur.0 < 3 * cur.1, "snake k = {k} not increasing below 3/2");
        prev = cur;
    }
    let rows = table1(7, &opts()).map_err(e2s)?;
    for row in rows.iter().filter(|r| r.n >= 4) {
        let (p, q) = rational_pair(&row.min);
        ensure!(18 * p >= 19 * q, "n = {}: min {} below 19/18", row.n, row.min);
    }
    Ok("inflation 13/11 < 4/3, snake increasing below 3/2, minima for orders 4..7 at least 19/18".into())
}

fn main() -> ExitCode {
    let checks: [(u8, fn() -> Check); 12] = [
        (1, table),
        (2, k4),
        (3, inflated_k4),
        (4, odd_regular),
        (5, h_st_pattern),
        (6, min2conn_family),
        (7, subdivisions),
        (8, stars),
        (9, snakes),
        (10, two_trees),
        (11, properties),
        (12, trends),
    ];
    let repro = ReproOptions::default();
    let mut failed = 0;
    for (id, check) in checks {
        let start = Instant::now();
        let oracle = check();
        let library = run_criterion(id, &repro);
        let secs = start.elapsed().as_secs_f64();
        let verdict = match (&oracle, library.passed) {
            (Ok(detail), true) if id == 12 => {
                format!("PASS ({secs:.1}s) {}: {detail}; library: {}", library.title, library.detail)
            }
            (Ok(detail), true) => format!("PASS ({secs:.1}s) {}: {detail}", library.title),
            (Err(e), _) => format!("FAIL ({secs:.1}s) {}: oracle check: {e}", library.title),
            (Ok(_), false) => format!("FAIL ({secs:.1}s) {}: library check: {}", library.title, library.detail),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {id:>2}: {verdict}");
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
