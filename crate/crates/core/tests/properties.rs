mod common;

use avgconn::connectivity::{
    kappa_pair, kappa_pair_digraph, lambda_pair, lambda_pair_digraph, potential_digraph, potential_graph,
    report_graph, theta, total_connectivity, total_connectivity_with, Measure,
};
use avgconn::families;
use avgconn::graph::OrientationJson;
use avgconn::search::{optimistic_bound, search_exhaustive, search_local, strong_orientation, SearchOptions};
use avgconn::transforms::{inflation, is_maximal_outerplanar, lift_orientation, mop_structure, project_orientation};
use avgconn::{Graph, Orientation};
use common::*;
use proptest::prelude::*;

/// A simple graph on 2..=max_n vertices with an orientation mask.
fn graph_and_mask(max_n: usize) -> impl Strategy<Value = (Graph, u64)> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), any::<u64>())
        })
        .prop_map(|(n, keep, mask)| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<_> = all.zip(keep).filter(|p| p.1).map(|p| p.0).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let mask = if g.m() == 0 { 0 } else { mask & (u64::MAX >> (64 - g.m())) };
            (g, mask)
        })
}

fn connected(max_n: usize) -> impl Strategy<Value = (Graph, u64)> {
    graph_and_mask(max_n).prop_filter("connected", |(g, _)| g.n() >= 2 && g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn menger_agrees_with_separator_oracle((g, mask) in graph_and_mask(8)) {
        let o = Orientation::from_mask(g.clone(), mask);
        let d = o.to_digraph();
        let (bg, bd) = (Bits::symmetric(&g), Bits::of(&o));
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v { continue; }
                prop_assert_eq!(kappa_pair_digraph(&d, u, v).unwrap(), bd.kappa(u, v));
                prop_assert_eq!(lambda_pair_digraph(&d, u, v).unwrap(), bd.lambda(u, v));
                prop_assert_eq!(kappa_pair(&g, u, v).unwrap(), bg.kappa(u, v));
                prop_assert_eq!(lambda_pair(&g, u, v).unwrap(), bg.lambda(u, v));
            }
        }
    }

    #[test]
    fn totals_sit_below_both_potentials((g, mask) in graph_and_mask(9)) {
        let o = Orientation::from_mask(g.clone(), mask);
        let k = total_connectivity(&o);
        let pd = potential_digraph(&o.to_digraph()).unwrap().value;
        let pg = potential_graph(&g).unwrap().value;
        prop_assert!(k <= pd && pd <= pg, "{} {} {}", k, pd, pg);
    }

    #[test]
    fn directed_pairs_split_the_undirected_ones((g, mask) in graph_and_mask(9)) {
        let o = Orientation::from_mask(g.clone(), mask);
        let d = o.to_digraph();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let kg = kappa_pair(&g, u, v).unwrap();
                prop_assert!(theta(&d, u, v).unwrap() <= 2 * kg);
                let l = lambda_pair_digraph(&d, u, v).unwrap() + lambda_pair_digraph(&d, v, u).unwrap();
                prop_assert!(l <= lambda_pair(&g, u, v).unwrap());
            }
        }
    }

    #[test]
    fn reversal_preserves_the_total((g, mask) in graph_and_mask(8)) {
        let o = Orientation::from_mask(g, mask);
        prop_assert_eq!(total_connectivity(&o), total_connectivity(&o.reversed()));
        prop_assert_eq!(
            total_connectivity_with(&o, Measure::Edge),
            total_connectivity_with(&o.reversed(), Measure::Edge)
        );
    }

    #[test]
    fn encodings_round_trip((g, mask) in graph_and_mask(12)) {
        prop_assert_eq!(&Graph::from_graph6(&g.to_graph6()).unwrap(), &g);
        prop_assert_eq!(&Graph::from_edge_list_text(&g.to_edge_list_text()).unwrap(), &g);
        let o = Orientation::from_mask(g.clone(), mask);
        prop_assert_eq!(&Orientation::from_text(&o.to_text()).unwrap(), &o);
        prop_assert_eq!(&Orientation::from_bits_hex(g.clone(), &o.bits_hex()).unwrap(), &o);
        let json = serde_json::to_string(&o.to_json()).unwrap();
        let back: OrientationJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back.decode().unwrap(), &o);
        prop_assert_eq!(&Orientation::from_arcs(g, &o.arcs()).unwrap(), &o);
    }

    #[test]
    fn optimistic_bound_only_tightens((g, mask) in connected(7), order in any::<u64>()) {
        let m = g.m();
        let o = Orientation::from_mask(g.clone(), mask);
        let mut partial = vec![None; m];
        let mut prev = optimistic_bound(&g, Measure::Vertex, &partial).unwrap();
        let (best, _) = exhaustive_max(&g);
        prop_assert!(prev >= best);
        let mut idx: Vec<usize> = (0..m).collect();
        idx.sort_by_key(|&i| (order.rotate_left(i as u32) ^ i as u64).wrapping_mul(0x9E37_79B9));
        for i in idx {
            partial[i] = Some(o.bits()[i]);
            let b = optimistic_bound(&g, Measure::Vertex, &partial).unwrap();
            prop_assert!(b <= prev, "bound rose from {} to {}", prev, b);
            prev = b;
        }
        prop_assert!(prev >= total_connectivity(&o));
    }

    #[test]
    fn search_is_deterministic_across_threads((g, _) in connected(6)) {
        let one = search_exhaustive(&g, &SearchOptions::default().threads(1)).unwrap();
        let many = search_exhaustive(&g, &SearchOptions::default().threads(4)).unwrap();
        prop_assert_eq!(&one.witness, &many.witness);
        prop_assert_eq!(one.optimum_count, many.optimum_count);
        let (best, count) = exhaustive_max(&g);
        prop_assert_eq!(one.best_total, best);
        prop_assert_eq!(one.optimum_count, Some(count));
        let a = search_local(&g, &SearchOptions::default().seed(3).threads(1)).unwrap();
        let b = search_local(&g, &SearchOptions::default().seed(3).threads(3)).unwrap();
        prop_assert_eq!(&a.witness, &b.witness);
        prop_assert!(a.best_total <= best);
        prop_assert_eq!(total_connectivity(&a.witness), a.best_total);
    }

    #[test]
    fn strong_orientations_exist_exactly_without_bridges((g, _) in connected(9)) {
        match strong_orientation(&g) {
            Ok(o) => {
                prop_assert!(g.bridges().is_empty());
                prop_assert!(Bits::of(&o).is_strong());
            }
            Err(_) => prop_assert!(!g.bridges().is_empty() || g.n() < 2),
        }
    }

    #[test]
    fn lift_and_project_are_inverse(which in 0usize..3, mask in any::<u64>()) {
        let g = [
            families::complete(4).unwrap(),
            families::mobius_ladder(6).unwrap(),
            families::mobius_ladder(8).unwrap(),
        ][which].clone();
        let inf = inflation(&g).unwrap();
        prop_assert!(inf.graph.is_regular(3));
        prop_assert_eq!(inf.graph.n(), 3 * g.n());
        let d = Orientation::from_mask(g.clone(), mask & ((1 << g.m()) - 1));
        let lifted = lift_orientation(&inf, &d).unwrap();
        prop_assert_eq!(&project_orientation(&inf, &lifted).unwrap(), &d);
    }

    #[test]
    fn relabelled_triangulations_are_recognized(n in 3usize..=9, pick in any::<usize>(), seed in any::<u64>()) {
        let all = polygon_triangulations(n);
        let edges = &all[pick % all.len()];
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let relabelled: Vec<_> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let g = Graph::from_edge_list(n, &relabelled).unwrap();
        prop_assert!(is_maximal_outerplanar(&g));
        let st = mop_structure(&g).unwrap();
        prop_assert_eq!(st.faces.len(), n - 2);
        prop_assert_eq!(st.boundary.len(), n);
        // MOP average is 2 + (2n-6)/(n(n-1)) over unordered pairs
        let total = Bits::symmetric(&g).total_undirected();
        let nn = n as u64;
        prop_assert_eq!(reduce(total, binom2(nn)), reduce(2 * nn * (nn - 1) + 2 * nn - 6, nn * (nn - 1)));
        prop_assert_eq!(report_graph(&g).unwrap().total, total);
        if n >= 5 {
            let missing = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).find(|&(a, b)| !g.has_edge(a, b)).unwrap();
            let mut more = g.edges().to_vec();
            more.push(missing);
            prop_assert!(!is_maximal_outerplanar(&Graph::from_edge_list(n, &more).unwrap()));
        }
    }
}
