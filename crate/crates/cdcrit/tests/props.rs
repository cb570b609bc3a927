//! Property tests for the graph substrate and the solver.

mod common;

use cdcrit::gamma::{gamma_c_bruteforce, gamma_c_value};
use cdcrit::graph::Graph;
use cdcrit::{canon, graph6};
use proptest::prelude::*;

/// Strategy: a graph on 2..=max vertices with independent edge bits.
fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (2..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_commutes_with_edge_addition(g in arb_graph(9)) {
        let non_edges = g.non_edges();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[0];
        let lhs = g.add_edge(u, v).unwrap().complement();
        let rhs = g.complement().remove_edge(u, v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph(9)) {
        let (h, map) = g.induced(&g.full_set()).unwrap();
        prop_assert_eq!(&h, &g);
        for v in 0..g.n() {
            prop_assert_eq!(map[v], Some(v));
        }
    }

    #[test]
    fn distance_satisfies_triangle_inequality(g in arb_graph(9), seed in any::<u64>()) {
        prop_assume!(g.is_connected());
        let n = g.n();
        let (a, b, c) = (
            (seed % n as u64) as usize,
            ((seed >> 8) % n as u64) as usize,
            ((seed >> 16) % n as u64) as usize,
        );
        let d = |x, y| g.distance(x, y).unwrap();
        prop_assert!(d(a, c) <= d(a, b) + d(b, c));
        prop_assert_eq!(d(a, b), d(b, a));
    }

    #[test]
    fn graph6_roundtrips(g in arb_graph(12)) {
        let s = graph6::encode(&g);
        let h = graph6::decode(&s).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(graph6::encode(&h), s);
    }

    #[test]
    fn solver_matches_bruteforce(g in arb_graph(8)) {
        prop_assume!(g.is_connected());
        let fast = gamma_c_value(&g).unwrap();
        let slow = gamma_c_bruteforce(&g, false).unwrap().gamma_c;
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn gamma_monotone_under_any_edge_addition(g in arb_graph(8), seed in any::<u64>()) {
        prop_assume!(g.is_connected());
        let non_edges = g.non_edges();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[(seed % non_edges.len() as u64) as usize];
        let aug = g.add_edge(u, v).unwrap();
        prop_assert!(gamma_c_value(&aug).unwrap() <= gamma_c_value(&g).unwrap());
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant(g in arb_graph(8), seed in any::<u64>()) {
        // relabel by a seeded permutation and compare canonical codes
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let relabeled = {
            let edges: Vec<(usize, usize)> =
                g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            Graph::build(n, &edges).unwrap()
        };
        prop_assert_eq!(
            canon::canonical_code(&g).unwrap().0,
            canon::canonical_code(&relabeled).unwrap().0
        );
    }
}

#[test]
fn canonical_classes_match_naive_isomorphism_on_small_graphs() {
    // all graphs on 5 vertices: codes equal iff naively isomorphic
    let mut graphs = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    for mask in 0..1u32 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        graphs.push(Graph::build(5, &edges).unwrap());
    }
    // sample pairs deterministically (the full quadratic set is 1M pairs)
    for (i, a) in graphs.iter().enumerate().step_by(7) {
        for b in graphs.iter().skip(i % 13).step_by(101) {
            let by_canon =
                canon::canonical_code(a).unwrap().0 == canon::canonical_code(b).unwrap().0;
            assert_eq!(by_canon, common::naive_isomorphic(a, b), "{a:?} vs {b:?}");
        }
    }
}
