//! Block decomposition against a brute-force block finder, and the
//! block-incidence facts the witness-set lemmas rely on.

mod common;

use cdcrit::census::Census;
use cdcrit::decompose::{decompose, odd_components};
use cdcrit::graph::Graph;
use cdcrit::VertexSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn agrees_with_bruteforce_on_census_up_to_7() {
    let census = Census::build(7).unwrap();
    census.for_each_up_to(7, |g| {
        let dec = decompose(g).unwrap();
        let got: Vec<Vec<usize>> = dec.blocks.iter().map(|b| b.to_vec()).collect();
        let want = common::brute_force_blocks(g);
        assert_eq!(got, want, "{g:?}");
    });
}

#[test]
fn agrees_with_bruteforce_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0xb10cc);
    for _ in 0..80 {
        let n = rng.gen_range(2..=8);
        let g = common::random_connected_graph(&mut rng, n, 0.25);
        let dec = decompose(&g).unwrap();
        let got: Vec<Vec<usize>> = dec.blocks.iter().map(|b| b.to_vec()).collect();
        assert_eq!(got, common::brute_force_blocks(&g), "{g:?}");
    }
}

#[test]
fn every_edge_in_exactly_one_block() {
    let mut rng = StdRng::seed_from_u64(0xed6e);
    for _ in 0..40 {
        let n = rng.gen_range(2..=9);
        let g = common::random_connected_graph(&mut rng, n, 0.3);
        let dec = decompose(&g).unwrap();
        for (u, v) in g.edges() {
            let holders = dec
                .blocks
                .iter()
                .filter(|b| b.contains(u) && b.contains(v))
                .count();
            assert_eq!(holders, 1, "{g:?} edge ({u},{v})");
        }
        // two blocks share at most one vertex, and shared vertices are cut
        for (i, a) in dec.blocks.iter().enumerate() {
            for b in &dec.blocks[i + 1..] {
                let shared = a.intersection(b);
                assert!(shared.len() <= 1);
                if let Some(v) = shared.min() {
                    assert!(dec.cut_vertices.contains(v));
                }
            }
        }
    }
}

#[test]
fn critical_corpus_cut_vertices_sit_in_two_blocks() {
    // for critical graphs each cut vertex separates exactly two components
    // and lies in exactly two blocks
    for spec in [
        "G1:k=5,pos=1,n=2,l=2,m=1+1,r=0",
        "G1:k=6,pos=2,n=2,l=2,m=1+1,r=0",
        "G2:k=5",
        "G2:k=6",
        "F:p=1,q=2,r=2",
        "F:p=0,q=2,r=3",
    ] {
        let inst: cdcrit::FamilySpec = spec.parse().unwrap();
        let g = inst.generate().unwrap().graph;
        let dec = decompose(&g).unwrap();
        for c in dec.cut_vertices.iter() {
            let incident = dec.blocks.iter().filter(|b| b.contains(c)).count();
            assert_eq!(incident, 2, "{spec}: cut vertex {c}");
            let rest = VertexSet::singleton(g.n(), c).complement();
            let (h, _) = g.induced(&rest).unwrap();
            assert_eq!(h.components().len(), 2, "{spec}: cut vertex {c}");
        }
        // block-incidence counting: summing per-block cut counts counts
        // each cut vertex once per incident block
        let total: usize = dec.block_cut_vertices.iter().map(|c| c.len()).sum();
        assert_eq!(total, 2 * dec.zeta, "{spec}");
    }
}

#[test]
fn cut_vertices_invariant_under_in_block_edge_addition() {
    // adding an edge between two non-adjacent vertices of one block leaves
    // the cut-vertex set unchanged (for arbitrary connected graphs)
    let mut rng = StdRng::seed_from_u64(0x9a11);
    for _ in 0..60 {
        let n = rng.gen_range(4..=9);
        let g = common::random_connected_graph(&mut rng, n, 0.25);
        let dec = decompose(&g).unwrap();
        for (x, y) in g.non_edges() {
            if !dec
                .blocks
                .iter()
                .any(|b| b.contains(x) && b.contains(y))
            {
                continue;
            }
            let aug = g.add_edge(x, y).unwrap();
            let aug_dec = decompose(&aug).unwrap();
            assert_eq!(
                dec.cut_vertices, aug_dec.cut_vertices,
                "{g:?} + ({x},{y})"
            );
        }
    }
}

#[test]
fn odd_components_parity() {
    let mut rng = StdRng::seed_from_u64(0x0dd1);
    for _ in 0..60 {
        let n = rng.gen_range(1..=10);
        let g = common::random_graph(&mut rng, n, 0.3);
        assert_eq!(
            odd_components(&g, &VertexSet::empty(n)) % 2,
            n % 2,
            "{g:?}"
        );
    }
}

#[test]
fn f_instance_block_statistics() {
    let inst: cdcrit::FamilySpec = "F:p=1,q=2,r=2".parse().unwrap();
    let g = inst.generate().unwrap().graph;
    let dec = decompose(&g).unwrap();
    assert_eq!(dec.zeta, 3);
    assert_eq!(dec.zeta0, 3);
    assert!(dec.block_cut_vertices.iter().any(|c| c.len() == 3));
}

#[test]
fn g1_zeta_examples() {
    let inst = cdcrit::families::gen_g1(5, 1, 2, &cdcrit::B22Params::new(vec![1, 1], 0)).unwrap();
    assert_eq!(decompose(&inst.graph).unwrap().zeta, 2);
    let g = Graph::cycle(7);
    assert_eq!(decompose(&g).unwrap().zeta, 0);
}
