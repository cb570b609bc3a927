//! Exhaustive small-scale agreement between the direct and cut-set
//! factor-criticality checkers, and matching exactness on larger randoms.

mod common;

use cdcrit::census::Census;
use cdcrit::matching::{favaron_check, is_factor_critical, max_matching};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn checkers_agree_exhaustively_up_to_7() {
    let census = Census::build(7).unwrap();
    let mut runs = 0usize;
    census.for_each_up_to(7, |g| {
        for ell in 0..=2usize {
            if g.n() % 2 != ell % 2 || g.min_degree() < ell + 1 {
                continue;
            }
            runs += 1;
            let direct = is_factor_critical(g, ell).unwrap();
            let cutset = favaron_check(g, ell).unwrap();
            assert_eq!(direct.holds, cutset.holds, "{g:?} at ell = {ell}");
        }
    });
    assert!(runs > 300, "expected plenty of parity/degree-eligible runs");
}

#[test]
fn matching_exact_on_larger_randoms() {
    let mut rng = StdRng::seed_from_u64(0xabcdef);
    for _ in 0..60 {
        let n = rng.gen_range(8..=12);
        let g = common::random_graph(&mut rng, n, 0.35);
        assert_eq!(max_matching(&g).size, common::brute_max_matching(&g));
    }
}

#[test]
fn counterexample_sets_genuinely_defeat_matchings() {
    // whenever the direct checker reports a failing set, re-check it
    let mut rng = StdRng::seed_from_u64(0xfa11);
    let mut refuted = 0usize;
    for _ in 0..80 {
        let n = 1 + 2 * rng.gen_range(2..=4); // odd n
        let g = common::random_connected_graph(&mut rng, n, 0.3);
        let v = is_factor_critical(&g, 1).unwrap();
        if let Some(s) = v.counterexample_set {
            refuted += 1;
            let (h, _) = g.without(&s).unwrap();
            assert!(!max_matching(&h).is_perfect);
        }
    }
    assert!(refuted > 0);
}
