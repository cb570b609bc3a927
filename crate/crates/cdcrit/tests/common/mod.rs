//! Shared test oracles, independent of the library implementations they
//! validate.

#![allow(dead_code)]

use cdcrit::graph::Graph;
use rand::rngs::StdRng;
use rand::Rng;

/// Erdos-Renyi style random graph with a deterministic RNG.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Random connected graph: a random spanning tree (random attachment)
/// unioned with G(n, p) edges.
pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::build(n, &edges).unwrap()
}

/// Exponential maximum matching by memoized search over vertex masks.
pub fn brute_max_matching(g: &Graph) -> usize {
    fn go(g: &Graph, mask: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let u = mask.trailing_zeros() as usize;
        let mut best = go(g, mask & !(1 << u), memo);
        for v in g.neighbors(u).iter() {
            if mask >> v & 1 == 1 {
                best = best.max(1 + go(g, mask & !(1 << u) & !(1 << v), memo));
            }
        }
        memo.insert(mask, best);
        best
    }
    assert!(g.n() <= 20);
    let mut memo = std::collections::HashMap::new();
    let full = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    go(g, full, &mut memo)
}

/// Blocks by brute force: maximal vertex sets (of size >= 2, or a lone
/// vertex) inducing a connected subgraph without an internal cut vertex.
pub fn brute_force_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 16);
    if n == 1 {
        return vec![vec![0]];
    }
    let connected = |mask: u64| -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in g.neighbors(v).iter() {
                if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    frontier.push(w);
                }
            }
        }
        seen == mask
    };
    let no_cut_vertex = |mask: u64| -> bool {
        if mask.count_ones() <= 2 {
            return true;
        }
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !connected(mask & !(1 << v)) {
                return false;
            }
        }
        true
    };
    let mut candidates: Vec<u64> = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() >= 2 && connected(mask) && no_cut_vertex(mask) {
            candidates.push(mask);
        }
    }
    let mut blocks = Vec::new();
    'outer: for &m in &candidates {
        for &other in &candidates {
            if other != m && m & other == m {
                continue 'outer; // not maximal
            }
        }
        let mut vs = Vec::new();
        for v in 0..n {
            if m >> v & 1 == 1 {
                vs.push(v);
            }
        }
        blocks.push(vs);
    }
    blocks.sort();
    blocks
}

/// Plain backtracking isomorphism test (degree pruning only); independent
/// of the canonical-form machinery.
pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
        let u = map.iter().position(|m| m.is_none());
        let Some(u) = u else { return true };
        for w in 0..b.n() {
            if used[w] || a.degree(u) != b.degree(w) {
                continue;
            }
            let consistent = (0..a.n()).all(|x| match map[x] {
                Some(y) => a.has_edge(u, x) == b.has_edge(w, y),
                None => true,
            });
            if consistent {
                map[u] = Some(w);
                used[w] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map[u] = None;
                used[w] = false;
            }
        }
        false
    }
    extend(a, b, &mut vec![None; n], &mut vec![false; n])
}
