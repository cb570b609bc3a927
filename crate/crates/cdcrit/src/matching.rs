//! Maximum matching, perfect matchings, and ell-factor-criticality checks.

use crate::bitset::VertexSet;
use crate::decompose::odd_components;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// Subset scans are capped; beyond this the checkers refuse to run.
pub const SUBSET_SCAN_MAX_N: usize = 18;

#[derive(Clone, Debug, Serialize)]
pub struct MatchingResult {
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_perfect: bool,
}

/// Verdict of a factor-criticality test at level `ell`.
#[derive(Clone, Debug, Serialize)]
pub struct FactorCriticalityVerdict {
    pub ell: usize,
    pub holds: bool,
    /// A set of `ell` vertices whose removal leaves no perfect matching
    /// (present when the direct test fails).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_set: Option<VertexSet>,
    /// A set S with `odd_components(G - S) > |S| - ell` (present when the
    /// cut-set test fails).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub favaron_witness: Option<VertexSet>,
}

/// Maximum-cardinality matching via blossom-contracting augmenting search.
pub fn max_matching(g: &Graph) -> MatchingResult {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // greedy warm start
    for u in 0..n {
        if mate[u].is_none() {
            for v in g.neighbors(u).iter() {
                if mate[v].is_none() {
                    mate[u] = Some(v);
                    mate[v] = Some(u);
                    break;
                }
            }
        }
    }

    for start in 0..n {
        if mate[start].is_some() {
            continue;
        }
        augment(g, start, &mut mate);
    }

    let mut edges = Vec::new();
    for u in 0..n {
        if let Some(v) = mate[u] {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let size = edges.len();
    MatchingResult {
        size,
        edges,
        is_perfect: 2 * size == n,
    }
}

/// One phase of the blossom algorithm: BFS an alternating forest from
/// `root`, contracting odd cycles through their base, and flip the
/// augmenting path if an exposed vertex is reached.
fn augment(g: &Graph, root: usize, mate: &mut [Option<usize>]) {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_queue = vec![false; n];
    let mut in_blossom = vec![false; n];
    let mut queue = std::collections::VecDeque::new();

    queue.push_back(root);
    in_queue[root] = true;

    let lca = |base: &[usize], parent: &[Option<usize>], mate: &[Option<usize>], mut u: usize, mut v: usize| -> usize {
        let mut seen = vec![false; n];
        loop {
            u = base[u];
            seen[u] = true;
            let Some(m) = mate[u] else { break };
            u =
                parent[m].expect("matched vertex in the tree has a parent");
        }
        loop {
            v = base[v];
            if seen[v] {
                return v;
            }
            let m = mate[v].expect("path to root alternates");
            v = parent[m].expect("matched vertex in the tree has a parent");
        }
    };

    let mark_path = |in_blossom: &mut [bool],
                     base: &[usize],
                     parent: &mut [Option<usize>],
                     mate: &[Option<usize>],
                     mut v: usize,
                     b: usize,
                     mut child: usize| {
        while base[v] != b {
            let m = mate[v].expect("blossom path alternates");
            in_blossom[base[v]] = true;
            in_blossom[base[m]] = true;
            parent[v] = Some(child);
            child = m;
            v = parent[m].expect("matched vertex in the tree has a parent");
        }
    };

    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).iter() {
            if base[u] == base[v] || mate[u] == Some(v) {
                continue;
            }
            if v == root || mate[v].is_some_and(|mv| parent[mv].is_some()) {
                // odd cycle: contract the blossom at the common base
                let b = lca(&base, &parent, mate, u, v);
                in_blossom.iter_mut().for_each(|x| *x = false);
                mark_path(&mut in_blossom, &base, &mut parent, mate, u, b, v);
                mark_path(&mut in_blossom, &base, &mut parent, mate, v, b, u);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = b;
                        if !in_queue[i] {
                            in_queue[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[v].is_none() {
                parent[v] = Some(u);
                if let Some(mv) = mate[v] {
                    if !in_queue[mv] {
                        in_queue[mv] = true;
                        queue.push_back(mv);
                    }
                } else {
                    // exposed vertex: flip the augmenting path ending at v
                    let mut cur = Some(v);
                    while let Some(x) = cur {
                        let p = parent[x].expect("path reaches the root");
                        let next = mate[p];
                        mate[x] = Some(p);
                        mate[p] = Some(x);
                        cur = next;
                    }
                    return;
                }
            }
        }
    }
}

fn check_ell(ell: usize) -> Result<()> {
    if ell > 2 {
        return Err(Error::UnsupportedEll(ell));
    }
    Ok(())
}

fn check_scan_cap(n: usize, what: &'static str) -> Result<()> {
    if n > SUBSET_SCAN_MAX_N {
        return Err(Error::ScaleCapExceeded {
            what,
            cap: SUBSET_SCAN_MAX_N,
            n,
        });
    }
    Ok(())
}

/// Direct definition: every removal of `ell` vertices leaves a perfect
/// matching. The first failing set (lexicographic) is reported.
pub fn is_factor_critical(g: &Graph, ell: usize) -> Result<FactorCriticalityVerdict> {
    check_ell(ell)?;
    let n = g.n();
    if n % 2 != ell % 2 {
        return Err(Error::ParityMismatch { n, ell });
    }
    check_scan_cap(n, "factor-criticality scan")?;

    let mut failing: Option<VertexSet> = None;
    for_each_subset_of_size(n, ell, &mut |subset| {
        let s = VertexSet::from_members(n, subset.iter().copied());
        let has_pm = match g.without(&s) {
            Some((h, _)) => max_matching(&h).is_perfect,
            None => true, // removing all of a 0-vertex case; vacuous
        };
        if !has_pm {
            failing = Some(s);
            return false;
        }
        true
    });

    Ok(FactorCriticalityVerdict {
        ell,
        holds: failing.is_none(),
        counterexample_set: failing,
        favaron_witness: None,
    })
}

/// Cut-set form of factor-criticality: scan every S with `|S| >= ell` and
/// look for `odd_components(G - S) > |S| - ell`. Scanning all such S (not
/// only disconnecting ones) keeps ell = 0 equal to the perfect-matching
/// test. Requires minimum degree at least `ell + 1`.
pub fn favaron_check(g: &Graph, ell: usize) -> Result<FactorCriticalityVerdict> {
    check_ell(ell)?;
    let n = g.n();
    let delta = g.min_degree();
    if delta < ell + 1 {
        return Err(Error::MinDegreeTooSmall {
            required: ell + 1,
            found: delta,
        });
    }
    check_scan_cap(n, "cut-set scan")?;

    let mut witness: Option<VertexSet> = None;
    for size in ell..=n {
        if witness.is_some() {
            break;
        }
        for_each_subset_of_size(n, size, &mut |subset| {
            let s = VertexSet::from_members(n, subset.iter().copied());
            if odd_components(g, &s) + ell > s.len() {
                witness = Some(s);
                return false;
            }
            true
        });
    }

    Ok(FactorCriticalityVerdict {
        ell,
        holds: witness.is_none(),
        counterexample_set: None,
        favaron_witness: witness,
    })
}

/// Visit all size-`k` subsets of `0..n` in lexicographic order; the visitor
/// returns false to stop.
fn for_each_subset_of_size(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        if !f(&comb) {
            return;
        }
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if comb[i] != i + n - k {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}
