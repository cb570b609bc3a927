//! Exact minimum connected dominating set computation and enumeration.
//!
//! The solver runs iterative deepening on the target size `s = 1, 2, ...`.
//! At each depth it enumerates connected vertex sets only, growing each set
//! from its smallest member by adding neighbors of the current set, with an
//! exclusion set so that every connected set is visited exactly once. A
//! greedy coverage bound prunes branches that cannot dominate the remaining
//! vertices with the additions left.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// Result of an exact gamma_c computation.
#[derive(Clone, Debug, Serialize)]
pub struct GammaCResult {
    pub gamma_c: usize,
    /// Lexicographically least minimum connected dominating set.
    pub witness: VertexSet,
    /// All minimum connected dominating sets, sorted lexicographically,
    /// when enumeration was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_min_sets: Option<Vec<VertexSet>>,
}

/// Hard cap for the brute-force oracle.
pub const BRUTEFORCE_MAX_N: usize = 20;

/// True iff `d` dominates every vertex and induces a connected subgraph.
pub fn is_cds(g: &Graph, d: &VertexSet) -> Result<bool> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    if g.closed_neighbors_of_set(d).len() != g.n() {
        return Ok(false);
    }
    Ok(set_is_connected(g, d))
}

/// Whether `G[s]` is connected (s nonempty).
pub fn set_is_connected(g: &Graph, s: &VertexSet) -> bool {
    let Some(start) = s.min() else {
        return false;
    };
    let mut reached = VertexSet::singleton(g.n(), start);
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for w in g.neighbors(v).iter() {
            if s.contains(w) && !reached.contains(w) {
                reached.insert(w);
                frontier.push(w);
            }
        }
    }
    s.is_subset_of(&reached)
}

/// Exact gamma_c with a deterministic witness; optionally enumerates every
/// minimum connected dominating set (sorted lexicographically).
pub fn gamma_c(g: &Graph, enumerate_all: bool) -> Result<GammaCResult> {
    let sets = solve(g, SolveMode::Collect)?;
    let (k, mut sets) = sets.expect("connected graph has a CDS");
    sets.sort_by(|a, b| a.cmp_lex(b));
    let witness = sets[0].clone();
    Ok(GammaCResult {
        gamma_c: k,
        witness,
        all_min_sets: enumerate_all.then_some(sets),
    })
}

/// Just the optimum value (early exit, no witness bookkeeping).
pub fn gamma_c_value(g: &Graph) -> Result<usize> {
    let res = solve(g, SolveMode::ValueOnly { cap: None })?;
    Ok(res.expect("connected graph has a CDS").0)
}

/// True iff `gamma_c(g) <= s`.
pub fn gamma_c_at_most(g: &Graph, s: usize) -> Result<bool> {
    Ok(solve(g, SolveMode::ValueOnly { cap: Some(s) })?.is_some())
}

enum SolveMode {
    ValueOnly { cap: Option<usize> },
    Collect,
}

fn solve(g: &Graph, mode: SolveMode) -> Result<Option<(usize, Vec<VertexSet>)>> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() <= 64 {
        solve_generic::<u64>(g, mode)
    } else {
        solve_generic::<VertexSet>(g, mode)
    }
}

/// Exhaustive oracle: scans all subsets in size order. Validation only.
pub fn gamma_c_bruteforce(g: &Graph, enumerate_all: bool) -> Result<GammaCResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::ScaleCapExceeded {
            what: "brute-force gamma_c",
            cap: BRUTEFORCE_MAX_N,
            n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for size in 1..=n {
        let mut found: Vec<VertexSet> = Vec::new();
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let d = VertexSet::from_members(n, comb.iter().copied());
            if is_cds(g, &d)? {
                found.push(d);
                if !enumerate_all {
                    break;
                }
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
        if !found.is_empty() {
            // combinations come out in lexicographic order already
            let witness = found[0].clone();
            return Ok(GammaCResult {
                gamma_c: size,
                witness,
                all_min_sets: enumerate_all.then_some(found),
            });
        }
    }
    unreachable!("a connected graph is dominated by its full vertex set")
}

/// Advance `comb` to the next k-combination of `0..n` in lexicographic
/// order; false when exhausted.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] != i + n - k {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimal bitset interface the solver needs; implemented for `u64` masks
/// (n <= 64) and for `VertexSet` (any n).
pub(crate) trait Mask: Clone + PartialEq {
    fn empty_like(model: &Self) -> Self;
    fn or_with(&mut self, o: &Self);
    fn andnot(&self, o: &Self) -> Self;
    fn set(&mut self, i: usize);
    fn count(&self) -> usize;
    fn covers(&self, o: &Self) -> bool;
    fn for_each_bit(&self, f: &mut dyn FnMut(usize));
}

impl Mask for u64 {
    fn empty_like(_: &Self) -> Self {
        0
    }
    fn or_with(&mut self, o: &Self) {
        *self |= o;
    }
    fn andnot(&self, o: &Self) -> Self {
        self & !o
    }
    fn set(&mut self, i: usize) {
        *self |= 1 << i;
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn covers(&self, o: &Self) -> bool {
        o & !self == 0
    }
    fn for_each_bit(&self, f: &mut dyn FnMut(usize)) {
        let mut rest = *self;
        while rest != 0 {
            f(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
    }
}

impl Mask for VertexSet {
    fn empty_like(model: &Self) -> Self {
        VertexSet::empty(model.capacity())
    }
    fn or_with(&mut self, o: &Self) {
        self.union_with(o);
    }
    fn andnot(&self, o: &Self) -> Self {
        self.difference(o)
    }
    fn set(&mut self, i: usize) {
        self.insert(i);
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn covers(&self, o: &Self) -> bool {
        o.is_subset_of(self)
    }
    fn for_each_bit(&self, f: &mut dyn FnMut(usize)) {
        for v in self.iter() {
            f(v);
        }
    }
}

trait GraphMasks<M: Mask> {
    fn open_masks(&self) -> Vec<M>;
    fn full_mask(&self) -> M;
    fn mask_to_set(&self, m: &M) -> VertexSet;
}

impl GraphMasks<u64> for Graph {
    fn open_masks(&self) -> Vec<u64> {
        self.adjacency_masks()
    }
    fn full_mask(&self) -> u64 {
        if self.n() == 64 {
            !0
        } else {
            (1u64 << self.n()) - 1
        }
    }
    fn mask_to_set(&self, m: &u64) -> VertexSet {
        VertexSet::from_low_mask(self.n(), *m)
    }
}

impl GraphMasks<VertexSet> for Graph {
    fn open_masks(&self) -> Vec<VertexSet> {
        (0..self.n()).map(|v| self.neighbors(v).clone()).collect()
    }
    fn full_mask(&self) -> VertexSet {
        self.full_set()
    }
    fn mask_to_set(&self, m: &VertexSet) -> VertexSet {
        m.clone()
    }
}

struct Dfs<'a, M: Mask> {
    open: &'a [M],
    closed: &'a [M],
    full: M,
    n: usize,
    max_gain: usize,
    target: usize,
    collect: bool,
    found: Vec<M>,
    stop: bool,
}

impl<M: Mask> Dfs<'_, M> {
    fn run(&mut self, set: &M, covered: &M, nbrs: &M, banned: &M, size: usize) {
        if self.stop {
            return;
        }
        if size == self.target {
            if covered.covers(&self.full) {
                self.found.push(set.clone());
                if !self.collect {
                    self.stop = true;
                }
            }
            return;
        }
        let remaining = self.target - size;
        let uncovered = self.n - covered.count();
        if uncovered > remaining * self.max_gain {
            return;
        }
        let cand = nbrs.andnot(set).andnot(banned);
        let mut cand_list = Vec::new();
        cand.for_each_bit(&mut |v| cand_list.push(v));
        let mut banned = banned.clone();
        for v in cand_list {
            let mut set2 = set.clone();
            set2.set(v);
            let mut covered2 = covered.clone();
            covered2.or_with(&self.closed[v]);
            let mut nbrs2 = nbrs.clone();
            nbrs2.or_with(&self.open[v]);
            self.run(&set2, &covered2, &nbrs2, &banned, size + 1);
            if self.stop {
                return;
            }
            banned.set(v);
        }
    }
}

fn solve_generic<M: Mask>(g: &Graph, mode: SolveMode) -> Result<Option<(usize, Vec<VertexSet>)>>
where
    Graph: GraphMasks<M>,
{
    let n = g.n();
    let open: Vec<M> = g.open_masks();
    let closed: Vec<M> = (0..n)
        .map(|v| {
            let mut c = open[v].clone();
            c.set(v);
            c
        })
        .collect();
    let full: M = g.full_mask();
    let max_gain = closed.iter().map(|c| c.count()).max().unwrap_or(1);

    // The witness must be the lexicographically least minimum set, so
    // collect modes scan the whole final depth; only value queries may
    // stop at the first hit.
    let (cap, collect) = match &mode {
        SolveMode::ValueOnly { cap } => (*cap, false),
        SolveMode::Collect => (None, true),
    };

    let lower = n.div_ceil(max_gain).max(1);
    let upper = cap.unwrap_or(n).min(n);
    for target in lower..=upper {
        let mut dfs = Dfs {
            open: &open,
            closed: &closed,
            full: full.clone(),
            n,
            max_gain,
            target,
            collect,
            found: Vec::new(),
            stop: false,
        };
        let mut banned = M::empty_like(&full);
        for root in 0..n {
            let mut set = M::empty_like(&full);
            set.set(root);
            dfs.run(&set, &closed[root], &open[root], &banned, 1);
            if dfs.stop {
                return Ok(Some((target, Vec::new())));
            }
            banned.set(root);
        }
        if !dfs.found.is_empty() {
            let sets = dfs.found.iter().map(|m| g.mask_to_set(m)).collect();
            return Ok(Some((target, sets)));
        }
    }
    Ok(None)
}
