//! Cut vertices, blocks, end blocks, the zeta statistics, and odd-component
//! counting.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::gamma;
use crate::graph::Graph;
use serde::Serialize;

/// Full block structure of a connected graph.
///
/// Blocks are the maximal subgraphs without a cut vertex; bridges count as
/// blocks on two vertices. `zeta` is the number of cut vertices, `zeta0`
/// the maximum number of cut vertices lying in one block (0 when there is
/// no cut vertex).
#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    /// Blocks as vertex sets, ordered by their sorted vertex lists.
    pub blocks: Vec<VertexSet>,
    /// Cut vertices inside each block (same order as `blocks`).
    pub block_cut_vertices: Vec<VertexSet>,
    pub zeta: usize,
    pub zeta0: usize,
    /// Indices of blocks containing exactly one cut vertex.
    pub end_blocks: Vec<usize>,
}

/// Lowpoint DFS block decomposition. Errors on disconnected input.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptySet);
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<VertexSet> = Vec::new();

    // iterative DFS from vertex 0; each frame tracks the neighbor cursor
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut cursor = vec![0usize; n];
    let mut stack = vec![0usize];
    let mut root_children = 0usize;
    disc[0] = timer;
    low[0] = timer;
    timer += 1;

    while let Some(&u) = stack.last() {
        if cursor[u] < nbrs[u].len() {
            let v = nbrs[u][cursor[u]];
            cursor[u] += 1;
            if disc[v] == usize::MAX {
                parent[v] = u;
                edge_stack.push((u, v));
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                if u == 0 {
                    root_children += 1;
                }
                stack.push(v);
            } else if v != parent[u] && disc[v] < disc[u] {
                edge_stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    // p closes a block: pop edges down to the tree edge (p, u)
                    let mut block = VertexSet::empty(n);
                    while let Some((x, y)) = edge_stack.pop() {
                        block.insert(x);
                        block.insert(y);
                        if (x, y) == (p, u) {
                            break;
                        }
                    }
                    blocks.push(block);
                    if p != 0 {
                        is_cut[p] = true;
                    }
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    if n == 1 {
        blocks.push(VertexSet::singleton(1, 0));
    }

    let cut_vertices = VertexSet::from_members(n, (0..n).filter(|&v| is_cut[v]));
    blocks.sort_by(|a, b| a.cmp_lex(b));
    let block_cut_vertices: Vec<VertexSet> =
        blocks.iter().map(|b| b.intersection(&cut_vertices)).collect();
    let zeta = cut_vertices.len();
    let zeta0 = block_cut_vertices.iter().map(|c| c.len()).max().unwrap_or(0);
    let end_blocks = block_cut_vertices
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() == 1)
        .map(|(i, _)| i)
        .collect();

    Ok(BlockDecomposition {
        cut_vertices,
        blocks,
        block_cut_vertices,
        zeta,
        zeta0,
        end_blocks,
    })
}

/// Number of odd-order components of `G - S`.
pub fn odd_components(g: &Graph, s: &VertexSet) -> usize {
    let rest = s.complement();
    if rest.is_empty() {
        return 0;
    }
    let n = g.n();
    let mut seen = VertexSet::empty(n);
    let mut odd = 0;
    for start in rest.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut size = 0usize;
        let mut frontier = vec![start];
        seen.insert(start);
        while let Some(v) = frontier.pop() {
            size += 1;
            for w in g.neighbors(v).iter() {
                if rest.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
        if size % 2 == 1 {
            odd += 1;
        }
    }
    odd
}

/// Check the cut-vertex bounds for a graph whose connected domination
/// number is `k`: `zeta <= k - 2` and `zeta0 <= min(floor((k+2)/3), zeta)`.
///
/// `k` is validated against the solver before the bounds are evaluated.
pub fn verify_cut_bound(g: &Graph, k: usize) -> Result<bool> {
    let actual = gamma::gamma_c_value(g)?;
    if actual != k {
        return Err(Error::GammaMismatch {
            claimed: k,
            actual,
        });
    }
    let d = decompose(g)?;
    Ok(d.zeta <= k.saturating_sub(2) && d.zeta0 <= k.div_ceil(3).min(d.zeta))
}
