//! Canonical forms and isomorphism testing for desk-scale graphs.
//!
//! The canonizer runs equitable degree refinement, orders vertices cell by
//! cell, and backtracks over the vertices of the first irregular cell,
//! keeping the ordering whose adjacency code is smallest. Cells whose
//! members are pairwise twins need no branching: any order within such a
//! cell extends to an automorphism.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap: exact canonical forms are desk-scale only.
pub const MAX_CANON_N: usize = 12;

/// Upper-triangle adjacency code in column-major bit order (the graph6 bit
/// order), taken as an integer with the first bit most significant.
pub type Code = u128;

fn triangle_code(masks: &[u64], order: &[usize]) -> Code {
    let n = order.len();
    let mut code: Code = 0;
    for j in 1..n {
        for i in 0..j {
            code <<= 1;
            if masks[order[i]] >> order[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

/// Rebuild a graph from an upper-triangle code.
pub fn graph_from_code(n: usize, code: Code) -> Graph {
    let mut edges = Vec::new();
    let nbits = n * (n - 1) / 2;
    let mut bit = nbits;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, &edges).expect("triangle code is a simple graph")
}

/// Code of a graph under the identity ordering.
pub fn identity_code(g: &Graph) -> Result<Code> {
    check_cap(g.n())?;
    let masks = g.adjacency_masks();
    let order: Vec<usize> = (0..g.n()).collect();
    Ok(triangle_code(&masks, &order))
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_CANON_N {
        return Err(Error::ScaleCapExceeded {
            what: "canonical form",
            cap: MAX_CANON_N,
            n,
        });
    }
    Ok(())
}

struct Search {
    n: usize,
    masks: Vec<u64>,
    best: Option<(Code, Vec<usize>)>,
}

/// Partition as a color per vertex; colors are compacted to 0..k with the
/// invariant that equal colors form the cells.
fn refine(masks: &[u64], colors: &mut [u32]) {
    let n = colors.len();
    loop {
        // cell masks per color
        let ncolors = (*colors.iter().max().unwrap() + 1) as usize;
        let mut cells = vec![0u64; ncolors];
        for v in 0..n {
            cells[colors[v] as usize] |= 1 << v;
        }
        // signature: (old color, count of neighbors in each cell)
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut sig = Vec::with_capacity(ncolors + 1);
                sig.push(colors[v]);
                for &c in &cells {
                    sig.push((masks[v] & c).count_ones());
                }
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                next += 1;
            }
            new_colors[sigs[i].1] = next;
        }
        if new_colors == colors {
            return;
        }
        colors.copy_from_slice(&new_colors);
    }
}

impl Search {
    fn cells_of(&self, colors: &[u32]) -> Vec<Vec<usize>> {
        let ncolors = (*colors.iter().max().unwrap() + 1) as usize;
        let mut cells = vec![Vec::new(); ncolors];
        for v in 0..self.n {
            cells[colors[v] as usize].push(v);
        }
        cells
    }

    fn pairwise_twins(&self, cell: &[usize]) -> bool {
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                let m = !((1u64 << u) | (1u64 << v));
                if self.masks[u] & m != self.masks[v] & m {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&mut self, colors: &[u32]) {
        let cells = self.cells_of(colors);
        // branch on the first cell that is neither singleton nor all-twins
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() > 1 && !self.pairwise_twins(cell) {
                for &v in cell {
                    let mut next = colors.to_vec();
                    // individualize v ahead of its cell
                    for c in next.iter_mut() {
                        if *c >= ci as u32 {
                            *c += 1;
                        }
                    }
                    next[v] = ci as u32;
                    refine(&self.masks, &mut next);
                    self.descend(&next);
                }
                return;
            }
        }
        // discrete up to twin cells: read the ordering off the colors
        let mut order = Vec::with_capacity(self.n);
        for cell in &cells {
            order.extend_from_slice(cell); // ascending within twin cells
        }
        let code = triangle_code(&self.masks, &order);
        if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
            self.best = Some((code, order));
        }
    }
}

/// Canonical code and the vertex ordering that realizes it.
///
/// The returned `order` lists original vertices in canonical position order,
/// so `order[i]` is the original vertex placed at canonical index `i`.
pub fn canonical_code(g: &Graph) -> Result<(Code, Vec<usize>)> {
    check_cap(g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let masks = g.adjacency_masks();
    let mut colors = vec![0u32; n];
    refine(&masks, &mut colors);
    let mut search = Search {
        n,
        masks,
        best: None,
    };
    search.descend(&colors);
    Ok(search.best.expect("at least one leaf"))
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (code, _) = canonical_code(g)?;
    Ok(graph_from_code(g.n(), code))
}

/// Exact isomorphism test by canonical form (desk-scale only).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    Ok(canonical_code(a)?.0 == canonical_code(b)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn isomorphic_cycles() {
        let c5 = Graph::cycle(5);
        let other = Graph::build(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&c5, &other).unwrap());
        let p5 = Graph::path(5);
        assert!(!are_isomorphic(&c5, &p5).unwrap());
    }

    #[test]
    fn canonical_is_invariant_under_relabeling() {
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let perm = [3usize, 5, 0, 1, 4, 2];
        let relabeled = {
            let mut edges = Vec::new();
            for (u, v) in g.edges() {
                edges.push((perm[u], perm[v]));
            }
            Graph::build(6, &edges).unwrap()
        };
        assert_eq!(
            canonical_code(&g).unwrap().0,
            canonical_code(&relabeled).unwrap().0
        );
    }

    #[test]
    fn symmetric_graphs_are_fast_and_correct() {
        // all-twin cells: complete and complete multipartite graphs
        let k9 = Graph::complete(9);
        let (code, order) = canonical_code(&k9).unwrap();
        assert_eq!(order.len(), 9);
        assert_eq!(graph_from_code(9, code), k9);

        let k33 = Graph::build(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let canon = canonical_graph(&k33).unwrap();
        assert!(are_isomorphic(&k33, &canon).unwrap());
    }

    #[test]
    fn order_realizes_code() {
        let g = Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (code, order) = canonical_code(&g).unwrap();
        let masks = g.adjacency_masks();
        assert_eq!(triangle_code(&masks, &order), code);
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::path(13);
        assert!(canonical_code(&g).is_err());
    }
}
