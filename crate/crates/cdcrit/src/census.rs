//! Exhaustive enumeration of connected graphs up to isomorphism, and
//! predicate filtering over internal or externally supplied graph6 streams.

use crate::canon::{self, Code};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use std::collections::HashSet;
use std::io::{BufRead, Write};

/// Default cap for internal enumeration; override with `CDCRIT_MAX_N`.
pub const DEFAULT_MAX_N: usize = 9;

/// Numbers of connected graphs up to isomorphism on 1..=9 vertices (the
/// classic sequence); used as an integrity check on the enumerator.
pub const KNOWN_CONNECTED_COUNTS: [usize; 9] =
    [1, 1, 2, 6, 21, 112, 853, 11_117, 261_080];

/// Effective cap for internal census enumeration.
pub fn census_cap() -> usize {
    std::env::var("CDCRIT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// All connected graphs on 1..=max_n vertices, one canonical representative
/// per isomorphism class, stored as packed adjacency codes per level.
pub struct Census {
    levels: Vec<Vec<Code>>, // levels[i] holds codes for n = i + 1
}

impl Census {
    /// Enumerate by vertex augmentation: every connected graph on n + 1
    /// vertices arises from a connected graph on n vertices by adding one
    /// vertex joined to a nonempty subset (delete any non-cut vertex to see
    /// this), so augmenting every level-n representative with every
    /// nonempty neighborhood and deduplicating canonically is exhaustive.
    pub fn build(max_n: usize) -> Result<Census> {
        let cap = census_cap();
        if max_n > cap {
            return Err(Error::ScaleCapExceeded {
                what: "internal census enumeration",
                cap,
                n: max_n,
            });
        }
        if max_n > canon::MAX_CANON_N {
            return Err(Error::ScaleCapExceeded {
                what: "census canonical forms",
                cap: canon::MAX_CANON_N,
                n: max_n,
            });
        }
        let mut levels: Vec<Vec<Code>> = Vec::new();
        if max_n == 0 {
            return Ok(Census { levels });
        }
        levels.push(vec![0]); // K1
        for n in 2..=max_n {
            let mut seen: HashSet<Code> = HashSet::new();
            for &code in &levels[n - 2] {
                let g = canon::graph_from_code(n - 1, code);
                let masks = g.adjacency_masks();
                for nbhd in 1u64..(1u64 << (n - 1)) {
                    let mut aug = masks.clone();
                    aug.push(nbhd);
                    let mut rest = nbhd;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        aug[v] |= 1 << (n - 1);
                    }
                    let h = Graph::from_adjacency_masks(n, &aug);
                    let (canon_code, _) = canon::canonical_code(&h)?;
                    seen.insert(canon_code);
                }
            }
            let mut codes: Vec<Code> = seen.into_iter().collect();
            codes.sort_unstable();
            levels.push(codes);
        }
        Ok(Census { levels })
    }

    pub fn max_n(&self) -> usize {
        self.levels.len()
    }

    /// Number of isomorphism classes of connected graphs on `n` vertices.
    pub fn count(&self, n: usize) -> usize {
        self.levels.get(n - 1).map_or(0, |v| v.len())
    }

    /// Canonical codes at level `n`, ascending.
    pub fn codes(&self, n: usize) -> &[Code] {
        self.levels.get(n - 1).map_or(&[], |v| v.as_slice())
    }

    /// Visit every graph on exactly `n` vertices in canonical order.
    pub fn for_each(&self, n: usize, mut f: impl FnMut(&Graph)) {
        for &code in self.codes(n) {
            f(&canon::graph_from_code(n, code));
        }
    }

    /// Visit every graph with `1 <= n <= max` in canonical order.
    pub fn for_each_up_to(&self, max: usize, mut f: impl FnMut(&Graph)) {
        for n in 1..=max.min(self.max_n()) {
            self.for_each(n, &mut f);
        }
    }

    /// Graphs at level `n` that satisfy a predicate, in canonical order.
    pub fn filter(&self, n: usize, mut pred: impl FnMut(&Graph) -> bool) -> Vec<Graph> {
        let mut out = Vec::new();
        self.for_each(n, |g| {
            if pred(g) {
                out.push(g.clone());
            }
        });
        out
    }
}

/// Filter an external graph6 stream: decode each line, keep those matching
/// the predicate, and write their graph6 back out. Lines that fail to
/// decode abort with an error. Returns (seen, kept).
pub fn filter_stream(
    input: impl BufRead,
    mut output: impl Write,
    mut pred: impl FnMut(&Graph) -> Result<bool>,
) -> Result<(usize, usize)> {
    let mut seen = 0;
    let mut kept = 0;
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        seen += 1;
        let g = graph6::decode(trimmed)?;
        if pred(&g)? {
            kept += 1;
            writeln!(output, "{}", graph6::encode(&g))?;
        }
    }
    Ok((seen, kept))
}

/// Canonical graph6 lines for a census level (for stream emission and
/// set-equality checks against external streams).
pub fn canonical_graph6_level(census: &Census, n: usize) -> Vec<String> {
    census
        .codes(n)
        .iter()
        .map(|&code| graph6::encode(&canon::graph_from_code(n, code)))
        .collect()
}
