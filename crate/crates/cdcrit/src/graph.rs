//! Immutable simple-graph representation with the join and composition
//! operators used by the family generators.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// An undirected simple graph on dense vertex indices `0..n`.
///
/// Graphs are immutable values: every mutating operation returns a new
/// graph. Optional per-vertex labels are advisory metadata for debugging
/// generator output and never take part in equality or hashing.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for a in &self.adj {
            a.words().hash(state);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Build a graph from an edge list.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::build(n, &[]).unwrap()
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::build(n, &edges).unwrap()
    }

    /// Path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    /// Star `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=m).map(|i| (0, i)).collect();
        Graph::build(m + 1, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Closed neighborhood of a set, `N[S]`.
    pub fn closed_neighbors_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`, ascending.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with the edge `uv` added; the input is unchanged.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// New graph with the edge `uv` removed (used for diameter criticality).
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::BadJoinExpr(format!("edge ({u}, {v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: Vec::with_capacity(self.n),
            labels: self.labels.clone(),
        };
        for v in 0..self.n {
            let mut s = self.adj[v].complement();
            s.remove(v);
            g.adj.push(s);
        }
        g
    }

    /// Induced subgraph on `s`, plus the old-to-new index map.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let keep = s.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let m = keep.len();
        let mut g = Graph {
            n: m,
            adj: vec![VertexSet::empty(m); m],
            labels: self
                .labels
                .as_ref()
                .map(|ls| keep.iter().map(|&old| ls[old].clone()).collect()),
        };
        for (new_u, &old_u) in keep.iter().enumerate() {
            for old_v in self.adj[old_u].iter() {
                if let Some(new_v) = old_to_new[old_v] {
                    if new_v > new_u {
                        g.adj[new_u].insert(new_v);
                        g.adj[new_v].insert(new_u);
                    }
                }
            }
        }
        Ok((g, old_to_new))
    }

    /// The subgraph `G - S`.
    pub fn without(&self, s: &VertexSet) -> Option<(Graph, Vec<Option<usize>>)> {
        let rest = s.complement();
        if rest.is_empty() {
            return None;
        }
        Some(self.induced(&rest).unwrap())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut frontier = vec![0];
        while let Some(v) = frontier.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        frontier.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// BFS distance; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            for y in self.adj[x].iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Some(dist[y]);
                    }
                    q.push_back(y);
                }
            }
        }
        None
    }

    /// Eccentricities via BFS from every vertex; errors when disconnected.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut diam = 0;
        for u in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[u] = 0;
            let mut q = VecDeque::from([u]);
            while let Some(x) = q.pop_front() {
                for y in self.adj[x].iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        diam = diam.max(dist[y]);
                        q.push_back(y);
                    }
                }
            }
        }
        Ok(diam)
    }

    /// Whether `s` induces a complete subgraph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    /// First vertex carrying the given label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }

    /// All vertices whose label starts with the given prefix.
    pub fn find_label_prefix(&self, prefix: &str) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        if let Some(ls) = &self.labels {
            for (v, l) in ls.iter().enumerate() {
                if l.starts_with(prefix) {
                    s.insert(v);
                }
            }
        }
        s
    }

    /// Per-vertex adjacency as plain `u64` masks; requires `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        self.adj.iter().map(|a| a.low_mask()).collect()
    }

    pub(crate) fn from_adjacency_masks(n: usize, masks: &[u64]) -> Graph {
        Graph {
            n,
            adj: masks
                .iter()
                .map(|&m| VertexSet::from_low_mask(n, m))
                .collect(),
            labels: None,
        }
    }
}

/// One operand of a join expression.
#[derive(Clone, Debug)]
pub enum JoinOperand {
    /// A fresh single vertex with a label.
    Vertex(String),
    /// A fresh complete graph on the given number of vertices.
    Clique(usize),
    /// A fresh copy of an arbitrary graph piece.
    Piece(Graph),
    /// Vertices of the base graph (requires `JoinExpr::base`).
    Existing(VertexSet),
}

/// How one operand connects to the next one in the chain.
#[derive(Clone, Debug)]
pub enum JoinMode {
    /// All edges between the two operands.
    Full,
    /// All edges from the left operand into a marked subset of the right
    /// operand (local indices of the right operand).
    Restricted(Vec<usize>),
    /// Exactly one edge between the given local indices.
    Edge(usize, usize),
}

/// An ordered chain of operands with a join mode between consecutive ones.
///
/// `base` lets a chain reuse vertices of an existing graph through
/// `JoinOperand::Existing`; fresh operands are appended after the base.
#[derive(Clone, Debug)]
pub struct JoinExpr {
    pub base: Option<Graph>,
    pub first: JoinOperand,
    pub steps: Vec<(JoinMode, JoinOperand)>,
}

impl JoinExpr {
    pub fn chain(first: JoinOperand) -> Self {
        JoinExpr {
            base: None,
            first,
            steps: Vec::new(),
        }
    }

    pub fn on(base: Graph, first: JoinOperand) -> Self {
        JoinExpr {
            base: Some(base),
            first,
            steps: Vec::new(),
        }
    }

    pub fn join(mut self, op: JoinOperand) -> Self {
        self.steps.push((JoinMode::Full, op));
        self
    }

    pub fn join_into(mut self, op: JoinOperand, marked: Vec<usize>) -> Self {
        self.steps.push((JoinMode::Restricted(marked), op));
        self
    }

    pub fn attach(mut self, op: JoinOperand, left_local: usize, right_local: usize) -> Self {
        self.steps.push((JoinMode::Edge(left_local, right_local), op));
        self
    }
}

/// Evaluate a join expression into a graph.
///
/// Operands are laid out left to right after the base graph; consecutive
/// operands are connected according to the step's mode. `Existing` operands
/// must be pairwise disjoint.
pub fn join(expr: &JoinExpr) -> Result<Graph> {
    let base_n = expr.base.as_ref().map_or(0, |g| g.n());
    let mut asm = match &expr.base {
        Some(g) => GraphAssembler::from_graph(g),
        None => GraphAssembler::new(),
    };

    let mut used_existing = VertexSet::empty(base_n.max(1));
    let mut place = |asm: &mut GraphAssembler, op: &JoinOperand| -> Result<Vec<usize>> {
        match op {
            JoinOperand::Vertex(l) => Ok(vec![asm.add_vertex(l)]),
            JoinOperand::Clique(k) => Ok(asm.add_clique(*k, "v")),
            JoinOperand::Piece(g) => Ok(asm.add_graph(g)),
            JoinOperand::Existing(s) => {
                if expr.base.is_none() {
                    return Err(Error::BadJoinExpr(
                        "Existing operand used without a base graph".into(),
                    ));
                }
                if s.iter().any(|v| v >= base_n) {
                    return Err(Error::BadJoinExpr(
                        "Existing operand outside the base graph".into(),
                    ));
                }
                if used_existing.intersects(s) {
                    return Err(Error::BadJoinExpr("overlapping operands".into()));
                }
                used_existing.union_with(s);
                Ok(s.to_vec())
            }
        }
    };

    let mut prev = place(&mut asm, &expr.first)?;
    for (mode, op) in &expr.steps {
        let cur = place(&mut asm, op)?;
        match mode {
            JoinMode::Full => asm.join_sets(&prev, &cur),
            JoinMode::Restricted(marked) => {
                let mut targets = Vec::with_capacity(marked.len());
                for &i in marked {
                    let Some(&t) = cur.get(i) else {
                        return Err(Error::BadJoinExpr(
                            "marked subset not inside the right operand".into(),
                        ));
                    };
                    targets.push(t);
                }
                asm.join_sets(&prev, &targets);
            }
            JoinMode::Edge(li, ri) => {
                let (Some(&u), Some(&v)) = (prev.get(*li), cur.get(*ri)) else {
                    return Err(Error::BadJoinExpr("attach endpoint out of range".into()));
                };
                asm.connect(u, v);
            }
        }
        prev = cur;
    }
    Ok(asm.build())
}

/// Incremental builder used by the generators: fresh vertices, cliques,
/// disjoint graph copies and bulk joins over global indices.
pub struct GraphAssembler {
    labels: Vec<String>,
    edges: std::collections::BTreeSet<(usize, usize)>,
}

impl GraphAssembler {
    pub fn new() -> Self {
        GraphAssembler {
            labels: Vec::new(),
            edges: Default::default(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut asm = GraphAssembler::new();
        asm.add_graph(g);
        asm
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add_vertex(&mut self, label: &str) -> usize {
        self.labels.push(label.to_string());
        self.labels.len() - 1
    }

    /// Fresh clique; vertices labeled `prefix_1 .. prefix_k`.
    pub fn add_clique(&mut self, k: usize, prefix: &str) -> Vec<usize> {
        let vs: Vec<usize> = (1..=k)
            .map(|i| self.add_vertex(&format!("{prefix}_{i}")))
            .collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                self.connect(vs[i], vs[j]);
            }
        }
        vs
    }

    /// Disjoint copy of a graph; returns the new indices in order.
    pub fn add_graph(&mut self, g: &Graph) -> Vec<usize> {
        let offset = self.n();
        for v in 0..g.n() {
            let label = g.label(v).map(str::to_string).unwrap_or_else(|| format!("p_{v}"));
            self.labels.push(label);
        }
        for (u, v) in g.edges() {
            self.connect(offset + u, offset + v);
        }
        (offset..offset + g.n()).collect()
    }

    pub fn connect(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn join_sets(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.connect(u, v);
            }
        }
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let edges: Vec<(usize, usize)> = self.edges.into_iter().collect();
        Graph::build(n, &edges)
            .expect("assembler maintains simple-graph invariants")
            .with_labels(self.labels)
    }
}

impl Default for GraphAssembler {
    fn default() -> Self {
        Self::new()
    }
}
