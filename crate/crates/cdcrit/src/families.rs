//! Parameterized generators for the graph families used throughout the
//! verification suites. Every generator returns a labeled graph together
//! with the claims made for it; nothing is trusted — the harness re-derives
//! every claim with the solver, the criticality checker, the block
//! decomposition and the matching engine.

use crate::bitset::VertexSet;
use crate::census::Census;
use crate::critical;
use crate::decompose;
use crate::error::{Error, Result};
use crate::gamma;
use crate::graph::{Graph, GraphAssembler};
use crate::matching;
use crate::structure;
use serde::Serialize;
use std::fmt;
use std::sync::OnceLock;

/// Claims a generator makes about its output; `None` fields are unclaimed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct FamilyClaims {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta0: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claw_free: Option<bool>,
    /// Claimed factor-criticality outcome at a level: (ell, holds).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_critical: Option<(usize, bool)>,
}

/// A generated graph with its claims.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub claims: FamilyClaims,
}

/// A 2-connected piece with a designated attachment vertex.
#[derive(Clone, Debug)]
pub struct EndBlock {
    pub graph: Graph,
    pub head: usize,
}

/// Star-complement block parameters: `l >= 2` stars with `m[i] >= 1` leaves
/// each, plus `r >= 0` extra vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B22Params {
    pub l: usize,
    pub m: Vec<usize>,
    pub r: usize,
}

impl B22Params {
    pub fn new(m: Vec<usize>, r: usize) -> Self {
        B22Params { l: m.len(), m, r }
    }

    fn validate(&self) -> Result<()> {
        if self.l < 2 || self.m.len() != self.l || self.m.contains(&0) {
            return Err(Error::BadFamilyParams(
                "star-complement block needs l >= 2 stars with m_i >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Family tag plus integer parameters, parseable from the compact string
/// form (`"F:p=1,q=2,r=2"`, lists written `m=1+2`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum FamilySpec {
    B0 { t1: usize },
    B1 { t2: usize },
    B21 { t3: usize, t4: usize },
    B22(B22Params),
    G1 { k: usize, pos: usize, n: usize, b22: B22Params },
    G2 { k: usize },
    Hl { ell: usize, sizes: Vec<usize> },
    F { p: usize, q: usize, r: usize },
    X { s: usize },
    G5 { l1: usize, l2: usize },
    A { t1: usize, t2: usize },
    Fig4 { n: usize },
    Cycle { k: usize },
    Ext { base: Box<FamilySpec>, ns: Vec<usize> },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(v: &[usize]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+")
        }
        match self {
            FamilySpec::B0 { t1 } => write!(f, "B0:t1={t1}"),
            FamilySpec::B1 { t2 } => write!(f, "B1:t2={t2}"),
            FamilySpec::B21 { t3, t4 } => write!(f, "B21:t3={t3},t4={t4}"),
            FamilySpec::B22(p) => write!(f, "B22:l={},m={},r={}", p.l, list(&p.m), p.r),
            FamilySpec::G1 { k, pos, n, b22 } => write!(
                f,
                "G1:k={k},pos={pos},n={n},l={},m={},r={}",
                b22.l,
                list(&b22.m),
                b22.r
            ),
            FamilySpec::G2 { k } => write!(f, "G2:k={k}"),
            FamilySpec::Hl { ell, sizes } => write!(f, "HL:ell={ell},sizes={}", list(sizes)),
            FamilySpec::F { p, q, r } => write!(f, "F:p={p},q={q},r={r}"),
            FamilySpec::X { s } => write!(f, "X:s={s}"),
            FamilySpec::G5 { l1, l2 } => write!(f, "G5:l1={l1},l2={l2}"),
            FamilySpec::A { t1, t2 } => write!(f, "A:t1={t1},t2={t2}"),
            FamilySpec::Fig4 { n } => write!(f, "FIG4:n={n}"),
            FamilySpec::Cycle { k } => write!(f, "CYCLE:k={k}"),
            FamilySpec::Ext { base, ns } => {
                // inner spec: ':' becomes '/', ',' becomes ';'
                let inner = base.to_string().replacen(':', "/", 1).replace(',', ";");
                write!(f, "EXT:base={inner},ns={}", list(ns))
            }
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = |msg: &str| Error::BadFamilySpec(format!("{msg} in {s:?}"));
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut ints = std::collections::BTreeMap::new();
        let mut lists = std::collections::BTreeMap::new();
        let mut strs = std::collections::BTreeMap::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            if value.contains('+') || key == "m" || key == "sizes" || key == "ns" {
                let xs: std::result::Result<Vec<usize>, _> =
                    value.split('+').map(|x| x.parse()).collect();
                lists.insert(key, xs.map_err(|_| bad("bad integer list"))?);
            } else if let Ok(v) = value.parse::<usize>() {
                ints.insert(key, v);
            } else {
                strs.insert(key, value.to_string());
            }
        }
        let int = |k: &str| ints.get(k).copied().ok_or_else(|| bad(k));
        let list = |k: &str| lists.get(k).cloned().ok_or_else(|| bad(k));
        match tag {
            "B0" => Ok(FamilySpec::B0 { t1: int("t1")? }),
            "B1" => Ok(FamilySpec::B1 { t2: int("t2")? }),
            "B21" => Ok(FamilySpec::B21 {
                t3: int("t3")?,
                t4: int("t4")?,
            }),
            "B22" => {
                let m = list("m")?;
                if ints.get("l").is_some_and(|&l| l != m.len()) {
                    return Err(bad("l does not match the length of m"));
                }
                Ok(FamilySpec::B22(B22Params::new(m, int("r")?)))
            }
            "G1" => {
                let m = list("m")?;
                if ints.get("l").is_some_and(|&l| l != m.len()) {
                    return Err(bad("l does not match the length of m"));
                }
                Ok(FamilySpec::G1 {
                    k: int("k")?,
                    pos: int("pos")?,
                    n: int("n")?,
                    b22: B22Params::new(m, int("r")?),
                })
            }
            "G2" => Ok(FamilySpec::G2 { k: int("k")? }),
            "HL" => Ok(FamilySpec::Hl {
                ell: int("ell")?,
                sizes: list("sizes")?,
            }),
            "F" => Ok(FamilySpec::F {
                p: int("p")?,
                q: int("q")?,
                r: int("r")?,
            }),
            "X" => Ok(FamilySpec::X { s: int("s")? }),
            "G5" => Ok(FamilySpec::G5 {
                l1: int("l1")?,
                l2: int("l2")?,
            }),
            "A" => Ok(FamilySpec::A {
                t1: int("t1")?,
                t2: int("t2")?,
            }),
            "FIG4" => Ok(FamilySpec::Fig4 { n: int("n")? }),
            "CYCLE" => Ok(FamilySpec::Cycle { k: int("k")? }),
            "EXT" => {
                let base = strs
                    .get("base")
                    .ok_or_else(|| bad("base"))?
                    .replacen('/', ":", 1)
                    .replace(';', ",");
                Ok(FamilySpec::Ext {
                    base: Box::new(base.parse()?),
                    ns: list("ns")?,
                })
            }
            _ => Err(bad("unknown family tag")),
        }
    }
}

impl FamilySpec {
    /// Run the generator for this spec.
    pub fn generate(&self) -> Result<FamilyInstance> {
        let (graph, claims) = match self {
            FamilySpec::B0 { t1 } => (gen_end_block_b0(*t1)?.graph, FamilyClaims::default()),
            FamilySpec::B1 { t2 } => (gen_end_block_b1(*t2)?.graph, FamilyClaims::default()),
            FamilySpec::B21 { t3, t4 } => {
                (gen_end_block_b21(*t3, *t4)?.graph, FamilyClaims::default())
            }
            FamilySpec::B22(p) => (gen_end_block_b22(p)?.graph, FamilyClaims::default()),
            FamilySpec::G1 { k, pos, n, b22 } => return gen_g1(*k, *pos, *n, b22),
            FamilySpec::G2 { k } => return gen_g2(*k, None, *k == 4),
            FamilySpec::Hl { ell, sizes } => (
                gen_hl_block(*ell, sizes, None)?.graph,
                FamilyClaims::default(),
            ),
            FamilySpec::F { p, q, r } => return gen_f(*p, *q, *r, None, None),
            FamilySpec::X { s } => return gen_x(*s),
            FamilySpec::G5 { l1, l2 } => return gen_g5(*l1, *l2),
            FamilySpec::A { t1, t2 } => return gen_a(*t1, *t2),
            FamilySpec::Fig4 { n } => return gen_fig4(*n),
            FamilySpec::Cycle { k } => return gen_cycle(*k),
            FamilySpec::Ext { base, ns } => {
                let inst = base.generate()?;
                let h = marked_clique_of(base, &inst.graph)?;
                let g = extend_pk(&inst.graph, &h, ns)?;
                let k = inst
                    .claims
                    .gamma_c
                    .expect("extension bases claim a gamma_c value");
                let claims = FamilyClaims {
                    gamma_c: Some(k + ns.len()),
                    critical: Some(true),
                    ..Default::default()
                };
                (g, claims)
            }
        };
        Ok(FamilyInstance {
            spec: self.clone(),
            graph,
            claims,
        })
    }
}

/// The marked maximal clique used when a base family is extended.
fn marked_clique_of(spec: &FamilySpec, g: &Graph) -> Result<VertexSet> {
    match spec {
        // the s-clique side
        FamilySpec::X { .. } => Ok(g.find_label_prefix("y_")),
        // the even clique together with its private neighbor
        FamilySpec::A { .. } => {
            let mut h = g.find_label_prefix("t2_");
            h.insert(
                g.find_label("x_3")
                    .expect("generator labels the x vertices"),
            );
            Ok(h)
        }
        // any edge of a cycle is a maximal clique
        FamilySpec::Cycle { .. } => Ok(VertexSet::from_members(g.n(), [0, 1])),
        _ => Err(Error::BadFamilySpec(format!(
            "no marked clique known for extension base {spec}"
        ))),
    }
}

pub fn gen_end_block_b0(t1: usize) -> Result<EndBlock> {
    if t1 < 1 {
        return Err(Error::BadFamilyParams("B0 needs t1 >= 1".into()));
    }
    let mut asm = GraphAssembler::new();
    let c = asm.add_vertex("c");
    let k = asm.add_clique(t1, "a");
    asm.join_sets(&[c], &k);
    Ok(EndBlock {
        graph: asm.build(),
        head: c,
    })
}

pub fn gen_end_block_b1(t2: usize) -> Result<EndBlock> {
    if t2 < 2 {
        return Err(Error::BadFamilyParams("B1 needs t2 >= 2".into()));
    }
    let mut asm = GraphAssembler::new();
    let c = asm.add_vertex("c");
    let k = asm.add_clique(t2, "a");
    let z = asm.add_vertex("z_1");
    asm.join_sets(&[c], &k);
    asm.join_sets(&k, &[z]);
    Ok(EndBlock {
        graph: asm.build(),
        head: c,
    })
}

pub fn gen_end_block_b21(t3: usize, t4: usize) -> Result<EndBlock> {
    if t3 < 2 || t4 < 2 {
        return Err(Error::BadFamilyParams("B21 needs t3, t4 >= 2".into()));
    }
    let mut asm = GraphAssembler::new();
    let c = asm.add_vertex("c");
    let k3 = asm.add_clique(t3, "a");
    let k4 = asm.add_clique(t4, "b");
    let z = asm.add_vertex("z_2");
    asm.join_sets(&[c], &k3);
    asm.join_sets(&k3, &k4);
    asm.join_sets(&k4, &[z]);
    Ok(EndBlock {
        graph: asm.build(),
        head: c,
    })
}

/// Star-complement end block: take stars with `m[i]` leaves plus `r` loose
/// vertices, complete all pairs except the star edges, and attach the head
/// to exactly the leaves.
pub fn gen_end_block_b22(params: &B22Params) -> Result<EndBlock> {
    params.validate()?;
    let mut asm = GraphAssembler::new();
    let c = asm.add_vertex("c");
    let mut centers = Vec::new();
    let mut leaves = Vec::new();
    let mut star_of = Vec::new(); // (vertex, star index) for inner vertices
    for (i, &mi) in params.m.iter().enumerate() {
        let center = asm.add_vertex(&format!("s{}_0", i + 1));
        centers.push(center);
        star_of.push((center, i));
        for j in 1..=mi {
            let leaf = asm.add_vertex(&format!("s{}_{}", i + 1, j));
            leaves.push(leaf);
            star_of.push((leaf, i));
        }
    }
    let mut extras = Vec::new();
    for j in 1..=params.r {
        let w = asm.add_vertex(&format!("w_{j}"));
        extras.push(w);
        star_of.push((w, usize::MAX - j)); // unique pseudo-star: no removals
    }
    // complete graph on the inner vertices minus the star edges
    for (ai, &(u, su)) in star_of.iter().enumerate() {
        for &(v, sv) in &star_of[ai + 1..] {
            let same_star = su == sv;
            let star_edge = same_star && (centers.contains(&u) || centers.contains(&v));
            if !star_edge {
                asm.connect(u, v);
            }
        }
    }
    asm.join_sets(&[c], &leaves);
    Ok(EndBlock {
        graph: asm.build(),
        head: c,
    })
}

/// Dispatch over the four end-block classes by tag.
pub fn gen_end_block(spec: &FamilySpec) -> Result<EndBlock> {
    match spec {
        FamilySpec::B0 { t1 } => gen_end_block_b0(*t1),
        FamilySpec::B1 { t2 } => gen_end_block_b1(*t2),
        FamilySpec::B21 { t3, t4 } => gen_end_block_b21(*t3, *t4),
        FamilySpec::B22(p) => gen_end_block_b22(p),
        _ => Err(Error::BadFamilySpec(format!("{spec} is not an end block"))),
    }
}

/// Path-plus-clique-plus-star-complement-block family. The unit position
/// `pos` (1-based, at most k - 3) says where the clique sits; at the last
/// position the clique joins the block head directly.
///
/// Claimed: gamma_c = k, critical, k - 3 cut vertices. The cut-vertex claim
/// needs n >= 2 (with n = 1 the clique vertex itself becomes a cut vertex);
/// the claim is stated regardless and verification is expected to flag it.
pub fn gen_g1(k: usize, pos: usize, n: usize, b22: &B22Params) -> Result<FamilyInstance> {
    if k < 4 || pos == 0 || pos > k - 3 || n == 0 {
        return Err(Error::BadFamilyParams(
            "G1 needs k >= 4, 1 <= pos <= k - 3, n >= 1".into(),
        ));
    }
    let block = gen_end_block_b22(b22)?;
    let mut asm = GraphAssembler::new();

    let graph = if pos < k - 3 {
        // path c_0 .. c_{pos-1}, clique, path c_pos .. c_{k-4}, edge to head
        let left: Vec<usize> = (0..pos).map(|i| asm.add_vertex(&format!("c_{i}"))).collect();
        for w in left.windows(2) {
            asm.connect(w[0], w[1]);
        }
        let clique = asm.add_clique(n, "a");
        let right: Vec<usize> = (pos..=k - 4)
            .map(|i| asm.add_vertex(&format!("c_{i}")))
            .collect();
        for w in right.windows(2) {
            asm.connect(w[0], w[1]);
        }
        let b = asm.add_graph(&block.graph);
        let head = b[block.head];
        asm.join_sets(&[*left.last().unwrap()], &clique);
        asm.join_sets(&clique, &[right[0]]);
        asm.connect(*right.last().unwrap(), head);
        asm.build()
    } else {
        // path c_0 .. c_{k-4}, then clique joined to both path end and head
        let path: Vec<usize> = (0..=k - 4)
            .map(|i| asm.add_vertex(&format!("c_{i}")))
            .collect();
        for w in path.windows(2) {
            asm.connect(w[0], w[1]);
        }
        let clique = asm.add_clique(n, "a");
        let b = asm.add_graph(&block.graph);
        let head = b[block.head];
        asm.join_sets(&[*path.last().unwrap()], &clique);
        asm.join_sets(&clique, &[head]);
        asm.build()
    };

    Ok(FamilyInstance {
        spec: FamilySpec::G1 {
            k,
            pos,
            n,
            b22: b22.clone(),
        },
        graph,
        claims: FamilyClaims {
            gamma_c: Some(k),
            critical: Some(true),
            zeta: Some(k - 3),
            ..Default::default()
        },
    })
}

/// Path attached to an anchored end block by a single edge. The block must
/// pass `is_b3_block`; by default the smallest block found by
/// `default_b3_block` is used. `k = 4` (a single path vertex) is accepted
/// only behind the explicit flag.
pub fn gen_g2(k: usize, block: Option<&EndBlock>, allow_k4: bool) -> Result<FamilyInstance> {
    if k < 4 || (k == 4 && !allow_k4) {
        return Err(Error::BadFamilyParams(
            "G2 needs k >= 5 (k = 4 only behind the degenerate-path flag)".into(),
        ));
    }
    let default;
    let block = match block {
        Some(b) => b,
        None => {
            default = default_b3_block().clone();
            &default
        }
    };
    let verdict = structure::is_b3_block(&block.graph, block.head)?;
    if !verdict.holds {
        return Err(Error::NotB3Block(format!("{:?}", verdict.witness)));
    }

    let mut asm = GraphAssembler::new();
    let path: Vec<usize> = (0..=k - 4)
        .map(|i| asm.add_vertex(&format!("c_{i}")))
        .collect();
    for w in path.windows(2) {
        asm.connect(w[0], w[1]);
    }
    let b = asm.add_graph(&block.graph);
    let head = b[block.head];
    asm.connect(*path.last().unwrap(), head);
    let graph = asm.build();
    let mut labels = graph.labels().unwrap().to_vec();
    labels[head] = format!("c_{}", k - 3);
    let graph = graph.with_labels(labels);

    Ok(FamilyInstance {
        spec: FamilySpec::G2 { k },
        graph,
        claims: FamilyClaims {
            gamma_c: Some(k),
            critical: Some(true),
            zeta: Some(k - 3),
            ..Default::default()
        },
    })
}

/// Chain-of-cliques block: head x, then U_1, ..., U_ell with consecutive
/// unions complete up to U_{ell-1}; U_ell is complete on its own and every
/// vertex of U_{ell-1} misses exactly one vertex of U_ell (cyclically by
/// default) while every vertex of U_ell keeps a neighbor.
pub fn gen_hl_block(ell: usize, sizes: &[usize], pattern: Option<&[usize]>) -> Result<EndBlock> {
    if ell < 2 || sizes.len() != ell || sizes.iter().any(|&s| s < 2) {
        return Err(Error::BadFamilyParams(
            "H_ell block needs ell >= 2 and all |U_i| >= 2".into(),
        ));
    }
    let last = sizes[ell - 1];
    let prev = sizes[ell - 2];
    let pattern: Vec<usize> = match pattern {
        Some(p) => {
            if p.len() != prev || p.iter().any(|&t| t >= last) {
                return Err(Error::BadFamilyParams(
                    "missing-edge pattern must assign one U_ell index per U_{ell-1} vertex".into(),
                ));
            }
            for t in 0..last {
                if (0..prev).all(|j| p[j] == t) {
                    return Err(Error::BadFamilyParams(format!(
                        "pattern starves U_ell vertex {t} of neighbors"
                    )));
                }
            }
            p.to_vec()
        }
        None => (0..prev).map(|j| j % last).collect(),
    };

    let mut asm = GraphAssembler::new();
    let x = asm.add_vertex("x");
    let us: Vec<Vec<usize>> = (0..ell)
        .map(|i| asm.add_clique(sizes[i], &format!("u{}", i + 1)))
        .collect();
    asm.join_sets(&[x], &us[0]);
    for i in 0..ell.saturating_sub(2) {
        asm.join_sets(&us[i], &us[i + 1]);
    }
    for (j, &u) in us[ell - 2].iter().enumerate() {
        for (t, &v) in us[ell - 1].iter().enumerate() {
            if pattern[j] != t {
                asm.connect(u, v);
            }
        }
    }
    Ok(EndBlock {
        graph: asm.build(),
        head: x,
    })
}

/// Chain blocks glued at a head clique: `p` two-level blocks, a path on `q`
/// vertices, and one `r`-level block, with all heads pairwise joined.
pub fn gen_f(
    p: usize,
    q: usize,
    r: usize,
    h2_sizes: Option<&[[usize; 2]]>,
    hr_sizes: Option<&[usize]>,
) -> Result<FamilyInstance> {
    if q < 2 || r < 2 {
        return Err(Error::BadFamilyParams("F needs q >= 2 and r >= 2".into()));
    }
    if h2_sizes.is_some_and(|s| s.len() != p) {
        return Err(Error::BadFamilyParams("need one size pair per H2 block".into()));
    }
    if hr_sizes.is_some_and(|s| s.len() != r) {
        return Err(Error::BadFamilyParams("need r sizes for the H_r block".into()));
    }

    let mut asm = GraphAssembler::new();
    let mut heads = Vec::new();
    for i in 0..p {
        let sizes = h2_sizes.map_or([2, 2], |s| s[i]);
        let block = gen_hl_block(2, &sizes, None)?;
        let vs = asm.add_graph(&block.graph);
        heads.push(vs[block.head]);
    }
    // the path contributes its first vertex as a head
    let path: Vec<usize> = (0..q).map(|j| asm.add_vertex(&format!("d_{j}"))).collect();
    for w in path.windows(2) {
        asm.connect(w[0], w[1]);
    }
    heads.push(path[0]);
    let hr_default: Vec<usize> = vec![2; r];
    let hr = gen_hl_block(r, hr_sizes.unwrap_or(&hr_default), None)?;
    let vs = asm.add_graph(&hr.graph);
    heads.push(vs[hr.head]);

    for i in 0..heads.len() {
        for j in i + 1..heads.len() {
            asm.connect(heads[i], heads[j]);
        }
    }
    let graph = asm.build();
    let mut labels = graph.labels().unwrap().to_vec();
    for (i, &h) in heads.iter().enumerate() {
        labels[h] = format!("c_{}", i + 1);
    }
    let graph = graph.with_labels(labels);

    Ok(FamilyInstance {
        spec: FamilySpec::F { p, q, r },
        graph,
        claims: FamilyClaims {
            gamma_c: Some(r + q + 3 * p),
            critical: Some(true),
            zeta: Some(p + q),
            zeta0: Some(p + 2),
            ..Default::default()
        },
    })
}

/// Two independent s-sets over an s-clique; `a_i` sees everything except
/// its private `b_i` and `y_i`.
pub fn gen_x(s: usize) -> Result<FamilyInstance> {
    if s < 3 {
        return Err(Error::BadFamilyParams("X needs s >= 3".into()));
    }
    let mut asm = GraphAssembler::new();
    let a: Vec<usize> = (1..=s).map(|i| asm.add_vertex(&format!("a_{i}"))).collect();
    let b: Vec<usize> = (1..=s).map(|i| asm.add_vertex(&format!("b_{i}"))).collect();
    let y = asm.add_clique(s, "y");
    for i in 0..s {
        for j in 0..s {
            if i != j {
                asm.connect(a[i], b[j]);
                asm.connect(a[i], y[j]);
            }
        }
    }
    Ok(FamilyInstance {
        spec: FamilySpec::X { s },
        graph: asm.build(),
        claims: FamilyClaims {
            gamma_c: Some(4),
            critical: Some(true),
            factor_critical: (s % 2 == 1).then_some((1, false)),
            ..Default::default()
        },
    })
}

/// The 11-plus-vertex five-critical gadget: a clique chain ending in a
/// 2-path, decorated with pendant-ish x, y, w, z vertices.
pub fn gen_g5(l1: usize, l2: usize) -> Result<FamilyInstance> {
    if l1 < 2 || l2 < 2 || !(l1 + l2).is_multiple_of(2) {
        return Err(Error::BadFamilyParams(
            "G5 needs l1, l2 >= 2 with l1 + l2 even".into(),
        ));
    }
    let mut asm = GraphAssembler::new();
    let u = asm.add_vertex("u");
    let k1 = asm.add_clique(l1, "k1");
    let k2 = asm.add_clique(l2, "k2");
    let xp = asm.add_vertex("x'");
    let yp = asm.add_vertex("y'");
    let x = asm.add_vertex("x");
    let y = asm.add_vertex("y");
    let w = asm.add_vertex("w");
    let z = asm.add_vertex("z");
    asm.join_sets(&[u], &k1);
    asm.join_sets(&k1, &k2);
    asm.join_sets(&k2, &[xp, yp]);
    asm.connect(xp, yp);
    asm.connect(x, xp);
    asm.connect(y, yp);
    asm.connect(w, xp);
    asm.connect(w, yp);
    asm.connect(z, x);
    asm.connect(z, y);
    asm.connect(z, w);
    Ok(FamilyInstance {
        spec: FamilySpec::G5 { l1, l2 },
        graph: asm.build(),
        claims: FamilyClaims {
            gamma_c: Some(5),
            critical: Some(true),
            factor_critical: Some((1, false)),
            ..Default::default()
        },
    })
}

/// Claw-free two-clique gadget that fails bi-criticality at {x_1, x_2}.
/// `t1` must be odd (>= 3, reading "odd >= 2" as the smallest odd number
/// >= 2) and `t2` even (>= 2).
pub fn gen_a(t1: usize, t2: usize) -> Result<FamilyInstance> {
    if t1 < 3 || t1.is_multiple_of(2) || t2 < 2 || t2 % 2 == 1 {
        return Err(Error::BadFamilyParams(
            "A needs odd t1 >= 3 and even t2 >= 2".into(),
        ));
    }
    let mut asm = GraphAssembler::new();
    let x1 = asm.add_vertex("x_1");
    let x2 = asm.add_vertex("x_2");
    let x3 = asm.add_vertex("x_3");
    let k1 = asm.add_clique(t1, "t1");
    let k2 = asm.add_clique(t2, "t2");
    asm.join_sets(&[x1], &k1);
    asm.join_sets(&k1, &[x2]);
    asm.connect(x2, x3);
    asm.join_sets(&[x1], &k2);
    asm.join_sets(&k2, &[x3]);
    Ok(FamilyInstance {
        spec: FamilySpec::A { t1, t2 },
        graph: asm.build(),
        claims: FamilyClaims {
            gamma_c: Some(3),
            critical: Some(true),
            claw_free: Some(true),
            factor_critical: Some((2, false)),
            ..Default::default()
        },
    })
}

/// Clique plus star with the leaves joined to the clique minus a perfect
/// matching. Claimed non-factor-critical; the matching engine has the last
/// word on that.
pub fn gen_fig4(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::BadFamilyParams("FIG4 needs n >= 2".into()));
    }
    let mut asm = GraphAssembler::new();
    let u0 = asm.add_vertex("u_0");
    let leaves: Vec<usize> = (1..=n).map(|i| asm.add_vertex(&format!("u_{i}"))).collect();
    let clique = asm.add_clique(n, "v");
    asm.join_sets(&[u0], &leaves);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                asm.connect(leaves[i], clique[j]);
            }
        }
    }
    Ok(FamilyInstance {
        spec: FamilySpec::Fig4 { n },
        graph: asm.build(),
        claims: FamilyClaims {
            gamma_c: Some(3),
            critical: Some(true),
            factor_critical: Some((1, false)),
            ..Default::default()
        },
    })
}

/// The cycle C_{k+2}.
pub fn gen_cycle(k: usize) -> Result<FamilyInstance> {
    if k < 1 {
        return Err(Error::BadFamilyParams("CYCLE needs k >= 1".into()));
    }
    let graph = Graph::cycle(k + 2)
        .with_labels((1..=k + 2).map(|i| format!("c_{i}")).collect());
    Ok(FamilyInstance {
        spec: FamilySpec::Cycle { k },
        graph,
        claims: FamilyClaims {
            gamma_c: Some(k),
            critical: Some(true),
            ..Default::default()
        },
    })
}

/// Join extension over a marked maximal clique: a fresh vertex, a chain of
/// cliques, and all edges from the last clique into the marked set. Raises
/// gamma_c by the number of cliques while preserving criticality; the base
/// must pass the marked-clique membership check.
pub fn extend_pk(g: &Graph, h: &VertexSet, ns: &[usize]) -> Result<Graph> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(Error::BadFamilyParams(
            "extension needs a nonempty list of clique sizes >= 1".into(),
        ));
    }
    let verdict = structure::is_pk_member(g, h)?;
    if !verdict.holds {
        return Err(Error::NotPkMember);
    }
    let mut asm = GraphAssembler::new();
    let x0 = asm.add_vertex("x_0");
    let mut prev = vec![x0];
    for (i, &ni) in ns.iter().enumerate() {
        let k = asm.add_clique(ni, &format!("k{}", i + 1));
        asm.join_sets(&prev, &k);
        prev = k;
    }
    let base = asm.add_graph(g);
    let marked: Vec<usize> = h.iter().map(|v| base[v]).collect();
    asm.join_sets(&prev, &marked);
    Ok(asm.build())
}

/// Smallest head-labelled block passing `is_b3_block`, found by a
/// deterministic search over the census in canonical order. Cached.
pub fn default_b3_block() -> &'static EndBlock {
    static BLOCK: OnceLock<EndBlock> = OnceLock::new();
    BLOCK.get_or_init(|| {
        search_b3_block(9).expect("search is in-cap") // cap from the census
            .expect("a 6-vertex block passes; see the families tests")
    })
}

/// Search all connected graphs with at most `max_n` vertices (canonical
/// order, heads ascending) for the first block passing `is_b3_block`.
pub fn search_b3_block(max_n: usize) -> Result<Option<EndBlock>> {
    for n in 3..=max_n {
        let census = Census::build(n)?;
        let mut found: Option<EndBlock> = None;
        census.for_each(n, |g| {
            if found.is_some() {
                return;
            }
            for head in 0..n {
                match structure::is_b3_block(g, head) {
                    Ok(v) if v.holds => {
                        found = Some(EndBlock {
                            graph: g.clone(),
                            head,
                        });
                        return;
                    }
                    _ => {}
                }
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Re-derive every claim of an instance with the independent modules;
/// returns the list of violated claims (empty means fully verified).
pub fn verify_claims(inst: &FamilyInstance) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    let g = &inst.graph;
    let c = &inst.claims;
    if let Some(k) = c.gamma_c {
        let actual = gamma::gamma_c_value(g)?;
        if actual != k {
            violations.push(format!("gamma_c: claimed {k}, solver says {actual}"));
        }
    }
    if let Some(expect) = c.critical {
        let level = critical::criticality_level(g)?;
        let actual = level.is_some();
        if actual != expect {
            violations.push(format!("critical: claimed {expect}, checker says {actual}"));
        }
    }
    if c.zeta.is_some() || c.zeta0.is_some() {
        let dec = decompose::decompose(g)?;
        if let Some(z) = c.zeta {
            if dec.zeta != z {
                violations.push(format!("zeta: claimed {z}, decomposition says {}", dec.zeta));
            }
        }
        if let Some(z0) = c.zeta0 {
            if dec.zeta0 != z0 {
                violations.push(format!(
                    "zeta0: claimed {z0}, decomposition says {}",
                    dec.zeta0
                ));
            }
        }
    }
    if let Some(expect) = c.claw_free {
        let actual = structure::is_claw_free(g).holds;
        if actual != expect {
            violations.push(format!(
                "claw_free: claimed {expect}, checker says {actual}"
            ));
        }
    }
    if let Some((ell, expect)) = c.factor_critical {
        match matching::is_factor_critical(g, ell) {
            Ok(v) => {
                if v.holds != expect {
                    violations.push(format!(
                        "factor_critical(ell={ell}): claimed {expect}, checker says {}",
                        v.holds
                    ));
                }
            }
            Err(e) => violations.push(format!("factor_critical(ell={ell}): {e}")),
        }
    }
    Ok(violations)
}
