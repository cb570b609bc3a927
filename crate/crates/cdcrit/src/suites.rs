//! Named verification suites: deterministic instance lists with pinned
//! parameters, machine-checkable failure artifacts, and JSON reports.

use crate::bitset::VertexSet;
use crate::census::Census;
use crate::critical::{self, check_critical};
use crate::decompose::{self, decompose, odd_components};
use crate::error::{Error, Result};
use crate::families::{self, B22Params, FamilySpec};
use crate::gamma::gamma_c_value;
use crate::graph::Graph;
use crate::graph6;
use crate::matching::{self, is_factor_critical};
use crate::structure;
use serde::Serialize;
use std::collections::BTreeMap;

/// Pinned suite parameters, parsed from a `key = value` manifest. Repeated
/// `corpus` keys accumulate family specs.
#[derive(Clone, Debug)]
pub struct Manifest {
    values: BTreeMap<String, String>,
    corpus: Vec<String>,
}

/// Default manifest shipped with the crate.
pub const DEFAULT_MANIFEST: &str = include_str!("../suites.manifest");

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest> {
        let mut values = BTreeMap::new();
        let mut corpus = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::BadManifest(line.to_string()))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "corpus" {
                corpus.push(value.to_string());
            } else {
                values.insert(key.to_string(), value.to_string());
            }
        }
        Ok(Manifest { values, corpus })
    }

    pub fn default_manifest() -> Manifest {
        Manifest::parse(DEFAULT_MANIFEST).expect("embedded manifest parses")
    }

    pub fn usize_or(&self, key: &str, default: usize) -> usize {
        self.values
            .get(key)
            .and_then(|v| v.parse().ok())
            .unwrap_or(default)
    }

    pub fn set(&mut self, key: &str, value: String) {
        self.values.insert(key.to_string(), value);
    }

    pub fn corpus_specs(&self) -> Result<Vec<FamilySpec>> {
        self.corpus.iter().map(|s| s.parse()).collect()
    }
}

/// A replayable counterexample: the offending graph plus structured data.
#[derive(Clone, Debug, Serialize)]
pub struct FailArtifact {
    pub graph6: String,
    pub offending: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<FailArtifact>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub instances: Vec<InstanceResult>,
    pub passed: bool,
    pub wall_ms: u128,
}

pub const SUITE_IDS: &[&str] = &[
    "chen",
    "zeta0-bound",
    "theorem-k3",
    "realizability",
    "factor",
    "bicritical",
    "lemma1",
    "block-lemmas",
    "bad-subgraph",
    "hanson-wang",
    "anan-matching",
];

pub fn run_suite(id: &str, manifest: &Manifest) -> Result<SuiteReport> {
    let start = std::time::Instant::now();
    let instances = match id {
        "chen" => suite_chen(manifest)?,
        "zeta0-bound" => suite_zeta0_bound(manifest)?,
        "theorem-k3" => suite_theorem_k3(manifest)?,
        "realizability" => suite_realizability(manifest)?,
        "factor" => suite_factor(manifest)?,
        "bicritical" => suite_bicritical(manifest)?,
        "lemma1" => suite_lemma1(manifest)?,
        "block-lemmas" => suite_block_lemmas(manifest)?,
        "bad-subgraph" => suite_bad_subgraph(manifest)?,
        "hanson-wang" => suite_hanson_wang(manifest)?,
        "anan-matching" => suite_anan_matching(manifest)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let passed = instances.iter().all(|i| i.pass);
    Ok(SuiteReport {
        schema: crate::SCHEMA,
        suite: id.to_string(),
        instances,
        passed,
        wall_ms: start.elapsed().as_millis(),
    })
}

fn ok(id: impl Into<String>, detail: impl Into<String>) -> InstanceResult {
    InstanceResult {
        id: id.into(),
        pass: true,
        detail: Some(detail.into()),
        artifact: None,
    }
}

fn fail(id: impl Into<String>, detail: impl Into<String>, g: Option<&Graph>) -> InstanceResult {
    fail_with(id, detail, g, serde_json::Value::Null)
}

fn fail_with(
    id: impl Into<String>,
    detail: impl Into<String>,
    g: Option<&Graph>,
    offending: serde_json::Value,
) -> InstanceResult {
    InstanceResult {
        id: id.into(),
        pass: false,
        detail: Some(detail.into()),
        artifact: g.map(|g| FailArtifact {
            graph6: graph6::encode(g),
            offending,
        }),
    }
}

fn set_json(s: &VertexSet) -> serde_json::Value {
    serde_json::to_value(s).expect("vertex sets serialize")
}

/// All k-critical census members up to `max_n`, with their levels.
fn critical_census(max_n: usize) -> Result<Vec<(usize, Graph)>> {
    let census = Census::build(max_n)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        census.for_each(n, |g| {
            if let Ok(Some(k)) = critical::criticality_level(g) {
                out.push((k, g.clone()));
            }
        });
    }
    Ok(out)
}

/// Generated corpus: every manifest family spec, with its criticality level
/// re-derived (generators are not trusted).
fn corpus(manifest: &Manifest) -> Result<Vec<(String, usize, Graph)>> {
    let mut out = Vec::new();
    for spec in manifest.corpus_specs()? {
        let inst = spec.generate()?;
        let level = critical::criticality_level(&inst.graph)?;
        let Some(k) = level else {
            return Err(Error::BadFamilyParams(format!(
                "corpus instance {spec} is not criticality-verified"
            )));
        };
        if let Some(claimed) = inst.claims.gamma_c {
            if claimed != k {
                return Err(Error::GammaMismatch {
                    claimed,
                    actual: k,
                });
            }
        }
        out.push((spec.to_string(), k, inst.graph));
    }
    Ok(out)
}

/// Characterization at k <= 2: the 1-critical graphs are exactly the
/// complete graphs, and a graph is 2-critical iff its complement is a
/// disjoint union of at least two stars (both directions at census scale).
fn suite_chen(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let max_n = manifest.usize_or("chen.max_n", 7);
    let census = Census::build(max_n)?;
    let mut results = Vec::new();
    let mut checked = 0usize;
    for n in 1..=max_n {
        census.for_each(n, |g| {
            checked += 1;
            let level = critical::criticality_level(g).expect("census graphs are connected");
            let complete = g.num_edges() == g.n() * (g.n() - 1) / 2;
            if (level == Some(1)) != complete {
                results.push(fail(
                    format!("chen-k1/{}", graph6::encode(g)),
                    format!("level {level:?} vs complete = {complete}"),
                    Some(g),
                ));
            }
            let stars = structure::is_two_crit_complement_of_stars(g).holds;
            if (level == Some(2)) != stars {
                results.push(fail(
                    format!("chen-k2/{}", graph6::encode(g)),
                    format!("level {level:?} vs complement-of-stars = {stars}"),
                    Some(g),
                ));
            }
        });
    }
    results.push(ok(
        "chen-census",
        format!("both directions checked on {checked} connected graphs up to n = {max_n}"),
    ));

    // converse by construction: every complement of >= 2 stars is 2-critical
    let mut built = 0usize;
    for sizes in star_partitions(max_n) {
        let mut edges = Vec::new();
        let mut base = 0usize;
        let total: usize = sizes.iter().sum();
        for &s in &sizes {
            for leaf in 1..s {
                edges.push((base, base + leaf));
            }
            base += s;
        }
        let union = Graph::build(total, &edges).expect("star unions are simple");
        let g = union.complement();
        built += 1;
        if critical::criticality_level(&g)? != Some(2) {
            results.push(fail(
                format!("chen-converse/{sizes:?}"),
                "complement of a star union is not 2-critical".to_string(),
                Some(&g),
            ));
        }
    }
    results.push(ok(
        "chen-converse",
        format!("{built} star unions on <= {max_n} vertices"),
    ));
    Ok(results)
}

/// Multisets of star orders (each >= 2, at least two stars) totalling <= max.
fn star_partitions(max: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for s in min..=remaining {
            cur.push(s);
            go(remaining - s, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, 2, &mut Vec::new(), &mut out);
    out
}

/// Every critical census graph with k >= 3 satisfies the cut-vertex bounds
/// zeta <= k - 2 and zeta0 <= min(floor((k+2)/3), zeta).
fn suite_zeta0_bound(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let max_n = manifest.usize_or("zeta0-bound.max_n", 8);
    let mut results = Vec::new();
    let mut hits = 0usize;
    for (k, g) in critical_census(max_n)? {
        if k < 3 {
            continue;
        }
        hits += 1;
        if !decompose::verify_cut_bound(&g, k)? {
            let dec = decompose(&g)?;
            results.push(fail_with(
                format!("zeta0/{}", graph6::encode(&g)),
                format!("k = {k}, zeta = {}, zeta0 = {}", dec.zeta, dec.zeta0),
                Some(&g),
                set_json(&dec.cut_vertices),
            ));
        }
    }
    if hits == 0 {
        results.push(fail(
            "zeta0-bound",
            format!("no critical graphs with k >= 3 found up to n = {max_n}; filter broken?"),
            None,
        ));
    } else {
        results.push(ok(
            "zeta0-bound",
            format!("{hits} critical graphs with k >= 3 up to n = {max_n}"),
        ));
    }
    Ok(results)
}

/// Certify one 4-critical graph with exactly one cut vertex against the two
/// structural forms: a star-complement end block with a completed clique
/// tail, or a single pendant vertex on an anchored block.
fn certify_k4_one_cut(g: &Graph) -> Result<Option<&'static str>> {
    let dec = decompose(g)?;
    if dec.zeta != 1 {
        return Ok(None);
    }
    let c = dec.cut_vertices.min().expect("one cut vertex");
    let rest = VertexSet::singleton(g.n(), c).complement();
    let (h, old_to_new) = g.induced(&rest)?;
    let comps = h.components();
    if comps.len() != 2 {
        return Ok(None);
    }
    // pull components back to original indices
    let originals: Vec<VertexSet> = comps
        .iter()
        .map(|comp| {
            let mut s = VertexSet::empty(g.n());
            for v in 0..g.n() {
                if old_to_new[v].is_some_and(|nv| comp.contains(nv)) {
                    s.insert(v);
                }
            }
            s
        })
        .collect();

    for (block_side, tail_side) in [(0, 1), (1, 0)] {
        let mut block_vs = originals[block_side].clone();
        block_vs.insert(c);
        let (block, map) = g.induced(&block_vs)?;
        let head = map[c].expect("cut vertex kept");
        if !block.is_connected() {
            continue;
        }
        let tail = &originals[tail_side];
        if structure::is_b22_block(&block, head).unwrap_or(structure::StructureVerdict {
            holds: false,
            witness: vec![],
        }).holds
        {
            // clique tail: complete, with the cut vertex missing exactly one
            let (tail_graph, _) = g.induced(tail)?;
            let full_tail = tail_graph.num_edges() == tail.len() * (tail.len() - 1) / 2;
            let seen = g.neighbors(c).intersection(tail).len();
            if full_tail && tail.len() >= 2 && seen == tail.len() - 1 {
                return Ok(Some("clique-tail"));
            }
        }
        if tail.len() == 1
            && structure::is_b3_block(&block, head).map(|v| v.holds).unwrap_or(false)
        {
            return Ok(Some("pendant-anchored"));
        }
    }
    Ok(None)
}

/// k - 3 cut-vertex characterization: census certification at k = 4, plus
/// the generator grid for k = 4..6 (every output must verify as k-critical
/// with k - 3 cut vertices).
fn suite_theorem_k3(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let max_n = manifest.usize_or("theorem-k3.max_n", 9);
    let k_min = manifest.usize_or("theorem-k3.k_min", 4);
    let k_max = manifest.usize_or("theorem-k3.k_max", 6);
    let mut results = Vec::new();

    // census side: every 4-critical graph with exactly one cut vertex
    let census = Census::build(max_n)?;
    let mut count_problems = Vec::new();
    for n in 1..=max_n.min(crate::census::KNOWN_CONNECTED_COUNTS.len()) {
        let expected = crate::census::KNOWN_CONNECTED_COUNTS[n - 1];
        if census.count(n) != expected {
            count_problems.push(format!("n = {n}: {} != {expected}", census.count(n)));
        }
    }
    if count_problems.is_empty() {
        results.push(ok(
            "k3-census-counts",
            format!("enumerator matches the known class counts up to n = {max_n}"),
        ));
    } else {
        results.push(fail("k3-census-counts", count_problems.join("; "), None));
    }
    let mut members = 0usize;
    for n in 1..=max_n {
        census.for_each(n, |g| {
            let Ok(dec) = decompose(g) else { return };
            if dec.zeta != 1 {
                return;
            }
            if gamma_c_value(g).ok() != Some(4) {
                return;
            }
            if critical::criticality_level(g).ok().flatten() != Some(4) {
                return;
            }
            members += 1;
            match certify_k4_one_cut(g) {
                Ok(Some(form)) => results.push(ok(
                    format!("k3-census/{}", graph6::encode(g)),
                    format!("certified: {form}"),
                )),
                Ok(None) => results.push(fail(
                    format!("k3-census/{}", graph6::encode(g)),
                    "4-critical graph with one cut vertex matches neither structural form",
                    Some(g),
                )),
                Err(e) => results.push(fail(
                    format!("k3-census/{}", graph6::encode(g)),
                    format!("certifier error: {e}"),
                    Some(g),
                )),
            }
        });
    }
    if members == 0 {
        results.push(fail(
            "k3-census",
            format!("no 4-critical graphs with one cut vertex found up to n = {max_n}"),
            None,
        ));
    } else {
        results.push(ok(
            "k3-census",
            format!("{members} members certified up to n = {max_n}"),
        ));
    }

    // generator side: the pinned parameter grid
    for k in k_min..=k_max {
        for pos in 1..=k - 3 {
            for n in [1usize, 2] {
                for m in [vec![1, 1], vec![1, 2]] {
                    for r in [0usize, 1] {
                        let spec = FamilySpec::G1 {
                            k,
                            pos,
                            n,
                            b22: B22Params::new(m.clone(), r),
                        };
                        results.push(verify_generator_instance(&spec));
                    }
                }
            }
        }
        let id = format!("k3-gen/G2:k={k}");
        match families::gen_g2(k, None, k == 4) {
            Ok(inst) => match families::verify_claims(&inst) {
                Ok(v) if v.is_empty() => {
                    results.push(ok(id, format!("verified on {} vertices", inst.graph.n())))
                }
                Ok(v) => results.push(fail(id, v.join("; "), Some(&inst.graph))),
                Err(e) => results.push(fail(id, e.to_string(), Some(&inst.graph))),
            },
            Err(e) => results.push(fail(id, e.to_string(), None)),
        }
    }
    Ok(results)
}

fn verify_generator_instance(spec: &FamilySpec) -> InstanceResult {
    let id = format!("k3-gen/{spec}");
    match spec.generate() {
        Ok(inst) => match families::verify_claims(&inst) {
            Ok(v) if v.is_empty() => ok(id, format!("verified on {} vertices", inst.graph.n())),
            Ok(v) => fail(id, v.join("; "), Some(&inst.graph)),
            Err(e) => fail(id, e.to_string(), Some(&inst.graph)),
        },
        Err(e) => fail(id, e.to_string(), None),
    }
}

/// Realizability sweep: for each (k, zeta, zeta0) in the stated ranges the
/// chain-block family instance must be k-critical with zeta cut vertices
/// and a block holding zeta0 of them. The family parameters are forced to
/// p = zeta0-2, q = zeta-zeta0+2, r = k-zeta-2*zeta0+4, so grid points with
/// r < 2 have no instance and are reported as failures.
fn suite_realizability(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let k_min = manifest.usize_or("realizability.k_min", 4);
    let k_max = manifest.usize_or("realizability.k_max", 8);
    let mut results = Vec::new();
    for k in k_min..=k_max {
        for zeta in 2..=k - 2 {
            for zeta0 in 2..=k.div_ceil(3).min(zeta) {
                let id = format!("realizability/k={k},zeta={zeta},zeta0={zeta0}");
                let p = zeta0 - 2;
                let q = zeta - zeta0 + 2;
                let r = (k + 4).checked_sub(zeta + 2 * zeta0);
                let Some(r) = r.filter(|&r| r >= 2) else {
                    results.push(fail(
                        &id,
                        format!(
                            "forced block-chain parameter r = {} below 2: no instance exists \
                             (zeta + 2*zeta0 must stay <= k + 2)",
                            (k + 4) as isize - (zeta + 2 * zeta0) as isize
                        ),
                        None,
                    ));
                    continue;
                };
                match families::gen_f(p, q, r, None, None) {
                    Ok(inst) => {
                        let g = &inst.graph;
                        let mut problems = families::verify_claims(&inst).unwrap_or_default();
                        match decompose(g) {
                            Ok(dec) => {
                                if !dec.block_cut_vertices.iter().any(|c| c.len() == zeta0) {
                                    problems.push(format!("no block with {zeta0} cut vertices"));
                                }
                            }
                            Err(e) => problems.push(e.to_string()),
                        }
                        if problems.is_empty() {
                            results.push(ok(
                                &id,
                                format!("F({p},{q},{r}) verified on {} vertices", g.n()),
                            ));
                        } else {
                            results.push(fail(&id, problems.join("; "), Some(g)));
                        }
                    }
                    Err(e) => results.push(fail(&id, e.to_string(), None)),
                }
            }
        }
    }
    Ok(results)
}

/// The named witnesses that defeat factor-criticality, plus agreement of
/// the direct and cut-set checkers, plus the census observation that 1- and
/// 2-critical graphs of odd order with delta >= 2 are factor critical.
fn suite_factor(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let mut results = Vec::new();

    // instances expected to fail factor-criticality, with their witnesses
    let fig4 = FamilySpec::Fig4 { n: 4 }.generate()?;
    let x3 = FamilySpec::X { s: 3 }.generate()?;
    let x5 = FamilySpec::X { s: 5 }.generate()?;
    let g5 = FamilySpec::G5 { l1: 2, l2: 2 }.generate()?;
    let ext6 = FamilySpec::Ext {
        base: Box::new(FamilySpec::X { s: 3 }),
        ns: vec![2, 1],
    }
    .generate()?;
    let ext7 = FamilySpec::Ext {
        base: Box::new(FamilySpec::X { s: 3 }),
        ns: vec![2, 2, 1],
    }
    .generate()?;

    let witness_a = |g: &Graph| g.find_label_prefix("a_");
    let witness_ext = |g: &Graph, last: &str| {
        let mut s = g.find_label_prefix("a_");
        s.insert(g.find_label(last).expect("singleton clique labeled"));
        s
    };
    let named: Vec<(String, &Graph, VertexSet, usize)> = vec![
        ("factor/FIG4:n=4".into(), &fig4.graph, VertexSet::empty(9), 0),
        ("factor/X:s=3".into(), &x3.graph, witness_a(&x3.graph), 4),
        ("factor/X:s=5".into(), &x5.graph, witness_a(&x5.graph), 6),
        (
            "factor/G5:l1=2,l2=2".into(),
            &g5.graph,
            VertexSet::from_members(
                g5.graph.n(),
                [
                    g5.graph.find_label("x'").unwrap(),
                    g5.graph.find_label("y'").unwrap(),
                    g5.graph.find_label("z").unwrap(),
                ],
            ),
            4,
        ),
        (
            "factor/EXT-X3-k6".into(),
            &ext6.graph,
            witness_ext(&ext6.graph, "k2_1"),
            5,
        ),
        (
            "factor/EXT-X3-k7".into(),
            &ext7.graph,
            witness_ext(&ext7.graph, "k3_1"),
            5,
        ),
    ];

    for (id, g, witness, expect_odd) in named {
        let mut problems = Vec::new();
        let direct = is_factor_critical(g, 1)?;
        if direct.holds {
            problems.push("graph is factor-critical (every single-vertex removal leaves a perfect matching)".to_string());
        }
        if !witness.is_empty() {
            let oc = odd_components(g, &witness);
            if oc != expect_odd {
                problems.push(format!("witness odd-component count {oc} != {expect_odd}"));
            }
            if oc < witness.len() {
                problems.push(format!(
                    "witness {:?} is not a cut-set violation",
                    witness.to_vec()
                ));
            }
        }
        if g.min_degree() >= 2 {
            let fav = matching::favaron_check(g, 1)?;
            if fav.holds != direct.holds {
                problems.push("direct and cut-set checkers disagree".to_string());
            }
        }
        if problems.is_empty() {
            results.push(ok(id, "fails factor-criticality; witness confirmed"));
        } else {
            results.push(fail_with(
                id,
                problems.join("; "),
                Some(g),
                set_json(&witness),
            ));
        }
    }

    // census observation: k <= 2, odd order, delta >= 2 implies factor critical
    let max_n = manifest.usize_or("lemma.max_n", 7);
    let mut hits = 0usize;
    for (k, g) in critical_census(max_n)? {
        if k <= 2 && g.n() % 2 == 1 && g.min_degree() >= 2 {
            hits += 1;
            let v = is_factor_critical(&g, 1)?;
            if !v.holds {
                results.push(fail_with(
                    format!("factor-census/{}", graph6::encode(&g)),
                    format!("k = {k} graph not factor-critical"),
                    Some(&g),
                    v.counterexample_set.map(|s| set_json(&s)).unwrap_or_default(),
                ));
            }
        }
    }
    if hits == 0 {
        results.push(fail("factor-census", "no qualifying census graphs; filter broken?", None));
    } else {
        results.push(ok(
            "factor-census",
            format!("{hits} odd-order census graphs with k <= 2 and delta >= 2"),
        ));
    }
    Ok(results)
}

/// Bi-criticality failures at {x_1, x_2} for the claw-free gadget and its
/// extension, plus the census observation at k <= 2.
fn suite_bicritical(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let mut results = Vec::new();
    let a32 = FamilySpec::A { t1: 3, t2: 2 }.generate()?;
    let ext = FamilySpec::Ext {
        base: Box::new(FamilySpec::A { t1: 3, t2: 2 }),
        ns: vec![2, 3],
    }
    .generate()?;

    for (id, inst) in [("bicritical/A:t1=3,t2=2", &a32), ("bicritical/EXT-A32-k5", &ext)] {
        let g = &inst.graph;
        let witness = VertexSet::from_members(
            g.n(),
            [g.find_label("x_1").unwrap(), g.find_label("x_2").unwrap()],
        );
        let mut problems = Vec::new();
        let direct = is_factor_critical(g, 2)?;
        if direct.holds {
            problems.push("graph is bi-critical".to_string());
        }
        let oc = odd_components(g, &witness);
        if oc != 2 {
            problems.push(format!("witness odd-component count {oc} != 2"));
        }
        if !structure::is_claw_free(g).holds {
            problems.push("graph is not claw-free".to_string());
        }
        if g.min_degree() >= 3 {
            let fav = matching::favaron_check(g, 2)?;
            if fav.holds != direct.holds {
                problems.push("direct and cut-set checkers disagree".to_string());
            }
        }
        if problems.is_empty() {
            results.push(ok(id, "fails bi-criticality at {x_1, x_2}"));
        } else {
            results.push(fail_with(id, problems.join("; "), Some(g), set_json(&witness)));
        }
    }

    let max_n = manifest.usize_or("lemma.max_n", 7);
    let mut hits = 0usize;
    for (k, g) in critical_census(max_n)? {
        if k <= 2 && g.n() % 2 == 0 && g.min_degree() >= 3 {
            hits += 1;
            let v = is_factor_critical(&g, 2)?;
            if !v.holds {
                results.push(fail(
                    format!("bicritical-census/{}", graph6::encode(&g)),
                    format!("k = {k} graph not bi-critical"),
                    Some(&g),
                ));
            }
        }
    }
    if hits == 0 {
        results.push(fail(
            "bicritical-census",
            "no qualifying census graphs; filter broken?",
            None,
        ));
    } else {
        results.push(ok(
            "bicritical-census",
            format!("{hits} even-order census graphs with k <= 2 and delta >= 3"),
        ));
    }
    Ok(results)
}

/// Generic corpus-plus-census runner for the witness-set lemma suites.
fn lemma_targets(manifest: &Manifest) -> Result<Vec<(String, usize, Graph)>> {
    let mut targets = corpus(manifest)?;
    let max_n = manifest.usize_or("lemma.max_n", 7);
    for (k, g) in critical_census(max_n)? {
        targets.push((format!("census/{}", graph6::encode(&g)), k, g));
    }
    Ok(targets)
}

/// Witness-size bounds on every augmented minimum CDS (corpus + census).
fn suite_lemma1(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let mut results = Vec::new();
    let targets = lemma_targets(manifest)?;
    let total = targets.len();
    for (id, k, g) in targets {
        if k < 2 {
            continue;
        }
        let report = check_critical(&g)?;
        let chk = critical::verify_lemma1(&g, &report)?;
        if !chk.holds {
            results.push(fail(
                format!("lemma1/{id}"),
                chk.violation.unwrap_or_default(),
                Some(&g),
            ));
        }
    }
    if total == 0 {
        results.push(fail("lemma1", "empty target list; corpus or census broken?", None));
    } else {
        results.push(ok("lemma1", format!("{total} critical graphs checked")));
    }
    Ok(results)
}

/// Block-level witness invariants (corpus + census).
fn suite_block_lemmas(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let mut results = Vec::new();
    let targets = lemma_targets(manifest)?;
    let total = targets.len();
    for (id, k, g) in targets {
        if k < 3 {
            continue;
        }
        let report = check_critical(&g)?;
        let chk = critical::verify_block_lemmas(&g, &report)?;
        if !chk.holds {
            results.push(fail(
                format!("block-lemmas/{id}"),
                chk.violation.unwrap_or_default(),
                Some(&g),
            ));
        }
    }
    if total == 0 {
        results.push(fail("block-lemmas", "empty target list; corpus or census broken?", None));
    } else {
        results.push(ok("block-lemmas", format!("{total} critical graphs checked")));
    }
    Ok(results)
}

/// No critical graph with k >= 3 contains the four-set forbidden structure.
fn suite_bad_subgraph(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let mut results = Vec::new();
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for (id, k, g) in lemma_targets(manifest)? {
        if k < 3 {
            continue;
        }
        if g.n() > structure::BAD_SUBGRAPH_MAX_N {
            skipped += 1;
            continue;
        }
        checked += 1;
        let verdict = structure::find_bad_subgraph(&g)?;
        if verdict.holds {
            let offending = serde_json::to_value(&verdict.witness).unwrap_or_default();
            results.push(fail_with(
                format!("bad-subgraph/{id}"),
                "forbidden four-set structure found in a critical graph",
                Some(&g),
                offending,
            ));
        }
    }
    if checked == 0 {
        results.push(fail("bad-subgraph", "nothing scanned; corpus or census broken?", None));
    } else {
        results.push(ok(
            "bad-subgraph",
            format!("{checked} critical graphs scanned ({skipped} over the size cap skipped)"),
        ));
    }
    Ok(results)
}

/// 3-criticality of G vs 2-diameter-criticality of the complement, both
/// directions over the census.
fn suite_hanson_wang(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let max_n = manifest.usize_or("hanson-wang.max_n", 7);
    let census = Census::build(max_n)?;
    let mut results = Vec::new();
    let mut checked = 0usize;
    for n in 1..=max_n {
        census.for_each(n, |g| {
            checked += 1;
            let lhs = critical::criticality_level(g).ok().flatten() == Some(3);
            let rhs = structure::is_diameter_critical(&g.complement(), 2).holds;
            if lhs != rhs {
                results.push(fail(
                    format!("hanson-wang/{}", graph6::encode(g)),
                    format!("3-critical = {lhs} but complement 2-diameter-critical = {rhs}"),
                    Some(g),
                ));
            }
        });
    }
    results.push(ok(
        "hanson-wang",
        format!("equivalence checked on {checked} connected graphs up to n = {max_n}"),
    ));
    Ok(results)
}

/// Even-order 3-critical graphs with delta >= 2 have perfect matchings
/// (corpus + census).
fn suite_anan_matching(manifest: &Manifest) -> Result<Vec<InstanceResult>> {
    let mut results = Vec::new();
    let mut hits = 0usize;
    for (id, k, g) in lemma_targets(manifest)? {
        if k == 3 && g.n() % 2 == 0 && g.min_degree() >= 2 {
            hits += 1;
            if !matching::max_matching(&g).is_perfect {
                results.push(fail(
                    format!("anan/{id}"),
                    "even-order 3-critical graph without a perfect matching",
                    Some(&g),
                ));
            }
        }
    }
    if hits == 0 {
        results.push(fail("anan-matching", "no qualifying graphs; filter broken?", None));
    } else {
        results.push(ok("anan-matching", format!("{hits} qualifying graphs")));
    }
    Ok(results)
}
