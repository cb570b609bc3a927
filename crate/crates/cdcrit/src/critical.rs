//! k-gamma_c-criticality testing and the witness-set invariants that
//! minimum connected dominating sets of edge-augmented graphs satisfy.

use crate::bitset::VertexSet;
use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::gamma::{gamma_c, gamma_c_at_most, gamma_c_value};
use crate::graph::Graph;
use serde::Serialize;

/// Record for one non-adjacent pair.
#[derive(Clone, Debug, Serialize)]
pub struct NonEdgeRecord {
    pub u: usize,
    pub v: usize,
    pub gamma_after: usize,
    /// Lexicographically least minimum CDS of `G + uv`.
    pub witness: VertexSet,
}

/// Outcome of a criticality check: `is_critical` iff adding any missing
/// edge strictly lowers gamma_c.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub is_critical: bool,
    pub records: Vec<NonEdgeRecord>,
    /// First non-edge (lexicographic) whose addition fails to lower
    /// gamma_c, when not critical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(usize, usize)>,
}

/// Result of a lemma-style verification: `holds`, with the first violation
/// described for debugging.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

impl LemmaCheck {
    fn ok() -> Self {
        LemmaCheck {
            holds: true,
            violation: None,
        }
    }
    fn fail(msg: String) -> Self {
        LemmaCheck {
            holds: false,
            violation: Some(msg),
        }
    }
}

/// Full criticality report with one witness per non-edge. Complete graphs
/// are 1-gamma_c-critical vacuously.
pub fn check_critical(g: &Graph) -> Result<CriticalityReport> {
    let k = gamma_c_value(g)?;
    let mut records = Vec::new();
    let mut failing = None;
    for (u, v) in g.non_edges() {
        let aug = g.add_edge(u, v)?;
        let res = gamma_c(&aug, false)?;
        if res.gamma_c >= k && failing.is_none() {
            failing = Some((u, v));
        }
        records.push(NonEdgeRecord {
            u,
            v,
            gamma_after: res.gamma_c,
            witness: res.witness,
        });
    }
    Ok(CriticalityReport {
        k,
        is_critical: failing.is_none(),
        records,
        failing_pair: failing,
    })
}

/// Fast predicate: `Some(k)` iff the graph is k-gamma_c-critical.
pub fn criticality_level(g: &Graph) -> Result<Option<usize>> {
    let k = gamma_c_value(g)?;
    for (u, v) in g.non_edges() {
        let aug = g.add_edge(u, v)?;
        if !gamma_c_at_most(&aug, k - 1)? {
            return Ok(None);
        }
    }
    Ok(Some(k))
}

fn validate_report(g: &Graph, report: &CriticalityReport) -> Result<()> {
    let expect = g.non_edges();
    if report.records.len() != expect.len()
        || report
            .records
            .iter()
            .zip(&expect)
            .any(|(r, &(u, v))| (r.u, r.v) != (u, v))
    {
        return Err(Error::StaleReport(
            "non-edge list does not match the graph".into(),
        ));
    }
    let k = gamma_c_value(g)?;
    if k != report.k {
        return Err(Error::StaleReport(format!(
            "report k = {} but gamma_c = {k}",
            report.k
        )));
    }
    Ok(())
}

/// Bounds on minimum CDSs of `G + xy` for a k-critical graph:
/// every such set D has `k-2 <= |D| <= k-1`, meets `{x, y}`, and if it
/// meets exactly `{x}` then D avoids the (original) neighborhood of `y`.
pub fn verify_lemma1(g: &Graph, report: &CriticalityReport) -> Result<LemmaCheck> {
    validate_report(g, report)?;
    let k = report.k;
    for rec in &report.records {
        let (x, y) = (rec.u, rec.v);
        let aug = g.add_edge(x, y)?;
        let all = gamma_c(&aug, true)?
            .all_min_sets
            .expect("enumeration requested");
        for d in &all {
            if d.len() + 2 < k || d.len() + 1 > k {
                return Ok(LemmaCheck::fail(format!(
                    "non-edge ({x},{y}): minimum CDS size {} outside [{}, {}]",
                    d.len(),
                    k.saturating_sub(2),
                    k - 1
                )));
            }
            let hits_x = d.contains(x);
            let hits_y = d.contains(y);
            if !hits_x && !hits_y {
                return Ok(LemmaCheck::fail(format!(
                    "non-edge ({x},{y}): minimum CDS {:?} avoids both endpoints",
                    d.to_vec()
                )));
            }
            for (a, b) in [(x, y), (y, x)] {
                if d.contains(a) && !d.contains(b) && d.intersects(g.neighbors(b)) {
                    return Ok(LemmaCheck::fail(format!(
                        "non-edge ({x},{y}): CDS {:?} contains only {a} yet meets N({b})",
                        d.to_vec()
                    )));
                }
            }
        }
    }
    Ok(LemmaCheck::ok())
}

/// Block-level witness-set invariants of a k-critical graph with at least
/// one cut vertex. For every block B and every non-adjacent pair inside B:
/// minimum CDSs of `G` and `G + xy` agree on the cut vertices, and inside B
/// the augmented sets get strictly smaller (with and without cut vertices).
/// Also checks that removing any cut vertex leaves exactly two components
/// whose attachments to it are cliques.
pub fn verify_block_lemmas(g: &Graph, report: &CriticalityReport) -> Result<LemmaCheck> {
    validate_report(g, report)?;
    let dec = decompose(g)?;
    let cuts = &dec.cut_vertices;
    if cuts.is_empty() {
        return Ok(LemmaCheck::ok());
    }

    for c in cuts.iter() {
        let rest = VertexSet::singleton(g.n(), c).complement();
        let (h, old_to_new) = g.induced(&rest)?;
        let comps = h.components();
        if comps.len() != 2 {
            return Ok(LemmaCheck::fail(format!(
                "cut vertex {c}: G - c has {} components, expected 2",
                comps.len()
            )));
        }
        for comp in &comps {
            // attachment of c inside this component must induce a clique
            let mut attach = VertexSet::empty(g.n());
            for v in g.neighbors(c).iter() {
                if old_to_new[v].is_some_and(|nv| comp.contains(nv)) {
                    attach.insert(v);
                }
            }
            if !g.is_clique(&attach) {
                return Ok(LemmaCheck::fail(format!(
                    "cut vertex {c}: neighborhood {:?} inside a component is not a clique",
                    attach.to_vec()
                )));
            }
        }
    }

    let all_d = gamma_c(g, true)?.all_min_sets.expect("enumeration requested");
    for (bi, block) in dec.blocks.iter().enumerate() {
        for (x, y) in g.non_edges() {
            if !block.contains(x) || !block.contains(y) {
                continue;
            }
            let aug = g.add_edge(x, y)?;
            let all_dxy = gamma_c(&aug, true)?
                .all_min_sets
                .expect("enumeration requested");
            for d in &all_d {
                for dxy in &all_dxy {
                    if d.intersection(cuts) != dxy.intersection(cuts) {
                        return Ok(LemmaCheck::fail(format!(
                            "block {bi}, non-edge ({x},{y}): cut-vertex parts differ: {:?} vs {:?}",
                            d.intersection(cuts).to_vec(),
                            dxy.intersection(cuts).to_vec()
                        )));
                    }
                    let in_b = d.intersection(block);
                    let in_b_xy = dxy.intersection(block);
                    if in_b_xy.len() >= in_b.len() {
                        return Ok(LemmaCheck::fail(format!(
                            "block {bi}, non-edge ({x},{y}): |Dxy ∩ B| = {} not below |D ∩ B| = {}",
                            in_b_xy.len(),
                            in_b.len()
                        )));
                    }
                    if in_b_xy.difference(cuts).len() >= in_b.difference(cuts).len() {
                        return Ok(LemmaCheck::fail(format!(
                            "block {bi}, non-edge ({x},{y}): non-cut parts fail strict decrease"
                        )));
                    }
                }
            }
        }
    }
    Ok(LemmaCheck::ok())
}
