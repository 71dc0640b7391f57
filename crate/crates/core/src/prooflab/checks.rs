use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::{theorem1_applies, theorem2_applies, ClaimId, ClaimReport, ProofLabError, Triangle, Verdict};
use crate::graph::{Edge, Graph};
use crate::stability::{alpha, critical_edges, g_minus_c, g_minus_c_via_stable_sets, is_alpha_critical};
use crate::tok4::{find_tok4, Tok4Certificate};

fn cert_json(cert: &Tok4Certificate) -> Value {
    serde_json::to_value(cert).expect("certificates serialize")
}

/// A connected alpha-critical graph other than K1, K2 or an odd cycle
/// contains a totally odd K4-subdivision.
pub fn check_theorem1(g: &Graph) -> ClaimReport {
    if !theorem1_applies(g) {
        return ClaimReport::inapplicable(ClaimId::Theorem1, g);
    }
    match find_tok4(g) {
        Some(cert) => {
            ClaimReport::new(ClaimId::Theorem1, g, Verdict::Pass, Some(json!({ "certificate": cert_json(&cert) })))
        }
        None => ClaimReport::new(
            ClaimId::Theorem1,
            g,
            Verdict::Fail,
            Some(json!({ "reason": "no totally odd K4-subdivision exists" })),
        ),
    }
}

/// Subdivision in `g - x`, expressed in the labels of `g`.
fn tok4_avoiding(g: &Graph, x: usize) -> Option<Tok4Certificate> {
    let (h, map) = g.delete_vertex(x).expect("vertex of g");
    find_tok4(&h).map(|c| c.relabel(|v| map.to_old(v)))
}

fn theorem2_triangle(g: &Graph, t: Triangle, found: &mut dyn FnMut(usize) -> Option<Tok4Certificate>) -> ClaimReport {
    let deletions: Vec<(usize, Option<Tok4Certificate>)> = t.vertices().into_iter().map(|x| (x, found(x))).collect();
    let hits = deletions.iter().filter(|(_, c)| c.is_some()).count();
    let witness = json!({
        "triangle": t.vertices(),
        "deletions": deletions
            .iter()
            .map(|(x, c)| json!({ "vertex": x, "certificate": c.as_ref().map(cert_json) }))
            .collect::<Vec<_>>(),
    });
    let verdict = if hits >= 2 { Verdict::Pass } else { Verdict::Fail };
    ClaimReport::new(ClaimId::Theorem2, g, verdict, Some(witness))
}

/// For a graph meeting the hypothesis, at least two of the three
/// vertex-deleted subgraphs `g - x_i` contain a totally odd
/// K4-subdivision. Certificates are given in the labels of `g`.
pub fn check_theorem2(g: &Graph, t: Triangle) -> Result<ClaimReport, ProofLabError> {
    let t = Triangle::new(g, t.x1, t.x2, t.x3)?;
    if !theorem2_applies(g) {
        return Ok(ClaimReport::inapplicable(ClaimId::Theorem2, g));
    }
    Ok(theorem2_triangle(g, t, &mut |x| tok4_avoiding(g, x)))
}

/// [`check_theorem2`] over every triangle of `g`, folded into one report.
pub fn check_theorem2_all(g: &Graph) -> ClaimReport {
    let triangles = Triangle::all(g);
    if triangles.is_empty() || !theorem2_applies(g) {
        return ClaimReport::inapplicable(ClaimId::Theorem2, g);
    }
    let mut memo: Vec<Option<Option<Tok4Certificate>>> = vec![None; g.n()];
    let mut found = |x: usize| memo[x].get_or_insert_with(|| tok4_avoiding(g, x)).clone();
    let parts = triangles.into_iter().map(|t| theorem2_triangle(g, t, &mut found)).collect();
    ClaimReport::aggregate(ClaimId::Theorem2, g, parts)
}

/// Degree facts for connected alpha-critical graphs on at least four
/// vertices: minimum degree 2, and for every vertex `u` of degree 2 with
/// neighbors `v, w`: `v` and `w` are non-adjacent, `u` is their only
/// common neighbor, and contracting `uv, uw` gives an alpha-critical graph
/// whose stability number is one less.
pub fn check_lemma_deg2(g: &Graph) -> ClaimReport {
    let claim = ClaimId::Lemma1;
    if g.n() < 4 || !g.is_connected() || !is_alpha_critical(g) {
        return ClaimReport::inapplicable(claim, g);
    }
    let fail = |w: Value| ClaimReport::new(claim, g, Verdict::Fail, Some(w));
    if g.min_degree() < 2 {
        let v = (0..g.n()).find(|&v| g.degree(v) < 2).unwrap();
        return fail(json!({ "vertex": v, "violation": "degree below 2" }));
    }
    let a = alpha(g);
    for u in (0..g.n()).filter(|&u| g.degree(u) == 2) {
        let nb: Vec<usize> = g.neighbors(u).iter().collect();
        let (v, w) = (nb[0], nb[1]);
        if g.has_edge(v, w) {
            return fail(json!({ "vertex": u, "violation": "neighbors are adjacent" }));
        }
        let common: Vec<usize> = g.neighbors(v).intersection(g.neighbors(w)).iter().collect();
        if common != [u] {
            return fail(json!({ "vertex": u, "violation": "extra common neighbor", "common": common }));
        }
        let (h, _) = g.contract_degree2(u).expect("preconditions checked");
        if !is_alpha_critical(&h) {
            return fail(json!({ "vertex": u, "violation": "contraction is not alpha-critical" }));
        }
        if alpha(&h) + 1 != a {
            return fail(json!({ "vertex": u, "violation": "contraction does not lower alpha by one" }));
        }
    }
    ClaimReport::new(claim, g, Verdict::Pass, None)
}

fn connected_alpha_critical(g: &Graph) -> bool {
    g.is_connected() && is_alpha_critical(g)
}

/// If `G -c u` has a vertex of degree at least 3, then `g - u` contains a
/// totally odd K4-subdivision.
pub fn check_claim_delta(g: &Graph, u: usize) -> ClaimReport {
    let claim = ClaimId::Claim2;
    if !connected_alpha_critical(g) {
        return ClaimReport::inapplicable(claim, g);
    }
    let gmc = match g_minus_c(g, u) {
        Ok(r) => r,
        Err(e) => {
            return ClaimReport::new(claim, g, Verdict::Fail, Some(json!({ "vertex": u, "error": e.to_string() })))
        }
    };
    let delta = gmc.graph.max_degree();
    if delta <= 2 {
        return ClaimReport::inapplicable(claim, g);
    }
    match tok4_avoiding(g, u) {
        Some(cert) => ClaimReport::new(
            claim,
            g,
            Verdict::Pass,
            Some(json!({ "vertex": u, "max_degree": delta, "certificate": cert_json(&cert) })),
        ),
        None => ClaimReport::new(
            claim,
            g,
            Verdict::Fail,
            Some(json!({ "vertex": u, "max_degree": delta, "reason": "no totally odd K4-subdivision in g - u" })),
        ),
    }
}

/// Every edge avoiding `u` with an end adjacent to `u` lies in `G -c u`.
pub fn check_claim_uvw(g: &Graph, u: usize) -> ClaimReport {
    let claim = ClaimId::Claim3;
    if !connected_alpha_critical(g) {
        return ClaimReport::inapplicable(claim, g);
    }
    let gmc = match g_minus_c(g, u) {
        Ok(r) => r,
        Err(e) => {
            return ClaimReport::new(claim, g, Verdict::Fail, Some(json!({ "vertex": u, "error": e.to_string() })))
        }
    };
    let present: BTreeSet<Edge> = gmc.host_edges().into_iter().collect();
    let nu = g.neighbors(u);
    let missing: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| !e.contains(u) && (nu.contains(e.u) || nu.contains(e.v)))
        .filter(|e| !present.contains(e))
        .collect();
    if missing.is_empty() {
        ClaimReport::new(claim, g, Verdict::Pass, None)
    } else {
        ClaimReport::new(claim, g, Verdict::Fail, Some(json!({ "vertex": u, "missing": missing })))
    }
}

/// `E_c(g - u)` coincides with the critical edges `e` of `g` having a
/// maximum stable set of `g - e` that avoids `u`.
pub fn check_eq1_consistency(g: &Graph, u: usize) -> ClaimReport {
    let claim = ClaimId::Eq1Consistency;
    if !connected_alpha_critical(g) {
        return ClaimReport::inapplicable(claim, g);
    }
    let (h, map) = g.delete_vertex(u).expect("vertex of g");
    let direct: BTreeSet<Edge> =
        critical_edges(&h).edges.into_iter().map(|e| Edge::new(map.to_old(e.u), map.to_old(e.v))).collect();
    let via_sets: BTreeSet<Edge> = match g_minus_c_via_stable_sets(g, u) {
        Ok(es) => es.into_iter().collect(),
        Err(e) => {
            return ClaimReport::new(claim, g, Verdict::Fail, Some(json!({ "vertex": u, "error": e.to_string() })))
        }
    };
    if direct == via_sets {
        ClaimReport::new(claim, g, Verdict::Pass, None)
    } else {
        ClaimReport::new(
            claim,
            g,
            Verdict::Fail,
            Some(json!({
                "vertex": u,
                "only_direct": direct.difference(&via_sets).collect::<Vec<_>>(),
                "only_via_stable_sets": via_sets.difference(&direct).collect::<Vec<_>>(),
            })),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tok4::verify_tok4;

    #[test]
    fn subdivision_check_examples() {
        assert_eq!(check_theorem1(&Graph::cycle(7)).verdict, Verdict::Inapplicable);
        let r = check_theorem1(&Graph::complete(4));
        assert_eq!(r.verdict, Verdict::Pass);
        let cert: Tok4Certificate = serde_json::from_value(r.witness.unwrap()["certificate"].clone()).unwrap();
        assert_eq!(cert.branch, [0, 1, 2, 3]);
        assert_eq!(check_theorem1(&Graph::cycle(6)).verdict, Verdict::Inapplicable);
    }

    #[test]
    fn triangle_check_on_k5() {
        let k5 = Graph::complete(5);
        let r = check_theorem2(&k5, Triangle::new(&k5, 0, 1, 2).unwrap()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let w = r.witness.unwrap();
        for d in w["deletions"].as_array().unwrap() {
            let x = d["vertex"].as_u64().unwrap() as usize;
            let cert: Tok4Certificate = serde_json::from_value(d["certificate"].clone()).unwrap();
            assert_eq!(verify_tok4(&k5, &cert), Ok(true));
            assert!(!cert.vertex_set().contains(x));
        }
        assert_eq!(check_theorem2_all(&k5).verdict, Verdict::Pass);
    }

    #[test]
    fn triangle_check_exclusions() {
        let k4 = Graph::complete(4);
        let r = check_theorem2(&k4, Triangle::new(&k4, 0, 1, 2).unwrap()).unwrap();
        assert_eq!(r.verdict, Verdict::Inapplicable);
        let bogus = Triangle { x1: 0, x2: 1, x3: 2 };
        assert!(matches!(check_theorem2(&Graph::cycle(5), bogus), Err(ProofLabError::NotATriangle(_))));
    }

    #[test]
    fn degree_two_check_on_cycles() {
        assert_eq!(check_lemma_deg2(&Graph::cycle(5)).verdict, Verdict::Pass);
        assert_eq!(check_lemma_deg2(&Graph::cycle(7)).verdict, Verdict::Pass);
        assert_eq!(check_lemma_deg2(&Graph::cycle(3)).verdict, Verdict::Inapplicable);
        assert_eq!(check_lemma_deg2(&Graph::cycle(6)).verdict, Verdict::Inapplicable);
    }

    #[test]
    fn claim_delta_examples() {
        for u in 0..5 {
            assert_eq!(check_claim_delta(&Graph::cycle(5), u).verdict, Verdict::Inapplicable);
            let r = check_claim_delta(&Graph::complete(5), u);
            assert_eq!(r.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn claim_uvw_examples() {
        for u in 0..5 {
            assert_eq!(check_claim_uvw(&Graph::cycle(5), u).verdict, Verdict::Pass);
        }
        for u in 0..4 {
            assert_eq!(check_claim_uvw(&Graph::complete(4), u).verdict, Verdict::Pass);
        }
        assert_eq!(check_claim_uvw(&Graph::cycle(4), 0).verdict, Verdict::Inapplicable);
    }

    #[test]
    fn both_g_minus_c_routes_agree() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::complete(5), Graph::cycle(7)] {
            for u in 0..g.n() {
                assert_eq!(check_eq1_consistency(&g, u).verdict, Verdict::Pass);
            }
        }
    }
}
