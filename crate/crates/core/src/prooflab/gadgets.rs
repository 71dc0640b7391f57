//! The two local modifications: rotating an edge to create a triangle, and
//! replacing a triangle by an edge between two of its outside neighbors.

use std::collections::BTreeSet;

use serde_json::json;

use super::{ClaimId, ClaimReport, ProofLabError, Triangle, Verdict};
use crate::graph::{Edge, Graph, VertexMap, VertexSet};
use crate::stability::{alpha, critical_edges, g_minus_c, is_alpha_critical, is_stable};
use crate::tok4::{find_tok4, verify_tok4, Tok4Certificate};

fn precondition(msg: impl Into<String>) -> ProofLabError {
    ProofLabError::Precondition(msg.into())
}

/// Outcome of `G' = (G - u u2) + u v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation {
    pub graph: Graph,
    pub alpha_before: usize,
    pub alpha_after: usize,
    /// Whether `{u, v, w}` is a triangle of `G'`, when `w` was supplied.
    pub triangle: Option<bool>,
}

impl Rotation {
    pub fn alpha_preserved(&self) -> bool {
        self.alpha_before == self.alpha_after
    }
}

/// Rotates the edge `u u2` around `u` onto `u v`.
pub fn case1_rotation(g: &Graph, u: usize, u2: usize, v: usize, w: Option<usize>) -> Result<Rotation, ProofLabError> {
    for x in [u, u2, v].into_iter().chain(w) {
        if x >= g.n() {
            return Err(crate::graph::GraphError::VertexOutOfRange { vertex: x, n: g.n() }.into());
        }
    }
    if u == v || u2 == v {
        return Err(precondition("u, u2 and v must be distinct"));
    }
    if !g.has_edge(u, u2) {
        return Err(precondition(format!("{u}-{u2} is not an edge")));
    }
    if g.has_edge(u, v) {
        return Err(precondition(format!("{u}-{v} is already an edge")));
    }
    let graph = g.delete_edge(Edge::new(u, u2))?.add_edge(Edge::new(u, v))?;
    let triangle = w.map(|w| w != u && w != v && graph.has_edge(u, w) && graph.has_edge(v, w) && graph.has_edge(u, v));
    Ok(Rotation { graph, alpha_before: alpha(g), alpha_after: alpha(&graph), triangle })
}

/// Sweeps every rotation configuration of a connected alpha-critical graph:
/// a path `u w v` with `u v` not an edge, and a further neighbor `u2` of `u`
/// with `u u2` outside `G -c v`. Each rotation must keep the stability
/// number, and the critical edges of the rotated graph must contain `u v`,
/// `E(G -c u)`, `E(G -c v)` and the triangle `u v w`.
pub fn check_case1(g: &Graph) -> ClaimReport {
    let claim = ClaimId::Case1;
    if !g.is_connected() || g.n() < 3 || !is_alpha_critical(g) {
        return ClaimReport::inapplicable(claim, g);
    }
    let gmc: Vec<BTreeSet<Edge>> =
        match (0..g.n()).map(|x| g_minus_c(g, x).map(|r| r.host_edges().into_iter().collect())).collect() {
            Ok(v) => v,
            Err(e) => return ClaimReport::new(claim, g, Verdict::Fail, Some(json!({ "error": e.to_string() }))),
        };
    let mut configs = 0usize;
    for w in 0..g.n() {
        for u in g.neighbors(w) {
            for v in g.neighbors(w) {
                if u == v || g.has_edge(u, v) {
                    continue;
                }
                for u2 in g.neighbors(u) {
                    if u2 == w || gmc[v].contains(&Edge::new(u, u2)) {
                        continue;
                    }
                    configs += 1;
                    let rot = case1_rotation(g, u, u2, v, Some(w)).expect("configuration meets preconditions");
                    let ec = critical_edges(&rot.graph);
                    let required = std::iter::once(Edge::new(u, v))
                        .chain([Edge::new(u, w), Edge::new(v, w)])
                        .chain(gmc[u].iter().copied())
                        .chain(gmc[v].iter().copied());
                    let missing: Vec<Edge> = required.filter(|&e| !ec.contains(e)).collect();
                    if !rot.alpha_preserved() || !missing.is_empty() {
                        return ClaimReport::new(
                            claim,
                            g,
                            Verdict::Fail,
                            Some(json!({
                                "u": u, "w": w, "v": v, "u2": u2,
                                "alpha_before": rot.alpha_before,
                                "alpha_after": rot.alpha_after,
                                "missing_critical": missing,
                            })),
                        );
                    }
                }
            }
        }
    }
    if configs == 0 {
        ClaimReport::inapplicable(claim, g)
    } else {
        ClaimReport::new(claim, g, Verdict::Pass, Some(json!({ "configurations": configs })))
    }
}

/// `G' = (G - T) + u'w'` for a triangle `T = {u, v, w}` whose vertices have
/// degree 3 and pairwise distinct outside neighbors `u', v', w'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case2Gadget {
    pub host: Graph,
    pub graph: Graph,
    /// Vertices of `graph` to vertices of `host`.
    pub map: VertexMap,
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub u_out: usize,
    pub v_out: usize,
    pub w_out: usize,
    pub alpha_before: usize,
    pub alpha_after: usize,
}

impl Case2Gadget {
    pub fn alpha_drop(&self) -> isize {
        self.alpha_before as isize - self.alpha_after as isize
    }

    /// The added edge `u'w'` in gadget labels.
    pub fn added_edge(&self) -> Edge {
        Edge::new(self.map.to_new(self.u_out).unwrap(), self.map.to_new(self.w_out).unwrap())
    }

    /// `host - v` with its map back to the host.
    pub fn host_minus_v(&self) -> (Graph, VertexMap) {
        self.host.delete_vertex(self.v).expect("v is a host vertex")
    }
}

/// Builds the gadget with `u = t.x1`, `v = t.x2`, `w = t.x3`.
pub fn case2_gadget(g: &Graph, t: Triangle) -> Result<Case2Gadget, ProofLabError> {
    let t = Triangle::new(g, t.x1, t.x2, t.x3)?;
    let tri = VertexSet::from_iter(t.vertices());
    let mut outs = [0usize; 3];
    for (k, x) in t.vertices().into_iter().enumerate() {
        if g.degree(x) != 3 {
            return Err(precondition(format!("triangle vertex {x} has degree {}, expected 3", g.degree(x))));
        }
        outs[k] = g.neighbors(x).difference(tri).first().unwrap();
    }
    let [u_out, v_out, w_out] = outs;
    if u_out == v_out || v_out == w_out || u_out == w_out {
        return Err(precondition("triangle vertices share an outside neighbor"));
    }
    if g.has_edge(u_out, w_out) {
        return Err(precondition(format!("{u_out}-{w_out} is already an edge")));
    }
    let (rest, map) = g.induced(g.vertices().difference(tri));
    let added = Edge::new(map.to_new(u_out).unwrap(), map.to_new(w_out).unwrap());
    let graph = rest.add_edge(added)?;
    Ok(Case2Gadget {
        host: *g,
        graph,
        map,
        u: t.x1,
        v: t.x2,
        w: t.x3,
        u_out,
        v_out,
        w_out,
        alpha_before: alpha(g),
        alpha_after: alpha(&graph),
    })
}

/// Carries a subdivision of the gadget graph back to `host - v`: the added
/// edge `u'w'`, if used, is replaced by the path `u' u w w'`. The result is
/// in the labels of `host - v`.
pub fn lift_tok4_through_gadget(k: &Tok4Certificate, gadget: &Case2Gadget) -> Result<Tok4Certificate, ProofLabError> {
    if !verify_tok4(&gadget.graph, k)? {
        return Err(ProofLabError::CertificateRejected);
    }
    let in_host = k.relabel(|x| gadget.map.to_old(x));
    let (a, b) = (gadget.u_out, gadget.w_out);
    let spliced = in_host.paths.clone().map(|p| {
        let mut out = Vec::with_capacity(p.len() + 2);
        for (i, &x) in p.iter().enumerate() {
            out.push(x);
            match p.get(i + 1) {
                Some(&y) if x == a && y == b => out.extend([gadget.u, gadget.w]),
                Some(&y) if x == b && y == a => out.extend([gadget.w, gadget.u]),
                _ => {}
            }
        }
        out
    });
    let lifted = Tok4Certificate { branch: in_host.branch, paths: spliced };
    let (_, minus_v) = gadget.host_minus_v();
    Ok(lifted.relabel(|x| minus_v.to_new(x).expect("lifted subdivision avoids v")))
}

/// Sweeps every ordered triangle of a connected alpha-critical graph that
/// meets the gadget preconditions. For each: the stability number drops by
/// exactly one, `{u', v', w'}` is stable, the critical edges of the gadget
/// contain `u'w'` and the edges of `G -c u'` and `G -c w'` avoiding the
/// triangle, and any subdivision found in the gadget lifts to `G - v`.
pub fn check_case2(g: &Graph) -> ClaimReport {
    let claim = ClaimId::Case2;
    if !g.is_connected() || !is_alpha_critical(g) {
        return ClaimReport::inapplicable(claim, g);
    }
    let mut configs = 0usize;
    let mut lifted = 0usize;
    for [a, b, c] in g.triangles() {
        for [x1, x2, x3] in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            let Ok(gadget) = case2_gadget(g, Triangle { x1, x2, x3 }) else { continue };
            configs += 1;
            let fail = |what: &str| {
                ClaimReport::new(
                    claim,
                    g,
                    Verdict::Fail,
                    Some(
                        json!({ "triangle": [x1, x2, x3], "violation": what, "alpha_before": gadget.alpha_before, "alpha_after": gadget.alpha_after }),
                    ),
                )
            };
            if gadget.alpha_drop() != 1 {
                return fail("alpha does not drop by exactly one");
            }
            if !is_stable(g, VertexSet::from_iter([gadget.u_out, gadget.v_out, gadget.w_out])) {
                return fail("outside neighbors are not stable");
            }
            let ec = critical_edges(&gadget.graph);
            let tri = VertexSet::from_iter([x1, x2, x3]);
            let mut required = vec![gadget.added_edge()];
            for y in [gadget.u_out, gadget.w_out] {
                let Ok(gmc) = g_minus_c(g, y) else { return fail("G -c y unavailable") };
                for e in gmc.host_edges() {
                    if !tri.contains(e.u) && !tri.contains(e.v) {
                        required.push(Edge::new(gadget.map.to_new(e.u).unwrap(), gadget.map.to_new(e.v).unwrap()));
                    }
                }
            }
            if required.iter().any(|&e| !ec.contains(e)) {
                return fail("critical edges of the gadget miss a required edge");
            }
            if let Some(k) = find_tok4(&gadget.graph) {
                let (minus_v, _) = gadget.host_minus_v();
                match lift_tok4_through_gadget(&k, &gadget) {
                    Ok(cert) if verify_tok4(&minus_v, &cert) == Ok(true) => lifted += 1,
                    _ => return fail("lifted subdivision does not verify in G - v"),
                }
            }
        }
    }
    if configs == 0 {
        ClaimReport::inapplicable(claim, g)
    } else {
        ClaimReport::new(claim, g, Verdict::Pass, Some(json!({ "configurations": configs, "lifted": lifted })))
    }
}
