//! Stable-set machinery: the stability number, maximum stable sets,
//! critical edges, alpha-criticality, critical subgraphs, the
//! `G -c u` construction and maximum stable sets by peeling.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexMap, VertexSet};

/// Largest order accepted by [`all_max_stable_sets`].
pub const ALL_MAX_STABLE_SETS_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("exhaustive stable-set enumeration is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("graph is not alpha-critical: edge {0} is not critical")]
    NotAlphaCritical(Edge),
    #[error("graph is not connected")]
    NotConnected,
    #[error("the two constructions of G -c {vertex} disagree on edge {edge}")]
    Eq1Mismatch { vertex: usize, edge: Edge },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Stability number of `g`.
pub fn alpha(g: &Graph) -> usize {
    alpha_induced(g, g.vertices())
}

/// Stability number of the subgraph induced by `within`.
pub fn alpha_induced(g: &Graph, within: VertexSet) -> usize {
    let within = within.bits() & g.vertices().bits();
    let mut best = greedy(g.adjacency(), within);
    branch(g.adjacency(), within, 0, &mut best);
    best
}

/// Min-degree greedy; a lower bound to start the search from.
fn greedy(adj: &[u32], mut cand: u32) -> usize {
    let mut size = 0;
    while cand != 0 {
        let v = VertexSet::from_bits(cand).iter().min_by_key(|&v| (adj[v] & cand).count_ones()).unwrap();
        cand &= !(adj[v] | 1 << v);
        size += 1;
    }
    size
}

fn branch(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut pivot = 0;
    let mut max_deg = 0;
    let mut degree_sum = 0;
    for v in VertexSet::from_bits(cand) {
        let d = (adj[v] & cand).count_ones();
        degree_sum += d;
        if d > max_deg {
            max_deg = d;
            pivot = v;
        }
    }
    let k = cand.count_ones() as usize;
    if max_deg == 0 {
        *best = (*best).max(size + k);
        return;
    }
    // The complement of a stable set covers every edge, at most max_deg per vertex.
    let edges = (degree_sum / 2) as usize;
    let upper = k - edges.div_ceil(max_deg as usize);
    if size + upper <= *best {
        return;
    }
    branch(adj, cand & !(adj[pivot] | 1 << pivot), size + 1, best);
    branch(adj, cand & !(1 << pivot), size, best);
}

pub fn is_stable(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| g.neighbors(v).intersection(set).is_empty())
}

/// Every stable set of size `alpha(g)`, sorted by bitset value.
pub fn all_max_stable_sets(g: &Graph) -> Result<Vec<VertexSet>, StabilityError> {
    if g.n() > ALL_MAX_STABLE_SETS_MAX_N {
        return Err(StabilityError::TooLarge { n: g.n(), max: ALL_MAX_STABLE_SETS_MAX_N });
    }
    let target = alpha(g);
    let mut out = Vec::new();
    collect_stable(g.adjacency(), g.vertices().bits(), 0, target, &mut out);
    out.sort();
    Ok(out)
}

fn collect_stable(adj: &[u32], cand: u32, cur: u32, target: usize, out: &mut Vec<VertexSet>) {
    let size = cur.count_ones() as usize;
    if size == target {
        out.push(VertexSet::from_bits(cur));
        return;
    }
    if size + (cand.count_ones() as usize) < target {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    collect_stable(adj, cand & !(adj[v] | 1 << v), cur | 1 << v, target, out);
    collect_stable(adj, cand & !(1 << v), cur, target, out);
}

/// The critical edges `E_c` of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalEdgeSet {
    pub host: Graph,
    pub edges: Vec<Edge>,
}

impl CriticalEdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// The spanning subgraph of the host formed by these edges.
    pub fn as_graph(&self) -> Graph {
        let pairs: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        Graph::from_edges(self.host.n(), &pairs).expect("critical edges are host edges")
    }
}

/// Edges whose deletion raises the stability number, in lexicographic order.
pub fn critical_edges(g: &Graph) -> CriticalEdgeSet {
    let a = alpha(g);
    let edges = g.edges().into_iter().filter(|&e| alpha(&g.delete_edge(e).expect("edge of g")) > a).collect();
    CriticalEdgeSet { host: *g, edges }
}

/// First non-critical edge in lexicographic order, given `alpha(g)`.
fn first_noncritical(g: &Graph, a: usize) -> Option<Edge> {
    g.edges().into_iter().find(|&e| alpha(&g.delete_edge(e).expect("edge of g")) == a)
}

/// Every edge is critical. Edgeless graphs qualify vacuously.
pub fn is_alpha_critical(g: &Graph) -> bool {
    first_noncritical(g, alpha(g)).is_none()
}

/// A spanning alpha-critical subgraph with the same stability number that
/// keeps every critical edge of `g`, obtained by deleting the
/// lexicographically smallest non-critical edge of the current graph until
/// none is left.
pub fn critical_subgraph(g: &Graph) -> Graph {
    let a = alpha(g);
    let mut h = *g;
    while let Some(e) = first_noncritical(&h, a) {
        h = h.delete_edge(e).expect("edge of h");
    }
    h
}

/// `G -c u`: the graph on `V(G - u)` whose edges are the critical edges of
/// `G - u`, in the labels of `G - u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMinusC {
    pub graph: Graph,
    /// Maps vertices of `graph` to vertices of the input graph.
    pub map: VertexMap,
}

impl GMinusC {
    /// Edges in the labels of the input graph.
    pub fn host_edges(&self) -> Vec<Edge> {
        self.graph.edges().into_iter().map(|e| Edge::new(self.map.to_old(e.u), self.map.to_old(e.v))).collect()
    }
}

fn require_connected_alpha_critical(g: &Graph) -> Result<(), StabilityError> {
    if !g.is_connected() {
        return Err(StabilityError::NotConnected);
    }
    if let Some(e) = first_noncritical(g, alpha(g)) {
        return Err(StabilityError::NotAlphaCritical(e));
    }
    Ok(())
}

/// Builds `G -c u` from `E_c(G - u)` and cross-checks it against the
/// characterization through maximum stable sets of `G - e`
/// ([`g_minus_c_via_stable_sets`]). Requires `g` connected and
/// alpha-critical, so that deleting a vertex keeps the stability number.
pub fn g_minus_c(g: &Graph, u: usize) -> Result<GMinusC, StabilityError> {
    require_connected_alpha_critical(g)?;
    let (h, map) = g.delete_vertex(u)?;
    let graph = critical_edges(&h).as_graph();
    let direct = GMinusC { graph, map };

    let mut via_sets = g_minus_c_via_stable_sets(g, u)?;
    via_sets.sort();
    let mut ours = direct.host_edges();
    ours.sort();
    if let Some(&edge) = ours
        .iter()
        .filter(|e| via_sets.binary_search(e).is_err())
        .chain(via_sets.iter().filter(|e| ours.binary_search(e).is_err()))
        .next()
    {
        return Err(StabilityError::Eq1Mismatch { vertex: u, edge });
    }
    Ok(direct)
}

/// Critical edges `e` of `g` for which some maximum stable set of `g - e`
/// avoids `u`, in the labels of `g`.
pub fn g_minus_c_via_stable_sets(g: &Graph, u: usize) -> Result<Vec<Edge>, StabilityError> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: u, n: g.n() }.into());
    }
    let mut out = Vec::new();
    for e in critical_edges(g).edges {
        let sets = all_max_stable_sets(&g.delete_edge(e)?)?;
        if sets.iter().any(|s| !s.contains(u)) {
            out.push(e);
        }
    }
    Ok(out)
}

/// A stable set offered as a maximum one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetCertificate {
    pub set: VertexSet,
    pub claimed_alpha: usize,
}

impl StableSetCertificate {
    /// The set is stable in `host`, lies inside it and has the claimed size.
    pub fn verify(&self, host: &Graph) -> bool {
        self.set.is_subset(host.vertices()) && is_stable(host, self.set) && self.set.len() == self.claimed_alpha
    }
}

/// Deletes the smallest vertex whose removal keeps the stability number,
/// until no such vertex exists; the survivors form a maximum stable set.
pub fn peel_max_stable_set(g: &Graph) -> StableSetCertificate {
    let a = alpha(g);
    let mut alive = g.vertices();
    while let Some(v) = alive.iter().find(|&v| {
        let mut rest = alive;
        rest.remove(v);
        alpha_induced(g, rest) == a
    }) {
        alive.remove(v);
    }
    StableSetCertificate { set: alive, claimed_alpha: a }
}
