//! Covers of the vertex set by vertices, edges and odd cycles.
//!
//! A vertex or an edge costs 1 and an odd cycle `C` costs `(|C| - 1) / 2`.
//! All costs are carried doubled so the arithmetic stays integral. Any
//! cover costs at least the stability number; for graphs without a totally
//! odd K4-subdivision the minimum equals it, and [`cover_from_theorem`]
//! builds such a cover from a critical subgraph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::stability::{alpha, critical_subgraph, peel_max_stable_set, StableSetCertificate};
use crate::tok4::{find_tok4, Tok4Certificate};

/// Largest order accepted by the exhaustive cover routines.
pub const COVER_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoverFamily {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub odd_cycles: Vec<Vec<usize>>,
    #[serde(rename = "cost_times_2")]
    pub doubled_cost: usize,
}

impl CoverFamily {
    /// Doubled cost computed from the elements.
    pub fn computed_doubled_cost(&self) -> usize {
        2 * self.vertices.len() + 2 * self.edges.len() + self.odd_cycles.iter().map(|c| c.len() - 1).sum::<usize>()
    }

    fn with_cost(mut self) -> Self {
        self.doubled_cost = self.computed_doubled_cost();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("odd_cycles[{index}] is not a cycle of the graph")]
    NotACycle { index: usize },
    #[error("odd_cycles[{index}] has even length {length}")]
    EvenCycle { index: usize, length: usize },
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("stated doubled cost {stated} differs from computed {computed}")]
    CostMismatch { stated: usize, computed: usize },
    #[error("exhaustive cover search is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("the graph contains a totally odd K4-subdivision")]
    HasTok4(Box<Tok4Certificate>),
    #[error("critical subgraph component {graph6} is not a vertex, an edge or an odd cycle")]
    TheoremViolation { graph6: String, vertices: Vec<usize> },
    #[error("stable set of size {stable} and cover of cost {cover} do not match")]
    ValueMismatch { stable: usize, cover: usize },
}

/// Checks a cover against `g` and returns its doubled cost.
pub fn verify_cover(g: &Graph, f: &CoverFamily) -> Result<usize, CoverError> {
    let n = g.n();
    let in_range = |v: usize| if v < n { Ok(()) } else { Err(CoverError::VertexOutOfRange { vertex: v, n }) };
    let mut covered = VertexSet::EMPTY;
    for &v in &f.vertices {
        in_range(v)?;
        covered.insert(v);
    }
    for &e in &f.edges {
        in_range(e.u)?;
        in_range(e.v)?;
        if !g.has_edge(e.u, e.v) {
            return Err(CoverError::NotAnEdge(e));
        }
        covered.insert(e.u);
        covered.insert(e.v);
    }
    for (index, cycle) in f.odd_cycles.iter().enumerate() {
        for &v in cycle {
            in_range(v)?;
        }
        let distinct: VertexSet = cycle.iter().copied().collect();
        let closes = (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        if cycle.len() < 3 || distinct.len() != cycle.len() || !closes {
            return Err(CoverError::NotACycle { index });
        }
        if cycle.len() % 2 == 0 {
            return Err(CoverError::EvenCycle { index, length: cycle.len() });
        }
        covered = covered.union(distinct);
    }
    if let Some(v) = g.vertices().difference(covered).first() {
        return Err(CoverError::Uncovered(v));
    }
    let computed = f.computed_doubled_cost();
    if f.doubled_cost != computed {
        return Err(CoverError::CostMismatch { stated: f.doubled_cost, computed });
    }
    Ok(computed)
}

fn check_size(g: &Graph) -> Result<(), CoverError> {
    if g.n() > COVER_MAX_N {
        Err(CoverError::TooLarge { n: g.n(), max: COVER_MAX_N })
    } else {
        Ok(())
    }
}

/// Every odd cycle once, written from its smallest vertex towards the
/// smaller of that vertex's two cycle neighbors; sorted by length, then
/// lexicographically.
pub fn enumerate_odd_cycles(g: &Graph) -> Result<Vec<Vec<usize>>, CoverError> {
    check_size(g)?;
    let mut out = Vec::new();
    for start in 0..g.n() {
        let mut path = vec![start];
        grow_cycles(g, start, &mut path, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn grow_cycles(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && path.len() % 2 == 1 && g.has_edge(last, start) && path[1] < last {
        out.push(path.clone());
    }
    for w in g.neighbors(last) {
        if w > start && !path.contains(&w) {
            path.push(w);
            grow_cycles(g, start, path, out);
            path.pop();
        }
    }
}

/// Minimum doubled cost of a cover and one cover attaining it.
///
/// Dynamic program over the set of still uncovered vertices: the smallest
/// uncovered vertex is covered by itself, by one of its edges, or by one of
/// the odd cycles through it.
pub fn rho_tilde(g: &Graph) -> Result<(usize, CoverFamily), CoverError> {
    check_size(g)?;
    let n = g.n();
    let cycles = enumerate_odd_cycles(g)?;
    let cycle_masks: Vec<u32> = cycles.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();

    #[derive(Clone, Copy)]
    enum Choice {
        Vertex(usize),
        Edge(usize, usize),
        Cycle(usize),
    }
    let size = 1usize << n;
    let mut best = vec![usize::MAX; size];
    let mut choice = vec![Choice::Vertex(0); size];
    best[0] = 0;
    // Removing covered vertices only lowers the mask, so ascending order works.
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let mut take = |rest: usize, cost: usize, c: Choice| {
            let total = best[rest] + cost;
            if total < best[s] {
                best[s] = total;
                choice[s] = c;
            }
        };
        take(s & !(1 << v), 2, Choice::Vertex(v));
        for w in g.neighbors(v) {
            take(s & !(1 << v | 1 << w), 2, Choice::Edge(v, w));
        }
        for (k, &m) in cycle_masks.iter().enumerate() {
            if m >> v & 1 == 1 {
                take(s & !(m as usize), cycles[k].len() - 1, Choice::Cycle(k));
            }
        }
    }

    let mut family = CoverFamily::default();
    let mut s = size - 1;
    while s != 0 {
        match choice[s] {
            Choice::Vertex(v) => {
                family.vertices.push(v);
                s &= !(1 << v);
            }
            Choice::Edge(v, w) => {
                family.edges.push(Edge::new(v, w));
                s &= !(1 << v | 1 << w);
            }
            Choice::Cycle(k) => {
                family.odd_cycles.push(cycles[k].clone());
                s &= !(cycle_masks[k] as usize);
            }
        }
    }
    let family = family.with_cost();
    debug_assert_eq!(family.doubled_cost, best[size - 1]);
    Ok((best[size - 1], family))
}

/// A cover of cost `alpha(g)` read off the components of
/// [`critical_subgraph`]: isolated vertices, single edges and odd cycles.
///
/// Requires `g` to have no totally odd K4-subdivision. Any other component
/// shape is reported as [`CoverError::TheoremViolation`].
pub fn cover_from_theorem(g: &Graph) -> Result<CoverFamily, CoverError> {
    if let Some(cert) = find_tok4(g) {
        return Err(CoverError::HasTok4(Box::new(cert)));
    }
    let h = critical_subgraph(g);
    let mut family = CoverFamily::default();
    for comp in h.components() {
        let c = &comp.graph;
        let to_host = |v: usize| comp.map.to_old(v);
        match c.n() {
            1 => family.vertices.push(to_host(0)),
            2 => family.edges.push(Edge::new(to_host(0), to_host(1))),
            _ if c.is_odd_cycle() => family.odd_cycles.push(cycle_order(c).into_iter().map(to_host).collect()),
            _ => {
                return Err(CoverError::TheoremViolation {
                    graph6: to_graph6(c),
                    vertices: comp.map.as_slice().to_vec(),
                })
            }
        }
    }
    Ok(family.with_cost())
}

/// Vertices of a cycle graph in traversal order starting from 0.
fn cycle_order(c: &Graph) -> Vec<usize> {
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < c.n() {
        let next = c.neighbors(cur).iter().find(|&w| w != prev && !order.contains(&w)).unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// A stable set and a cover of equal value: each certifies the optimality
/// of the other.
pub fn minmax_certificate(g: &Graph) -> Result<(StableSetCertificate, CoverFamily), CoverError> {
    let cover = cover_from_theorem(g)?;
    let stable = peel_max_stable_set(g);
    if cover.doubled_cost != 2 * stable.claimed_alpha || stable.claimed_alpha != alpha(g) {
        return Err(CoverError::ValueMismatch { stable: stable.claimed_alpha, cover: cover.doubled_cost });
    }
    Ok((stable, cover))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_simple_covers() {
        let c5 = CoverFamily { odd_cycles: vec![vec![0, 1, 2, 3, 4]], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&Graph::cycle(5), &c5), Ok(4));
        let k2 = CoverFamily { edges: vec![Edge::new(0, 1)], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&Graph::complete(2), &k2), Ok(2));
        let k4 = CoverFamily { vertices: vec![3], odd_cycles: vec![vec![0, 1, 2]], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&Graph::complete(4), &k4), Ok(4));
    }

    #[test]
    fn verify_rejections() {
        let c6 = Graph::cycle(6);
        let even = CoverFamily { odd_cycles: vec![vec![0, 1, 2, 3, 4, 5]], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&c6, &even), Err(CoverError::EvenCycle { index: 0, length: 6 }));
        let not_cycle = CoverFamily { odd_cycles: vec![vec![0, 1, 3]], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&c6, &not_cycle), Err(CoverError::NotACycle { index: 0 }));
        let partial = CoverFamily { edges: vec![Edge::new(0, 1)], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&c6, &partial), Err(CoverError::Uncovered(2)));
        let mut lying = CoverFamily { vertices: (0..6).collect(), ..Default::default() }.with_cost();
        lying.doubled_cost = 2;
        assert_eq!(verify_cover(&c6, &lying), Err(CoverError::CostMismatch { stated: 2, computed: 12 }));
        let bad_edge =
            CoverFamily { edges: vec![Edge::new(0, 2)], vertices: vec![1, 3, 4, 5], ..Default::default() }.with_cost();
        assert_eq!(verify_cover(&c6, &bad_edge), Err(CoverError::NotAnEdge(Edge::new(0, 2))));
    }

    #[test]
    fn odd_cycle_counts() {
        assert_eq!(enumerate_odd_cycles(&Graph::cycle(5)).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        let k4 = enumerate_odd_cycles(&Graph::complete(4)).unwrap();
        assert_eq!(k4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        assert!(enumerate_odd_cycles(&Graph::cube()).unwrap().is_empty());
        assert!(matches!(enumerate_odd_cycles(&Graph::petersen()), Err(CoverError::TooLarge { .. })));
    }

    #[test]
    fn rho_small_cases() {
        let (c, f) = rho_tilde(&Graph::cycle(5)).unwrap();
        assert_eq!(c, 4);
        assert_eq!(verify_cover(&Graph::cycle(5), &f), Ok(4));
        let (c, f) = rho_tilde(&Graph::complete(4)).unwrap();
        assert_eq!(c, 4);
        assert_eq!(verify_cover(&Graph::complete(4), &f), Ok(4));
        assert!(c > 2 * alpha(&Graph::complete(4)));
        assert_eq!(rho_tilde(&Graph::empty(0).unwrap()).unwrap().0, 0);
        assert_eq!(rho_tilde(&Graph::empty(3).unwrap()).unwrap().0, 6);
    }

    #[test]
    fn theorem_covers() {
        let f = cover_from_theorem(&Graph::cycle(5)).unwrap();
        assert_eq!(f.odd_cycles, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(f.doubled_cost, 4);
        let f = cover_from_theorem(&Graph::cycle(6)).unwrap();
        assert_eq!(f.edges, vec![Edge::new(0, 5), Edge::new(1, 2), Edge::new(3, 4)]);
        assert_eq!(f.doubled_cost, 6);
        assert!(matches!(cover_from_theorem(&Graph::complete(4)), Err(CoverError::HasTok4(_))));
    }

    #[test]
    fn minmax_pairs() {
        let (s, f) = minmax_certificate(&Graph::cycle(5)).unwrap();
        assert_eq!((s.claimed_alpha, f.doubled_cost), (2, 4));
        let (s, f) = minmax_certificate(&Graph::complete(2)).unwrap();
        assert_eq!((s.set.len(), f.edges.len()), (1, 1));
    }

    #[test]
    fn json_field_names() {
        let f = cover_from_theorem(&Graph::complete(2)).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v, serde_json::json!({"vertices": [], "edges": [[0, 1]], "odd_cycles": [], "cost_times_2": 2}));
    }
}
