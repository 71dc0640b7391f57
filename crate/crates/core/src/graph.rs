//! Simple undirected graphs on at most 32 vertices, stored as one `u32`
//! neighbor bitset per vertex, plus the surgery primitives used throughout
//! the crate (vertex/edge deletion, edge insertion, degree-2 contraction,
//! component splitting).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} is not present")]
    MissingEdge(Edge),
    #[error("edge {0} is already present")]
    EdgePresent(Edge),
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    NotDegreeTwo { vertex: usize, degree: usize },
    #[error("the two neighbors {0} and {1} of the contracted vertex are adjacent")]
    AdjacentNeighbors(usize, usize),
}

/// A set of vertices of some host graph, as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;

    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone, Debug)]
pub struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for BitIter {}

/// An undirected edge, normalized so that `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = GraphError;

    fn try_from([a, b]: [usize; 2]) -> Result<Self, GraphError> {
        if a == b {
            Err(GraphError::Loop(a))
        } else {
            Ok(Edge::new(a, b))
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Maps the vertices of a derived graph back to the graph it came from:
/// entry `i` is the original label of new vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap(Vec<usize>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).collect())
    }

    pub fn from_vec(old: Vec<usize>) -> Self {
        VertexMap(old)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Original label of new vertex `v`.
    pub fn to_old(&self, v: usize) -> usize {
        self.0[v]
    }

    /// New label of original vertex `old`, if it survived.
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.0.iter().position(|&o| o == old)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `self` maps C -> B and `outer` maps B -> A; the result maps C -> A.
    pub fn then(&self, outer: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|&b| outer.to_old(b)).collect())
    }
}

/// A connected component together with its embedding into the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub map: VertexMap,
}

/// Simple undirected graph on `n <= 32` vertices.
///
/// `adj[v]` holds the neighbors of `v`; it is always symmetric, loop-free
/// and has no bits at positions `>= n`, so derived `Eq`/`Hash` are
/// structural equality of labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(GraphError::Loop(a));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, validating every invariant.
    pub fn from_adjacency(adj: &[u32]) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !full != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 31 - (mask & !full).leading_zeros() as usize, n });
            }
            if mask >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for w in BitIter(mask) {
                if adj[w] >> v & 1 == 0 {
                    return Err(GraphError::MissingEdge(Edge::new(v, w)));
                }
            }
            g.adj[v] = mask;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("vertex count within limit");
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).bits() & !(1 << v);
        }
        g
    }

    /// The cycle `0-1-..-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1, true);
        g
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("vertex count within limit");
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b).expect("vertex count within limit");
        for x in 0..a {
            for y in a..a + b {
                g.set_edge(x, y, true);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("valid edge list")
    }

    /// The 3-cube: vertices are 3-bit words, adjacent when they differ in one bit.
    pub fn cube() -> Self {
        let mut g = Graph::empty(8).expect("vertex count within limit");
        for x in 0..8usize {
            for bit in 0..3 {
                g.set_edge(x, x ^ (1 << bit), true);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj[..self.n].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw neighbor masks, one per vertex.
    pub fn adjacency(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// All edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] >> u >> 1) {
                out.push(Edge { u, v: v + u + 1 });
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable(0, self.vertices()) == self.vertices()
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u32;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & within.bits() & !seen.bits());
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = [u8::MAX; MAX_VERTICES];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True for connected 2-regular graphs of odd order.
    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3 && self.n % 2 == 1 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Triangles as sorted triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in BitIter(self.adj[a] >> a >> 1).map(|x| x + a + 1) {
                for c in BitIter(self.adj[a] & self.adj[b] >> b >> 1 << b << 1) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn set_edge(&mut self, a: usize, b: usize, present: bool) {
        if present {
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
        } else {
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
    }

    /// Removes `e`, which must be present.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = *self;
        g.set_edge(e.u, e.v, false);
        Ok(g)
    }

    /// Inserts `e`, which must be absent.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            return Err(GraphError::EdgePresent(e));
        }
        let mut g = *self;
        g.set_edge(e.u, e.v, true);
        Ok(g)
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().difference(VertexSet::singleton(v))))
    }

    /// Subgraph induced by `keep`, relabeled densely in increasing order.
    pub fn induced(&self, keep: VertexSet) -> (Graph, VertexMap) {
        let keep = keep.intersection(self.vertices());
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph { n: old.len(), adj: [0; MAX_VERTICES] };
        for (i, &a) in old.iter().enumerate() {
            g.adj[i] = compress(self.adj[a], keep.bits());
        }
        (g, VertexMap(old))
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for v in 0..self.n {
            for w in self.neighbors(v) {
                g.adj[perm[v]] |= 1 << perm[w];
            }
        }
        g
    }

    /// Merges `u` and its two neighbors `v`, `w` into a single vertex
    /// adjacent to `(N(v) ∪ N(w)) \ {u, v, w}`.
    ///
    /// The merged vertex takes the smallest label among `u, v, w`; the other
    /// two labels are removed and the rest shift down.
    pub fn contract_degree2(&self, u: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(u)?;
        let degree = self.degree(u);
        if degree != 2 {
            return Err(GraphError::NotDegreeTwo { vertex: u, degree });
        }
        let mut it = self.neighbors(u).iter();
        let (v, w) = (it.next().unwrap(), it.next().unwrap());
        if self.has_edge(v, w) {
            return Err(GraphError::AdjacentNeighbors(v, w));
        }
        let trio = VertexSet::from_iter([u, v, w]);
        let keep_label = u.min(v);
        let mut g = *self;
        let merged_nbrs = (self.adj[v] | self.adj[w]) & !trio.bits();
        for x in trio {
            for y in g.neighbors(x) {
                g.set_edge(x, y, false);
            }
        }
        for y in BitIter(merged_nbrs) {
            g.set_edge(keep_label, y, true);
        }
        let drop = trio.difference(VertexSet::singleton(keep_label));
        Ok(g.induced(g.vertices().difference(drop)))
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(s) = left.first() {
            let comp = self.reachable(s, left);
            let (graph, map) = self.induced(comp);
            out.push(Component { graph, map });
            left = left.difference(comp);
        }
        out
    }
}

/// Packs the bits of `word` selected by `mask` into the low positions.
fn compress(word: u32, mask: u32) -> u32 {
    let mut out = 0;
    for (i, b) in BitIter(mask).enumerate() {
        out |= (word >> b & 1) << i;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
