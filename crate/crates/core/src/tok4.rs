//! Totally odd K4-subdivisions: certificates, an exhaustive finder and an
//! independent checker.
//!
//! A certificate names four branch vertices and, for each of the six branch
//! pairs, a path between them. The paths must have odd length and be
//! internally disjoint from each other and from the branch set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexSet};

/// Branch pairs in path order: ab, ac, ad, bc, bd, cd.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "CertificateJson", into = "CertificateJson")]
pub struct Tok4Certificate {
    pub branch: [usize; 4],
    /// `paths[k]` runs from `branch[PAIRS[k].0]` to `branch[PAIRS[k].1]`.
    pub paths: [Vec<usize>; 6],
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    branch: [usize; 4],
    paths: PathsJson,
}

#[derive(Serialize, Deserialize)]
struct PathsJson {
    ab: Vec<usize>,
    ac: Vec<usize>,
    ad: Vec<usize>,
    bc: Vec<usize>,
    bd: Vec<usize>,
    cd: Vec<usize>,
}

impl From<CertificateJson> for Tok4Certificate {
    fn from(c: CertificateJson) -> Self {
        let PathsJson { ab, ac, ad, bc, bd, cd } = c.paths;
        Tok4Certificate { branch: c.branch, paths: [ab, ac, ad, bc, bd, cd] }
    }
}

impl From<Tok4Certificate> for CertificateJson {
    fn from(c: Tok4Certificate) -> Self {
        let [ab, ac, ad, bc, bd, cd] = c.paths;
        CertificateJson { branch: c.branch, paths: PathsJson { ab, ac, ad, bc, bd, cd } }
    }
}

impl Tok4Certificate {
    /// Every vertex the subdivision touches.
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().flatten().copied().chain(self.branch).collect()
    }

    /// Every edge the subdivision uses.
    pub fn edge_list(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.paths.iter().flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1]))).collect();
        out.sort();
        out
    }

    /// Renames every vertex through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Tok4Certificate {
        Tok4Certificate {
            branch: self.branch.map(&f),
            paths: self.paths.clone().map(|p| p.into_iter().map(&f).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed certificate: vertex {vertex} out of range for a graph on {n} vertices")]
pub struct MalformedCertificate {
    pub vertex: usize,
    pub n: usize,
}

/// Why a well-formed certificate fails to describe a totally odd
/// K4-subdivision of the host.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Tok4Violation {
    #[error(transparent)]
    Malformed(#[from] MalformedCertificate),
    #[error("branch vertices are not distinct")]
    RepeatedBranch,
    #[error("path {pair} does not join its branch vertices")]
    WrongEnds { pair: usize },
    #[error("path {pair} uses the non-edge {a}-{b}")]
    NotAnEdge { pair: usize, a: usize, b: usize },
    #[error("path {pair} repeats vertex {vertex}")]
    RepeatedVertex { pair: usize, vertex: usize },
    #[error("path {pair} has even length {length}")]
    EvenLength { pair: usize, length: usize },
    #[error("interior vertex {vertex} is shared or is a branch vertex")]
    InteriorClash { vertex: usize },
}

/// Checks every certificate condition against `g`, reporting the first
/// failure.
pub fn check_tok4(g: &Graph, cert: &Tok4Certificate) -> Result<(), Tok4Violation> {
    let n = g.n();
    for &v in cert.branch.iter().chain(cert.paths.iter().flatten()) {
        if v >= n {
            return Err(MalformedCertificate { vertex: v, n }.into());
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if cert.branch[i] == cert.branch[j] {
                return Err(Tok4Violation::RepeatedBranch);
            }
        }
    }
    let mut seen_interior: Vec<usize> = Vec::new();
    for (pair, path) in cert.paths.iter().enumerate() {
        let (i, j) = PAIRS[pair];
        if path.len() < 2 || path[0] != cert.branch[i] || path[path.len() - 1] != cert.branch[j] {
            return Err(Tok4Violation::WrongEnds { pair });
        }
        for (k, &v) in path.iter().enumerate() {
            if path[..k].contains(&v) {
                return Err(Tok4Violation::RepeatedVertex { pair, vertex: v });
            }
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Tok4Violation::NotAnEdge { pair, a: w[0], b: w[1] });
            }
        }
        let length = path.len() - 1;
        if length % 2 == 0 {
            return Err(Tok4Violation::EvenLength { pair, length });
        }
        for &v in &path[1..path.len() - 1] {
            if cert.branch.contains(&v) || seen_interior.contains(&v) {
                return Err(Tok4Violation::InteriorClash { vertex: v });
            }
            seen_interior.push(v);
        }
    }
    Ok(())
}

/// `Ok(true)` iff `cert` is a totally odd K4-subdivision in `g`; out-of-range
/// vertices are an error rather than a plain `false`.
pub fn verify_tok4(g: &Graph, cert: &Tok4Certificate) -> Result<bool, MalformedCertificate> {
    match check_tok4(g, cert) {
        Ok(()) => Ok(true),
        Err(Tok4Violation::Malformed(m)) => Err(m),
        Err(_) => Ok(false),
    }
}

/// Exhaustive search for a totally odd K4-subdivision.
///
/// Branch quadruples are drawn in lexicographic order from the vertices of
/// degree at least 3; the six paths are then routed in [`PAIRS`] order by a
/// depth-first search that visits neighbors in index order, tracks parity,
/// and marks every used vertex in one shared mask. `None` means no
/// subdivision exists.
pub fn find_tok4(g: &Graph) -> Option<Tok4Certificate> {
    let cands: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let k = cands.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let branch = [cands[a], cands[b], cands[c], cands[d]];
                    let mut router =
                        Router { g, branch, paths: Default::default(), used: VertexSet::from_iter(branch).bits() };
                    if router.route(0) {
                        return Some(Tok4Certificate { branch, paths: router.paths });
                    }
                }
            }
        }
    }
    None
}

pub fn contains_tok4(g: &Graph) -> bool {
    find_tok4(g).is_some()
}

/// True when `g` itself is a totally odd K4-subdivision: connected, four
/// vertices of degree 3, all others of degree 2, and the subdivision is odd.
pub fn is_tok4_graph(g: &Graph) -> bool {
    let deg3 = (0..g.n()).filter(|&v| g.degree(v) == 3).count();
    let deg2 = (0..g.n()).filter(|&v| g.degree(v) == 2).count();
    deg3 == 4 && deg2 + 4 == g.n() && g.is_connected() && contains_tok4(g)
}

struct Router<'a> {
    g: &'a Graph,
    branch: [usize; 4],
    paths: [Vec<usize>; 6],
    used: u32,
}

impl Router<'_> {
    fn route(&mut self, pair: usize) -> bool {
        if pair == 6 {
            return true;
        }
        let (i, j) = PAIRS[pair];
        let (s, t) = (self.branch[i], self.branch[j]);
        self.paths[pair] = vec![s];
        let found = self.extend(pair, s, t);
        if !found {
            self.paths[pair].clear();
        }
        found
    }

    fn extend(&mut self, pair: usize, cur: usize, target: usize) -> bool {
        let len = self.paths[pair].len() - 1;
        for w in self.g.neighbors(cur) {
            if w == target {
                if len.is_multiple_of(2) {
                    self.paths[pair].push(w);
                    if self.route(pair + 1) {
                        return true;
                    }
                    self.paths[pair].pop();
                }
            } else if self.used >> w & 1 == 0 {
                self.used |= 1 << w;
                self.paths[pair].push(w);
                if self.extend(pair, w, target) {
                    return true;
                }
                self.paths[pair].pop();
                self.used &= !(1 << w);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_k4() -> Tok4Certificate {
        Tok4Certificate { branch: [0, 1, 2, 3], paths: PAIRS.map(|(i, j)| vec![i, j]) }
    }

    /// K4 on 0..4 with edge 0-1 replaced by 0-4-1.
    fn k4_one_subdivided() -> Graph {
        Graph::from_edges(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn identity_certificate_on_k4() {
        assert_eq!(verify_tok4(&Graph::complete(4), &identity_k4()), Ok(true));
        assert_eq!(find_tok4(&Graph::complete(4)), Some(identity_k4()));
    }

    #[test]
    fn even_detour_rejected() {
        let g = k4_one_subdivided();
        let mut cert = identity_k4();
        cert.paths[0] = vec![0, 4, 1];
        assert_eq!(check_tok4(&g, &cert), Err(Tok4Violation::EvenLength { pair: 0, length: 2 }));
        assert_eq!(verify_tok4(&g, &cert), Ok(false));
    }

    #[test]
    fn shared_interior_rejected() {
        // K4 with ab and cd both routed through vertex 4 (length 3 via 5).
        let g =
            Graph::from_edges(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (4, 5), (5, 1), (2, 4), (5, 3)]).unwrap();
        let cert = Tok4Certificate {
            branch: [0, 1, 2, 3],
            paths: [vec![0, 4, 5, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 4, 5, 3]],
        };
        assert_eq!(check_tok4(&g, &cert), Err(Tok4Violation::InteriorClash { vertex: 4 }));
    }

    #[test]
    fn out_of_range_is_malformed() {
        let mut cert = identity_k4();
        cert.paths[5] = vec![2, 9, 3];
        assert_eq!(verify_tok4(&Graph::complete(4), &cert), Err(MalformedCertificate { vertex: 9, n: 4 }));
    }

    #[test]
    fn other_violations() {
        let k4 = Graph::complete(4);
        let mut cert = identity_k4();
        cert.branch[3] = 0;
        assert_eq!(check_tok4(&k4, &cert), Err(Tok4Violation::RepeatedBranch));
        let mut cert = identity_k4();
        cert.paths[2] = vec![3, 0];
        assert_eq!(check_tok4(&k4, &cert), Err(Tok4Violation::WrongEnds { pair: 2 }));
        let c4 = Graph::cycle(4);
        assert!(matches!(check_tok4(&c4, &identity_k4()), Err(Tok4Violation::NotAnEdge { .. })));
    }

    #[test]
    fn absent_in_small_graphs() {
        for g in [Graph::cycle(5), Graph::cycle(7), Graph::complete(2), Graph::empty(1).unwrap()] {
            assert_eq!(find_tok4(&g), None);
        }
        assert_eq!(find_tok4(&k4_one_subdivided()), None);
        assert!(!contains_tok4(&Graph::cube()));
        assert!(!contains_tok4(&Graph::complete_bipartite(3, 4)));
    }

    #[test]
    fn doubly_subdivided_k4() {
        // each K4 edge becomes a path of length 3: 4 + 12 vertices
        let mut edges = Vec::new();
        let mut next = 4;
        for (a, b) in PAIRS {
            edges.extend([(a, next), (next, next + 1), (next + 1, b)]);
            next += 2;
        }
        let g = Graph::from_edges(16, &edges).unwrap();
        let cert = find_tok4(&g).unwrap();
        assert_eq!(verify_tok4(&g, &cert), Ok(true));
        assert!(is_tok4_graph(&g));
        assert!(!is_tok4_graph(&Graph::complete(5)));
        assert!(is_tok4_graph(&Graph::complete(4)));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_value(identity_k4()).unwrap();
        assert_eq!(json["branch"], serde_json::json!([0, 1, 2, 3]));
        assert_eq!(json["paths"]["cd"], serde_json::json!([2, 3]));
        let back: Tok4Certificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, identity_k4());
    }
}
