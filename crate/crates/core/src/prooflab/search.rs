use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{theorem2_applies, ClaimId, ClaimReport, Triangle, Verdict};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::stability::is_alpha_critical;
use crate::tok4::{find_tok4, verify_tok4, Tok4Certificate};

fn contains_k23(g: &Graph) -> bool {
    // two vertices with at least three common neighbors
    (0..g.n()).any(|a| (a + 1..g.n()).any(|b| g.neighbors(a).intersection(g.neighbors(b)).len() >= 3))
}

fn incident_pairs_on_4cycles(g: &Graph) -> bool {
    // edges xa, xb lie on a 4-cycle x a y b iff a and b share a neighbor y != x
    (0..g.n()).all(|x| {
        let nb: Vec<usize> = g.neighbors(x).iter().collect();
        nb.iter().enumerate().all(|(i, &a)| {
            nb[i + 1..].iter().all(|&b| {
                let mut common = g.neighbors(a).intersection(g.neighbors(b));
                common.remove(x);
                !common.is_empty()
            })
        })
    })
}

/// Connected, cubic, triangle-free, no K(2,3) subgraph, and every two
/// incident edges on a common 4-cycle.
pub fn cube_filter(g: &Graph) -> bool {
    g.n() > 0
        && g.is_connected()
        && g.min_degree() == 3
        && g.max_degree() == 3
        && g.triangles().is_empty()
        && !contains_k23(g)
        && incident_pairs_on_4cycles(g)
}

/// Filters `corpus` and passes iff the survivors are exactly one graph
/// isomorphic to the cube, and the cube is not alpha-critical. The report
/// is filed under the cube's graph6 code; it is inapplicable when the
/// corpus stops short of 8 vertices.
pub fn cube_uniqueness_check(corpus: &[Graph]) -> ClaimReport {
    let cube = Graph::cube();
    let max_n = corpus.iter().map(Graph::n).max().unwrap_or(0);
    if max_n < 8 {
        return ClaimReport::new(ClaimId::Cube, &cube, Verdict::Inapplicable, Some(json!({ "max_n": max_n })));
    }
    let survivors: Vec<&Graph> = corpus.iter().filter(|g| cube_filter(g)).collect();
    let cube_code = crate::canon::canonical_labeling(&cube).0;
    let only_cube =
        survivors.len() == 1 && survivors[0].n() == 8 && crate::canon::canonical_labeling(survivors[0]).0 == cube_code;
    let cube_critical = is_alpha_critical(&cube);
    let witness = json!({
        "max_n": max_n,
        "survivors": survivors.iter().map(|g| to_graph6(g)).collect::<Vec<_>>(),
        "cube_alpha_critical": cube_critical,
    });
    let verdict = if only_cube && !cube_critical { Verdict::Pass } else { Verdict::Fail };
    ClaimReport::new(ClaimId::Cube, &cube, verdict, Some(witness))
}

/// A graph meeting the hypothesis of the triangle theorem, with a triangle
/// for which exactly two of the three vertex deletions contain a totally
/// odd K4-subdivision. Certificates are in the labels of `graph`;
/// `certificates[i]` avoids the i-th triangle vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrengtheningWitness {
    #[serde(with = "graph6_text")]
    pub graph: Graph,
    pub triangle: Triangle,
    pub certificates: [Option<Tok4Certificate>; 3],
}

impl StrengtheningWitness {
    /// Re-checks from scratch: hypothesis holds, the two certificates verify
    /// and avoid their vertex, and the remaining deletion has none.
    pub fn recheck(&self) -> bool {
        let g = &self.graph;
        if Triangle::new(g, self.triangle.x1, self.triangle.x2, self.triangle.x3).is_err() || !theorem2_applies(g) {
            return false;
        }
        let mut present = 0;
        for (x, cert) in self.triangle.vertices().into_iter().zip(&self.certificates) {
            let (h, map) = g.delete_vertex(x).expect("triangle vertex");
            match cert {
                Some(c) => {
                    if c.vertex_set().contains(x) {
                        return false;
                    }
                    let local = c.relabel(|v| map.to_new(v).unwrap());
                    if verify_tok4(&h, &local) != Ok(true) {
                        return false;
                    }
                    present += 1;
                }
                None => {
                    if find_tok4(&h).is_some() {
                        return false;
                    }
                }
            }
        }
        present == 2
    }
}

mod graph6_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;
    use crate::graph6::{parse_graph6, to_graph6};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

fn witness_in(g: &Graph) -> Option<StrengtheningWitness> {
    let triangles = Triangle::all(g);
    if triangles.is_empty() || !theorem2_applies(g) {
        return None;
    }
    let mut memo: Vec<Option<Option<Tok4Certificate>>> = vec![None; g.n()];
    for t in triangles {
        let certificates = t.vertices().map(|x| {
            memo[x]
                .get_or_insert_with(|| {
                    let (h, map) = g.delete_vertex(x).expect("triangle vertex");
                    find_tok4(&h).map(|c| c.relabel(|v| map.to_old(v)))
                })
                .clone()
        });
        if certificates.iter().filter(|c| c.is_some()).count() == 2 {
            return Some(StrengtheningWitness { graph: *g, triangle: t, certificates });
        }
    }
    None
}

/// First graph of `corpus` (in the given order) and its first triangle where
/// exactly two vertex deletions contain a totally odd K4-subdivision.
pub fn find_strengthening_witness(corpus: &[Graph]) -> Option<StrengtheningWitness> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        corpus.par_iter().find_map_first(witness_in)
    }
    #[cfg(not(feature = "parallel"))]
    {
        corpus.iter().find_map(witness_in)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_passes_filter() {
        assert!(cube_filter(&Graph::cube()));
        assert!(!cube_filter(&Graph::petersen()));
        assert!(!cube_filter(&Graph::complete_bipartite(3, 3)));
        assert!(!cube_filter(&Graph::complete(4)));
    }

    #[test]
    fn cube_report() {
        let r = cube_uniqueness_check(&[Graph::cycle(5), Graph::cube(), Graph::petersen()]);
        assert_eq!(r.verdict, Verdict::Pass);
        let perm: Vec<usize> = vec![3, 7, 1, 0, 6, 2, 5, 4];
        let r = cube_uniqueness_check(&[Graph::cube().permute(&perm)]);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(cube_uniqueness_check(&[]).verdict, Verdict::Inapplicable);
        let r = cube_uniqueness_check(&[Graph::cube(), Graph::cube()]);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.witness.unwrap()["survivors"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn odd_cycles_have_no_witness() {
        let corpus: Vec<Graph> = [3, 5, 7, 9].map(Graph::cycle).to_vec();
        assert_eq!(find_strengthening_witness(&corpus), None);
    }
}
