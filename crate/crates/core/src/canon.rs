//! Canonical forms for small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency string (graph6 column order) over all vertex
//! orderings. The search fixes positions one at a time, emits the column of
//! the newly placed vertex, and abandons any branch whose prefix already
//! exceeds the best string found. Two unplaced vertices with the same
//! neighborhood are interchangeable, so only one of them is tried.

use thiserror::Error;

use crate::graph::{BitIter, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_FORM_MAX_N: usize = 9;

/// Largest order whose adjacency string fits the `u64` codes used here.
pub const CODE_MAX_N: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical form search over all orderings is limited to {max} vertices, got {n}")]
pub struct CanonError {
    pub n: usize,
    pub max: usize,
}

/// Canonical adjacency string of `g` as `'0'`/`'1'` characters, length
/// `n(n-1)/2`. Equal exactly for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<String, CanonError> {
    if g.n() > CANONICAL_FORM_MAX_N {
        return Err(CanonError { n: g.n(), max: CANONICAL_FORM_MAX_N });
    }
    let (code, _) = canonical_labeling(g);
    Ok(code_to_string(code, g.n()))
}

/// Renders a code produced here as its bit string.
pub fn code_to_string(code: u64, n: usize) -> String {
    let bits = n * n.saturating_sub(1) / 2;
    (0..bits).rev().map(|i| if code >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Upper-triangle adjacency string of `g` in its current labeling.
pub fn adjacency_string(g: &Graph) -> String {
    (1..g.n())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .map(|(i, j)| if g.has_edge(i, j) { '1' } else { '0' })
        .collect()
}

/// Minimal code over all orderings together with the relabeling that
/// achieves it: `perm[v]` is the canonical position of vertex `v`.
///
/// Panics if `g.n() > CODE_MAX_N`.
pub fn canonical_labeling(g: &Graph) -> (u64, Vec<usize>) {
    let allowed = vec![g.vertices().bits(); g.n()];
    search(g, &allowed)
}

/// A canonical code that only ranges over orderings compatible with the
/// stable color refinement of `g` (cells sorted by color). Isomorphism
/// invariant like [`canonical_labeling`], but much cheaper for graphs whose
/// vertices are distinguishable by iterated degree information. The two
/// codes are not comparable with each other.
pub fn refined_canonical_code(g: &Graph) -> u64 {
    let colors = refine_colors(g);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| colors[v]);
    let allowed: Vec<u32> =
        order.iter().map(|&v| (0..g.n()).filter(|&w| colors[w] == colors[v]).fold(0u32, |m, w| m | 1 << w)).collect();
    search(g, &allowed).0
}

/// Stable coloring from iterated degree refinement; colors are dense ranks
/// of canonical signatures, so they are preserved by isomorphisms.
pub fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    allowed: &'a [u32],
    total_bits: usize,
    order: Vec<usize>,
    best: Option<u64>,
    best_order: Vec<usize>,
}

fn search(g: &Graph, allowed: &[u32]) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= CODE_MAX_N, "canonical codes support at most {CODE_MAX_N} vertices");
    let mut s = Search {
        g,
        allowed,
        total_bits: n * n.saturating_sub(1) / 2,
        order: Vec::with_capacity(n),
        best: None,
        best_order: Vec::new(),
    };
    s.dfs(0, 0);
    let mut perm = vec![0; n];
    for (pos, &v) in s.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    (s.best.unwrap_or(0), perm)
}

impl Search<'_> {
    fn dfs(&mut self, used: u32, cur: u64) {
        let pos = self.order.len();
        if pos == self.g.n() {
            if self.best.is_none_or(|b| cur < b) {
                self.best = Some(cur);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let mut cands: Vec<(u64, usize)> = BitIter(self.allowed[pos] & !used)
            .map(|c| {
                let nb = self.g.neighbors(c);
                let col = self.order.iter().fold(0u64, |acc, &p| acc << 1 | nb.contains(p) as u64);
                (col, c)
            })
            .collect();
        cands.sort_unstable();

        let prefix_len = pos * (pos + 1) / 2;
        let mut tried: Vec<usize> = Vec::new();
        for (col, c) in cands {
            let next = cur << pos | col;
            if let Some(best) = self.best {
                if next > best >> (self.total_bits - prefix_len) {
                    break;
                }
            }
            if tried.iter().any(|&t| self.twins(t, c)) {
                continue;
            }
            tried.push(c);
            self.order.push(c);
            self.dfs(used | 1 << c, next);
            self.order.pop();
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let mask = !(1u32 << a | 1u32 << b);
        self.g.neighbors(a).bits() & mask == self.g.neighbors(b).bits() & mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    /// Minimum over every permutation, no pruning.
    fn brute_force(g: &Graph) -> String {
        fn rec(g: &Graph, perm: &mut Vec<usize>, left: &mut Vec<usize>, best: &mut Option<String>) {
            if left.is_empty() {
                let s = adjacency_string(&g.permute(perm));
                if best.as_ref().is_none_or(|b| s < *b) {
                    *best = Some(s);
                }
                return;
            }
            for k in 0..left.len() {
                let v = left.remove(k);
                perm.push(v);
                rec(g, perm, left, best);
                perm.pop();
                left.insert(k, v);
            }
        }
        // Ranging over all permutations, so it does not matter whether
        // `perm` is read as position -> vertex or vertex -> position.
        let mut best = None;
        rec(g, &mut Vec::new(), &mut (0..g.n()).collect(), &mut best);
        best.unwrap()
    }

    #[test]
    fn matches_unpruned_search_on_small_graphs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..30 {
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        if rand::Rng::gen_bool(&mut rng, 0.5) {
                            edges.push((i, j));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(canonical_form(&g).unwrap(), brute_force(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn relabeled_c5_agrees() {
        let a = Graph::cycle(5);
        let b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_ne!(a, b);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn c4_and_paw_differ() {
        let c4 = Graph::cycle(4);
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(c4.m(), paw.m());
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&paw).unwrap());
        assert_eq!(canonical_form(&c4).unwrap(), "011110");
        assert_eq!(canonical_form(&paw).unwrap(), "001111");
    }

    #[test]
    fn complete_graph_is_its_own_form() {
        assert_eq!(canonical_form(&Graph::complete(4)).unwrap(), "111111");
        assert_eq!(canonical_form(&Graph::empty(9).unwrap()).unwrap(), "0".repeat(36));
    }

    #[test]
    fn rejects_large_orders() {
        assert_eq!(canonical_form(&Graph::petersen()), Err(CanonError { n: 10, max: CANONICAL_FORM_MAX_N }));
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = Graph::petersen();
        let (code, perm) = canonical_labeling(&g);
        let h = g.permute(&perm);
        let (code2, _) = canonical_labeling(&h);
        assert_eq!(code, code2);
        assert_eq!(code_to_string(code, 10), adjacency_string(&h));
    }

    #[test]
    fn refined_code_is_invariant() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for g in [Graph::petersen(), Graph::cube(), Graph::cycle(9), Graph::path(8)] {
            let base = refined_canonical_code(&g);
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(refined_canonical_code(&g.permute(&perm)), base);
            }
        }
        assert_ne!(refined_canonical_code(&Graph::cycle(8)), refined_canonical_code(&Graph::cube()));
    }
}
