//! Isomorphism-reduced enumeration of small graphs.
//!
//! Graphs on `k` vertices are produced from one representative of every
//! class on `k - 1` vertices by attaching a new vertex to each possible
//! neighbor subset, then deduplicated by canonical code. Every graph on `k`
//! vertices arises this way (delete any vertex to see its parent).

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::canon::canonical_labeling;
use crate::graph::{Graph, VertexSet};

/// Largest order the built-in enumerator produces.
pub const ENUMERATE_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "built-in enumeration covers 1..={ENUMERATE_MAX_N} vertices, got {0}; \
     supply larger corpora as graph6 files"
)]
pub struct EnumerateError(pub usize);

/// One representative per isomorphism class of graphs on `n` vertices,
/// canonically labeled and sorted by canonical form.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(1..=ENUMERATE_MAX_N).contains(&n) {
        return Err(EnumerateError(n));
    }
    let mut level = vec![Graph::empty(1).unwrap()];
    for _ in 1..n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for parent in &level {
            for child in vertex_extensions(parent) {
                let (code, perm) = canonical_labeling(&child);
                next.entry(code).or_insert_with(|| child.permute(&perm));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected members of [`enumerate_all`], same order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Connected graphs on `1..=max_n` vertices, by order then canonical form.
pub fn connected_corpus(max_n: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

/// The `2^n` graphs obtained by adding vertex `n` with every neighbor set.
pub fn vertex_extensions(parent: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let n = parent.n();
    (0u32..1 << n).map(move |mask| {
        let mut adj = parent.adjacency().to_vec();
        for v in VertexSet::from_bits(mask) {
            adj[v] |= 1 << n;
        }
        adj.push(mask);
        Graph::from_adjacency(&adj).expect("extension of a valid graph is valid")
    })
}

/// One level of extension with a caller-supplied canonical key: all graphs
/// on `n + 1` vertices given one representative per class on `n`. Output is
/// sorted by key.
pub fn extend_by_vertex<F>(parents: &[Graph], key: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> u64 + Sync,
{
    #[cfg(feature = "parallel")]
    let chunks: Vec<HashMap<u64, Graph>> = {
        use rayon::prelude::*;
        parents.par_iter().map(|p| extensions_keyed(p, &key)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let chunks: Vec<HashMap<u64, Graph>> = parents.iter().map(|p| extensions_keyed(p, &key)).collect();

    let mut all: BTreeMap<u64, Graph> = BTreeMap::new();
    for chunk in chunks {
        for (k, g) in chunk {
            all.entry(k).or_insert(g);
        }
    }
    all.into_values().collect()
}

fn extensions_keyed<F: Fn(&Graph) -> u64>(parent: &Graph, key: &F) -> HashMap<u64, Graph> {
    let mut out = HashMap::new();
    for child in vertex_extensions(parent) {
        out.entry(key(&child)).or_insert(child);
    }
    out
}
