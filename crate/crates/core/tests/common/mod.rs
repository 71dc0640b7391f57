//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search routines under test; only `Graph` accessors are used.

#![allow(dead_code)]

use std::path::PathBuf;

use alphacrit::enumerate::{enumerate_all, enumerate_connected};
use alphacrit::graph6::read_graph6;
use alphacrit::tok4::PAIRS;
use alphacrit::{Graph, Tok4Certificate};

pub fn corpus_file(name: &str) -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name);
    let file = std::fs::File::open(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    read_graph6(std::io::BufReader::new(file)).unwrap().into_iter().map(|g| g.expect("shipped corpus parses")).collect()
}

/// Every graph on 1..=7 vertices.
pub fn all_up_to_7() -> Vec<Graph> {
    (1..=7).flat_map(|n| enumerate_all(n).unwrap()).collect()
}

pub fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| enumerate_connected(k).unwrap()).collect()
}

fn stable(g: &Graph, mask: u32) -> bool {
    (0..g.n()).all(|v| mask >> v & 1 == 0 || g.neighbors(v).bits() & mask == 0)
}

pub fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.n()).filter(|&s| stable(g, s)).map(u32::count_ones).max().unwrap_or(0) as usize
}

pub fn brute_alpha_critical(g: &Graph) -> bool {
    let a = brute_alpha(g);
    g.edges().into_iter().all(|e| brute_alpha(&g.delete_edge(e).unwrap()) > a)
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Whether the edge subset is a subdivided K4 with all six branch paths odd.
fn subset_is_tok4(n: usize, edges: &[(usize, usize)], pick: u64) -> bool {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if pick >> i & 1 == 1 {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let used: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    let branch: Vec<usize> = used.iter().copied().filter(|&v| adj[v].len() == 3).collect();
    if branch.len() != 4 || used.iter().any(|&v| adj[v].len() != 2 && adj[v].len() != 3) {
        return false;
    }
    let mut pairs = Vec::new();
    for &b in &branch {
        for &first in &adj[b] {
            let (mut prev, mut cur, mut len) = (b, first, 1);
            while adj[cur].len() == 2 {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
                if len > n {
                    return false;
                }
            }
            if cur == b || len % 2 == 0 {
                return false;
            }
            pairs.push((b.min(cur), b.max(cur)));
        }
    }
    pairs.sort();
    pairs.dedup();
    // six distinct pairs on four branch vertices: all of them, so the
    // subgraph is connected and K4-shaped
    pairs.len() == 6
}

/// Exhaustive search over edge subsets: a subdivided K4 spanning `j`
/// vertices has exactly `j + 2` edges.
pub fn brute_contains_tok4(g: &Graph) -> bool {
    let edges = edge_list(g);
    let m = edges.len();
    for k in 6..=(g.n() + 2).min(m) {
        // Gosper's hack over k-subsets of m edges
        let mut pick: u64 = (1 << k) - 1;
        while pick < 1 << m {
            if subset_is_tok4(g.n(), &edges, pick) {
                return true;
            }
            let c = pick & pick.wrapping_neg();
            let r = pick + c;
            pick = (((r ^ pick) >> 2) / c) | r;
        }
    }
    false
}

/// Certificate check written from the definition, independent of the
/// library verifier.
pub fn oracle_verify(g: &Graph, cert: &Tok4Certificate) -> bool {
    let b = cert.branch;
    if b.iter().any(|&x| x >= g.n()) {
        return false;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if b[i] == b[j] {
                return false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    for &x in &b {
        seen[x] = true;
    }
    for (path, &(i, j)) in cert.paths.iter().zip(PAIRS.iter()) {
        if path.len() < 2 || path[0] != b[i] || path[path.len() - 1] != b[j] || path.len() % 2 != 0 {
            return false;
        }
        if path.windows(2).any(|w| w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1])) {
            return false;
        }
        for &x in &path[1..path.len() - 1] {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
    }
    true
}

/// Doubled cover cost by a DP over vertex partitions into singletons
/// (cost 2), edges (cost 2) and vertex sets spanned by an odd cycle
/// (cost |C| - 1). An optimal cover can always be made disjoint.
pub fn brute_rho_tilde_doubled(g: &Graph) -> usize {
    let n = g.n();
    let full = (1usize << n) - 1;
    let hamiltonian_odd: Vec<bool> = (0..=full).map(|s| spans_odd_cycle(g, s)).collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        // subsets of s containing its lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            let k = part.count_ones() as usize;
            let cost = match k {
                1 => Some(2),
                2 => {
                    let u = part.trailing_zeros() as usize;
                    let v = (part ^ (1 << u)).trailing_zeros() as usize;
                    g.has_edge(u, v).then_some(2)
                }
                _ if k % 2 == 1 && hamiltonian_odd[part] => Some(k - 1),
                _ => None,
            };
            if let Some(c) = cost {
                let r = best[s ^ part];
                if r != usize::MAX {
                    best[s] = best[s].min(r + c);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

/// Whether the vertex set `s` (at least 3 vertices) carries a Hamiltonian cycle.
fn spans_odd_cycle(g: &Graph, s: usize) -> bool {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
    let k = verts.len();
    if k < 3 {
        return false;
    }
    // Hamiltonian path DP from verts[0]
    let mut reach = vec![0u32; 1 << k];
    reach[1] = 1;
    for mask in 1..1usize << k {
        if mask & 1 == 0 {
            continue;
        }
        for end in 0..k {
            if reach[mask] >> end & 1 == 0 {
                continue;
            }
            for next in 0..k {
                if mask >> next & 1 == 0 && g.has_edge(verts[end], verts[next]) {
                    reach[mask | 1 << next] |= 1 << next;
                }
            }
        }
    }
    (1..k).any(|end| reach[(1 << k) - 1] >> end & 1 == 1 && g.has_edge(verts[end], verts[0]))
}
