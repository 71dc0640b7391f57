mod common;

use alphacrit::canon::canonical_form;
use alphacrit::cover::{rho_tilde, verify_cover};
use alphacrit::stability::{critical_edges, is_stable};
use alphacrit::{
    alpha, contains_tok4, critical_subgraph, find_tok4, is_alpha_critical, parse_graph6, peel_max_stable_set,
    to_graph6, Edge, Graph,
};
use common::oracle_verify;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(32)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(8)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn alpha_ignores_labels((g, perm) in graph_and_perm(14)) {
        prop_assert_eq!(alpha(&g), alpha(&g.permute(&perm)));
    }

    #[test]
    fn deleting_an_edge_raises_alpha_by_at_most_one(g in graph(12)) {
        let a = alpha(&g);
        for e in g.edges() {
            let b = alpha(&g.delete_edge(e).unwrap());
            prop_assert!(b == a || b == a + 1);
        }
    }

    #[test]
    fn critical_subgraph_properties(g in graph(9)) {
        let h = critical_subgraph(&g);
        prop_assert_eq!(alpha(&h), alpha(&g));
        prop_assert!(is_alpha_critical(&h));
        for e in critical_edges(&g).edges {
            prop_assert!(h.has_edge(e.u, e.v));
        }
        for e in h.edges() {
            prop_assert!(g.has_edge(e.u, e.v));
        }
    }

    #[test]
    fn peeling_finds_a_maximum_stable_set(g in graph(14)) {
        let cert = peel_max_stable_set(&g);
        prop_assert!(is_stable(&g, cert.set));
        prop_assert_eq!(cert.set.len(), alpha(&g));
    }

    #[test]
    fn tok4_certificates_verify_independently(g in graph(9)) {
        if let Some(cert) = find_tok4(&g) {
            prop_assert!(oracle_verify(&g, &cert));
        }
    }

    #[test]
    fn tok4_survives_adding_edges(g in graph(8), u in 0usize..8, v in 0usize..8) {
        let (u, v) = (u % g.n(), v % g.n());
        if u != v && !g.has_edge(u, v) && contains_tok4(&g) {
            prop_assert!(contains_tok4(&g.add_edge(Edge::new(u, v)).unwrap()));
        }
    }

    #[test]
    fn cover_bounds_alpha(g in graph(9)) {
        let (cost, family) = rho_tilde(&g).unwrap();
        prop_assert_eq!(verify_cover(&g, &family), Ok(cost));
        prop_assert!(2 * alpha(&g) <= cost);
    }
}
