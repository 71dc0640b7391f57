//! Exact tools for alpha-critical graphs on a handful of vertices.
//!
//! The crate computes stable-set invariants, finds and checks totally odd
//! K4-subdivisions, builds minimum covers by vertices, edges and odd cycles,
//! and sweeps enumerated graph corpora through executable versions of the
//! structural lemmas about alpha-critical graphs.
//!
//! ```
//! use alphacrit::{alpha, critical_subgraph, find_tok4, parse_graph6, rho_tilde, verify_tok4};
//!
//! let k5 = parse_graph6("D~{").unwrap();
//! assert_eq!(alpha(&k5), 1);
//! let cert = find_tok4(&k5).expect("K4 inside K5");
//! assert_eq!(verify_tok4(&k5, &cert), Ok(true));
//!
//! let c5 = parse_graph6("Dhc").unwrap();
//! let (doubled, _cover) = rho_tilde(&c5).unwrap();
//! assert_eq!(doubled, 4);
//! assert_eq!(critical_subgraph(&c5), c5);
//! ```

pub mod canon;
pub mod cover;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod prooflab;
pub mod stability;
pub mod tok4;

pub use canon::canonical_form;
pub use cover::{cover_from_theorem, minmax_certificate, rho_tilde, verify_cover, CoverFamily};
pub use enumerate::{enumerate_all, enumerate_connected};
pub use graph::{Edge, Graph, GraphError, VertexMap, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
pub use stability::{alpha, critical_edges, critical_subgraph, is_alpha_critical, peel_max_stable_set};
pub use tok4::{contains_tok4, find_tok4, verify_tok4, Tok4Certificate};
