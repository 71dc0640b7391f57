//! Executable checks of the structural facts about alpha-critical graphs,
//! run graph by graph over enumerated corpora.
//!
//! Every check yields a [`ClaimReport`]. A `fail` verdict always carries a
//! witness; a `pass` on the theorem checks carries the certificates found.

mod checks;
mod gadgets;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::graph6::to_graph6;
use crate::stability::{is_alpha_critical, StabilityError};
use crate::tok4::{is_tok4_graph, MalformedCertificate};

pub use checks::{
    check_claim_delta, check_claim_uvw, check_eq1_consistency, check_lemma_deg2, check_theorem1, check_theorem2,
    check_theorem2_all,
};
pub use gadgets::{
    case1_rotation, case2_gadget, check_case1, check_case2, lift_tok4_through_gadget, Case2Gadget, Rotation,
};
pub use search::{cube_filter, cube_uniqueness_check, find_strengthening_witness, StrengtheningWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    Theorem1,
    Theorem2,
    Lemma1,
    Claim2,
    Claim3,
    Eq1Consistency,
    Case1,
    Case2,
    Cube,
    Witness,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::Theorem1,
        ClaimId::Theorem2,
        ClaimId::Lemma1,
        ClaimId::Claim2,
        ClaimId::Claim3,
        ClaimId::Eq1Consistency,
        ClaimId::Case1,
        ClaimId::Case2,
        ClaimId::Cube,
        ClaimId::Witness,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Theorem1 => "theorem1",
            ClaimId::Theorem2 => "theorem2",
            ClaimId::Lemma1 => "lemma1",
            ClaimId::Claim2 => "claim2",
            ClaimId::Claim3 => "claim3",
            ClaimId::Eq1Consistency => "eq1_consistency",
            ClaimId::Case1 => "case1",
            ClaimId::Case2 => "case2",
            ClaimId::Cube => "cube",
            ClaimId::Witness => "witness",
        }
    }

    /// Claims evaluated one graph at a time (everything but `cube` and `witness`).
    pub fn is_per_graph(self) -> bool {
        !matches!(self, ClaimId::Cube | ClaimId::Witness)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim id {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, UnknownClaim> {
        ClaimId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub graph6: String,
    pub verdict: Verdict,
    pub witness: Option<Value>,
}

impl ClaimReport {
    pub fn new(claim: ClaimId, g: &Graph, verdict: Verdict, witness: Option<Value>) -> Self {
        debug_assert!(verdict != Verdict::Fail || witness.is_some(), "failures carry a witness");
        ClaimReport { claim, graph6: to_graph6(g), verdict, witness }
    }

    pub fn inapplicable(claim: ClaimId, g: &Graph) -> Self {
        ClaimReport::new(claim, g, Verdict::Inapplicable, None)
    }

    /// Folds per-vertex or per-triangle reports into one report per graph:
    /// any failure fails, otherwise any pass passes. Witnesses of the
    /// deciding verdict are collected into an array.
    pub fn aggregate(claim: ClaimId, g: &Graph, parts: Vec<ClaimReport>) -> Self {
        let pick = |v: Verdict| -> Vec<Value> {
            parts.iter().filter(|r| r.verdict == v).filter_map(|r| r.witness.clone()).collect()
        };
        if parts.iter().any(|r| r.verdict == Verdict::Fail) {
            ClaimReport::new(claim, g, Verdict::Fail, Some(Value::Array(pick(Verdict::Fail))))
        } else if parts.iter().any(|r| r.verdict == Verdict::Pass) {
            let w = pick(Verdict::Pass);
            ClaimReport::new(claim, g, Verdict::Pass, (!w.is_empty()).then_some(Value::Array(w)))
        } else {
            ClaimReport::inapplicable(claim, g)
        }
    }
}

/// Three mutually adjacent vertices of a host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
}

impl Triangle {
    pub fn new(g: &Graph, x1: usize, x2: usize, x3: usize) -> Result<Self, ProofLabError> {
        let distinct = x1 != x2 && x2 != x3 && x1 != x3;
        if !distinct || !g.has_edge(x1, x2) || !g.has_edge(x2, x3) || !g.has_edge(x1, x3) {
            return Err(ProofLabError::NotATriangle([x1, x2, x3]));
        }
        Ok(Triangle { x1, x2, x3 })
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// All triangles of `g`, lexicographically.
    pub fn all(g: &Graph) -> Vec<Triangle> {
        g.triangles().into_iter().map(|[x1, x2, x3]| Triangle { x1, x2, x3 }).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofLabError {
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Stability(#[from] StabilityError),
    #[error(transparent)]
    Malformed(#[from] MalformedCertificate),
    #[error("certificate does not verify in the gadget graph")]
    CertificateRejected,
}

/// K1, K2 or an odd cycle.
pub fn is_excluded_base_graph(g: &Graph) -> bool {
    g.n() == 1 || (g.n() == 2 && g.m() == 1) || g.is_odd_cycle()
}

/// Connected, alpha-critical, and not K1, K2 or an odd cycle.
pub fn theorem1_applies(g: &Graph) -> bool {
    g.is_connected() && !is_excluded_base_graph(g) && is_alpha_critical(g)
}

/// [`theorem1_applies`] and `g` is not itself a totally odd K4-subdivision.
pub fn theorem2_applies(g: &Graph) -> bool {
    theorem1_applies(g) && !is_tok4_graph(g)
}

/// Runs one per-graph claim. `cube` and `witness` are corpus-level and
/// yield an empty list here.
pub fn run_claim(claim: ClaimId, g: &Graph) -> Vec<ClaimReport> {
    let per_vertex = |f: fn(&Graph, usize) -> ClaimReport| {
        let parts = (0..g.n()).map(|u| f(g, u)).collect();
        vec![ClaimReport::aggregate(claim, g, parts)]
    };
    match claim {
        ClaimId::Theorem1 => vec![check_theorem1(g)],
        ClaimId::Theorem2 => vec![check_theorem2_all(g)],
        ClaimId::Lemma1 => vec![check_lemma_deg2(g)],
        ClaimId::Claim2 => per_vertex(check_claim_delta),
        ClaimId::Claim3 => per_vertex(check_claim_uvw),
        ClaimId::Eq1Consistency => per_vertex(check_eq1_consistency),
        ClaimId::Case1 => vec![check_case1(g)],
        ClaimId::Case2 => vec![check_case2(g)],
        ClaimId::Cube | ClaimId::Witness => Vec::new(),
    }
}

/// Runs the per-graph `claims` over `corpus` (in parallel when the
/// `parallel` feature is on) and returns the reports sorted by graph6 code,
/// then claim.
pub fn sweep(claims: &[ClaimId], corpus: &[Graph]) -> Vec<ClaimReport> {
    let one = |g: &Graph| -> Vec<ClaimReport> { claims.iter().flat_map(|&c| run_claim(c, g)).collect() };
    #[cfg(feature = "parallel")]
    let mut out: Vec<ClaimReport> = {
        use rayon::prelude::*;
        corpus.par_iter().flat_map_iter(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut out: Vec<ClaimReport> = corpus.iter().flat_map(one).collect();
    out.sort_by(|a, b| a.graph6.cmp(&b.graph6).then(a.claim.cmp(&b.claim)));
    out
}

/// Verdict counts over a report list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

impl Summary {
    pub fn of(reports: &[ClaimReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Inapplicable => s.inapplicable += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>(), Ok(c));
            assert_eq!(serde_json::to_value(c).unwrap(), Value::String(c.as_str().into()));
        }
        assert!("bogus-claim".parse::<ClaimId>().is_err());
    }

    #[test]
    fn report_json_field_order() {
        let r = ClaimReport::inapplicable(ClaimId::Theorem1, &Graph::cycle(7));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"claim":"theorem1","graph6":"FhCKG","verdict":"inapplicable","witness":null}"#
        );
    }

    #[test]
    fn triangle_validation() {
        let k4 = Graph::complete(4);
        assert!(Triangle::new(&k4, 0, 1, 2).is_ok());
        assert_eq!(Triangle::new(&Graph::cycle(4), 0, 1, 2), Err(ProofLabError::NotATriangle([0, 1, 2])));
        assert!(Triangle::new(&k4, 0, 0, 1).is_err());
        assert_eq!(Triangle::all(&k4).len(), 4);
    }

    #[test]
    fn applicability() {
        assert!(!theorem1_applies(&Graph::cycle(7)));
        assert!(!theorem1_applies(&Graph::complete(2)));
        assert!(!theorem1_applies(&Graph::empty(1).unwrap()));
        assert!(theorem1_applies(&Graph::complete(4)));
        assert!(!theorem2_applies(&Graph::complete(4)));
        assert!(theorem2_applies(&Graph::complete(5)));
        assert!(!theorem1_applies(&Graph::cycle(4)));
    }
}
