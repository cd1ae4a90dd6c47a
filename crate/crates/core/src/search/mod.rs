//! Exact and heuristic extremal search.

pub mod exact;
pub mod heuristic;
pub mod verify;

use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{CanonError, DEFAULT_CANON_CAP};
use crate::detect::{ConstraintSpec, DetectError};
use crate::hypergraph::Hypergraph;

pub use exact::{enumerate_extremal, exact_max_edges};
pub use heuristic::heuristic_lower_bound;
pub use verify::{verify_theorem, TheoremId, TheoremParams, TheoremReport, Verdict};

/// Default ceiling on the candidate edge count C(n, r) for exact mode.
pub const DEFAULT_CANDIDATE_CAP: u64 = 35;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("exact search budget: C(n, r) = {candidates} candidate edges exceeds cap {cap}")]
    TooManyCandidates { candidates: u64, cap: u64 },
    #[error("vertex universe too large for search masks: n = {n} > 64")]
    UniverseTooLarge { n: u32 },
    #[error(
        "seed hypergraph has shape (n = {seed_n}, r = {seed_r}), problem wants (n = {n}, r = {r})"
    )]
    SeedShape {
        seed_n: u32,
        seed_r: u32,
        n: u32,
        r: u32,
    },
    #[error("seed hypergraph violates `{0}`")]
    InfeasibleSeed(String),
    #[error("no hypergraph satisfies `{0}` (even the edgeless one)")]
    InfeasibleProblem(String),
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// Node, time and size limits for one search run.
#[derive(Debug, Clone)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Exact mode refuses instances with more candidate edges than this.
    pub candidate_cap: u64,
    /// Vertex cap for canonical forms (isomorph reduction, witness ties).
    pub canon_cap: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            node_limit: None,
            time_limit: None,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
            canon_cap: DEFAULT_CANON_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exact,
    Heuristic,
}

/// One extremal-search instance.
pub struct SearchProblem {
    pub n: u32,
    pub r: u32,
    pub constraints: Vec<ConstraintSpec>,
    pub mode: SearchMode,
    pub seed: Option<Hypergraph>,
    /// Deduplicate witnesses up to isomorphism.
    pub isomorph_reduce: bool,
    /// Collect every extremal hypergraph instead of just one witness.
    pub enumerate: bool,
    /// Restrict the first included edge to the least edge orbit.
    pub symmetry_restrict: bool,
    pub budget: Budget,
    /// Heuristic mode: RNG seed, recorded in the result.
    pub rng_seed: u64,
    /// Heuristic mode: number of proposed moves.
    pub iterations: u64,
}

impl SearchProblem {
    pub fn new(n: u32, r: u32, constraints: Vec<ConstraintSpec>) -> SearchProblem {
        SearchProblem {
            n,
            r,
            constraints,
            mode: SearchMode::Exact,
            seed: None,
            isomorph_reduce: true,
            enumerate: false,
            symmetry_restrict: true,
            budget: Budget::default(),
            rng_seed: 0,
            iterations: 20_000,
        }
    }
}

/// Outcome of a search run. In exact mode `optimum` is proven maximal
/// unless the budget ran out; in heuristic mode it is the best count found.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub optimum: u64,
    pub proof_of_optimality: bool,
    pub witnesses: Vec<Hypergraph>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub rng_seed: Option<u64>,
    pub budget_exhausted: bool,
}
