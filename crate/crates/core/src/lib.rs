//! An exact workbench for Turán-type extremal problems on uniform
//! hypergraphs with bounded matching number: named constructions,
//! closed-form edge counts, exact forbidden-structure detectors, and
//! isomorph-reduced exhaustive search at desk scale.
//!
//! The interchangeable pieces (constructions, formulas, checks) live in
//! name-keyed registries so frontends can select them at runtime.
//!
//! ```
//! use turanlab::constructions::main_extremal;
//! use turanlab::detect::{contains_k_family, matching_number};
//! use turanlab::formulas::main_value;
//! use num_bigint::BigUint;
//!
//! // the bounded-matching extremal 3-graph on 12 vertices: 50 edges,
//! // matching number 2, free of pair-covered 4-cores
//! let g = main_extremal(12, 3, 2, 3).unwrap().hypergraph;
//! assert_eq!(BigUint::from(g.edge_count()), main_value(12, 3, 2, 3).unwrap());
//! assert_eq!(matching_number(&g, None).size, 2);
//! assert!(contains_k_family(&g, 3).unwrap().is_none());
//! ```

pub mod canon;
pub mod constructions;
pub mod detect;
pub mod formulas;
pub mod hypergraph;
pub mod io;
pub mod search;

pub use canon::{canonical_form, canonical_form_with_cap, CanonError};
pub use constructions::{Construction, ConstructionRegistry, PartitionedHypergraph};
pub use detect::{Check, CheckRegistry, Constraint, ConstraintSpec, Witness};
pub use formulas::{Formula, FormulaRegistry};
pub use hypergraph::{
    CoOccurrenceGraph, Edge, Hypergraph, HypergraphBuilder, LineGraph, VertexLink,
};
pub use io::{read_hg, read_hg_str, write_hg, write_hg_string, HgError, ParsedHg};
pub use search::{
    enumerate_extremal, exact_max_edges, heuristic_lower_bound, verify_theorem, Budget,
    SearchError, SearchMode, SearchProblem, SearchResult, TheoremId, TheoremParams, TheoremReport,
    Verdict,
};
