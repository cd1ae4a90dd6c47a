//! Exact decision procedures for the forbidden structures and structural
//! predicates, plus the constraint objects the search engine consumes.
//!
//! Every detector is a pure function of an immutable hypergraph with
//! index-ordered tie-breaking throughout, so witnesses come out
//! byte-for-byte reproducible.

pub mod berge;
pub mod coloring;
pub mod expansion;
pub mod fano;
pub mod kfamily;
pub mod matching;
pub mod predicates;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

pub use berge::{contains_berge, PatternGraph};
pub use coloring::{greedy_edge_coloring, EdgeColoring};
pub use expansion::contains_expansion;
pub use fano::{contains_fano, contains_fano_using};
pub use kfamily::contains_k_family;
pub use matching::{has_disjoint_edges, matching_number, MatchingOutcome};
pub use predicates::{
    high_degree_vertices, is_strongly_independent, is_weakly_independent, link_freeness_check,
};

use crate::hypergraph::{Edge, Hypergraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DetectError {
    #[error("the (l+1)-core family needs l >= r, got l = {l}, r = {r}")]
    FamilyUndefined { l: u64, r: u32 },
    #[error("detector needs uniformity {expected}, hypergraph has r = {got}")]
    UniformityMismatch { expected: u32, got: u32 },
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error("bad constraint `{0}` (want kind or kind=param)")]
    BadConstraint(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("check `{check}` needs --{arg}")]
    MissingArg {
        check: &'static str,
        arg: &'static str,
    },
}

/// Re-checkable certificate attached to a positive detection (or to a
/// predicate violation). Vertex and edge index lists are sorted wherever
/// the underlying object is unordered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A pair-covered core: one covering edge per core pair, pairs in
    /// lexicographic order.
    KFamily {
        core: Vec<u32>,
        covering_edges: Vec<usize>,
    },
    /// An injective embedding: image of each pattern vertex, host edge for
    /// each pattern edge.
    Embedding {
        vertex_map: Vec<u32>,
        edge_map: Vec<usize>,
    },
    /// Pairwise disjoint edges, ascending.
    Matching { edges: Vec<usize> },
    /// An edge lying inside the queried vertex set.
    EdgeInside { edge: usize },
    /// An edge holding two or more vertices of the queried set.
    SharedEdge { edge: usize, vertices: Vec<u32> },
}

impl Witness {
    /// Structural re-validation against the host: indices exist, injections
    /// are injective, coverings cover, matchings are disjoint.
    pub fn validates(&self, h: &Hypergraph) -> bool {
        match self {
            Witness::KFamily { core, .. } => {
                self.validates_k_family(h, core.len().saturating_sub(1) as u64)
            }
            Witness::Embedding {
                vertex_map,
                edge_map,
            } => {
                let distinct: BTreeSet<&u32> = vertex_map.iter().collect();
                distinct.len() == vertex_map.len()
                    && vertex_map.iter().all(|&v| v < h.n())
                    && edge_map.iter().all(|&i| i < h.edge_count())
            }
            Witness::Matching { .. } => self.validates_matching(h),
            Witness::EdgeInside { edge } => *edge < h.edge_count(),
            Witness::SharedEdge { edge, vertices } => {
                *edge < h.edge_count()
                    && h.edges()[*edge].contains_all(vertices)
                    && vertices.len() >= 2
            }
        }
    }

    pub fn validates_k_family(&self, h: &Hypergraph, l: u64) -> bool {
        let Witness::KFamily {
            core,
            covering_edges,
        } = self
        else {
            return false;
        };
        if core.len() as u64 != l + 1 || core.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if core.iter().any(|&v| v >= h.n()) {
            return false;
        }
        let mut at = 0;
        for i in 0..core.len() {
            for j in (i + 1)..core.len() {
                let Some(&idx) = covering_edges.get(at) else {
                    return false;
                };
                if idx >= h.edge_count() || !h.edges()[idx].contains_all(&[core[i], core[j]]) {
                    return false;
                }
                at += 1;
            }
        }
        at == covering_edges.len()
    }

    pub fn validates_fano(&self, h: &Hypergraph) -> bool {
        let Witness::Embedding {
            vertex_map,
            edge_map,
        } = self
        else {
            return false;
        };
        if vertex_map.len() != 7 || edge_map.len() != 7 {
            return false;
        }
        let distinct: BTreeSet<&u32> = vertex_map.iter().collect();
        if distinct.len() != 7 || vertex_map.iter().any(|&v| v >= h.n()) {
            return false;
        }
        fano::FANO_LINES.iter().zip(edge_map).all(|(line, &idx)| {
            if idx >= h.edge_count() {
                return false;
            }
            let mut mapped: Vec<u32> = line.iter().map(|&p| vertex_map[p as usize]).collect();
            mapped.sort_unstable();
            h.edges()[idx].vertices() == mapped
        })
    }

    pub fn validates_expansion(&self, h: &Hypergraph, l: u64) -> bool {
        let Witness::Embedding {
            vertex_map: core,
            edge_map,
        } = self
        else {
            return false;
        };
        let k = l as usize + 1;
        if core.len() != k || edge_map.len() != k * (k - 1) / 2 {
            return false;
        }
        if core.windows(2).any(|w| w[0] >= w[1]) || core.iter().any(|&v| v >= h.n()) {
            return false;
        }
        let core_set: BTreeSet<u32> = core.iter().copied().collect();
        let mut fresh_seen: BTreeSet<u32> = BTreeSet::new();
        let mut at = 0;
        for i in 0..k {
            for j in (i + 1)..k {
                let idx = edge_map[at];
                at += 1;
                if idx >= h.edge_count() {
                    return false;
                }
                let e = &h.edges()[idx];
                if !e.contains(core[i]) || !e.contains(core[j]) {
                    return false;
                }
                for &v in e.vertices() {
                    if core_set.contains(&v) {
                        if v != core[i] && v != core[j] {
                            return false;
                        }
                    } else if !fresh_seen.insert(v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn validates_berge(&self, h: &Hypergraph, pattern: &PatternGraph) -> bool {
        let Witness::Embedding {
            vertex_map,
            edge_map,
        } = self
        else {
            return false;
        };
        if vertex_map.len() != pattern.n() as usize || edge_map.len() != pattern.edges().len() {
            return false;
        }
        let distinct_v: BTreeSet<&u32> = vertex_map.iter().collect();
        let distinct_e: BTreeSet<&usize> = edge_map.iter().collect();
        if distinct_v.len() != vertex_map.len() || distinct_e.len() != edge_map.len() {
            return false;
        }
        if vertex_map.iter().any(|&v| v >= h.n()) {
            return false;
        }
        pattern.edges().iter().zip(edge_map).all(|(&(a, b), &idx)| {
            idx < h.edge_count()
                && h.edges()[idx].contains_all(&[vertex_map[a as usize], vertex_map[b as usize]])
        })
    }

    pub fn validates_matching(&self, h: &Hypergraph) -> bool {
        let Witness::Matching { edges } = self else {
            return false;
        };
        if edges.iter().any(|&i| i >= h.edge_count()) {
            return false;
        }
        for (a, &i) in edges.iter().enumerate() {
            for &j in edges.iter().skip(a + 1) {
                if h.edges()[i].intersects(&h.edges()[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Parsed form of one search constraint, as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ConstraintSpec {
    KFamily { l: u64 },
    Fano,
    Expansion { l: u64 },
    Berge { pattern: PatternGraph },
    MatchingAtMost { s: u64 },
}

impl ConstraintSpec {
    /// Grammar: `k-family=L`, `expansion=L`, `matching-atmost=S`,
    /// `berge=PATTERN`, `fano`.
    pub fn parse(text: &str) -> Result<ConstraintSpec, DetectError> {
        let (kind, param) = match text.split_once('=') {
            Some((k, p)) => (k, Some(p)),
            None => (text, None),
        };
        let num = |p: Option<&str>| -> Result<u64, DetectError> {
            p.and_then(|p| p.parse().ok())
                .ok_or_else(|| DetectError::BadConstraint(text.to_string()))
        };
        match kind {
            "k-family" => Ok(ConstraintSpec::KFamily { l: num(param)? }),
            "fano" if param.is_none() => Ok(ConstraintSpec::Fano),
            "expansion" => Ok(ConstraintSpec::Expansion { l: num(param)? }),
            "matching-atmost" => Ok(ConstraintSpec::MatchingAtMost { s: num(param)? }),
            "berge" => {
                let p = param.ok_or_else(|| DetectError::BadConstraint(text.to_string()))?;
                Ok(ConstraintSpec::Berge {
                    pattern: p.parse()?,
                })
            }
            _ => Err(DetectError::BadConstraint(text.to_string())),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ConstraintSpec::KFamily { l } => format!("k-family={l}"),
            ConstraintSpec::Fano => "fano".into(),
            ConstraintSpec::Expansion { l } => format!("expansion={l}"),
            ConstraintSpec::Berge { pattern } => format!("berge={pattern}"),
            ConstraintSpec::MatchingAtMost { s } => format!("matching-atmost={s}"),
        }
    }

    /// Validates the parameters against the problem uniformity and builds
    /// the runtime constraint.
    pub fn build(&self, r: u32) -> Result<Box<dyn Constraint>, DetectError> {
        match self {
            ConstraintSpec::KFamily { l } => {
                if *l < r as u64 {
                    return Err(DetectError::FamilyUndefined { l: *l, r });
                }
                Ok(Box::new(KFamilyFree { l: *l }))
            }
            ConstraintSpec::Fano => {
                if r != 3 {
                    return Err(DetectError::UniformityMismatch {
                        expected: 3,
                        got: r,
                    });
                }
                Ok(Box::new(FanoFree))
            }
            ConstraintSpec::Expansion { l } => {
                if *l < r as u64 {
                    return Err(DetectError::FamilyUndefined { l: *l, r });
                }
                Ok(Box::new(ExpansionFree { l: *l }))
            }
            ConstraintSpec::Berge { pattern } => Ok(Box::new(BergeFree {
                pattern: pattern.clone(),
            })),
            ConstraintSpec::MatchingAtMost { s } => Ok(Box::new(MatchingAtMost { s: *s })),
        }
    }
}

/// View of the search state handed to incremental feasibility checks:
/// the chosen edges (known to satisfy every constraint) plus one candidate.
pub struct ExtensionCtx<'a> {
    pub n: u32,
    pub r: u32,
    pub edges: &'a [Edge],
    pub masks: &'a [u64],
    pub cand: &'a Edge,
    pub cand_mask: u64,
}

impl ExtensionCtx<'_> {
    fn as_hypergraph_with_cand(&self) -> (Hypergraph, usize) {
        let mut all: Vec<Vec<u32>> = self.edges.iter().map(|e| e.vertices().to_vec()).collect();
        all.push(self.cand.vertices().to_vec());
        let h = Hypergraph::from_edges(self.n, self.r, all).expect("search edges are valid");
        let idx = h
            .edges()
            .binary_search_by(|e| e.vertices().cmp(self.cand.vertices()))
            .expect("candidate was just inserted");
        (h, idx)
    }
}

/// A downward-closed feasibility condition: deleting edges can never break
/// it, which is what makes exclusion branches of the search always safe.
pub trait Constraint: Send + Sync {
    fn describe(&self) -> String;
    /// Does `h` satisfy the constraint?
    fn permits(&self, h: &Hypergraph) -> bool;
    /// A certificate that `h` violates the constraint, when it does.
    fn violation(&self, h: &Hypergraph) -> Option<Witness>;
    /// Given that the context edges satisfy the constraint, does adding the
    /// candidate edge preserve it? Only violations involving the candidate
    /// need to be searched.
    fn permits_extension(&self, ctx: &ExtensionCtx<'_>) -> bool;
}

struct KFamilyFree {
    l: u64,
}

impl Constraint for KFamilyFree {
    fn describe(&self) -> String {
        format!("k-family={}", self.l)
    }

    fn permits(&self, h: &Hypergraph) -> bool {
        contains_k_family(h, self.l)
            .expect("l validated at build")
            .is_none()
    }

    fn violation(&self, h: &Hypergraph) -> Option<Witness> {
        contains_k_family(h, self.l).expect("l validated at build")
    }

    fn permits_extension(&self, ctx: &ExtensionCtx<'_>) -> bool {
        // a new core must use a pair first covered by the candidate
        let n = ctx.n as usize;
        let mut rows = vec![0u64; n];
        for e in ctx.edges {
            let vs = e.vertices();
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    rows[vs[i] as usize] |= 1 << vs[j];
                    rows[vs[j] as usize] |= 1 << vs[i];
                }
            }
        }
        let cand = ctx.cand.vertices();
        let mut fresh_pairs = Vec::new();
        for i in 0..cand.len() {
            for j in (i + 1)..cand.len() {
                if rows[cand[i] as usize] & (1 << cand[j]) == 0 {
                    fresh_pairs.push((cand[i], cand[j]));
                }
            }
        }
        if fresh_pairs.is_empty() {
            return true; // co-occurrence unchanged
        }
        for i in 0..cand.len() {
            for j in (i + 1)..cand.len() {
                rows[cand[i] as usize] |= 1 << cand[j];
                rows[cand[j] as usize] |= 1 << cand[i];
            }
        }
        let want = self.l as usize + 1;
        !fresh_pairs
            .iter()
            .any(|&pair| kfamily::clique_through_pair(&rows, pair, want))
    }
}

struct FanoFree;

impl Constraint for FanoFree {
    fn describe(&self) -> String {
        "fano".into()
    }

    fn permits(&self, h: &Hypergraph) -> bool {
        contains_fano(h).expect("r validated at build").is_none()
    }

    fn violation(&self, h: &Hypergraph) -> Option<Witness> {
        contains_fano(h).expect("r validated at build")
    }

    fn permits_extension(&self, ctx: &ExtensionCtx<'_>) -> bool {
        if ctx.n < 7 || ctx.edges.len() + 1 < 7 {
            return true;
        }
        // a new copy must use the candidate as one of its lines
        let (h, idx) = ctx.as_hypergraph_with_cand();
        contains_fano_using(&h, idx)
            .expect("r validated at build")
            .is_none()
    }
}

struct ExpansionFree {
    l: u64,
}

impl Constraint for ExpansionFree {
    fn describe(&self) -> String {
        format!("expansion={}", self.l)
    }

    fn permits(&self, h: &Hypergraph) -> bool {
        contains_expansion(h, self.l)
            .expect("l validated at build")
            .is_none()
    }

    fn violation(&self, h: &Hypergraph) -> Option<Witness> {
        contains_expansion(h, self.l).expect("l validated at build")
    }

    fn permits_extension(&self, ctx: &ExtensionCtx<'_>) -> bool {
        let (h, _) = ctx.as_hypergraph_with_cand();
        self.permits(&h)
    }
}

struct BergeFree {
    pattern: PatternGraph,
}

impl Constraint for BergeFree {
    fn describe(&self) -> String {
        format!("berge={}", self.pattern)
    }

    fn permits(&self, h: &Hypergraph) -> bool {
        contains_berge(h, &self.pattern).is_none()
    }

    fn violation(&self, h: &Hypergraph) -> Option<Witness> {
        contains_berge(h, &self.pattern)
    }

    fn permits_extension(&self, ctx: &ExtensionCtx<'_>) -> bool {
        let (h, _) = ctx.as_hypergraph_with_cand();
        self.permits(&h)
    }
}

struct MatchingAtMost {
    s: u64,
}

impl Constraint for MatchingAtMost {
    fn describe(&self) -> String {
        format!("matching-atmost={}", self.s)
    }

    fn permits(&self, h: &Hypergraph) -> bool {
        let cap = usize::try_from(self.s).unwrap_or(usize::MAX);
        matching_number(h, Some(cap)).size as u64 <= self.s
    }

    fn violation(&self, h: &Hypergraph) -> Option<Witness> {
        let cap = usize::try_from(self.s).unwrap_or(usize::MAX);
        let out = matching_number(h, Some(cap));
        if out.size as u64 > self.s {
            Some(Witness::Matching { edges: out.witness })
        } else {
            None
        }
    }

    fn permits_extension(&self, ctx: &ExtensionCtx<'_>) -> bool {
        // the matching number can only grow through matchings using the
        // candidate: look for s disjoint edges avoiding it
        let Ok(s) = usize::try_from(self.s) else {
            return true;
        };
        let avoiding: Vec<u64> = ctx
            .masks
            .iter()
            .copied()
            .filter(|m| m & ctx.cand_mask == 0)
            .collect();
        !has_disjoint_edges(&avoiding, ctx.r as usize, s)
    }
}

/// Arguments a named check may consume.
#[derive(Debug, Clone, Default)]
pub struct CheckArgs {
    pub l: Option<u64>,
    pub s: Option<u64>,
    pub set: Option<BTreeSet<u32>>,
    pub pattern: Option<String>,
}

impl CheckArgs {
    fn need_l(&self, check: &'static str) -> Result<u64, DetectError> {
        self.l.ok_or(DetectError::MissingArg { check, arg: "l" })
    }

    fn need_s(&self, check: &'static str) -> Result<u64, DetectError> {
        self.s.ok_or(DetectError::MissingArg { check, arg: "s" })
    }

    fn need_set(&self, check: &'static str) -> Result<&BTreeSet<u32>, DetectError> {
        self.set
            .as_ref()
            .ok_or(DetectError::MissingArg { check, arg: "set" })
    }

    fn need_pattern(&self, check: &'static str) -> Result<PatternGraph, DetectError> {
        self.pattern
            .as_deref()
            .ok_or(DetectError::MissingArg {
                check,
                arg: "pattern",
            })?
            .parse()
    }
}

/// Outcome of a named check. `holds` is the detector's raw boolean
/// (presence for forbidden structures, truth for predicates), while
/// `passed` is the scripting-facing verdict (freeness, or the predicate
/// holding) that drives the process exit code.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Artifact version, echoed for reproducibility.
    pub version: String,
    pub constraint: String,
    pub holds: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_number: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors_used: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<String>,
}

impl CheckReport {
    fn bare(
        constraint: String,
        holds: bool,
        passed: bool,
        witness: Option<Witness>,
    ) -> CheckReport {
        CheckReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            constraint,
            holds,
            passed,
            witness,
            matching_number: None,
            colors_used: None,
            color_bound: None,
            coloring: None,
            vertices: None,
            threshold: None,
        }
    }
}

/// One named check, selectable at runtime.
pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, h: &Hypergraph, args: &CheckArgs) -> Result<CheckReport, DetectError>;
}

macro_rules! forbidden_check {
    ($ty:ident, $name:literal, |$h:ident, $args:ident| $spec:expr) => {
        struct $ty;
        impl Check for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn run(&self, $h: &Hypergraph, $args: &CheckArgs) -> Result<CheckReport, DetectError> {
                let spec: ConstraintSpec = $spec;
                let constraint = spec.build($h.r())?;
                let witness = constraint.violation($h);
                let holds = witness.is_some();
                Ok(CheckReport::bare(spec.describe(), holds, !holds, witness))
            }
        }
    };
}

forbidden_check!(KFamilyCheck, "k-family", |h, args| {
    ConstraintSpec::KFamily {
        l: args.need_l("k-family")?,
    }
});
forbidden_check!(FanoCheck, "fano", |h, _args| ConstraintSpec::Fano);
forbidden_check!(ExpansionCheck, "expansion", |h, args| {
    ConstraintSpec::Expansion {
        l: args.need_l("expansion")?,
    }
});
forbidden_check!(BergeCheck, "berge", |h, args| ConstraintSpec::Berge {
    pattern: args.need_pattern("berge")?
});

struct MatchingAtMostCheck;

impl Check for MatchingAtMostCheck {
    fn name(&self) -> &'static str {
        "matching-atmost"
    }

    fn run(&self, h: &Hypergraph, args: &CheckArgs) -> Result<CheckReport, DetectError> {
        let s = args.need_s("matching-atmost")?;
        let out = matching_number(h, None);
        let holds = out.size as u64 > s;
        let witness = holds.then(|| Witness::Matching {
            edges: out.witness.iter().copied().take(s as usize + 1).collect(),
        });
        let mut report = CheckReport::bare(format!("matching-atmost={s}"), holds, !holds, witness);
        report.matching_number = Some(out.size as u64);
        Ok(report)
    }
}

struct WeakIndepCheck;

impl Check for WeakIndepCheck {
    fn name(&self) -> &'static str {
        "weak-indep"
    }

    fn run(&self, h: &Hypergraph, args: &CheckArgs) -> Result<CheckReport, DetectError> {
        let set = args.need_set("weak-indep")?;
        let (ok, witness) = is_weakly_independent(h, set);
        Ok(CheckReport::bare("weak-indep".into(), ok, ok, witness))
    }
}

struct StrongIndepCheck;

impl Check for StrongIndepCheck {
    fn name(&self) -> &'static str {
        "strong-indep"
    }

    fn run(&self, h: &Hypergraph, args: &CheckArgs) -> Result<CheckReport, DetectError> {
        let set = args.need_set("strong-indep")?;
        let (ok, witness) = is_strongly_independent(h, set);
        Ok(CheckReport::bare("strong-indep".into(), ok, ok, witness))
    }
}

struct EdgeColoringCheck;

impl Check for EdgeColoringCheck {
    fn name(&self) -> &'static str {
        "edge-coloring"
    }

    fn run(&self, h: &Hypergraph, _args: &CheckArgs) -> Result<CheckReport, DetectError> {
        let coloring = greedy_edge_coloring(h);
        let ok = coloring.is_proper(h) && coloring.color_count <= coloring.bound;
        let mut report = CheckReport::bare("edge-coloring".into(), ok, ok, None);
        report.colors_used = Some(coloring.color_count as u64);
        report.color_bound = Some(coloring.bound as u64);
        report.coloring = Some(coloring.colors.iter().map(|&c| c as u64).collect());
        Ok(report)
    }
}

struct HighDegreeCheck;

impl Check for HighDegreeCheck {
    fn name(&self) -> &'static str {
        "high-degree"
    }

    fn run(&self, h: &Hypergraph, args: &CheckArgs) -> Result<CheckReport, DetectError> {
        let s = args.need_s("high-degree")?;
        let (vertices, threshold) = high_degree_vertices(h, s);
        let ok = vertices.len() as u64 <= s;
        let mut report = CheckReport::bare(format!("high-degree s={s}"), ok, ok, None);
        report.threshold = Some(threshold.to_string());
        report.vertices = Some(vertices);
        Ok(report)
    }
}

/// Name-keyed registry of every check the artifact exposes.
pub struct CheckRegistry {
    by_name: BTreeMap<&'static str, Box<dyn Check>>,
}

impl Default for CheckRegistry {
    fn default() -> Self {
        let mut by_name: BTreeMap<&'static str, Box<dyn Check>> = BTreeMap::new();
        for c in [
            Box::new(KFamilyCheck) as Box<dyn Check>,
            Box::new(FanoCheck),
            Box::new(ExpansionCheck),
            Box::new(BergeCheck),
            Box::new(MatchingAtMostCheck),
            Box::new(WeakIndepCheck),
            Box::new(StrongIndepCheck),
            Box::new(EdgeColoringCheck),
            Box::new(HighDegreeCheck),
        ] {
            by_name.insert(c.name(), c);
        }
        CheckRegistry { by_name }
    }
}

impl CheckRegistry {
    pub fn get(&self, name: &str) -> Result<&dyn Check, DetectError> {
        self.by_name
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| DetectError::UnknownCheck(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.by_name.keys().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn constraint_specs_parse_and_describe() {
        assert_eq!(
            ConstraintSpec::parse("k-family=3").unwrap(),
            ConstraintSpec::KFamily { l: 3 }
        );
        assert_eq!(ConstraintSpec::parse("fano").unwrap(), ConstraintSpec::Fano);
        assert_eq!(
            ConstraintSpec::parse("matching-atmost=2").unwrap(),
            ConstraintSpec::MatchingAtMost { s: 2 }
        );
        assert!(matches!(
            ConstraintSpec::parse("berge=k4").unwrap(),
            ConstraintSpec::Berge { .. }
        ));
        assert!(ConstraintSpec::parse("fano=1").is_err());
        assert!(ConstraintSpec::parse("k-family").is_err());
        assert!(ConstraintSpec::parse("nope=1").is_err());
        assert_eq!(
            ConstraintSpec::parse("expansion=4").unwrap().describe(),
            "expansion=4"
        );
    }

    #[test]
    fn build_validates_uniformity() {
        assert!(ConstraintSpec::KFamily { l: 2 }.build(3).is_err());
        assert!(ConstraintSpec::KFamily { l: 3 }.build(3).is_ok());
        assert!(ConstraintSpec::Fano.build(2).is_err());
        assert!(ConstraintSpec::Expansion { l: 2 }.build(3).is_err());
    }

    #[test]
    fn constraints_agree_with_detectors_on_named_cases() {
        let fano = constructions::fano_plane();
        let free = ConstraintSpec::MatchingAtMost { s: 1 }.build(3).unwrap();
        assert!(free.permits(&fano));
        let tight = ConstraintSpec::MatchingAtMost { s: 0 }.build(3).unwrap();
        assert!(!tight.permits(&fano));
        let w = tight.violation(&fano).unwrap();
        assert!(w.validates_matching(&fano));

        let g = constructions::main_extremal(12, 3, 2, 3)
            .unwrap()
            .hypergraph;
        let kfree = ConstraintSpec::KFamily { l: 3 }.build(3).unwrap();
        assert!(kfree.permits(&g));
        let k5 = constructions::complete_r_graph(5, 3).unwrap();
        assert!(!kfree.permits(&k5));
        let w = kfree.violation(&k5).unwrap();
        assert!(w.validates_k_family(&k5, 3));
    }

    #[test]
    fn incremental_checks_match_full_checks() {
        // adding each edge of the complete 3-graph one by one: the
        // incremental verdict must match a full recheck at every step
        let k6 = constructions::complete_r_graph(6, 3).unwrap();
        let specs = [
            ConstraintSpec::KFamily { l: 3 },
            ConstraintSpec::MatchingAtMost { s: 1 },
            ConstraintSpec::Fano,
            ConstraintSpec::Expansion { l: 3 },
            ConstraintSpec::Berge {
                pattern: PatternGraph::complete(4),
            },
        ];
        for spec in specs {
            let constraint = spec.build(3).unwrap();
            let mut chosen: Vec<crate::hypergraph::Edge> = Vec::new();
            let mut masks: Vec<u64> = Vec::new();
            for e in k6.edges() {
                let ctx = ExtensionCtx {
                    n: 6,
                    r: 3,
                    edges: &chosen,
                    masks: &masks,
                    cand: e,
                    cand_mask: e.mask(),
                };
                let incremental = constraint.permits_extension(&ctx);
                let mut trial: Vec<Vec<u32>> =
                    chosen.iter().map(|c| c.vertices().to_vec()).collect();
                trial.push(e.vertices().to_vec());
                let full = constraint.permits(&Hypergraph::from_edges(6, 3, trial).unwrap());
                assert_eq!(incremental, full, "spec {:?} at edge {:?}", spec, e);
                if incremental {
                    chosen.push(e.clone());
                    masks.push(e.mask());
                }
            }
        }
    }

    #[test]
    fn check_registry_covers_all_names() {
        let reg = CheckRegistry::default();
        let names: Vec<&str> = reg.names().collect();
        assert_eq!(
            names,
            vec![
                "berge",
                "edge-coloring",
                "expansion",
                "fano",
                "high-degree",
                "k-family",
                "matching-atmost",
                "strong-indep",
                "weak-indep"
            ]
        );
        assert!(reg.get("nope").is_err());
    }

    #[test]
    fn check_reports_have_the_documented_polarity() {
        let reg = CheckRegistry::default();
        let g = constructions::main_extremal(12, 3, 2, 3)
            .unwrap()
            .hypergraph;

        // free hypergraph: structure absent, check passes
        let rep = reg
            .get("k-family")
            .unwrap()
            .run(
                &g,
                &CheckArgs {
                    l: Some(3),
                    ..Default::default()
                },
            )
            .unwrap();
        assert!(!rep.holds && rep.passed);

        let rep = reg
            .get("matching-atmost")
            .unwrap()
            .run(
                &g,
                &CheckArgs {
                    s: Some(1),
                    ..Default::default()
                },
            )
            .unwrap();
        assert!(rep.holds && !rep.passed);
        assert_eq!(rep.matching_number, Some(2));

        let set: BTreeSet<u32> = [0, 1].into();
        let rep = reg
            .get("strong-indep")
            .unwrap()
            .run(
                &g,
                &CheckArgs {
                    set: Some(set),
                    ..Default::default()
                },
            )
            .unwrap();
        assert!(rep.holds && rep.passed);

        assert!(matches!(
            reg.get("weak-indep")
                .unwrap()
                .run(&g, &CheckArgs::default()),
            Err(DetectError::MissingArg {
                check: "weak-indep",
                arg: "set"
            })
        ));
    }
}
