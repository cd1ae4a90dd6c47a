//! Exhaustive search for the maximum edge count under downward-closed
//! constraints.
//!
//! Depth-first include/exclude over the lexicographically ordered candidate
//! edges. Inclusion runs each constraint's incremental check; exclusion is
//! always safe by downward closure. Two prunes: the counting bound
//! (current + remaining cannot beat the incumbent) and an optional
//! symmetry restriction forcing the first included edge to be the least
//! r-set, sound because constraints are label-invariant and every nonempty
//! hypergraph has a relabeling whose least edge is exactly that.
//!
//! The tree is split at a fixed shallow depth into independent branches
//! which workers may process in parallel. Branches never share incumbents
//! and results merge in branch order, so the outcome is identical for any
//! worker count, including one.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use itertools::Itertools;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::canon::canonical_form_with_cap;
use crate::detect::{Constraint, ExtensionCtx};
use crate::formulas::binomial;
use crate::hypergraph::{Edge, Hypergraph};
use crate::search::{SearchError, SearchProblem, SearchResult};

const SPLIT_DEPTH: usize = 4;

pub fn exact_max_edges(problem: &SearchProblem) -> Result<SearchResult, SearchError> {
    run(problem, false)
}

/// Exact search that also collects every optimum hypergraph, one
/// representative per isomorphism class when reduction is on.
pub fn enumerate_extremal(problem: &SearchProblem) -> Result<SearchResult, SearchError> {
    run(problem, true)
}

struct Shared<'a> {
    candidates: Vec<Edge>,
    masks: Vec<u64>,
    constraints: Vec<Box<dyn Constraint>>,
    n: u32,
    r: u32,
    enumerate: bool,
    symmetry: bool,
    init_best: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: &'a AtomicU64,
}

#[derive(Clone)]
struct BranchResult {
    best: u64,
    witness: Option<Vec<usize>>,
    collected: Vec<Vec<usize>>,
    exhausted: bool,
}

struct Walker<'a> {
    shared: &'a Shared<'a>,
    chosen: Vec<usize>,
    chosen_edges: Vec<Edge>,
    chosen_masks: Vec<u64>,
    out: BranchResult,
}

fn run(problem: &SearchProblem, enumerate: bool) -> Result<SearchResult, SearchError> {
    let started = Instant::now();
    let (n, r) = (problem.n, problem.r);
    if n > 64 {
        return Err(SearchError::UniverseTooLarge { n });
    }
    let cand_count = binomial(n as u64, r as u64).to_u64().unwrap_or(u64::MAX);
    if cand_count > problem.budget.candidate_cap {
        return Err(SearchError::TooManyCandidates {
            candidates: cand_count,
            cap: problem.budget.candidate_cap,
        });
    }
    let constraints: Vec<Box<dyn Constraint>> = problem
        .constraints
        .iter()
        .map(|spec| spec.build(r))
        .collect::<Result<_, _>>()?;

    let empty = Hypergraph::empty(n, r).expect("r >= 1");
    for c in &constraints {
        if !c.permits(&empty) {
            return Err(SearchError::InfeasibleProblem(c.describe()));
        }
    }

    // the incumbent starts at the seed (or the edgeless hypergraph), so a
    // witness at the incumbent count always exists and the counting prune
    // may discard equal completions in optimum mode
    let mut init_best = 0u64;
    let mut seed_witness = empty;
    if let Some(seed) = &problem.seed {
        if seed.n() != n || seed.r() != r {
            return Err(SearchError::SeedShape {
                seed_n: seed.n(),
                seed_r: seed.r(),
                n,
                r,
            });
        }
        for c in &constraints {
            if !c.permits(seed) {
                return Err(SearchError::InfeasibleSeed(c.describe()));
            }
        }
        init_best = seed.edge_count() as u64;
        seed_witness = seed.clone();
    }

    let candidates: Vec<Edge> = (0..n)
        .combinations(r as usize)
        .map(|vs| Edge::new(vs).expect("combinations are valid edges"))
        .collect();
    let masks: Vec<u64> = candidates.iter().map(Edge::mask).collect();

    // full labeled enumeration must not lose relabelings to the symmetry cut
    let symmetry = problem.symmetry_restrict && !(enumerate && !problem.isomorph_reduce);

    let nodes = AtomicU64::new(0);
    let shared = Shared {
        candidates,
        masks,
        constraints,
        n,
        r,
        enumerate,
        symmetry,
        init_best,
        node_limit: problem.budget.node_limit,
        deadline: problem.budget.time_limit.map(|t| started + t),
        nodes: &nodes,
    };

    // fixed shallow split: identical branch list for any worker count
    let depth = SPLIT_DEPTH.min(shared.candidates.len());
    let mut prefixes = Vec::new();
    expand_prefixes(&shared, 0, depth, &mut Vec::new(), &mut prefixes);

    let branch_results: Vec<BranchResult> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut walker = Walker::new(&shared, prefix);
            walker.dfs(depth);
            walker.out
        })
        .collect();

    let mut best = init_best;
    let mut witness_indices: Option<Vec<usize>> = None;
    let mut exhausted = false;
    let mut collected: Vec<Vec<usize>> = Vec::new();
    for b in &branch_results {
        exhausted |= b.exhausted;
        if b.best > best {
            best = b.best;
            witness_indices = b.witness.clone();
            collected.clear();
        }
        if b.best == best {
            if enumerate {
                collected.extend(b.collected.iter().cloned());
            } else if let Some(w) = &b.witness {
                let replace = match &witness_indices {
                    None => false, // the seed holds its tie
                    Some(cur) => tie_break(&shared, w, cur, problem.budget.canon_cap),
                };
                if replace {
                    witness_indices = Some(w.clone());
                }
            }
        }
    }

    let to_hypergraph = |indices: &[usize]| {
        Hypergraph::from_edges(
            n,
            r,
            indices
                .iter()
                .map(|&i| shared.candidates[i].vertices().to_vec()),
        )
        .expect("chosen edges are valid")
    };

    let mut witnesses: Vec<Hypergraph> = if enumerate {
        // the seed's own edge set, when optimal, is one of the collected
        // completions, so no special casing is needed here
        collected.iter().map(|ids| to_hypergraph(ids)).collect()
    } else {
        match &witness_indices {
            Some(ids) => vec![to_hypergraph(ids)],
            None => vec![seed_witness.clone()],
        }
    };

    if enumerate && problem.isomorph_reduce {
        let mut seen = std::collections::BTreeSet::new();
        let mut reduced = Vec::new();
        for w in witnesses {
            let form = canonical_form_with_cap(&w, problem.budget.canon_cap)?;
            if seen.insert(form) {
                reduced.push(w);
            }
        }
        witnesses = reduced;
    }
    witnesses.sort_by(|a, b| a.edges().cmp(b.edges()));
    for w in &witnesses {
        w.validate().expect("witnesses are structurally sound");
        for c in &shared.constraints {
            assert!(
                c.permits(w),
                "emitted witness must satisfy {}",
                c.describe()
            );
        }
    }

    Ok(SearchResult {
        optimum: best,
        proof_of_optimality: !exhausted,
        witnesses,
        nodes_explored: nodes.load(Ordering::Relaxed),
        elapsed: started.elapsed(),
        rng_seed: None,
        budget_exhausted: exhausted,
    })
}

/// Smaller canonical form (or edge list, past the canon cap) wins ties.
fn tie_break(shared: &Shared, a: &[usize], b: &[usize], canon_cap: u32) -> bool {
    let to_h = |ids: &[usize]| {
        Hypergraph::from_edges(
            shared.n,
            shared.r,
            ids.iter()
                .map(|&i| shared.candidates[i].vertices().to_vec()),
        )
        .expect("valid")
    };
    let (ha, hb) = (to_h(a), to_h(b));
    match (
        canonical_form_with_cap(&ha, canon_cap),
        canonical_form_with_cap(&hb, canon_cap),
    ) {
        (Ok(ca), Ok(cb)) => ca < cb,
        _ => ha.edges() < hb.edges(),
    }
}

/// Expands the include/exclude tree to `depth`, keeping only feasible
/// include steps. Each surviving prefix becomes an independent branch.
fn expand_prefixes(
    shared: &Shared,
    i: usize,
    depth: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == depth {
        out.push(chosen.clone());
        return;
    }
    let walker = Walker::new(shared, chosen);
    if walker.may_include(i) {
        chosen.push(i);
        expand_prefixes(shared, i + 1, depth, chosen, out);
        chosen.pop();
    }
    expand_prefixes(shared, i + 1, depth, chosen, out);
}

impl<'a> Walker<'a> {
    fn new(shared: &'a Shared<'a>, prefix: &[usize]) -> Walker<'a> {
        let chosen_edges: Vec<Edge> = prefix
            .iter()
            .map(|&i| shared.candidates[i].clone())
            .collect();
        let chosen_masks: Vec<u64> = prefix.iter().map(|&i| shared.masks[i]).collect();
        let best = (prefix.len() as u64).max(shared.init_best);
        let witness = if prefix.len() as u64 > shared.init_best {
            Some(prefix.to_vec())
        } else {
            None
        };
        Walker {
            shared,
            chosen: prefix.to_vec(),
            chosen_edges,
            chosen_masks,
            out: BranchResult {
                best,
                witness,
                collected: Vec::new(),
                exhausted: false,
            },
        }
    }

    fn may_include(&self, i: usize) -> bool {
        if self.shared.symmetry && self.chosen.is_empty() && i > 0 {
            return false;
        }
        let ctx = ExtensionCtx {
            n: self.shared.n,
            r: self.shared.r,
            edges: &self.chosen_edges,
            masks: &self.chosen_masks,
            cand: &self.shared.candidates[i],
            cand_mask: self.shared.masks[i],
        };
        self.shared
            .constraints
            .iter()
            .all(|c| c.permits_extension(&ctx))
    }

    fn over_budget(&self) -> bool {
        if let Some(limit) = self.shared.node_limit {
            if self.shared.nodes.load(Ordering::Relaxed) > limit {
                return true;
            }
        }
        if let Some(deadline) = self.shared.deadline {
            if Instant::now() > deadline {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, i: usize) {
        self.shared.nodes.fetch_add(1, Ordering::Relaxed);
        if self.over_budget() {
            self.out.exhausted = true;
            return;
        }
        let m = self.shared.candidates.len();
        let cur = self.chosen.len() as u64;
        if i == m {
            if self.shared.enumerate && cur >= self.out.best {
                if cur > self.out.best {
                    self.out.best = cur;
                    self.out.collected.clear();
                }
                self.out.collected.push(self.chosen.clone());
            }
            return;
        }
        let remaining = (m - i) as u64;
        if self.shared.enumerate {
            if cur + remaining < self.out.best {
                return;
            }
        } else if cur + remaining <= self.out.best {
            return;
        }

        if self.may_include(i) {
            self.chosen.push(i);
            self.chosen_edges.push(self.shared.candidates[i].clone());
            self.chosen_masks.push(self.shared.masks[i]);
            if !self.shared.enumerate && cur + 1 > self.out.best {
                self.out.best = cur + 1;
                self.out.witness = Some(self.chosen.clone());
            }
            self.dfs(i + 1);
            self.chosen.pop();
            self.chosen_edges.pop();
            self.chosen_masks.pop();
            if self.out.exhausted {
                return;
            }
        }
        self.dfs(i + 1);
    }
}
