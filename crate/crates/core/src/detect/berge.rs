//! Berge copies of a pattern graph.
//!
//! A Berge copy of G assigns host vertices to V(G) injectively and a
//! distinct host edge to every edge of G, each containing its endpoint
//! images. The vertex map is found by backtracking; the edge assignment is
//! a system of distinct representatives, decided by bipartite augmenting
//! paths after every vertex placement, which prunes dead branches early.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::detect::{DetectError, Witness};
use crate::hypergraph::{CoOccurrenceGraph, Hypergraph};

/// A small simple graph used as a Berge pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternGraph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl PatternGraph {
    pub fn new(
        n: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<PatternGraph, DetectError> {
        let mut es: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        es.sort_unstable();
        es.dedup();
        if es.iter().any(|&(a, b)| a == b || b >= n) {
            return Err(DetectError::BadPattern(
                "loops or out-of-range endpoints".into(),
            ));
        }
        Ok(PatternGraph { n, edges: es })
    }

    pub fn complete(t: u32) -> PatternGraph {
        let edges = (0..t).flat_map(|a| ((a + 1)..t).map(move |b| (a, b)));
        PatternGraph::new(t, edges).expect("complete pattern is valid")
    }

    /// Path with `k` edges on `k + 1` vertices.
    pub fn path(k: u32) -> PatternGraph {
        PatternGraph::new(k + 1, (0..k).map(|i| (i, i + 1))).expect("path pattern is valid")
    }

    /// Cycle on `k >= 3` vertices.
    pub fn cycle(k: u32) -> Result<PatternGraph, DetectError> {
        if k < 3 {
            return Err(DetectError::BadPattern(format!(
                "cycle needs at least 3 vertices, got {k}"
            )));
        }
        PatternGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }
}

impl FromStr for PatternGraph {
    type Err = DetectError;

    /// `k<t>` complete graph, `p<k>` path with k edges, `c<k>` cycle on k
    /// vertices.
    fn from_str(s: &str) -> Result<PatternGraph, DetectError> {
        let bad =
            || DetectError::BadPattern(format!("unknown pattern `{s}` (want k<t>, p<k> or c<k>)"));
        let (kind, num) = s.split_at(1.min(s.len()));
        let num: u32 = num.parse().map_err(|_| bad())?;
        match kind {
            "k" => Ok(PatternGraph::complete(num)),
            "p" => Ok(PatternGraph::path(num)),
            "c" => PatternGraph::cycle(num),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // recover the short name for the shapes the parser accepts
        if *self == PatternGraph::complete(self.n) {
            return write!(f, "k{}", self.n);
        }
        if self.n >= 1 && *self == PatternGraph::path(self.n - 1) {
            return write!(f, "p{}", self.n - 1);
        }
        if let Ok(cycle) = PatternGraph::cycle(self.n) {
            if *self == cycle {
                return write!(f, "c{}", self.n);
            }
        }
        write!(f, "pattern(n={}, m={})", self.n, self.edges.len())
    }
}

pub fn contains_berge(h: &Hypergraph, pattern: &PatternGraph) -> Option<Witness> {
    if pattern.edges.is_empty() {
        // an edgeless pattern just needs enough vertices
        return if pattern.n <= h.n() {
            Some(Witness::Embedding {
                vertex_map: (0..pattern.n).collect(),
                edge_map: Vec::new(),
            })
        } else {
            None
        };
    }
    if pattern.n > h.n() || pattern.edges.len() > h.edge_count() {
        return None;
    }
    let co = h.co_occurrence();
    let mut images: Vec<u32> = Vec::with_capacity(pattern.n as usize);
    let mut used = vec![false; h.n() as usize];
    let vertex_map = place(h, &co, pattern, &mut images, &mut used)?;
    let edge_map = representatives(h, pattern, &vertex_map).expect("checked during placement");
    Some(Witness::Embedding {
        vertex_map,
        edge_map,
    })
}

fn place(
    h: &Hypergraph,
    co: &CoOccurrenceGraph,
    pattern: &PatternGraph,
    images: &mut Vec<u32>,
    used: &mut [bool],
) -> Option<Vec<u32>> {
    let k = images.len();
    if k == pattern.n as usize {
        return Some(images.clone());
    }
    'host: for v in 0..h.n() {
        if used[v as usize] {
            continue;
        }
        // pattern neighbours already placed must co-occur with v
        for &(a, b) in &pattern.edges {
            let (placed, fresh) = (a.min(b), a.max(b));
            if fresh as usize == k
                && (placed as usize) < k
                && !co.adjacent(images[placed as usize], v)
            {
                continue 'host;
            }
        }
        images.push(v);
        if representatives(h, pattern, images).is_some() {
            used[v as usize] = true;
            if let Some(found) = place(h, co, pattern, images, used) {
                return Some(found);
            }
            used[v as usize] = false;
        }
        images.pop();
    }
    None
}

/// Distinct host edges for every pattern edge with both endpoints placed;
/// None when no system of distinct representatives exists. Kuhn's
/// augmenting-path matching over the candidate lists.
fn representatives(h: &Hypergraph, pattern: &PatternGraph, images: &[u32]) -> Option<Vec<usize>> {
    let placed_edges: Vec<(u32, u32)> = pattern
        .edges
        .iter()
        .copied()
        .filter(|&(a, b)| (a as usize) < images.len() && (b as usize) < images.len())
        .collect();
    let candidates: Vec<Vec<usize>> = placed_edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (images[a as usize], images[b as usize]);
            h.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(x) && e.contains(y))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut owner: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for p in 0..candidates.len() {
        let mut visited = vec![false; candidates.len()];
        if !augment(p, &candidates, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut assignment = vec![usize::MAX; candidates.len()];
    for (&host, &p) in &owner {
        assignment[p] = host;
    }
    Some(assignment)
}

fn augment(
    p: usize,
    candidates: &[Vec<usize>],
    owner: &mut std::collections::BTreeMap<usize, usize>,
    visited: &mut [bool],
) -> bool {
    for &host in &candidates[p] {
        match owner.get(&host).copied() {
            None => {
                owner.insert(host, p);
                return true;
            }
            Some(other) => {
                if !visited[other] {
                    visited[other] = true;
                    if augment(other, candidates, owner, visited) {
                        owner.insert(host, p);
                        return true;
                    }
                }
            }
        }
    }
    false
}
